/*
Copyright 2026 The maslov-holonomy Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "runner.hpp"

#include "maslov/batch.hpp"
#include "maslov/error.hpp"
#include "maslov/geometry.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace maslov::cli {

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Schema, where + ": " + what);
}

std::string child(const std::string& where, const std::string& key) { return where + "." + key; }
std::string child(const std::string& where, size_t i) { return where + "[" + std::to_string(i) + "]"; }

void allow_only(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) schema_fail(where, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : keys) ok = ok || k == a;
    if (!ok) schema_fail(child(where, k), "unknown field");
  }
}

const json& require(const json& j, const std::string& where, const char* key) {
  if (!j.contains(key)) schema_fail(child(where, key), "missing required field");
  return j.at(key);
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) schema_fail(where, "expected a number");
  return j.get<double>();
}

long long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_fail(where, "expected an integer");
  return j.get<long long>();
}

std::string string(const json& j, const std::string& where) {
  if (!j.is_string()) schema_fail(where, "expected a string");
  return j.get<std::string>();
}

bool boolean(const json& j, const std::string& where) {
  if (!j.is_boolean()) schema_fail(where, "expected true or false");
  return j.get<bool>();
}

int positive(const json& j, const std::string& where, long long max = 1000000) {
  const long long v = integer(j, where);
  if (v < 1 || v > max) schema_fail(where, "out of range");
  return static_cast<int>(v);
}

Vec vector(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) schema_fail(where, "expected a non-empty array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], child(where, i));
  return v;
}

Mat matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) schema_fail(where, "expected a row-major array of rows");
  const size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) schema_fail(child(where, 0), "expected a non-empty row");
  Mat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (size_t r = 0; r < j.size(); ++r) {
    const Vec row = vector(j[r], child(where, r));
    if (static_cast<size_t>(row.size()) != cols) schema_fail(child(where, r), "rows differ in length");
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------

struct Context {
  Tolerances tol;
  std::uint64_t seed = 1;
  int refine_max = kDefaultRefineMax;
  std::string profile;
};

Tolerances parse_tolerances(const json& spec, const Options& opt) {
  Tolerances tol;
  if (spec.contains("tolerances")) {
    const std::string w = "$.tolerances";
    const json& t = spec.at("tolerances");
    allow_only(t, w, {"residual_tol", "rank_tol", "phase_tol"});
    if (t.contains("residual_tol")) tol.residual_tol = number(t["residual_tol"], child(w, "residual_tol"));
    if (t.contains("rank_tol")) tol.rank_tol = number(t["rank_tol"], child(w, "rank_tol"));
    if (t.contains("phase_tol")) tol.phase_tol = number(t["phase_tol"], child(w, "phase_tol"));
  }
  if (opt.tol_phase) tol.phase_tol = *opt.tol_phase;
  try {
    tol.validate(6);
  } catch (const Error& e) {
    schema_fail("$.tolerances", e.what());
  }
  return tol;
}

ChartPtr parse_chart(const json& j, const std::string& w) {
  allow_only(j, w, {"name", "params"});
  const std::string name = string(require(j, w, "name"), child(w, "name"));
  const json params = j.value("params", json::object());
  const std::string pw = child(w, "params");
  try {
    if (name == "circle") {
      allow_only(params, pw, {"r"});
      return circle_chart(params.contains("r") ? number(params["r"], child(pw, "r")) : 1.0);
    }
    if (name == "product_torus") {
      allow_only(params, pw, {"radii"});
      const Vec r = vector(require(params, pw, "radii"), child(pw, "radii"));
      return product_torus_chart(std::vector<double>(r.data(), r.data() + r.size()));
    }
    if (name == "flat_plane") {
      allow_only(params, pw, {"n"});
      return flat_plane_chart(params.contains("n") ? positive(params["n"], child(pw, "n"), 3) : 1);
    }
    if (name == "gradient_graph") {
      allow_only(params, pw, {"potential"});
      const json& terms = require(params, pw, "potential");
      const std::string tw = child(pw, "potential");
      if (!terms.is_array() || terms.empty()) schema_fail(tw, "expected a non-empty array of terms");
      std::optional<Polynomial> phi;
      for (size_t i = 0; i < terms.size(); ++i) {
        const std::string iw = child(tw, i);
        allow_only(terms[i], iw, {"coef", "exponent"});
        const double coef = number(require(terms[i], iw, "coef"), child(iw, "coef"));
        const json& ej = require(terms[i], iw, "exponent");
        if (!ej.is_array() || ej.empty() || ej.size() > 3) schema_fail(child(iw, "exponent"), "expected 1 to 3 exponents");
        Polynomial::Exponent e;
        for (size_t k = 0; k < ej.size(); ++k) {
          const long long v = integer(ej[k], child(child(iw, "exponent"), k));
          if (v < 0 || v > 8) schema_fail(child(child(iw, "exponent"), k), "exponent out of range");
          e.push_back(static_cast<int>(v));
        }
        if (!phi) phi = Polynomial(static_cast<int>(e.size()));
        if (phi->n() != static_cast<int>(e.size())) schema_fail(child(iw, "exponent"), "terms use different dimensions");
        *phi += Polynomial::monomial(e, coef);
      }
      return gradient_graph_chart(*phi);
    }
    if (name == "custom") {
      allow_only(params, pw, {"n", "coordinates"});
      const int n = positive(require(params, pw, "n"), child(pw, "n"), 3);
      const json& coords = require(params, pw, "coordinates");
      const std::string cw = child(pw, "coordinates");
      if (!coords.is_array() || static_cast<int>(coords.size()) != 2 * n) schema_fail(cw, "expected 2n coordinate expressions");
      std::vector<std::vector<ChartTerm>> out;
      for (size_t i = 0; i < coords.size(); ++i) {
        const std::string iw = child(cw, i);
        if (!coords[i].is_array()) schema_fail(iw, "expected an array of terms");
        std::vector<ChartTerm> terms;
        for (size_t k = 0; k < coords[i].size(); ++k) {
          const std::string kw = child(iw, k);
          const json& tj = coords[i][k];
          allow_only(tj, kw, {"coef", "factors"});
          ChartTerm t;
          t.coef = number(require(tj, kw, "coef"), child(kw, "coef"));
          const json fj = tj.value("factors", json::array());
          if (!fj.is_array()) schema_fail(child(kw, "factors"), "expected an array");
          for (size_t f = 0; f < fj.size(); ++f) {
            const std::string fw = child(child(kw, "factors"), f);
            allow_only(fj[f], fw, {"var", "kind", "k"});
            ChartTerm::Factor fac;
            fac.var = static_cast<int>(integer(require(fj[f], fw, "var"), child(fw, "var")));
            const std::string kind = string(require(fj[f], fw, "kind"), child(fw, "kind"));
            if (kind == "pow") fac.kind = ChartTerm::Kind::Pow;
            else if (kind == "cos") fac.kind = ChartTerm::Kind::Cos;
            else if (kind == "sin") fac.kind = ChartTerm::Kind::Sin;
            else schema_fail(child(fw, "kind"), "expected pow, cos or sin");
            fac.k = fj[f].contains("k") ? static_cast<int>(integer(fj[f]["k"], child(fw, "k"))) : 1;
            if (fac.var < 0 || fac.var >= n) schema_fail(child(fw, "var"), "variable index out of range");
            t.factors.push_back(fac);
          }
          terms.push_back(std::move(t));
        }
        out.push_back(std::move(terms));
      }
      return custom_chart(n, std::move(out));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Schema) throw;
    schema_fail(w, e.what());
  }
  schema_fail(child(w, "name"), "unknown chart '" + name + "'");
}

Vec vector_or_scalar(const json& j, const std::string& w, int n) {
  if (j.is_number()) return Vec::Constant(n, number(j, w));
  const Vec v = vector(j, w);
  if (v.size() != n) schema_fail(w, "expected " + std::to_string(n) + " components");
  return v;
}

ParamPath parse_path(const json& j, const std::string& w, int n) {
  if (!j.is_object()) schema_fail(w, "expected an object");
  const std::string name = string(require(j, w, "name"), child(w, "name"));
  const int samples = j.contains("samples") ? positive(j["samples"], child(w, "samples"), 10000) : 256;
  if (samples < 2) schema_fail(child(w, "samples"), "need at least two samples");
  if (name == "full_loop") {
    allow_only(j, w, {"name", "samples", "loops", "base"});
    if (n != 1) schema_fail(child(w, "name"), "full_loop needs a one-dimensional chart; use winding");
    const double loops = j.contains("loops") ? static_cast<double>(integer(j["loops"], child(w, "loops"))) : 1.0;
    const Vec base = j.contains("base") ? vector_or_scalar(j["base"], child(w, "base"), 1) : Vec::Zero(1);
    return ParamPath::loop(base, Vec::Constant(1, loops), samples);
  }
  if (name == "arc") {
    allow_only(j, w, {"name", "samples", "from", "to"});
    if (n != 1) schema_fail(child(w, "name"), "arc needs a one-dimensional chart; use segment");
    const double from = number(require(j, w, "from"), child(w, "from"));
    const double to = number(require(j, w, "to"), child(w, "to"));
    ParamPath p = ParamPath::segment(Vec::Constant(1, from), Vec::Constant(1, to), samples);
    return p;
  }
  if (name == "winding") {
    allow_only(j, w, {"name", "samples", "winding", "base"});
    const json& wj = require(j, w, "winding");
    if (!wj.is_array() || static_cast<int>(wj.size()) != n) schema_fail(child(w, "winding"), "expected one integer per chart variable");
    Vec wind(n);
    for (int k = 0; k < n; ++k) wind(k) = static_cast<double>(integer(wj[k], child(child(w, "winding"), k)));
    const Vec base = j.contains("base") ? vector_or_scalar(j["base"], child(w, "base"), n) : Vec::Zero(n);
    return ParamPath::loop(base, wind, samples);
  }
  if (name == "segment") {
    allow_only(j, w, {"name", "samples", "from", "to", "closed"});
    const Vec from = vector_or_scalar(require(j, w, "from"), child(w, "from"), n);
    const Vec to = vector_or_scalar(require(j, w, "to"), child(w, "to"), n);
    ParamPath p = ParamPath::segment(from, to, samples);
    if (j.contains("closed")) p.closed = boolean(j["closed"], child(w, "closed"));
    return p;
  }
  if (name == "samples") {
    allow_only(j, w, {"name", "points", "closed"});
    const json& pj = require(j, w, "points");
    if (!pj.is_array() || pj.size() < 2) schema_fail(child(w, "points"), "expected at least two points");
    std::vector<Vec> pts;
    for (size_t i = 0; i < pj.size(); ++i) pts.push_back(vector_or_scalar(pj[i], child(child(w, "points"), i), n));
    const bool closed = j.contains("closed") && boolean(j["closed"], child(w, "closed"));
    const double last = static_cast<double>(pts.size() - 1);
    auto f = [pts, last](double s) -> Vec {
      const double x = std::clamp(s, 0.0, 1.0) * last;
      const size_t k = std::min(static_cast<size_t>(x), pts.size() - 2);
      const double a = x - static_cast<double>(k);
      return (1.0 - a) * pts[k] + a * pts[k + 1];
    };
    return ParamPath::from_function(f, static_cast<int>(pts.size()), closed);
  }
  schema_fail(child(w, "name"), "unknown path '" + name + "'");
}

LagrangianFrame parse_frame(const json& j, const std::string& w, const Tolerances& tol) {
  if (j.is_number()) return line(number(j, w));
  try {
    return LagrangianFrame(matrix(j, w), tol);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Schema) throw;
    schema_fail(w, e.what());
  }
}

// ---------------------------------------------------------------------------
// Report pieces

json clm_json(const ClmResult& c) {
  return {{"index", c.index},
          {"mod4", c.mod4()},
          {"m_L", c.m_L()},
          {"leray", c.leray},
          {"leray_mod8", mod(c.leray, 8)},
          {"endpoint_intersection", c.endpoint_intersection},
          {"theta0", c.theta0},
          {"theta1", c.theta1}};
}

json qf_json(const QuadraticFourier& qf) {
  return {{"P", matrix_json(qf.P)}, {"L", matrix_json(qf.L)}, {"Q", matrix_json(qf.Q)}, {"m", qf.m}, {"mu_hat", mu_hat(qf)}};
}

json theorem1_json(const Theorem1Report& r, const Tolerances& tol) {
  return {{"mu_clm", r.mu_clm},
          {"mu_clm_mod4", r.mu_clm_mod4},
          {"leray", r.leray},
          {"phase", phase_json(r.phase, tol.phase_tol)},
          {"predicted_phase", phase_json(r.predicted_phase, tol.phase_tol)},
          {"residual", r.residual},
          {"pass", r.pass},
          {"endpoint_form", to_string(r.form)},
          {"branch_m", r.branch},
          {"mu_hat", r.mu_hat},
          {"sampling",
           {{"transport_refinements", r.transport_refinements},
            {"lift_refinements", r.lift_refinements},
            {"trace_points", r.trace_t.size()},
            {"max_orthogonality_residual", r.max_orthogonality_residual},
            {"max_tangency_residual", r.max_tangency_residual}}}};
}

std::string trace_csv(const Theorem1Report& r) {
  std::ostringstream os;
  os << "t,theta_unwrapped,phase_re,phase_im\n";
  char buf[160];
  for (size_t k = 0; k < r.trace_t.size(); ++k) {
    const cplx z = std::polar(1.0, r.trace_theta[k] / 4.0);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", r.trace_t[k], r.trace_theta[k], z.real(), z.imag());
    os << buf;
  }
  return os.str();
}

json assertion(const std::string& name, bool pass) { return {{"name", name}, {"pass", pass}}; }

struct Result {
  json results = json::object();
  json assertions = json::array();
  json notes = json::array();
  std::string summary;
  std::string csv;
};

// ---------------------------------------------------------------------------
// Commands

Result run_index(const json& spec, const Context& ctx) {
  Result r;
  const Tolerances& tol = ctx.tol;
  bool any = false;
  if (spec.contains("triple")) {
    any = true;
    const std::string w = "$.triple";
    const json& t = spec["triple"];
    allow_only(t, w, {"angles", "frames"});
    std::vector<LagrangianFrame> frames;
    const char* key = t.contains("angles") ? "angles" : "frames";
    const json& items = require(t, w, key);
    if (!items.is_array() || items.size() != 3) schema_fail(child(w, key), "expected three entries");
    for (size_t i = 0; i < 3; ++i) frames.push_back(parse_frame(items[i], child(child(w, key), i), tol));
    r.results["kashiwara_signature"] = kashiwara_signature(frames[0], frames[1], frames[2], tol);
    r.summary += " tau=" + std::to_string(r.results["kashiwara_signature"].get<int>());
  }
  if (spec.contains("pair")) {
    any = true;
    const std::string w = "$.pair";
    const json& p = spec["pair"];
    allow_only(p, w, {"x", "y"});
    std::vector<CoverPoint> pts;
    std::vector<LagrangianFrame> frames;
    for (const char* key : {"x", "y"}) {
      const std::string kw = child(w, key);
      const json& pj = require(p, w, key);
      allow_only(pj, kw, {"frame", "sheet"});
      frames.push_back(parse_frame(require(pj, kw, "frame"), child(kw, "frame"), tol));
      const int sheet = pj.contains("sheet") ? static_cast<int>(integer(pj["sheet"], child(kw, "sheet"))) : 0;
      pts.push_back(CoverPoint::over(frames.back(), sheet));
    }
    if (frames[0].n() != frames[1].n()) schema_fail(w, "x and y have different dimensions");
    const int mu = leray_index(pts[0], pts[1], tol);
    r.results["leray"] = {{"mu", mu},
                          {"intersection_dim", intersection_dim(frames[0], frames[1], tol)},
                          {"theta_x", pts[0].theta},
                          {"theta_y", pts[1].theta}};
    r.summary += " mu=" + std::to_string(mu);
  }
  if (spec.contains("chart") || spec.contains("path")) {
    any = true;
    const ChartPtr chart = parse_chart(require(spec, "$", "chart"), "$.chart");
    const ParamPath path = parse_path(require(spec, "$", "path"), "$.path", chart->n());
    const ClmResult clm = clm_index(tangent_lagrangian_path(*chart, path), tol, ctx.refine_max);
    r.results["clm"] = clm_json(clm);
    r.results["sampling"] = {{"lift_refinements", clm.refinements}, {"max_depth", clm.max_depth}};
    r.summary += " mu_clm=" + std::to_string(clm.index);
  }
  if (spec.contains("quadratic_fourier")) {
    any = true;
    const std::string w = "$.quadratic_fourier";
    const json& q = spec["quadratic_fourier"];
    allow_only(q, w, {"P", "L", "Q", "m"});
    QuadraticFourier qf{matrix(require(q, w, "P"), child(w, "P")), matrix(require(q, w, "L"), child(w, "L")),
                        matrix(require(q, w, "Q"), child(w, "Q")),
                        static_cast<int>(integer(require(q, w, "m"), child(w, "m")))};
    qf.m = mod(qf.m, 4);
    try {
      qf.validate(tol);
    } catch (const Error& e) {
      schema_fail(w, e.what());
    }
    if (qf.m % 2 != branch_parity(qf.L)) schema_fail(child(w, "m"), "branch parity must match the sign of det L");
    r.results["quadratic_fourier"] = qf_json(qf);
    r.results["quadratic_fourier"]["symplectic"] = matrix_json(symplectic_from_quad_fourier(qf).matrix());
    r.summary += " mu_hat=" + std::to_string(mu_hat(qf));
  }
  if (spec.contains("symplectic")) {
    any = true;
    const std::string w = "$.symplectic";
    const json& s = spec["symplectic"];
    allow_only(s, w, {"matrix", "m"});
    const Mat m = matrix(require(s, w, "matrix"), child(w, "matrix"));
    std::optional<SymplecticMatrix> sm;
    try {
      sm.emplace(m, tol);
    } catch (const Error& e) {
      schema_fail(child(w, "matrix"), e.what());
    }
    const int branch = s.contains("m") ? static_cast<int>(integer(s["m"], child(w, "m"))) : 0;
    const QuadraticFourier qf = quad_fourier_from_symplectic(*sm, branch, tol);
    if (qf.m % 2 != branch_parity(qf.L)) schema_fail(child(w, "m"), "branch parity must match the sign of det L");
    r.results["generating_function"] = qf_json(qf);
    r.summary += " mu_hat=" + std::to_string(mu_hat(qf));
  }
  if (!any) schema_fail("$", "index needs one of triple, pair, chart/path, quadratic_fourier, symplectic");
  return r;
}

void check_keys(const json& spec, std::initializer_list<const char*> extra) {
  std::vector<const char*> keys = {"spec_version", "command", "tolerances", "output", "seed", "refine_max"};
  keys.insert(keys.end(), extra.begin(), extra.end());
  if (!spec.is_object()) schema_fail("$", "expected an object");
  for (const auto& [k, v] : spec.items()) {
    bool ok = false;
    for (const char* a : keys) ok = ok || k == a;
    if (!ok) schema_fail("$." + k, "unknown field");
  }
}

Result run_holonomy(const json& spec, const Context& ctx) {
  Result r;
  const ChartPtr chart = parse_chart(require(spec, "$", "chart"), "$.chart");
  const ParamPath path = parse_path(require(spec, "$", "path"), "$.path", chart->n());
  const Theorem1Report t = verify_theorem1(*chart, path, ctx.tol, ctx.refine_max);
  r.results["holonomy"] = theorem1_json(t, ctx.tol);
  r.assertions.push_back(assertion("holonomy_in_z4", std::abs(t.phase - ipow(mod(static_cast<int>(std::lround(std::arg(t.phase) / (kPi / 2))), 4))) <= ctx.tol.phase_tol));
  r.csv = trace_csv(t);
  std::ostringstream os;
  os << " mu_clm=" << t.mu_clm << " phase=" << phase_json(t.phase, ctx.tol.phase_tol)["root"].dump();
  r.summary = os.str();
  return r;
}

Result run_verify(const json& spec, const Context& ctx) {
  Result r;
  const std::string theorem = spec.contains("theorem") ? string(spec["theorem"], "$.theorem") : "theorem1";
  const ChartPtr chart = parse_chart(require(spec, "$", "chart"), "$.chart");
  const Tolerances& tol = ctx.tol;
  r.results["theorem"] = theorem;
  if (theorem == "theorem1") {
    if (spec.contains("loops")) schema_fail("$.loops", "only used by corollary1");
    const ParamPath path = parse_path(require(spec, "$", "path"), "$.path", chart->n());
    const Theorem1Report t = verify_theorem1(*chart, path, tol, ctx.refine_max);
    r.results["theorem1"] = theorem1_json(t, tol);
    r.assertions.push_back(assertion("holonomy_phase_equals_i_pow_mu_clm", t.pass));
    r.csv = trace_csv(t);
    r.summary = " mu_clm_mod4=" + std::to_string(t.mu_clm_mod4) + " phase=" + phase_json(t.phase, tol.phase_tol)["root"].dump();
    return r;
  }
  if (theorem == "corollary1") {
    if (spec.contains("path")) schema_fail("$.path", "corollary1 takes loops");
    const json& lj = require(spec, "$", "loops");
    if (!lj.is_array()) schema_fail("$.loops", "expected an array of paths");
    std::vector<ParamPath> loops;
    for (size_t i = 0; i < lj.size(); ++i) loops.push_back(parse_path(lj[i], child("$.loops", i), chart->n()));
    const Corollary1Report c = verify_corollary1(*chart, loops, tol, ctx.refine_max);
    json arr = json::array();
    bool all = true;
    for (const auto& t : c.loops) {
      arr.push_back(theorem1_json(t, tol));
      all = all && t.pass;
    }
    r.results["corollary1"] = {{"loops", arr}, {"dim_parallel", c.dim_parallel}};
    r.assertions.push_back(assertion("holonomy_phase_equals_i_pow_mu_clm", all));
    r.summary = " dim_parallel=" + std::to_string(c.dim_parallel);
    return r;
  }
  if (theorem == "theorem2") {
    if (spec.contains("loops")) schema_fail("$.loops", "only used by corollary1");
    const ParamPath path = parse_path(require(spec, "$", "path"), "$.path", chart->n());
    const Theorem2Report t = verify_theorem2(*chart, path, tol, ctx.refine_max);
    json d = {{"kind", t.dual.kind == DistributionState::Kind::Delta ? "DELTA" : "CONST"},
              {"prefactor", complex_json(t.dual.c)},
              {"chirp", matrix_json(t.dual.chirp)}};
    json j = {{"n", t.n},
              {"mu_clm", t.mu_clm},
              {"endpoint_intersection", t.endpoint_intersection},
              {"transverse", t.transverse},
              {"near_degenerate", t.near_degenerate},
              {"endpoint_form", to_string(t.form)},
              {"mu_hat", t.mu_hat},
              {"dual_state", d},
              {"ground_phase", phase_json(t.ground_phase, tol.phase_tol)},
              {"pass", t.pass}};
    if (t.transverse) {
      j["c_y"] = t.c_y;
      j["chirp_free"] = t.chirp_free;
      j["dual_phase"] = phase_json(t.dual_phase, tol.phase_tol);
      j["transversal"] = {{"predicted", phase_json(t.predicted_literal, tol.phase_tol)}, {"pass", t.transversal_pass}};
      j["transversal_shifted"] = {{"predicted", phase_json(t.predicted_shifted, tol.phase_tol)},
                                  {"pass", t.transversal_shifted_pass}};
      j["transversal2"] = {{"predicted", phase_json(t.ground_predicted_literal, tol.phase_tol)},
                           {"pass", t.transversal2_pass}};
      j["transversal2_shifted"] = {{"predicted", phase_json(t.ground_predicted_shifted, tol.phase_tol)},
                                   {"pass", t.transversal2_shifted_pass}};
      r.assertions.push_back(assertion("transversal", t.transversal_pass));
      r.assertions.push_back(assertion("transversal2", t.transversal2_pass));
      r.notes.push_back("shifted predictions include the factor e^{-i pi n/4} (dual) and e^{i pi n/4} (ground state)");
    } else {
      j["othercase"] = {{"predicted", phase_json(ipow(-t.mu_clm), tol.phase_tol)}, {"pass", t.othercase_pass}};
      json pairs = json::array();
      for (const auto& p : t.othercase2) {
        pairs.push_back({{"alpha", p.alpha}, {"lhs", complex_json(p.lhs)}, {"rhs", complex_json(p.rhs)}, {"pass", p.pass}});
      }
      j["othercase2"] = {{"pairings", pairs}, {"pass", t.othercase2_pass}};
      r.assertions.push_back(assertion("othercase", t.othercase_pass));
      r.assertions.push_back(assertion("othercase2", t.othercase2_pass));
    }
    if (t.near_degenerate) r.notes.push_back("warning: endpoint tangent planes are nearly degenerate");
    r.notes.push_back("L(y) is the tangent plane at the endpoint of the path");
    r.results["theorem2"] = j;
    r.summary = " mu_clm=" + std::to_string(t.mu_clm) + (t.transverse ? " transverse" : " tangent");
    return r;
  }
  schema_fail("$.theorem", "expected theorem1, theorem2 or corollary1");
}

Result run_report(const json& spec, const Context& ctx) {
  Result r;
  const std::string w = "$.suites";
  const json sj = spec.value("suites", json::object());
  allow_only(sj, w, {"names", "trials"});
  std::vector<std::string> names = {"coboundary", "deck", "mod8", "cocycle"};
  if (sj.contains("names")) {
    names.clear();
    if (!sj["names"].is_array()) schema_fail(child(w, "names"), "expected an array of suite names");
    for (size_t i = 0; i < sj["names"].size(); ++i) names.push_back(string(sj["names"][i], child(child(w, "names"), i)));
  }
  const int trials = sj.contains("trials") ? positive(sj["trials"], child(w, "trials"), 100000) : 0;
  auto count = [trials](int fallback) { return trials > 0 ? trials : fallback; };
  json arr = json::array();
  auto add = [&](const SuiteResult& s) {
    json f = json::array();
    for (size_t i = 0; i < std::min<size_t>(s.failures.size(), 10); ++i) f.push_back(s.failures[i]);
    arr.push_back({{"name", s.name}, {"trials", s.trials}, {"passed", s.passed}, {"errors", s.errors}, {"failures", f}});
    r.assertions.push_back(assertion(s.name, s.ok()));
  };
  for (size_t i = 0; i < names.size(); ++i) {
    const std::string& name = names[i];
    const std::uint64_t seed = ctx.seed + 1000 * i;
    if (name == "coboundary") {
      for (int n = 1; n <= 3; ++n) add(coboundary_suite(n, count(200), seed + n, Exec::Parallel, ctx.tol));
    } else if (name == "deck") {
      for (int n = 1; n <= 3; ++n) add(deck_invariance_suite(n, count(50), seed + n, Exec::Parallel, ctx.tol));
    } else if (name == "mod8") {
      add(mod8_suite(count(50), seed, Exec::Parallel, ctx.tol));
    } else if (name == "cocycle") {
      add(cocycle_suite(count(50), seed, Exec::Parallel, ctx.tol));
    } else {
      schema_fail(child(child(w, "names"), i), "unknown suite '" + name + "'");
    }
  }
  r.results["suites"] = arr;
  r.summary = " suites=" + std::to_string(arr.size());
  return r;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Schema:
    case ErrorKind::Dimension:
    case ErrorKind::InvariantViolation:
    case ErrorKind::UnsupportedConfiguration:
    case ErrorKind::Immersion:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

bool known_profile(const std::string& name) { return name == kDefaultProfile; }

std::string Outcome::body() const { return format == "csv" ? csv : dump_report(report); }

Outcome run(const json& spec, const Options& options) {
  Outcome out;
  std::string command = "?";
  try {
    if (!known_profile(options.profile)) {
      throw Error(ErrorKind::Convention, "unknown convention profile '" + options.profile + "'");
    }
    if (!spec.is_object()) schema_fail("$", "expected an object");
    command = string(require(spec, "$", "command"), "$.command");
    if (spec.contains("spec_version") && string(spec["spec_version"], "$.spec_version") != kSpecVersion) {
      schema_fail("$.spec_version", "unsupported version");
    }
    Context ctx;
    ctx.profile = options.profile;
    ctx.tol = parse_tolerances(spec, options);
    if (spec.contains("seed")) {
      const long long s = integer(spec["seed"], "$.seed");
      if (s < 0) schema_fail("$.seed", "must be non-negative");
      ctx.seed = static_cast<std::uint64_t>(s);
    }
    if (options.seed) ctx.seed = *options.seed;
    if (spec.contains("refine_max")) ctx.refine_max = positive(spec["refine_max"], "$.refine_max", 60);
    if (options.refine_max) ctx.refine_max = *options.refine_max;
    if (spec.contains("output")) {
      const json& o = spec["output"];
      allow_only(o, "$.output", {"path", "format"});
      if (o.contains("path")) out.out_path = string(o["path"], "$.output.path");
      if (o.contains("format")) out.format = string(o["format"], "$.output.format");
    }
    if (options.format) out.format = *options.format;
    if (out.format != "json" && out.format != "csv") schema_fail("$.output.format", "expected json or csv");

    Result res;
    if (command == "index") {
      check_keys(spec, {"triple", "pair", "chart", "path", "quadratic_fourier", "symplectic"});
      res = run_index(spec, ctx);
    } else if (command == "holonomy") {
      check_keys(spec, {"chart", "path"});
      res = run_holonomy(spec, ctx);
    } else if (command == "verify") {
      check_keys(spec, {"chart", "path", "loops", "theorem"});
      res = run_verify(spec, ctx);
    } else if (command == "report") {
      check_keys(spec, {"suites"});
      res = run_report(spec, ctx);
    } else {
      schema_fail("$.command", "expected index, holonomy, verify or report");
    }
    if (out.format == "csv" && res.csv.empty()) {
      schema_fail("$.output.format", "csv output is only available for holonomy traces");
    }

    bool pass = true;
    std::string failing;
    for (const auto& a : res.assertions) {
      if (!a["pass"].get<bool>()) {
        pass = false;
        if (failing.empty()) failing = a["name"].get<std::string>();
      }
    }
    out.report = {{"spec_version", kSpecVersion},
                  {"convention_ledger", ctx.profile},
                  {"command", command},
                  {"inputs", spec},
                  {"tolerances",
                   {{"residual_tol", ctx.tol.residual_tol}, {"rank_tol", ctx.tol.rank_tol}, {"phase_tol", ctx.tol.phase_tol}}},
                  {"seed", ctx.seed},
                  {"refine_max", ctx.refine_max},
                  {"results", res.results},
                  {"assertions", res.assertions},
                  {"notes", res.notes},
                  {"pass", pass}};
    out.csv = res.csv;
    out.exit_code = pass ? 0 : 2;
    out.summary = command + ": " + (pass ? "PASS" : "FAIL (" + failing + ")") + res.summary;
  } catch (const Error& e) {
    out.exit_code = exit_for(e);
    if (e.kind() == ErrorKind::Convention && command == "?") out.exit_code = 1;
    out.summary = command + ": " + (out.exit_code == 1 ? "INPUT ERROR " : "FAIL ") + e.what();
    out.report = {{"spec_version", kSpecVersion},
                  {"convention_ledger", options.profile},
                  {"command", command},
                  {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}},
                  {"pass", false}};
    out.csv.clear();
    out.format = "json";
  } catch (const std::exception& e) {
    out.exit_code = 1;
    out.summary = command + ": INPUT ERROR " + e.what();
    out.report = {{"spec_version", kSpecVersion}, {"command", command}, {"error", {{"kind", "input"}, {"message", e.what()}}}, {"pass", false}};
    out.format = "json";
  }
  return out;
}

Outcome run_file(const std::string& path, const Options& options) {
  std::ifstream in(path);
  if (!in) {
    Outcome out;
    out.exit_code = 1;
    out.summary = "INPUT ERROR cannot read spec file " + path;
    out.report = {{"spec_version", kSpecVersion}, {"error", {{"kind", "input"}, {"message", out.summary}}}, {"pass", false}};
    return out;
  }
  json spec;
  try {
    spec = json::parse(in);
  } catch (const json::parse_error& e) {
    Outcome out;
    out.exit_code = 1;
    out.summary = std::string("INPUT ERROR malformed JSON: ") + e.what();
    out.report = {{"spec_version", kSpecVersion}, {"error", {{"kind", "input"}, {"message", out.summary}}}, {"pass", false}};
    return out;
  }
  return run(spec, options);
}

}  // namespace maslov::cli
