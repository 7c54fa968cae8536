#include "orlicz/report_io.hpp"

#include <cmath>
#include <cstdio>

namespace orlicz {
namespace {

// JSON has no inf/nan; keep them readable as strings.
Json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json to_json(const DiscreteFunction& u) {
  const Mesh& m = *u.mesh;
  Json j;
  j["dim"] = m.dim;
  j["extent"] = m.dim == 1 ? Json::array({m.extent.x0, m.extent.x1})
                           : Json::array({m.extent.x0, m.extent.x1, m.extent.y0, m.extent.y1});
  j["resolution"] = m.resolution;
  j["zero_trace"] = u.zero_trace;
  j["values"] = u.values;
  return j;
}

Json to_json(const Delta2Report& d) {
  Json j;
  j["satisfied"] = d.satisfied;
  j["sup_ratio"] = num(d.sup_ratio);
  j["tail_slope"] = num(d.tail_slope);
  j["overflowed"] = d.overflowed;
  return j;
}

Json to_json(const IndexReport& r, bool with_grid) {
  Json j;
  j["l"] = num(r.l);
  j["m"] = num(r.m);
  j["m_check"] = num(r.m_check);
  j["ell"] = num(r.ell);
  j["l_star"] = num(r.l_star);
  j["dim"] = r.dim;
  j["delta2_phi"] = r.delta2_phi;
  j["delta2_tilde"] = r.delta2_tilde;
  j["delta2_phi_report"] = to_json(r.delta2_phi_report);
  j["delta2_tilde_report"] = to_json(r.delta2_tilde_report);
  j["m_tail_growing"] = r.m_tail_growing;
  j["t2phi_convex"] = r.t2phi_convex;
  j["grid"] = {{"lo", r.grid.empty() ? 0.0 : r.grid.front()},
               {"hi", r.grid.empty() ? 0.0 : r.grid.back()},
               {"points", r.grid.size()}};
  if (with_grid) j["grid"]["values"] = r.grid;
  return j;
}

Json to_json(const HypothesisReport& r) {
  Json j;
  j["profile"] = to_string(r.profile);
  j["holds"] = r.holds;
  j["reasons"] = r.reasons;
  j["f0"] = {{"holds", r.f0.holds}, {"m_A", num(r.f0.m_A)}, {"l", num(r.f0.l)}, {"margin", num(r.f0.margin)},
             {"C_est", num(r.f0.C_est)}};
  j["f1"] = {{"delta", num(r.f1.delta)}, {"holds", r.f1.holds}};
  j["f2"] = {{"t1", num(r.f2.t1)}, {"F_at_t1", num(r.f2.F_at_t1)}, {"holds", r.f2.holds}};
  j["f3"] = {{"alpha", num(r.f3.alpha)}, {"C_est", num(r.f3.C_est)}, {"holds", r.f3.holds}};
  j["phi"] = {{"phi1", r.phi1}, {"phi2", r.phi2}, {"phi3", r.phi3}, {"phi4", r.phi4},
              {"m_below_l_star", r.m_below_l_star}};
  j["indices"] = to_json(r.indices);
  return j;
}

Json to_json(const GeometryReport& g) {
  Json j;
  j["r"] = num(g.r);
  j["rho"] = num(g.rho);
  j["holds"] = g.holds;
  Json rows = Json::array();
  for (std::size_t k = 0; k < g.r_grid.size(); ++k)
    rows.push_back({{"r", g.r_grid[k]}, {"rho", num(k < g.rho_by_r.size() ? g.rho_by_r[k] : NAN)}});
  j["samples"] = rows;
  return j;
}

Json to_json(const DomDiagnostics& d) {
  return {{"modular_phi", num(d.modular_phi)},
          {"modular_tilde", num(d.modular_tilde)},
          {"identity_gap", num(d.identity_gap)},
          {"relative_gap", num(d.relative_gap)}};
}

Json to_json(const SolverReport& r) {
  Json j;
  j["lambda"] = num(r.lambda);
  j["lambda_star"] = num(r.lambda_star);
  j["I_u1"] = num(r.I_u1);
  j["I_u2"] = r.u2 ? num(r.I_u2) : Json(nullptr);
  j["c"] = r.u2 ? num(r.c) : Json(nullptr);
  j["residual_norms"] = {num(r.residual_u1), r.u2 ? num(r.residual_u2) : Json(nullptr)};
  j["ordering_ok"] = r.ordering_ok;
  j["outcome"] = to_string(r.outcome);
  j["message"] = r.message;
  j["profile"] = to_string(r.profile);
  j["lambda_star_kind"] = "witness threshold";
  j["t1"] = num(r.t1);
  j["trivial_minimizer"] = r.trivial_minimizer;
  j["distinct_gap"] = num(r.distinct_gap);
  j["geometry"] = to_json(r.geometry);
  j["diagnostics"] = {{"u1", to_json(r.diag_u1)},
                      {"u2", r.u2 ? to_json(r.diag_u2) : Json(nullptr)},
                      {"max_iterate_relative_gap", num(r.max_identity_gap)}};
  j["hypothesis"] = to_json(r.hypothesis);
  j["sup_norms"] = {num(r.sup_u1), r.u2 ? num(r.sup_u2) : Json(nullptr)};
  j["iterations"] = {{"descent", r.descent_iterations}, {"mountain_pass", r.mp_iterations}};
  j["u0"] = to_json(r.u0);
  j["u1"] = to_json(r.u1);
  j["u2"] = r.u2 ? to_json(*r.u2) : Json(nullptr);
  return j;
}

void write_profile_csv(std::ostream& os, const DiscreteFunction& u) {
  const Mesh& m = *u.mesh;
  os << (m.dim == 1 ? "x,value\n" : "x,y,value\n");
  for (int k = 0; k < m.node_count(); ++k) {
    os << g17(m.nodes[k].x) << ',';
    if (m.dim == 2) os << g17(m.nodes[k].y) << ',';
    os << g17(u.values[k]) << '\n';
  }
}

std::string summary_header() {
  return "lambda,lambda_star,I_u1,c,I_u2,ordering_ok,residual_u1,residual_u2,outcome";
}

std::string summary_row(const SolverReport& r) {
  const bool two = r.u2.has_value();
  std::string s = g17(r.lambda) + ',' + g17(r.lambda_star) + ',' + g17(r.I_u1) + ',';
  s += (two ? g17(r.c) : "nan") + ',' + (two ? g17(r.I_u2) : "nan") + ',';
  s += std::string(r.ordering_ok ? "true" : "false") + ',' + g17(r.residual_u1) + ',';
  s += (two ? g17(r.residual_u2) : "nan") + ',' + std::string(to_string(r.outcome));
  return s;
}

std::string summary_error_row(double lambda, double lambda_star, const std::string& outcome) {
  return g17(lambda) + ',' + g17(lambda_star) + ",nan,nan,nan,false,nan,nan," + outcome;
}

}  // namespace orlicz
