#include "orlicz/runner.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "orlicz/error.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/report_io.hpp"

namespace orlicz {
namespace {

namespace fs = std::filesystem;

struct Row {
  std::string summary;
  bool ok = false;
  Json report;
  std::optional<DiscreteFunction> u1, u2;
};

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw Error(ErrorKind::ConfigParse, "output_dir: cannot write " + p.string());
  out << text;
}

HypothesisOptions hypothesis_options(const ExperimentConfig& cfg, const MeshPtr& mesh) {
  HypothesisOptions h = cfg.solver.hypothesis;
  h.dim = mesh->dim;
  return h;
}

}  // namespace

std::uint64_t row_seed(std::uint64_t seed, std::size_t k) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void apply_overrides(ExperimentConfig& cfg, const RunOverrides& o) {
  if (o.workers) cfg.workers = std::max(1, *o.workers);
  if (o.tol) cfg.solver.tol = *o.tol;
  if (o.seed) {
    cfg.seed = *o.seed;
    cfg.solver.seed = *o.seed;
  }
}

int run_check(const ExperimentConfig& cfg, std::ostream& out) {
  const NFunction phi = config_phi(cfg);
  const auto f = config_f(cfg);
  const MeshPtr mesh = config_mesh(cfg);
  const HypothesisReport rep = check_hypotheses(*f, phi, cfg.profile, hypothesis_options(cfg, mesh));
  Json j;
  j["phi"] = phi.name();
  j["f"] = f->name();
  j["hypothesis"] = to_json(rep);
  Json notes = Json::array();
  if (!rep.indices.delta2_phi) notes.push_back("Phi does not satisfy the Delta2 condition (informational)");
  if (!rep.indices.delta2_tilde) notes.push_back("Phi~ does not satisfy the Delta2 condition (informational)");
  if (rep.indices.m_tail_growing) notes.push_back("(t phi)'/phi still growing at the grid end; m is a grid value");
  j["notes"] = notes;
  out << j.dump(2) << '\n';
  return rep.holds ? 0 : 1;
}

int run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
  const NFunction phi = config_phi(cfg);
  const auto f = config_f(cfg);
  const MeshPtr mesh = config_mesh(cfg);
  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);

  const HypothesisOptions hopt = hypothesis_options(cfg, mesh);
  const HypothesisReport hyp = check_hypotheses(*f, phi, cfg.profile, hopt);
  write_file(dir / "hypothesis.json", to_json(hyp).dump(2) + "\n");

  std::vector<double> lambdas = cfg.lambdas;
  double threshold = std::numeric_limits<double>::quiet_NaN();
  std::optional<Error> threshold_error;
  try {
    const double t1 = cfg.solver.t1.value_or(hyp.f2.t1);
    threshold = lambda_star(phi, *f, mesh, t1, cfg.solver.plateau_levels).lambda_star;
  } catch (const Error& e) {
    threshold_error = e;
  }
  if (cfg.lambdas_relative)
    for (double& l : lambdas) l *= threshold;

  std::vector<Row> rows(lambdas.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mu;
  auto work = [&] {
    for (std::size_t k = next++; k < rows.size(); k = next++) {
      Row& row = rows[k];
      SolverOptions opt = cfg.solver;
      opt.seed = row_seed(cfg.seed, k);
      opt.parallel = cfg.workers <= 1;
      opt.hypothesis = hopt;
      try {
        if (!std::isfinite(lambdas[k]) && threshold_error) throw *threshold_error;
        const SolverReport rep = solve_two(phi, f, mesh, lambdas[k], cfg.profile, opt);
        row.summary = summary_row(rep);
        row.ok = rep.outcome != Outcome::Failed;
        row.report = to_json(rep);
        row.u1 = rep.u1;
        row.u2 = rep.u2;
      } catch (const Error& e) {
        row.summary = summary_error_row(lambdas[k], threshold, std::string(to_string(e.kind())));
        row.report = {{"lambda", lambdas[k]}, {"outcome", to_string(e.kind())}, {"message", e.what()}};
      }
      std::lock_guard lock(log_mu);
      log << "row " << k << ": " << row.summary << '\n';
    }
  };
  const int nthreads = std::min<int>(cfg.workers, static_cast<int>(rows.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::string summary = summary_header() + "\n";
  bool all_ok = true;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Row& row = rows[k];
    summary += row.summary + "\n";
    all_ok = all_ok && row.ok;
    write_file(dir / ("report_" + std::to_string(k) + ".json"), row.report.dump(2) + "\n");
    if (row.u1) {
      std::ofstream out(dir / ("u1_" + std::to_string(k) + ".csv"));
      write_profile_csv(out, *row.u1);
    }
    if (row.u2) {
      std::ofstream out(dir / ("u2_" + std::to_string(k) + ".csv"));
      write_profile_csv(out, *row.u2);
    }
  }
  write_file(dir / "summary.csv", summary);
  return all_ok ? 0 : 1;
}

int run_norms(const ExperimentConfig& cfg, const std::string& expr, std::ostream& out) {
  const NFunction phi = config_phi(cfg);
  const MeshPtr mesh = config_mesh(cfg);
  const auto fn = parse_expression(expr);
  DiscreteFunction u = DiscreteFunction::interpolate(mesh, fn, false);
  bool zero = true;
  for (const int b : mesh->boundary_nodes) zero = zero && std::fabs(u.values[b]) <= 1e-14;
  if (zero) {
    for (const int b : mesh->boundary_nodes) u.values[b] = 0.0;
    u.zero_trace = true;
  }
  Json j;
  j["phi"] = phi.name();
  j["expression"] = expr;
  j["modular"] = modular(phi, u, false);
  j["modular_gradient"] = modular(phi, u, true);
  j["luxemburg"] = luxemburg_norm(phi, u, false).value;
  j["luxemburg_gradient"] = luxemburg_norm(phi, u, true).value;
  const Complementary tilde(phi);
  j["luxemburg_tilde"] = luxemburg_norm([&tilde](double s) { return tilde.value(s); }, u, false).value;
  j["sup_norm"] = u.sup_norm();
  if (u.zero_trace) {
    const auto p = verify_modular_poincare(phi, u, mesh->diam);
    j["poincare"] = {{"lhs", p.lhs}, {"rhs", p.rhs}, {"holds", p.holds}};
  } else {
    j["poincare"] = nullptr;
  }
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace orlicz
