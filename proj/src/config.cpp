#include "orlicz/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "orlicz/error.hpp"

namespace orlicz {
namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Ctx {
  const std::string& source;
  int line;
  const std::string& key;

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << source << ":" << line << ": key '" << key << "': " << what;
    throw Error(ErrorKind::ConfigParse, os.str());
  }

  double number(const std::string& v) const {
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(v, &used);
    } catch (const std::exception&) {
      fail("expected a number, got '" + v + "'");
    }
    if (trim(v.substr(used)).size()) fail("expected a number, got '" + v + "'");
    return d;
  }

  int integer(const std::string& v) const {
    const double d = number(v);
    if (d != static_cast<int>(d)) fail("expected an integer, got '" + v + "'");
    return static_cast<int>(d);
  }

  std::vector<double> list(const std::string& v) const {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(v);
    while (std::getline(ss, item, ',')) {
      std::stringstream ws(item);
      std::string tok;
      while (ws >> tok) out.push_back(number(tok));
    }
    return out;
  }

  bool boolean(const std::string& v) const {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail("expected true or false, got '" + v + "'");
  }
};

std::string known(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in, const std::string& source) {
  ExperimentConfig cfg;
  std::string raw;
  int line = 0;
  double lmin = 0.0, lmax = 0.0;
  int lcount = 0;
  bool have_range = false, have_list = false;
  int lambdas_line = 0;
  int res_line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    const std::string key = trim(text.substr(0, eq));
    const Ctx ctx{source, line, key};
    if (eq == std::string::npos) ctx.fail("expected 'key = value'");
    const std::string val = trim(text.substr(eq + 1));
    if (val.empty()) ctx.fail("empty value");

    if (key == "phi.name") {
      const auto names = catalog_names();
      if (std::find(names.begin(), names.end(), val) == names.end())
        ctx.fail("unknown N-function '" + val + "'; catalog: " + known(names));
      cfg.phi_name = val;
    } else if (key.rfind("phi.", 0) == 0) {
      cfg.phi_params[key.substr(4)] = ctx.number(val);
    } else if (key == "f.name") {
      const auto names = model_f_names();
      if (std::find(names.begin(), names.end(), val) == names.end())
        ctx.fail("unknown nonlinearity '" + val + "'; models: " + known(names));
      cfg.f_name = val;
    } else if (key.rfind("f.", 0) == 0) {
      cfg.f_params[key.substr(2)] = ctx.number(val);
    } else if (key == "mesh.dim") {
      cfg.dim = ctx.integer(val);
      if (cfg.dim != 1 && cfg.dim != 2) ctx.fail("dim must be 1 or 2");
    } else if (key == "mesh.extent") {
      const auto v = ctx.list(val);
      if (v.size() == 2) {
        cfg.extent.x0 = v[0];
        cfg.extent.x1 = v[1];
      } else if (v.size() == 4) {
        cfg.extent = {v[0], v[1], v[2], v[3]};
      } else {
        ctx.fail("expected 'a, b' or 'x0, x1, y0, y1'");
      }
    } else if (key == "mesh.resolution") {
      cfg.resolution = ctx.integer(val);
      res_line = line;
    } else if (key == "lambdas") {
      cfg.lambdas = ctx.list(val);
      have_list = true;
      lambdas_line = line;
    } else if (key == "lambdas.min") {
      lmin = ctx.number(val);
      have_range = true;
      lambdas_line = line;
    } else if (key == "lambdas.max") {
      lmax = ctx.number(val);
      have_range = true;
    } else if (key == "lambdas.count") {
      lcount = ctx.integer(val);
      have_range = true;
    } else if (key == "lambdas.relative") {
      cfg.lambdas_relative = ctx.boolean(val);
    } else if (key == "profile") {
      if (val == "T1")
        cfg.profile = Profile::T1;
      else if (val == "T2")
        cfg.profile = Profile::T2;
      else
        ctx.fail("profile must be T1 or T2");
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(ctx.integer(val));
    } else if (key == "workers") {
      cfg.workers = std::max(1, ctx.integer(val));
    } else if (key == "output_dir") {
      cfg.output_dir = val;
    } else if (key == "tol.residual") {
      cfg.solver.tol = ctx.number(val);
    } else if (key == "tol.level") {
      cfg.solver.level_tol = ctx.number(val);
    } else if (key == "tol.order") {
      cfg.solver.order_tol = ctx.number(val);
    } else if (key == "tol.distinct") {
      cfg.solver.distinct_tol = ctx.number(val);
    } else if (key == "tol.identity") {
      cfg.solver.identity_tol = ctx.number(val);
    } else if (key == "solver.path_points") {
      cfg.solver.path_points = ctx.integer(val);
    } else if (key == "solver.plateau_levels") {
      cfg.solver.plateau_levels = ctx.integer(val);
    } else if (key == "solver.geometry_samples") {
      cfg.solver.geometry_samples = ctx.integer(val);
    } else if (key == "solver.random_starts") {
      cfg.solver.random_starts = ctx.integer(val);
    } else if (key == "solver.mp_max_iter") {
      cfg.solver.mp_max_iter = ctx.integer(val);
    } else if (key == "solver.t1") {
      cfg.solver.t1 = ctx.number(val);
    } else {
      ctx.fail("unknown key");
    }
  }

  const std::string lkey = "lambdas";
  const Ctx end{source, lambdas_line ? lambdas_line : line, lkey};
  if (have_list && have_range) end.fail("give either a list or min/max/count, not both");
  if (have_range) {
    if (lcount < 1 || !(lmax >= lmin)) end.fail("need lambdas.count >= 1 and lambdas.max >= lambdas.min");
    for (int k = 0; k < lcount; ++k)
      cfg.lambdas.push_back(lcount == 1 ? lmin : lmin + (lmax - lmin) * k / (lcount - 1));
  }
  if (cfg.lambdas.empty()) end.fail("no lambda values");
  for (const double l : cfg.lambdas)
    if (!(l > 0.0)) end.fail("lambda values must be > 0");
  const std::string rkey = "mesh.resolution";
  if (cfg.resolution < 4) Ctx{source, res_line, rkey}.fail("resolution must be >= 4");
  const std::string pkey = "phi.name";
  if (cfg.phi_name.empty()) Ctx{source, line, pkey}.fail("missing");
  const std::string fkey = "f.name";
  if (cfg.f_name.empty()) Ctx{source, line, fkey}.fail("missing");
  cfg.solver.seed = cfg.seed;
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ConfigParse, path + ": cannot open");
  return parse_config(in, path);
}

NFunction config_phi(const ExperimentConfig& cfg) {
  try {
    return catalog(cfg.phi_name, cfg.phi_params);
  } catch (const Error& e) {
    throw Error(ErrorKind::ConfigParse, "phi: " + std::string(e.what()));
  }
}

NonlinearityPtr config_f(const ExperimentConfig& cfg) {
  try {
    return model_f(cfg.f_name, cfg.f_params);
  } catch (const Error& e) {
    throw Error(ErrorKind::ConfigParse, "f: " + std::string(e.what()));
  }
}

MeshPtr config_mesh(const ExperimentConfig& cfg) {
  try {
    return make_mesh(cfg.dim, cfg.extent, cfg.resolution);
  } catch (const Error& e) {
    throw Error(ErrorKind::ConfigParse, "mesh: " + std::string(e.what()));
  }
}

}  // namespace orlicz
