#include "oscbath/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "oscbath/errors.hpp"
#include "oscbath/ohmic.hpp"

namespace oscbath {

namespace {

using nlohmann::json;

double get_number(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number())
    throw ConfigError("field '" + key + "' must be a number");
  return j.at(key).get<double>();
}

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ConfigError("missing required field '" + key + "'");
  if (!j.at(key).is_number())
    throw ConfigError("field '" + key + "' must be a number");
  return j.at(key).get<double>();
}

int get_int(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer())
    throw ConfigError("field '" + key + "' must be an integer");
  return j.at(key).get<int>();
}

Model parse_model(const json& j) {
  if (!j.contains("model")) throw ConfigError("missing required field 'model'");
  const json& jm = j.at("model");
  if (!jm.is_object()) throw ConfigError("field 'model' must be an object");
  const double omega0 = get_number(jm, "omega0", 1.0);
  const double hbar = get_number(jm, "hbar", 1.0);
  if (jm.contains("baths") && jm.contains("ohmic"))
    throw ConfigError("'model' may have 'baths' or 'ohmic', not both");

  std::vector<BathMode> baths;
  if (jm.contains("ohmic")) {
    const json& jo = jm.at("ohmic");
    OhmicSpec spec;
    spec.eta = require_number(jo, "eta");
    spec.cutoff = require_number(jo, "cutoff");
    spec.n_modes = get_int(jo, "n_modes", spec.n_modes);
    spec.omega_max = require_number(jo, "omega_max");
    baths = discretize_ohmic(spec, omega0);
  } else if (jm.contains("baths")) {
    const json& jb = jm.at("baths");
    if (!jb.is_array()) throw ConfigError("field 'baths' must be an array");
    for (const json& mode : jb) {
      BathMode bm;
      bm.omega = require_number(mode, "omega");
      bm.g = require_number(mode, "g");
      baths.push_back(bm);
    }
  }
  return validate_model(omega0, std::move(baths), hbar);
}

Vector parse_vector(const json& j, const std::string& key, int expected) {
  if (!j.contains(key)) throw ConfigError("missing required field '" + key + "'");
  const json& ja = j.at(key);
  if (!ja.is_array()) throw ConfigError("field '" + key + "' must be an array");
  if (static_cast<int>(ja.size()) != expected)
    throw ConfigError("field '" + key + "' must have " +
                      std::to_string(expected) + " entries");
  Vector v(expected);
  for (int i = 0; i < expected; ++i) {
    if (!ja.at(static_cast<std::size_t>(i)).is_number())
      throw ConfigError("field '" + key + "' must contain numbers");
    v(i) = ja.at(static_cast<std::size_t>(i)).get<double>();
  }
  return v;
}

ForceSpec parse_force(const json& j) {
  ForceSpec f;
  if (!j.contains("force")) return f;
  const json& jf = j.at("force");
  if (!jf.contains("type") || !jf.at("type").is_string())
    throw ConfigError("field 'force.type' must be a string");
  const std::string type = jf.at("type").get<std::string>();
  f.n_samples = get_int(jf, "n_samples", f.n_samples);
  if (f.n_samples < 3) throw ConfigError("force.n_samples must be >= 3");
  if (type == "constant") {
    f.kind = ForceSpec::Kind::Constant;
    f.value = require_number(jf, "value");
  } else if (type == "sinusoid") {
    f.kind = ForceSpec::Kind::Sinusoid;
    f.amplitude = require_number(jf, "amplitude");
    f.frequency = require_number(jf, "frequency");
    f.phase = get_number(jf, "phase", 0.0);
  } else if (type == "samples") {
    f.kind = ForceSpec::Kind::Samples;
    f.step = require_number(jf, "step");
    if (!(f.step > 0.0)) throw ConfigError("force.step must be positive");
    if (!jf.contains("values") || !jf.at("values").is_array())
      throw ConfigError("field 'force.values' must be an array");
    for (const json& v : jf.at("values")) {
      if (!v.is_number()) throw ConfigError("force.values must contain numbers");
      f.values.push_back(v.get<double>());
    }
    if (f.values.size() < 3)
      throw ConfigError("force.values needs at least 3 samples");
  } else {
    throw ConfigError("unknown force.type '" + type + "'");
  }
  return f;
}

} // namespace

Command parse_command(const std::string& name) {
  if (name == "spectrum") return Command::Spectrum;
  if (name == "evolve") return Command::Evolve;
  if (name == "equilibrium") return Command::Equilibrium;
  if (name == "kernel") return Command::Kernel;
  if (name == "propagate") return Command::Propagate;
  if (name == "correlate") return Command::Correlate;
  throw ConfigError("unknown command '" + name + "'");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("unknown output format '" + name + "'");
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  RunConfig cfg;
  cfg.model = parse_model(j);
  const int dim = cfg.model.dim();

  if (j.contains("command"))
    cfg.command = parse_command(j.at("command").get<std::string>());

  if (j.contains("time_grid")) {
    const json& jt = j.at("time_grid");
    cfg.time_grid.t_start = get_number(jt, "t_start", 0.0);
    cfg.time_grid.t_end = require_number(jt, "t_end");
    cfg.time_grid.steps = get_int(jt, "steps", 1);
    if (cfg.time_grid.steps < 1) throw ConfigError("time_grid.steps must be >= 1");
    if (!(cfg.time_grid.t_end > cfg.time_grid.t_start) ||
        cfg.time_grid.t_start < 0.0)
      throw ConfigError("time_grid must satisfy t_end > t_start >= 0");
  }

  if (j.contains("beta")) {
    if (!j.at("beta").is_number())
      throw ConfigError("field 'beta' must be a number");
    cfg.beta = j.at("beta").get<double>();
    if (!(*cfg.beta > 0.0)) throw ConfigError("beta must be positive");
  }
  if (j.contains("beta_grid")) {
    const json& jb = j.at("beta_grid");
    BetaGrid bg;
    bg.start = require_number(jb, "start");
    bg.end = require_number(jb, "end");
    bg.steps = get_int(jb, "steps", 1);
    if (!(bg.start > 0.0) || !(bg.end > bg.start) || bg.steps < 1)
      throw ConfigError("beta_grid must satisfy end > start > 0, steps >= 1");
    cfg.beta_grid = bg;
  }

  cfg.force = parse_force(j);

  if (j.contains("grid")) {
    const json& jg = j.at("grid");
    cfg.grid.y_min = get_number(jg, "y_min", cfg.grid.y_min);
    cfg.grid.y_max = get_number(jg, "y_max", cfg.grid.y_max);
    cfg.grid.points = get_int(jg, "points", cfg.grid.points);
    if (!(cfg.grid.y_max > cfg.grid.y_min) || cfg.grid.points < 2)
      throw ConfigError("grid must satisfy y_max > y_min and points >= 2");
  }

  if (j.contains("initial_state")) {
    const json& ji = j.at("initial_state");
    cfg.initial.mean_y = get_number(ji, "mean_y", 0.0);
    cfg.initial.mean_p = get_number(ji, "mean_p", 0.0);
    cfg.initial.var_y = get_number(ji, "var_y", 0.5 * cfg.model.hbar);
    cfg.initial.var_p = get_number(ji, "var_p", 0.5 * cfg.model.hbar);
    cfg.initial.cov_yp = get_number(ji, "cov_yp", 0.0);
  } else {
    cfg.initial.var_y = 0.5 * cfg.model.hbar;
    cfg.initial.var_p = 0.5 * cfg.model.hbar;
  }

  if (j.contains("correlators")) {
    const json& jc = j.at("correlators");
    if (!jc.is_array()) throw ConfigError("field 'correlators' must be an array");
    for (const json& jr : jc) {
      CorrelatorSpec spec;
      if (!jr.contains("times") || !jr.at("times").is_array())
        throw ConfigError("field 'correlators[].times' must be an array");
      for (const json& v : jr.at("times")) spec.times.push_back(v.get<double>());
      if (!jr.contains("indices") || !jr.at("indices").is_array())
        throw ConfigError("field 'correlators[].indices' must be an array");
      for (const json& v : jr.at("indices")) spec.indices.push_back(v.get<int>());
      spec.t = require_number(jr, "t");
      spec.y = parse_vector(jr, "y", dim);
      spec.yprime = parse_vector(jr, "yprime", dim);
      if (jr.contains("method"))
        spec.method = jr.at("method").get<std::string>();
      if (spec.method != "auto" && spec.method != "closed" &&
          spec.method != "fd")
        throw ConfigError("correlators[].method must be auto, closed or fd");
      spec.fd_step = get_number(jr, "fd_step", spec.fd_step);
      spec.grid_step = get_number(jr, "grid_step", spec.grid_step);
      cfg.correlators.push_back(std::move(spec));
    }
  }

  if (j.contains("output")) {
    const json& jo = j.at("output");
    if (jo.contains("path")) cfg.out_path = jo.at("path").get<std::string>();
    if (jo.contains("format"))
      cfg.format = parse_format(jo.at("format").get<std::string>());
  }
  if (j.contains("verbose")) cfg.verbose = j.at("verbose").get<bool>();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

} // namespace oscbath
