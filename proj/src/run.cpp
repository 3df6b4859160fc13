#include "oscbath/run.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oscbath/correlators.hpp"
#include "oscbath/equilibrium.hpp"
#include "oscbath/errors.hpp"
#include "oscbath/matfun.hpp"
#include "oscbath/propagator.hpp"
#include "oscbath/reduced.hpp"

namespace oscbath {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double purity_of(const ReducedGaussian& g, double hbar) {
  return 0.5 * hbar / std::sqrt(g.var_y * g.var_p - g.cov_yp * g.cov_yp);
}

ForceProfile build_profile(const ForceSpec& f, int dim, double t) {
  switch (f.kind) {
    case ForceSpec::Kind::Constant:
      return ForceProfile::main_only([&](double) { return f.value; }, dim, t,
                                     f.n_samples);
    case ForceSpec::Kind::Sinusoid:
      return ForceProfile::main_only(
          [&](double tau) {
            return f.amplitude * std::sin(f.frequency * tau + f.phase);
          },
          dim, t, f.n_samples);
    case ForceSpec::Kind::Samples: {
      ForceProfile p;
      p.samples = Matrix::Zero(dim, static_cast<Eigen::Index>(f.values.size()));
      for (std::size_t i = 0; i < f.values.size(); ++i)
        p.samples(0, static_cast<Eigen::Index>(i)) = f.values[i];
      p.step = f.step;
      return p;
    }
    case ForceSpec::Kind::None:
      break;
  }
  throw ConfigError("no force specified");
}

std::vector<double> grid_times(const TimeGrid& tg) {
  std::vector<double> ts;
  ts.reserve(static_cast<std::size_t>(tg.steps) + 1);
  for (int k = 0; k <= tg.steps; ++k)
    ts.push_back(tg.t_start + k * (tg.t_end - tg.t_start) / tg.steps);
  return ts;
}

double require_beta(const RunConfig& cfg) {
  if (!cfg.beta) throw ConfigError("this command requires 'beta'");
  return *cfg.beta;
}

Table run_spectrum(const RunConfig& cfg) {
  const Spectrum sp = spectrum(build_B(cfg.model));
  Table t;
  t.columns = {"alpha", "z", "X0", "char_residual"};
  for (Eigen::Index a = 0; a < sp.z.size(); ++a)
    t.rows.push_back({static_cast<double>(a), sp.z(a), sp.X(0, a),
                      std::abs(char_g(cfg.model, sp.z(a) * sp.z(a)))});
  return t;
}

Table run_evolve(const RunConfig& cfg) {
  const Model& m = cfg.model;
  const Spectrum sp = spectrum(build_B(m));
  GaussianState st0;
  if (m.n_baths() > 0) {
    st0 = thermal_bath_state(m, require_beta(cfg), cfg.initial);
  } else {
    st0.mean = Vector::Zero(2);
    st0.mean << cfg.initial.mean_y, cfg.initial.mean_p;
    st0.cov = Matrix::Zero(2, 2);
    st0.cov << cfg.initial.var_y, cfg.initial.cov_yp, cfg.initial.cov_yp,
        cfg.initial.var_p;
  }
  check_state(st0, m.hbar);

  Table t;
  t.columns = {"t", "mean_y", "mean_p", "var_y", "var_p", "cov_yp", "purity"};
  for (const double tv : grid_times(cfg.time_grid)) {
    const MatFun mf = matfun_at(sp, tv);
    GaussianState st;
    if (cfg.force.kind != ForceSpec::Kind::None && tv > 0.0) {
      const ForceProfile profile = build_profile(cfg.force, m.dim(), tv);
      const DriveDisplacements dd = drive_displacements(sp, profile, tv);
      Displacements drive{dd.R, dd.Rdot};
      st = evolve_state(st0, mf, &drive);
    } else {
      st = evolve_state(st0, mf);
    }
    const ReducedGaussian g = reduce_to_main(st);
    t.rows.push_back({tv, g.mean_y, g.mean_p, g.var_y, g.var_p, g.cov_yp,
                      purity_of(g, m.hbar)});
  }
  return t;
}

Table run_equilibrium(const RunConfig& cfg) {
  const Spectrum sp = spectrum(build_B(cfg.model));
  std::vector<double> betas;
  if (cfg.beta_grid) {
    const BetaGrid& bg = *cfg.beta_grid;
    for (int k = 0; k <= bg.steps; ++k)
      betas.push_back(bg.start + k * (bg.end - bg.start) / bg.steps);
  } else {
    betas.push_back(require_beta(cfg));
  }
  Table t;
  t.columns = {"beta", "logZ", "eta", "y2", "p2", "purity"};
  for (const double b : betas) {
    const ThermalReport rep = thermal_report(sp, b, cfg.model.hbar);
    t.rows.push_back({rep.beta, rep.logZ, rep.eta, rep.mean_sq_y,
                      rep.mean_sq_p,
                      0.5 * cfg.model.hbar /
                          std::sqrt(rep.mean_sq_y * rep.mean_sq_p)});
  }
  return t;
}

Table run_kernel(const RunConfig& cfg) {
  const Spectrum sp = spectrum(build_B(cfg.model));
  const double beta = require_beta(cfg);
  Table t;
  t.columns = {"t", "b1", "b2", "b3", "b4", "a11", "a12", "a22"};
  for (const double tv : grid_times(cfg.time_grid)) {
    const ReducedKernel k = kernel_J_coeffs(cfg.model, sp, beta, tv);
    t.rows.push_back({tv, k.b1, k.b2, k.b3, k.b4, k.a11, k.a12, k.a22});
  }
  return t;
}

Table run_propagate(const RunConfig& cfg) {
  const Model& m = cfg.model;
  const Spectrum sp = spectrum(build_B(m));
  const double tv = cfg.time_grid.t_end;

  PropagatorForm form;
  if (cfg.force.kind != ForceSpec::Kind::None) {
    const ForceProfile profile = build_profile(cfg.force, m.dim(), tv);
    form = propagator_form_forced(sp, profile, tv, m.hbar);
  } else {
    form = propagator_form(sp, tv, m.hbar);
  }

  Vector grid(cfg.grid.points);
  for (int i = 0; i < cfg.grid.points; ++i)
    grid(i) = cfg.grid.y_min +
              i * (cfg.grid.y_max - cfg.grid.y_min) / (cfg.grid.points - 1);

  Table t;
  t.columns = {"y", "yprime", "re_K", "im_K"};
  Vector y = Vector::Zero(m.dim());
  Vector yp = Vector::Zero(m.dim());
  for (int i = 0; i < cfg.grid.points; ++i) {
    for (int j = 0; j < cfg.grid.points; ++j) {
      y(0) = grid(i);
      yp(0) = grid(j);
      const Complex K = evaluate_K(form, y, yp);
      t.rows.push_back({grid(i), grid(j), K.real(), K.imag()});
    }
  }
  return t;
}

Table run_correlate(const RunConfig& cfg) {
  const Spectrum sp = spectrum(build_B(cfg.model));
  if (cfg.correlators.empty())
    throw ConfigError("'correlate' requires a 'correlators' array");
  Table t;
  t.columns = {"request", "n_points", "re", "im"};
  for (std::size_t i = 0; i < cfg.correlators.size(); ++i) {
    const CorrelatorSpec& spec = cfg.correlators[i];
    const Endpoint ep{spec.y, spec.yprime, spec.t};
    const auto n = spec.times.size();
    const bool closed =
        spec.method == "closed" || (spec.method == "auto" && n <= 2);
    Complex value;
    if (closed && n == 1) {
      value = one_point(sp, ep, spec.times[0], spec.indices.at(0));
    } else if (closed && n == 2) {
      value = two_point(sp, ep, spec.times[0], spec.indices.at(0),
                        spec.times[1], spec.indices.at(1), cfg.model.hbar);
    } else if (closed) {
      throw ConfigError("closed-form correlators exist only for 1 or 2 points");
    } else {
      CorrelatorRequest req;
      req.times = spec.times;
      req.indices = spec.indices;
      req.endpoint = ep;
      req.fd_step = spec.fd_step;
      req.grid_step = spec.grid_step;
      value = n_point_fd(sp, req, cfg.model.hbar);
    }
    t.rows.push_back({static_cast<double>(i), static_cast<double>(n),
                      value.real(), value.imag()});
  }
  return t;
}

} // namespace

Table run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Spectrum: return run_spectrum(cfg);
    case Command::Evolve: return run_evolve(cfg);
    case Command::Equilibrium: return run_equilibrium(cfg);
    case Command::Kernel: return run_kernel(cfg);
    case Command::Propagate: return run_propagate(cfg);
    case Command::Correlate: return run_correlate(cfg);
  }
  throw ConfigError("unknown command");
}

std::string to_csv(const Table& t) {
  std::ostringstream out;
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    out << (c ? "," : "") << t.columns[c];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "," : "") << fmt(row[c]);
    out << "\n";
  }
  return out.str();
}

std::string to_json(const Table& t) {
  std::ostringstream out;
  out << "{\n  \"columns\": [";
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    out << (c ? ", " : "") << '"' << t.columns[c] << '"';
  out << "],\n  \"rows\": [\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out << "    {";
    for (std::size_t c = 0; c < t.rows[r].size(); ++c)
      out << (c ? ", " : "") << '"' << t.columns[c]
          << "\": " << fmt(t.rows[r][c]);
    out << (r + 1 < t.rows.size() ? "},\n" : "}\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

int run(const RunConfig& cfg) {
  const Table t = run_command(cfg);
  const std::string text =
      cfg.format == OutputFormat::Csv ? to_csv(t) : to_json(t);
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + cfg.out_path + "'");
    out << text;
  }
  if (cfg.verbose)
    std::cerr << "wrote " << t.rows.size() << " rows to "
              << (cfg.out_path.empty() ? "<stdout>" : cfg.out_path) << "\n";
  return 0;
}

} // namespace oscbath
