#include "dwl/cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dwl/errors.hpp"

namespace dwl::cli {

std::vector<landau::PhysParams> RunConfig::param_sets() const {
  if (physical()) {
    landau::PhysParams p;
    p.m = m.value_or(1.0);
    p.eB = eB.value_or(1.0);
    p.kz = kz.value_or(0.0);
    p.ky = ky.value_or(0.0);
    return {p};
  }
  std::vector<landau::PhysParams> out;
  for (double e : eps)
    for (double k : kappa) out.push_back(landau::PhysParams::from_dimensionless(e, k));
  return out;
}

landau::Spin RunConfig::spin_value() const { return spin == "-" ? landau::Spin::Down : landau::Spin::Up; }

landau::Parity RunConfig::parity_value() const {
  return r == 2 ? landau::Parity::Negative : landau::Parity::Positive;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig cfg;
  CLI::App app{"Dirac-spinor Wigner functions for Landau levels", "dwl"};
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
  app.require_subcommand(1, 1);

  double m = 1.0, eB = 1.0, kz = 0.0, ky = 0.0;
  app.add_option("--n", cfg.n, "Landau level (>= 1)");
  app.add_option("--n-max", cfg.n_max, "Largest level in sweeps and verify");
  app.add_option("--r", cfg.r, "Parity branch")->check(CLI::IsMember({1, 2}));
  app.add_option("--spin", cfg.spin, "Spin label")->check(CLI::IsMember({"+", "-"}));
  app.add_option("--eps", cfg.eps, "Comma list of eB/m^2")->delimiter(',');
  app.add_option("--kappa", cfg.kappa, "Comma list of kz^2/m^2")->delimiter(',');
  app.add_option("--m", m, "Mass");
  app.add_option("--eB", eB, "Field strength");
  app.add_option("--kz", kz, "Longitudinal momentum");
  app.add_option("--ky", ky, "Transverse momentum (orbit centre)");
  app.add_option("--grid-points", cfg.grid_points, "Points per phase-space axis");
  app.add_option("--grid-pad", cfg.grid_pad, "Gaussian margin beyond the turning point");
  app.add_flag("--with-quadrature", cfg.with_quadrature, "Sweep: evaluate the quadrature routes too");
  app.add_option("--quantity", cfg.quantity, "Field: purity|concurrence|density");
  app.add_option("--concurrence-route", cfg.concurrence_route, "Field: closed|trace")
      ->check(CLI::IsMember({"closed", "trace"}));
  app.add_option("--format", cfg.format, "csv|json|ppm")->check(CLI::IsMember({"csv", "json", "ppm"}));
  app.add_option("--out", cfg.out, "Output path (default stdout)");
  app.add_option("--probe-points", cfg.probe_points, "Wigner dump: probe points per axis");
  app.add_option("--probe-extent", cfg.probe_extent, "Wigner dump: probes span [-e, e]^2");
  app.add_option("--tolerance-scale", cfg.tolerance_scale, "Verify: multiply every tolerance");

  for (const char* name : {"sweep", "field", "verify", "wigner-dump"}) {
    app.add_subcommand(name)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (app.count("--m")) cfg.m = m;
  if (app.count("--eB")) cfg.eB = eB;
  if (app.count("--kz")) cfg.kz = kz;
  if (app.count("--ky")) cfg.ky = ky;
  if (cfg.physical() && (app.count("--eps") || app.count("--kappa")))
    throw UsageError("give physics either as --eps/--kappa or as --m/--eB/--kz/--ky, not both");
  return cfg;
}

void validate(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be >= 1");
  if (cfg.n_max < 1) throw UsageError("--n-max must be >= 1");
  if (cfg.eps.empty()) throw UsageError("--eps list is empty");
  if (cfg.kappa.empty()) throw UsageError("--kappa list is empty");
  for (double e : cfg.eps)
    if (!(e > 0.0) || !std::isfinite(e)) throw UsageError("--eps values must be positive");
  for (double k : cfg.kappa)
    if (!(k >= 0.0) || !std::isfinite(k)) throw UsageError("--kappa values must be non-negative");
  if (cfg.physical()) {
    try {
      cfg.param_sets().front().validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (cfg.grid_points < 16) throw UsageError("--grid-points must be >= 16");
  if (!(cfg.grid_pad > 0.0)) throw UsageError("--grid-pad must be positive");
  if (cfg.probe_points < 1) throw UsageError("--probe-points must be >= 1");
  if (!(cfg.probe_extent > 0.0)) throw UsageError("--probe-extent must be positive");
  if (!(cfg.tolerance_scale > 0.0)) throw UsageError("--tolerance-scale must be positive");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto cfg = parse_args(argc, argv, out);
    if (!cfg) return kOk;
    validate(*cfg);

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg->out.empty()) {
      file.open(cfg->out, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError("cannot open " + cfg->out + " for writing");
      sink = &file;
    }

    int code = kOk;
    if (cfg->command == "sweep") code = cmd_sweep(*cfg, *sink);
    else if (cfg->command == "field") code = cmd_field(*cfg, *sink);
    else if (cfg->command == "verify") code = cmd_verify(*cfg, *sink);
    else code = cmd_wigner_dump(*cfg, *sink);

    sink->flush();
    if (!*sink) throw IoError("write failed");
    return code;
  } catch (const UsageError& e) {
    err << "dwl: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "dwl: " << e.what() << "\n";
    return kIo;
  } catch (const std::logic_error& e) {
    err << "dwl: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "dwl: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

}  // namespace dwl::cli
