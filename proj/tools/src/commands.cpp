#include <json.hpp>

#include <cmath>
#include <ostream>

#include "dwl/cli/cli.hpp"
#include "dwl/cli/output.hpp"
#include "dwl/quantifiers.hpp"
#include "dwl/wigner.hpp"

namespace dwl::cli {

namespace {

using json = nlohmann::ordered_json;

std::string resolve_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  const std::string fmt = cfg.format.empty() ? *allowed.begin() : cfg.format;
  for (const char* a : allowed)
    if (fmt == a) return fmt;
  throw UsageError("--format " + fmt + " is not available for " + cfg.command);
}

landau::PhysParams single_params(const RunConfig& cfg) {
  const auto sets = cfg.param_sets();
  if (sets.size() != 1) throw UsageError(cfg.command + " takes a single (eps, kappa) pair");
  return sets.front();
}

json matrix_json(const ComplexMatrix4& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const std::string fmt = resolve_format(cfg, {"csv", "json"});
  std::vector<std::string> header{"n", "eps", "kappa", "M_closed"};
  if (cfg.with_quadrature) header.push_back("M_parts");
  for (const char* h : {"I_sp", "I_xk", "purity"}) header.emplace_back(h);

  std::vector<std::vector<double>> rows;
  for (int n = 1; n <= cfg.n_max; ++n) {
    const auto grid = numerics::default_grid(n, cfg.grid_pad, cfg.grid_points);
    for (const auto& p : cfg.param_sets()) {
      const landau::LandauState st(n, cfg.parity_value(), cfg.spin_value(), p);
      std::vector<double> row{double(n), p.eps(), p.kappa(), quant::mutual_information(n, p.eps(), p.kappa())};
      if (cfg.with_quadrature) {
        const auto parts = quant::mutual_information_parts(st, grid);
        row.insert(row.end(), {parts.value, parts.entropy_sp, parts.entropy_xk, parts.purity});
      } else {
        // Landau eigenstates: coincident entropies, unit purity
        const double isp = quant::entropy_sp_closed(st);
        row.insert(row.end(), {isp, isp, 1.0});
      }
      rows.push_back(std::move(row));
    }
  }

  if (fmt == "csv") {
    write_csv_row(out, header);
    for (const auto& r : rows) write_csv_row(out, r);
  } else {
    json doc;
    doc["columns"] = header;
    json jr = json::array();
    for (const auto& r : rows) {
      json o;
      for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
      jr.push_back(o);
    }
    doc["rows"] = jr;
    out << doc.dump(2) << '\n';
  }
  return kOk;
}

int cmd_field(const RunConfig& cfg, std::ostream& out) {
  const std::string fmt = resolve_format(cfg, {"csv", "ppm"});
  const landau::LandauState st(cfg.n, cfg.parity_value(), cfg.spin_value(), single_params(cfg));
  const double eB = st.params().eB;

  std::function<double(PhasePoint)> f;
  if (cfg.quantity == "purity") {
    f = [&](PhasePoint p) { return quant::local_purity(st, p) / eB; };
  } else if (cfg.quantity == "concurrence") {
    if (cfg.concurrence_route == "trace")
      f = [&](PhasePoint p) { return quant::concurrence_sq_trace(st, p) / eB; };
    else
      f = [&](PhasePoint p) { return quant::concurrence_sq_field(st, p) / eB; };
  } else if (cfg.quantity == "density") {
    const double root = std::sqrt(eB);
    f = [&, root](PhasePoint p) { return wigner::density(st, p) / root; };
  } else if (cfg.quantity == "wigner") {
    throw UsageError("field: matrix-valued output is not a scalar field; use wigner-dump");
  } else {
    throw UsageError("field: unknown quantity '" + cfg.quantity + "' (purity|concurrence|density)");
  }

  const int np = cfg.grid_points;
  const double half = numerics::default_half_width(cfg.n, cfg.grid_pad);
  const auto axis = numerics::linspace(-half, half, np);
  std::vector<double> values(static_cast<std::size_t>(np) * np);  // [i_s * np + i_k]
  numerics::parallel_for(static_cast<std::size_t>(np), [&](std::size_t i) {
    for (int j = 0; j < np; ++j) values[i * np + j] = f(PhasePoint{axis[i], axis[j]});
  });

  if (fmt == "csv") {
    write_csv_row(out, std::vector<std::string>{"s", "k", "value"});
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j) write_csv_row(out, std::vector<double>{axis[i], axis[j], values[i * np + j]});
  } else {
    // image x = s left to right, y = k top (max) to bottom
    std::vector<double> image(values.size());
    for (int y = 0; y < np; ++y)
      for (int x = 0; x < np; ++x) image[y * np + x] = values[x * np + (np - 1 - y)];
    write_ppm(out, image, np, np);
  }
  return kOk;
}

int cmd_wigner_dump(const RunConfig& cfg, std::ostream& out) {
  resolve_format(cfg, {"json"});
  const auto params = single_params(cfg);
  const landau::LandauState st(cfg.n, cfg.parity_value(), cfg.spin_value(), params);
  const auto psi = [&](double s) { return landau::spinor_at_s(st, s); };
  const auto ugrid = wigner::default_u_grid(cfg.n);

  const int np = cfg.probe_points;
  const auto axis = np == 1 ? std::vector<double>{0.0}
                            : numerics::linspace(-cfg.probe_extent, cfg.probe_extent, np);
  const std::size_t total = static_cast<std::size_t>(np) * np;
  std::vector<ComplexMatrix4> analytic(total), oracle(total);
  numerics::parallel_for(total, [&](std::size_t idx) {
    const PhasePoint p{axis[idx / np], axis[idx % np]};
    analytic[idx] = wigner::omega_matrix(st, p);
    oracle[idx] = wigner::weyl_transform(psi, p, ugrid);
  });

  json doc;
  doc["state"] = {{"n", cfg.n},       {"r", cfg.r},         {"spin", cfg.spin},
                  {"eps", params.eps()}, {"kappa", params.kappa()}, {"eB", params.eB}};
  doc["probe_points"] = np;
  doc["probe_extent"] = cfg.probe_extent;
  json points = json::array();
  double worst = 0.0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    const double diff = (analytic[idx] - oracle[idx]).max_abs();
    worst = std::max(worst, diff);
    json p;
    p["s"] = axis[idx / np];
    p["k"] = axis[idx % np];
    p["analytic"] = matrix_json(analytic[idx]);
    p["oracle"] = matrix_json(oracle[idx]);
    p["max_abs_diff"] = diff;
    points.push_back(std::move(p));
  }
  doc["max_abs_diff"] = worst;
  doc["points"] = std::move(points);
  out << doc.dump(2) << '\n';
  return kOk;
}

}  // namespace dwl::cli
