#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwl/cli/cli.hpp"
#include "dwl/wigner.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "dwl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dwl::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

struct ThreadsEnv {
  explicit ThreadsEnv(const char* v) { setenv("DWL_THREADS", v, 1); }
  ~ThreadsEnv() { unsetenv("DWL_THREADS"); }
};

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dwl_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sweep over levels and couplings") {
  const auto r = call({"sweep", "--n-max", "20", "--eps", "0.1,1,10", "--kappa", "0.01"});
  REQUIRE(r.code == 0);
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  CHECK(header == "n,eps,kappa,M_closed,I_sp,I_xk,purity");
  CHECK(rows.size() == 60);
  for (const auto& row : rows) {
    const double n = row[0], eps = row[1];
    const double limit = 2 * n * eps / (1 + 2 * n * eps);
    CHECK(row[3] <= limit);
    CHECK(limit - row[3] < 0.005);
  }
  CHECK(r.out.back() == '\n');
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("sweep row at unit couplings") {
  const auto r = call({"sweep", "--n-max", "1", "--eps", "1", "--kappa", "1"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(rows[0][3] - 0.555556) < 1e-6);
  CHECK(r.out.find("0.555555555555556") != std::string::npos);
}

TEST_CASE("sweep with quadrature") {
  const auto r = call({"sweep", "--n-max", "2", "--eps", "1", "--kappa", "1", "--with-quadrature", "--grid-points", "256"});
  REQUIRE(r.code == 0);
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  CHECK(header == "n,eps,kappa,M_closed,M_parts,I_sp,I_xk,purity");
  for (const auto& row : rows) {
    CHECK(std::abs(row[3] - row[4]) < 1e-6);
    CHECK(std::abs(row[5] - row[6]) < 1e-6);
    CHECK(std::abs(row[7] - 1.0) < 1e-6);
  }
}

TEST_CASE("sweep json") {
  const auto r = call({"sweep", "--n-max", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][0]["M_closed"].get<double>() == doctest::Approx(5.0 / 9.0));
}

TEST_CASE("sweep output does not depend on the thread count") {
  const std::vector<std::string> args{"sweep", "--n-max", "3", "--eps", "0.1,10", "--kappa", "0,100",
                                      "--with-quadrature", "--grid-points", "128"};
  std::string one, four, automatic;
  {
    ThreadsEnv env("1");
    one = call(args).out;
  }
  {
    ThreadsEnv env("4");
    four = call(args).out;
  }
  {
    ThreadsEnv env("0");
    automatic = call(args).out;
  }
  CHECK(!one.empty());
  CHECK(one == four);
  CHECK(one == automatic);
}

TEST_CASE("dimensionless and physical inputs agree") {
  const auto a = call({"sweep", "--n-max", "3", "--eps", "4", "--kappa", "0.25"});
  const auto b = call({"sweep", "--n-max", "3", "--m", "2", "--eB", "16", "--kz", "1"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.out == b.out);

  const auto fa = parse_csv(call({"field", "--n", "2", "--eps", "4", "--kappa", "0.25", "--grid-points", "32"}).out);
  const auto fb = parse_csv(call({"field", "--n", "2", "--m", "2", "--eB", "16", "--kz", "1", "--grid-points", "32"}).out);
  REQUIRE(fa.size() == fb.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(fa[i][c] - fb[i][c]));
  CHECK(worst < 1e-12);
}

TEST_CASE("purity field") {
  const auto r = call({"field", "--quantity", "purity", "--n", "1", "--r", "1", "--spin", "+", "--eps", "1", "--kappa", "1"});
  REQUIRE(r.code == 0);
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  CHECK(header == "s,k,value");
  REQUIRE(rows.size() == 512 * 512);
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i][2] > rows[best][2]) best = i;
  CHECK(std::hypot(rows[best][0], rows[best][1]) < 0.1);
  // (s,k) -> (-s,-k)
  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) worst = std::max(worst, std::abs(rows[i][2] - rows[rows.size() - 1 - i][2]));
  CHECK(worst < 1e-12);
}

TEST_CASE("concurrence field") {
  for (const char* eB : {"1", "3"}) {
    const auto r = call({"field", "--quantity", "concurrence", "--n", "1", "--m", "1", "--eB", eB, "--kz", "1",
                         "--grid-points", "65"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    const double b = std::stod(eB);
    const dwl::landau::LandauState st(1, dwl::landau::Parity::Positive, dwl::landau::Spin::Up, {1.0, b, 0.0, 1.0});
    const double pref = 2 * st.eta() * st.eta() * st.B() * st.B();
    int seen = 0;
    for (const auto& row : rows) {
      if (row[0] != 0.0) continue;
      ++seen;
      const dwl::PhasePoint p{0.0, row[1]};
      const double expect = -pref * dwl::wigner::kernel_L(1, p, b) * dwl::wigner::kernel_L(0, p, b) / b;
      CHECK(std::abs(row[2] - expect) < 1e-13);
    }
    CHECK(seen == 65);
  }
  const auto r = call({"field", "--quantity", "concurrence", "--n", "1", "--grid-points", "65"});
  const auto rows = parse_csv(r.out);
  for (const auto& row : rows)
    if (row[0] == 0.0 && row[1] == 0.0) CHECK(row[2] == doctest::Approx(0.25 / (std::numbers::pi * std::numbers::pi)));
  // the trace route flips the sign on the axis
  const auto t = parse_csv(call({"field", "--quantity", "concurrence", "--concurrence-route", "trace", "--n", "1",
                                 "--grid-points", "65"}).out);
  for (const auto& row : t)
    if (row[0] == 0.0 && row[1] == 0.0) CHECK(row[2] == doctest::Approx(-0.25 / (std::numbers::pi * std::numbers::pi)));
}

TEST_CASE("density field and ppm heatmap") {
  const auto csv = parse_csv(call({"field", "--quantity", "density", "--n", "1", "--grid-points", "65"}).out);
  for (const auto& row : csv)
    if (row[0] == 0.0 && row[1] == 0.0) CHECK(row[2] == doctest::Approx(2.0 / (3.0 * std::numbers::pi)));

  const auto r = call({"field", "--n", "3", "--grid-points", "40", "--format", "ppm"});
  REQUIRE(r.code == 0);
  const std::string head = "P6\n40 40\n255\n";
  REQUIRE(r.out.size() == head.size() + 40 * 40 * 3);
  CHECK(r.out.compare(0, head.size(), head) == 0);
  CHECK(r.out == call({"field", "--n", "3", "--grid-points", "40", "--format", "ppm"}).out);
}

TEST_CASE("wigner dump") {
  const auto r = call({"wigner-dump", "--n", "1", "--probe-points", "5"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["max_abs_diff"].get<double>() < 1e-7);
  REQUIRE(j["points"].size() == 25);
  for (const auto& pt : j["points"]) {
    CHECK(pt["max_abs_diff"].get<double>() < 1e-7);
    for (int c = 0; c < 4; ++c) {
      CHECK(pt["analytic"][1][c][0].get<double>() == 0.0);
      CHECK(pt["analytic"][1][c][1].get<double>() == 0.0);
    }
    if (pt["s"].get<double>() == 0.0 && pt["k"].get<double>() == 0.0)
      CHECK(pt["analytic"][3][3][0].get<double>() == doctest::Approx(1.0 / (6.0 * std::numbers::pi)));
  }
}

TEST_CASE("verify") {
  const auto r = call({"verify", "--n-max", "2"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["passed"].get<bool>());
  for (const auto& st : j["states"]) {
    CHECK(st.contains("purity_trace"));
    CHECK(st.contains("purity_clifford"));
    CHECK(st.contains("purity_coordinate"));
  }
  CHECK(r.out == call({"verify", "--n-max", "2"}).out);

  const auto tight = call({"verify", "--n-max", "1", "--tolerance-scale", "1e-6"});
  CHECK(tight.code == 1);
  const auto jt = json::parse(tight.out);
  CHECK_FALSE(jt["passed"].get<bool>());
  int failed = 0;
  for (const auto& c : jt["checks"])
    if (!c["pass"].get<bool>()) {
      ++failed;
      CHECK(!c["name"].get<std::string>().empty());
    }
  CHECK(failed > 0);
}

TEST_CASE("usage errors") {
  CHECK(call({"sweep", "--eps", ""}).code == 2);
  CHECK(call({"sweep", "--eps", "1", "--eB", "2"}).code == 2);
  CHECK(call({"sweep", "--eps", "-1"}).code == 2);
  CHECK(call({"sweep", "--n-max", "0"}).code == 2);
  CHECK(call({"field", "--quantity", "entropy"}).code == 2);
  const auto w = call({"field", "--quantity", "wigner"});
  CHECK(w.code == 2);
  CHECK(w.err.find("wigner-dump") != std::string::npos);
  CHECK(call({"field", "--quantity", "purity", "--n", "0"}).code == 2);
  CHECK(call({"field", "--grid-points", "4"}).code == 2);
  CHECK(call({"field", "--r", "3"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({}).code == 2);
  const auto e = call({"field", "--quantity", "entropy"});
  CHECK(e.err.find("entropy") != std::string::npos);
}

TEST_CASE("output file and io errors") {
  const auto path = temp_path("sweep.csv");
  std::filesystem::remove(path);
  const auto r = call({"sweep", "--n-max", "2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == call({"sweep", "--n-max", "2"}).out);
  std::filesystem::remove(path);

  CHECK(call({"sweep", "--out", "/nonexistent-dir/x.csv"}).code == 3);
}

TEST_CASE("config file with flag precedence") {
  const auto path = temp_path("run.cfg");
  {
    std::ofstream cfg(path);
    cfg << "n-max=2\neps=0.1,10\nkappa=100\n";
  }
  const auto from_file = parse_csv(call({"sweep", "--config", path.string()}).out);
  CHECK(from_file.size() == 4);
  CHECK(from_file[0][1] == 0.1);
  CHECK(from_file[0][2] == 100);
  const auto overridden = parse_csv(call({"sweep", "--config", path.string(), "--kappa", "1"}).out);
  CHECK(overridden.size() == 4);
  CHECK(overridden[0][2] == 1);
  std::filesystem::remove(path);
  CHECK(call({"sweep", "--config", "/nonexistent-dir/run.cfg"}).code != 0);
}

}
