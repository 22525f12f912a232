#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spindefect/cli.hpp"

using namespace spindefect;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

double meta_value(const std::string& text, const std::string& key) {
  std::istringstream is(text);
  std::string line;
  const std::string prefix = "# " + key + "=";
  while (std::getline(is, line)) {
    if (line.rfind(prefix, 0) == 0) return std::stod(line.substr(prefix.size()));
  }
  throw std::runtime_error("missing meta key " + key);
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "spindefect_cli_tests";
  fs::create_directories(dir);
  fs::remove(dir / name);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("float format") {
  CHECK(cli::format_real(0.5) == "5.000000000e-01");
  CHECK(cli::format_real(-1234.5) == "-1.234500000e+03");
}

TEST_CASE("spectrum") {
  const Outcome o = invoke({"spectrum", "--sites", "201", "--alpha", "-2"});
  REQUIRE(o.code == 0);
  const auto rows = csv_rows(o.out);
  CHECK(rows[0] == std::vector<std::string>{"kind", "index", "value"});
  double lowest = INFINITY;
  int eig = 0;
  bool has_loc = false;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k][0] == "eigenvalue") {
      lowest = std::min(lowest, std::stod(rows[k][2]));
      ++eig;
    }
    has_loc |= rows[k][0] == "E_loc";
  }
  CHECK(eig == 201);
  CHECK(has_loc);
  CHECK(std::abs(lowest - (2.0 - std::sqrt(5.0))) < 1e-8);

  const Outcome clean = invoke({"spectrum", "--sites", "64", "--eps", "0"});
  REQUIRE(clean.code == 0);
  CHECK(clean.out.find("E_loc") == std::string::npos);
  CHECK(clean.out.find("band_min,,1.000000000e+00") != std::string::npos);
  CHECK(clean.out.find("band_max,,3.000000000e+00") != std::string::npos);
}

TEST_CASE("alpha and eps") {
  const Outcome both = invoke({"spectrum", "--sites", "11", "--eps", "-1", "--alpha", "-4"});
  CHECK(both.code == 0);
  CHECK(both.err.find("warning") != std::string::npos);
  CHECK(both.out.find("E_loc,," + cli::format_real(2.0 - std::sqrt(17.0))) != std::string::npos);
  const Outcome eps = invoke({"spectrum", "--sites", "11", "--eps", "-1", "--J", "2", "--h", "2"});
  CHECK(eps.out.find("E_loc,," + cli::format_real(4.0 - 2.0 * std::sqrt(2.0))) !=
        std::string::npos);
}

TEST_CASE("localized") {
  const Outcome o =
      invoke({"localized", "--alpha", std::to_string(-std::sinh(1.0)), "--j-max", "6"});
  REQUIRE(o.code == 0);
  // to_string keeps six decimals, so compare with the alpha actually passed.
  const double a = std::stod(std::to_string(-std::sinh(1.0)));
  CHECK(std::abs(meta_value(o.out, "xi") - std::asinh(std::abs(a))) < 1e-9);
  CHECK(std::abs(meta_value(o.out, "xi") - 1.0) < 1e-6);

  const Outcome exact = invoke({"localized", "--alpha", "-1.1752011936438014"});
  CHECK(std::abs(meta_value(exact.out, "xi") - 1.0) < 1e-9);

  const Outcome two = invoke({"localized", "--alpha", "-2", "--j-max", "10"});
  REQUIRE(two.code == 0);
  const auto rows = csv_rows(two.out);
  CHECK(rows[0] == std::vector<std::string>{"n", "b_n", "C_0n"});
  REQUIRE(rows.size() == 22);
  const double xi = meta_value(two.out, "xi");
  double prev = NAN;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const long n = std::stol(rows[k][0]);
    if (n == 0) {
      CHECK(rows[k][2].empty());
      continue;
    }
    const double c = std::stod(rows[k][2]);
    if (n == 1) CHECK(std::abs(c - 0.422291) < 1e-6);
    if (n > 1) CHECK(std::abs(std::log(c) - std::log(prev) + xi) < 1e-9);
    prev = c;
  }
}

TEST_CASE("evolve") {
  const Outcome o = invoke({"evolve", "--alpha", "-2", "--sender", "0", "--t-max", "30",
                            "--dt", "0.5", "--j-max", "5"});
  REQUIRE(o.code == 0);
  const auto rows = csv_rows(o.out);
  CHECK(rows[0] == std::vector<std::string>{"t", "r", "C_r"});
  CHECK(rows.size() == 1 + 61 * 11);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double t = std::stod(rows[k][0]);
    const long r = std::stol(rows[k][1]);
    const double c = std::stod(rows[k][2]);
    if (t == 0.0) CHECK(c == (r == 0 ? 1.0 : 0.0));
    if (r == 0) CHECK(c > 0.7);
  }

  const Outcome integral = invoke({"evolve", "--alpha", "-2", "--sender", "-3", "--receiver",
                                   "2", "--t-max", "5", "--dt", "1", "--method", "integral"});
  const Outcome oracle = invoke({"evolve", "--alpha", "-2", "--sender", "-3", "--receiver", "2",
                                 "--t-max", "5", "--dt", "1"});
  REQUIRE(integral.code == 0);
  const auto ri = csv_rows(integral.out);
  const auto ro = csv_rows(oracle.out);
  REQUIRE(ri.size() == 7);
  for (std::size_t k = 1; k < ri.size(); ++k) {
    CHECK(std::abs(std::stod(ri[k][2]) - std::stod(ro[k][2])) < 1e-6);
  }

  const Outcome asym = invoke({"evolve", "--alpha", "-2", "--method", "asymptotic",
                               "--t-max", "1", "--dt", "0.5", "--j-max", "2"});
  CHECK(asym.code == 0);
  CHECK(asym.err.find("warning") != std::string::npos);

  const Outcome mirror = invoke({"evolve", "--alpha", "-2", "--sender", "-5"});
  REQUIRE(mirror.code == 0);
  double crossed = 0.0;
  for (const auto& row : csv_rows(mirror.out)) {
    if (row[0] == "t") continue;
    if (std::stol(row[1]) >= 1) crossed = std::max(crossed, std::stod(row[2]));
  }
  CHECK(crossed < 0.35);

  const Outcome small = invoke({"evolve", "--sites", "21", "--t-max", "30"});
  CHECK(small.code == 2);
  CHECK(small.err.find("minimum n_sites") != std::string::npos);
}

TEST_CASE("json output") {
  const Outcome o = invoke({"localized", "--alpha", "-2", "--j-max", "2", "--format", "json"});
  REQUIRE(o.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(o.out);
  CHECK(doc["meta"]["version"] == "1");
  CHECK(doc["meta"]["subcommand"] == "localized");
  CHECK(doc["meta"]["method"] == "oracle");
  CHECK(doc["meta"]["spec"]["alpha"] == -2.0);
  CHECK(doc["meta"]["spec"]["n_sites"] == 401);
  CHECK(doc["meta"]["columns"] == nlohmann::json::array({"n", "b_n", "C_0n"}));
  REQUIRE(doc["data"].size() == 5);
  CHECK(doc["data"][2]["n"] == 0);
  CHECK(doc["data"][2]["C_0n"].is_null());
  CHECK(std::abs(doc["data"][3]["C_0n"].get<double>() - 0.422291) < 1e-6);
}

TEST_CASE("transport") {
  const Outcome o = invoke({"transport", "--alpha-min", "-1", "--alpha-max", "1",
                            "--alpha-step", "0.5"});
  REQUIRE(o.code == 0);
  const auto rows = csv_rows(o.out);
  CHECK(rows[0] == std::vector<std::string>{"alpha", "T", "R", "residual", "t_star"});
  REQUIRE(rows.size() == 6);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double a = std::stod(rows[k][0]);
    const double sum = std::stod(rows[k][1]) + std::stod(rows[k][2]) + std::stod(rows[k][3]);
    CHECK(a == doctest::Approx(-1.0 + 0.5 * (k - 1)));
    CHECK(std::abs(sum - 1.0) < 1e-6);
    if (a == 0.0) {
      CHECK(std::abs(std::stod(rows[k][1]) - 0.5) < 0.02);
      CHECK(std::abs(std::stod(rows[k][2]) - 0.5) < 0.02);
    }
  }
  CHECK(invoke({"transport", "--alpha-step", "0"}).code == 2);
  CHECK(invoke({"transport", "--sender", "-1"}).code == 2);
}

TEST_CASE("output files and exit codes") {
  const fs::path good = scratch("spectrum.csv");
  CHECK(invoke({"spectrum", "--sites", "32", "--out", good.string()}).code == 0);
  CHECK(fs::exists(good));
  const std::string first = slurp(good);
  CHECK(invoke({"spectrum", "--sites", "32", "--out", good.string()}).code == 0);
  CHECK(slurp(good) == first);
  CHECK(first.find('\r') == std::string::npos);

  const fs::path bad = scratch("bad.csv");
  CHECK(invoke({"spectrum", "--sitez", "32", "--out", bad.string()}).code == 2);
  CHECK_FALSE(fs::exists(bad));
  CHECK(invoke({"spectrum", "--sites", "abc", "--out", bad.string()}).code == 2);
  CHECK(invoke({"spectrum", "--method", "exact", "--out", bad.string()}).code == 2);
  CHECK(invoke({"spectrum", "--sites", "2", "--out", bad.string()}).code == 2);
  CHECK(invoke({"evolve", "--dt", "0", "--out", bad.string()}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK_FALSE(fs::exists(bad));

  const fs::path none = scratch("none.csv");
  const Outcome zero = invoke({"localized", "--alpha", "0", "--out", none.string()});
  CHECK(zero.code == 2);
  CHECK(zero.err.find("bound state") != std::string::npos);
  CHECK_FALSE(fs::exists(none));

  const fs::path unwritable = scratch("missing_dir") / "x" / "out.csv";
  CHECK(invoke({"spectrum", "--sites", "8", "--out", unwritable.string()}).code == 4);

  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> args{"evolve", "--sender", "-5", "--t-max", "10",
                                      "--dt", "0.25", "--format", "json"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

}  // TEST_SUITE
