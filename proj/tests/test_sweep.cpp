#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "svet/bounds.hpp"
#include "svet/sweep.hpp"

using namespace svet;

namespace {

OptimizerConfig quick_config() {
  OptimizerConfig cfg;
  cfg.starts = 16;
  return cfg;
}

RunManifest manifest_for(const SweepGrid& grid, const OptimizerConfig& cfg) {
  RunManifest m;
  m.tool_version = "test";
  m.command_line = "svetlichny sweep --out x.csv";
  m.grid = grid;
  m.optimizer = cfg;
  m.started_utc = "2026-01-01T00:00:00Z";
  return m;
}

}  // namespace

TEST_SUITE("sweep") {
  TEST_CASE("grid validation") {
    SweepGrid g;
    g.steps = 1;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
    g = {};
    g.theta_min = g.theta_max = 0.3;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
    g = {};
    g.theta_max = 1.0;
    CHECK_THROWS_AS(g.validate(), std::domain_error);
  }

  TEST_CASE("grid is uniform in theta1 and hits both ends") {
    SweepGrid g;
    g.theta_max = 0.7853981634;
    g.steps = 5;
    CHECK(g.theta(0) == 0.0);
    CHECK(g.theta(4) == GGHZParam::kMax);
    CHECK(g.theta(2) == doctest::Approx(std::numbers::pi / 8));
  }

  TEST_CASE("sweep rows satisfy their invariants") {
    SweepGrid g;
    g.steps = 21;
    const auto rows = run_sweep(g, quick_config(), 2);
    REQUIRE(rows.size() == 21);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const SweepRow& r = rows[i];
      CHECK(std::abs(r.tau - std::pow(std::sin(2.0 * r.theta1), 2)) < 1e-12);
      CHECK(r.s_numeric <= 4.0 * std::sqrt(2.0) + 1e-9);
      CHECK(r.converged);
      if (i > 0) CHECK(r.tau > rows[i - 1].tau);
    }
    CHECK(rows_above_original_bound(rows).empty());
  }

  TEST_CASE("rows_above_original_bound reports excess instead of clipping") {
    std::vector<SweepRow> rows(3);
    for (auto& r : rows) r.bound_third = 4.0;
    rows[1].s_numeric = 4.1;
    const auto above = rows_above_original_bound(rows);
    REQUIRE(above.size() == 1);
    CHECK(above[0] == 1);
  }

  TEST_CASE("sweep output is independent of the worker count") {
    SweepGrid g;
    g.steps = 12;
    const auto a = run_sweep(g, quick_config(), 1);
    const auto b = run_sweep(g, quick_config(), 4);
    std::ostringstream sa, sb;
    write_csv(sa, a, manifest_for(g, quick_config()));
    write_csv(sb, b, manifest_for(g, quick_config()));
    CHECK(sa.str() == sb.str());
  }

  TEST_CASE("CSV layout and round trip") {
    SweepGrid g;
    g.steps = 6;
    const auto rows = run_sweep(g, quick_config(), 1);
    std::ostringstream out;
    write_csv(out, rows, manifest_for(g, quick_config()));
    const std::string text = out.str();

    std::istringstream lines(text);
    std::string line;
    int comments = 0;
    while (std::getline(lines, line) && line.front() == '#') ++comments;
    CHECK(comments > 0);
    CHECK(line == kCsvHeader);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.back() == '\n');

    std::istringstream in(text);
    const auto back = read_csv(in);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(format_g9(back[i].tau) == format_g9(rows[i].tau));
      CHECK(format_g9(back[i].s_numeric) == format_g9(rows[i].s_numeric));
      CHECK(back[i].branch == rows[i].branch);
      CHECK(back[i].converged == rows[i].converged);
    }
  }

  TEST_CASE("read_csv rejects malformed input") {
    std::istringstream no_header("0,0,0,0,0,COS_BRANCH,true\n");
    CHECK_THROWS_AS(read_csv(no_header), std::runtime_error);
    std::istringstream bad_field(std::string(kCsvHeader) + "\n0,0,x,0,0,COS_BRANCH,true\n");
    CHECK_THROWS_AS(read_csv(bad_field), std::runtime_error);
    std::istringstream bad_branch(std::string(kCsvHeader) + "\n0,0,0,0,0,UP,true\n");
    CHECK_THROWS_AS(read_csv(bad_branch), std::runtime_error);
  }

  TEST_CASE("nine significant digits") {
    CHECK(format_g9(4.0 * std::sqrt(2.0)) == "5.65685425");
    CHECK(format_g9(0.0) == "0");
  }

  TEST_CASE("max_bound_deviation excludes the window around tau*") {
    std::vector<SweepRow> rows(3);
    rows[0] = {0.0, 0.1, 1.0, 1.0, 1.0, RowBranch::cos_branch, true};
    rows[1] = {0.0, 0.5, 9.0, 1.0, 1.0, RowBranch::cos_branch, true};
    rows[2] = {0.0, 0.9, 1.0, 1.0, 2.0, RowBranch::cos_branch, true};
    const BoundDeviation d = max_bound_deviation(rows, 0.5, 0.01);
    CHECK(d.third == 0.0);
    CHECK(d.half == 1.0);
  }
}
