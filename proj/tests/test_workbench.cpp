#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lcs/workbench.hpp"

using namespace lcs;

namespace {

JobSpec dims_job(int m, int n, int D) {
  JobSpec job;
  job.command = "dims";
  job.m = m;
  job.n = n;
  job.max_degree = D;
  job.no_cache = true;
  job.seed = 42;
  return job;
}

}  // namespace

TEST_CASE("identical jobs produce identical digests") {
  JobSpec job = dims_job(2, 0, 4);
  RunResult a = run_dims(job);
  RunResult b = run_dims(job);
  CHECK(a.manifest["digest"] == b.manifest["digest"]);
  CHECK(a.rows == b.rows);
  CHECK(a.exit_code == 0);
  CHECK(a.manifest["engine_version"] == "0.1.0");
}

TEST_CASE("cache round trip matches fresh computation") {
  auto dir = std::filesystem::temp_directory_path() / "lcs_cache_test";
  std::filesystem::remove_all(dir);
  JobSpec cached = dims_job(1, 1, 4);
  cached.no_cache = false;
  cached.cache_dir = dir.string();

  RunResult miss = run_dims(cached);
  CHECK(miss.manifest["cache"] == "miss");
  RunResult hit = run_dims(cached);
  CHECK(hit.manifest["cache"] == "hit");
  RunResult fresh = run_dims(dims_job(1, 1, 4));
  CHECK(fresh.manifest["cache"] == "off");

  CHECK(miss.manifest["digest"] == hit.manifest["digest"]);
  CHECK(miss.manifest["digest"] == fresh.manifest["digest"]);

  // A corrupt cache file is ignored and rewritten.
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ofstream out(entry.path());
    out << "not json";
  }
  RunResult recovered = run_dims(cached);
  CHECK(recovered.manifest["cache"] == "miss");
  CHECK(recovered.manifest["digest"] == miss.manifest["digest"]);
  CHECK(run_dims(cached).manifest["cache"] == "hit");
  std::filesystem::remove_all(dir);
}

TEST_CASE("dims rows carry both gradings") {
  RunResult result = run_dims(dims_job(1, 0, 3));
  bool saw_multi = false;
  bool saw_total = false;
  for (const auto& row : result.rows) {
    if (row.at("grading") == "multidegree") saw_multi = true;
    if (row.at("grading") == "total") {
      saw_total = true;
      CHECK(row.at("degree").size() == 1);
    }
    if (row.at("series") == "Bbar1" && row.at("grading") == "multidegree") {
      CHECK(row.at("value").get<long>() == 1);
    }
  }
  CHECK(saw_multi);
  CHECK(saw_total);
}

TEST_CASE("csv format has the fixed columns") {
  JobSpec job = dims_job(1, 0, 3);
  job.format = "csv";
  RunResult result = run_dims(job);
  std::string csv = render_csv(result);
  std::istringstream lines(csv);
  std::string line;
  bool saw_header = false;
  int data_lines = 0;
  while (std::getline(lines, line)) {
    if (line.rfind('#', 0) == 0) continue;
    if (!saw_header) {
      CHECK(line == "m,n,series_or_check,k,degree_vector,t_power,value");
      saw_header = true;
      continue;
    }
    ++data_lines;
    CHECK(std::count(line.begin(), line.end(), ',') >= 6);
    CHECK(line.rfind("1,0,", 0) == 0);
  }
  CHECK(saw_header);
  CHECK(data_lines > 0);
}

TEST_CASE("series job reports rationals as num/den strings") {
  JobSpec job = dims_job(1, 0, 4);
  job.command = "series";
  RunResult result = run_series(job);
  CHECK(result.exit_code == 0);
  bool found_three_eighths = false;
  for (const auto& row : result.rows) {
    if (row.at("label") == "B2:printed" && row.contains("degree") &&
        row.at("degree") == nlohmann::json::array({1})) {
      CHECK(row.at("value").at("num") == "3");
      CHECK(row.at("value").at("den") == "8");
      found_three_eighths = true;
    }
  }
  CHECK(found_three_eighths);
}

TEST_CASE("budget overrun surfaces as a structured error") {
  JobSpec job = dims_job(3, 0, 6);
  job.budget = 50;
  RunResult result = run_dims(job);
  CHECK(result.exit_code == 2);
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].at("label") == "error:budget_exceeded");
  CHECK(result.rows[0].at("value").get<long>() > 50);
}

TEST_CASE("verify job exit contract") {
  JobSpec job = dims_job(2, 0, 4);
  job.command = "verify";
  job.checks = {"bracket:3:1", "fs", "mk2sided:2"};
  RunResult result = run_verify(job);
  CHECK(result.exit_code == 0);
  for (const auto& row : result.rows) {
    CHECK(row.at("value").get<int>() == 1);
  }
  JobSpec bad = job;
  bad.checks = {"nonsense"};
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);
}

TEST_CASE("schur job returns the B3 decomposition") {
  JobSpec job = dims_job(2, 0, 6);
  job.command = "schur";
  job.k_lo = job.k_hi = 3;
  RunResult result = run_schur(job);
  CHECK(result.exit_code == 0);
  bool found = false;
  for (const auto& row : result.rows) {
    if (row.at("label") == "decomposition") {
      CHECK(row.at("lambda") == nlohmann::json::array({2, 1}));
      CHECK(row.at("value").get<long>() == 1);
      found = true;
    }
  }
  CHECK(found);
  JobSpec super = job;
  super.n = 1;
  CHECK_THROWS_AS(run_schur(super), std::invalid_argument);

  // The lambda bounds only claim anything for k >= 3: B2 = F_{(1,1)} has
  // |lambda| = 2 and must not be flagged.
  JobSpec b2 = job;
  b2.k_lo = b2.k_hi = 2;
  RunResult result_b2 = run_schur(b2);
  CHECK(result_b2.exit_code == 0);
  for (const auto& row : result_b2.rows) {
    CHECK(row.at("label") != "lambda_bound");
  }
}

TEST_CASE("conjecture probes") {
  JobSpec job = dims_job(2, 0, 6);
  job.command = "conjecture";
  job.k_lo = job.k_hi = 2;
  job.probe = "rational";
  RunResult rational = run_conjecture(job);
  CHECK(rational.exit_code == 0);
  int numerator_terms = 0;
  for (const auto& row : rational.rows) {
    if (row.at("label") == "rational:success") CHECK(row.at("value") == 1);
    if (row.at("label") == "rational:numerator") {
      ++numerator_terms;
      CHECK(row.at("degree") == nlohmann::json::array({1, 1}));
    }
  }
  CHECK(numerator_terms == 1);

  job.probe = "weakbound";
  job.k_lo = job.k_hi = 3;
  RunResult weak = run_conjecture(job);
  CHECK(weak.exit_code == 0);
  bool holds_row = false;
  for (const auto& row : weak.rows) {
    if (row.at("label") == "weakbound:holds") {
      CHECK(row.at("value") == 1);
      holds_row = true;
    }
  }
  CHECK(holds_row);
}

TEST_CASE("run_job dispatch") {
  JobSpec job = dims_job(1, 0, 2);
  job.command = "nonsense";
  CHECK_THROWS_AS(run_job(job), std::invalid_argument);
}
