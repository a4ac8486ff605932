#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcs/lcs_engine.hpp"

namespace lcs {

/// One reproducible workbench job.
struct JobSpec {
  std::string command;  // dims | series | verify | schur | conjecture
  int m = 0;
  int n = 0;
  int max_degree = 4;
  int k_lo = 0;  // 0: command-specific default
  int k_hi = 0;
  std::vector<std::string> checks;  // verify: "bracket:3:1", "bmcor:3", "fs", ...
  std::string probe;                // conjecture: rational | glambda | weakbound
  std::string format = "json";      // json | csv
  std::string cache_dir;            // empty: $LCS_CACHE_DIR, else cache off
  bool no_cache = false;
  std::uint64_t seed = 0;
  long budget = GradedContext::kDefaultBudget;
};

struct RunResult {
  nlohmann::json manifest;
  nlohmann::json rows;  // array of row objects
  int exit_code = 0;
};

/// FNV-1a 64-bit over the compact serialization; the manifest digest.
std::string content_digest(const nlohmann::json& rows);

nlohmann::json rational_json(const Rational& q);

/// Graded dimensions of one computed algebra: everything run_dims and the
/// series/schur/conjecture pipelines consume, and all the cache stores.
struct FamilyDims {
  int m = 0;
  int n = 0;
  int D = 0;
  int k_max = 0;
  std::map<std::pair<int, MultiDegree>, long> l_dims;  // k >= 1; L_1 = A
  std::map<std::pair<int, MultiDegree>, long> m_dims;  // k >= 2
  std::map<MultiDegree, long> sum_l2_m3;

  long l_dim(int k, const MultiDegree& d) const;
  long m_dim(int k, const MultiDegree& d) const;  // k = 1 falls back to A
  long sum23(const MultiDegree& d) const;
};

FamilyDims compute_family_dims(const GeneratorSet& gens, int D, long budget);

/// Cache-aware variant; fills *cache_state with "hit", "miss" or "off".
FamilyDims family_dims_for_job(const JobSpec& job, std::string* cache_state);

/// B_k, N_k, Bbar1, Z and A/M3 rows for k in [k_lo, k_hi], multigraded.
DimensionTable dimension_table_from(const FamilyDims& dims, int k_lo,
                                    int k_hi);

RunResult run_dims(const JobSpec& job);
RunResult run_series(const JobSpec& job);
RunResult run_verify(const JobSpec& job);
RunResult run_schur(const JobSpec& job);
RunResult run_conjecture(const JobSpec& job);

/// Dispatch on job.command.
RunResult run_job(const JobSpec& job);

/// "m,n,series_or_check,k,degree_vector,t_power,value" rows.
std::string render_csv(const RunResult& result);

std::string render_json(const RunResult& result);

}  // namespace lcs
