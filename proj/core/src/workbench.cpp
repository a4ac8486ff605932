#include "lcs/workbench.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lcs/forms.hpp"
#include "lcs/schur.hpp"
#include "lcs/series.hpp"
#include "lcs/version.hpp"

namespace lcs {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json degree_json(const MultiDegree& d) {
  json out = json::array();
  for (int e : d) out.push_back(e);
  return out;
}

MultiDegree degree_from_json(const json& j) {
  MultiDegree d;
  for (const auto& e : j) d.push_back(e.get<int>());
  return d;
}

std::vector<MultiDegree> report_degrees(int vars, int D) {
  std::vector<MultiDegree> out;
  out.push_back(MultiDegree(static_cast<std::size_t>(vars), 0));
  auto positive = degrees_up_to(vars, D);
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

json manifest_for(const JobSpec& job) {
  json m;
  m["command"] = job.command;
  m["m"] = job.m;
  m["n"] = job.n;
  m["max_degree"] = job.max_degree;
  m["k_lo"] = job.k_lo;
  m["k_hi"] = job.k_hi;
  m["checks"] = job.checks;
  m["probe"] = job.probe;
  m["format"] = job.format;
  m["seed"] = job.seed;
  m["budget"] = job.budget;
  m["engine_version"] = kEngineVersion;
  return m;
}

RunResult finish(const JobSpec& job, json rows, int exit_code,
                 const std::string& cache_state, Clock::time_point start) {
  RunResult out;
  out.rows = std::move(rows);
  out.manifest = manifest_for(job);
  out.manifest["cache"] = cache_state;
  out.manifest["digest"] = content_digest(out.rows);
  out.manifest["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                Clock::now() - start)
                                .count();
  out.exit_code = exit_code;
  return out;
}

RunResult budget_error_result(const JobSpec& job, const BudgetExceeded& e,
                              Clock::time_point start) {
  json rows = json::array();
  json row;
  row["label"] = "error:budget_exceeded";
  row["degree"] = degree_json(e.degree);
  row["value"] = e.required;
  row["budget"] = e.budget;
  rows.push_back(std::move(row));
  return finish(job, std::move(rows), 2, "off", start);
}

std::string effective_cache_dir(const JobSpec& job) {
  if (job.no_cache) return "";
  if (!job.cache_dir.empty()) return job.cache_dir;
  const char* env = std::getenv("LCS_CACHE_DIR");
  return env == nullptr ? "" : env;
}

json family_dims_to_json(const FamilyDims& dims) {
  json out;
  out["engine_version"] = kEngineVersion;
  out["m"] = dims.m;
  out["n"] = dims.n;
  out["D"] = dims.D;
  out["k_max"] = dims.k_max;
  json l = json::array();
  for (const auto& [key, value] : dims.l_dims) {
    l.push_back({key.first, degree_json(key.second), value});
  }
  out["L"] = std::move(l);
  json mm = json::array();
  for (const auto& [key, value] : dims.m_dims) {
    mm.push_back({key.first, degree_json(key.second), value});
  }
  out["M"] = std::move(mm);
  json s = json::array();
  for (const auto& [d, value] : dims.sum_l2_m3) {
    s.push_back({degree_json(d), value});
  }
  out["sum_l2_m3"] = std::move(s);
  return out;
}

bool family_dims_from_json(const json& j, const JobSpec& job,
                           FamilyDims* dims) {
  if (!j.is_object()) return false;
  if (j.value("engine_version", "") != kEngineVersion) return false;
  if (j.value("m", -1) != job.m || j.value("n", -1) != job.n) return false;
  if (j.value("D", -1) != job.max_degree) return false;
  if (j.value("k_max", -1) != job.max_degree) return false;
  dims->m = job.m;
  dims->n = job.n;
  dims->D = job.max_degree;
  dims->k_max = job.max_degree;
  for (const auto& entry : j.at("L")) {
    dims->l_dims[{entry.at(0).get<int>(), degree_from_json(entry.at(1))}] =
        entry.at(2).get<long>();
  }
  for (const auto& entry : j.at("M")) {
    dims->m_dims[{entry.at(0).get<int>(), degree_from_json(entry.at(1))}] =
        entry.at(2).get<long>();
  }
  for (const auto& entry : j.at("sum_l2_m3")) {
    dims->sum_l2_m3[degree_from_json(entry.at(0))] = entry.at(1).get<long>();
  }
  return true;
}

std::string cache_file_path(const std::string& dir, const JobSpec& job) {
  std::ostringstream name;
  name << "lcs_dims_v" << kEngineVersion << "_m" << job.m << "_n" << job.n
       << "_D" << job.max_degree << "_K" << job.max_degree << ".json";
  return (std::filesystem::path(dir) / name.str()).string();
}

}  // namespace

std::string content_digest(const json& rows) {
  std::string payload = rows.dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

json rational_json(const Rational& q) {
  json out;
  out["num"] = num_str(q);
  out["den"] = den_str(q);
  return out;
}

long FamilyDims::l_dim(int k, const MultiDegree& d) const {
  auto it = l_dims.find({k, d});
  return it == l_dims.end() ? 0 : it->second;
}

long FamilyDims::m_dim(int k, const MultiDegree& d) const {
  if (k <= 1) return l_dim(1, d);
  auto it = m_dims.find({k, d});
  return it == m_dims.end() ? 0 : it->second;
}

long FamilyDims::sum23(const MultiDegree& d) const {
  auto it = sum_l2_m3.find(d);
  return it == sum_l2_m3.end() ? 0 : it->second;
}

FamilyDims compute_family_dims(const GeneratorSet& gens, int D, long budget) {
  SubspaceFamily family = compute_lcs(gens, D, D, budget);
  SubspaceFamily ideals = compute_ideals(family);
  FamilyDims out;
  out.m = gens.m;
  out.n = gens.n;
  out.D = D;
  out.k_max = D;
  for (const auto& [key, space] : family.table()) {
    if (space.dim() > 0) out.l_dims[key] = static_cast<long>(space.dim());
  }
  for (const auto& [key, space] : ideals.table()) {
    if (key.first >= 2 && space.dim() > 0) {
      out.m_dims[key] = static_cast<long>(space.dim());
    }
  }
  for (const MultiDegree& d : report_degrees(gens.count(), D)) {
    long dim = static_cast<long>(
        sum_spaces(family.space(2, d), ideals.space(3, d)).dim());
    if (dim > 0) out.sum_l2_m3[d] = dim;
  }
  return out;
}

FamilyDims family_dims_for_job(const JobSpec& job, std::string* cache_state) {
  std::string dir = effective_cache_dir(job);
  if (dir.empty()) {
    if (cache_state) *cache_state = "off";
    return compute_family_dims({job.m, job.n}, job.max_degree, job.budget);
  }
  std::string path = cache_file_path(dir, job);
  {
    std::ifstream in(path);
    if (in) {
      json parsed = json::parse(in, nullptr, false);
      FamilyDims dims;
      if (!parsed.is_discarded() &&
          family_dims_from_json(parsed, job, &dims)) {
        if (cache_state) *cache_state = "hit";
        return dims;
      }
    }
  }
  FamilyDims dims = compute_family_dims({job.m, job.n}, job.max_degree, job.budget);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(path);
  if (out) out << family_dims_to_json(dims).dump();
  if (cache_state) *cache_state = "miss";
  return dims;
}

DimensionTable dimension_table_from(const FamilyDims& dims, int k_lo,
                                    int k_hi) {
  DimensionTable out;
  auto degrees = report_degrees(dims.m + dims.n, dims.D);
  for (int k = k_lo; k <= k_hi; ++k) {
    for (const MultiDegree& d : degrees) {
      out.append(SeriesKind::B, k, d, dims.l_dim(k, d) - dims.l_dim(k + 1, d));
    }
  }
  for (int k = k_lo; k <= k_hi; ++k) {
    for (const MultiDegree& d : degrees) {
      out.append(SeriesKind::N, k, d, dims.m_dim(k, d) - dims.m_dim(k + 1, d));
    }
  }
  for (const MultiDegree& d : degrees) {
    out.append(SeriesKind::Bbar1, 0, d, dims.l_dim(1, d) - dims.sum23(d));
  }
  for (const MultiDegree& d : degrees) {
    out.append(SeriesKind::Z, 0, d, dims.sum23(d) - dims.l_dim(2, d));
  }
  for (const MultiDegree& d : degrees) {
    out.append(SeriesKind::AmodM3, 0, d, dims.l_dim(1, d) - dims.m_dim(3, d));
  }
  return out;
}

namespace {

json dim_rows_json(const DimensionTable& table, const JobSpec& job,
                   bool total_grading) {
  json rows = json::array();
  for (const DimRow& row : table.rows) {
    json r;
    std::string name = series_name(row.series, row.k);
    r["label"] = total_grading ? name + ":total" : name;
    r["m"] = job.m;
    r["n"] = job.n;
    r["series"] = name;
    if (row.series == SeriesKind::B || row.series == SeriesKind::N) {
      r["k"] = row.k;
    }
    r["grading"] = total_grading ? "total" : "multidegree";
    r["degree"] = degree_json(row.degree);
    r["value"] = row.dim;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

RunResult run_dims(const JobSpec& job) {
  auto start = Clock::now();
  int k_lo = job.k_lo > 0 ? job.k_lo : 1;
  int k_hi = job.k_hi > 0 ? job.k_hi : (job.k_lo > 0 ? job.k_lo : job.max_degree);
  if (k_hi > job.max_degree) k_hi = job.max_degree;
  try {
    std::string cache_state;
    FamilyDims dims = family_dims_for_job(job, &cache_state);
    DimensionTable table = dimension_table_from(dims, k_lo, k_hi);
    json rows = dim_rows_json(table, job, false);
    for (auto& row : dim_rows_json(table.collapsed_by_total(), job, true)) {
      rows.push_back(std::move(row));
    }
    return finish(job, std::move(rows), 0, cache_state, start);
  } catch (const BudgetExceeded& e) {
    return budget_error_result(job, e, start);
  }
}

namespace {

struct SeriesColumn {
  std::string source;
  const TruncatedSeries* series;
};

void append_series_rows(json& rows, const std::string& name,
                        const std::vector<SeriesColumn>& columns,
                        const TruncatedSeries& brute, int vars, int D) {
  for (const MultiDegree& d : report_degrees(vars, D)) {
    for (const SeriesColumn& col : columns) {
      json r;
      r["label"] = name + ":" + col.source;
      r["series"] = name;
      r["source"] = col.source;
      r["degree"] = degree_json(d);
      r["value"] = rational_json(col.series->coeff(d));
      rows.push_back(std::move(r));
    }
    json agree;
    agree["label"] = name + ":agree";
    agree["series"] = name;
    agree["source"] = "agree";
    agree["degree"] = degree_json(d);
    bool all_agree = true;
    for (const SeriesColumn& col : columns) {
      if (col.source != "printed" && col.series->coeff(d) != brute.coeff(d)) {
        all_agree = false;
      }
    }
    agree["value"] = all_agree ? 1 : 0;
    rows.push_back(std::move(agree));
  }
}

void append_series_summary(json& rows, const std::string& name,
                           const std::string& summary, bool value) {
  json r;
  r["label"] = name + ":" + summary;
  r["series"] = name;
  r["source"] = summary;
  r["value"] = value ? 1 : 0;
  rows.push_back(std::move(r));
}

}  // namespace

RunResult run_series(const JobSpec& job) {
  auto start = Clock::now();
  const int D = job.max_degree;
  const int vars = job.m + job.n;
  try {
    std::string cache_state;
    FamilyDims dims = family_dims_for_job(job, &cache_state);
    DimensionTable table = dimension_table_from(dims, 1, std::min(3, D));

    TruncatedSeries brute_bbar1 =
        series_from_dims(table, SeriesKind::Bbar1, 0, job.m, job.n, D);
    TruncatedSeries brute_b2 =
        series_from_dims(table, SeriesKind::B, 2, job.m, job.n, D);
    TruncatedSeries brute_b3 =
        series_from_dims(table, SeriesKind::B, 3, job.m, job.n, D);

    ClosedForms printed = printed_closed_forms(job.m, job.n, D);
    ClosedForms validated = validated_closed_forms(job.m, job.n, D);
    TruncatedSeries pipe_b2 = pipeline_b2_series(job.m, job.n, D);
    TruncatedSeries pipe_bbar1 = pipeline_bbar1_series(job.m, job.n, D);

    json rows = json::array();
    append_series_rows(rows, "Bbar1",
                       {{"printed", &printed.bbar1},
                        {"validated", &validated.bbar1},
                        {"pipeline", &pipe_bbar1},
                        {"brute", &brute_bbar1}},
                       brute_bbar1, vars, D);
    append_series_rows(rows, "B2",
                       {{"printed", &printed.b2},
                        {"validated", &validated.b2},
                        {"pipeline", &pipe_b2},
                        {"brute", &brute_b2}},
                       brute_b2, vars, D);
    append_series_rows(rows, "B3",
                       {{"printed", &printed.b3}, {"brute", &brute_b3}},
                       brute_b3, vars, D);

    bool printed_bbar1_integral = printed.bbar1.all_coeffs_integer();
    bool printed_b2_integral = printed.b2.all_coeffs_integer();
    bool validated_bbar1_ok = validated.bbar1 == brute_bbar1;
    bool validated_b2_ok = validated.b2 == brute_b2;
    bool pipeline_bbar1_ok = pipe_bbar1 == brute_bbar1;
    bool pipeline_b2_ok = pipe_b2 == brute_b2;
    bool printed_b3_ok = printed.b3 == brute_b3;

    append_series_summary(rows, "Bbar1", "printed_integral",
                          printed_bbar1_integral);
    append_series_summary(rows, "Bbar1", "printed_matches_brute",
                          printed.bbar1 == brute_bbar1);
    append_series_summary(rows, "Bbar1", "validated_matches_brute",
                          validated_bbar1_ok);
    append_series_summary(rows, "Bbar1", "pipeline_matches_brute",
                          pipeline_bbar1_ok);
    append_series_summary(rows, "B2", "printed_integral", printed_b2_integral);
    append_series_summary(rows, "B2", "printed_matches_brute",
                          printed.b2 == brute_b2);
    append_series_summary(rows, "B2", "validated_matches_brute",
                          validated_b2_ok);
    append_series_summary(rows, "B2", "pipeline_matches_brute",
                          pipeline_b2_ok);
    append_series_summary(rows, "B3", "printed_matches_brute", printed_b3_ok);

    bool asserted_ok = validated_bbar1_ok && validated_b2_ok &&
                       pipeline_bbar1_ok && pipeline_b2_ok && printed_b3_ok;
    return finish(job, std::move(rows), asserted_ok ? 0 : 1, cache_state,
                  start);
  } catch (const BudgetExceeded& e) {
    return budget_error_result(job, e, start);
  }
}

namespace {

struct CheckSpec {
  std::string name;
  int j = 0;
  int k = 0;
};

CheckSpec parse_check(const std::string& text) {
  CheckSpec spec;
  std::istringstream in(text);
  std::string field;
  std::getline(in, field, ':');
  spec.name = field;
  std::vector<int> params;
  while (std::getline(in, field, ':')) params.push_back(std::stoi(field));
  if (spec.name == "bracket" || spec.name == "product") {
    if (params.size() != 2) {
      throw std::invalid_argument("check '" + spec.name + "' needs j:k");
    }
    spec.j = params[0];
    spec.k = params[1];
  } else if (spec.name == "bmcor" || spec.name == "mk2sided") {
    if (params.size() != 1) {
      throw std::invalid_argument("check '" + spec.name + "' needs :k");
    }
    spec.k = params[0];
  } else if (spec.name == "f3" || spec.name == "fs") {
    if (!params.empty()) {
      throw std::invalid_argument("check '" + spec.name + "' takes no params");
    }
  } else {
    throw std::invalid_argument("unknown check '" + spec.name + "'");
  }
  return spec;
}

void append_check_rows(json& rows, const CheckReport& report,
                       const std::string& label) {
  for (const CheckOutcome& outcome : report.rows) {
    json r;
    r["label"] = label;
    r["check"] = report.name;
    if (report.j > 0) r["j"] = report.j;
    if (report.k > 0) r["k"] = report.k;
    r["degree"] = degree_json(outcome.degree);
    r["value"] = outcome.pass ? 1 : 0;
    if (!outcome.witness.empty()) r["witness"] = outcome.witness;
    rows.push_back(std::move(r));
  }
}

}  // namespace

RunResult run_verify(const JobSpec& job) {
  auto start = Clock::now();
  std::vector<std::string> requested = job.checks;
  if (requested.empty()) {
    requested = {"bracket:3:1", "product:3:2", "bmcor:3", "f3", "fs"};
  }
  std::vector<CheckSpec> specs;
  specs.reserve(requested.size());
  int depth = 3;
  for (const std::string& text : requested) {
    CheckSpec spec = parse_check(text);
    if (spec.name == "bracket") depth = std::max(depth, spec.j + spec.k);
    if (spec.name == "product") depth = std::max(depth, spec.j + spec.k - 1);
    if (spec.name == "bmcor") depth = std::max(depth, spec.k + 1);
    if (spec.name == "f3") depth = std::max(depth, 4);
    if (spec.name == "mk2sided") depth = std::max(depth, spec.k);
    specs.push_back(std::move(spec));
  }
  depth = std::min(depth, job.max_degree);
  try {
    GeneratorSet gens{job.m, job.n};
    SubspaceFamily family =
        compute_lcs(gens, job.max_degree, std::max(depth, 1), job.budget);
    SubspaceFamily ideals = compute_ideals(family);
    json rows = json::array();
    bool all_pass = true;
    for (const CheckSpec& spec : specs) {
      if (spec.name == "bracket") {
        CheckReport report =
            check_bracket_inclusion(family, ideals, spec.j, spec.k);
        all_pass = all_pass && report.all_pass();
        append_check_rows(rows, report,
                          "bracket:" + std::to_string(spec.j) + ":" +
                              std::to_string(spec.k));
      } else if (spec.name == "product") {
        CheckReport report =
            check_product_inclusion(family, ideals, spec.j, spec.k);
        all_pass = all_pass && report.all_pass();
        append_check_rows(rows, report,
                          "product:" + std::to_string(spec.j) + ":" +
                              std::to_string(spec.k));
      } else if (spec.name == "bmcor") {
        CheckReport report = check_bmcor(family, spec.k);
        all_pass = all_pass && report.all_pass();
        append_check_rows(rows, report, "bmcor:" + std::to_string(spec.k));
      } else if (spec.name == "f3") {
        CheckReport report = check_f3_surjectivity(family);
        all_pass = all_pass && report.all_pass();
        append_check_rows(rows, report, "f3");
      } else if (spec.name == "mk2sided") {
        CheckReport report = check_left_ideal_agreement(family, ideals, spec.k);
        all_pass = all_pass && report.all_pass();
        append_check_rows(rows, report, "mk2sided:" + std::to_string(spec.k));
      } else if (spec.name == "fs") {
        for (const FsOutcome& outcome : verify_fs(family, ideals)) {
          all_pass = all_pass && outcome.pass();
          json r;
          r["label"] = "fs";
          r["check"] = "fs_isomorphism";
          r["degree"] = degree_json(outcome.degree);
          r["value"] = outcome.pass() ? 1 : 0;
          r["phi_kills_m3"] = outcome.phi_kills_m3 ? 1 : 0;
          r["dim_match"] = outcome.dim_match ? 1 : 0;
          r["exact_match"] = outcome.exact_match ? 1 : 0;
          r["dim_a"] = outcome.dim_a;
          r["dim_m3"] = outcome.dim_m3;
          r["dim_omega_ev"] = outcome.dim_omega_ev;
          rows.push_back(std::move(r));
        }
      }
    }
    return finish(job, std::move(rows), all_pass ? 0 : 1, "off", start);
  } catch (const BudgetExceeded& e) {
    return budget_error_result(job, e, start);
  }
}

RunResult run_schur(const JobSpec& job) {
  auto start = Clock::now();
  if (job.n != 0) {
    throw std::invalid_argument(
        "schur: tensor-field decomposition needs n = 0 (use `conjecture "
        "glambda` for super algebras)");
  }
  const int k = job.k_lo > 0 ? job.k_lo : 3;
  const int D = job.max_degree;
  try {
    std::string cache_state;
    FamilyDims dims = family_dims_for_job(job, &cache_state);
    DimensionTable table = dimension_table_from(dims, k, k);
    TruncatedSeries brute =
        series_from_dims(table, SeriesKind::B, k, job.m, 0, D);
    Decomposition decomposition = decompose_tensor_field(brute, job.m, D);
    json rows = json::array();
    for (const auto& [lambda, mult] : decomposition.table) {
      json r;
      r["label"] = "decomposition";
      r["k"] = k;
      r["lambda"] = lambda.parts;
      r["degree"] = lambda.parts;
      r["value"] = mult;
      rows.push_back(std::move(r));
    }
    json status;
    status["label"] = "decomposition:success";
    status["k"] = k;
    status["value"] = decomposition.success ? 1 : 0;
    if (!decomposition.success && decomposition.failed_degree) {
      status["failed_degree"] = degree_json(*decomposition.failed_degree);
      status["failed_coeff"] = rational_json(decomposition.failed_coeff);
    }
    rows.push_back(std::move(status));
    bool bounds_ok = true;
    // The size and bar bounds are claims about k >= 3 only.
    if (decomposition.success && k >= 3) {
      LambdaBoundsReport bounds = check_lambda_bounds(decomposition.table, k, job.m);
      bounds_ok = bounds.all_pass();
      for (const LambdaBoundRow& row : bounds.rows) {
        json r;
        r["label"] = "lambda_bound";
        r["k"] = k;
        r["lambda"] = row.lambda.parts;
        r["degree"] = row.lambda.parts;
        r["size"] = row.size;
        r["bar_size"] = row.bar_size;
        r["size_bound"] = bounds.size_bound;
        r["bar_bound"] = bounds.bar_bound;
        r["value"] = (row.size_ok && row.bar_ok) ? 1 : 0;
        rows.push_back(std::move(r));
      }
    }
    int exit_code = (decomposition.success && bounds_ok) ? 0 : 1;
    return finish(job, std::move(rows), exit_code, cache_state, start);
  } catch (const BudgetExceeded& e) {
    return budget_error_result(job, e, start);
  }
}

RunResult run_conjecture(const JobSpec& job) {
  auto start = Clock::now();
  const int k = job.k_lo > 0 ? job.k_lo : 3;
  const int D = job.max_degree;
  std::string probe = job.probe.empty() ? "rational" : job.probe;
  try {
    std::string cache_state;
    FamilyDims dims = family_dims_for_job(job, &cache_state);
    DimensionTable table = dimension_table_from(dims, k, k);
    TruncatedSeries brute =
        series_from_dims(table, SeriesKind::B, k, job.m, job.n, D);
    json rows = json::array();
    if (probe == "rational") {
      RationalityProbe result = rationality_probe(brute, job.m, job.n);
      json status;
      status["label"] = "rational:success";
      status["k"] = k;
      status["value"] = result.success ? 1 : 0;
      if (!result.success && result.offending_degree) {
        status["offending_degree"] = degree_json(*result.offending_degree);
      }
      rows.push_back(std::move(status));
      if (result.success) {
        for (const auto& [key, c] : result.numerator.coeffs()) {
          json r;
          r["label"] = "rational:numerator";
          r["k"] = k;
          r["degree"] = degree_json(key.degree);
          r["value"] = rational_json(c);
          rows.push_back(std::move(r));
        }
      }
    } else if (probe == "glambda") {
      GLambdaFit fit = fit_g_lambda(brute, job.m, job.n, D);
      json status;
      status["label"] = "glambda:success";
      status["k"] = k;
      status["value"] = fit.success ? 1 : 0;
      rows.push_back(std::move(status));
      for (const auto& [lambda, mult] : fit.multiset) {
        json r;
        r["label"] = "glambda:term";
        r["k"] = k;
        r["lambda"] = lambda.parts;
        r["degree"] = lambda.parts;
        r["value"] = mult;
        rows.push_back(std::move(r));
      }
      if (!fit.success) {
        json r;
        r["label"] = "glambda:residual_terms";
        r["k"] = k;
        r["value"] = static_cast<long>(fit.residual.coeffs().size());
        rows.push_back(std::move(r));
      }
    } else if (probe == "weakbound") {
      std::vector<std::pair<int, long>> totals;
      auto collapsed = dimension_table_from(dims, k, k).collapsed_by_total();
      for (const DimRow& row : collapsed.rows) {
        if (row.series == SeriesKind::B && row.k == k) {
          totals.emplace_back(row.degree[0], row.dim);
        }
      }
      WeakboundFit fit = weakbound_fit(totals, job.m, job.n);
      json c;
      c["label"] = "weakbound:constant";
      c["k"] = k;
      c["value"] = rational_json(fit.constant);
      rows.push_back(std::move(c));
      json holds;
      holds["label"] = "weakbound:holds";
      holds["k"] = k;
      holds["value"] = fit.holds ? 1 : 0;
      rows.push_back(std::move(holds));
      for (const auto& [d, dim] : totals) {
        json r;
        r["label"] = "weakbound:dim";
        r["k"] = k;
        r["degree"] = json::array({d});
        r["value"] = dim;
        rows.push_back(std::move(r));
      }
    } else {
      throw std::invalid_argument("unknown probe '" + probe + "'");
    }
    return finish(job, std::move(rows), 0, cache_state, start);
  } catch (const BudgetExceeded& e) {
    return budget_error_result(job, e, start);
  }
}

RunResult run_job(const JobSpec& job) {
  if (job.command == "dims") return run_dims(job);
  if (job.command == "series") return run_series(job);
  if (job.command == "verify") return run_verify(job);
  if (job.command == "schur") return run_schur(job);
  if (job.command == "conjecture") return run_conjecture(job);
  throw std::invalid_argument("unknown command '" + job.command + "'");
}

namespace {

std::string csv_value(const json& value) {
  if (value.is_object()) {
    std::string num = value.value("num", "0");
    std::string den = value.value("den", "1");
    return den == "1" ? num : num + "/" + den;
  }
  if (value.is_boolean()) return value.get<bool>() ? "1" : "0";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

}  // namespace

std::string render_csv(const RunResult& result) {
  std::ostringstream out;
  for (const auto& [key, value] : result.manifest.items()) {
    out << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  }
  out << "m,n,series_or_check,k,degree_vector,t_power,value\n";
  for (const auto& row : result.rows) {
    out << result.manifest.value("m", 0) << ","
        << result.manifest.value("n", 0) << ",";
    out << row.value("label", "") << ",";
    if (row.contains("k")) out << row.at("k").get<int>();
    out << ",";
    if (row.contains("degree")) {
      const auto& degree = row.at("degree");
      for (std::size_t i = 0; i < degree.size(); ++i) {
        if (i) out << ";";
        out << degree[i].get<int>();
      }
    }
    out << ",";
    if (row.contains("t_power") && !row.at("t_power").is_null()) {
      out << row.at("t_power").get<int>();
    }
    out << ",";
    out << csv_value(row.value("value", json())) << "\n";
  }
  return out.str();
}

std::string render_json(const RunResult& result) {
  nlohmann::json out;
  out["manifest"] = result.manifest;
  out["rows"] = result.rows;
  return out.dump(2);
}

}  // namespace lcs
