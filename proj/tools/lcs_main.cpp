// lcs: command-line front end for the lower-central-series workbench.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lcs/workbench.hpp"

namespace {

void parse_k_range(const std::string& text, lcs::JobSpec* job) {
  if (text.empty()) return;
  auto dash = text.find('-');
  if (dash == std::string::npos) {
    job->k_lo = job->k_hi = std::stoi(text);
  } else {
    job->k_lo = std::stoi(text.substr(0, dash));
    job->k_hi = std::stoi(text.substr(dash + 1));
  }
}

void add_common_flags(CLI::App* cmd, lcs::JobSpec* job, std::string* k_text) {
  cmd->add_option("--m", job->m, "number of even generators");
  cmd->add_option("--n", job->n, "number of odd generators");
  cmd->add_option("--max-degree", job->max_degree,
                  "total-degree cutoff D (default 4)");
  cmd->add_option("--k", *k_text, "quotient index k, or a range like 2-4");
  cmd->add_option("--format", job->format, "output format: json or csv");
  cmd->add_option("--cache-dir", job->cache_dir,
                  "dimension cache directory (default $LCS_CACHE_DIR)");
  cmd->add_flag("--no-cache", job->no_cache, "bypass the dimension cache");
  cmd->add_option("--seed", job->seed, "seed recorded in the manifest");
  cmd->add_option("--budget", job->budget,
                  "per-component dimension cap (default 5000)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for lower central series of free superalgebras"};
  app.require_subcommand(1);

  lcs::JobSpec job;
  std::string k_text;
  std::string schur_target;

  CLI::App* dims = app.add_subcommand("dims", "B_k/N_k/Bbar1 dimension tables");
  add_common_flags(dims, &job, &k_text);

  CLI::App* series = app.add_subcommand(
      "series", "printed vs validated vs brute-force Hilbert series");
  add_common_flags(series, &job, &k_text);

  CLI::App* verify = app.add_subcommand(
      "verify", "bracket/ideal inclusions, generation and phi checks");
  add_common_flags(verify, &job, &k_text);
  verify->add_option(
      "--checks", job.checks,
      "comma-separated checks: bracket:j:k, product:j:k, bmcor:k, f3, fs, "
      "mk2sided:k (default: bracket:3:1,product:3:2,bmcor:3,f3,fs)")
      ->delimiter(',');

  CLI::App* schur = app.add_subcommand(
      "schur", "tensor-field decomposition of brute-force B_k (n = 0)");
  add_common_flags(schur, &job, &k_text);
  schur->add_option("target", schur_target,
                    "decomposition target, e.g. b3 (shorthand for --k 3)");

  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "rationality / glambda / weakbound probes on B_k");
  add_common_flags(conjecture, &job, &k_text);
  conjecture
      ->add_option("probe", job.probe,
                   "one of: rational, glambda, weakbound (default rational)")
      ->check(CLI::IsMember({"rational", "glambda", "weakbound"}));

  CLI11_PARSE(app, argc, argv);

  try {
    job.command = app.get_subcommands().front()->get_name();
    parse_k_range(k_text, &job);
    if (!schur_target.empty()) {
      if (schur_target.size() < 2 || schur_target[0] != 'b') {
        throw std::invalid_argument("schur target must look like b3");
      }
      job.k_lo = job.k_hi = std::stoi(schur_target.substr(1));
    }
    if (job.m + job.n < 1) {
      throw std::invalid_argument("need at least one generator (--m/--n)");
    }
    if (job.max_degree < 1) {
      throw std::invalid_argument("--max-degree must be at least 1");
    }
    if (job.format != "json" && job.format != "csv") {
      throw std::invalid_argument("--format must be json or csv");
    }

    lcs::RunResult result = lcs::run_job(job);
    if (job.format == "csv") {
      std::cout << lcs::render_csv(result);
    } else {
      std::cout << lcs::render_json(result) << "\n";
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "lcs: " << e.what() << "\n";
    return 2;
  }
}
