// Copyright 2026 The hspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hspec/cli.hpp"

namespace {

// "5..8" or "6" -> [lo, hi]
bool parse_range(const std::string& text, int& lo, int& hi) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo <= hi;
}

// "3,4,5" -> {3, 4, 5}
bool parse_int_list(const std::string& text, std::vector<int>& out) {
  out.clear();
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

hspec::CampaignConfig::Format parse_format(const std::string& text) {
  if (text == "csv") return hspec::CampaignConfig::Format::Csv;
  return hspec::CampaignConfig::Format::Json;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hspec: spectral radius, minimum H-eigenvalue, and spectral-gap bound "
               "verification for k-uniform hypergraphs"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_input;
  double analyze_tol = 1e-10;
  long long analyze_max_iter = 1000000;
  int analyze_restarts = 64;
  std::uint64_t analyze_seed = 42;
  std::string analyze_format = "json";
  std::string analyze_out;
  bool analyze_skip_mu = false;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one .khg instance");
  analyze->add_option("input", analyze_input, ".khg file, or '-' for stdin")->required();
  analyze->add_option("--tol", analyze_tol, "spectral enclosure tolerance");
  analyze->add_option("--max-iter", analyze_max_iter, "power iteration cap");
  analyze->add_option("--restarts", analyze_restarts, "descent restarts for the mu estimate");
  analyze->add_option("--seed", analyze_seed, "seed for the mu estimate restarts");
  analyze->add_option("--format", analyze_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--out", analyze_out, "write the report to a file instead of stdout");
  analyze->add_flag("--skip-mu", analyze_skip_mu, "skip the mu estimate (even k only)");

  // verify
  hspec::CampaignConfig cfg;
  std::string verify_mode = "random";
  std::string verify_n = "5..8";
  std::string verify_k = "3,4,5";
  std::string verify_format = "json";
  CLI::App* verify = app.add_subcommand("verify", "run a bound-verification campaign");
  verify->add_option("--mode", verify_mode, "enumerate or random")
      ->check(CLI::IsMember({"enumerate", "random"}));
  verify->add_option("--n", verify_n, "vertex-count range, e.g. 5..8 or 6");
  verify->add_option("--k", verify_k, "uniformity list, e.g. 3,4,5");
  verify->add_option("--count", cfg.count, "instances per (k, n) cell in random mode");
  verify->add_option("--seed", cfg.seed, "campaign seed");
  verify->add_option("--tol", cfg.tol, "spectral enclosure tolerance");
  verify->add_option("--max-iter", cfg.max_iter, "power iteration cap");
  verify->add_option("--restarts", cfg.restarts, "descent restarts for mu estimates");
  verify->add_flag("--with-mu", cfg.with_mu, "also run mu estimates (slower)");
  verify->add_option("--format", verify_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", cfg.out_path, "write reports to a file (summary then on stdout)");

  // gen
  int gen_n = 0, gen_k = 0, gen_m = 0;
  std::uint64_t gen_seed = 42;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance in .khg form");
  gen->add_option("n", gen_n, "vertex count")->required();
  gen->add_option("k", gen_k, "uniformity")->required();
  gen->add_option("m", gen_m, "edge count")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (analyze->parsed()) {
    hspec::VerifyOptions opts;
    opts.tol = analyze_tol;
    opts.max_iter = analyze_max_iter;
    opts.with_mu = !analyze_skip_mu;
    opts.restarts = analyze_restarts;
    opts.mu_seed = analyze_seed;
    return hspec::cmd_analyze(analyze_input, opts, parse_format(analyze_format), analyze_out,
                              std::cout, std::cerr);
  }
  if (verify->parsed()) {
    if (!parse_range(verify_n, cfg.n_lo, cfg.n_hi)) {
      std::cerr << "error: bad --n range '" << verify_n << "'\n";
      return 2;
    }
    if (!parse_int_list(verify_k, cfg.ks)) {
      std::cerr << "error: bad --k list '" << verify_k << "'\n";
      return 2;
    }
    cfg.mode = verify_mode == "enumerate" ? hspec::CampaignConfig::Mode::Enumerate
                                          : hspec::CampaignConfig::Mode::Random;
    cfg.format = parse_format(verify_format);
    return hspec::cmd_verify(cfg, std::cout, std::cerr);
  }
  return hspec::cmd_gen(gen_n, gen_k, gen_m, gen_seed, gen_out, std::cout, std::cerr);
}
