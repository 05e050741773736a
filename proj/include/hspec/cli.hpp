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

#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hspec/detail/rng.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/verify.hpp"

namespace hspec {

struct CampaignConfig {
  enum class Mode { Enumerate, Random };
  enum class Format { Json, Csv };

  Mode mode = Mode::Random;
  int n_lo = 5;
  int n_hi = 8;
  std::vector<int> ks = {3, 4, 5};
  int count = 200;  // per (k, n) cell, random mode
  std::uint64_t seed = 42;
  double tol = 1e-10;
  long long max_iter = 1000000;
  int restarts = 64;
  bool with_mu = false;
  std::string out_path;
  Format format = Format::Json;
};

namespace detail {

inline int worker_count(std::size_t jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("HSPEC_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return static_cast<int>(std::min<std::size_t>(hw, std::max<std::size_t>(jobs, 1)));
}

// Index-sharded worker pool; results keyed by index stay deterministic
// regardless of the thread count.
template <typename Fn>
inline void parallel_for(std::size_t count, Fn&& fn) {
  const int workers = worker_count(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto body = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> g(err_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) threads.emplace_back(body);
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

inline std::string zero_pad(int value, int width) {
  std::string s = std::to_string(value);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

}  // namespace detail

struct CampaignInstance {
  std::string id;
  Hypergraph hypergraph;
};

/// Deterministic instance stream for a campaign. Random cells draw connected
/// instances (disconnected draws are rejected and redrawn) with edge count
/// uniform in [1, min(C(n,k), 4n)]; enumerate cells sweep every connected
/// labeled instance.
inline std::vector<CampaignInstance> generate_campaign(const CampaignConfig& cfg) {
  if (cfg.n_lo > cfg.n_hi) throw std::invalid_argument("campaign: empty n range");
  if (cfg.ks.empty()) throw std::invalid_argument("campaign: empty k list");
  if (cfg.count < 0) throw std::invalid_argument("campaign: negative count");
  for (int k : cfg.ks)
    if (k < 2) throw std::invalid_argument("campaign: uniformity must be >= 2");

  std::vector<CampaignInstance> out;
  for (int k : cfg.ks) {
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
      if (k > n) continue;
      const std::string cell = "k" + std::to_string(k) + "-n" + std::to_string(n);
      if (cfg.mode == CampaignConfig::Mode::Enumerate) {
        if (binomial(n, k) > 20)
          throw std::invalid_argument("campaign: enumeration cell " + cell +
                                      " too large (more than 2^20 edge subsets)");
        int index = 0;
        enumerate_connected(n, k, [&](const Hypergraph& H) {
          out.push_back({cell + "-e" + detail::zero_pad(index++, 6), H});
        });
      } else {
        detail::Rng rng(detail::mix_seed(cfg.seed, static_cast<std::uint64_t>(k),
                                         static_cast<std::uint64_t>(n)));
        const int m_max = static_cast<int>(
            std::min<std::uint64_t>(binomial(n, k), static_cast<std::uint64_t>(4) * n));
        for (int i = 0; i < cfg.count; ++i) {
          for (int attempt = 0;; ++attempt) {
            if (attempt > 100000)
              throw std::runtime_error("campaign: failed to draw a connected instance for " + cell);
            const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m_max)));
            Hypergraph H = detail::gen_random_impl(n, k, m, rng);
            if (!is_connected(H)) continue;
            out.push_back({cell + "-r" + detail::zero_pad(i, 4), std::move(H)});
            break;
          }
        }
      }
    }
  }
  return out;
}

struct CampaignSummary {
  std::size_t instances = 0;
  std::size_t connected = 0;
  std::size_t nonregular = 0;
  std::map<std::string, std::size_t> verdict_counts;  // per verdict class
  std::map<std::string, double> min_slack;            // per bound family
  bool failed = false;
};

inline CampaignSummary summarize_reports(const std::vector<BoundReport>& reports) {
  CampaignSummary s;
  s.instances = reports.size();
  for (const BoundReport& r : reports) {
    if (r.connected) ++s.connected;
    if (!r.regular) ++s.nonregular;
    for (const auto& [name, v] : r.verdicts) ++s.verdict_counts[to_string(v)];
    if (r.any_failed()) s.failed = true;
    if (!r.rho) continue;
    for (const auto& [family, bound] : r.bounds) {
      const double slack = (r.delta - r.rho->upper) - bound.to_double();
      auto it = s.min_slack.find(family);
      if (it == s.min_slack.end() || slack < it->second) s.min_slack[family] = slack;
    }
  }
  return s;
}

inline nlohmann::ordered_json summary_to_json(const CampaignSummary& s) {
  nlohmann::ordered_json j;
  j["instances"] = s.instances;
  j["connected"] = s.connected;
  j["nonregular"] = s.nonregular;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [name, c] : s.verdict_counts) counts[name] = c;
  j["verdict_counts"] = counts;
  nlohmann::ordered_json slack = nlohmann::ordered_json::object();
  for (const auto& [family, v] : s.min_slack) slack[family] = v;
  j["min_slack"] = slack;
  return j;
}

inline std::string summary_to_text(const CampaignSummary& s) {
  std::ostringstream os;
  os << "instances: " << s.instances << " (connected " << s.connected << ", nonregular "
     << s.nonregular << ")\n";
  os << "verdicts:";
  if (s.verdict_counts.empty()) os << " none";
  for (const auto& [name, c] : s.verdict_counts) os << " " << name << "=" << c;
  os << "\n";
  if (!s.min_slack.empty()) {
    os << "min slack (delta - rho_upper - bound):";
    for (const auto& [family, v] : s.min_slack) os << " " << family << "=" << detail::format_double(v);
    os << "\n";
  }
  return os.str();
}

namespace detail {

inline bool write_payload(const std::string& out_path, const std::string& payload,
                          std::ostream& fallback, std::ostream& err) {
  if (out_path.empty()) {
    fallback << payload;
    return true;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file '" << out_path << "'\n";
    return false;
  }
  f << payload;
  return true;
}

}  // namespace detail

/// `analyze`: one instance from a .khg file ("-" reads stdin) -> one report.
/// Exit 0 when all applicable claims hold, 1 on a FAILED verdict, 2 on input
/// errors.
inline int cmd_analyze(const std::string& path, const VerifyOptions& opts,
                       CampaignConfig::Format format, const std::string& out_path,
                       std::ostream& out, std::ostream& err) {
  BoundReport report;
  try {
    Hypergraph H = [&]() {
      if (path == "-") return parse_khg(std::cin);
      std::ifstream f(path);
      if (!f) throw std::runtime_error("cannot open input file '" + path + "'");
      return parse_khg(f);
    }();
    report = analyze_instance(H, opts);
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  std::string payload;
  if (format == CampaignConfig::Format::Json) {
    payload = report_to_json(report).dump(2) + "\n";
  } else {
    payload = csv_header() + "\n" + report_to_csv_row(path, report) + "\n";
  }
  if (!detail::write_payload(out_path, payload, out, err)) return 2;
  return report.any_failed() ? 1 : 0;
}

/// `verify`: run a campaign. Reports go to --out (or stdout); the summary
/// goes to stdout (or stderr when reports occupy stdout). Identical config
/// and seed give byte-identical output. Exit 0/1/2 as for analyze.
inline int cmd_verify(const CampaignConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<CampaignInstance> instances;
  try {
    instances = generate_campaign(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::vector<BoundReport> reports(instances.size());
  try {
    detail::parallel_for(instances.size(), [&](std::size_t i) {
      VerifyOptions opts;
      opts.tol = cfg.tol;
      opts.max_iter = cfg.max_iter;
      opts.with_mu = cfg.with_mu;
      opts.restarts = cfg.restarts;
      opts.mu_seed = detail::mix_seed(cfg.seed, i, 0x4d55u);
      reports[i] = analyze_instance(instances[i].hypergraph, opts);
    });
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const CampaignSummary summary = summarize_reports(reports);

  std::string payload;
  if (cfg.format == CampaignConfig::Format::Json) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json config;
    config["mode"] = cfg.mode == CampaignConfig::Mode::Enumerate ? "enumerate" : "random";
    config["k"] = cfg.ks;
    config["n_lo"] = cfg.n_lo;
    config["n_hi"] = cfg.n_hi;
    config["count"] = cfg.count;
    config["seed"] = cfg.seed;
    config["tol"] = cfg.tol;
    config["max_iter"] = cfg.max_iter;
    config["restarts"] = cfg.restarts;
    config["with_mu"] = cfg.with_mu;
    j["config"] = config;
    j["summary"] = summary_to_json(summary);
    nlohmann::ordered_json rs = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      nlohmann::ordered_json rj = report_to_json(reports[i]);
      nlohmann::ordered_json with_id;
      with_id["id"] = instances[i].id;
      for (auto& [key, value] : rj.items()) with_id[key] = value;
      rs.push_back(std::move(with_id));
    }
    j["reports"] = rs;
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << csv_header() << "\n";
    for (std::size_t i = 0; i < reports.size(); ++i)
      os << report_to_csv_row(instances[i].id, reports[i]) << "\n";
    payload = os.str();
  }

  if (!detail::write_payload(cfg.out_path, payload, out, err)) return 2;
  // Keep stdout machine-readable when it carries the payload.
  (cfg.out_path.empty() ? err : out) << summary_to_text(summary);
  return summary.failed ? 1 : 0;
}

/// `gen`: write a random instance in canonical .khg form.
inline int cmd_gen(int n, int k, int m, std::uint64_t seed, const std::string& out_path,
                   std::ostream& out, std::ostream& err) {
  std::string payload;
  try {
    payload = to_khg(gen_random(n, k, m, seed));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (!detail::write_payload(out_path, payload, out, err)) return 2;
  return 0;
}

}  // namespace hspec
