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

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "hspec/bounds.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/mu_min.hpp"
#include "hspec/rational.hpp"
#include "hspec/spectral_radius.hpp"
#include "hspec/structure.hpp"

namespace hspec {

enum class Verdict { CertifiedTrue, TrueWithinTolerance, NotApplicable, Failed };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedTrue:
      return "certified-true";
    case Verdict::TrueWithinTolerance:
      return "true-within-tolerance";
    case Verdict::NotApplicable:
      return "not-applicable";
    default:
      return "FAILED";
  }
}

/// Bound families with exact rational values.
inline const std::array<std::string, 6>& bound_families() {
  static const std::array<std::string, 6> fams = {
      "gap_diameter", "gap_econn_k5", "gap_econn_k4",
      "gap_universal", "gap_diameter_k2", "mu_diameter_k2"};
  return fams;
}

/// All claims that receive a verdict.
inline const std::array<std::string, 9>& claim_names() {
  static const std::array<std::string, 9> names = {
      "gap_diameter",  "gap_econn_k5",    "gap_econn_k4",
      "gap_universal", "gap_diameter_k2", "mu_gap_universal",
      "mu_diameter_k2", "perron_gap",     "path_square"};
  return names;
}

struct VerifyOptions {
  double tol = 1e-10;
  long long max_iter = 1000000;
  bool with_mu = false;
  int restarts = 64;
  double mu_tol = 1e-8;
  std::uint64_t mu_seed = 0;
};

/// Everything the verifier knows about one instance: structural stats, the
/// spectral-radius enclosure, the mu estimate (even k), the exact rational
/// value of every applicable bound, and one verdict per claim.
struct BoundReport {
  int n = 0, m = 0, k = 0, delta = 0;
  bool connected = false;
  bool regular = false;
  std::optional<int> diameter;
  std::optional<int> edge_conn;
  std::optional<bool> odd_bipartite;
  std::optional<SpectralEnclosure> rho;
  std::optional<MuEstimate> mu;
  std::map<std::string, Rational> bounds;
  std::map<std::string, Verdict> verdicts;
  std::optional<std::string> witness_khg;  // instance serialization, set on any FAILED

  bool any_failed() const {
    for (const auto& [name, v] : verdicts)
      if (v == Verdict::Failed) return true;
    return false;
  }
};

namespace detail {

// Strict comparison of the gap delta - rho against an exact bound, using the
// enclosure endpoints pushed outward by one more ulp. Certified when even
// the pessimistic gap clears the bound; FAILED when even the optimistic gap
// cannot (a genuine counterexample); undecided in between.
inline Verdict certified_gap_verdict(long long delta, const SpectralEnclosure& enc,
                                     const Rational& bound) {
  const double up = std::nextafter(enc.upper, std::numeric_limits<double>::infinity());
  if (Rational(delta) - Rational::from_double_exact(up) > bound) return Verdict::CertifiedTrue;
  const double lo = std::nextafter(enc.lower, -std::numeric_limits<double>::infinity());
  if (Rational(delta) - Rational::from_double_exact(lo) <= bound) return Verdict::Failed;
  return Verdict::TrueWithinTolerance;
}

}  // namespace detail

/// Full per-instance pipeline: structural stats, rho enclosure, mu estimate
/// (even k, opt-in), exact bound values, and a verdict for every claim.
/// Claims that do not apply report "not-applicable".
inline BoundReport analyze_instance(const Hypergraph& H, const VerifyOptions& opts = {}) {
  BoundReport r;
  r.n = H.n();
  r.m = H.m();
  r.k = H.k();
  const DegreeProfile dp = degree_profile(H);
  r.delta = dp.delta_max;
  r.regular = dp.delta_min == dp.delta_max;
  r.connected = is_connected(H);
  for (const std::string& name : claim_names()) r.verdicts[name] = Verdict::NotApplicable;

  if (r.m >= 1) r.odd_bipartite = static_cast<bool>(odd_bipartition(H));
  if (r.connected) {
    r.diameter = diameter(H);
    if (r.n >= 2) r.edge_conn = edge_connectivity(H).f;
    if (r.m >= 1) r.rho = rho_enclose(H, opts.tol, opts.max_iter);
  }
  if (opts.with_mu && r.connected && r.k % 2 == 0 && r.m >= 1) {
    if (r.odd_bipartite.value_or(false))
      r.mu = mu_odd_bipartite_exact(H, *r.rho);
    else
      r.mu = mu_estimate(H, opts.restarts, opts.mu_tol, opts.mu_seed);
  }

  const bool gap_applicable = r.connected && !r.regular && r.m >= 1;
  if (gap_applicable) {
    const long long n = r.n, m = r.m, k = r.k, delta = r.delta;
    const long long D = *r.diameter;
    const long long f = *r.edge_conn;

    r.bounds.emplace("gap_diameter", bound_gap_diameter(n, m, k, delta, D));
    r.verdicts["gap_diameter"] =
        detail::certified_gap_verdict(delta, *r.rho, r.bounds.at("gap_diameter"));
    if (k >= 5) {
      r.bounds.emplace("gap_econn_k5", bound_gap_econn_k5(n, m, k, delta, f));
      r.verdicts["gap_econn_k5"] =
          detail::certified_gap_verdict(delta, *r.rho, r.bounds.at("gap_econn_k5"));
    }
    if (k == 4) {
      r.bounds.emplace("gap_econn_k4", bound_gap_econn_k4(n, m, delta, f));
      r.verdicts["gap_econn_k4"] =
          detail::certified_gap_verdict(delta, *r.rho, r.bounds.at("gap_econn_k4"));
    }
    if (k >= 4) {
      r.bounds.emplace("gap_universal", bound_gap_universal(n));
      r.verdicts["gap_universal"] =
          detail::certified_gap_verdict(delta, *r.rho, r.bounds.at("gap_universal"));
    }
    if (k == 2) {
      r.bounds.emplace("gap_diameter_k2", bound_gap_diameter_k2(n, m, delta, D));
      r.verdicts["gap_diameter_k2"] =
          detail::certified_gap_verdict(delta, *r.rho, r.bounds.at("gap_diameter_k2"));
    }

    r.verdicts["perron_gap"] = perron_gap_check(H, *r.rho, opts.tol)
                                   ? Verdict::TrueWithinTolerance
                                   : Verdict::Failed;
    int u = 1, v = 1;
    for (int i = 1; i <= r.n; ++i) {
      if (r.rho->x[i - 1] > r.rho->x[u - 1]) u = i;
      if (r.rho->x[i - 1] < r.rho->x[v - 1]) v = i;
    }
    if (u != v) {
      const HyperPath path = shortest_path(H, u, v);
      r.verdicts["path_square"] = path_square_check(H, r.rho->x, path)
                                      ? Verdict::TrueWithinTolerance
                                      : Verdict::Failed;
    }
  }

  if (r.k == 2 && r.connected && r.m >= 1) {
    r.bounds.emplace("mu_diameter_k2", bound_mu_diameter_k2(r.n, *r.diameter));
    if (r.mu && r.odd_bipartite == false) {
      // Non-strict reference bound; mu is an estimate from above, so a pass
      // is consistency only.
      const Rational lhs = Rational(r.delta) + Rational::from_double_exact(r.mu->value);
      r.verdicts["mu_diameter_k2"] = lhs >= r.bounds.at("mu_diameter_k2")
                                         ? Verdict::TrueWithinTolerance
                                         : Verdict::Failed;
    }
  }

  if (r.k % 2 == 0 && r.k >= 4 && r.connected && r.m >= 1 && r.odd_bipartite == false && r.mu) {
    const Rational lhs = Rational(r.delta) + Rational::from_double_exact(r.mu->value);
    r.verdicts["mu_gap_universal"] = lhs > bound_gap_universal(r.n)
                                         ? Verdict::TrueWithinTolerance
                                         : Verdict::Failed;
  }

  if (r.any_failed()) r.witness_khg = to_khg(H);
  return r;
}

/// Gap-bound verification for one instance (no mu); regular or disconnected
/// inputs yield an all-not-applicable report rather than an error.
inline BoundReport verify_gap_bounds(const Hypergraph& H, const VerifyOptions& opts = {}) {
  VerifyOptions o = opts;
  o.with_mu = false;
  return analyze_instance(H, o);
}

/// The universal 1/(3n) gap claim for k >= 4; regular input is not applicable.
inline Verdict verify_universal_gap(const Hypergraph& H, const VerifyOptions& opts = {}) {
  if (H.k() < 4) throw std::invalid_argument("verify_universal_gap: requires k >= 4");
  if (!is_connected(H) || is_regular(H) || H.m() == 0) return Verdict::NotApplicable;
  const SpectralEnclosure enc = rho_enclose(H, opts.tol, opts.max_iter);
  return detail::certified_gap_verdict(degree_profile(H).delta_max, enc,
                                       bound_gap_universal(H.n()));
}

/// The delta + mu > 1/(3n) claim for even k >= 4 on non-odd-bipartite
/// connected instances. The mu estimate bounds mu from above, so a pass is
/// non-falsification (true-within-tolerance), never a certificate; a FAILED
/// verdict would be a genuine counterexample.
inline Verdict verify_mu_gap(const Hypergraph& H, const VerifyOptions& opts = {}) {
  if (H.k() % 2 != 0) throw std::invalid_argument("verify_mu_gap: requires even k");
  if (H.k() < 4) throw std::invalid_argument("verify_mu_gap: requires k >= 4");
  if (!is_connected(H)) throw std::invalid_argument("verify_mu_gap: hypergraph is disconnected");
  if (H.m() == 0) throw std::invalid_argument("verify_mu_gap: hypergraph has no edges");
  if (odd_bipartition(H)) return Verdict::NotApplicable;
  const MuEstimate mu = mu_estimate(H, opts.restarts, opts.mu_tol, opts.mu_seed);
  const Rational lhs = Rational(degree_profile(H).delta_max) + Rational::from_double_exact(mu.value);
  return lhs > bound_gap_universal(H.n()) ? Verdict::TrueWithinTolerance : Verdict::Failed;
}

// --- serialization ----------------------------------------------------------

namespace detail {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = r.k;
  j["delta"] = r.delta;
  j["diameter"] = r.diameter ? nlohmann::ordered_json(*r.diameter) : nlohmann::ordered_json();
  j["edge_connectivity"] =
      r.edge_conn ? nlohmann::ordered_json(*r.edge_conn) : nlohmann::ordered_json();
  j["regular"] = r.regular;
  j["odd_bipartite"] =
      r.odd_bipartite ? nlohmann::ordered_json(*r.odd_bipartite) : nlohmann::ordered_json();
  j["rho_lower"] = r.rho ? nlohmann::ordered_json(r.rho->lower) : nlohmann::ordered_json();
  j["rho_upper"] = r.rho ? nlohmann::ordered_json(r.rho->upper) : nlohmann::ordered_json();
  j["mu_estimate"] = r.mu ? nlohmann::ordered_json(r.mu->value) : nlohmann::ordered_json();
  nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.bounds) bounds[name] = value.str();
  j["bounds"] = bounds;
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
  for (const auto& [name, v] : r.verdicts) verdicts[name] = to_string(v);
  j["verdicts"] = verdicts;
  if (r.witness_khg) j["witness"] = *r.witness_khg;
  return j;
}

inline std::string csv_header() {
  std::string h = "id,n,m,k,delta,diameter,edge_connectivity,regular,odd_bipartite,rho_lower,"
                  "rho_upper,mu_estimate";
  for (const std::string& fam : bound_families()) h += "," + fam + "," + fam + "_float";
  for (const std::string& name : claim_names()) h += ",verdict_" + name;
  return h;
}

inline std::string report_to_csv_row(const std::string& id, const BoundReport& r) {
  std::string row = id;
  auto add = [&row](const std::string& s) { row += "," + s; };
  add(std::to_string(r.n));
  add(std::to_string(r.m));
  add(std::to_string(r.k));
  add(std::to_string(r.delta));
  add(r.diameter ? std::to_string(*r.diameter) : "");
  add(r.edge_conn ? std::to_string(*r.edge_conn) : "");
  add(r.regular ? "true" : "false");
  add(r.odd_bipartite ? (*r.odd_bipartite ? "true" : "false") : "");
  add(r.rho ? detail::format_double(r.rho->lower) : "");
  add(r.rho ? detail::format_double(r.rho->upper) : "");
  add(r.mu ? detail::format_double(r.mu->value) : "");
  for (const std::string& fam : bound_families()) {
    auto it = r.bounds.find(fam);
    if (it == r.bounds.end()) {
      add("");
      add("");
    } else {
      add(it->second.str());
      add(detail::format_double(it->second.to_double()));
    }
  }
  for (const std::string& name : claim_names()) add(to_string(r.verdicts.at(name)));
  return row;
}

}  // namespace hspec
