#ifndef TWOSIG_FEATURES_HPP
#define TWOSIG_FEATURES_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twosig/io.hpp"
#include "twosig/signature.hpp"

namespace twosig {

struct FeatureEntry {
  MatrixComposition composition;
  std::optional<std::string> value;  // absent when evaluation failed
  std::string strategy;
  std::optional<std::string> error;
};

/// The warping invariants of one grid for every composition up to a weight.
struct FeatureReport {
  std::string input;
  std::string scalar;
  unsigned max_weight = 0;
  std::size_t d = 1;
  std::vector<FeatureEntry> entries;
  std::map<std::string, double> seconds_by_strategy;

  bool any_guard_exceeded() const;
};

struct FeatureOptions {
  std::string input;
  unsigned threads = 0;
  std::uint64_t guard = default_guard();
};

template <Ring T>
FeatureReport compute_features(const EvConstGrid<T>& x, unsigned max_weight, const FeatureOptions& options = {}) {
  FeatureReport report;
  report.input = options.input;
  report.scalar = std::string(ScalarTraits<T>::name);
  report.max_weight = max_weight;
  report.d = x.d();
  const auto z = delta(x);
  const auto window = full_window(z);
  const auto& comps = compositions_up_to_cached(x.d(), max_weight);
  report.entries.resize(comps.size());
  std::vector<double> seconds(comps.size(), 0.0);
  parallel_for(
      comps.size(),
      [&](std::size_t i) {
        auto& e = report.entries[i];
        e.composition = comps[i];
        Strategy s = select_strategy<T>(comps[i]);
        e.strategy = std::string(strategy_name(s));
        const auto start = std::chrono::steady_clock::now();
        try {
          e.value = format_scalar(ss_coeff(z, comps[i], window, s, options.guard));
        } catch (const GuardExceeded& ex) {
          e.error = ex.what();
        }
        seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      },
      options.threads);
  for (std::size_t i = 0; i < comps.size(); ++i) report.seconds_by_strategy[report.entries[i].strategy] += seconds[i];
  return report;
}

/// Applies `warps` random warps (positions up to size + 2, both axes) and a
/// random constant shift, and reports whether all features are unchanged.
template <Ring T>
bool verify_invariance(const EvConstGrid<T>& x, unsigned max_weight, std::uint64_t seed, unsigned warps = 10) {
  std::mt19937_64 rng(seed);
  auto y = x;
  for (unsigned k = 0; k < warps; ++k) {
    const int axis = std::uniform_int_distribution<int>(1, 2)(rng);
    const auto [r, c] = y.size();
    const std::size_t bound = (axis == 1 ? r : c) + 2;
    y = warp(axis, std::uniform_int_distribution<std::size_t>(1, bound)(rng), y);
  }
  std::vector<T> shift(x.d());
  for (auto& s : shift) s = from_int<T>(std::uniform_int_distribution<int>(-5, 5)(rng));
  y = add_constant(y, shift);
  const auto fx = compute_features(x, max_weight);
  const auto fy = compute_features(y, max_weight);
  for (std::size_t i = 0; i < fx.entries.size(); ++i) {
    if (fx.entries[i].value != fy.entries[i].value) return false;
  }
  return true;
}

/// {"input", "scalar", "d", "W", "features": [{"composition", "value"}...]}
/// plus per-entry "strategy" and "timing_seconds" when requested; timing is the
/// only non-deterministic part.
io::Json report_to_json(const FeatureReport& report, bool include_timing);

}  // namespace twosig

#endif  // TWOSIG_FEATURES_HPP
