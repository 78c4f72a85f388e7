#include "twosig/features.hpp"

#include <cstdio>

namespace twosig {

bool FeatureReport::any_guard_exceeded() const {
  for (const auto& e : entries) {
    if (e.error) return true;
  }
  return false;
}

io::Json report_to_json(const FeatureReport& report, bool include_timing) {
  io::Json features = io::Json::array();
  for (const auto& e : report.entries) {
    io::Json f;
    f["composition"] = io::to_json(e.composition);
    if (e.value) {
      f["value"] = *e.value;
    } else {
      f["value"] = nullptr;
      f["error"] = e.error.value_or("evaluation failed");
    }
    if (include_timing) f["strategy"] = e.strategy;
    features.push_back(std::move(f));
  }
  io::Json out;
  out["input"] = report.input;
  out["scalar"] = report.scalar;
  out["d"] = report.d;
  out["W"] = report.max_weight;
  out["features"] = std::move(features);
  if (include_timing) {
    io::Json timing = io::Json::object();
    for (const auto& [name, s] : report.seconds_by_strategy) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", s);
      timing[name] = buf;
    }
    out["timing_seconds"] = std::move(timing);
  }
  return out;
}

}  // namespace twosig
