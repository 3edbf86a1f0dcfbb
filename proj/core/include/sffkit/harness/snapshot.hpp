#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sffkit/estimator.hpp"

namespace sffkit::harness {

inline constexpr const char* kSnapshotMagic = "SFFKIT-ACCUMULATOR";
inline constexpr int kSnapshotVersion = 1;

struct Snapshot {
  MomentAccumulator acc;
  std::uint64_t seed = 0;
};

std::string snapshot_json(const MomentAccumulator& acc, std::uint64_t seed);
Snapshot parse_snapshot(const std::string& text);

void save_snapshot(const std::string& path, const MomentAccumulator& acc, std::uint64_t seed);
Snapshot load_snapshot(const std::string& path);

// Refuses differing configurations and overlapping batches.
Snapshot merge_snapshots(const std::vector<Snapshot>& parts);

}  // namespace sffkit::harness
