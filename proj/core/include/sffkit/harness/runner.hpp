#pragma once

#include "sffkit/analytics.hpp"
#include "sffkit/estimator.hpp"
#include "sffkit/harness/config.hpp"

namespace sffkit::harness {

// Samples the configured batch range. Batches are dealt to workers whole and
// merged in batch order, so the result does not depend on the thread count.
MomentAccumulator accumulate_run(const RunConfig& cfg);

struct SimulationResult {
  MomentAccumulator acc;
  MomentTable table;
  PredictionCurve prediction;
};

SimulationResult simulate(const RunConfig& cfg);

// simulate() plus results.csv, snapshot.json and (with plot) sff.svg in out_dir.
SimulationResult run_simulate(const RunConfig& cfg);

void write_results(const std::string& out_dir, const MomentAccumulator& acc, const MomentTable& table,
                   const PredictionCurve& pred, std::uint64_t seed, bool plot);

}  // namespace sffkit::harness
