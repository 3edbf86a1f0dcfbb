#pragma once

#include <cstdint>
#include <string>

#include "sffkit/analytics.hpp"
#include "sffkit/estimator.hpp"

namespace sffkit::harness {

inline constexpr const char* kResultsVersion = "# sffkit-results v1";
inline constexpr const char* kPredictionsVersion = "# sffkit-predictions v1";

std::string format_double(double x);
std::string results_header(int n_max);
std::string results_csv(const MomentTable& table, const PredictionCurve& pred, std::uint64_t n_sim);
std::string predictions_header();
std::string predictions_csv(const PredictionCurve& pred, double n_sim);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace sffkit::harness
