#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sffkit::harness {

enum class Scale { Desk, Full };

struct FigureOptions {
  int id = 1;
  Scale scale = Scale::Desk;
  std::uint64_t nsim_cap = 0;  // 0: scale default
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out_dir = ".";
};

struct FigureReport {
  std::vector<std::string> files;
  std::vector<std::string> notes;
  bool consistent = true;  // 5 SE checks, where the figure has them
};

FigureReport reproduce_figure(const FigureOptions& opt);

}  // namespace sffkit::harness
