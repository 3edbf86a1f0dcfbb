#include "sffkit/harness/snapshot.hpp"

#include "json.hpp"
#include "sffkit/error.hpp"
#include "sffkit/harness/csv.hpp"

namespace sffkit::harness {

using nlohmann::json;

std::string snapshot_json(const MomentAccumulator& acc, std::uint64_t seed) {
  const auto& g = acc.grid();
  json j;
  j["magic"] = kSnapshotMagic;
  j["version"] = kSnapshotVersion;
  j["config"] = {
      {"ensemble", to_string(g.kind)},
      {"dim", g.dim},
      {"seed", seed},
      {"nsim", acc.n_sim()},
      {"nmax", acc.n_max()},
      {"batches", acc.batches()},
      {"th_convention", to_string(g.convention)},
      {"times", g.times},
  };
  json batches = json::array();
  for (int b = 0; b < acc.batches(); ++b) {
    const auto c = acc.batch_count(b);
    if (c == 0) continue;
    batches.push_back({{"index", b}, {"count", c}, {"sums", acc.batch_sums(b)}});
  }
  j["batches"] = std::move(batches);
  return j.dump(1);
}

Snapshot parse_snapshot(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Io, std::string("snapshot is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("magic").get<std::string>() != kSnapshotMagic) throw Error(ErrorCode::Io, "snapshot magic mismatch");
    if (j.at("version").get<int>() != kSnapshotVersion) throw Error(ErrorCode::Io, "unsupported snapshot version");
    const auto& c = j.at("config");
    const auto kind = parse_ensemble(c.at("ensemble").get<std::string>());
    const int dim = c.at("dim").get<int>();
    const auto conv = parse_th_convention(c.at("th_convention").get<std::string>());
    auto grid = TimeGrid::from_times(kind, dim, c.at("times").get<std::vector<double>>(), conv);
    MomentAccumulator acc(std::move(grid), c.at("nmax").get<int>(), c.at("nsim").get<std::uint64_t>(),
                          c.at("batches").get<int>());
    for (const auto& b : j.at("batches")) {
      acc.set_batch(b.at("index").get<int>(), b.at("count").get<std::uint64_t>(),
                    b.at("sums").get<std::vector<double>>());
    }
    return {std::move(acc), c.at("seed").get<std::uint64_t>()};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Io, std::string("malformed snapshot: ") + e.what());
  }
}

void save_snapshot(const std::string& path, const MomentAccumulator& acc, std::uint64_t seed) {
  write_text_file(path, snapshot_json(acc, seed));
}

Snapshot load_snapshot(const std::string& path) { return parse_snapshot(read_text_file(path)); }

Snapshot merge_snapshots(const std::vector<Snapshot>& parts) {
  if (parts.empty()) throw Error(ErrorCode::Config, "merge: no snapshots given");
  Snapshot out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& p = parts[i];
    const auto& a = out.acc;
    const auto& b = p.acc;
    if (p.seed != out.seed || !(a.grid() == b.grid()) || a.n_max() != b.n_max() || a.n_sim() != b.n_sim() ||
        a.batches() != b.batches()) {
      throw Error(ErrorCode::Config, "merge: snapshot " + std::to_string(i) + " has a different configuration");
    }
    for (int k = 0; k < a.batches(); ++k) {
      if (a.batch_count(k) > 0 && b.batch_count(k) > 0) {
        throw Error(ErrorCode::Config, "merge: batch " + std::to_string(k) + " present in more than one snapshot");
      }
    }
    out.acc.merge(b);
  }
  return out;
}

}  // namespace sffkit::harness
