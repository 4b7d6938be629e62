#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "cyclemine/iupcar.hpp"
#include "cyclemine/model.hpp"

namespace cyclemine {

// Transaction text format: one transaction per line, items as
// whitespace-separated non-negative integers. Blank lines and lines starting
// with '#' are skipped; they do not count as transactions. A non-skipped line
// that fails to parse raises MalformedTransaction with its 1-based line
// number.
std::vector<std::vector<Item>> parse_transactions(std::istream& in);
std::vector<std::vector<Item>> load_transactions(const std::string& path);
void write_transactions(std::ostream& out,
                        const std::vector<std::vector<Item>>& records);
void write_transactions_file(const std::string& path,
                             const std::vector<std::vector<Item>>& records);

// Mining-state file format, line oriented:
//   CYCLEMINE-STATE v1
//   units=<n> l=<n> min_sup=<n> min_conf=<num/den> literal=<0|1> entries=<n>
//   <item> <item> ... <FC|FPC> <weight num/den> <abs> <hist>   (one per entry)
// A wrong magic or version raises VersionMismatch; any other structural
// problem raises CorruptState carrying the 1-based record index when the
// problem is inside an entry record.
void save_state(std::ostream& out, const MiningState& state);
void save_state_file(const std::string& path, const MiningState& state);
MiningState load_state(std::istream& in);
MiningState load_state_file(const std::string& path);

// Synthetic data generation: `units` time units, one transaction per unit,
// noise items drawn uniformly from [0, alphabet_size) with Poisson(noise_rate)
// items per unit, plus planted patterns that fire with probability
// `probability` on every unit in their offset class. Deterministic for a
// fixed seed.
struct PlantedPattern {
  Itemset itemset;
  unsigned offset = 0;
  unsigned length = 1;  // cycle length the pattern repeats on
  double probability = 1.0;
};

struct GeneratorConfig {
  std::uint64_t units = 0;
  std::uint32_t alphabet_size = 1;
  std::vector<PlantedPattern> patterns;
  double noise_rate = 0.0;
  std::uint64_t seed = 0;
};

std::vector<std::vector<Item>> generate_transactions(const GeneratorConfig& config);

}  // namespace cyclemine
