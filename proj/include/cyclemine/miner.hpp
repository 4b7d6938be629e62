#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cyclemine/model.hpp"

namespace cyclemine {

// Best offset class of an itemset under a fixed cycle length: `support` is
// the occurrence count within that class, ties broken by smallest offset.
struct CyclicSupportResult {
  Itemset itemset;
  long long support = 0;
  unsigned best_offset = 0;

  bool operator==(const CyclicSupportResult&) const = default;
};

// Contiguous unit ranges covering [0, units), sizes differing by at most 1.
struct PartitionPlan {
  struct Range {
    std::size_t begin = 0;
    std::size_t end = 0;  // exclusive
  };
  unsigned partition_count = 1;
  std::vector<Range> boundaries;
};

// Errors with PartitionCountOutOfRange unless 1 <= partitions <= units.
PartitionPlan make_partition_plan(std::size_t units, unsigned partitions);

// Work counters for the scan strategies; filled when a stats sink is given.
struct MineStats {
  std::uint64_t presence_checks = 0;  // candidate-unit containment tests run
  std::uint64_t skipped_checks = 0;   // tests avoided by skipping/elimination
  std::uint64_t offsets_retired = 0;  // offset classes abandoned mid-scan
  std::uint64_t candidates = 0;       // candidates across all levels
  std::uint64_t pruned = 0;           // candidates dropped before scan end
};

// Exact occurrence counts of one itemset over one database.
struct ItemsetCounts {
  Itemset itemset;
  long long presence = 0;                // units containing the itemset
  std::vector<long long> offset_counts;  // per offset class
  long long cyclic = 0;                  // max offset-class count
  unsigned best_offset = 0;              // smallest offset attaining `cyclic`
};

// Occurrence counts for `x`, with units numbered globally starting at
// `phase` for offset assignment.
ItemsetCounts count_itemset(const TransactionDatabase& db, const Itemset& x,
                            unsigned cycle_length, std::size_t phase = 0);

CyclicSupportResult cyclic_support(const Itemset& x,
                                   const TransactionDatabase& db,
                                   const CycleConfig& cycle);

// Join-and-prune extension of a uniform-size frequent collection.
std::vector<Itemset> candidate_extensions(const std::vector<Itemset>& frequent_k);

// Two-phase baseline: plain-support frequent itemsets first, cyclic filter
// second.
std::vector<CyclicSupportResult> mine_sequential(const TransactionDatabase& db,
                                                 const CycleConfig& cycle,
                                                 const ThresholdConfig& thresholds);

// Single-phase scan applying cycle pruning (offset intersection across
// subsets), cycle skipping (units of dead offset classes are not tested) and
// cycle elimination (offset classes retire once unreachable).
std::vector<CyclicSupportResult> mine_interleaved(const TransactionDatabase& db,
                                                  const CycleConfig& cycle,
                                                  const ThresholdConfig& thresholds,
                                                  MineStats* stats = nullptr);

// Partition-sequential scan carrying running counts across partitions and
// dropping candidates whose best reachable class count falls below the
// threshold.
std::vector<CyclicSupportResult> mine_pcar(const TransactionDatabase& db,
                                           const CycleConfig& cycle,
                                           const ThresholdConfig& thresholds,
                                           unsigned partitions,
                                           MineStats* stats = nullptr);

namespace detail {

// Level-wise Apriori engine shared by the miners and the incremental layer.
// After every partition boundary except the last, `keep_alive` decides
// whether a candidate keeps being counted (given per-class and total
// remaining units); at level end `qualifies` selects the itemsets that are
// reported and seed the next level.
using KeepAliveFn = std::function<bool(const ItemsetCounts& so_far,
                                       long long remaining_units,
                                       const std::vector<long long>& remaining_by_offset)>;
using QualifiesFn = std::function<bool(const ItemsetCounts& final_counts)>;

std::vector<ItemsetCounts> apriori_scan(const TransactionDatabase& db,
                                        unsigned cycle_length,
                                        std::size_t phase,
                                        unsigned partitions,
                                        const KeepAliveFn& keep_alive,
                                        const QualifiesFn& qualifies,
                                        MineStats* stats);

// Units v in [from, units) whose global index (v + phase) falls in offset
// class `offset` modulo `cycle_length`.
long long remaining_in_class(std::size_t units, std::size_t from,
                             unsigned cycle_length, std::size_t phase,
                             unsigned offset);

}  // namespace detail

}  // namespace cyclemine
