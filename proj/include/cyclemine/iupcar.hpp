#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclemine/fraction.hpp"
#include "cyclemine/miner.hpp"
#include "cyclemine/model.hpp"

namespace cyclemine {

// FC: frequent cyclic. FPC: not frequent yet, but hopeful enough to keep.
// NFC: neither; never persisted.
enum class ItemsetStatus { FC, FPC, NFC };

const char* status_name(ItemsetStatus s);
std::optional<ItemsetStatus> status_from_name(const std::string& name);

struct ItemsetStateEntry {
  Itemset itemset;
  ItemsetStatus status = ItemsetStatus::NFC;
  Fraction weight;                  // confidence-of-history weight in [0, 1]
  long long abs_support = 0;        // occurrence count backing the weight
  std::uint64_t history_units = 1;  // unit total abs_support is measured on

  bool operator==(const ItemsetStateEntry&) const = default;
};

// Complete mining summary: every FC and FPC itemset of the data seen so
// far. Absent itemsets are implicitly NFC with zero support.
struct MiningState {
  int format_version = 1;
  std::uint64_t db_units = 0;
  CycleConfig cycle;
  long long min_sup = 1;  // absolute count, resolved at initial mining
  Fraction min_conf{1, 2};
  bool literal_floor = false;
  std::map<Itemset, ItemsetStateEntry> entries;

  bool operator==(const MiningState& o) const {
    return format_version == o.format_version && db_units == o.db_units &&
           cycle.length == o.cycle.length && min_sup == o.min_sup &&
           min_conf == o.min_conf && literal_floor == o.literal_floor &&
           entries == o.entries;
  }
};

// Pseudo-frequency floor ((min_sup / total) + min_sup) / total over the
// combined unit total. Errors with ZeroSizes when both unit counts are zero.
Fraction compute_min_fpc(long long min_sup, std::uint64_t db_units,
                         std::uint64_t inc_units);

// Single-count classification: FC when the count reaches min_sup, FPC when
// it clears the pseudo-frequency floor (relative by default, absolute under
// literal_floor), NFC otherwise. Zero support is always NFC.
ItemsetStatus classify(long long support, std::uint64_t units,
                       long long min_sup, const Fraction& min_fpc,
                       bool literal_floor = false);

// Two-count classification used by mining: the frequency test looks at the
// best offset-class count, the hopefulness test at overall presence.
ItemsetStatus classify_counts(long long cyclic, long long presence,
                              std::uint64_t units, long long min_sup,
                              const Fraction& min_fpc, bool literal_floor);

// Full mine of a base database; stores every FC and FPC itemset with
// weight = occurrences / units. The hopefulness floor is seeded from
// thresholds.expected_increment_size.
MiningState initial_mine(const TransactionDatabase& db,
                         const CycleConfig& cycle,
                         const ThresholdConfig& thresholds,
                         unsigned partitions = 1);

// Weighting-model combination of one itemset's two sides. Same status on
// both sides keeps the status and averages the occurrences over the total
// timeline; different statuses are won by the larger relative support (ties
// go to the increment side) with weight = difference of relative supports,
// and the occurrence bookkeeping is re-anchored to round(weight * total).
ItemsetStateEntry merge_entry(const Itemset& x, ItemsetStatus old_status,
                              long long old_abs, std::uint64_t old_units,
                              ItemsetStatus inc_status, long long inc_abs,
                              std::uint64_t inc_units);

// Increment-side/history-side status pairs, labeled row by row:
// increment FC over history FC/FPC/NFC -> A/B/C, increment FPC -> D/E/F,
// increment NFC -> G/H/J.
enum class UpdateCase { A, B, C, D, E, F, G, H, J };

const char* update_case_name(UpdateCase c);
UpdateCase update_case(ItemsetStatus increment_side, ItemsetStatus history_side);

struct UpdateReport {
  std::map<Itemset, UpdateCase> cases;
  std::array<std::uint64_t, 9> tally{};  // indexed by UpdateCase
  std::uint64_t increment_units = 0;
  std::uint64_t increment_transactions = 0;

  std::uint64_t count(UpdateCase c) const {
    return tally[static_cast<std::size_t>(c)];
  }
  // True when every touched itemset had the same status on both sides.
  bool diagonal_only() const;
};

struct UpdateResult {
  MiningState state;
  UpdateReport report;
};

// Folds an increment batch into the state without touching the original
// data: increment units continue the global numbering (offset of unit u is
// u mod l with u counted from the start of history), the hopefulness floor
// is recomputed from the actual sizes, stored entries are reclassified
// against it, and each touched itemset is merged per the weighting model.
// Resulting NFC itemsets are dropped.
UpdateResult apply_increment(const MiningState& state,
                             const TransactionDatabase& increment);

// FC itemsets with their weights, sorted.
std::vector<std::pair<Itemset, Fraction>> frequent_itemsets(const MiningState& state);

// Order-insensitive FNV-1a digest of a sorted itemset collection.
std::uint64_t itemsets_checksum(const std::vector<Itemset>& sorted_itemsets);
std::uint64_t fc_checksum(const MiningState& state);
std::uint64_t fc_checksum(const std::vector<CyclicSupportResult>& results);

}  // namespace cyclemine
