#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cyclemine/error.hpp"
#include "cyclemine/fraction.hpp"

namespace cyclemine {

using Item = std::uint32_t;

// Sorted, duplicate-free item sequence. Keeping the canonical form makes
// equality, ordering and subset tests plain sequence operations.
class Itemset {
 public:
  Itemset() = default;
  static Itemset canonical(std::vector<Item> items);
  static Itemset of(std::initializer_list<Item> items);

  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(Item id) const;
  bool subset_of(const Itemset& other) const;
  Itemset united(const Itemset& other) const;
  Itemset without(const Itemset& other) const;
  std::string str() const;  // "1 2 3"

  auto operator<=>(const Itemset&) const = default;

 private:
  std::vector<Item> items_;
};

// One time unit: a contiguous group of transactions sharing the same
// position on the time axis.
struct TimeUnit {
  std::size_t index = 0;
  std::vector<Itemset> transactions;
};

// Fixed-width bit vector with one bit per time unit.
class OccurrenceBitmap {
 public:
  OccurrenceBitmap() = default;
  explicit OccurrenceBitmap(std::size_t size);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  std::size_t count() const;  // number of set bits

  OccurrenceBitmap operator&(const OccurrenceBitmap& o) const;
  bool operator==(const OccurrenceBitmap& o) const = default;

  // True when every set bit of *this is also set in `o` (same length).
  bool implies(const OccurrenceBitmap& o) const;

  // Occurrences per offset class: bit i contributes to class (i + phase) % l.
  std::vector<long long> offset_counts(unsigned cycle_length,
                                       std::size_t phase = 0) const;

  std::string str() const;  // e.g. "011100"

 private:
  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

struct CycleConfig {
  unsigned length = 1;  // l >= 1; offsets live in [0, l)
  void validate() const;
};

struct ThresholdConfig {
  // Values >= 1 are absolute occurrence counts, values in (0,1) are a
  // fraction of the unit count; resolved against a concrete unit total
  // via resolve_min_sup.
  Fraction min_sup{1};
  Fraction min_conf{1, 2};  // in (0, 1]
  std::uint64_t expected_increment_size = 1;
  // Compatibility switch: compare absolute occurrence counts directly
  // against the pseudo-frequency threshold instead of relative support.
  bool literal_floor = false;

  void validate() const;
  long long resolve_min_sup(std::uint64_t units) const;
};

// Unit-grouped transaction history. The object counts how many transaction
// records mining passes have looked at (`transactions_scanned`), which is
// what lets tests prove that incremental updates never revisit old data.
class TransactionDatabase {
 public:
  TransactionDatabase() = default;

  std::size_t unit_count() const { return units_.size(); }
  const TimeUnit& unit(std::size_t i) const { return units_[i]; }
  unsigned grouping() const { return grouping_; }
  std::uint64_t transaction_count() const { return transaction_count_; }

  // Counting access used by mining passes; bumps the scan counter by the
  // number of transactions in the unit.
  const std::vector<Itemset>& scan_unit(std::size_t i) const;

  std::uint64_t transactions_scanned() const { return scans_; }
  void reset_scan_counter() const { scans_ = 0; }

  // Sorted universe of item ids (counts as one full scan).
  std::vector<Item> distinct_items() const;

  friend TransactionDatabase ingest(const std::vector<std::vector<Item>>&,
                                    unsigned);

 private:
  std::vector<TimeUnit> units_;
  unsigned grouping_ = 1;
  std::uint64_t transaction_count_ = 0;
  mutable std::uint64_t scans_ = 0;
};

// Builds a database from raw records, `grouping` consecutive records per
// unit (the last unit may be smaller, never empty). Errors: EmptyDatabase
// when no records, MalformedTransaction (with 1-based record number) when a
// record has no items.
TransactionDatabase ingest(const std::vector<std::vector<Item>>& records,
                           unsigned grouping = 1);

// Bit i is set iff `x` is a subset of at least one transaction in unit i.
OccurrenceBitmap occurrence_bitmap(const Itemset& x,
                                   const TransactionDatabase& db);

// True when `x` is contained in at least one of the given transactions.
bool present_in_unit(const Itemset& x, const std::vector<Itemset>& txns);

}  // namespace cyclemine
