#include "cyclemine/model.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace cyclemine {

Itemset Itemset::canonical(std::vector<Item> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  Itemset out;
  out.items_ = std::move(items);
  return out;
}

Itemset Itemset::of(std::initializer_list<Item> items) {
  return canonical(std::vector<Item>(items));
}

bool Itemset::contains(Item id) const {
  return std::binary_search(items_.begin(), items_.end(), id);
}

bool Itemset::subset_of(const Itemset& other) const {
  return std::includes(other.items_.begin(), other.items_.end(),
                       items_.begin(), items_.end());
}

Itemset Itemset::united(const Itemset& other) const {
  std::vector<Item> merged;
  merged.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(merged));
  Itemset out;
  out.items_ = std::move(merged);
  return out;
}

Itemset Itemset::without(const Itemset& other) const {
  std::vector<Item> rest;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                      other.items_.end(), std::back_inserter(rest));
  Itemset out;
  out.items_ = std::move(rest);
  return out;
}

std::string Itemset::str() const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(items_[i]);
  }
  return out;
}

OccurrenceBitmap::OccurrenceBitmap(std::size_t size)
    : blocks_((size + 63) / 64, 0), size_(size) {}

bool OccurrenceBitmap::test(std::size_t i) const {
  return (blocks_[i / 64] >> (i % 64)) & 1u;
}

void OccurrenceBitmap::set(std::size_t i, bool value) {
  std::uint64_t mask = std::uint64_t(1) << (i % 64);
  if (value)
    blocks_[i / 64] |= mask;
  else
    blocks_[i / 64] &= ~mask;
}

std::size_t OccurrenceBitmap::count() const {
  std::size_t total = 0;
  for (std::uint64_t b : blocks_) total += std::popcount(b);
  return total;
}

OccurrenceBitmap OccurrenceBitmap::operator&(const OccurrenceBitmap& o) const {
  if (size_ != o.size_)
    fail(ErrorCode::InvalidArgument, "bitmap length mismatch");
  OccurrenceBitmap out(size_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    out.blocks_[i] = blocks_[i] & o.blocks_[i];
  return out;
}

bool OccurrenceBitmap::implies(const OccurrenceBitmap& o) const {
  if (size_ != o.size_)
    fail(ErrorCode::InvalidArgument, "bitmap length mismatch");
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] & ~o.blocks_[i]) return false;
  return true;
}

std::vector<long long> OccurrenceBitmap::offset_counts(unsigned cycle_length,
                                                       std::size_t phase) const {
  if (cycle_length == 0)
    fail(ErrorCode::InvalidArgument, "cycle length must be positive");
  std::vector<long long> counts(cycle_length, 0);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    std::uint64_t w = blocks_[b];
    while (w) {
      unsigned bit = std::countr_zero(w);
      std::size_t i = b * 64 + bit;
      counts[(i + phase) % cycle_length]++;
      w &= w - 1;
    }
  }
  return counts;
}

std::string OccurrenceBitmap::str() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) out[i] = '1';
  return out;
}

void CycleConfig::validate() const {
  if (length == 0)
    fail(ErrorCode::InvalidArgument, "cycle length must be at least 1");
}

void ThresholdConfig::validate() const {
  if (min_sup.is_negative() || min_sup.is_zero())
    fail(ErrorCode::InvalidArgument, "min_sup must be positive");
  if (min_conf.is_negative() || min_conf.is_zero() || min_conf > Fraction(1))
    fail(ErrorCode::InvalidArgument, "min_conf must lie in (0, 1]");
  if (expected_increment_size == 0)
    fail(ErrorCode::InvalidArgument,
         "expected increment size must be at least 1");
}

long long ThresholdConfig::resolve_min_sup(std::uint64_t units) const {
  validate();
  if (units == 0)
    fail(ErrorCode::InvalidArgument, "cannot resolve min_sup over zero units");
  if (min_sup >= Fraction(1)) return min_sup.ceil_value();
  return min_sup.ceil_scaled(static_cast<long long>(units));
}

const std::vector<Itemset>& TransactionDatabase::scan_unit(std::size_t i) const {
  scans_ += units_[i].transactions.size();
  return units_[i].transactions;
}

std::vector<Item> TransactionDatabase::distinct_items() const {
  std::set<Item> seen;
  for (std::size_t u = 0; u < units_.size(); ++u)
    for (const Itemset& t : scan_unit(u))
      seen.insert(t.items().begin(), t.items().end());
  return std::vector<Item>(seen.begin(), seen.end());
}

TransactionDatabase ingest(const std::vector<std::vector<Item>>& records,
                           unsigned grouping) {
  if (grouping == 0)
    fail(ErrorCode::InvalidArgument, "unit grouping must be at least 1");
  if (records.empty())
    fail(ErrorCode::EmptyDatabase, "input contains no transactions");
  TransactionDatabase db;
  db.grouping_ = grouping;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].empty())
      fail(ErrorCode::MalformedTransaction,
           "transaction record " + std::to_string(i + 1) + " has no items",
           i + 1);
    if (i % grouping == 0) {
      TimeUnit unit;
      unit.index = db.units_.size();
      db.units_.push_back(std::move(unit));
    }
    db.units_.back().transactions.push_back(Itemset::canonical(records[i]));
  }
  db.transaction_count_ = records.size();
  return db;
}

bool present_in_unit(const Itemset& x, const std::vector<Itemset>& txns) {
  for (const Itemset& t : txns)
    if (x.subset_of(t)) return true;
  return false;
}

OccurrenceBitmap occurrence_bitmap(const Itemset& x,
                                   const TransactionDatabase& db) {
  if (x.empty())
    fail(ErrorCode::InvalidArgument,
         "occurrence bitmap of the empty itemset is not defined");
  OccurrenceBitmap bits(db.unit_count());
  for (std::size_t u = 0; u < db.unit_count(); ++u)
    if (present_in_unit(x, db.scan_unit(u))) bits.set(u);
  return bits;
}

}  // namespace cyclemine
