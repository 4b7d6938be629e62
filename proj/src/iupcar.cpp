#include "cyclemine/iupcar.hpp"

#include <algorithm>

namespace cyclemine {

namespace {

// Hopefulness test shared by classification, reclassification and the
// capacity bound: relative support by default, absolute count when the
// literal comparison mode is on.
bool clears_fpc_floor(long long occurrences, std::uint64_t units,
                      const Fraction& min_fpc, bool literal_floor) {
  if (occurrences <= 0) return false;
  if (literal_floor) return Fraction(occurrences) >= min_fpc;
  return Fraction(occurrences, static_cast<long long>(units)) >= min_fpc;
}

// FC/FPC itemsets of one database half, counted with global unit numbering.
std::map<Itemset, ItemsetCounts> mine_classified(const TransactionDatabase& db,
                                                 unsigned cycle_length,
                                                 std::size_t phase,
                                                 long long min_sup,
                                                 const Fraction& min_fpc,
                                                 bool literal_floor,
                                                 unsigned partitions) {
  const std::uint64_t units = db.unit_count();
  std::vector<ItemsetCounts> kept = detail::apriori_scan(
      db, cycle_length, phase, partitions,
      [&](const ItemsetCounts& c, long long remaining,
          const std::vector<long long>& remaining_by_offset) {
        // Keep while the candidate could still classify FC or FPC.
        for (std::size_t o = 0; o < c.offset_counts.size(); ++o)
          if (c.offset_counts[o] + remaining_by_offset[o] >= min_sup)
            return true;
        return clears_fpc_floor(c.presence + remaining, units, min_fpc,
                                literal_floor);
      },
      [&](const ItemsetCounts& c) {
        return classify_counts(c.cyclic, c.presence, units, min_sup, min_fpc,
                               literal_floor) != ItemsetStatus::NFC;
      },
      nullptr);
  std::map<Itemset, ItemsetCounts> out;
  for (ItemsetCounts& c : kept) {
    Itemset key = c.itemset;
    out.emplace(std::move(key), std::move(c));
  }
  return out;
}

}  // namespace

const char* status_name(ItemsetStatus s) {
  switch (s) {
    case ItemsetStatus::FC:
      return "FC";
    case ItemsetStatus::FPC:
      return "FPC";
    case ItemsetStatus::NFC:
      return "NFC";
  }
  return "?";
}

std::optional<ItemsetStatus> status_from_name(const std::string& name) {
  if (name == "FC") return ItemsetStatus::FC;
  if (name == "FPC") return ItemsetStatus::FPC;
  if (name == "NFC") return ItemsetStatus::NFC;
  return std::nullopt;
}

Fraction compute_min_fpc(long long min_sup, std::uint64_t db_units,
                         std::uint64_t inc_units) {
  if (min_sup < 0)
    fail(ErrorCode::InvalidArgument, "min_sup must be non-negative");
  std::uint64_t total = db_units + inc_units;
  if (total == 0)
    fail(ErrorCode::ZeroSizes,
         "pseudo-frequency threshold undefined over zero units");
  long long t = static_cast<long long>(total);
  // ((min_sup / total) + min_sup) / total == min_sup * (1 + total) / total^2
  return Fraction(min_sup, t * t) * Fraction(1 + t, 1);
}

ItemsetStatus classify(long long support, std::uint64_t units,
                       long long min_sup, const Fraction& min_fpc,
                       bool literal_floor) {
  return classify_counts(support, support, units, min_sup, min_fpc,
                         literal_floor);
}

ItemsetStatus classify_counts(long long cyclic, long long presence,
                              std::uint64_t units, long long min_sup,
                              const Fraction& min_fpc, bool literal_floor) {
  if (units == 0)
    fail(ErrorCode::InvalidArgument, "cannot classify over zero units");
  if (presence <= 0) return ItemsetStatus::NFC;
  if (cyclic >= min_sup) return ItemsetStatus::FC;
  if (clears_fpc_floor(presence, units, min_fpc, literal_floor))
    return ItemsetStatus::FPC;
  return ItemsetStatus::NFC;
}

MiningState initial_mine(const TransactionDatabase& db,
                         const CycleConfig& cycle,
                         const ThresholdConfig& thresholds,
                         unsigned partitions) {
  cycle.validate();
  thresholds.validate();
  const std::uint64_t units = db.unit_count();
  const long long min_sup = thresholds.resolve_min_sup(units);
  const Fraction min_fpc =
      compute_min_fpc(min_sup, units, thresholds.expected_increment_size);

  MiningState state;
  state.db_units = units;
  state.cycle = cycle;
  state.min_sup = min_sup;
  state.min_conf = thresholds.min_conf;
  state.literal_floor = thresholds.literal_floor;

  std::map<Itemset, ItemsetCounts> mined =
      mine_classified(db, cycle.length, 0, min_sup, min_fpc,
                      thresholds.literal_floor, partitions);
  for (auto& [itemset, counts] : mined) {
    ItemsetStateEntry entry;
    entry.itemset = itemset;
    entry.status = classify_counts(counts.cyclic, counts.presence, units,
                                   min_sup, min_fpc, thresholds.literal_floor);
    entry.abs_support = counts.presence;
    entry.history_units = units;
    entry.weight = Fraction(counts.presence, static_cast<long long>(units));
    state.entries.emplace(itemset, std::move(entry));
  }
  return state;
}

ItemsetStateEntry merge_entry(const Itemset& x, ItemsetStatus old_status,
                              long long old_abs, std::uint64_t old_units,
                              ItemsetStatus inc_status, long long inc_abs,
                              std::uint64_t inc_units) {
  if (old_units == 0 || inc_units == 0)
    fail(ErrorCode::InvalidArgument, "merge requires non-empty unit totals");
  if (old_abs < 0 || inc_abs < 0 ||
      old_abs > static_cast<long long>(old_units) ||
      inc_abs > static_cast<long long>(inc_units))
    fail(ErrorCode::InvalidArgument, "occurrence count outside unit total");

  const long long total = static_cast<long long>(old_units + inc_units);
  ItemsetStateEntry out;
  out.itemset = x;
  out.history_units = static_cast<std::uint64_t>(total);
  if (old_status == inc_status) {
    // Same judgment on both sides: keep it, average over the whole timeline.
    out.status = old_status;
    out.abs_support = old_abs + inc_abs;
    out.weight = Fraction(out.abs_support, total);
    return out;
  }
  Fraction old_rel(old_abs, static_cast<long long>(old_units));
  Fraction new_rel(inc_abs, static_cast<long long>(inc_units));
  if (old_rel > new_rel) {
    out.status = old_status;
    out.weight = old_rel - new_rel;
  } else {
    // Ties go to the increment side: fresher evidence wins.
    out.status = inc_status;
    out.weight = new_rel - old_rel;
  }
  out.abs_support = out.weight.round_scaled(total);
  return out;
}

const char* update_case_name(UpdateCase c) {
  static const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "H", "J"};
  return names[static_cast<std::size_t>(c)];
}

UpdateCase update_case(ItemsetStatus increment_side,
                       ItemsetStatus history_side) {
  std::size_t row = static_cast<std::size_t>(increment_side);
  std::size_t col = static_cast<std::size_t>(history_side);
  return static_cast<UpdateCase>(row * 3 + col);
}

bool UpdateReport::diagonal_only() const {
  return count(UpdateCase::B) == 0 && count(UpdateCase::C) == 0 &&
         count(UpdateCase::D) == 0 && count(UpdateCase::F) == 0 &&
         count(UpdateCase::G) == 0 && count(UpdateCase::H) == 0;
}

UpdateResult apply_increment(const MiningState& state,
                             const TransactionDatabase& increment) {
  if (state.db_units == 0)
    fail(ErrorCode::InvalidArgument,
         "state has no mined history to update");
  state.cycle.validate();
  const std::uint64_t inc_units = increment.unit_count();
  if (inc_units == 0)
    fail(ErrorCode::EmptyDatabase, "increment contains no units");

  const unsigned l = state.cycle.length;
  const std::size_t phase = static_cast<std::size_t>(state.db_units % l);
  const Fraction min_fpc =
      compute_min_fpc(state.min_sup, state.db_units, inc_units);

  // Mine the increment alone; the original data is never touched.
  std::map<Itemset, ItemsetCounts> mined =
      mine_classified(increment, l, phase, state.min_sup, min_fpc,
                      state.literal_floor, 1);

  UpdateResult result;
  result.state.format_version = state.format_version;
  result.state.db_units = state.db_units + inc_units;
  result.state.cycle = state.cycle;
  result.state.min_sup = state.min_sup;
  result.state.min_conf = state.min_conf;
  result.state.literal_floor = state.literal_floor;
  result.report.increment_units = inc_units;
  result.report.increment_transactions = increment.transaction_count();

  auto record = [&](const Itemset& x, ItemsetStatus old_status,
                    long long old_abs, ItemsetStatus inc_status,
                    long long inc_abs) {
    UpdateCase c = update_case(inc_status, old_status);
    result.report.cases.emplace(x, c);
    result.report.tally[static_cast<std::size_t>(c)]++;
    ItemsetStateEntry merged =
        merge_entry(x, old_status, old_abs, state.db_units, inc_status,
                    inc_abs, inc_units);
    if (merged.status != ItemsetStatus::NFC)
      result.state.entries.emplace(x, std::move(merged));
  };

  // Stored itemsets: reclassify the history side against the recomputed
  // floor (the frequency verdict is floor-independent, so only FPC entries
  // can demote), then merge against their increment-side counts.
  for (const auto& [itemset, entry] : state.entries) {
    ItemsetStatus old_status = entry.status;
    if (old_status == ItemsetStatus::FPC &&
        !clears_fpc_floor(entry.abs_support, state.db_units, min_fpc,
                          state.literal_floor))
      old_status = ItemsetStatus::NFC;

    auto it = mined.find(itemset);
    ItemsetCounts counts =
        it != mined.end() ? it->second
                          : count_itemset(increment, itemset, l, phase);
    ItemsetStatus inc_status =
        classify_counts(counts.cyclic, counts.presence, inc_units,
                        state.min_sup, min_fpc, state.literal_floor);
    record(itemset, old_status, entry.abs_support, inc_status, counts.presence);
  }

  // Fresh discoveries: increment-side FC/FPC itemsets unknown to the state
  // enter the merge as implicit NFC history with zero occurrences.
  for (const auto& [itemset, counts] : mined) {
    if (state.entries.count(itemset)) continue;
    ItemsetStatus inc_status =
        classify_counts(counts.cyclic, counts.presence, inc_units,
                        state.min_sup, min_fpc, state.literal_floor);
    if (inc_status == ItemsetStatus::NFC) continue;
    record(itemset, ItemsetStatus::NFC, 0, inc_status, counts.presence);
  }

  return result;
}

std::vector<std::pair<Itemset, Fraction>> frequent_itemsets(const MiningState& state) {
  std::vector<std::pair<Itemset, Fraction>> out;
  for (const auto& [itemset, entry] : state.entries)
    if (entry.status == ItemsetStatus::FC)
      out.emplace_back(itemset, entry.weight);
  return out;  // map iteration is already sorted
}

std::uint64_t itemsets_checksum(const std::vector<Itemset>& sorted_itemsets) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (i * 8)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (const Itemset& s : sorted_itemsets) {
    for (Item id : s.items()) mix(static_cast<std::uint64_t>(id) + 1);
    mix(0);  // separator
  }
  return h;
}

std::uint64_t fc_checksum(const MiningState& state) {
  std::vector<Itemset> fc;
  for (const auto& [itemset, entry] : state.entries)
    if (entry.status == ItemsetStatus::FC) fc.push_back(itemset);
  return itemsets_checksum(fc);
}

std::uint64_t fc_checksum(const std::vector<CyclicSupportResult>& results) {
  std::vector<Itemset> fc;
  for (const CyclicSupportResult& r : results) fc.push_back(r.itemset);
  std::sort(fc.begin(), fc.end());
  return itemsets_checksum(fc);
}

}  // namespace cyclemine
