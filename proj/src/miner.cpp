#include "cyclemine/miner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cyclemine {

namespace {

// Max count and smallest offset attaining it.
void summarize_counts(ItemsetCounts& c) {
  c.cyclic = 0;
  c.best_offset = 0;
  for (std::size_t o = 0; o < c.offset_counts.size(); ++o) {
    if (c.offset_counts[o] > c.cyclic) {
      c.cyclic = c.offset_counts[o];
      c.best_offset = static_cast<unsigned>(o);
    }
  }
}

std::vector<Itemset> seed_singletons(const TransactionDatabase& db) {
  std::vector<Itemset> out;
  for (Item id : db.distinct_items()) out.push_back(Itemset::of({id}));
  return out;
}

std::vector<CyclicSupportResult> to_results(const std::vector<ItemsetCounts>& counts) {
  std::vector<CyclicSupportResult> out;
  out.reserve(counts.size());
  for (const ItemsetCounts& c : counts)
    out.push_back({c.itemset, c.cyclic, c.best_offset});
  std::sort(out.begin(), out.end(),
            [](const CyclicSupportResult& a, const CyclicSupportResult& b) {
              return a.itemset < b.itemset;
            });
  return out;
}

}  // namespace

PartitionPlan make_partition_plan(std::size_t units, unsigned partitions) {
  if (partitions < 1 || partitions > units)
    fail(ErrorCode::PartitionCountOutOfRange,
         "partition count " + std::to_string(partitions) +
             " outside [1, " + std::to_string(units) + "]");
  PartitionPlan plan;
  plan.partition_count = partitions;
  std::size_t base = units / partitions;
  std::size_t extra = units % partitions;  // first `extra` ranges get +1
  std::size_t begin = 0;
  for (unsigned p = 0; p < partitions; ++p) {
    std::size_t size = base + (p < extra ? 1 : 0);
    plan.boundaries.push_back({begin, begin + size});
    begin += size;
  }
  return plan;
}

long long detail::remaining_in_class(std::size_t units, std::size_t from,
                                     unsigned cycle_length, std::size_t phase,
                                     unsigned offset) {
  if (from >= units) return 0;
  // Smallest v >= from with (v + phase) % l == offset.
  std::size_t l = cycle_length;
  std::size_t residue = (offset + l - (phase % l)) % l;  // v ≡ residue (mod l)
  std::size_t v0 = from + ((residue + l - (from % l)) % l);
  if (v0 >= units) return 0;
  return static_cast<long long>((units - 1 - v0) / l + 1);
}

ItemsetCounts count_itemset(const TransactionDatabase& db, const Itemset& x,
                            unsigned cycle_length, std::size_t phase) {
  if (cycle_length == 0)
    fail(ErrorCode::InvalidArgument, "cycle length must be positive");
  if (x.empty())
    fail(ErrorCode::InvalidArgument, "cannot count the empty itemset");
  ItemsetCounts c;
  c.itemset = x;
  c.offset_counts.assign(cycle_length, 0);
  for (std::size_t u = 0; u < db.unit_count(); ++u) {
    if (present_in_unit(x, db.scan_unit(u))) {
      c.presence++;
      c.offset_counts[(u + phase) % cycle_length]++;
    }
  }
  summarize_counts(c);
  return c;
}

CyclicSupportResult cyclic_support(const Itemset& x,
                                   const TransactionDatabase& db,
                                   const CycleConfig& cycle) {
  cycle.validate();
  ItemsetCounts c = count_itemset(db, x, cycle.length, 0);
  return {c.itemset, c.cyclic, c.best_offset};
}

std::vector<Itemset> candidate_extensions(const std::vector<Itemset>& frequent_k) {
  if (frequent_k.empty()) return {};
  std::size_t k = frequent_k.front().size();
  if (k == 0)
    fail(ErrorCode::InvalidArgument, "cannot extend the empty itemset");
  for (const Itemset& s : frequent_k)
    if (s.size() != k)
      fail(ErrorCode::InvalidArgument,
           "candidate generation requires itemsets of a single size");

  std::vector<Itemset> sorted(frequent_k);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::set<Itemset> have(sorted.begin(), sorted.end());

  auto shares_prefix = [k](const Itemset& a, const Itemset& b) {
    for (std::size_t i = 0; i + 1 < k; ++i)
      if (a.items()[i] != b.items()[i]) return false;
    return true;
  };

  std::vector<Itemset> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1;
         j < sorted.size() && shares_prefix(sorted[i], sorted[j]); ++j) {
      std::vector<Item> joined = sorted[i].items();
      joined.push_back(sorted[j].items().back());
      Itemset candidate = Itemset::canonical(std::move(joined));
      if (candidate.size() != k + 1) continue;
      // The joined pair already covers dropping the last two positions;
      // verify the remaining k-1 subsets.
      bool all_frequent = true;
      for (std::size_t drop = 0; drop + 2 < candidate.size() && all_frequent;
           ++drop) {
        std::vector<Item> sub = candidate.items();
        sub.erase(sub.begin() + static_cast<long>(drop));
        if (!have.count(Itemset::canonical(std::move(sub)))) all_frequent = false;
      }
      if (all_frequent) out.push_back(std::move(candidate));
    }
  }
  return out;
}

std::vector<ItemsetCounts> detail::apriori_scan(const TransactionDatabase& db,
                                                unsigned cycle_length,
                                                std::size_t phase,
                                                unsigned partitions,
                                                const KeepAliveFn& keep_alive,
                                                const QualifiesFn& qualifies,
                                                MineStats* stats) {
  struct Candidate {
    Itemset items;
    std::vector<long long> counts;
    long long presence = 0;
    bool alive = true;
  };

  const std::size_t n = db.unit_count();
  const unsigned l = cycle_length;
  PartitionPlan plan = make_partition_plan(n, partitions);

  std::vector<ItemsetCounts> out;
  std::vector<Itemset> level = seed_singletons(db);
  while (!level.empty()) {
    std::vector<Candidate> cands;
    cands.reserve(level.size());
    for (Itemset& s : level)
      cands.push_back({std::move(s), std::vector<long long>(l, 0), 0, true});
    if (stats) stats->candidates += cands.size();

    for (const PartitionPlan::Range& range : plan.boundaries) {
      for (std::size_t u = range.begin; u < range.end; ++u) {
        const std::vector<Itemset>& txns = db.scan_unit(u);
        unsigned o = static_cast<unsigned>((u + phase) % l);
        for (Candidate& c : cands) {
          if (!c.alive) {
            if (stats) stats->skipped_checks++;
            continue;
          }
          if (stats) stats->presence_checks++;
          if (present_in_unit(c.items, txns)) {
            c.counts[o]++;
            c.presence++;
          }
        }
      }
      if (range.end >= n || !keep_alive) continue;
      // Capacity check at the partition boundary.
      long long remaining = static_cast<long long>(n - range.end);
      std::vector<long long> remaining_by_offset(l, 0);
      for (unsigned o = 0; o < l; ++o)
        remaining_by_offset[o] = remaining_in_class(n, range.end, l, phase, o);
      for (Candidate& c : cands) {
        if (!c.alive) continue;
        ItemsetCounts snapshot{c.items, c.presence, c.counts, 0, 0};
        summarize_counts(snapshot);
        if (!keep_alive(snapshot, remaining, remaining_by_offset)) {
          c.alive = false;
          if (stats) stats->pruned++;
        }
      }
    }

    std::vector<Itemset> survivors;
    for (Candidate& c : cands) {
      if (!c.alive) continue;
      ItemsetCounts fin{std::move(c.items), c.presence, std::move(c.counts), 0, 0};
      summarize_counts(fin);
      if (qualifies(fin)) {
        survivors.push_back(fin.itemset);
        out.push_back(std::move(fin));
      }
    }
    level = candidate_extensions(survivors);
  }
  std::sort(out.begin(), out.end(),
            [](const ItemsetCounts& a, const ItemsetCounts& b) {
              return a.itemset < b.itemset;
            });
  return out;
}

std::vector<CyclicSupportResult> mine_sequential(const TransactionDatabase& db,
                                                 const CycleConfig& cycle,
                                                 const ThresholdConfig& thresholds) {
  cycle.validate();
  const long long min_sup = thresholds.resolve_min_sup(db.unit_count());
  // Phase one: plain-support frequent itemsets (offset counts gathered in
  // the same pass so phase two is a pure filter).
  std::vector<ItemsetCounts> plain = detail::apriori_scan(
      db, cycle.length, 0, 1, detail::KeepAliveFn{},
      [&](const ItemsetCounts& c) { return c.presence >= min_sup; }, nullptr);
  // Phase two: keep those whose best offset class reaches the threshold.
  std::vector<ItemsetCounts> cyclic;
  for (ItemsetCounts& c : plain)
    if (c.cyclic >= min_sup) cyclic.push_back(std::move(c));
  return to_results(cyclic);
}

std::vector<CyclicSupportResult> mine_pcar(const TransactionDatabase& db,
                                           const CycleConfig& cycle,
                                           const ThresholdConfig& thresholds,
                                           unsigned partitions,
                                           MineStats* stats) {
  cycle.validate();
  const long long min_sup = thresholds.resolve_min_sup(db.unit_count());
  std::vector<ItemsetCounts> counted = detail::apriori_scan(
      db, cycle.length, 0, partitions,
      [&](const ItemsetCounts& c, long long,
          const std::vector<long long>& remaining_by_offset) {
        // Best reachable class count must still meet the threshold.
        for (std::size_t o = 0; o < c.offset_counts.size(); ++o)
          if (c.offset_counts[o] + remaining_by_offset[o] >= min_sup)
            return true;
        return false;
      },
      [&](const ItemsetCounts& c) { return c.cyclic >= min_sup; }, stats);
  return to_results(counted);
}

std::vector<CyclicSupportResult> mine_interleaved(const TransactionDatabase& db,
                                                  const CycleConfig& cycle,
                                                  const ThresholdConfig& thresholds,
                                                  MineStats* stats) {
  cycle.validate();
  const std::size_t n = db.unit_count();
  const unsigned l = cycle.length;
  const long long min_sup = thresholds.resolve_min_sup(n);

  struct Candidate {
    Itemset items;
    std::vector<long long> counts;
    std::vector<char> live;  // offset classes still worth counting
    bool alive = true;
  };

  // Offset classes with count >= min_sup per qualifying itemset; the next
  // level's live set is the intersection over its subsets (cycle pruning).
  std::map<Itemset, std::vector<char>> qualifying_offsets;

  std::vector<CyclicSupportResult> results;
  std::vector<Itemset> level = seed_singletons(db);
  bool first_level = true;
  while (!level.empty()) {
    std::vector<Candidate> cands;
    for (Itemset& s : level) {
      Candidate c{std::move(s), std::vector<long long>(l, 0),
                  std::vector<char>(l, 1), true};
      if (!first_level) {
        // Intersect the qualifying offsets of every one-smaller subset.
        for (std::size_t drop = 0; drop < c.items.size(); ++drop) {
          std::vector<Item> sub = c.items.items();
          sub.erase(sub.begin() + static_cast<long>(drop));
          auto it = qualifying_offsets.find(Itemset::canonical(std::move(sub)));
          if (it == qualifying_offsets.end()) {
            std::fill(c.live.begin(), c.live.end(), char(0));
            break;
          }
          for (unsigned o = 0; o < l; ++o)
            c.live[o] = c.live[o] && it->second[o];
        }
      }
      cands.push_back(std::move(c));
    }
    if (stats) stats->candidates += cands.size();

    // Cycle elimination before the scan: classes too small to ever reach
    // the threshold retire immediately.
    std::size_t alive_count = 0;
    for (Candidate& c : cands) {
      bool any = false;
      for (unsigned o = 0; o < l; ++o) {
        if (!c.live[o]) continue;
        if (detail::remaining_in_class(n, 0, l, 0, o) < min_sup) {
          c.live[o] = 0;
          if (stats) stats->offsets_retired++;
        } else {
          any = true;
        }
      }
      c.alive = any;
      if (any) ++alive_count;
    }

    for (std::size_t u = 0; u < n && alive_count > 0; ++u) {
      unsigned o = static_cast<unsigned>(u % l);
      const std::vector<Itemset>* txns = nullptr;
      for (Candidate& c : cands) {
        if (!c.alive || !c.live[o]) {
          if (stats) stats->skipped_checks++;  // cycle skipping
          continue;
        }
        if (txns == nullptr) txns = &db.scan_unit(u);
        if (stats) stats->presence_checks++;
        if (present_in_unit(c.items, *txns)) c.counts[o]++;
      }
      // Cycle elimination: only class `o` lost a remaining unit.
      long long rem = detail::remaining_in_class(n, u + 1, l, 0, o);
      for (Candidate& c : cands) {
        if (!c.alive || !c.live[o]) continue;
        if (c.counts[o] + rem < min_sup) {
          c.live[o] = 0;
          if (stats) stats->offsets_retired++;
          if (std::find(c.live.begin(), c.live.end(), char(1)) == c.live.end()) {
            c.alive = false;
            --alive_count;
          }
        }
      }
    }

    std::vector<Itemset> survivors;
    for (Candidate& c : cands) {
      std::vector<char> qual(l, 0);
      bool any = false;
      long long best = 0;
      unsigned best_offset = 0;
      for (unsigned o = 0; o < l; ++o) {
        if (c.counts[o] >= min_sup) {
          qual[o] = 1;
          any = true;
        }
        if (c.counts[o] > best) {
          best = c.counts[o];
          best_offset = o;
        }
      }
      if (!any) continue;
      results.push_back({c.items, best, best_offset});
      survivors.push_back(c.items);
      qualifying_offsets[std::move(c.items)] = std::move(qual);
    }
    level = candidate_extensions(survivors);
    first_level = false;
  }

  std::sort(results.begin(), results.end(),
            [](const CyclicSupportResult& a, const CyclicSupportResult& b) {
              return a.itemset < b.itemset;
            });
  return results;
}

}  // namespace cyclemine
