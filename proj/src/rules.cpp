#include "cyclemine/rules.hpp"

#include <algorithm>
#include <cstdio>

#include "cyclemine/error.hpp"

namespace cyclemine {

std::vector<FrequentInput> frequent_inputs(const std::vector<CyclicSupportResult>& mined) {
  std::vector<FrequentInput> out;
  out.reserve(mined.size());
  for (const auto& r : mined) {
    out.push_back({r.itemset, r.support, r.best_offset});
  }
  return out;
}

std::vector<FrequentInput> frequent_inputs(const MiningState& state) {
  std::vector<FrequentInput> out;
  for (const auto& [items, entry] : state.entries) {
    if (entry.status != ItemsetStatus::FC) continue;
    out.push_back({items, entry.abs_support, std::nullopt});
  }
  return out;
}

DatabaseSupportSource::DatabaseSupportSource(const TransactionDatabase& db,
                                             const CycleConfig& cycle,
                                             std::size_t phase)
    : db_(&db), cycle_(cycle), phase_(phase) {
  cycle_.validate();
}

const ItemsetCounts& DatabaseSupportSource::counts_for(const Itemset& x) const {
  auto it = cache_.find(x);
  if (it == cache_.end()) {
    it = cache_.emplace(x, count_itemset(*db_, x, cycle_.length, phase_)).first;
  }
  return it->second;
}

std::optional<long long> DatabaseSupportSource::count_at_offset(const Itemset& x,
                                                                unsigned offset) const {
  if (offset >= cycle_.length) return std::nullopt;
  return counts_for(x).offset_counts[offset];
}

std::optional<long long> DatabaseSupportSource::cyclic_count(const Itemset& x) const {
  return counts_for(x).cyclic;
}

std::optional<Fraction> DatabaseSupportSource::relative_support(const Itemset& x) const {
  if (db_->unit_count() == 0) return std::nullopt;
  return Fraction(counts_for(x).presence,
                  static_cast<long long>(db_->unit_count()));
}

StateSupportSource::StateSupportSource(const MiningState& state,
                                       const TransactionDatabase* increment)
    : state_(&state), increment_(increment) {}

std::optional<long long> StateSupportSource::count_at_offset(const Itemset&,
                                                             unsigned) const {
  return std::nullopt;
}

std::optional<long long> StateSupportSource::cyclic_count(const Itemset&) const {
  return std::nullopt;
}

std::optional<Fraction> StateSupportSource::relative_support(const Itemset& x) const {
  auto it = state_->entries.find(x);
  if (it != state_->entries.end()) {
    if (it->second.history_units == 0) return std::nullopt;
    return Fraction(it->second.abs_support,
                    static_cast<long long>(it->second.history_units));
  }
  if (increment_ != nullptr && increment_->unit_count() > 0) {
    auto c = count_itemset(*increment_, x, state_->cycle.length,
                           state_->db_units % state_->cycle.length);
    return Fraction(c.presence, static_cast<long long>(increment_->unit_count()));
  }
  return std::nullopt;
}

namespace {

Fraction confidence_for(const FrequentInput& whole, const Itemset& antecedent,
                        const SupportSource& source, ConfidenceMode mode) {
  switch (mode) {
    case ConfidenceMode::PerOffset: {
      if (!whole.offset.has_value()) {
        fail(ErrorCode::MissingSupport,
             "rule target " + whole.itemset.str() + " carries no offset");
      }
      auto denom = source.count_at_offset(antecedent, *whole.offset);
      if (!denom.has_value()) {
        fail(ErrorCode::MissingSupport,
             "no per-offset count for " + antecedent.str());
      }
      if (*denom == 0) {
        fail(ErrorCode::MissingSupport,
             "zero occurrences of " + antecedent.str() + " at offset " +
                 std::to_string(*whole.offset));
      }
      return Fraction(whole.support, *denom);
    }
    case ConfidenceMode::CyclicRatio: {
      auto denom = source.cyclic_count(antecedent);
      if (!denom.has_value() || *denom == 0) {
        fail(ErrorCode::MissingSupport,
             "no cyclic count for " + antecedent.str());
      }
      return Fraction(whole.support, *denom);
    }
    case ConfidenceMode::RelativeRatio: {
      auto whole_rel = source.relative_support(whole.itemset);
      auto part_rel = source.relative_support(antecedent);
      if (!whole_rel.has_value() || !part_rel.has_value()) {
        fail(ErrorCode::MissingSupport,
             "no relative support for " + antecedent.str());
      }
      if (part_rel->is_zero()) {
        fail(ErrorCode::MissingSupport,
             "zero relative support for " + antecedent.str());
      }
      // Merged-state bookkeeping can re-anchor a superset above a subset;
      // a confidence still never exceeds certainty.
      Fraction ratio = *whole_rel / *part_rel;
      return ratio > Fraction(1) ? Fraction(1) : ratio;
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown confidence mode");
}

// All non-empty proper subsets of items, as itemsets.
std::vector<Itemset> proper_subsets(const Itemset& z) {
  const auto& items = z.items();
  const std::size_t n = items.size();
  std::vector<Itemset> out;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<Item> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(items[i]);
    }
    out.push_back(Itemset::canonical(std::move(subset)));
  }
  return out;
}

}  // namespace

std::vector<CyclicRule> generate_rules(const std::vector<FrequentInput>& frequent,
                                       const SupportSource& source,
                                       const Fraction& min_conf,
                                       ConfidenceMode mode) {
  if (min_conf <= Fraction(0) || min_conf > Fraction(1)) {
    fail(ErrorCode::InvalidArgument, "min_conf must be in (0, 1]");
  }
  std::vector<CyclicRule> rules;
  for (const auto& whole : frequent) {
    if (whole.itemset.size() < 2) continue;
    for (const auto& antecedent : proper_subsets(whole.itemset)) {
      Fraction conf = confidence_for(whole, antecedent, source, mode);
      if (conf < min_conf) continue;
      CyclicRule rule;
      rule.antecedent = antecedent;
      rule.consequent = whole.itemset.without(antecedent);
      rule.support = whole.support;
      rule.confidence = conf;
      rule.offset = whole.offset;
      rules.push_back(std::move(rule));
    }
  }
  std::sort(rules.begin(), rules.end(), [](const CyclicRule& a, const CyclicRule& b) {
    if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
    return a.consequent < b.consequent;
  });
  return rules;
}

std::string format_rule(const CyclicRule& rule) {
  char conf_buf[32];
  std::snprintf(conf_buf, sizeof(conf_buf), "%.4f", rule.confidence.to_double());
  std::string out = "{" + rule.antecedent.str() + "} => {" + rule.consequent.str() + "}";
  out += " (sup=" + std::to_string(rule.support);
  out += ", conf=";
  out += conf_buf;
  out += ", offset=";
  out += rule.offset.has_value() ? std::to_string(*rule.offset) : std::string("-1");
  out += ")";
  return out;
}

}  // namespace cyclemine
