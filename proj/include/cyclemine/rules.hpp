#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclemine/fraction.hpp"
#include "cyclemine/iupcar.hpp"
#include "cyclemine/miner.hpp"
#include "cyclemine/model.hpp"

namespace cyclemine {

// antecedent => consequent, anchored at the offset class the underlying
// itemset cycles on. `offset` is absent when the rule was derived from a
// summary that no longer carries offset information.
struct CyclicRule {
  Itemset antecedent;
  Itemset consequent;
  long long support = 0;  // occurrence count of antecedent ∪ consequent
  Fraction confidence;
  std::optional<unsigned> offset;

  bool operator==(const CyclicRule&) const = default;
};

// A frequent itemset handed to rule generation, with its support count and,
// when known, its best offset.
struct FrequentInput {
  Itemset itemset;
  long long support = 0;
  std::optional<unsigned> offset;
};

std::vector<FrequentInput> frequent_inputs(const std::vector<CyclicSupportResult>& mined);
std::vector<FrequentInput> frequent_inputs(const MiningState& state);

// Where subset counts come from. Sources answer only what they can; a
// nullopt answer surfaces as a MissingSupport error in generate_rules.
class SupportSource {
 public:
  virtual ~SupportSource() = default;
  virtual std::optional<long long> count_at_offset(const Itemset& x,
                                                   unsigned offset) const = 0;
  virtual std::optional<long long> cyclic_count(const Itemset& x) const = 0;
  virtual std::optional<Fraction> relative_support(const Itemset& x) const = 0;
};

// Exact counts recomputed from transaction data (bitmaps cached per itemset).
class DatabaseSupportSource : public SupportSource {
 public:
  DatabaseSupportSource(const TransactionDatabase& db, const CycleConfig& cycle,
                        std::size_t phase = 0);
  std::optional<long long> count_at_offset(const Itemset& x,
                                           unsigned offset) const override;
  std::optional<long long> cyclic_count(const Itemset& x) const override;
  std::optional<Fraction> relative_support(const Itemset& x) const override;

 private:
  const ItemsetCounts& counts_for(const Itemset& x) const;
  const TransactionDatabase* db_;
  CycleConfig cycle_;
  std::size_t phase_;
  mutable std::map<Itemset, ItemsetCounts> cache_;
};

// Counts taken from a mining summary; per-offset information is not
// recoverable from a summary. When an increment database is supplied,
// itemsets missing from the summary fall back to counts over the increment
// only — original data is never consulted.
class StateSupportSource : public SupportSource {
 public:
  explicit StateSupportSource(const MiningState& state,
                              const TransactionDatabase* increment = nullptr);
  std::optional<long long> count_at_offset(const Itemset& x,
                                           unsigned offset) const override;
  std::optional<long long> cyclic_count(const Itemset& x) const override;
  std::optional<Fraction> relative_support(const Itemset& x) const override;

 private:
  const MiningState* state_;
  const TransactionDatabase* increment_;
};

// How a rule's confidence is computed.
enum class ConfidenceMode {
  // count(Z at Z's best offset) / count(antecedent at that same offset);
  // needs a source with per-offset counts.
  PerOffset,
  // cyclic_count(Z) / cyclic_count(antecedent); comparison alternative.
  CyclicRatio,
  // relative_support(Z) / relative_support(antecedent); what a summary
  // without offsets can answer.
  RelativeRatio,
};

// Emits every rule X => Z\X with confidence >= min_conf for each frequent Z
// with |Z| >= 2 and non-empty proper subset X, in lexicographic order
// (antecedent, then consequent). Errors: InvalidArgument when min_conf is
// outside (0, 1], MissingSupport when the source cannot answer for a subset.
std::vector<CyclicRule> generate_rules(const std::vector<FrequentInput>& frequent,
                                       const SupportSource& source,
                                       const Fraction& min_conf,
                                       ConfidenceMode mode = ConfidenceMode::PerOffset);

// "{1 2} => {3} (sup=2, conf=1.0000, offset=1)"; offset prints -1 when the
// rule carries none.
std::string format_rule(const CyclicRule& rule);

}  // namespace cyclemine
