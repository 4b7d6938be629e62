#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclemine/error.hpp"
#include "cyclemine/io.hpp"
#include "cyclemine/iupcar.hpp"
#include "cyclemine/miner.hpp"
#include "cyclemine/model.hpp"
#include "cyclemine/rules.hpp"

using json = nlohmann::json;
using namespace cyclemine;

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::PartitionCountOutOfRange:
      return 2;
    case ErrorCode::EmptyDatabase:
    case ErrorCode::MalformedTransaction:
    case ErrorCode::IoFailure:
    case ErrorCode::MissingSupport:
    case ErrorCode::ZeroSizes:
      return 3;
    case ErrorCode::VersionMismatch:
    case ErrorCode::CorruptState:
    case ErrorCode::CycleMismatch:
      return 4;
  }
  return 1;
}

// Per-role tally of transaction records parsed from files by this process.
// The update command proves its zero-rescan claim with it: the "database"
// role simply never appears there.
struct FileLedger {
  std::map<std::string, std::uint64_t> records;

  std::vector<std::vector<Item>> load(const std::string& path,
                                      const std::string& role) {
    auto loaded = load_transactions(path);
    records[role] += loaded.size();
    return loaded;
  }

  std::uint64_t count(const std::string& role) const {
    auto it = records.find(role);
    return it == records.end() ? 0 : it->second;
  }
};

// Pattern syntax: "items@offset/length[:probability]", items comma-separated,
// e.g. "3,4@1/5:0.9".
PlantedPattern parse_pattern(const std::string& text) {
  auto bad = [&]() -> PlantedPattern {
    fail(ErrorCode::InvalidArgument,
         "bad pattern '" + text + "', expected items@offset/length[:prob]");
  };
  std::size_t at = text.find('@');
  if (at == std::string::npos || at == 0) return bad();
  PlantedPattern out;
  std::vector<Item> items;
  std::size_t start = 0;
  while (start <= at) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos || comma > at) comma = at;
    try {
      items.push_back(static_cast<Item>(std::stoul(text.substr(start, comma - start))));
    } catch (const std::exception&) {
      return bad();
    }
    start = comma + 1;
    if (comma == at) break;
  }
  out.itemset = Itemset::canonical(std::move(items));

  std::size_t slash = text.find('/', at);
  if (slash == std::string::npos) return bad();
  std::size_t colon = text.find(':', slash);
  try {
    out.offset = static_cast<unsigned>(std::stoul(text.substr(at + 1, slash - at - 1)));
    if (colon == std::string::npos) {
      out.length = static_cast<unsigned>(std::stoul(text.substr(slash + 1)));
      out.probability = 1.0;
    } else {
      out.length =
          static_cast<unsigned>(std::stoul(text.substr(slash + 1, colon - slash - 1)));
      out.probability = std::stod(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    return bad();
  }
  return out;
}

// Built-in benchmark workload: 24 item pairs cycling on length 5, firing
// probabilities graded in four bands so successive support thresholds cut
// the candidate space hard.
std::vector<PlantedPattern> graded_patterns() {
  std::vector<PlantedPattern> out;
  for (unsigned k = 0; k < 24; ++k) {
    PlantedPattern p;
    p.itemset = Itemset::of({2 * k, 2 * k + 1});
    p.offset = k % 5;
    p.length = 5;
    p.probability = k < 3 ? 0.9 : k < 7 ? 0.12 : k < 14 ? 0.06 : 0.03;
    out.push_back(p);
  }
  return out;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

template <typename Fn>
double time_ms(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count();
}

void write_report(const std::string& path, const json& report) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoFailure, "cannot open " + path + " for writing");
  out << report.dump(2) << '\n';
  if (!out) fail(ErrorCode::IoFailure, "write to " + path + " failed");
}

json cases_json(const UpdateReport& report) {
  json out = json::object();
  for (int i = 0; i < 9; ++i) {
    UpdateCase c = static_cast<UpdateCase>(i);
    out[update_case_name(c)] = report.count(c);
  }
  return out;
}

json itemset_json(const Itemset& s) {
  json a = json::array();
  for (Item id : s.items()) a.push_back(id);
  return a;
}

std::vector<Itemset> fc_itemsets(const MiningState& state) {
  std::vector<Itemset> out;
  for (const auto& [itemset, entry] : state.entries)
    if (entry.status == ItemsetStatus::FC) out.push_back(itemset);
  return out;
}

std::vector<Itemset> fc_itemsets(const std::vector<CyclicSupportResult>& results) {
  std::vector<Itemset> out;
  for (const auto& r : results) out.push_back(r.itemset);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t symmetric_difference_size(std::vector<Itemset> a,
                                      std::vector<Itemset> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Itemset> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(diff));
  return diff.size();
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::string out;
  std::string inc_out;
  std::uint64_t units = 0;
  std::uint64_t inc_units = 0;
  std::uint32_t alphabet = 26;
  double noise = 0.0;
  std::uint64_t seed = 42;
  std::vector<std::string> patterns;
  std::string preset;
};

int cmd_gen(const GenOptions& opt) {
  GeneratorConfig config;
  config.units = opt.units + opt.inc_units;
  config.alphabet_size = opt.alphabet;
  config.noise_rate = opt.noise;
  config.seed = opt.seed;
  if (!opt.preset.empty()) {
    if (opt.preset != "bench")
      fail(ErrorCode::InvalidArgument, "unknown preset '" + opt.preset + "'");
    config.alphabet_size = 48;
    config.noise_rate = 0.1;
    config.patterns = graded_patterns();
  }
  for (const std::string& text : opt.patterns)
    config.patterns.push_back(parse_pattern(text));
  if (opt.inc_units > 0 && opt.inc_out.empty())
    fail(ErrorCode::InvalidArgument, "--inc-units needs --inc-out");

  auto records = generate_transactions(config);
  std::vector<std::vector<Item>> head(records.begin(),
                                      records.begin() + opt.units);
  write_transactions_file(opt.out, head);
  std::cout << "wrote " << head.size() << " transactions to " << opt.out << "\n";
  if (opt.inc_units > 0) {
    std::vector<std::vector<Item>> tail(records.begin() + opt.units,
                                        records.end());
    write_transactions_file(opt.inc_out, tail);
    std::cout << "wrote " << tail.size() << " continuation transactions to "
              << opt.inc_out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// mine

struct MineOptions {
  std::string db;
  unsigned grouping = 1;
  unsigned cycle = 1;
  std::string min_sup;
  std::string min_conf = "1/2";
  std::uint64_t expected_inc = 0;  // 0: a tenth of the unit count
  bool literal = false;
  std::string algo = "interleaved";
  unsigned partitions = 1;
  std::string state_out;
  std::string report;
  bool quiet = false;
};

int cmd_mine(const MineOptions& opt) {
  FileLedger ledger;
  auto records = ledger.load(opt.db, "database");
  auto db = ingest(records, opt.grouping);

  ThresholdConfig thresholds;
  thresholds.min_sup = Fraction::parse(opt.min_sup);
  thresholds.min_conf = Fraction::parse(opt.min_conf);
  thresholds.expected_increment_size =
      opt.expected_inc > 0 ? opt.expected_inc
                           : std::max<std::uint64_t>(1, db.unit_count() / 10);
  thresholds.literal_floor = opt.literal;
  thresholds.validate();
  CycleConfig cycle{opt.cycle};
  cycle.validate();

  MineStats stats;
  std::vector<CyclicSupportResult> results;
  if (opt.algo == "sequential") {
    results = mine_sequential(db, cycle, thresholds);
  } else if (opt.algo == "interleaved") {
    results = mine_interleaved(db, cycle, thresholds, &stats);
  } else if (opt.algo == "pcar") {
    results = mine_pcar(db, cycle, thresholds, opt.partitions, &stats);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown algorithm '" + opt.algo + "'");
  }

  if (!opt.quiet) {
    std::cout << "units: " << db.unit_count()
              << "  cyclic itemsets: " << results.size() << "\n";
    for (const auto& r : results)
      std::cout << "{" << r.itemset.str() << "} sup=" << r.support
                << " offset=" << r.best_offset << "\n";
  }

  if (!opt.state_out.empty()) {
    MiningState state = initial_mine(db, cycle, thresholds, opt.partitions);
    save_state_file(opt.state_out, state);
    if (!opt.quiet)
      std::cout << "state: " << state.entries.size() << " entries -> "
                << opt.state_out << "\n";
  }

  if (!opt.report.empty()) {
    json itemsets = json::array();
    for (const auto& r : results)
      itemsets.push_back({{"items", itemset_json(r.itemset)},
                          {"support", r.support},
                          {"offset", r.best_offset}});
    json report{{"command", "mine"},
                {"units", db.unit_count()},
                {"transactions", db.transaction_count()},
                {"records_read", ledger.count("database")},
                {"min_sup", thresholds.resolve_min_sup(db.unit_count())},
                {"algo", opt.algo},
                {"itemsets", itemsets},
                {"fc_count", results.size()},
                {"fc_checksum", fc_checksum(results)},
                {"stats",
                 {{"presence_checks", stats.presence_checks},
                  {"skipped_checks", stats.skipped_checks},
                  {"offsets_retired", stats.offsets_retired},
                  {"candidates", stats.candidates},
                  {"pruned", stats.pruned}}}};
    write_report(opt.report, report);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// update

struct UpdateOptions {
  std::string state;
  std::string inc;
  unsigned grouping = 1;
  unsigned cycle = 0;  // 0: take the state's cycle
  std::string state_out;
  std::string report;
  bool quiet = false;
};

int cmd_update(const UpdateOptions& opt) {
  FileLedger ledger;
  MiningState state = load_state_file(opt.state);
  if (opt.cycle != 0 && opt.cycle != state.cycle.length)
    fail(ErrorCode::CycleMismatch,
         "state cycles on length " + std::to_string(state.cycle.length) +
             ", not " + std::to_string(opt.cycle));

  auto inc_records = ledger.load(opt.inc, "increment");
  auto inc = ingest(inc_records, opt.grouping);
  UpdateResult result = apply_increment(state, inc);

  std::size_t fc = fc_itemsets(result.state).size();
  if (!opt.quiet) {
    std::cout << "units: " << state.db_units << " -> " << result.state.db_units
              << "\n";
    std::cout << "entries: " << result.state.entries.size() << " (fc=" << fc
              << ")\n";
    std::cout << "cases:";
    for (int i = 0; i < 9; ++i) {
      UpdateCase c = static_cast<UpdateCase>(i);
      if (result.report.count(c) > 0)
        std::cout << " " << update_case_name(c) << "=" << result.report.count(c);
    }
    std::cout << "\n";
    std::cout << "diagonal_only: "
              << (result.report.diagonal_only() ? "true" : "false") << "\n";
  }

  if (!opt.state_out.empty()) {
    save_state_file(opt.state_out, result.state);
    if (!opt.quiet)
      std::cout << "state -> " << opt.state_out << "\n";
  }

  if (!opt.report.empty()) {
    json report{{"command", "update"},
                {"original_records_read", ledger.count("database")},
                {"increment_records_read", ledger.count("increment")},
                {"increment_units", result.report.increment_units},
                {"increment_transactions", result.report.increment_transactions},
                {"db_units_before", state.db_units},
                {"db_units_after", result.state.db_units},
                {"entries", result.state.entries.size()},
                {"fc_count", fc},
                {"fc_checksum", fc_checksum(result.state)},
                {"cases", cases_json(result.report)},
                {"diagonal_only", result.report.diagonal_only()}};
    write_report(opt.report, report);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// rules

struct RulesOptions {
  std::string db;
  std::string state;
  std::string inc;
  unsigned grouping = 1;
  unsigned cycle = 1;
  std::string min_sup;
  std::string min_conf;
  std::string mode;  // empty: per-offset for data, relative for state
  std::string algo = "interleaved";
  unsigned partitions = 1;
  bool quiet = false;
};

int cmd_rules(const RulesOptions& opt) {
  if (opt.db.empty() == opt.state.empty())
    fail(ErrorCode::InvalidArgument,
         "rules needs exactly one of --db and --state");
  Fraction min_conf = Fraction::parse(opt.min_conf);

  std::vector<CyclicRule> rules;
  if (!opt.db.empty()) {
    if (opt.min_sup.empty())
      fail(ErrorCode::InvalidArgument, "--db rules need --min-sup");
    FileLedger ledger;
    auto db = ingest(ledger.load(opt.db, "database"), opt.grouping);
    ThresholdConfig thresholds;
    thresholds.min_sup = Fraction::parse(opt.min_sup);
    CycleConfig cycle{opt.cycle};
    cycle.validate();
    std::vector<CyclicSupportResult> mined;
    if (opt.algo == "sequential") {
      mined = mine_sequential(db, cycle, thresholds);
    } else if (opt.algo == "interleaved") {
      mined = mine_interleaved(db, cycle, thresholds);
    } else if (opt.algo == "pcar") {
      mined = mine_pcar(db, cycle, thresholds, opt.partitions);
    } else {
      fail(ErrorCode::InvalidArgument, "unknown algorithm '" + opt.algo + "'");
    }
    ConfidenceMode mode = ConfidenceMode::PerOffset;
    if (opt.mode == "cyclic-ratio") mode = ConfidenceMode::CyclicRatio;
    else if (opt.mode == "relative") mode = ConfidenceMode::RelativeRatio;
    else if (!opt.mode.empty() && opt.mode != "per-offset")
      fail(ErrorCode::InvalidArgument, "unknown mode '" + opt.mode + "'");
    DatabaseSupportSource source(db, cycle);
    rules = generate_rules(frequent_inputs(mined), source, min_conf, mode);
  } else {
    MiningState state = load_state_file(opt.state);
    TransactionDatabase inc;
    bool have_inc = false;
    if (!opt.inc.empty()) {
      FileLedger ledger;
      inc = ingest(ledger.load(opt.inc, "increment"), opt.grouping);
      have_inc = true;
    }
    if (!opt.mode.empty() && opt.mode != "relative")
      fail(ErrorCode::InvalidArgument,
           "state-backed rules support only --mode relative");
    StateSupportSource source(state, have_inc ? &inc : nullptr);
    rules = generate_rules(frequent_inputs(state), source, min_conf,
                           ConfidenceMode::RelativeRatio);
  }

  if (!opt.quiet) {
    std::cout << "rules: " << rules.size() << "\n";
    for (const CyclicRule& r : rules) std::cout << format_rule(r) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::uint64_t units = 5000;
  std::uint64_t inc_units = 500;
  unsigned cycle = 5;
  std::vector<long long> min_sups;
  unsigned repeats = 3;
  std::uint64_t seed = 42;
  unsigned partitions = 10;
  std::uint32_t alphabet = 48;
  double noise = 0.1;
  std::vector<std::string> patterns;
  std::string report;
  std::string work_dir = "/tmp";
  bool quiet = false;
};

int cmd_bench(const BenchOptions& opt) {
  if (opt.repeats == 0)
    fail(ErrorCode::InvalidArgument, "--repeats must be positive");
  std::vector<long long> min_sups =
      opt.min_sups.empty() ? std::vector<long long>{50} : opt.min_sups;
  for (long long m : min_sups)
    if (m < 1) fail(ErrorCode::InvalidArgument, "min_sup values must be >= 1");

  GeneratorConfig config;
  config.units = opt.units + opt.inc_units;
  config.alphabet_size = opt.alphabet;
  config.noise_rate = opt.noise;
  config.seed = opt.seed;
  if (opt.patterns.empty()) {
    config.patterns = graded_patterns();
  } else {
    for (const std::string& text : opt.patterns)
      config.patterns.push_back(parse_pattern(text));
  }

  auto all_records = generate_transactions(config);
  std::vector<std::vector<Item>> orig_records(all_records.begin(),
                                              all_records.begin() + opt.units);
  std::vector<std::vector<Item>> inc_records(all_records.begin() + opt.units,
                                             all_records.end());

  // Round-trip both halves through files so the workload is byte-identical
  // to what the mine/update commands would see.
  const std::string orig_path = opt.work_dir + "/cyclemine_bench_orig.txt";
  const std::string inc_path = opt.work_dir + "/cyclemine_bench_inc.txt";
  write_transactions_file(orig_path, orig_records);
  write_transactions_file(inc_path, inc_records);
  FileLedger ledger;
  orig_records = ledger.load(orig_path, "database");
  inc_records = ledger.load(inc_path, "increment");

  auto orig_db = ingest(orig_records);
  auto inc_db = ingest(inc_records);
  std::vector<std::vector<Item>> combined_records = orig_records;
  combined_records.insert(combined_records.end(), inc_records.begin(),
                          inc_records.end());
  auto combined_db = ingest(combined_records);
  CycleConfig cycle{opt.cycle};
  cycle.validate();

  struct Row {
    long long min_sup = 0;
    ThresholdConfig thresholds;
    MiningState state;
    std::vector<double> rerun_times;
    std::vector<double> update_times;
    std::vector<CyclicSupportResult> rerun_results;
    UpdateResult update;
    std::uint64_t original_scans = 0;
    std::uint64_t increment_scans = 0;
  };

  std::vector<Row> sweep;
  for (long long min_sup : min_sups) {
    Row row;
    row.min_sup = min_sup;
    row.thresholds.min_sup = Fraction(min_sup);
    row.thresholds.expected_increment_size = opt.inc_units;
    row.state = initial_mine(orig_db, cycle, row.thresholds, opt.partitions);
    sweep.push_back(std::move(row));
  }

  // Comparable timings need every row measured under the same process
  // state, so trials are interleaved round-robin across the sweep after an
  // untimed warm-up pass, instead of finishing one row before the next.
  for (Row& row : sweep) {
    (void)mine_pcar(combined_db, cycle, row.thresholds, opt.partitions);
    (void)apply_increment(row.state, inc_db);
  }
  for (unsigned r = 0; r < opt.repeats; ++r) {
    for (Row& row : sweep) {
      row.rerun_times.push_back(time_ms([&] {
        row.rerun_results =
            mine_pcar(combined_db, cycle, row.thresholds, opt.partitions);
      }));
    }
  }
  for (unsigned r = 0; r < opt.repeats; ++r) {
    for (Row& row : sweep) {
      orig_db.reset_scan_counter();
      inc_db.reset_scan_counter();
      row.update_times.push_back(time_ms([&] {
        row.update = apply_increment(row.state, inc_db);
      }));
      row.original_scans = orig_db.transactions_scanned();
      row.increment_scans = inc_db.transactions_scanned();
    }
  }

  json rows = json::array();
  for (Row& row : sweep) {
    long long min_sup = row.min_sup;
    const UpdateResult& update = row.update;
    std::uint64_t original_scans = row.original_scans;
    std::uint64_t increment_scans = row.increment_scans;
    double rerun_ms = median(row.rerun_times);
    double update_ms = median(row.update_times);
    auto rerun_fc = fc_itemsets(row.rerun_results);
    auto update_fc = fc_itemsets(update.state);

    json row_json{{"min_sup", min_sup},
                  {"rerun_ms", rerun_ms},
                  {"update_ms", update_ms},
                  {"ratio", rerun_ms > 0 ? update_ms / rerun_ms : 0.0},
                  {"rerun_fc_count", rerun_fc.size()},
                  {"update_fc_count", update_fc.size()},
                  {"fc_set_difference",
                   symmetric_difference_size(rerun_fc, update_fc)},
                  {"rerun_checksum", fc_checksum(row.rerun_results)},
                  {"update_checksum", fc_checksum(update.state)},
                  {"original_transactions_scanned_during_update", original_scans},
                  {"increment_transactions_scanned_during_update", increment_scans},
                  {"state_entries", update.state.entries.size()},
                  {"case_tally", cases_json(update.report)},
                  {"diagonal_only", update.report.diagonal_only()}};
    rows.push_back(row_json);

    if (!opt.quiet) {
      std::cout << "min_sup=" << min_sup << " rerun=" << rerun_ms
                << "ms update=" << update_ms << "ms ratio="
                << (rerun_ms > 0 ? update_ms / rerun_ms : 0.0)
                << " fc(rerun)=" << rerun_fc.size()
                << " fc(update)=" << update_fc.size()
                << " orig_scans_during_update=" << original_scans << "\n";
    }
  }

  if (!opt.report.empty()) {
    json report{{"command", "bench"},
                {"units", opt.units},
                {"increment_units", opt.inc_units},
                {"cycle", opt.cycle},
                {"repeats", opt.repeats},
                {"seed", opt.seed},
                {"partitions", opt.partitions},
                {"setup_records_read",
                 {{"database", ledger.count("database")},
                  {"increment", ledger.count("increment")}}},
                {"rows", rows}};
    write_report(opt.report, report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclic itemset mining with incremental state maintenance"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate synthetic transactions");
  gen_cmd->add_option("--out", gen.out, "output transactions file")->required();
  gen_cmd->add_option("--units", gen.units, "time units to generate")->required();
  gen_cmd->add_option("--inc-out", gen.inc_out, "continuation output file");
  gen_cmd->add_option("--inc-units", gen.inc_units,
                      "extra units written to --inc-out");
  gen_cmd->add_option("--alphabet", gen.alphabet, "noise item universe size");
  gen_cmd->add_option("--noise", gen.noise, "mean noise items per unit");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--pattern", gen.patterns,
                      "planted pattern items@offset/length[:prob]");
  gen_cmd->add_option("--preset", gen.preset, "named workload (bench)");

  MineOptions mine;
  CLI::App* mine_cmd = app.add_subcommand("mine", "mine cyclic itemsets");
  mine_cmd->add_option("--db", mine.db, "transactions file")->required();
  mine_cmd->add_option("--grouping", mine.grouping, "records per time unit");
  mine_cmd->add_option("--cycle", mine.cycle, "cycle length")->required();
  mine_cmd->add_option("--min-sup", mine.min_sup,
                       "occurrence threshold (count or fraction)")
      ->required();
  mine_cmd->add_option("--min-conf", mine.min_conf, "confidence threshold");
  mine_cmd->add_option("--expected-inc", mine.expected_inc,
                       "anticipated increment size for the kept-itemset floor");
  mine_cmd->add_flag("--literal", mine.literal,
                     "compare raw counts against the kept-itemset floor");
  mine_cmd->add_option("--algo", mine.algo, "sequential|interleaved|pcar");
  mine_cmd->add_option("--partitions", mine.partitions, "pcar partition count");
  mine_cmd->add_option("--state-out", mine.state_out, "write mining state here");
  mine_cmd->add_option("--report", mine.report, "write a JSON report here");
  mine_cmd->add_flag("--quiet", mine.quiet, "suppress itemset listing");

  UpdateOptions update;
  CLI::App* update_cmd =
      app.add_subcommand("update", "fold an increment into a mining state");
  update_cmd->add_option("--state", update.state, "mining state file")->required();
  update_cmd->add_option("--inc", update.inc, "increment transactions file")
      ->required();
  update_cmd->add_option("--grouping", update.grouping, "records per time unit");
  update_cmd->add_option("--cycle", update.cycle,
                         "cycle length (must match the state)");
  update_cmd->add_option("--state-out", update.state_out,
                         "write the updated state here");
  update_cmd->add_option("--report", update.report, "write a JSON report here");
  update_cmd->add_flag("--quiet", update.quiet, "suppress summary output");

  RulesOptions rules;
  CLI::App* rules_cmd = app.add_subcommand("rules", "emit association rules");
  rules_cmd->add_option("--db", rules.db, "transactions file");
  rules_cmd->add_option("--state", rules.state, "mining state file");
  rules_cmd->add_option("--inc", rules.inc,
                        "increment file for state-backed fallback counts");
  rules_cmd->add_option("--grouping", rules.grouping, "records per time unit");
  rules_cmd->add_option("--cycle", rules.cycle, "cycle length (with --db)");
  rules_cmd->add_option("--min-sup", rules.min_sup, "occurrence threshold");
  rules_cmd->add_option("--min-conf", rules.min_conf, "confidence threshold")
      ->required();
  rules_cmd->add_option("--mode", rules.mode,
                        "per-offset|cyclic-ratio|relative");
  rules_cmd->add_option("--algo", rules.algo, "sequential|interleaved|pcar");
  rules_cmd->add_option("--partitions", rules.partitions, "pcar partition count");
  rules_cmd->add_flag("--quiet", rules.quiet, "suppress rule listing");

  BenchOptions bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "compare a full re-mine against an update");
  bench_cmd->add_option("--units", bench.units, "original units");
  bench_cmd->add_option("--inc-units", bench.inc_units, "increment units");
  bench_cmd->add_option("--cycle", bench.cycle, "cycle length");
  bench_cmd->add_option("--min-sup", bench.min_sups,
                        "occurrence thresholds to sweep");
  bench_cmd->add_option("--repeats", bench.repeats, "timing repeats per row");
  bench_cmd->add_option("--seed", bench.seed, "generator seed");
  bench_cmd->add_option("--partitions", bench.partitions,
                        "partitions for the re-mine");
  bench_cmd->add_option("--alphabet", bench.alphabet, "noise item universe");
  bench_cmd->add_option("--noise", bench.noise, "mean noise items per unit");
  bench_cmd->add_option("--pattern", bench.patterns,
                        "override the built-in workload");
  bench_cmd->add_option("--report", bench.report, "write a JSON report here");
  bench_cmd->add_option("--work-dir", bench.work_dir,
                        "directory for the staged data files");
  bench_cmd->add_flag("--quiet", bench.quiet, "suppress per-row output");

  try {
    app.parse(argc, argv);
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (mine_cmd->parsed()) return cmd_mine(mine);
    if (update_cmd->parsed()) return cmd_update(update);
    if (rules_cmd->parsed()) return cmd_rules(rules);
    if (bench_cmd->parsed()) return cmd_bench(bench);
    return 2;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
