#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "cyclemine/io.hpp"
#include "cyclemine/iupcar.hpp"
#include "fixtures.hpp"

using namespace cyclemine;

namespace {

MiningState sample_state() {
  MiningState state;
  state.db_units = 10;
  state.cycle = CycleConfig{2};
  state.min_sup = 2;
  state.min_conf = Fraction(2, 3);
  state.literal_floor = false;
  ItemsetStateEntry a;
  a.itemset = Itemset::of({1});
  a.status = ItemsetStatus::FC;
  a.weight = Fraction(3, 5);
  a.abs_support = 6;
  a.history_units = 10;
  state.entries.emplace(a.itemset, a);
  ItemsetStateEntry b;
  b.itemset = Itemset::of({1, 350000});
  b.status = ItemsetStatus::FPC;
  b.weight = Fraction(1, 3);
  b.abs_support = 3;
  b.history_units = 10;
  state.entries.emplace(b.itemset, b);
  return state;
}

ErrorCode load_error(const std::string& text, std::size_t* index = nullptr) {
  std::istringstream in(text);
  try {
    load_state(in);
  } catch (const Error& e) {
    if (index) *index = e.index();
    return e.code();
  }
  return ErrorCode::InvalidArgument;  // no error seen; fails the caller's CHECK
}

}  // namespace

TEST_CASE("transaction text parses with comments and blank lines") {
  std::istringstream in("1 2\n\n  # full-line comment\n3\n 4 5 \n");
  auto records = parse_transactions(in);
  REQUIRE(records.size() == 3);
  CHECK(records[0] == std::vector<Item>{1, 2});
  CHECK(records[1] == std::vector<Item>{3});
  CHECK(records[2] == std::vector<Item>{4, 5});
}

TEST_CASE("malformed transaction lines carry their line number") {
  std::istringstream in("1 2\n\n# ok\n3 x\n");
  try {
    parse_transactions(in);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedTransaction);
    CHECK(e.index() == 4);
  }

  std::istringstream negative("-1\n");
  CHECK_THROWS_AS(parse_transactions(negative), Error);
  std::istringstream too_big("4294967296\n");
  CHECK_THROWS_AS(parse_transactions(too_big), Error);
  std::istringstream inline_comment("1 # not a comment\n");
  CHECK_THROWS_AS(parse_transactions(inline_comment), Error);
}

TEST_CASE("transactions round-trip through text") {
  std::vector<std::vector<Item>> records{{2}, {1, 2}, {1, 2, 3, 4}, {7}};
  std::ostringstream out;
  write_transactions(out, records);
  std::istringstream in(out.str());
  CHECK(parse_transactions(in) == records);
}

TEST_CASE("transaction files report IO failures") {
  CHECK_THROWS_AS(load_transactions("/nonexistent/path/t.txt"), Error);
  try {
    load_transactions("/nonexistent/path/t.txt");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoFailure);
  }
}

TEST_CASE("state round-trips bit-exactly") {
  MiningState state = sample_state();
  std::ostringstream out;
  save_state(out, state);
  std::istringstream in(out.str());
  MiningState loaded = load_state(in);
  CHECK(loaded == state);

  const char* path = "/tmp/cyclemine_state_roundtrip.txt";
  save_state_file(path, state);
  CHECK(load_state_file(path) == state);
  std::remove(path);
}

TEST_CASE("state round-trips across many random instances") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long long> small(1, 12);
  std::uniform_int_distribution<Item> item(1, 1000000);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int round = 0; round < 40; ++round) {
    MiningState state;
    state.db_units = static_cast<std::uint64_t>(small(rng)) * 3;
    state.cycle = CycleConfig{static_cast<unsigned>(small(rng))};
    state.min_sup = small(rng);
    state.min_conf = Fraction(1, small(rng));
    state.literal_floor = coin(rng) == 1;
    int entries = static_cast<int>(small(rng));
    for (int i = 0; i < entries; ++i) {
      ItemsetStateEntry e;
      std::vector<Item> ids;
      int size = 1 + static_cast<int>(small(rng)) % 3;
      for (int j = 0; j < size; ++j) ids.push_back(item(rng));
      e.itemset = Itemset::canonical(std::move(ids));
      e.status = coin(rng) ? ItemsetStatus::FC : ItemsetStatus::FPC;
      e.history_units = state.db_units;
      std::uniform_int_distribution<long long> abs_pick(
          0, static_cast<long long>(state.db_units));
      e.abs_support = abs_pick(rng);
      e.weight = Fraction(e.abs_support, static_cast<long long>(state.db_units));
      state.entries[e.itemset] = e;
    }
    std::ostringstream out;
    save_state(out, state);
    std::istringstream in(out.str());
    CHECK(load_state(in) == state);
  }
}

TEST_CASE("foreign and future state files are rejected as such") {
  std::size_t index = 99;
  CHECK(load_error("") == ErrorCode::VersionMismatch);
  CHECK(load_error("GARBAGE\n") == ErrorCode::VersionMismatch);
  CHECK(load_error("CYCLEMINE-STATE v2\nunits=1 l=1 min_sup=1 "
                   "min_conf=1/2 literal=0 entries=0\n") ==
        ErrorCode::VersionMismatch);
  CHECK(load_error("CYCLEMINE-STATE\n") == ErrorCode::VersionMismatch);
  (void)index;
}

TEST_CASE("structural damage is corruption with a record index") {
  const std::string header =
      "CYCLEMINE-STATE v1\n"
      "units=10 l=2 min_sup=2 min_conf=2/3 literal=0 entries=";

  std::size_t index = 0;
  CHECK(load_error("CYCLEMINE-STATE v1\n") == ErrorCode::CorruptState);
  CHECK(load_error("CYCLEMINE-STATE v1\nunits=10 l=2\n") ==
        ErrorCode::CorruptState);

  // Fewer records than declared.
  CHECK(load_error(header + "2\n1 FC 3/5 6 10\n", &index) ==
        ErrorCode::CorruptState);
  CHECK(index == 2);

  // Wrong token count inside a record.
  CHECK(load_error(header + "1\n1 2 FC 1/2 3\n", &index) ==
        ErrorCode::CorruptState);
  CHECK(index == 1);

  // Absent itemsets are implicitly non-frequent; persisting one is damage.
  CHECK(load_error(header + "1\n1 NFC 1/2 3 10\n", &index) ==
        ErrorCode::CorruptState);
  CHECK(index == 1);

  // Occurrences cannot exceed the unit total.
  CHECK(load_error(header + "1\n1 FC 3/5 11 10\n", &index) ==
        ErrorCode::CorruptState);
  CHECK(index == 1);

  // Unparseable weight.
  CHECK(load_error(header + "1\n1 FC x/y 6 10\n", &index) ==
        ErrorCode::CorruptState);
  CHECK(index == 1);

  // Duplicate itemsets.
  CHECK(load_error(header + "2\n1 FC 3/5 6 10\n1 FPC 1/3 3 10\n", &index) ==
        ErrorCode::CorruptState);
  CHECK(index == 2);

  // Content past the declared records.
  CHECK(load_error(header + "1\n1 FC 3/5 6 10\n2 FC 3/5 6 10\n") ==
        ErrorCode::CorruptState);

  // Trailing blank lines are tolerated.
  std::istringstream ok(header + "1\n1 FC 3/5 6 10\n\n  \n");
  CHECK(load_state(ok).entries.size() == 1);
}

TEST_CASE("generation is deterministic per seed") {
  GeneratorConfig config;
  config.units = 40;
  config.alphabet_size = 10;
  config.noise_rate = 2.0;
  config.seed = 7;
  auto first = generate_transactions(config);
  auto second = generate_transactions(config);
  CHECK(first == second);
  REQUIRE(first.size() == 40);
  for (const auto& txn : first) CHECK_FALSE(txn.empty());

  config.seed = 8;
  CHECK(generate_transactions(config) != first);
}

TEST_CASE("planted patterns land exactly on their offset class") {
  GeneratorConfig config;
  config.units = 6;
  config.alphabet_size = 3;
  config.noise_rate = 0.0;
  config.seed = 1;
  PlantedPattern p;
  p.itemset = Itemset::of({11, 12});
  p.offset = 1;
  p.length = 2;
  p.probability = 1.0;
  config.patterns.push_back(p);

  auto records = generate_transactions(config);
  auto db = ingest(records);
  CHECK(occurrence_bitmap(Itemset::of({11, 12}), db).str() == "010101");
}

TEST_CASE("generator specs are validated") {
  GeneratorConfig config;
  config.units = 0;
  config.alphabet_size = 3;
  CHECK_THROWS_AS(generate_transactions(config), Error);
  config.units = 5;
  config.alphabet_size = 0;
  CHECK_THROWS_AS(generate_transactions(config), Error);
  config.alphabet_size = 3;
  config.noise_rate = -1.0;
  CHECK_THROWS_AS(generate_transactions(config), Error);
  config.noise_rate = 0.0;

  PlantedPattern p;
  p.itemset = Itemset::of({1});
  p.offset = 2;
  p.length = 2;
  config.patterns.push_back(p);
  CHECK_THROWS_AS(generate_transactions(config), Error);
  config.patterns[0].offset = 0;
  config.patterns[0].probability = 1.5;
  CHECK_THROWS_AS(generate_transactions(config), Error);
  config.patterns[0].probability = 0.5;
  config.patterns[0].itemset = Itemset{};
  CHECK_THROWS_AS(generate_transactions(config), Error);
  config.patterns[0].length = 0;
  CHECK_THROWS_AS(generate_transactions(config), Error);
}

TEST_CASE("generated data flows into mining unchanged") {
  GeneratorConfig config;
  config.units = 50;
  config.alphabet_size = 8;
  config.noise_rate = 1.5;
  config.seed = 123;
  PlantedPattern p;
  p.itemset = Itemset::of({20, 21});
  p.offset = 0;
  p.length = 5;
  p.probability = 1.0;
  config.patterns.push_back(p);

  auto records = generate_transactions(config);
  auto db = ingest(records);
  // The pattern fires on all ten offset-0 units.
  ItemsetCounts c = count_itemset(db, Itemset::of({20, 21}), 5, 0);
  CHECK(c.offset_counts[0] == 10);
  CHECK(c.cyclic == 10);
  CHECK(c.best_offset == 0);
}
