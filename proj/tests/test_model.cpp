#include "doctest.h"

#include <random>

#include "cyclemine/model.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace cyclemine;

TEST_CASE("itemsets canonicalize and compare") {
  Itemset a = Itemset::canonical({3, 1, 2, 1});
  CHECK(a.items() == std::vector<Item>{1, 2, 3});
  CHECK(a.str() == "1 2 3");
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(4));

  Itemset ab = Itemset::of({1, 2});
  CHECK(ab.subset_of(a));
  CHECK_FALSE(a.subset_of(ab));
  CHECK(ab.united(Itemset::of({3})) == a);
  CHECK(a.without(ab) == Itemset::of({3}));
  CHECK(Itemset::of({1}) < Itemset::of({1, 2}));
  CHECK(Itemset::of({1, 2}) < Itemset::of({2}));
}

TEST_CASE("ingest groups records into units") {
  auto db = ingest({{1}, {2}, {3}, {4}, {5}, {6}, {7}}, 2);
  CHECK(db.unit_count() == 4);
  CHECK(db.grouping() == 2);
  CHECK(db.transaction_count() == 7);
  CHECK(db.unit(0).transactions.size() == 2);
  CHECK(db.unit(3).transactions.size() == 1);  // trailing short unit
  CHECK(db.unit(1).index == 1);

  CHECK_THROWS_AS(ingest({}), Error);
  try {
    ingest({});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyDatabase);
  }

  try {
    ingest({{1}, {}, {2}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedTransaction);
    CHECK(e.index() == 2);
  }

  CHECK_THROWS_AS(ingest({{1}}, 0), Error);
}

TEST_CASE("scan counter ticks per transaction looked at") {
  auto db = fixtures::six_unit_db();
  CHECK(db.transactions_scanned() == 0);
  db.scan_unit(0);
  CHECK(db.transactions_scanned() == 1);
  db.scan_unit(2);
  CHECK(db.transactions_scanned() == 2);
  db.reset_scan_counter();
  CHECK(db.transactions_scanned() == 0);
  // Structural access does not count as scanning.
  (void)db.unit(0);
  (void)db.unit_count();
  CHECK(db.transactions_scanned() == 0);
}

TEST_CASE("occurrence bitmaps over the six-unit history") {
  auto db = fixtures::six_unit_db();
  CHECK(occurrence_bitmap(Itemset::of({1}), db).str() == "011101");
  CHECK(occurrence_bitmap(Itemset::of({2}), db).str() == "111100");
  CHECK(occurrence_bitmap(Itemset::of({3}), db).str() == "001110");
  CHECK(occurrence_bitmap(Itemset::of({4}), db).str() == "001000");
  CHECK(occurrence_bitmap(Itemset::of({1, 2}), db).str() == "011100");
  CHECK(occurrence_bitmap(Itemset::of({1, 4}), db).str() == "001000");
  CHECK(occurrence_bitmap(Itemset::of({1, 3}), db).str() == "001100");

  CHECK_THROWS_AS(occurrence_bitmap(Itemset{}, db), Error);
}

TEST_CASE("bitmap operations") {
  auto db = fixtures::six_unit_db();
  OccurrenceBitmap a = occurrence_bitmap(Itemset::of({1}), db);
  OccurrenceBitmap b = occurrence_bitmap(Itemset::of({2}), db);
  OccurrenceBitmap ab = occurrence_bitmap(Itemset::of({1, 2}), db);
  CHECK((a & b) == ab);  // one transaction per unit makes AND exact here
  CHECK(ab.implies(a));
  CHECK(ab.implies(b));
  CHECK_FALSE(a.implies(ab));
  CHECK(ab.count() == 3);
  CHECK(ab.offset_counts(2) == std::vector<long long>{1, 2});
  CHECK(ab.offset_counts(2, 1) == std::vector<long long>{2, 1});
  CHECK(a.offset_counts(3) == std::vector<long long>{1, 1, 2});
}

TEST_CASE("bitmap edge sizes") {
  OccurrenceBitmap wide(130);
  wide.set(0);
  wide.set(64);
  wide.set(129);
  CHECK(wide.count() == 3);
  CHECK(wide.test(64));
  CHECK_FALSE(wide.test(63));
  wide.set(64, false);
  CHECK(wide.count() == 2);
}

TEST_CASE("grouped units detect an itemset in any member transaction") {
  // Two units of two transactions each: {1},{2} then {1,2},{3}.
  auto db = ingest({{1}, {2}, {1, 2}, {3}}, 2);
  CHECK(occurrence_bitmap(Itemset::of({1}), db).str() == "11");
  // {1,2} must sit inside ONE transaction; u0 holds it only split apart.
  CHECK(occurrence_bitmap(Itemset::of({1, 2}), db).str() == "01");
}

TEST_CASE("threshold validation and resolution") {
  ThresholdConfig t;
  t.min_sup = Fraction(2);
  t.validate();
  CHECK(t.resolve_min_sup(6) == 2);

  t.min_sup = Fraction(1, 4);
  CHECK(t.resolve_min_sup(6) == 2);   // ceil(6/4)
  CHECK(t.resolve_min_sup(8) == 2);
  CHECK(t.resolve_min_sup(9) == 3);   // ceil(9/4)

  t.min_sup = Fraction(5, 2);
  CHECK(t.resolve_min_sup(6) == 3);   // >= 1 resolves by ceiling the value

  t.min_sup = Fraction(0);
  CHECK_THROWS_AS(t.validate(), Error);
  t.min_sup = Fraction(2);
  t.min_conf = Fraction(101, 100);
  CHECK_THROWS_AS(t.validate(), Error);
  t.min_conf = Fraction(0);
  CHECK_THROWS_AS(t.validate(), Error);
  t.min_conf = Fraction(1);
  t.expected_increment_size = 0;
  CHECK_THROWS_AS(t.validate(), Error);

  CycleConfig zero{0};
  CHECK_THROWS_AS(zero.validate(), Error);
}

TEST_CASE("bitmaps agree with a brute-force reference on random data") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    auto records = oracle::random_records(rng, 1 + round % 12, 5, 0.4);
    unsigned grouping = 1 + round % 3;
    auto db = ingest(records, grouping);
    for (std::uint32_t a = 1; a <= 5; ++a) {
      CHECK(occurrence_bitmap(Itemset::of({a}), db).str() ==
            oracle::bitmap_str(records, grouping, {a}));
      for (std::uint32_t b = a + 1; b <= 5; ++b) {
        CHECK(occurrence_bitmap(Itemset::of({a, b}), db).str() ==
              oracle::bitmap_str(records, grouping, {a, b}));
      }
    }
  }
}
