#pragma once

#include "cyclemine/model.hpp"

namespace fixtures {

// Six single-transaction units over items A=1, B=2, C=3, D=4:
//   u0 {B}, u1 {A,B}, u2 {A,B,C,D}, u3 {A,B,C}, u4 {C}, u5 {A}.
// The worked example everything golden is frozen against; cycle length 2,
// occurrence threshold 2.
inline cyclemine::TransactionDatabase six_unit_db() {
  return cyclemine::ingest({{2}, {1, 2}, {1, 2, 3, 4}, {1, 2, 3}, {3}, {1}});
}

// Four appended units continuing the six-unit history: {A,B} on even global
// units (6, 8), {C} on odd (7, 9).
inline cyclemine::TransactionDatabase scenario_a_increment() {
  return cyclemine::ingest({{1, 2}, {3}, {1, 2}, {3}});
}

}  // namespace fixtures
