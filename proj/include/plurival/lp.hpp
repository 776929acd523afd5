#ifndef PLURIVAL_LP_HPP
#define PLURIVAL_LP_HPP

#include <utility>
#include <vector>

#include "plurival/rational.hpp"

namespace plurival {

enum class LpStatus { optimal, infeasible, unbounded };
enum class LpSense { minimize, maximize };

// Linear program over the nonnegative orthant with >= constraints:
//   optimize objective . x   subject to   row . x >= bound for each row, x >= 0.
struct LinearProgram {
  LpSense sense = LpSense::minimize;
  RationalVec objective;
  std::vector<std::pair<RationalVec, Rational>> constraints;
};

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  RationalVec point;   // optimal x, when status == optimal
  RationalVec duals;   // per-constraint multipliers with objective.x == duals.bounds
  RationalVec farkas;  // infeasibility certificate: y >= 0, y^T A <= 0, y^T b > 0
  RationalVec ray;     // unboundedness certificate: recession direction in x-space
};

// Exact rational simplex, Bland's pivoting rule throughout. Deterministic:
// identical inputs produce identical pivots, hence identical optima and
// certificates. Certificates are re-verified before returning.
LpResult lp_solve(const LinearProgram& lp);

}  // namespace plurival

#endif  // PLURIVAL_LP_HPP
