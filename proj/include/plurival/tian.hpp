#ifndef PLURIVAL_TIAN_HPP
#define PLURIVAL_TIAN_HPP

#include <vector>

#include "plurival/toric_weight.hpp"

namespace plurival {

enum class Side { left, right };

// Exact piecewise-linear function on a rational interval, stored as nodes
// (including both endpoints), node values, and one slope per segment. Concave
// in every instance produced here; slopes are non-increasing left to right.
class TianFunction {
 public:
  TianFunction(RationalVec nodes, RationalVec values);

  const Rational& t_lo() const { return nodes_.front(); }
  const Rational& t_hi() const { return nodes_.back(); }
  const RationalVec& nodes() const { return nodes_; }
  const RationalVec& values() const { return values_; }
  const RationalVec& slopes() const { return slopes_; }

  Rational evaluate(const Rational& t) const;
  Rational value_at_0() const { return evaluate(Rational(0)); }

  bool is_concave() const;
  // Exact one-sided slope at an interior point.
  Rational derivative(const Rational& t, Side side) const;

 private:
  RationalVec nodes_;
  RationalVec values_;
  RationalVec slopes_;
};

// Data of the generalized jumping-number function
//   Tn(t) = sup{ c : |z^gamma0|^2 e^{-2 phi0} e^{2 t psi} e^{-2 c weight}
//                integrable near o }.
struct TianQuery {
  Exponent gamma0;
  ToricWeight phi0;
  ToricWeight psi;
  ToricWeight weight;

  TianQuery(Exponent gamma0_, ToricWeight phi0_, ToricWeight psi_, ToricWeight weight_);
};

// Exact Tn on [t_lo, t_hi] by support-line refinement of the parametric
// threshold LP: every breakpoint and slope is an exact rational. Domain
// errors name the failing t when the twisted reference loses integrability.
TianFunction tian_function(const TianQuery& q, const Rational& t_lo, const Rational& t_hi);

// Single-point evaluation (value of the threshold LP at t).
Rational tian_value(const TianQuery& q, const Rational& t);

// Whether the t-twisted standalone reference stays integrable; true for all
// t >= 0, monotone in t below. tian_function requires it at t_lo.
bool tian_reference_valid_at(const TianQuery& q, const Rational& t);

Rational derivative_at_zero(const TianFunction& f, Side side);

struct ThresholdReport {
  Rational b0;               // left derivative of A_{u,v} at 0
  Rational left_derivative;  // same value, kept for the record
  Rational tn0;              // A(0)
  Rational jn_at_b0;         // jumping number of ref against max{u, v/b0}
  Rational jn_above;         // same at b0 + 1/1000
  bool nonintegrable_at_b0 = false;  // expected: threshold unchanged at b0
  bool integrable_above = false;     // expected: threshold strictly larger
};

// The one-sided derivative threshold of A(t) = Tn(t; ref, t*v, weight u):
// max{u, v/b} preserves the jumping number exactly for b <= b0 and raises it
// for b > b0. Requires A strictly increasing around 0.
ThresholdReport threshold_b0(const ToricWeight& u, const ToricWeight& v, const ReferencePair& ref);

}  // namespace plurival

#endif  // PLURIVAL_TIAN_HPP
