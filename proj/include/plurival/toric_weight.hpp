#ifndef PLURIVAL_TORIC_WEIGHT_HPP
#define PLURIVAL_TORIC_WEIGHT_HPP

#include <optional>
#include <string>
#include <vector>

#include "plurival/exponent.hpp"
#include "plurival/newton.hpp"

namespace plurival {

// Germ of a toric plurisubharmonic function
//     c * log max_{beta in pieces} |z^beta|.
// In logarithmic coordinates u_j = -log|z_j| >= 0 the value is
//     -c * min_{beta} <beta, u>,
// a nonpositive piecewise-linear concave function on the orthant. Germs are
// kept constant-free: two weights agree up to O(1) exactly when their scaled
// piece sets generate the same Newton polyhedron, and construction reduces
// the piece set to those polyhedron vertices.
class ToricWeight {
 public:
  ToricWeight(std::vector<Exponent> pieces, Rational scale = Rational(1));

  static ToricWeight zero(int dim);                         // the zero germ
  static ToricWeight monomial(const Exponent& beta, Rational scale = Rational(1));

  int dim() const { return dim_; }
  const Rational& scale() const { return scale_; }
  const std::vector<Exponent>& pieces() const { return pieces_; }

  bool is_zero_weight() const { return pieces_.size() == 1 && pieces_[0].is_zero(); }

  // Value in log coordinates: -scale * min_beta <beta,u>, for u >= 0.
  Rational value_log(const RationalVec& u) const;
  // Value at a polydisc point via |z_j|, as a double (-inf off the domain).
  double value_at_modulus(const std::vector<double>& abs_z) const;

  // Pieces with the scale folded in; generators of the weight's polyhedron.
  std::vector<Exponent> scaled_pieces() const;
  NewtonPolyhedron newton() const;

  ToricWeight rescaled(const Rational& factor) const;

  // Germ order: *this <= other + O(1).
  bool germ_leq(const ToricWeight& other) const;
  bool germ_eq(const ToricWeight& other) const;

  std::string str() const;

 private:
  int dim_;
  Rational scale_;
  std::vector<Exponent> pieces_;
};

// w1 + w2: Minkowski sum of scaled piece sets, reduced.
ToricWeight weight_sum(const ToricWeight& w1, const ToricWeight& w2);
// max{w1, w2}: union of scaled piece sets, reduced.
ToricWeight weight_max(const ToricWeight& w1, const ToricWeight& w2);

// Diagonal weight s * Phi_a with Phi_a = log max_j |z_j|^{a_j} and
// sum_j 1/a_j = 1. With s = 1 these are the canonical maximal germs of the
// toric class; scaled instances arise from zhou_weight_for.
class DiagonalZhouWeight {
 public:
  explicit DiagonalZhouWeight(RationalVec a, Rational scale = Rational(1));

  // Scales an arbitrary positive vector onto the constraint sum 1/a_j = 1.
  static RationalVec normalize_direction(const RationalVec& a);

  int dim() const { return static_cast<int>(a_.size()); }
  const RationalVec& a() const { return a_; }
  const Rational& scale() const { return scale_; }
  // x_j = 1/a_j; barycentric coordinates on the direction simplex.
  RationalVec reciprocal() const;

  ToricWeight to_toric() const;

  friend bool operator==(const DiagonalZhouWeight& l, const DiagonalZhouWeight& r) {
    return l.a_ == r.a_ && l.scale_ == r.scale_;
  }

 private:
  RationalVec a_;
  Rational scale_;
};

// sigma(psi, s*Phi_a) = (scale(psi)/s) * min over pieces beta of sum_j beta_j/a_j.
Rational relative_type(const ToricWeight& psi, const DiagonalZhouWeight& phi);
// General toric denominator, evaluated by one exact LP per piece of psi.
Rational relative_type_toric(const ToricWeight& psi, const ToricWeight& phi);

// Lelong number nu(psi,o) = scale * min_beta sum_j beta_j.
Rational lelong_number(const ToricWeight& psi);
// Kiselman number against the pole log max |z_j|^{1/a_j}:
// scale * min_beta sum_j a_j beta_j; a strictly positive.
Rational kiselman_number(const ToricWeight& psi, const RationalVec& a);

// min over the standard simplex of <gamma+1,u> - c0*min_{beta0}<beta0,u>;
// positive exactly when |z^gamma|^2 e^{-2 phi0} is integrable near o.
Rational reference_margin_min(const Exponent& gamma, const ToricWeight& phi0);

// Reference data |f0|^2 e^{-2 phi0}: a monomial germ z^f0 and a toric twist,
// integrable near the origin (checked at construction).
class ReferencePair {
 public:
  ReferencePair(Exponent f0, ToricWeight phi0);
  static ReferencePair trivial(int dim);  // f0 = 1, phi0 = 0

  int dim() const { return f0_.dim(); }
  const Exponent& f0() const { return f0_; }
  const ToricWeight& phi0() const { return phi0_; }

 private:
  Exponent f0_;
  ToricWeight phi0_;
};

enum class GermOrder { equal, less, greater, incomparable };

// Orders two normalized diagonal weights by their monomial relative types;
// within the constraint sum 1/a_j = 1 comparability collapses to equality.
GermOrder compare_zhou(const DiagonalZhouWeight& phi1, const DiagonalZhouWeight& phi2);

const char* germ_order_name(GermOrder o);

}  // namespace plurival

#endif  // PLURIVAL_TORIC_WEIGHT_HPP
