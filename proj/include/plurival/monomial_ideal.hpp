#ifndef PLURIVAL_MONOMIAL_IDEAL_HPP
#define PLURIVAL_MONOMIAL_IDEAL_HPP

#include <vector>

#include "plurival/exponent.hpp"
#include "plurival/newton.hpp"

namespace plurival {

// Monomial ideal given by its minimal generators: integer exponents with no
// generator dominating another componentwise. Canonical (sorted) after
// construction, so equality is plain comparison.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::vector<Exponent> generators);

  int dim() const { return dim_; }
  const std::vector<Exponent>& generators() const { return generators_; }

  bool is_trivial() const;  // generated by 1 (the zero exponent)

  // z^g in the ideal: g dominates some generator.
  bool contains(const Exponent& g) const;
  bool contains_ideal(const MonomialIdeal& other) const;

  NewtonPolyhedron newton() const { return NewtonPolyhedron(generators_); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.generators_ == b.generators_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

 private:
  int dim_;
  std::vector<Exponent> generators_;
};

}  // namespace plurival

#endif  // PLURIVAL_MONOMIAL_IDEAL_HPP
