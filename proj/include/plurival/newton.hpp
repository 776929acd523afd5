#ifndef PLURIVAL_NEWTON_HPP
#define PLURIVAL_NEWTON_HPP

#include <mutex>
#include <utility>
#include <vector>

#include "plurival/exponent.hpp"

namespace plurival {

// Unbounded polyhedron conv(generators) + nonnegative orthant. Membership is
// decidable exactly two ways: a feasibility LP over convex multipliers, and
// the inequality test against the facet normals. Facet normals are computed
// on first use and cached; values are immutable afterwards.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(std::vector<Exponent> generators);

  int dim() const { return dim_; }
  const std::vector<Exponent>& generators() const { return generators_; }

  // Primal route: beta in conv(generators) + orthant via feasibility LP.
  bool contains_lp(const Exponent& beta) const;
  // Dual route: <w,beta> >= min_i <w,alpha_i> for every facet normal w >= 0.
  bool contains_dual(const Exponent& beta) const;
  // Default membership (dual route; cheap after the facet cache is warm).
  bool contains(const Exponent& beta) const { return contains_dual(beta); }

  // Inclusion of polyhedra: other subset-of *this.
  bool contains_polyhedron(const NewtonPolyhedron& other) const;

  // Facet normals as (w, h) with P = {x >= 0 : <w,x> >= h for all facets}.
  const std::vector<std::pair<Exponent, Rational>>& facets() const;

 private:
  void compute_facets() const;

  int dim_;
  std::vector<Exponent> generators_;
  mutable std::once_flag facets_once_;
  mutable std::vector<std::pair<Exponent, Rational>> facets_;
};

// Prunes every exponent lying in conv(of the others) + orthant; the survivors
// are exactly the vertices of the generated polyhedron, sorted.
std::vector<Exponent> reduce_convex(std::vector<Exponent> points);

}  // namespace plurival

#endif  // PLURIVAL_NEWTON_HPP
