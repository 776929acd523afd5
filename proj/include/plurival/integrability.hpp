#ifndef PLURIVAL_INTEGRABILITY_HPP
#define PLURIVAL_INTEGRABILITY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plurival/monomial_ideal.hpp"
#include "plurival/toric_weight.hpp"

namespace plurival {

// Integrability query for |numerator|^2 e^{-2 phi0} e^{-2 c phi} near o,
// with a monomial or monomial-ideal numerator and an optional toric twist.
struct JumpingQuery {
  std::variant<Exponent, MonomialIdeal> numerator;
  std::optional<ToricWeight> twist;  // phi0
  ToricWeight weight;                // phi

  JumpingQuery(Exponent gamma, ToricWeight phi);
  JumpingQuery(Exponent gamma, ToricWeight phi0, ToricWeight phi);
  JumpingQuery(MonomialIdeal ideal, ToricWeight phi);
  JumpingQuery(MonomialIdeal ideal, ToricWeight phi0, ToricWeight phi);
};

// Exact threshold c* = sup{c : the query integrand is integrable at c}.
// Realized as the margin LP: minimize <gamma+1,u> - phi0-part over the
// normalized polyhedron of the weight. Ideal numerators take the minimum
// over generators. Throws a domain error when the reference |num|^2 e^{-2
// phi0} is itself non-integrable.
Rational jumping_number(const JumpingQuery& q);

// Strict threshold convention: true iff c < jumping_number(q).
bool is_integrable(const JumpingQuery& q, const Rational& c);

// Log canonical threshold: jumping number with numerator 1.
Rational lct(const ToricWeight& phi);

// nu(z^g, Phi) = sigma(log|z^g|, Phi); with reference 1, nu + 1 equals the
// jumping number of z^g against Phi.
Rational zhou_valuation(const Exponent& g, const DiagonalZhouWeight& phi);

// z^g in I(t*phi): jumping_number(z^g, t*phi) > 1, decided on the vertices of
// the weight polyhedron.
bool multiplier_membership(const Exponent& g, const ToricWeight& phi, const Rational& t);

// Minimal monomial generators of I(t*phi). Lattice enumeration runs inside a
// certified per-axis box derived from the weight polyhedron's vertices; the
// configured cap is a loud capacity guard, never silent truncation.
MonomialIdeal multiplier_ideal(const ToricWeight& phi, const Rational& t);

// s * Phi_a with s the integrability threshold of |f0|^2 e^{-2 phi0} e^{-2 c
// Phi_a}; the maximal member of the scaled diagonal ray keeping the reference
// non-integrable. Maximality beyond the toric class is not certified here.
DiagonalZhouWeight zhou_weight_for(const ReferencePair& ref, const RationalVec& a);

// Vertices of {u >= 0 : <gamma,u> >= 1 for every scaled piece gamma}; the
// monomial jumping number against the weight is min over vertices of
// <g+1, vertex>.
std::vector<RationalVec> weight_polyhedron_vertices(const ToricWeight& phi);
Rational monomial_threshold(const Exponent& g, const std::vector<RationalVec>& vertices);

struct ThmAReport {
  Rational lhs;                       // c_o^I(phi)
  bool diagonal = false;              // weight recognized as diagonal
  RationalVec candidate_a;            // analytic candidate a* (diagonal case)
  Rational sigma_at_candidate;        // sigma(phi, zhou_weight_for(|I|^2, a*))
  Rational product;                   // lhs * sigma_at_candidate
  bool exact_equality = false;        // product == 1
  Rational grid_sup;                  // sup of sigma over the direction grid
  bool grid_ok = false;               // no grid point exceeds the certified sup
  bool gap_flag = false;              // non-diagonal weight: grid-only search
};

// Checks c_o^I(phi) * sup_a sigma(phi, zhou_weight_for(|I|^2, a)) = 1 at the
// analytic candidate and confirms no grid direction beats it.
ThmAReport thmA_check(const MonomialIdeal& ideal, const ToricWeight& phi, int grid_resolution);

struct InclusionVerdict {
  bool sigma_u_le_v = false;  // sigma(u,Phi) <= sigma(v,Phi) for all diagonal Phi
  bool sigma_v_le_u = false;
  bool ideals_u_le_v = false;  // I(t v) subset I(t u) on the whole t-grid
  bool ideals_v_le_u = false;
  bool agree = false;
  std::optional<RationalVec> witness_uv;  // direction a where sigma order u<=v fails
  std::optional<RationalVec> witness_vu;
};

// Cross-checks the relative-type comparison over the full diagonal family
// (exact simplex LPs) against multiplier-ideal inclusions sampled on a t-grid.
InclusionVerdict inclusion_equivalence(const ToricWeight& u, const ToricWeight& v,
                                       const Rational& t_max, int m_samples);

struct DivisionVerdict {
  bool componentwise = false;
  bool valuative = false;
  std::optional<RationalVec> witness_a;  // diagonal direction violating the order
};

// Monomial division two ways: componentwise order and the valuation order
// over every diagonal weight. The two criteria always coincide; both are
// computed independently.
DivisionVerdict divides(const Exponent& f, const Exponent& g);

// Rational p > 1 with z^g still in I(p*t*phi); exists by strictness whenever
// z^g is in I(t*phi).
Rational openness_witness(const Exponent& g, const ToricWeight& phi, const Rational& t);

}  // namespace plurival

#endif  // PLURIVAL_INTEGRABILITY_HPP
