#ifndef PLURIVAL_APPROXIMATION_HPP
#define PLURIVAL_APPROXIMATION_HPP

#include <vector>

#include "plurival/integrability.hpp"
#include "plurival/toric_weight.hpp"

namespace plurival {

// Monomial extremal family at level m on the unit polydisc: the generators of
// I(m Phi) realized as the weight max_alpha (1/m) log|z^alpha|. Every
// generator passes the strict criterion sum (alpha_j+1)/a_j > m, and the
// realized germ dominates Phi.
struct ApproximantFamily {
  int m = 1;
  DiagonalZhouWeight weight;
  MonomialIdeal monomials;
  ToricWeight realized;
  Rational sigma_m;  // relative_type(realized, weight)
};

ApproximantFamily approximant(int m, const DiagonalZhouWeight& phi);

struct ConvergenceReport {
  std::vector<int> m_list;
  std::vector<Rational> sigma_m;
  std::vector<bool> sigma_lower_ok;  // sigma_m > 1 - 1/m
  std::vector<bool> sigma_upper_ok;  // sigma_m <= 1 + (1 + max_j a_j)/m
  std::vector<double> sup_gap;       // max over the grid of phi_m - Phi (>= 0)
  double fitted_c = 0;               // max over m of m * sup_gap
};

// Evaluates the approximants and Phi over polydisc points (moduli per
// coordinate, off the axes) and reports the envelope gap with its 1/m bound.
ConvergenceReport pointwise_convergence(const DiagonalZhouWeight& phi,
                                        const std::vector<std::vector<double>>& z_grid,
                                        const std::vector<int>& m_list);

// Green-function approximant on the polydisc: sup over degree-m monomials of
// (1/m) log|z^alpha| = max_j log|z_j|, independent of m.
double green_approximant(int m, const std::vector<double>& abs_z);

struct EnvelopeReport {
  double phi_value = 0;
  double sup_ratio = 0;  // sup over monomials of log|z^alpha| / sigma(log|z^alpha|, Phi)
  double gap = 0;        // phi_value - sup_ratio
  bool dominated = true; // every candidate ratio <= phi_value
  std::vector<long> best_alpha;
};

// Candidates are the monomials of degree <= max_degree with alpha != 0; their
// normalized ratios never exceed Phi and the axis monomial attains it.
EnvelopeReport envelope_identity_check(const DiagonalZhouWeight& phi,
                                       const std::vector<double>& abs_z, int max_degree);

// Exact germ comparison realized >= Phi: every vertex m*a_j*e_j of the scaled
// diagonal polyhedron is covered by a pure-power generator.
bool approximant_dominates_weight(const ApproximantFamily& fam);

}  // namespace plurival

#endif  // PLURIVAL_APPROXIMATION_HPP
