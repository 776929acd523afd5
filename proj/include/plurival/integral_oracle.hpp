#ifndef PLURIVAL_INTEGRAL_ORACLE_HPP
#define PLURIVAL_INTEGRAL_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "plurival/toric_weight.hpp"

namespace plurival {

enum class IntegralMethod { closed_form, monte_carlo };

// Sublevel-set mass and moment over {s*Phi_a < -t}:
//   mass   = int |f0|^2 e^{-2 phi0}
//   moment = int |f0|^2 e^{-2 phi0} (-psi)
// in logarithmic coordinates, angular factors dropped (they cancel in every
// reported ratio). Closed forms additionally carry the exact representation
//   mass = K e^{-2 lambda t},  moment = (A t + B) e^{-2 lambda t},
// so ratio(t) = A/K + (B/K)/t holds with tolerance zero.
struct SublevelIntegral {
  double t = 0;
  double mass = 0;
  double moment = 0;
  double ratio = 0;  // moment / (t * mass)
  IntegralMethod method = IntegralMethod::closed_form;
  double stderr_mass = 0;
  double stderr_moment = 0;
  double stderr_ratio = 0;
  long effective_samples = 0;

  bool has_exact = false;
  Rational coef_mass;     // K
  Rational rate;          // lambda
  Rational moment_lin;    // A
  Rational moment_const;  // B
};

// Factorable fixtures only: phi0 and psi with a single piece each, so every
// axis is a one-dimensional exponential integral. Refuses otherwise.
SublevelIntegral sublevel_closed_form(const ReferencePair& ref, const DiagonalZhouWeight& phi,
                                      const ToricWeight& psi, const Rational& t);

// Importance sampling with one shifted-exponential proposal per axis matched
// to the piece of phi0 active at the region corner. Deterministic for fixed
// (seed, workers); worker partials are reduced in worker order.
SublevelIntegral sublevel_monte_carlo(const ReferencePair& ref, const DiagonalZhouWeight& phi,
                                      const ToricWeight& psi, const Rational& t, long n_samples,
                                      std::uint64_t seed, int workers = 1);

struct RatioSeries {
  std::vector<Rational> t_grid;
  std::vector<double> ratios;
  std::vector<double> stderrs;
  double fitted_limit = 0;  // a in the a + b/t model
  double fitted_slope = 0;  // b
  bool exact = false;
  Rational exact_limit;   // closed form: a as an exact rational
  Rational exact_slope;   // closed form: b
  Rational sigma;         // tropical relative type the limit must match
  bool limit_matches = false;
  double residual = 0;  // largest |ratio - (a + b/t)| over the grid
};

// Ratio moment/(t*mass) along a t-grid with the fitted 1/t model and the
// extrapolated limit compared against relative_type(psi, phi).
RatioSeries ratio_convergence(const ReferencePair& ref, const DiagonalZhouWeight& phi,
                              const ToricWeight& psi, const std::vector<Rational>& t_grid,
                              long mc_samples = 0, std::uint64_t seed = 1, int workers = 1);

struct MassAsymptoticsReport {
  bool threshold_normalized = false;
  Rational rate;      // lambda: mass = K e^{-2 lambda t}
  Rational constant;  // K
  std::string classification;  // threshold | integrable_margin | nonintegrable_margin
  std::vector<Rational> t_grid;
  std::vector<double> neg_log_mass_over_2t;
  std::vector<double> e2t_mass;
};

// -log(mass)/(2t) and e^{2t}*mass along the grid. At threshold normalization
// (rate exactly 1) the first tends to 1 and the second is the constant K.
MassAsymptoticsReport mass_asymptotics(const ReferencePair& ref, const DiagonalZhouWeight& phi,
                                       const std::vector<Rational>& t_grid);

}  // namespace plurival

#endif  // PLURIVAL_INTEGRAL_ORACLE_HPP
