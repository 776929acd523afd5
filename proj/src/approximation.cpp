#include "plurival/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "plurival/errors.hpp"

namespace plurival {

ApproximantFamily approximant(int m, const DiagonalZhouWeight& phi) {
  if (m < 1) throw_validation("approximant needs m >= 1");
  if (phi.scale() != Rational(1)) throw_validation("approximant expects a scale-1 weight");
  MonomialIdeal gens = multiplier_ideal(phi.to_toric(), Rational(m));
  std::vector<Exponent> pieces;
  for (const Exponent& a : gens.generators()) pieces.push_back(a.scaled(Rational(1, m)));
  ToricWeight realized(std::move(pieces));
  Rational sigma = relative_type(realized, phi);
  return ApproximantFamily{m, phi, std::move(gens), std::move(realized), std::move(sigma)};
}

ConvergenceReport pointwise_convergence(const DiagonalZhouWeight& phi,
                                        const std::vector<std::vector<double>>& z_grid,
                                        const std::vector<int>& m_list) {
  if (m_list.empty()) throw_validation("pointwise_convergence needs a nonempty m list");
  const int n = phi.dim();
  for (const auto& z : z_grid) {
    if (static_cast<int>(z.size()) != n) throw_validation("grid point dimension mismatch");
    for (double r : z)
      if (!(r > 0) || !(r < 1))
        throw_validation("grid points must lie in the open polydisc off the axes");
  }
  Rational amax = phi.a()[0];
  for (const Rational& aj : phi.a()) amax = max(amax, aj);

  ConvergenceReport rep;
  ToricWeight phi_toric = phi.to_toric();
  for (int m : m_list) {
    ApproximantFamily fam = approximant(m, phi);
    rep.m_list.push_back(m);
    rep.sigma_m.push_back(fam.sigma_m);
    rep.sigma_lower_ok.push_back(fam.sigma_m > Rational(1) - Rational(1, m));
    rep.sigma_upper_ok.push_back(fam.sigma_m <= Rational(1) + (Rational(1) + amax) / Rational(m));
    double gap = 0;
    for (const auto& z : z_grid) {
      double fm = fam.realized.value_at_modulus(z);
      double fv = phi_toric.value_at_modulus(z);
      gap = std::max(gap, fm - fv);
    }
    rep.sup_gap.push_back(gap);
    rep.fitted_c = std::max(rep.fitted_c, m * gap);
  }
  return rep;
}

double green_approximant(int m, const std::vector<double>& abs_z) {
  if (m < 1) throw_validation("green_approximant needs m >= 1");
  if (abs_z.empty()) throw_validation("green_approximant needs a point");
  for (double r : abs_z)
    if (!(r > 0) || !(r < 1)) throw_validation("point must lie in the open polydisc off the axes");
  // sup over |alpha| = m of (1/m) sum alpha_j log|z_j|; linear in alpha, so a
  // vertex alpha = m e_j of the degree simplex attains it.
  double best = -std::numeric_limits<double>::infinity();
  for (double r : abs_z) best = std::max(best, std::log(r));
  return best;
}

EnvelopeReport envelope_identity_check(const DiagonalZhouWeight& phi,
                                       const std::vector<double>& abs_z, int max_degree) {
  const int n = phi.dim();
  if (static_cast<int>(abs_z.size()) != n) throw_validation("envelope check: dimension mismatch");
  if (max_degree < 1) throw_validation("envelope check needs max_degree >= 1");
  for (double r : abs_z)
    if (!(r > 0) || !(r < 1)) throw_validation("point must lie in the open polydisc off the axes");

  EnvelopeReport rep;
  rep.phi_value = phi.to_toric().value_at_modulus(abs_z);
  RationalVec x = phi.reciprocal();
  rep.sup_ratio = -std::numeric_limits<double>::infinity();

  std::vector<long> alpha(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> walk = [&](int idx, int remaining) {
    if (idx == n) {
      bool zero = std::all_of(alpha.begin(), alpha.end(), [](long a) { return a == 0; });
      if (zero) return;
      double logz = 0;
      Rational sigma;
      for (int j = 0; j < n; ++j) {
        logz += static_cast<double>(alpha[static_cast<std::size_t>(j)]) *
                std::log(abs_z[static_cast<std::size_t>(j)]);
        sigma += Rational(alpha[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
      }
      double ratio = logz / sigma.to_double();
      if (ratio > rep.sup_ratio) {
        rep.sup_ratio = ratio;
        rep.best_alpha = alpha;
      }
      if (ratio > rep.phi_value + 1e-12) rep.dominated = false;
      return;
    }
    for (long v = 0; v <= remaining; ++v) {
      alpha[static_cast<std::size_t>(idx)] = v;
      walk(idx + 1, remaining - static_cast<int>(v));
    }
    alpha[static_cast<std::size_t>(idx)] = 0;
  };
  walk(0, max_degree);
  rep.gap = rep.phi_value - rep.sup_ratio;
  return rep;
}

bool approximant_dominates_weight(const ApproximantFamily& fam) {
  const int n = fam.weight.dim();
  for (int j = 0; j < n; ++j) {
    Rational bound = Rational(fam.m) * fam.weight.a()[static_cast<std::size_t>(j)];
    bool covered = false;
    for (const Exponent& g : fam.monomials.generators()) {
      bool pure = true;
      for (int k = 0; k < n; ++k)
        if (k != j && g[k].sign() != 0) {
          pure = false;
          break;
        }
      if (pure && g[j] <= bound) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace plurival
