#include "plurival/integral_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "plurival/errors.hpp"
#include "plurival/rng.hpp"

namespace plurival {

namespace {

struct AxisRates {
  RationalVec c;       // c_j = f0_j + 1 - (scaled phi0 piece)_j
  RationalVec corner;  // s_j = t / (scale * a_j)
};

// Per-axis decay rates for a single-piece twist; positivity is the
// integrability of the reference restated coordinatewise.
AxisRates factorable_rates(const ReferencePair& ref, const DiagonalZhouWeight& phi,
                           const Rational& t) {
  const ToricWeight& phi0 = ref.phi0();
  if (phi0.pieces().size() != 1)
    throw_validation("closed form needs a single-piece phi0; use the Monte Carlo path");
  const int n = ref.dim();
  AxisRates r;
  r.c.resize(static_cast<std::size_t>(n));
  r.corner.resize(static_cast<std::size_t>(n));
  Exponent tpiece = phi0.pieces()[0].scaled(phi0.scale());
  for (int j = 0; j < n; ++j) {
    r.c[static_cast<std::size_t>(j)] = ref.f0()[j] + 1 - tpiece[j];
    if (r.c[static_cast<std::size_t>(j)].sign() <= 0)
      throw_validation("closed form: nonpositive axis rate (reference not factorably integrable)");
    r.corner[static_cast<std::size_t>(j)] =
        t / (phi.scale() * phi.a()[static_cast<std::size_t>(j)]);
  }
  return r;
}

double stddev_of_mean(double sum, double sumsq, double n) {
  double var = (sumsq - sum * sum / n) / (n - 1);
  if (var < 0) var = 0;
  return std::sqrt(var / n);
}

struct KahanSum {
  double s = 0, c = 0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

}  // namespace

SublevelIntegral sublevel_closed_form(const ReferencePair& ref, const DiagonalZhouWeight& phi,
                                      const ToricWeight& psi, const Rational& t) {
  check_same_dim(ref.dim(), phi.dim(), "sublevel integral");
  check_same_dim(ref.dim(), psi.dim(), "sublevel integral");
  if (t.sign() <= 0) throw_validation("sublevel integral needs t > 0");
  if (psi.pieces().size() != 1)
    throw_validation("closed form needs a single-piece psi; use the Monte Carlo path");
  const int n = ref.dim();
  AxisRates rates = factorable_rates(ref, phi, t);
  Exponent beta = psi.pieces()[0].scaled(psi.scale());

  // mass = prod_j e^{-2 c_j s_j} / (2 c_j) = K e^{-2 lambda t}
  Rational K(1);
  Rational lambda;
  for (int j = 0; j < n; ++j) {
    const Rational& c = rates.c[static_cast<std::size_t>(j)];
    K /= 2 * c;
    lambda += c / (phi.scale() * phi.a()[static_cast<std::size_t>(j)]);
  }
  // moment = sum_j beta_j * (s_j + 1/(2 c_j)) * mass  (per-axis first moment of
  // the truncated exponential), linear in t through s_j.
  Rational A, B;
  for (int j = 0; j < n; ++j) {
    const Rational& c = rates.c[static_cast<std::size_t>(j)];
    const Rational& bj = beta[j];
    A += bj / (phi.scale() * phi.a()[static_cast<std::size_t>(j)]);
    B += bj / (2 * c);
  }
  A *= K;
  B *= K;

  SublevelIntegral out;
  out.method = IntegralMethod::closed_form;
  out.t = t.to_double();
  out.has_exact = true;
  out.coef_mass = K;
  out.rate = lambda;
  out.moment_lin = A;
  out.moment_const = B;
  double decay = std::exp(-2.0 * lambda.to_double() * t.to_double());
  out.mass = K.to_double() * decay;
  out.moment = (A.to_double() * t.to_double() + B.to_double()) * decay;
  out.ratio = ((A / K) + (B / K) / t).to_double();
  return out;
}

SublevelIntegral sublevel_monte_carlo(const ReferencePair& ref, const DiagonalZhouWeight& phi,
                                      const ToricWeight& psi, const Rational& t, long n_samples,
                                      std::uint64_t seed, int workers) {
  check_same_dim(ref.dim(), phi.dim(), "sublevel integral");
  check_same_dim(ref.dim(), psi.dim(), "sublevel integral");
  if (t.sign() <= 0) throw_validation("sublevel integral needs t > 0");
  if (n_samples < 10000) throw_validation("monte carlo needs n_samples >= 10^4");
  if (workers < 1) throw_validation("monte carlo needs workers >= 1");
  const int n = ref.dim();
  const std::size_t un = static_cast<std::size_t>(n);

  // Corner of the product region {u_j > t/(s a_j)} and the phi0 piece active
  // there; that piece fixes the per-axis proposal rates.
  std::vector<double> corner(un);
  for (std::size_t j = 0; j < un; ++j)
    corner[j] = (t / (phi.scale() * phi.a()[j])).to_double();
  std::vector<Exponent> tw_pieces;
  for (const Exponent& p : ref.phi0().pieces()) tw_pieces.push_back(p.scaled(ref.phi0().scale()));
  std::size_t active = 0;
  {
    double best = 0;
    for (std::size_t i = 0; i < tw_pieces.size(); ++i) {
      double v = 0;
      for (std::size_t j = 0; j < un; ++j) v += tw_pieces[i][static_cast<int>(j)].to_double() * corner[j];
      if (i == 0 || v < best) {
        best = v;
        active = i;
      }
    }
  }
  std::vector<double> rate(un);
  double log_norm = 0;  // log of prod e^{-rate_j * corner_j} / rate_j
  for (std::size_t j = 0; j < un; ++j) {
    Rational cj = ref.f0()[static_cast<int>(j)] + 1 - tw_pieces[active][static_cast<int>(j)];
    if (cj.sign() <= 0)
      throw_domain("monte carlo: proposal rate nonpositive on axis " + std::to_string(j + 1) +
                   "; re-tune the proposal");
    rate[j] = 2.0 * cj.to_double();
    log_norm += -rate[j] * corner[j] - std::log(rate[j]);
  }
  double norm = std::exp(log_norm);

  std::vector<std::vector<double>> psi_pieces;
  for (const Exponent& p : psi.scaled_pieces()) {
    std::vector<double> v(un);
    for (std::size_t j = 0; j < un; ++j) v[j] = p[static_cast<int>(j)].to_double();
    psi_pieces.push_back(std::move(v));
  }
  std::vector<std::vector<double>> tw_d;
  for (const Exponent& p : tw_pieces) {
    std::vector<double> v(un);
    for (std::size_t j = 0; j < un; ++j) v[j] = p[static_cast<int>(j)].to_double();
    tw_d.push_back(std::move(v));
  }
  std::vector<double> f01(un);
  for (std::size_t j = 0; j < un; ++j) f01[j] = (ref.f0()[static_cast<int>(j)] + Rational(1)).to_double();

  struct Partial {
    KahanSum a, a2, b, b2, ab;
    long count = 0;
  };
  std::vector<Partial> partials(static_cast<std::size_t>(workers));
  long per = n_samples / workers;
  long rem = n_samples % workers;

  auto run_worker = [&](int w) {
    Partial& acc = partials[static_cast<std::size_t>(w)];
    long count = per + (w < rem ? 1 : 0);
    CounterRng rng(seed, static_cast<std::uint64_t>(w));
    std::vector<double> u(un);
    for (long i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < un; ++j)
        u[j] = corner[j] - std::log(rng.next_unit()) / rate[j];
      // weight = integrand / proposal, with the dominant-piece decay cancelled:
      //   log w = 2 c0 (min_b0 <b0,u> - <b0*,u>)  <= 0.
      double mn = 0;
      double act = 0;
      for (std::size_t k = 0; k < tw_d.size(); ++k) {
        double v = 0;
        for (std::size_t j = 0; j < un; ++j) v += tw_d[k][j] * u[j];
        if (k == 0 || v < mn) mn = v;
        if (k == active) act = v;
      }
      double logw = 2.0 * (mn - act);
      // Residual mismatch between <f0+1,u> and the proposal rates vanishes by
      // construction; only the twist piece switch contributes.
      double w_i = std::exp(logw);
      // (-psi)(u) = min over the scaled pieces of <beta,u>; scale already folded.
      double psival = 0;
      for (std::size_t k = 0; k < psi_pieces.size(); ++k) {
        double v = 0;
        for (std::size_t j = 0; j < un; ++j) v += psi_pieces[k][j] * u[j];
        if (k == 0 || v < psival) psival = v;
      }
      double b_i = w_i * psival;
      acc.a.add(w_i);
      acc.a2.add(w_i * w_i);
      acc.b.add(b_i);
      acc.b2.add(b_i * b_i);
      acc.ab.add(w_i * b_i);
      ++acc.count;
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& th : pool) th.join();
  }

  double sa = 0, sa2 = 0, sb = 0, sb2 = 0, sab = 0;
  long total = 0;
  for (const Partial& p : partials) {
    sa += p.a.s;
    sa2 += p.a2.s;
    sb += p.b.s;
    sb2 += p.b2.s;
    sab += p.ab.s;
    total += p.count;
  }
  double N = static_cast<double>(total);
  double ess = sa * sa / sa2;
  if (ess < 100)
    throw_domain("monte carlo: effective sample size " + std::to_string(ess) +
                 " < 100; re-tune the proposal");

  SublevelIntegral out;
  out.method = IntegralMethod::monte_carlo;
  out.t = t.to_double();
  out.effective_samples = static_cast<long>(ess);
  double mean_a = sa / N;
  double mean_b = sb / N;
  out.mass = norm * mean_a;
  out.moment = norm * mean_b;
  out.stderr_mass = norm * stddev_of_mean(sa, sa2, N);
  out.stderr_moment = norm * stddev_of_mean(sb, sb2, N);
  out.ratio = out.moment / (out.t * out.mass);
  // Delta method for the ratio of means.
  double var_a = (sa2 - sa * sa / N) / (N - 1) / N;
  double var_b = (sb2 - sb * sb / N) / (N - 1) / N;
  double cov = (sab - sa * sb / N) / (N - 1) / N;
  double r = mean_b / mean_a;
  double var_r = (var_b - 2 * r * cov + r * r * var_a) / (mean_a * mean_a);
  out.stderr_ratio = std::sqrt(std::max(0.0, var_r)) / out.t;
  return out;
}

RatioSeries ratio_convergence(const ReferencePair& ref, const DiagonalZhouWeight& phi,
                              const ToricWeight& psi, const std::vector<Rational>& t_grid,
                              long mc_samples, std::uint64_t seed, int workers) {
  if (t_grid.size() < 2) throw_validation("ratio_convergence needs at least two grid nodes");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i - 1] < t_grid[i])) throw_validation("ratio_convergence grid must increase");

  bool factorable = ref.phi0().pieces().size() == 1 && psi.pieces().size() == 1;
  RatioSeries out;
  out.t_grid = t_grid;
  out.sigma = relative_type(psi, phi);

  if (factorable && mc_samples <= 0) {
    SublevelIntegral first = sublevel_closed_form(ref, phi, psi, t_grid[0]);
    out.exact = true;
    out.exact_limit = first.moment_lin / first.coef_mass;
    out.exact_slope = first.moment_const / first.coef_mass;
    out.fitted_limit = out.exact_limit.to_double();
    out.fitted_slope = out.exact_slope.to_double();
    for (const Rational& t : t_grid) {
      Rational exact_ratio = out.exact_limit + out.exact_slope / t;
      out.ratios.push_back(exact_ratio.to_double());
      out.stderrs.push_back(0);
    }
    out.residual = 0;
    out.limit_matches = out.exact_limit == out.sigma;
    return out;
  }

  if (mc_samples <= 0) throw_validation("ratio_convergence: non-factorable inputs need mc_samples");
  for (const Rational& t : t_grid) {
    SublevelIntegral s = sublevel_monte_carlo(ref, phi, psi, t, mc_samples, seed, workers);
    out.ratios.push_back(s.ratio);
    out.stderrs.push_back(s.stderr_ratio);
  }
  // Least squares for ratio ~ a + b/t.
  double n = static_cast<double>(t_grid.size());
  double sx = 0, sxx = 0, sy = 0, sxy = 0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    double x = 1.0 / t_grid[i].to_double();
    double y = out.ratios[i];
    sx += x;
    sxx += x * x;
    sy += y;
    sxy += x * y;
  }
  double det = n * sxx - sx * sx;
  out.fitted_slope = (n * sxy - sx * sy) / det;
  out.fitted_limit = (sy - out.fitted_slope * sx) / n;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    double pred = out.fitted_limit + out.fitted_slope / t_grid[i].to_double();
    out.residual = std::max(out.residual, std::abs(out.ratios[i] - pred));
  }
  double tol = 0;
  for (double s : out.stderrs) tol = std::max(tol, 3 * s);
  out.limit_matches = std::abs(out.fitted_limit - out.sigma.to_double()) <= std::max(tol, 1e-9);
  return out;
}

MassAsymptoticsReport mass_asymptotics(const ReferencePair& ref, const DiagonalZhouWeight& phi,
                                       const std::vector<Rational>& t_grid) {
  if (t_grid.empty()) throw_validation("mass_asymptotics needs a nonempty grid");
  AxisRates rates = factorable_rates(ref, phi, t_grid[0]);
  const int n = ref.dim();

  Rational K(1);
  Rational lambda;
  for (int j = 0; j < n; ++j) {
    const Rational& c = rates.c[static_cast<std::size_t>(j)];
    K /= 2 * c;
    lambda += c / (phi.scale() * phi.a()[static_cast<std::size_t>(j)]);
  }

  MassAsymptoticsReport rep;
  rep.rate = lambda;
  rep.constant = K;
  rep.threshold_normalized = lambda == Rational(1);
  if (rep.threshold_normalized)
    rep.classification = "threshold";
  else if (lambda > Rational(1))
    rep.classification = "integrable_margin";  // e^{2t} mass -> 0
  else
    rep.classification = "nonintegrable_margin";  // e^{2t} mass -> infinity
  rep.t_grid = t_grid;
  for (const Rational& t : t_grid) {
    double td = t.to_double();
    double logmass = std::log(K.to_double()) - 2.0 * lambda.to_double() * td;
    rep.neg_log_mass_over_2t.push_back(-logmass / (2.0 * td));
    rep.e2t_mass.push_back(std::exp(2.0 * td + logmass));
  }
  return rep;
}

}  // namespace plurival
