#include "plurival/tian.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "plurival/errors.hpp"
#include "plurival/integrability.hpp"
#include "plurival/lp.hpp"

namespace plurival {

TianFunction::TianFunction(RationalVec nodes, RationalVec values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  if (nodes_.size() < 2 || nodes_.size() != values_.size())
    throw_validation("piecewise-linear function needs matching nodes and values");
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (!(nodes_[i - 1] < nodes_[i])) throw_validation("nodes must be strictly increasing");
  slopes_.resize(nodes_.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
    slopes_[i] = (values_[i + 1] - values_[i]) / (nodes_[i + 1] - nodes_[i]);
}

Rational TianFunction::evaluate(const Rational& t) const {
  if (t < t_lo() || t > t_hi()) throw_validation("evaluate: t outside the domain");
  std::size_t i = 0;
  while (i + 2 < nodes_.size() && nodes_[i + 1] <= t) ++i;
  return values_[i] + slopes_[i] * (t - nodes_[i]);
}

bool TianFunction::is_concave() const {
  for (std::size_t i = 1; i < slopes_.size(); ++i)
    if (slopes_[i] > slopes_[i - 1]) return false;
  return true;
}

Rational TianFunction::derivative(const Rational& t, Side side) const {
  if (t <= t_lo() && side == Side::left) throw_validation("derivative: t at the left boundary");
  if (t >= t_hi() && side == Side::right) throw_validation("derivative: t at the right boundary");
  if (t < t_lo() || t > t_hi()) throw_validation("derivative: t outside the domain");
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    const Rational& a = nodes_[i];
    const Rational& b = nodes_[i + 1];
    if (side == Side::right && a <= t && t < b) return slopes_[i];
    if (side == Side::left && a < t && t <= b) return slopes_[i];
  }
  throw_validation("derivative: t outside the domain");
}

Rational derivative_at_zero(const TianFunction& f, Side side) {
  return f.derivative(Rational(0), side);
}

TianQuery::TianQuery(Exponent gamma0_, ToricWeight phi0_, ToricWeight psi_, ToricWeight weight_)
    : gamma0(std::move(gamma0_)),
      phi0(std::move(phi0_)),
      psi(std::move(psi_)),
      weight(std::move(weight_)) {
  int n = gamma0.dim();
  check_same_dim(n, phi0.dim(), "tian query");
  check_same_dim(n, psi.dim(), "tian query");
  check_same_dim(n, weight.dim(), "tian query");
  if (!gamma0.is_integral()) throw_validation("tian query numerator must be a monomial");
  if (weight.is_zero_weight()) throw_validation("tian query needs a nonzero weight");
  if (psi.is_zero_weight())
    throw_precondition("tian query needs psi with positive Lelong number");
  if (reference_margin_min(gamma0, phi0).sign() <= 0)
    throw_domain("tian query reference |f0|^2 e^{-2 phi0} is not integrable");
}

namespace {

struct EvalResult {
  Rational value;
  Rational slope;
};

// Threshold LP at fixed t. For t >= 0 the psi term is concave and the minimum
// decomposes over the psi pieces; for t < 0 it is convex and enters through
// an epigraph variable maximized onto the piece minimum.
EvalResult tian_eval(const TianQuery& q, const Rational& t) {
  const std::size_t n = static_cast<std::size_t>(q.gamma0.dim());
  std::vector<Exponent> psi_pieces = q.psi.scaled_pieces();
  std::vector<Exponent> weight_pieces = q.weight.scaled_pieces();
  const bool tw = !q.phi0.is_zero_weight();

  auto base_lp = [&](std::size_t cols) {
    LinearProgram lp;
    lp.objective.assign(cols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) lp.objective[j] = q.gamma0[static_cast<int>(j)] + 1;
    if (tw) {
      lp.objective[n] = -q.phi0.scale();
      for (const Exponent& b : q.phi0.pieces()) {
        RationalVec row(cols);
        for (std::size_t j = 0; j < n; ++j) row[j] = b[static_cast<int>(j)];
        row[n] = -1;
        lp.constraints.emplace_back(std::move(row), Rational(0));
      }
    }
    for (const Exponent& w : weight_pieces) {
      RationalVec row(cols);
      for (std::size_t j = 0; j < n; ++j) row[j] = w[static_cast<int>(j)];
      lp.constraints.emplace_back(std::move(row), Rational(1));
    }
    return lp;
  };

  if (t.sign() >= 0) {
    EvalResult best;
    bool first = true;
    for (const Exponent& b : psi_pieces) {
      std::size_t cols = n + (tw ? 1 : 0);
      LinearProgram lp = base_lp(cols);
      for (std::size_t j = 0; j < n; ++j) lp.objective[j] += t * b[static_cast<int>(j)];
      LpResult r = lp_solve(lp);
      if (r.status == LpStatus::unbounded)
        throw_domain("tian: twisted reference loses integrability at t = " + t.str());
      if (r.status != LpStatus::optimal) throw_validation("tian: unexpected LP status");
      Rational slope;
      for (std::size_t j = 0; j < n; ++j) slope += b[static_cast<int>(j)] * r.point[j];
      if (first || r.value < best.value || (r.value == best.value && slope < best.slope)) {
        best = {r.value, slope};
        first = false;
      }
    }
    return best;
  }

  std::size_t cols = n + (tw ? 1 : 0) + 1;
  LinearProgram lp = base_lp(cols);
  lp.objective[cols - 1] = t;  // negative: the epigraph variable climbs to min<b,u>
  for (const Exponent& b : psi_pieces) {
    RationalVec row(cols);
    for (std::size_t j = 0; j < n; ++j) row[j] = b[static_cast<int>(j)];
    row[cols - 1] = -1;
    lp.constraints.emplace_back(std::move(row), Rational(0));
  }
  LpResult r = lp_solve(lp);
  if (r.status == LpStatus::unbounded)
    throw_domain("tian: twisted reference loses integrability at t = " + t.str());
  if (r.status != LpStatus::optimal) throw_validation("tian: unexpected LP status");
  return {r.value, r.point[cols - 1]};
}

// Integrability of the t-twisted standalone reference
//   |z^gamma0|^2 e^{-2 phi0} e^{2 t psi}:
// its margin must be positive on the whole direction simplex. This keeps the
// threshold positive and the parametric LP characterization exact.
bool tian_valid_at(const TianQuery& q, const Rational& t) {
  if (t.sign() >= 0) return true;  // monotone in t; base reference already checked
  const int n = q.gamma0.dim();
  const std::size_t un = static_cast<std::size_t>(n);
  const bool tw = !q.phi0.is_zero_weight();
  // min over the simplex of <gamma+1,u> - c0*min<beta0,u> + t*min<bpsi,u>,
  // both min terms carried by epigraph variables their negative objective
  // coefficients push onto the piece minima.
  std::size_t cols = un + (tw ? 1 : 0) + 1;
  LinearProgram lp;
  lp.objective.assign(cols, Rational(0));
  for (std::size_t j = 0; j < un; ++j) lp.objective[j] = q.gamma0[static_cast<int>(j)] + 1;
  if (tw) {
    lp.objective[un] = -q.phi0.scale();
    for (const Exponent& b : q.phi0.pieces()) {
      RationalVec row(cols);
      for (std::size_t j = 0; j < un; ++j) row[j] = b[static_cast<int>(j)];
      row[un] = -1;
      lp.constraints.emplace_back(std::move(row), Rational(0));
    }
  }
  lp.objective[cols - 1] = t;
  for (const Exponent& b : q.psi.scaled_pieces()) {
    RationalVec row(cols);
    for (std::size_t j = 0; j < un; ++j) row[j] = b[static_cast<int>(j)];
    row[cols - 1] = -1;
    lp.constraints.emplace_back(std::move(row), Rational(0));
  }
  RationalVec ones(cols, Rational(0));
  for (std::size_t j = 0; j < un; ++j) ones[j] = 1;
  lp.constraints.emplace_back(ones, Rational(1));
  RationalVec neg(cols, Rational(0));
  for (std::size_t j = 0; j < un; ++j) neg[j] = -1;
  lp.constraints.emplace_back(neg, Rational(-1));
  LpResult r = lp_solve(lp);
  if (r.status != LpStatus::optimal) throw_validation("tian validity: unexpected LP status");
  return r.value.sign() > 0;
}

struct Segment {
  Rational lo, hi, vlo, vhi;
};

void refine(const std::function<EvalResult(const Rational&)>& ev, const Rational& lo,
            const EvalResult& elo, const Rational& hi, const EvalResult& ehi,
            std::vector<Segment>& out, int depth) {
  if (depth > 128) throw_validation("tian refinement: depth limit");
  // Supporting line from one endpoint passing through the other endpoint's
  // value means the function is that chord.
  if (elo.value + elo.slope * (hi - lo) == ehi.value ||
      ehi.value - ehi.slope * (hi - lo) == elo.value || elo.slope == ehi.slope) {
    out.push_back({lo, hi, elo.value, ehi.value});
    return;
  }
  Rational tx = (ehi.value - ehi.slope * hi - elo.value + elo.slope * lo) / (elo.slope - ehi.slope);
  if (!(lo < tx && tx < hi)) throw_validation("tian refinement: support lines failed to cross");
  Rational lval = elo.value + elo.slope * (tx - lo);
  EvalResult ex = ev(tx);
  if (ex.value == lval) {
    out.push_back({lo, tx, elo.value, ex.value});
    out.push_back({tx, hi, ex.value, ehi.value});
    return;
  }
  refine(ev, lo, elo, tx, ex, out, depth + 1);
  refine(ev, tx, ex, hi, ehi, out, depth + 1);
}

TianFunction sweep(const std::function<EvalResult(const Rational&)>& ev, const Rational& lo,
                   const Rational& hi) {
  std::vector<Segment> segs;
  refine(ev, lo, ev(lo), hi, ev(hi), segs, 0);
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
  RationalVec nodes, values;
  nodes.push_back(segs[0].lo);
  values.push_back(segs[0].vlo);
  for (const Segment& s : segs) {
    nodes.push_back(s.hi);
    values.push_back(s.vhi);
  }
  // Merge collinear neighbors.
  RationalVec mn{nodes[0]}, mv{values[0]};
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
    Rational s1 = (values[i] - mv.back()) / (nodes[i] - mn.back());
    Rational s2 = (values[i + 1] - values[i]) / (nodes[i + 1] - nodes[i]);
    if (s1 != s2) {
      mn.push_back(nodes[i]);
      mv.push_back(values[i]);
    }
  }
  mn.push_back(nodes.back());
  mv.push_back(values.back());
  return TianFunction(std::move(mn), std::move(mv));
}

}  // namespace

bool tian_reference_valid_at(const TianQuery& q, const Rational& t) {
  return tian_valid_at(q, t);
}

Rational tian_value(const TianQuery& q, const Rational& t) {
  if (t.sign() < 0 && !tian_valid_at(q, t))
    throw_domain("tian: twisted reference loses integrability at t = " + t.str());
  return tian_eval(q, t).value;
}

TianFunction tian_function(const TianQuery& q, const Rational& t_lo, const Rational& t_hi) {
  if (!(t_lo < t_hi)) throw_validation("tian_function: empty range");
  if (t_lo.sign() < 0 && !tian_valid_at(q, t_lo))
    throw_domain("tian: twisted reference loses integrability at t = " + t_lo.str());

  std::map<Rational, EvalResult> cache;
  auto ev = [&](const Rational& t) {
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    EvalResult r = tian_eval(q, t);
    cache.emplace(t, r);
    return r;
  };

  // Split at 0 so the two LP regimes never share a segment.
  if (t_lo.sign() < 0 && t_hi.sign() > 0) {
    TianFunction left = sweep(ev, t_lo, Rational(0));
    TianFunction right = sweep(ev, Rational(0), t_hi);
    RationalVec nodes = left.nodes(), values = left.values();
    for (std::size_t i = 1; i < right.nodes().size(); ++i) {
      nodes.push_back(right.nodes()[i]);
      values.push_back(right.values()[i]);
    }
    // Re-merge in case 0 is not a genuine breakpoint.
    RationalVec mn{nodes[0]}, mv{values[0]};
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
      Rational s1 = (values[i] - mv.back()) / (nodes[i] - mn.back());
      Rational s2 = (values[i + 1] - values[i]) / (nodes[i + 1] - nodes[i]);
      if (s1 != s2) {
        mn.push_back(nodes[i]);
        mv.push_back(values[i]);
      }
    }
    mn.push_back(nodes.back());
    mv.push_back(values.back());
    return TianFunction(std::move(mn), std::move(mv));
  }
  return sweep(ev, t_lo, t_hi);
}

ThresholdReport threshold_b0(const ToricWeight& u, const ToricWeight& v, const ReferencePair& ref) {
  check_same_dim(u.dim(), v.dim(), "threshold_b0");
  TianQuery q(ref.f0(), ref.phi0(), v, u);

  // Shrink the left endpoint until the twisted reference stays integrable.
  Rational lo(-1);
  int tries = 0;
  while (!tian_valid_at(q, lo)) {
    lo /= 2;
    if (++tries > 40)
      throw_precondition("threshold_b0: no valid negative range around 0");
  }
  TianFunction f = tian_function(q, lo, Rational(1));
  Rational left = f.derivative(Rational(0), Side::left);
  Rational right = f.derivative(Rational(0), Side::right);
  if (left.sign() <= 0 || right.sign() <= 0)
    throw_precondition("threshold_b0: Tn(t) is not strictly increasing near 0 (flat slope " +
                       min(left, right).str() + ")");

  ThresholdReport rep;
  rep.b0 = left;
  rep.left_derivative = left;
  rep.tn0 = f.value_at_0();

  auto jn_for = [&](const Rational& b) {
    ToricWeight mixed = weight_max(u, v.rescaled(Rational(1) / b));
    JumpingQuery jq = ref.phi0().is_zero_weight() ? JumpingQuery(ref.f0(), mixed)
                                                  : JumpingQuery(ref.f0(), ref.phi0(), mixed);
    return jumping_number(jq);
  };
  rep.jn_at_b0 = jn_for(rep.b0);
  Rational above = rep.b0 + Rational(1, 1000);
  rep.jn_above = jn_for(above);
  rep.nonintegrable_at_b0 = rep.jn_at_b0 == rep.tn0;
  rep.integrable_above = rep.jn_above > rep.tn0;
  return rep;
}

}  // namespace plurival
