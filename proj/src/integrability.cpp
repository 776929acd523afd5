#include "plurival/integrability.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "plurival/errors.hpp"
#include "plurival/lp.hpp"

namespace plurival {

namespace {

const Exponent& query_dim_probe(const JumpingQuery& q) {
  if (std::holds_alternative<Exponent>(q.numerator)) return std::get<Exponent>(q.numerator);
  return std::get<MonomialIdeal>(q.numerator).generators()[0];
}

void validate_query(const JumpingQuery& q) {
  int n = query_dim_probe(q).dim();
  check_same_dim(n, q.weight.dim(), "jumping query");
  if (q.twist) check_same_dim(n, q.twist->dim(), "jumping query twist");
  if (q.weight.is_zero_weight()) throw_validation("jumping query needs a nonzero weight");
  if (std::holds_alternative<Exponent>(q.numerator) &&
      !std::get<Exponent>(q.numerator).is_integral())
    throw_validation("jumping query numerator must be a monomial (integer exponent)");
}

// Threshold of a single monomial numerator:
//   min <gamma+1,u> - c0*m0   over   m0 <= <beta0,u>, <beta,u> >= 1, u,m0 >= 0,
// with beta running over the scaled weight pieces.
Rational monomial_jumping_number(const Exponent& gamma, const std::optional<ToricWeight>& twist,
                                 const ToricWeight& weight) {
  if (twist) {
    Rational margin = reference_margin_min(gamma, *twist);
    if (margin.sign() <= 0)
      throw_domain("jumping_number: reference |f|^2 e^{-2 phi0} is not integrable");
  }
  const std::size_t n = static_cast<std::size_t>(gamma.dim());
  const bool tw = twist.has_value();
  LinearProgram lp;
  lp.objective.assign(n + (tw ? 1 : 0), Rational(0));
  for (std::size_t j = 0; j < n; ++j) lp.objective[j] = gamma[static_cast<int>(j)] + 1;
  if (tw) {
    lp.objective[n] = -twist->scale();
    for (const Exponent& b : twist->pieces()) {
      RationalVec row(n + 1);
      for (std::size_t j = 0; j < n; ++j) row[j] = b[static_cast<int>(j)];
      row[n] = -1;
      lp.constraints.emplace_back(std::move(row), Rational(0));
    }
  }
  for (const Exponent& b : weight.scaled_pieces()) {
    RationalVec row(n + (tw ? 1 : 0));
    for (std::size_t j = 0; j < n; ++j) row[j] = b[static_cast<int>(j)];
    lp.constraints.emplace_back(std::move(row), Rational(1));
  }
  LpResult r = lp_solve(lp);
  if (r.status != LpStatus::optimal)
    throw_validation("jumping_number: unexpected LP status");
  return r.value;
}

// min over the standard simplex of the full margin
//   <gamma+1,u> - c0*min<beta0,u> - c*cphi*min<beta,u>.
Rational margin_min_at(const Exponent& gamma, const std::optional<ToricWeight>& twist,
                       const ToricWeight& weight, const Rational& c) {
  const std::size_t n = static_cast<std::size_t>(gamma.dim());
  const bool tw = twist.has_value();

  auto solve_with_weight_piece = [&](const Exponent* wpiece, const Rational& wcoef) {
    // Variables (u, [m0]); the weight contribution is either folded linearly
    // (fixed piece, c < 0 branch) or an epigraph variable appended by caller.
    LinearProgram lp;
    std::size_t extra = tw ? 1 : 0;
    bool epi = wpiece == nullptr;
    std::size_t cols = n + extra + (epi ? 1 : 0);
    lp.objective.assign(cols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      lp.objective[j] = gamma[static_cast<int>(j)] + 1;
      if (wpiece) lp.objective[j] += wcoef * (*wpiece)[static_cast<int>(j)];
    }
    if (tw) {
      lp.objective[n] = -twist->scale();
      for (const Exponent& b : twist->pieces()) {
        RationalVec row(cols);
        for (std::size_t j = 0; j < n; ++j) row[j] = b[static_cast<int>(j)];
        row[n] = -1;
        lp.constraints.emplace_back(std::move(row), Rational(0));
      }
    }
    if (epi) {
      lp.objective[cols - 1] = wcoef;
      for (const Exponent& b : weight.scaled_pieces()) {
        RationalVec row(cols);
        for (std::size_t j = 0; j < n; ++j) row[j] = b[static_cast<int>(j)];
        row[cols - 1] = -1;
        lp.constraints.emplace_back(std::move(row), Rational(0));
      }
    }
    RationalVec ones(cols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) ones[j] = 1;
    lp.constraints.emplace_back(ones, Rational(1));
    RationalVec neg(cols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) neg[j] = -1;
    lp.constraints.emplace_back(neg, Rational(-1));
    LpResult r = lp_solve(lp);
    if (r.status != LpStatus::optimal) throw_validation("margin LP: unexpected status");
    return r.value;
  };

  if (c.sign() >= 0) {
    // -c * min is convex: one LP with the epigraph variable maximized onto the
    // piece minimum by its negative objective coefficient.
    return solve_with_weight_piece(nullptr, -c);
  }
  // +|c| * min is concave: minimize piece by piece and take the least.
  Rational best;
  bool first = true;
  for (const Exponent& b : weight.scaled_pieces()) {
    Rational v = solve_with_weight_piece(&b, -c);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

std::optional<RationalVec> solve_square(std::vector<RationalVec> m, RationalVec rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational inv = Rational(1) / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

JumpingQuery::JumpingQuery(Exponent gamma, ToricWeight phi)
    : numerator(std::move(gamma)), weight(std::move(phi)) {
  validate_query(*this);
}
JumpingQuery::JumpingQuery(Exponent gamma, ToricWeight phi0, ToricWeight phi)
    : numerator(std::move(gamma)), twist(std::move(phi0)), weight(std::move(phi)) {
  validate_query(*this);
}
JumpingQuery::JumpingQuery(MonomialIdeal ideal, ToricWeight phi)
    : numerator(std::move(ideal)), weight(std::move(phi)) {
  validate_query(*this);
}
JumpingQuery::JumpingQuery(MonomialIdeal ideal, ToricWeight phi0, ToricWeight phi)
    : numerator(std::move(ideal)), twist(std::move(phi0)), weight(std::move(phi)) {
  validate_query(*this);
}

Rational jumping_number(const JumpingQuery& q) {
  if (std::holds_alternative<Exponent>(q.numerator))
    return monomial_jumping_number(std::get<Exponent>(q.numerator), q.twist, q.weight);
  // Finite sums: |I|^2 integrable iff every generator term is, so the
  // threshold is the minimum over generators.
  const MonomialIdeal& ideal = std::get<MonomialIdeal>(q.numerator);
  Rational best;
  bool first = true;
  for (const Exponent& g : ideal.generators()) {
    Rational v = monomial_jumping_number(g, q.twist, q.weight);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

bool is_integrable(const JumpingQuery& q, const Rational& c) {
  auto term_integrable = [&](const Exponent& gamma) {
    return margin_min_at(gamma, q.twist, q.weight, c).sign() > 0;
  };
  if (std::holds_alternative<Exponent>(q.numerator))
    return term_integrable(std::get<Exponent>(q.numerator));
  for (const Exponent& g : std::get<MonomialIdeal>(q.numerator).generators())
    if (!term_integrable(g)) return false;
  return true;
}

Rational lct(const ToricWeight& phi) {
  return jumping_number(JumpingQuery(Exponent::zero(phi.dim()), phi));
}

Rational zhou_valuation(const Exponent& g, const DiagonalZhouWeight& phi) {
  if (!g.is_integral()) throw_validation("zhou_valuation expects an integer exponent");
  return relative_type(ToricWeight::monomial(g), phi);
}

std::vector<RationalVec> weight_polyhedron_vertices(const ToricWeight& phi) {
  if (phi.is_zero_weight()) throw_validation("weight polyhedron of the zero weight is empty");
  const int n = phi.dim();
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Exponent> pieces = phi.scaled_pieces();
  // Rows: piece constraints <gamma,u> = 1 and axis constraints u_j = 0.
  std::vector<RationalVec> rows;
  RationalVec rhs_all;
  for (const Exponent& p : pieces) {
    rows.push_back(p.coords());
    rhs_all.push_back(Rational(1));
  }
  for (int j = 0; j < n; ++j) {
    RationalVec r(un);
    r[static_cast<std::size_t>(j)] = 1;
    rows.push_back(std::move(r));
    rhs_all.push_back(Rational(0));
  }
  std::set<RationalVec> seen;
  std::vector<RationalVec> vertices;
  std::vector<std::size_t> sel;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int need) {
    if (need == 0) {
      std::vector<RationalVec> m;
      RationalVec b;
      for (std::size_t idx : sel) {
        m.push_back(rows[idx]);
        b.push_back(rhs_all[idx]);
      }
      auto u = solve_square(std::move(m), std::move(b));
      if (!u) return;
      for (const Rational& x : *u)
        if (x.sign() < 0) return;
      for (const Exponent& p : pieces)
        if (dot(p.coords(), *u) < Rational(1)) return;
      if (seen.insert(*u).second) vertices.push_back(*u);
      return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(need) <= rows.size(); ++i) {
      sel.push_back(i);
      rec(i + 1, need - 1);
      sel.pop_back();
    }
  };
  rec(0, n);
  if (vertices.empty()) throw_validation("weight polyhedron: no vertices found");
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

Rational monomial_threshold(const Exponent& g, const std::vector<RationalVec>& vertices) {
  RationalVec gp1 = g.coords();
  for (Rational& x : gp1) x += 1;
  Rational best = dot(gp1, vertices[0]);
  for (std::size_t i = 1; i < vertices.size(); ++i) best = min(best, dot(gp1, vertices[i]));
  return best;
}

bool multiplier_membership(const Exponent& g, const ToricWeight& phi, const Rational& t) {
  if (!g.is_integral()) throw_validation("multiplier_membership expects an integer exponent");
  check_same_dim(g.dim(), phi.dim(), "multiplier_membership");
  if (t.sign() < 0) throw_validation("multiplier_membership needs t >= 0");
  if (t.is_zero()) return true;
  return monomial_threshold(g, weight_polyhedron_vertices(phi)) > t;
}

namespace {

// Minimal elements of the monotone up-set {alpha : member(alpha)} inside the
// box [0,cap], by recursion on the last free coordinate with binary search in
// the base dimension.
class StaircaseEnumerator {
 public:
  StaircaseEnumerator(std::vector<long> cap, std::function<bool(const std::vector<long>&)> member)
      : cap_(std::move(cap)), member_(std::move(member)), point_(cap_.size(), 0) {}

  std::vector<std::vector<long>> run() {
    std::vector<std::vector<long>> out;
    rec(static_cast<int>(cap_.size()) - 1, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Minimal elements over coordinates [0..k], other coordinates fixed in
  // point_; results appended with full coordinates.
  void rec(int k, std::vector<std::vector<long>>& out) {
    if (k == 0) {
      long lo = 0, hi = cap_[0] + 1;  // first member value, or cap+1 if none
      point_[0] = cap_[0];
      if (!member_(point_)) return;
      while (lo < hi) {
        long mid = lo + (hi - lo) / 2;
        point_[0] = mid;
        if (member_(point_))
          hi = mid;
        else
          lo = mid + 1;
      }
      point_[0] = lo;
      out.push_back(point_);
      return;
    }
    for (long h = 0; h <= cap_[static_cast<std::size_t>(k)]; ++h) {
      point_[static_cast<std::size_t>(k)] = h;
      std::vector<std::vector<long>> slice;
      rec(k - 1, slice);
      for (auto& m : slice) {
        if (h > 0) {
          m[static_cast<std::size_t>(k)] = h - 1;
          bool below = member_(m);
          m[static_cast<std::size_t>(k)] = h;
          if (below) continue;  // not minimal: lowering coordinate k stays inside
        }
        out.push_back(m);
      }
    }
    point_[static_cast<std::size_t>(k)] = 0;
  }

  std::vector<long> cap_;
  std::function<bool(const std::vector<long>&)> member_;
  std::vector<long> point_;
};

}  // namespace

MonomialIdeal multiplier_ideal(const ToricWeight& phi, const Rational& t) {
  if (t.sign() < 0) throw_validation("multiplier_ideal needs t >= 0");
  const int n = phi.dim();
  if (t.is_zero() || phi.is_zero_weight())
    return MonomialIdeal({Exponent::zero(n)});

  std::vector<RationalVec> vertices = weight_polyhedron_vertices(phi);

  // Certified per-axis threshold bound for minimal generators: a generator g
  // blocked on axis j has a witnessing vertex w with w_j > 0, so
  // g_j <= t / w_j <= t / (min positive j-coordinate over vertices).
  std::vector<long> cap(static_cast<std::size_t>(n), 0);
  const long axis_cap = 1000000;
  double volume = 1;
  for (int j = 0; j < n; ++j) {
    Rational minpos;
    bool found = false;
    for (const RationalVec& w : vertices) {
      const Rational& wj = w[static_cast<std::size_t>(j)];
      if (wj.sign() > 0 && (!found || wj < minpos)) {
        minpos = wj;
        found = true;
      }
    }
    if (!found) {
      cap[static_cast<std::size_t>(j)] = 0;
      continue;
    }
    BigInt fl = (t / minpos).floor();
    if (fl > axis_cap)
      throw_capacity("multiplier_ideal: enumeration cap exceeded on axis " + std::to_string(j + 1));
    cap[static_cast<std::size_t>(j)] = static_cast<long>(fl.convert_to<long long>());
    volume *= static_cast<double>(cap[static_cast<std::size_t>(j)] + 1);
  }
  if (volume > 5e7) throw_capacity("multiplier_ideal: enumeration volume exceeds the capacity guard");

  auto member = [&](const std::vector<long>& alpha) {
    RationalVec gp1(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) gp1[static_cast<std::size_t>(j)] = Rational(alpha[static_cast<std::size_t>(j)] + 1);
    Rational best = dot(gp1, vertices[0]);
    for (std::size_t i = 1; i < vertices.size(); ++i) best = min(best, dot(gp1, vertices[i]));
    return best > t;
  };

  {
    // The all-cap corner must be inside; minimal generators lie in the box.
    std::vector<long> corner = cap;
    if (!member(corner)) throw_capacity("multiplier_ideal: certified box misses the staircase");
  }

  StaircaseEnumerator enumerator(cap, member);
  std::vector<Exponent> gens;
  for (const std::vector<long>& m : enumerator.run()) {
    RationalVec c(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] = Rational(m[static_cast<std::size_t>(j)]);
    gens.push_back(Exponent(std::move(c)));
  }
  if (gens.empty()) throw_validation("multiplier_ideal: internal error (empty staircase)");
  return MonomialIdeal(std::move(gens));
}

DiagonalZhouWeight zhou_weight_for(const ReferencePair& ref, const RationalVec& a) {
  DiagonalZhouWeight base(a);  // validates sum 1/a_j = 1
  check_same_dim(ref.dim(), base.dim(), "zhou_weight_for");
  JumpingQuery q = ref.phi0().is_zero_weight()
                       ? JumpingQuery(ref.f0(), base.to_toric())
                       : JumpingQuery(ref.f0(), ref.phi0(), base.to_toric());
  Rational s = jumping_number(q);
  if (s.sign() <= 0) throw_domain("zhou_weight_for: nonpositive integrability threshold");
  return DiagonalZhouWeight(a, s);
}

ThmAReport thmA_check(const MonomialIdeal& ideal, const ToricWeight& phi, int grid_resolution) {
  check_same_dim(ideal.dim(), phi.dim(), "thmA_check");
  if (grid_resolution < 2) throw_validation("thmA_check: grid resolution must be >= 2");
  const int n = phi.dim();
  ThmAReport rep;
  rep.lhs = jumping_number(JumpingQuery(ideal, phi));

  std::vector<Exponent> wpieces = phi.scaled_pieces();

  // sigma(phi, s*Phi_a) with s = threshold of |I|^2 against Phi_a, both as
  // functions of x = (1/a_j).
  auto sigma_for_direction = [&](const RationalVec& x) {
    Rational s;
    bool first = true;
    for (const Exponent& g : ideal.generators()) {
      RationalVec gp1 = g.coords();
      for (Rational& v : gp1) v += 1;
      Rational val = dot(gp1, x);
      if (first || val < s) {
        s = val;
        first = false;
      }
    }
    Rational m;
    first = true;
    for (const Exponent& p : wpieces) {
      Rational val = dot(p.coords(), x);
      if (first || val < m) {
        m = val;
        first = false;
      }
    }
    return m / s;
  };

  // Diagonal weight detection: one positive multiple of each axis.
  RationalVec b(static_cast<std::size_t>(n), Rational(0));
  bool diagonal = static_cast<int>(wpieces.size()) == n;
  if (diagonal) {
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const Exponent& p : wpieces) {
      int axis = -1;
      for (int j = 0; j < n; ++j) {
        if (p[j].sign() > 0) {
          if (axis >= 0) {
            axis = -2;
            break;
          }
          axis = j;
        }
      }
      if (axis < 0 || used[static_cast<std::size_t>(axis)]) {
        diagonal = false;
        break;
      }
      used[static_cast<std::size_t>(axis)] = true;
      b[static_cast<std::size_t>(axis)] = p[axis];
    }
  }
  rep.diagonal = diagonal;

  Rational sup_bound;  // certified upper bound for sigma over all directions
  if (diagonal) {
    // Candidate a*_j = b_j * sum_k 1/b_k puts every axis piece of phi on one
    // supporting hyperplane of the scaled diagonal weight.
    Rational sum_inv;
    for (int j = 0; j < n; ++j) sum_inv += Rational(1) / b[static_cast<std::size_t>(j)];
    rep.candidate_a.assign(static_cast<std::size_t>(n), Rational(0));
    RationalVec xstar(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      rep.candidate_a[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j)] * sum_inv;
      xstar[static_cast<std::size_t>(j)] = Rational(1) / rep.candidate_a[static_cast<std::size_t>(j)];
    }
    rep.sigma_at_candidate = sigma_for_direction(xstar);
    rep.product = rep.lhs * rep.sigma_at_candidate;
    rep.exact_equality = rep.product == Rational(1);
    sup_bound = rep.sigma_at_candidate;
  } else {
    rep.gap_flag = true;
    sup_bound = Rational(1) / rep.lhs;
  }

  // Grid over the open direction simplex {x > 0, sum x = 1}.
  bool ok = true;
  Rational grid_sup;
  bool first = true;
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> walk = [&](int idx, int remaining) {
    if (idx == n - 1) {
      if (remaining < 1) return;
      k[static_cast<std::size_t>(idx)] = remaining;
      RationalVec x(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = Rational(k[static_cast<std::size_t>(j)], grid_resolution);
      Rational sig = sigma_for_direction(x);
      if (first || sig > grid_sup) {
        grid_sup = sig;
        first = false;
      }
      if (sig > sup_bound) ok = false;
      return;
    }
    for (int v = 1; v <= remaining - (n - 1 - idx); ++v) {
      k[static_cast<std::size_t>(idx)] = v;
      walk(idx + 1, remaining - v);
    }
  };
  walk(0, grid_resolution);
  rep.grid_sup = grid_sup;
  rep.grid_ok = ok;
  return rep;
}

namespace {

// max over the direction simplex of min_beta <c_u beta, x> - <c_v beta', x>,
// per piece beta' of v; positive value means sigma(u,.) > sigma(v,.) at the
// maximizer.
std::optional<RationalVec> sigma_order_violation(const ToricWeight& u, const ToricWeight& v) {
  const int n = u.dim();
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Exponent> upieces = u.scaled_pieces();
  for (const Exponent& bp : v.scaled_pieces()) {
    LinearProgram lp;
    lp.sense = LpSense::maximize;
    lp.objective.assign(un + 1, Rational(0));
    for (std::size_t j = 0; j < un; ++j) lp.objective[j] = -bp[static_cast<int>(j)];
    lp.objective[un] = 1;
    for (const Exponent& b : upieces) {
      RationalVec row(un + 1);
      for (std::size_t j = 0; j < un; ++j) row[j] = b[static_cast<int>(j)];
      row[un] = -1;
      lp.constraints.emplace_back(std::move(row), Rational(0));
    }
    RationalVec ones(un + 1, Rational(1));
    ones[un] = 0;
    lp.constraints.emplace_back(ones, Rational(1));
    RationalVec neg(un + 1, Rational(-1));
    neg[un] = 0;
    lp.constraints.emplace_back(neg, Rational(-1));
    LpResult r = lp_solve(lp);
    if (r.status != LpStatus::optimal) throw_validation("sigma order LP: unexpected status");
    if (r.value.sign() <= 0) continue;

    // Interior rational witness: nudge the maximizer toward the barycenter
    // until the exact sigma difference stays positive.
    RationalVec xstar(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(un));
    auto sigma_diff = [&](const RationalVec& x) {
      Rational su, sv;
      bool f1 = true, f2 = true;
      for (const Exponent& b : upieces) {
        Rational val = dot(b.coords(), x);
        if (f1 || val < su) su = val, f1 = false;
      }
      for (const Exponent& b : v.scaled_pieces()) {
        Rational val = dot(b.coords(), x);
        if (f2 || val < sv) sv = val, f2 = false;
      }
      return su - sv;
    };
    Rational eps(1, 2);
    for (int iter = 0; iter < 64; ++iter) {
      RationalVec x(un);
      bool interior = true;
      for (std::size_t j = 0; j < un; ++j) {
        x[j] = xstar[j] * (Rational(1) - eps) + eps * Rational(1, n);
        if (x[j].sign() <= 0) interior = false;
      }
      if (interior && sigma_diff(x).sign() > 0) return x;
      eps /= 2;
    }
    throw_validation("sigma order: failed to produce an interior witness");
  }
  return std::nullopt;
}

}  // namespace

InclusionVerdict inclusion_equivalence(const ToricWeight& u, const ToricWeight& v,
                                       const Rational& t_max, int m_samples) {
  check_same_dim(u.dim(), v.dim(), "inclusion_equivalence");
  if (m_samples < 1 || t_max.sign() <= 0)
    throw_validation("inclusion_equivalence: need m_samples >= 1 and t_max > 0");
  InclusionVerdict out;

  // sigma(u,Phi) <= sigma(v,Phi) for all diagonal Phi <=> no direction where
  // the u-type exceeds the v-type.
  auto wit_uv = sigma_order_violation(u, v);
  auto wit_vu = sigma_order_violation(v, u);
  out.sigma_u_le_v = !wit_uv.has_value();
  out.sigma_v_le_u = !wit_vu.has_value();
  if (wit_uv) {
    RationalVec a(wit_uv->size());
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = Rational(1) / (*wit_uv)[j];
    out.witness_uv = a;
  }
  if (wit_vu) {
    RationalVec a(wit_vu->size());
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = Rational(1) / (*wit_vu)[j];
    out.witness_vu = a;
  }

  out.ideals_u_le_v = true;
  out.ideals_v_le_u = true;
  for (int k = 1; k <= m_samples; ++k) {
    Rational t = t_max * Rational(k, m_samples);
    MonomialIdeal iu = multiplier_ideal(u, t);
    MonomialIdeal iv = multiplier_ideal(v, t);
    // sigma(u,.) <= sigma(v,.) corresponds to I(t v) subset I(t u).
    if (!iu.contains_ideal(iv)) out.ideals_u_le_v = false;
    if (!iv.contains_ideal(iu)) out.ideals_v_le_u = false;
  }
  out.agree = out.sigma_u_le_v == out.ideals_u_le_v && out.sigma_v_le_u == out.ideals_v_le_u;
  return out;
}

DivisionVerdict divides(const Exponent& f, const Exponent& g) {
  if (!f.is_integral() || !g.is_integral()) throw_validation("divides expects integer exponents");
  check_same_dim(f.dim(), g.dim(), "divides");
  DivisionVerdict out;
  out.componentwise = f.dominates(g);

  // Valuative route: sum_j (f_j - g_j) x_j >= 0 on the direction simplex,
  // decided on its vertices.
  const int n = f.dim();
  int bad_axis = -1;
  out.valuative = true;
  for (int j = 0; j < n; ++j) {
    if (f[j] < g[j]) {
      out.valuative = false;
      bad_axis = j;
      break;
    }
  }
  if (bad_axis >= 0 && n >= 2) {
    // Concentrate the direction near axis bad_axis: x_j = 1/M off-axis.
    for (long M = n; M <= (1L << 40); M *= 2) {
      RationalVec x(static_cast<std::size_t>(n), Rational(1, M));
      x[static_cast<std::size_t>(bad_axis)] = Rational(1) - Rational(n - 1, M);
      if (x[static_cast<std::size_t>(bad_axis)].sign() <= 0) continue;
      Rational s;
      for (int j = 0; j < n; ++j) s += (f[j] - g[j]) * x[static_cast<std::size_t>(j)];
      if (s.sign() < 0) {
        RationalVec a(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j)] = Rational(1) / x[static_cast<std::size_t>(j)];
        out.witness_a = a;
        break;
      }
    }
  } else if (bad_axis >= 0 && n == 1) {
    out.witness_a = RationalVec{Rational(1)};
  }
  if (out.componentwise != out.valuative)
    throw Error(ErrorKind::verification, "divides: criteria disagree");
  return out;
}

Rational openness_witness(const Exponent& g, const ToricWeight& phi, const Rational& t) {
  if (t.sign() <= 0) throw_validation("openness_witness needs t > 0");
  if (!multiplier_membership(g, phi, t))
    throw_domain("openness_witness: monomial is not in the ideal at t");
  Rational c = monomial_threshold(g, weight_polyhedron_vertices(phi));
  // c > t strictly; the midpoint ratio keeps membership at p*t.
  Rational p = (Rational(1) + c / t) / 2;
  return p;
}

}  // namespace plurival
