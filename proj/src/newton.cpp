#include "plurival/newton.hpp"

#include <algorithm>
#include <set>

#include "plurival/errors.hpp"
#include "plurival/lp.hpp"

namespace plurival {

namespace {

// Solves for a one-dimensional nullspace of the (n-1) x n system given by
// rows; returns false when the rank is deficient. The result is scaled to
// coprime integers with a deterministic orientation.
bool nullspace_vector(std::vector<RationalVec> rows, int n, RationalVec& out) {
  std::size_t rank = 0;
  std::vector<int> pivot_col;
  for (std::size_t r = 0; r < rows.size() && static_cast<int>(rank) < n; ++r) {
    // eliminate
    RationalVec& row = rows[r];
    for (std::size_t k = 0; k < rank; ++k) {
      const Rational& f = row[static_cast<std::size_t>(pivot_col[k])];
      if (f.is_zero()) continue;
      Rational factor = f;
      for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] -= factor * rows[k][static_cast<std::size_t>(j)];
    }
    int pc = -1;
    for (int j = 0; j < n; ++j)
      if (!row[static_cast<std::size_t>(j)].is_zero()) {
        pc = j;
        break;
      }
    if (pc < 0) continue;
    Rational inv = Rational(1) / row[static_cast<std::size_t>(pc)];
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] *= inv;
    if (rank != r) rows[rank] = row;
    pivot_col.push_back(pc);
    ++rank;
  }
  if (static_cast<int>(rank) != n - 1) return false;
  // Free column = the one not pivotal.
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int pc : pivot_col) is_pivot[static_cast<std::size_t>(pc)] = true;
  int free_col = -1;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) {
      free_col = j;
      break;
    }
  out.assign(static_cast<std::size_t>(n), Rational(0));
  out[static_cast<std::size_t>(free_col)] = 1;
  for (std::size_t k = rank; k-- > 0;) {
    // back substitution on the reduced rows
    Rational s = rows[k][static_cast<std::size_t>(free_col)];
    for (std::size_t k2 = k + 1; k2 < rank; ++k2)
      s += rows[k][static_cast<std::size_t>(pivot_col[k2])] * out[static_cast<std::size_t>(pivot_col[k2])];
    out[static_cast<std::size_t>(pivot_col[k])] = -s;
  }
  // Clear denominators, divide by gcd, orient.
  BigInt lcm = 1;
  for (const Rational& v : out) lcm = boost::multiprecision::lcm(lcm, v.denominator());
  BigInt g = 0;
  std::vector<BigInt> ints;
  ints.reserve(out.size());
  for (const Rational& v : out) {
    BigInt z = v.numerator() * (lcm / v.denominator());
    ints.push_back(z);
    g = boost::multiprecision::gcd(g, abs(z));
  }
  if (g == 0) return false;
  int first_sign = 0;
  for (const BigInt& z : ints)
    if (z != 0) {
      first_sign = z > 0 ? 1 : -1;
      break;
    }
  for (std::size_t j = 0; j < out.size(); ++j) {
    BigInt q = ints[j] / g;
    out[j] = Rational(first_sign > 0 ? q : BigInt(-q));
  }
  return true;
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(std::vector<Exponent> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw_validation("newton polyhedron needs at least one generator");
  dim_ = generators_[0].dim();
  for (const Exponent& g : generators_) check_same_dim(dim_, g.dim(), "newton polyhedron");
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

bool NewtonPolyhedron::contains_lp(const Exponent& beta) const {
  check_same_dim(dim_, beta.dim(), "newton_contains");
  // lambda >= 0, sum lambda = 1, sum lambda_i alpha_i <= beta.
  std::size_t k = generators_.size();
  LinearProgram lp;
  lp.objective.assign(k, Rational(0));
  RationalVec ones(k, Rational(1));
  lp.constraints.emplace_back(ones, Rational(1));
  RationalVec neg_ones(k, Rational(-1));
  lp.constraints.emplace_back(neg_ones, Rational(-1));
  for (int j = 0; j < dim_; ++j) {
    RationalVec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = -generators_[i][j];
    lp.constraints.emplace_back(std::move(row), -beta[j]);
  }
  return lp_solve(lp).status == LpStatus::optimal;
}

bool NewtonPolyhedron::contains_dual(const Exponent& beta) const {
  check_same_dim(dim_, beta.dim(), "newton_contains");
  for (const auto& [w, h] : facets())
    if (dot(w.coords(), beta.coords()) < h) return false;
  return true;
}

bool NewtonPolyhedron::contains_polyhedron(const NewtonPolyhedron& other) const {
  check_same_dim(dim_, other.dim_, "newton containment");
  for (const Exponent& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

const std::vector<std::pair<Exponent, Rational>>& NewtonPolyhedron::facets() const {
  std::call_once(facets_once_, [this] { compute_facets(); });
  return facets_;
}

void NewtonPolyhedron::compute_facets() const {
  const int n = dim_;
  const std::size_t k = generators_.size();
  std::set<RationalVec> seen;
  std::vector<std::pair<Exponent, Rational>> facets;

  if (n == 1) {
    Rational h = generators_[0][0];
    for (const Exponent& g : generators_) h = min(h, g[0]);
    facets.emplace_back(Exponent(RationalVec{Rational(1)}), h);
    facets_ = std::move(facets);
    return;
  }

  // Every facet normal w >= 0 is orthogonal to g-1 generator differences and
  // r axis directions with g + r = n; enumerate those subsets.
  std::vector<std::size_t> gen_subset;
  std::vector<int> axis_subset;
  std::uint64_t combos = 0;
  const std::uint64_t combo_cap = 2'000'000;

  auto try_candidate = [&](const std::vector<std::size_t>& gens, const std::vector<int>& axes) {
    if (++combos > combo_cap) throw_capacity("newton facets: generator count too large");
    std::vector<RationalVec> rows;
    for (std::size_t i = 1; i < gens.size(); ++i) {
      RationalVec row(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = generators_[gens[i]][j] - generators_[gens[0]][j];
      rows.push_back(std::move(row));
    }
    for (int a : axes) {
      RationalVec row(static_cast<std::size_t>(n));
      row[static_cast<std::size_t>(a)] = 1;
      rows.push_back(std::move(row));
    }
    RationalVec w;
    if (!nullspace_vector(std::move(rows), n, w)) return;
    bool nonneg = true;
    for (const Rational& x : w)
      if (x.sign() < 0) {
        nonneg = false;
        break;
      }
    if (!nonneg) return;
    if (!seen.insert(w).second) return;
    Rational h = dot(w, generators_[0].coords());
    for (std::size_t i = 1; i < k; ++i) h = min(h, dot(w, generators_[i].coords()));
    facets.emplace_back(Exponent(w), h);
  };

  // Iterate subsets: g generators out of k, r = n - g axes out of n.
  std::vector<std::size_t> gsel;
  std::vector<int> asel;
  auto rec_axes = [&](auto&& self, int start, int need) -> void {
    if (need == 0) {
      try_candidate(gsel, asel);
      return;
    }
    for (int a = start; a <= n - need; ++a) {
      asel.push_back(a);
      self(self, a + 1, need - 1);
      asel.pop_back();
    }
  };
  auto rec_gens = [&](auto&& self, std::size_t start, int need) -> void {
    if (need == 0) {
      rec_axes(rec_axes, 0, n - static_cast<int>(gsel.size()));
      return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(need) <= k; ++i) {
      gsel.push_back(i);
      self(self, i + 1, need - 1);
      gsel.pop_back();
    }
  };
  for (int g = 1; g <= n && static_cast<std::size_t>(g) <= k; ++g) rec_gens(rec_gens, 0, g);

  facets_ = std::move(facets);
}

std::vector<Exponent> reduce_convex(std::vector<Exponent> points) {
  if (points.empty()) return points;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() == 1) return points;
  const int n = points[0].dim();

  // Componentwise (Pareto) pruning first.
  std::vector<Exponent> pareto;
  for (const Exponent& p : points) {
    bool dominated = false;
    for (const Exponent& q : points)
      if (&p != &q && p.dominates(q) && p != q) {
        dominated = true;
        break;
      }
    if (!dominated) pareto.push_back(p);
  }
  if (pareto.size() <= 2 && n != 2) {
    if (pareto.size() == 2) {
      // Mutual convex domination impossible for a Pareto pair.
      return pareto;
    }
    return pareto;
  }

  if (n == 2) {
    // Lower-left convex chain; the orthant recession makes everything on or
    // above a chord redundant.
    std::sort(pareto.begin(), pareto.end(), [](const Exponent& a, const Exponent& b) {
      if (a[0] != b[0]) return a[0] < b[0];
      return a[1] < b[1];
    });
    std::vector<Exponent> chain;
    for (const Exponent& p : pareto) {
      while (chain.size() >= 2) {
        const Exponent& p1 = chain[chain.size() - 2];
        const Exponent& p2 = chain[chain.size() - 1];
        // cross(p - p1, p2 - p1) >= 0 <=> p2 on or above chord p1->p.
        Rational cr = (p[0] - p1[0]) * (p2[1] - p1[1]) - (p[1] - p1[1]) * (p2[0] - p1[0]);
        if (cr.sign() >= 0)
          chain.pop_back();
        else
          break;
      }
      chain.push_back(p);
    }
    return chain;
  }

  // General dimension: drop any point inside the hull of the others.
  std::vector<Exponent> kept;
  for (std::size_t i = 0; i < pareto.size(); ++i) {
    std::vector<Exponent> others;
    others.reserve(pareto.size() - 1);
    for (std::size_t j = 0; j < pareto.size(); ++j)
      if (j != i) others.push_back(pareto[j]);
    if (!NewtonPolyhedron(others).contains_lp(pareto[i])) kept.push_back(pareto[i]);
  }
  return kept;
}

}  // namespace plurival
