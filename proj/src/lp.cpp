#include "plurival/lp.hpp"

#include <cstddef>
#include <string>

#include "plurival/errors.hpp"

namespace plurival {

namespace {

constexpr std::size_t kMaxVars = 512;
constexpr std::size_t kMaxRows = 512;

// Dense tableau simplex over exact rationals.
//
// Internal equality form: for constraint i (row a_i, bound b_i) we store
//   sign_i * (a_i . x) - sign_i * s_i = sign_i * b_i,  s_i >= 0,
// with sign_i chosen so the stored right-hand side is nonnegative. Artificial
// variables seed the phase-1 basis. Column layout is fixed for the whole
// solve: [0,n) structural, [n,n+m0) surplus, [n+m0,n+2*m0) artificial.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) {
    n_ = lp.objective.size();
    m0_ = lp.constraints.size();
    if (n_ == 0) throw_validation("lp: empty objective");
    if (n_ > kMaxVars || m0_ > kMaxRows) throw_capacity("lp: dimension overflow");
    for (const auto& [row, bound] : lp.constraints) {
      (void)bound;
      if (row.size() != n_) throw_validation("lp: constraint dimension mismatch");
    }
    m_ = m0_;
    ncols_ = n_ + 2 * m0_;
    tab_.assign(m_, RationalVec(ncols_ + 1));
    sign_.assign(m_, 1);
    basis_.assign(m_, 0);
    row_index_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& [row, bound] = lp.constraints[i];
      int s = bound.sign() < 0 ? -1 : 1;
      sign_[i] = s;
      Rational f(s);
      for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = f * row[j];
      tab_[i][surplus(i)] = -f;
      tab_[i][artificial(i)] = 1;
      tab_[i][rhs()] = f * bound;
      basis_[i] = artificial(i);
      row_index_[i] = i;
    }
  }

  LpResult solve() {
    LpResult res;
    if (!phase1(res)) return res;  // infeasible, certificate filled
    strip_artificials();
    return phase2();
  }

 private:
  std::size_t surplus(std::size_t orig_row) const { return n_ + orig_row; }
  std::size_t artificial(std::size_t orig_row) const { return n_ + m0_ + orig_row; }
  std::size_t rhs() const { return ncols_; }
  std::size_t real_cols() const { return n_ + m0_; }

  void pivot(std::size_t prow, std::size_t pcol) {
    RationalVec& pr = tab_[prow];
    Rational inv = Rational(1) / pr[pcol];
    for (Rational& v : pr) v *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == prow) continue;
      Rational f = tab_[i][pcol];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j <= ncols_; ++j) tab_[i][j] -= f * pr[j];
    }
    Rational f = cost_[pcol];
    if (!f.is_zero())
      for (std::size_t j = 0; j <= ncols_; ++j) cost_[j] -= f * pr[j];
    basis_[prow] = pcol;
  }

  // Bland: entering column = lowest index with negative reduced cost; leaving
  // row = lowest basic index among minimum-ratio ties. Returns false when the
  // entering column proves unboundedness (stored in unbounded_col_).
  bool iterate(std::size_t active_cols) {
    for (;;) {
      std::size_t enter = active_cols;
      for (std::size_t j = 0; j < active_cols; ++j)
        if (cost_[j].sign() < 0) {
          enter = j;
          break;
        }
      if (enter == active_cols) return true;  // optimal
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (tab_[i][enter].sign() <= 0) continue;
        Rational ratio = tab_[i][rhs()] / tab_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) {
        unbounded_col_ = enter;
        return false;
      }
      pivot(leave, enter);
    }
  }

  bool phase1(LpResult& res) {
    cost_.assign(ncols_ + 1, Rational(0));
    for (std::size_t i = 0; i < m0_; ++i) cost_[artificial(i)] = 1;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j <= ncols_; ++j) cost_[j] -= tab_[i][j];
    if (!iterate(ncols_)) throw_validation("lp: internal error (phase 1 unbounded)");
    Rational w = -cost_[rhs()];
    if (w.sign() > 0) {
      res.status = LpStatus::infeasible;
      res.farkas.assign(m0_, Rational(0));
      for (std::size_t i = 0; i < m0_; ++i)
        res.farkas[i] = (Rational(1) - cost_[artificial(i)]) * Rational(sign_[i]);
      verify_farkas(res.farkas, w);
      return false;
    }
    return true;
  }

  void verify_farkas(const RationalVec& y, const Rational& w) const {
    for (std::size_t i = 0; i < m0_; ++i)
      if (y[i].sign() < 0) throw_validation("lp: internal error (farkas sign)");
    for (std::size_t j = 0; j < n_; ++j) {
      Rational s;
      for (std::size_t i = 0; i < m0_; ++i) s += y[i] * lp_.constraints[i].first[j];
      if (s.sign() > 0) throw_validation("lp: internal error (farkas column)");
    }
    Rational yb;
    for (std::size_t i = 0; i < m0_; ++i) yb += y[i] * lp_.constraints[i].second;
    if (yb != w || yb.sign() <= 0) throw_validation("lp: internal error (farkas value)");
  }

  // Pivot leftover zero-value artificials out of the basis; drop rows that are
  // identically zero on the non-artificial columns (redundant constraints).
  void strip_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < real_cols()) {
        ++i;
        continue;
      }
      std::size_t pcol = real_cols();
      for (std::size_t j = 0; j < real_cols(); ++j)
        if (!tab_[i][j].is_zero()) {
          pcol = j;
          break;
        }
      if (pcol == real_cols()) {
        tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        row_index_.erase(row_index_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
        continue;
      }
      pivot(i, pcol);
      ++i;
    }
  }

  LpResult phase2() {
    bool maximize = lp_.sense == LpSense::maximize;
    cost_.assign(ncols_ + 1, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = maximize ? -lp_.objective[j] : lp_.objective[j];
    for (std::size_t i = 0; i < m_; ++i) {
      Rational cb = cost_[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= ncols_; ++j) cost_[j] -= cb * tab_[i][j];
    }

    LpResult res;
    if (!iterate(real_cols())) {
      res.status = LpStatus::unbounded;
      res.ray = recession_ray();
      verify_ray(res.ray, maximize);
      return res;
    }
    res.status = LpStatus::optimal;
    res.point.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) res.point[basis_[i]] = tab_[i][rhs()];
    Rational z = -cost_[rhs()];
    res.value = maximize ? -z : z;
    res.duals.assign(m0_, Rational(0));
    for (std::size_t i = 0; i < m0_; ++i) {
      Rational rc = cost_[surplus(i)];
      res.duals[i] = maximize ? -rc : rc;
    }
    verify_optimal(res, maximize);
    return res;
  }

  // Exact re-check of primal feasibility, dual feasibility and strong duality
  // against the original data before an optimal result leaves the solver.
  void verify_optimal(const LpResult& res, bool maximize) const {
    for (std::size_t j = 0; j < n_; ++j)
      if (res.point[j].sign() < 0) throw_validation("lp: internal error (primal sign)");
    Rational yb;
    for (std::size_t i = 0; i < m0_; ++i) {
      const auto& [row, bound] = lp_.constraints[i];
      if (dot(row, res.point) < bound) throw_validation("lp: internal error (primal feasibility)");
      Rational y = res.duals[i];
      if ((maximize ? -y : y).sign() < 0) throw_validation("lp: internal error (dual sign)");
      yb += y * bound;
    }
    for (std::size_t j = 0; j < n_; ++j) {
      Rational col;
      for (std::size_t i = 0; i < m0_; ++i) col += res.duals[i] * lp_.constraints[i].first[j];
      Rational slack = lp_.objective[j] - col;
      if ((maximize ? -slack : slack).sign() < 0)
        throw_validation("lp: internal error (dual feasibility)");
    }
    if (dot(lp_.objective, res.point) != res.value || yb != res.value)
      throw_validation("lp: internal error (strong duality)");
  }

  RationalVec recession_ray() const {
    RationalVec d(n_, Rational(0));
    if (unbounded_col_ < n_) d[unbounded_col_] = 1;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) d[basis_[i]] = -tab_[i][unbounded_col_];
    return d;
  }

  void verify_ray(const RationalVec& d, bool maximize) const {
    Rational cd;
    bool nonzero = false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (d[j].sign() < 0) throw_validation("lp: internal error (ray sign)");
      if (!d[j].is_zero()) nonzero = true;
      cd += lp_.objective[j] * d[j];
    }
    for (const auto& [row, bound] : lp_.constraints) {
      (void)bound;
      if (dot(row, d).sign() < 0) throw_validation("lp: internal error (ray feasibility)");
    }
    if (!nonzero || (maximize ? cd.sign() <= 0 : cd.sign() >= 0))
      throw_validation("lp: internal error (ray objective)");
  }

  const LinearProgram& lp_;
  std::size_t n_ = 0;    // structural variables
  std::size_t m0_ = 0;   // original constraint count (fixes column layout)
  std::size_t m_ = 0;    // live tableau rows
  std::size_t ncols_ = 0;
  std::vector<RationalVec> tab_;
  RationalVec cost_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> row_index_;
  std::size_t unbounded_col_ = 0;
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
  Simplex s(lp);
  return s.solve();
}

}  // namespace plurival
