#include "plurival/toric_weight.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plurival/errors.hpp"
#include "plurival/lp.hpp"

namespace plurival {

ToricWeight::ToricWeight(std::vector<Exponent> pieces, Rational scale) : scale_(std::move(scale)) {
  if (pieces.empty()) throw_validation("toric weight needs a nonempty piece set");
  dim_ = pieces[0].dim();
  for (const Exponent& p : pieces) check_same_dim(dim_, p.dim(), "toric weight");
  if (scale_.sign() <= 0) throw_validation("toric weight scale must be positive");
  pieces_ = reduce_convex(std::move(pieces));
}

ToricWeight ToricWeight::zero(int dim) { return ToricWeight({Exponent::zero(dim)}); }

ToricWeight ToricWeight::monomial(const Exponent& beta, Rational scale) {
  return ToricWeight({beta}, std::move(scale));
}

Rational ToricWeight::value_log(const RationalVec& u) const {
  if (static_cast<int>(u.size()) != dim_) throw_validation("value_log: dimension mismatch");
  Rational m = dot(pieces_[0].coords(), u);
  for (std::size_t i = 1; i < pieces_.size(); ++i) m = min(m, dot(pieces_[i].coords(), u));
  return -scale_ * m;
}

double ToricWeight::value_at_modulus(const std::vector<double>& abs_z) const {
  if (static_cast<int>(abs_z.size()) != dim_) throw_validation("value: dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (const Exponent& p : pieces_) {
    double v = 0;
    for (int j = 0; j < dim_; ++j) v += p[j].to_double() * std::log(abs_z[static_cast<std::size_t>(j)]);
    best = std::max(best, v);
  }
  return scale_.to_double() * best;
}

std::vector<Exponent> ToricWeight::scaled_pieces() const {
  std::vector<Exponent> out;
  out.reserve(pieces_.size());
  for (const Exponent& p : pieces_) out.push_back(p.scaled(scale_));
  return out;
}

NewtonPolyhedron ToricWeight::newton() const { return NewtonPolyhedron(scaled_pieces()); }

ToricWeight ToricWeight::rescaled(const Rational& factor) const {
  return ToricWeight(pieces_, scale_ * factor);
}

bool ToricWeight::germ_leq(const ToricWeight& other) const {
  check_same_dim(dim_, other.dim_, "germ comparison");
  // this <= other + O(1)  <=>  N(other) contains N(this): enlarging the
  // polyhedron lowers min<.,u>, hence raises -scale*min.
  return other.newton().contains_polyhedron(newton());
}

bool ToricWeight::germ_eq(const ToricWeight& other) const {
  return germ_leq(other) && other.germ_leq(*this);
}

std::string ToricWeight::str() const {
  std::string s = scale_.str() + "*logmax{";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) s += ",";
    s += pieces_[i].str();
  }
  return s + "}";
}

ToricWeight weight_sum(const ToricWeight& w1, const ToricWeight& w2) {
  check_same_dim(w1.dim(), w2.dim(), "weight_sum");
  std::vector<Exponent> pieces;
  for (const Exponent& b1 : w1.scaled_pieces())
    for (const Exponent& b2 : w2.scaled_pieces()) pieces.push_back(b1 + b2);
  return ToricWeight(std::move(pieces));
}

ToricWeight weight_max(const ToricWeight& w1, const ToricWeight& w2) {
  check_same_dim(w1.dim(), w2.dim(), "weight_max");
  std::vector<Exponent> pieces = w1.scaled_pieces();
  for (const Exponent& b : w2.scaled_pieces()) pieces.push_back(b);
  return ToricWeight(std::move(pieces));
}

DiagonalZhouWeight::DiagonalZhouWeight(RationalVec a, Rational scale)
    : a_(std::move(a)), scale_(std::move(scale)) {
  if (a_.empty() || static_cast<int>(a_.size()) > kMaxDim)
    throw_validation("diagonal weight dimension must be in [1," + std::to_string(kMaxDim) + "]");
  if (scale_.sign() <= 0) throw_validation("diagonal weight scale must be positive");
  Rational s;
  for (const Rational& aj : a_) {
    if (aj.sign() <= 0) throw_validation("diagonal weight entries must be positive");
    s += Rational(1) / aj;
  }
  if (s != Rational(1))
    throw_validation("diagonal weight requires sum_j 1/a_j = 1 (got " + s.str() + ")");
}

RationalVec DiagonalZhouWeight::normalize_direction(const RationalVec& a) {
  if (a.empty()) throw_validation("normalize_direction: empty vector");
  Rational s;
  for (const Rational& aj : a) {
    if (aj.sign() <= 0) throw_validation("normalize_direction: entries must be positive");
    s += Rational(1) / aj;
  }
  RationalVec out = a;
  for (Rational& aj : out) aj *= s;
  return out;
}

RationalVec DiagonalZhouWeight::reciprocal() const {
  RationalVec x(a_.size());
  for (std::size_t j = 0; j < a_.size(); ++j) x[j] = Rational(1) / a_[j];
  return x;
}

ToricWeight DiagonalZhouWeight::to_toric() const {
  std::vector<Exponent> pieces;
  const int n = dim();
  for (int j = 0; j < n; ++j) pieces.push_back(Exponent::unit(n, j).scaled(a_[static_cast<std::size_t>(j)]));
  return ToricWeight(std::move(pieces), scale_);
}

Rational relative_type(const ToricWeight& psi, const DiagonalZhouWeight& phi) {
  check_same_dim(psi.dim(), phi.dim(), "relative_type");
  RationalVec x = phi.reciprocal();
  const auto& pieces = psi.pieces();
  Rational m = dot(pieces[0].coords(), x);
  for (std::size_t i = 1; i < pieces.size(); ++i) m = min(m, dot(pieces[i].coords(), x));
  return psi.scale() / phi.scale() * m;
}

Rational relative_type_toric(const ToricWeight& psi, const ToricWeight& phi) {
  check_same_dim(psi.dim(), phi.dim(), "relative_type");
  if (phi.is_zero_weight()) throw_validation("relative_type: zero denominator weight");
  // sup{b : psi <= b*phi + O(1)} = min over pieces beta of psi of
  //   min <beta,u> over {u >= 0 : <gamma,u> >= 1 for all scaled pieces gamma of phi},
  // times scale(psi).
  const int n = psi.dim();
  std::vector<Exponent> phi_pieces = phi.scaled_pieces();
  Rational best;
  bool first = true;
  for (const Exponent& beta : psi.scaled_pieces()) {
    LinearProgram lp;
    lp.objective = beta.coords();
    for (const Exponent& gamma : phi_pieces) lp.constraints.emplace_back(gamma.coords(), Rational(1));
    LpResult r = lp_solve(lp);
    if (r.status != LpStatus::optimal) throw_validation("relative_type: unexpected LP status");
    (void)n;
    if (first || r.value < best) {
      best = r.value;
      first = false;
    }
  }
  return best;
}

Rational lelong_number(const ToricWeight& psi) {
  Rational m = psi.pieces()[0].coordinate_sum();
  for (const Exponent& p : psi.pieces()) m = min(m, p.coordinate_sum());
  return psi.scale() * m;
}

Rational kiselman_number(const ToricWeight& psi, const RationalVec& a) {
  if (static_cast<int>(a.size()) != psi.dim()) throw_validation("kiselman: dimension mismatch");
  for (const Rational& aj : a)
    if (aj.sign() <= 0) throw_validation("kiselman: direction entries must be positive");
  Rational m = dot(psi.pieces()[0].coords(), a);
  for (const Exponent& p : psi.pieces()) m = min(m, dot(p.coords(), a));
  return psi.scale() * m;
}

Rational reference_margin_min(const Exponent& gamma, const ToricWeight& phi0) {
  check_same_dim(gamma.dim(), phi0.dim(), "reference margin");
  const int n = gamma.dim();
  const std::size_t un = static_cast<std::size_t>(n);
  // Variables (u_1..u_n, m); minimize <gamma+1,u> - c0*m subject to
  // m <= <beta0,u> for all pieces, sum u = 1, everything nonnegative.
  LinearProgram lp;
  lp.objective.assign(un + 1, Rational(0));
  for (std::size_t j = 0; j < un; ++j) lp.objective[j] = gamma[static_cast<int>(j)] + 1;
  lp.objective[un] = -phi0.scale();
  for (const Exponent& b : phi0.pieces()) {
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
  if (r.status != LpStatus::optimal) throw_validation("reference margin: unexpected LP status");
  return r.value;
}

ReferencePair::ReferencePair(Exponent f0, ToricWeight phi0)
    : f0_(std::move(f0)), phi0_(std::move(phi0)) {
  check_same_dim(f0_.dim(), phi0_.dim(), "reference pair");
  if (!f0_.is_integral()) throw_validation("reference numerator must be a monomial (integer exponent)");
  if (reference_margin_min(f0_, phi0_).sign() <= 0)
    throw_validation("reference pair |f0|^2 e^{-2 phi0} is not integrable near the origin");
}

ReferencePair ReferencePair::trivial(int dim) {
  return ReferencePair(Exponent::zero(dim), ToricWeight::zero(dim));
}

GermOrder compare_zhou(const DiagonalZhouWeight& phi1, const DiagonalZhouWeight& phi2) {
  check_same_dim(phi1.dim(), phi2.dim(), "compare_zhou");
  if (phi1.scale() != Rational(1) || phi2.scale() != Rational(1))
    throw_validation("compare_zhou expects scale-1 weights");
  // sigma(log z_j, Phi_a) = 1/a_j; phi1 <= phi2 + O(1) iff every monomial type
  // of phi1 is <= the one of phi2.
  RationalVec x1 = phi1.reciprocal(), x2 = phi2.reciprocal();
  bool le = true, ge = true;
  for (std::size_t j = 0; j < x1.size(); ++j) {
    if (x1[j] > x2[j]) le = false;
    if (x1[j] < x2[j]) ge = false;
  }
  if (le && ge) return GermOrder::equal;
  if (le) return GermOrder::less;
  if (ge) return GermOrder::greater;
  return GermOrder::incomparable;
}

const char* germ_order_name(GermOrder o) {
  switch (o) {
    case GermOrder::equal: return "equal";
    case GermOrder::less: return "less";
    case GermOrder::greater: return "greater";
    case GermOrder::incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace plurival
