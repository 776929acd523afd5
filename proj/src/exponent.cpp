#include "plurival/exponent.hpp"

#include <algorithm>

#include "plurival/errors.hpp"

namespace plurival {

Exponent::Exponent(RationalVec coords) : coords_(std::move(coords)) {
  if (coords_.empty() || coords_.size() > kMaxDim)
    throw_validation("exponent dimension must be in [1," + std::to_string(kMaxDim) + "]");
  for (const Rational& c : coords_)
    if (c.sign() < 0) throw_validation("exponent coordinates must be nonnegative");
}

Exponent Exponent::zero(int dim) { return Exponent(RationalVec(static_cast<std::size_t>(dim))); }

Exponent Exponent::unit(int dim, int axis) {
  RationalVec v(static_cast<std::size_t>(dim));
  v[static_cast<std::size_t>(axis)] = 1;
  return Exponent(std::move(v));
}

bool Exponent::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool Exponent::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_integer(); });
}

bool Exponent::dominates(const Exponent& other) const {
  check_same_dim(dim(), other.dim(), "dominates");
  for (int i = 0; i < dim(); ++i)
    if ((*this)[i] < other[i]) return false;
  return true;
}

Exponent Exponent::operator+(const Exponent& o) const {
  check_same_dim(dim(), o.dim(), "exponent sum");
  RationalVec v(coords_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.coords_[i];
  return Exponent(std::move(v));
}

Exponent Exponent::scaled(const Rational& c) const {
  if (c.sign() < 0) throw_validation("exponent scaling by negative factor");
  RationalVec v(coords_);
  for (Rational& x : v) x *= c;
  return Exponent(std::move(v));
}

Rational Exponent::coordinate_sum() const {
  Rational s;
  for (const Rational& c : coords_) s += c;
  return s;
}

bool operator<(const Exponent& a, const Exponent& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

void check_same_dim(int a, int b, const char* what) {
  if (a != b)
    throw_validation(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
}

}  // namespace plurival
