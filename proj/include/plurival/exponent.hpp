#ifndef PLURIVAL_EXPONENT_HPP
#define PLURIVAL_EXPONENT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "plurival/rational.hpp"

namespace plurival {

inline constexpr int kMaxDim = 16;

// Nonnegative rational exponent vector: a monomial z^alpha, or one linear
// piece of a tropical function.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(RationalVec coords);
  static Exponent zero(int dim);
  static Exponent unit(int dim, int axis);  // e_axis

  int dim() const { return static_cast<int>(coords_.size()); }
  const RationalVec& coords() const { return coords_; }
  const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_integral() const;

  // Componentwise comparison: *this >= other everywhere.
  bool dominates(const Exponent& other) const;

  Exponent operator+(const Exponent& o) const;
  Exponent scaled(const Rational& c) const;

  Rational coordinate_sum() const;

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }
  // Lexicographic; used only to keep piece sets in a canonical order.
  friend bool operator<(const Exponent& a, const Exponent& b);

  std::string str() const { return vec_str(coords_); }

 private:
  RationalVec coords_;
};

void check_same_dim(int a, int b, const char* what);

}  // namespace plurival

#endif  // PLURIVAL_EXPONENT_HPP
