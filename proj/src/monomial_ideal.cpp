#include "plurival/monomial_ideal.hpp"

#include <algorithm>

#include "plurival/errors.hpp"

namespace plurival {

MonomialIdeal::MonomialIdeal(std::vector<Exponent> generators) {
  if (generators.empty()) throw_validation("monomial ideal needs a nonempty generator set");
  dim_ = generators[0].dim();
  for (const Exponent& g : generators) {
    check_same_dim(dim_, g.dim(), "monomial ideal");
    if (!g.is_integral()) throw_validation("monomial ideal generators must be integral");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const Exponent& g : generators) {
    bool dominated = false;
    for (const Exponent& h : generators)
      if (g != h && g.dominates(h)) {
        dominated = true;
        break;
      }
    if (!dominated) generators_.push_back(g);
  }
}

bool MonomialIdeal::is_trivial() const {
  return generators_.size() == 1 && generators_[0].is_zero();
}

bool MonomialIdeal::contains(const Exponent& g) const {
  check_same_dim(dim_, g.dim(), "ideal membership");
  for (const Exponent& a : generators_)
    if (g.dominates(a)) return true;
  return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
  for (const Exponent& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

}  // namespace plurival
