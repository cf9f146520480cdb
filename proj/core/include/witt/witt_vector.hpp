#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "witt/algebra.hpp"

namespace witt {

// Length-n coordinate tuple (r_0, ..., r_{n-1}) over a perfect algebra.
// Doubles as the normal form of ZR/I^n: two elements of ZR are congruent
// mod I^n exactly when their coordinate tuples agree.
class WittVector {
public:
  WittVector(AlgebraPtr desc, std::vector<AlgebraElement> components);
  static WittVector zero(const AlgebraPtr& desc, unsigned n);

  const AlgebraPtr& algebra() const { return desc_; }
  unsigned level() const { return static_cast<unsigned>(components_.size()); }
  const AlgebraElement& component(unsigned k) const { return components_.at(k); }
  const std::vector<AlgebraElement>& components() const { return components_; }

  bool is_zero() const;
  WittVector truncated(unsigned m) const;  // first m components, 1 <= m <= n

  bool operator==(const WittVector& rhs) const;
  bool operator!=(const WittVector& rhs) const { return !(*this == rhs); }

  std::string to_string() const;       // "(r0, r1, ...)"
  std::string to_json_string() const;  // {"p":..,"n":..,"components":[...]}

private:
  AlgebraPtr desc_;
  std::vector<AlgebraElement> components_;
};

std::ostream& operator<<(std::ostream& os, const WittVector& w);

}  // namespace witt
