#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "witt/errors.hpp"

namespace witt {

// One finite-field factor F_{p^e} in polynomial basis.  The modulus is
// stored constant-first: modulus[i] is the coefficient of x^i, it has
// degree e and must be monic and irreducible over Z/p.
struct FieldFactor {
  unsigned e = 1;
  std::vector<unsigned> modulus;  // size e+1, modulus[e] == 1

  bool operator==(const FieldFactor&) const = default;
};

class AlgebraDescriptor;
using AlgebraPtr = std::shared_ptr<const AlgebraDescriptor>;

// A concrete perfect F_p-algebra: a non-empty finite product of finite
// fields F_{p^e}.  Construction verifies that p is prime and that every
// modulus is monic of the stated degree and irreducible over Z/p.
class AlgebraDescriptor {
public:
  static AlgebraPtr make(unsigned p, std::vector<FieldFactor> factors);
  static AlgebraPtr make_field(unsigned p, unsigned e);  // built-in default modulus
  static AlgebraPtr make_field(unsigned p, unsigned e, std::vector<unsigned> modulus);

  unsigned characteristic() const { return p_; }
  const std::vector<FieldFactor>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  bool is_prime_field() const { return factors_.size() == 1 && factors_[0].e == 1; }
  bool is_single_field() const { return factors_.size() == 1; }
  mpz_class cardinality() const;

  // Descriptor syntax: "p=5,e=2,mod=[2,1,1]"; product factors joined by ';'.
  std::string to_string() const;

  bool operator==(const AlgebraDescriptor& other) const {
    return p_ == other.p_ && factors_ == other.factors_;
  }

private:
  AlgebraDescriptor(unsigned p, std::vector<FieldFactor> factors)
      : p_(p), factors_(std::move(factors)) {}

  unsigned p_;
  std::vector<FieldFactor> factors_;
};

// True iff the two descriptors denote the same algebra (pointer or value).
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

bool is_prime_number(unsigned p);

// Built-in default irreducible modulus, constant-first, for p in
// {2,3,5,7,11,13} and e <= 4: the lexicographically smallest monic
// irreducible of degree e over Z/p (leading coefficient compared first).
// Throws BoundExceeded outside the table range.
std::vector<unsigned> default_modulus(unsigned p, unsigned e);

// Element of a perfect algebra, held as one coefficient vector of length
// e per factor, coefficients reduced to [0, p).  Immutable value type.
class AlgebraElement {
public:
  static AlgebraElement zero(const AlgebraPtr& desc);
  static AlgebraElement one(const AlgebraPtr& desc);
  static AlgebraElement from_coefficients(AlgebraPtr desc,
                                          std::vector<std::vector<unsigned>> coeffs);
  // Prime-field style constant c*1, valid in any algebra.
  static AlgebraElement constant(const AlgebraPtr& desc, unsigned c);

  const AlgebraPtr& algebra() const { return desc_; }
  const std::vector<std::vector<unsigned>>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  AlgebraElement operator+(const AlgebraElement& rhs) const;
  AlgebraElement operator-(const AlgebraElement& rhs) const;
  AlgebraElement operator*(const AlgebraElement& rhs) const;
  AlgebraElement operator-() const;

  // Sum of k copies of *this (the Z-module action; k may be any integer).
  AlgebraElement scaled(const mpz_class& k) const;
  // k-th power, k >= 0 (0 gives 1).
  AlgebraElement pow(const mpz_class& k) const;

  bool operator==(const AlgebraElement& rhs) const;
  bool operator!=(const AlgebraElement& rhs) const { return !(*this == rhs); }
  // Canonical total order: lexicographic across factor coefficient vectors.
  // Used as the monoid-algebra map key; operands must share an algebra.
  bool operator<(const AlgebraElement& rhs) const;

  // Field-element text syntax: decimal for prime fields, "[c0,c1,...]" for
  // extensions, "(elem; elem; ...)" for products.
  std::string to_string() const;

private:
  AlgebraElement(AlgebraPtr desc, std::vector<std::vector<unsigned>> coeffs)
      : desc_(std::move(desc)), coeffs_(std::move(coeffs)) {}

  AlgebraPtr desc_;
  std::vector<std::vector<unsigned>> coeffs_;
};

AlgebraElement frobenius(const AlgebraElement& a);      // a^p
AlgebraElement frobenius_inv(const AlgebraElement& a);  // unique p-th root
// phi^k for any integer k (negative k uses the inverse).
AlgebraElement frobenius_pow(const AlgebraElement& a, long k);

// All elements of R in canonical order.  Throws BoundExceeded when
// |R| > bound (default 2^16).
std::vector<AlgebraElement> enumerate_algebra(const AlgebraPtr& desc,
                                              std::size_t bound = std::size_t{1} << 16);

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a);

}  // namespace witt
