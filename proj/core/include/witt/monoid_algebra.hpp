#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>

#include "witt/algebra.hpp"

namespace witt {

// Element of the monoid algebra ZR: a finitely supported map from R
// (canonically ordered) to unbounded integer coefficients.  Stored in
// normal form: no zero coefficients.  Note the distinction between the
// additive zero of ZR (empty support, prints "0") and the basis symbol
// of the ring zero [0_R] (prints "1*[0]"), which is a nonzero element
// of ZR lying in every power of the augmentation ideal.
//
// Coefficients are unbounded from day one: iterated delta produces
// magnitudes of order C^(p^k), so fixed-width integers are forbidden here.
class MonoidAlgebraElement {
public:
  using TermMap = std::map<AlgebraElement, mpz_class>;

  static MonoidAlgebraElement zero(const AlgebraPtr& desc);
  static MonoidAlgebraElement symbol(const AlgebraElement& r);  // [r]
  static MonoidAlgebraElement constant(const AlgebraPtr& desc, const mpz_class& k);  // k*[1]
  // Takes ownership of a term map, dropping zero coefficients.
  static MonoidAlgebraElement from_terms(const AlgebraPtr& desc, TermMap terms);

  const AlgebraPtr& algebra() const { return desc_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  mpz_class coefficient(const AlgebraElement& r) const;

  MonoidAlgebraElement operator+(const MonoidAlgebraElement& rhs) const;
  MonoidAlgebraElement operator-(const MonoidAlgebraElement& rhs) const;
  MonoidAlgebraElement operator*(const MonoidAlgebraElement& rhs) const;
  MonoidAlgebraElement operator-() const;
  MonoidAlgebraElement& operator+=(const MonoidAlgebraElement& rhs);
  MonoidAlgebraElement& operator-=(const MonoidAlgebraElement& rhs);

  MonoidAlgebraElement scaled(const mpz_class& k) const;

  bool operator==(const MonoidAlgebraElement& rhs) const;
  bool operator!=(const MonoidAlgebraElement& rhs) const { return !(*this == rhs); }

  // Text form per the element grammar; parse(to_string(x)) == x.
  std::string to_string() const;

private:
  explicit MonoidAlgebraElement(AlgebraPtr desc) : desc_(std::move(desc)) {}
  void add_term(const AlgebraElement& key, const mpz_class& coeff);

  AlgebraPtr desc_;
  TermMap terms_;
};

inline MonoidAlgebraElement operator*(const mpz_class& k, const MonoidAlgebraElement& x) {
  return x.scaled(k);
}

// [r], the Teichmueller symbol of r.
MonoidAlgebraElement teichmuller_symbol(const AlgebraElement& r);

// sum n_r [r] -> sum n_r [r^p]; additive, multiplicative, bijective on ZR.
MonoidAlgebraElement phi_shift(const MonoidAlgebraElement& x);

// k-fold product, k >= 0 (0 gives [1]); binary exponentiation over the
// convolution product.
MonoidAlgebraElement pow(const MonoidAlgebraElement& x, unsigned long k);

// The augmentation pi: sum n_r [r] -> sum n_r * r evaluated in R.
AlgebraElement augmentation_pi(const MonoidAlgebraElement& x);

// The arithmetic derivation delta(x) = (phi(x) - x^p) / p.  Every
// coefficient of phi(x) - x^p is divisible by p; the division is checked
// term by term and an InternalError is raised if it ever fails (that
// would mean the implementation is broken, never the input).
MonoidAlgebraElement delta(const MonoidAlgebraElement& x);

std::ostream& operator<<(std::ostream& os, const MonoidAlgebraElement& x);

}  // namespace witt
