#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "witt/monoid_algebra.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

// Element of Z[x]/(p^n, f), one coefficient vector per factor, coefficients
// reduced to [0, p^n).  Plain value; all arithmetic goes through GaloisRing.
class GaloisRingElement {
public:
  const AlgebraPtr& algebra() const { return desc_; }
  const std::vector<std::vector<mpz_class>>& coefficients() const { return coeffs_; }
  unsigned level() const { return level_; }

  bool operator==(const GaloisRingElement& rhs) const {
    return level_ == rhs.level_ && same_algebra(desc_, rhs.desc_) && coeffs_ == rhs.coeffs_;
  }
  bool operator!=(const GaloisRingElement& rhs) const { return !(*this == rhs); }

  std::string to_string() const;  // same shape as field elements, mod p^n

private:
  friend class GaloisRing;
  GaloisRingElement(AlgebraPtr desc, unsigned level,
                    std::vector<std::vector<mpz_class>> coeffs)
      : desc_(std::move(desc)), level_(level), coeffs_(std::move(coeffs)) {}

  AlgebraPtr desc_;
  unsigned level_;
  std::vector<std::vector<mpz_class>> coeffs_;
};

// Classical model of W_n(R): the Galois ring Z[x]/(p^n, f) per field factor,
// with the field modulus lifted verbatim to Z/p^n.  Provides Teichmueller
// lifts, digit extraction to and from Witt coordinates, the canonical map
// ZR -> W_n(R), and the induced Witt ring operations.  This is the ground
// truth the explicit coordinate formulas are checked against.
class GaloisRing {
public:
  GaloisRing(AlgebraPtr desc, unsigned level);

  const AlgebraPtr& algebra() const { return desc_; }
  unsigned level() const { return level_; }
  const mpz_class& modulus() const { return pn_; }  // p^n

  GaloisRingElement zero() const;
  GaloisRingElement one() const;
  GaloisRingElement from_coefficients(std::vector<std::vector<mpz_class>> coeffs) const;
  // Coefficientwise lift of a residue element (a lift of r, not Teichmueller).
  GaloisRingElement lift(const AlgebraElement& r) const;
  // Reduction mod p back to R.
  AlgebraElement residue(const GaloisRingElement& y) const;

  GaloisRingElement add(const GaloisRingElement& a, const GaloisRingElement& b) const;
  GaloisRingElement sub(const GaloisRingElement& a, const GaloisRingElement& b) const;
  GaloisRingElement mul(const GaloisRingElement& a, const GaloisRingElement& b) const;
  GaloisRingElement neg(const GaloisRingElement& a) const;
  GaloisRingElement scalar_mul(const mpz_class& k, const GaloisRingElement& a) const;

  // The unique multiplicative lift t of r with t^(p^e) = t per factor,
  // computed by iterating t -> t^(p^e) from the coefficientwise lift
  // (n-1 iterations; each gains at least one p-adic digit).  Memoized.
  GaloisRingElement teichmuller(const AlgebraElement& r) const;

  // Digit extraction: y = sum p^k tau(d_k) with r_k = phi^k(d_k), read off
  // least significant first.  Inverse of from_witt.
  WittVector to_witt(const GaloisRingElement& y) const;
  // sum p^k tau(phi^(-k)(r_k)).
  GaloisRingElement from_witt(const WittVector& w) const;

  // The induced map ZR -> W_n(R): [r] -> tau(r), extended additively.
  WittVector canonical_map(const MonoidAlgebraElement& x) const;

  WittVector witt_add(const WittVector& a, const WittVector& b) const;
  WittVector witt_mul(const WittVector& a, const WittVector& b) const;
  WittVector witt_neg(const WittVector& a) const;

private:
  void require_mine(const GaloisRingElement& a) const;
  std::vector<mpz_class> factor_mul(const std::vector<mpz_class>& a,
                                    const std::vector<mpz_class>& b, std::size_t f) const;
  GaloisRingElement pow_qth(const GaloisRingElement& a) const;  // a^(p^e) per factor

  AlgebraPtr desc_;
  unsigned level_;
  mpz_class pn_;
  // tau cache; writes are idempotent, guarded for concurrent sweeps
  mutable std::mutex cache_mutex_;
  mutable std::map<AlgebraElement, GaloisRingElement> tau_cache_;
};

// One-shot convenience: canonical_map through a temporary ring.
WittVector canonical_map(const MonoidAlgebraElement& x, unsigned level);

}  // namespace witt
