#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "witt/algebra.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

// Term order used everywhere (including the exchange format): total degree
// ascending, ties broken by the lexicographically greater exponent vector
// first; variables are ordered x0..x_{m-1}, y0..y_{m-1}.
struct PolyTermOrder {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients over the
// fixed variable family x0..x_{m-1}, y0..y_{m-1} (arity 2m).  Stored in
// normal form: no zero coefficients, rationals canonicalized by GMP.
class SparsePolynomial {
public:
  using TermMap = std::map<std::vector<unsigned>, mpq_class, PolyTermOrder>;

  explicit SparsePolynomial(unsigned arity) : arity_(arity) {}
  static SparsePolynomial constant(unsigned arity, const mpq_class& c);
  static SparsePolynomial variable(unsigned arity, unsigned index);

  unsigned arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // True when every coefficient has denominator 1.
  bool is_integral() const;
  unsigned total_degree() const;

  SparsePolynomial operator+(const SparsePolynomial& rhs) const;
  SparsePolynomial operator-(const SparsePolynomial& rhs) const;
  SparsePolynomial operator*(const SparsePolynomial& rhs) const;
  SparsePolynomial scaled(const mpq_class& c) const;
  SparsePolynomial pow(unsigned long k) const;

  bool operator==(const SparsePolynomial& rhs) const {
    return arity_ == rhs.arity_ && terms_ == rhs.terms_;
  }
  bool operator!=(const SparsePolynomial& rhs) const { return !(*this == rhs); }

  void add_term(std::vector<unsigned> exponents, const mpq_class& coeff);

private:
  unsigned arity_;
  TermMap terms_;
};

// Ghost component w_i = sum_{j<=i} p^j Z_j^(p^(i-j)) over variable family
// 0 (x) or 1 (y), with arity 2n.
SparsePolynomial ghost_polynomial(unsigned p, unsigned i, unsigned family, unsigned n);

// w_i with Z_j replaced by coords[j] (used to verify the ghost identities).
SparsePolynomial ghost_of(unsigned p, unsigned i, const std::vector<SparsePolynomial>& coords);

// The universal addition/multiplication polynomials S_0..S_{n-1} and
// P_0..P_{n-1} for the prime p, all coefficients verified integral.
struct WittPolynomialSet {
  unsigned p = 0;
  unsigned n = 0;
  std::vector<SparsePolynomial> sum;
  std::vector<SparsePolynomial> product;

  bool operator==(const WittPolynomialSet&) const = default;
};

// Default generation bounds; generation above them throws BoundExceeded
// unless a caller passes an explicit higher limit.
unsigned default_generation_limit(unsigned p);

// Solve the ghost recursion S_i = (w_i(X)+w_i(Y) - sum_{j<i} p^j S_j^(p^(i-j))) / p^i
// (and the product analogue) over the exact rationals.  Throws BoundExceeded
// when n exceeds the limit (0 means the default for p) and InternalError if
// any coefficient fails the integrality check.
WittPolynomialSet build_witt_polynomials(unsigned p, unsigned n, unsigned limit = 0);

// Exchange format: header "witt-poly v1 p=<p> n=<n>", then one polynomial
// per line, "S <i>: <coeff> <monomial> ; ...", S lines before P lines.
// Round trips bit-exactly.
std::string to_exchange_format(const WittPolynomialSet& set);
WittPolynomialSet parse_exchange_format(const std::string& text);

// Disk cache, content-addressed by (p, n, format version); empty cache_dir
// disables caching.  Cached sets load without a bound check; only fresh
// generation honors the limit.
WittPolynomialSet load_or_build(unsigned p, unsigned n, const std::string& cache_dir,
                                unsigned limit = 0);

// Reduce the (integral) coefficients mod p and evaluate in R; assignment is
// indexed like the variables (x0..x_{m-1}, y0..y_{m-1}).
AlgebraElement evaluate_mod_p(const SparsePolynomial& poly,
                              const std::vector<AlgebraElement>& assignment);

// Witt arithmetic through componentwise evaluation of S_i / P_i.
WittVector poly_backend_add(const WittPolynomialSet& set, const WittVector& a,
                            const WittVector& b);
WittVector poly_backend_mul(const WittPolynomialSet& set, const WittVector& a,
                            const WittVector& b);

}  // namespace witt
