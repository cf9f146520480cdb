#pragma once

#include "witt/galois_ring.hpp"
#include "witt/monoid_algebra.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

// Canonical representative of a coordinate tuple in ZR:
//   beta_n(r_0, ..., r_{n-1}) = sum_k p^k [phi^(-k)(r_k)]
// (returned as an element of ZR, not reduced mod I^n).
MonoidAlgebraElement beta_n(const WittVector& w);

// Coordinate formulas for the normal form of ZR/I^n.
//
// alpha_2(x) = (pi(x), pi(delta(x))), valid at every prime.
WittVector alpha_2(const MonoidAlgebraElement& x);

// alpha_3(x) = (pi(x), pi(delta(x)),
//               pi(delta(delta(x - [pi(x)]) + (-1)^p [pi(delta(x))]))),
// valid at every prime; the (-1)^p sign unifies p = 2 and p >= 3.
WittVector alpha_3(const MonoidAlgebraElement& x);

// alpha_3 with the third-component sign forced to +1 or -1.  Exists so the
// sign-necessity sweep (and the check suite's negative control) can compare
// the wrong-sign variant against the oracle.
WittVector alpha_3_with_sign(const MonoidAlgebraElement& x, int sign);

// The general recursion, valid for 2 <= n <= p:
//   r_0 = pi(x),  a_k = delta(a_{k-1} - [r_{k-1}]),  r_k = pi(a_k).
// Throws UnsupportedTruncation when n > p (the hypothesis p >= n fails).
WittVector alpha_recursive(const MonoidAlgebraElement& x, unsigned n);

// True when an explicit coordinate formula exists for (p, n):
// n <= 3 at every prime, otherwise n <= p.
bool alpha_has_formula(unsigned p, unsigned n);

// Dispatcher: n=1 -> (pi(x)); n=2 -> alpha_2; n=3 -> alpha_3;
// 4 <= n <= p -> alpha_recursive; otherwise UnsupportedTruncation.
WittVector alpha(const MonoidAlgebraElement& x, unsigned n);

// x == y mod I^n, decided through the oracle's canonical map (valid for all
// p and n, independent of the formula range).
bool congruent_mod_ideal_pow(const MonoidAlgebraElement& x, const MonoidAlgebraElement& y,
                             unsigned n);
bool in_ideal_pow(const MonoidAlgebraElement& x, unsigned n);

// Quotient-ring arithmetic on normal forms: lift along beta_n, operate in
// ZR, renormalize (formula when available, oracle otherwise).  Coincides
// with the oracle's witt_add / witt_mul.
WittVector quotient_add(const WittVector& a, const WittVector& b);
WittVector quotient_mul(const WittVector& a, const WittVector& b);

}  // namespace witt
