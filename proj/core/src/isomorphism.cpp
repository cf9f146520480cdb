#include "witt/isomorphism.hpp"

namespace witt {

MonoidAlgebraElement beta_n(const WittVector& w) {
  MonoidAlgebraElement acc = MonoidAlgebraElement::zero(w.algebra());
  mpz_class pk = 1;
  for (unsigned k = 0; k < w.level(); ++k) {
    const AlgebraElement pre = frobenius_pow(w.component(k), -static_cast<long>(k));
    acc += MonoidAlgebraElement::symbol(pre).scaled(pk);
    pk *= w.algebra()->characteristic();
  }
  return acc;
}

WittVector alpha_2(const MonoidAlgebraElement& x) {
  std::vector<AlgebraElement> components;
  components.push_back(augmentation_pi(x));
  components.push_back(augmentation_pi(delta(x)));
  return WittVector(x.algebra(), std::move(components));
}

WittVector alpha_3_with_sign(const MonoidAlgebraElement& x, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const AlgebraElement r0 = augmentation_pi(x);
  const MonoidAlgebraElement d1 = delta(x);
  const AlgebraElement r1 = augmentation_pi(d1);

  MonoidAlgebraElement inner = delta(x - MonoidAlgebraElement::symbol(r0));
  if (sign > 0)
    inner += MonoidAlgebraElement::symbol(r1);
  else
    inner -= MonoidAlgebraElement::symbol(r1);
  const AlgebraElement r2 = augmentation_pi(delta(inner));
  return WittVector(x.algebra(), {r0, r1, r2});
}

WittVector alpha_3(const MonoidAlgebraElement& x) {
  const int sign = x.algebra()->characteristic() == 2 ? 1 : -1;  // (-1)^p
  return alpha_3_with_sign(x, sign);
}

WittVector alpha_recursive(const MonoidAlgebraElement& x, unsigned n) {
  const unsigned p = x.algebra()->characteristic();
  if (n < 2) throw std::invalid_argument("recursion needs n >= 2");
  if (n > p) throw UnsupportedTruncation(p, n);
  std::vector<AlgebraElement> components;
  components.reserve(n);
  MonoidAlgebraElement acc = x;
  components.push_back(augmentation_pi(acc));
  for (unsigned k = 1; k < n; ++k) {
    acc = delta(acc - MonoidAlgebraElement::symbol(components.back()));
    components.push_back(augmentation_pi(acc));
  }
  return WittVector(x.algebra(), std::move(components));
}

bool alpha_has_formula(unsigned p, unsigned n) { return n >= 1 && (n <= 3 || n <= p); }

WittVector alpha(const MonoidAlgebraElement& x, unsigned n) {
  const unsigned p = x.algebra()->characteristic();
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  if (n == 1) return WittVector(x.algebra(), {augmentation_pi(x)});
  if (n == 2) return alpha_2(x);
  if (n == 3) return alpha_3(x);
  if (n <= p) return alpha_recursive(x, n);
  throw UnsupportedTruncation(p, n);
}

bool congruent_mod_ideal_pow(const MonoidAlgebraElement& x, const MonoidAlgebraElement& y,
                             unsigned n) {
  return canonical_map(x - y, n).is_zero();
}

bool in_ideal_pow(const MonoidAlgebraElement& x, unsigned n) {
  return canonical_map(x, n).is_zero();
}

namespace {
WittVector renormalize(const MonoidAlgebraElement& z, unsigned n) {
  if (alpha_has_formula(z.algebra()->characteristic(), n)) return alpha(z, n);
  return canonical_map(z, n);
}

void require_compatible(const WittVector& a, const WittVector& b) {
  if (!same_algebra(a.algebra(), b.algebra()) || a.level() != b.level())
    throw DescriptorMismatch("witt vectors of different algebras or levels");
}
}  // namespace

WittVector quotient_add(const WittVector& a, const WittVector& b) {
  require_compatible(a, b);
  return renormalize(beta_n(a) + beta_n(b), a.level());
}

WittVector quotient_mul(const WittVector& a, const WittVector& b) {
  require_compatible(a, b);
  return renormalize(beta_n(a) * beta_n(b), a.level());
}

}  // namespace witt
