#include <doctest.h>

#include <random>

#include "witt/monoid_algebra.hpp"
#include "witt/sampling.hpp"

using namespace witt;

namespace {

AlgebraPtr f2() { return AlgebraDescriptor::make_field(2, 1); }
AlgebraPtr f3() { return AlgebraDescriptor::make_field(3, 1); }
AlgebraPtr f4() { return AlgebraDescriptor::make_field(2, 2); }

MonoidAlgebraElement sym(const AlgebraElement& r) { return MonoidAlgebraElement::symbol(r); }

AlgebraElement gen(const AlgebraPtr& desc) {  // the polynomial generator g
  std::vector<std::vector<unsigned>> coeffs{{0, 1}};
  return AlgebraElement::from_coefficients(desc, std::move(coeffs));
}

}  // namespace

TEST_CASE("module structure of ZR") {
  const auto F2 = f2();
  const auto one = AlgebraElement::one(F2);
  const auto zero = AlgebraElement::zero(F2);

  CHECK(sym(one) + sym(one) == sym(one).scaled(2));
  CHECK((sym(gen(f4())) - sym(gen(f4()))).is_zero());
  const auto three_each = (sym(one) - sym(zero)).scaled(3);
  CHECK(three_each.coefficient(one) == 3);
  CHECK(three_each.coefficient(zero) == -3);
  CHECK(three_each.support_size() == 2);

  // [0_R] is a nonzero element of ZR, distinct from the additive zero
  CHECK_FALSE(sym(zero).is_zero());
  CHECK(sym(zero) != MonoidAlgebraElement::zero(F2));
  CHECK(MonoidAlgebraElement::zero(F2).is_zero());
  CHECK(MonoidAlgebraElement::constant(F2, 0).is_zero());
}

TEST_CASE("convolution product") {
  const auto F4 = f4();
  const auto g = gen(F4);
  const auto one = AlgebraElement::one(F4);
  const auto g_plus_1 = g + one;

  for (const auto& r : enumerate_algebra(F4))
    for (const auto& s : enumerate_algebra(F4)) CHECK(sym(r) * sym(s) == sym(r * s));

  const auto zero = AlgebraElement::zero(F4);
  CHECK(sym(zero) * sym(zero) == sym(zero));

  // (2[1] + [g]) * [g] = 2[g] + [g+1] in ZF_4
  const auto left = sym(one).scaled(2) + sym(g);
  CHECK(left * sym(g) == sym(g).scaled(2) + sym(g_plus_1));
}

TEST_CASE("augmentation") {
  const auto F4 = f4();
  const auto g = gen(F4);
  const auto one = AlgebraElement::one(F4);

  // pi(3[1] - [g]) = 3*1 - g = 1 + g in characteristic 2
  CHECK(augmentation_pi(sym(one).scaled(3) - sym(g)) == one + g);
  CHECK(augmentation_pi(sym(AlgebraElement::zero(F4))).is_zero());
  for (const auto& r : enumerate_algebra(F4))
    for (const auto& s : enumerate_algebra(F4))
      CHECK(augmentation_pi(sym(r) + sym(s) - sym(r + s)).is_zero());
}

TEST_CASE("phi shift") {
  const auto F4 = f4();
  const auto g = gen(F4);
  const auto one = AlgebraElement::one(F4);
  CHECK(phi_shift(sym(one).scaled(3)) == sym(one).scaled(3));
  CHECK(phi_shift(sym(g)) == sym(g + one));  // g^2 = g+1 in F_4

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_monoid_element(F4, rng);
    const auto y = random_monoid_element(F4, rng);
    CHECK(phi_shift(x + y) == phi_shift(x) + phi_shift(y));
    CHECK(phi_shift(x * y) == phi_shift(x) * phi_shift(y));
    CHECK(augmentation_pi(phi_shift(x)) == frobenius(augmentation_pi(x)));
  }
}

TEST_CASE("integer powers") {
  const auto F3 = f3();
  const auto one = AlgebraElement::one(F3);
  const auto two = AlgebraElement::constant(F3, 2);

  for (const auto& r : enumerate_algebra(F3)) CHECK(pow(sym(r), 3) == sym(r.pow(3)));
  CHECK(pow(sym(one).scaled(2), 2) == sym(one).scaled(4));
  // (p[a])^p = p^p [a^p] at p = 3, a = 2
  CHECK(pow(sym(two).scaled(3), 3) == sym(two.pow(3)).scaled(27));
  CHECK(pow(sym(two), 0) == sym(one));
}

TEST_CASE("delta on symbols and scalar multiples") {
  const auto F2 = f2();
  const auto F3 = f3();
  const auto one2 = AlgebraElement::one(F2);

  for (const auto& r : enumerate_algebra(f4())) CHECK(delta(sym(r)).is_zero());
  for (const auto& r : enumerate_algebra(F3)) CHECK(delta(sym(r)).is_zero());

  // p = 2: delta(2[1]) = -[1], delta(3[1]) = -3[1]
  CHECK(delta(sym(one2).scaled(2)) == -sym(one2));
  CHECK(delta(sym(one2).scaled(3)) == sym(one2).scaled(-3));

  // delta(p[a]) = [a^p] - p^(p-1) [a]^p
  for (unsigned p : {2u, 3u, 5u}) {
    const auto desc = AlgebraDescriptor::make_field(p, 1);
    mpz_class pp1;
    mpz_ui_pow_ui(pp1.get_mpz_t(), p, p - 1);
    for (const auto& a : enumerate_algebra(desc)) {
      const auto expected = sym(a.pow(p)) - pow(sym(a), p).scaled(pp1);
      CHECK(delta(sym(a).scaled(p)) == expected);
    }
  }
}

TEST_CASE("text form") {
  const auto F2 = f2();
  const auto one = AlgebraElement::one(F2);
  const auto zero = AlgebraElement::zero(F2);

  CHECK(MonoidAlgebraElement::zero(F2).to_string() == "0");
  CHECK(sym(zero).to_string() == "1*[0]");
  CHECK(delta(sym(one).scaled(2)).to_string() == "-1*[1]");
  CHECK((sym(one).scaled(3) - sym(zero)).to_string() == "-1*[0] + 3*[1]");
  CHECK(sym(gen(f4())).to_string() == "1*[[0,1]]");
}
