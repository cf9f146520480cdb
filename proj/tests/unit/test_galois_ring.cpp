#include <doctest.h>

#include <cstdint>
#include <random>

#include "witt/galois_ring.hpp"
#include "witt/sampling.hpp"

using namespace witt;

namespace {

AlgebraPtr f2() { return AlgebraDescriptor::make_field(2, 1); }
AlgebraPtr f3() { return AlgebraDescriptor::make_field(3, 1); }
AlgebraPtr f4() { return AlgebraDescriptor::make_field(2, 2); }

// Independent prime-field oracle over plain integers: Teichmueller lift in
// Z/p^n by iterated p-th powers, then digit extraction.  Shares nothing
// with the GaloisRing implementation.
std::int64_t tau_int(std::int64_t r, std::int64_t p, unsigned n) {
  std::int64_t pn = 1;
  for (unsigned i = 0; i < n; ++i) pn *= p;
  std::int64_t t = ((r % pn) + pn) % pn;
  for (unsigned i = 1; i < n; ++i) {
    std::int64_t power = 1;
    for (std::int64_t j = 0; j < p; ++j) power = power * t % pn;
    t = power;
  }
  return t;
}

std::vector<std::int64_t> digits_int(std::int64_t value, std::int64_t p, unsigned n) {
  std::int64_t m = 1;  // p^(n-k), the modulus the residual lives under
  for (unsigned i = 0; i < n; ++i) m *= p;
  std::int64_t y = ((value % m) + m) % m;
  std::vector<std::int64_t> out;
  for (unsigned k = 0; k < n; ++k) {
    const std::int64_t d = y % p;
    out.push_back(d);
    y = (((y - tau_int(d, p, n - k)) % m) + m) % m;  // congruent to 0 mod p
    y /= p;
    m /= p;
  }
  return out;
}

WittVector witt_from_ints(const AlgebraPtr& desc, const std::vector<std::int64_t>& digits) {
  std::vector<AlgebraElement> components;
  for (std::int64_t d : digits)
    components.push_back(AlgebraElement::constant(desc, static_cast<unsigned>(d)));
  return WittVector(desc, std::move(components));
}

}  // namespace

TEST_CASE("galois ring arithmetic") {
  // Z/4: 1 + 1 = 2
  const GaloisRing z4(f2(), 2);
  CHECK(z4.add(z4.one(), z4.one()) == z4.from_coefficients({{2}}));

  // Z/9: 5 * 2 = 1
  const GaloisRing z9(f3(), 2);
  CHECK(z9.mul(z9.from_coefficients({{5}}), z9.from_coefficients({{2}})) ==
        z9.from_coefficients({{1}}));

  // GR(4, 2) with f = x^2+x+1: x * x = 3 + 3x
  const GaloisRing gr42(f4(), 2);
  const auto x = gr42.from_coefficients({{0, 1}});
  CHECK(gr42.mul(x, x) == gr42.from_coefficients({{3, 3}}));
  CHECK(gr42.mul(x, x).to_string() == "[3,3]");

  CHECK_THROWS_AS(z4.add(z4.one(), gr42.one()), DescriptorMismatch);
  CHECK_THROWS_AS(z4.add(gr42.one(), gr42.one()), DescriptorMismatch);
  CHECK_THROWS_AS(z4.to_witt(gr42.one()), DescriptorMismatch);
}

TEST_CASE("teichmuller lifts") {
  for (unsigned n : {1u, 2u, 3u, 4u}) {
    const GaloisRing ring(f3(), n);
    CHECK(ring.teichmuller(AlgebraElement::one(f3())) == ring.one());
    CHECK(ring.teichmuller(AlgebraElement::zero(f3())) == ring.zero());
  }
  // tau(2) = 8 in Z/9 and 26 in Z/27
  const GaloisRing z9(f3(), 2);
  CHECK(z9.teichmuller(AlgebraElement::constant(f3(), 2)) == z9.from_coefficients({{8}}));
  const GaloisRing z27(f3(), 3);
  CHECK(z27.teichmuller(AlgebraElement::constant(f3(), 2)) == z27.from_coefficients({{26}}));

  // agrees with the independent integer oracle on prime fields
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto desc = AlgebraDescriptor::make_field(p, 1);
    for (unsigned n : {1u, 2u, 3u, 4u}) {
      const GaloisRing ring(desc, n);
      for (unsigned r = 0; r < p; ++r) {
        const auto expected = mpz_class(static_cast<unsigned long>(tau_int(r, p, n)));
        CHECK(ring.teichmuller(AlgebraElement::constant(desc, r)).coefficients()[0][0] ==
              expected);
      }
    }
  }
}

TEST_CASE("witt coordinates") {
  const GaloisRing z4(f2(), 2);
  CHECK(z4.to_witt(z4.from_coefficients({{3}})) ==
        witt_from_ints(f2(), {1, 1}));  // 3 = 1 + 2*1
  CHECK(z4.from_witt(witt_from_ints(f2(), {1, 1})) == z4.from_coefficients({{3}}));

  const GaloisRing z9(f3(), 2);
  CHECK(z9.to_witt(z9.from_coefficients({{5}})) == witt_from_ints(f3(), {2, 2}));
  CHECK(z9.from_witt(witt_from_ints(f3(), {0, 1})) == z9.from_coefficients({{3}}));

  // tau(r) has coordinates (r, 0, ..., 0)
  for (const auto& desc : {f3(), f4()}) {
    const GaloisRing ring(desc, 3);
    for (const auto& r : enumerate_algebra(desc)) {
      const WittVector w = ring.to_witt(ring.teichmuller(r));
      CHECK(w.component(0) == r);
      CHECK(w.component(1).is_zero());
      CHECK(w.component(2).is_zero());
    }
  }
}

TEST_CASE("canonical map against the integer oracle") {
  std::mt19937_64 rng(42);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto desc = AlgebraDescriptor::make_field(p, 1);
    for (unsigned n : {1u, 2u, 3u, 4u}) {
      const GaloisRing ring(desc, n);
      std::uniform_int_distribution<std::int64_t> coeff(-100, 100);
      std::uniform_int_distribution<unsigned> residue(0, p - 1);
      for (int i = 0; i < 200; ++i) {
        MonoidAlgebraElement x = MonoidAlgebraElement::zero(desc);
        std::int64_t integer_value = 0;
        const unsigned terms = static_cast<unsigned>(rng() % 4);
        for (unsigned t = 0; t < terms; ++t) {
          const unsigned r = residue(rng);
          const std::int64_t k = coeff(rng);
          x += MonoidAlgebraElement::symbol(AlgebraElement::constant(desc, r)).scaled(k);
          integer_value += k * tau_int(r, p, n);
        }
        CHECK(ring.canonical_map(x) == witt_from_ints(desc, digits_int(integer_value, p, n)));
      }
    }
  }

  // spot values: x = [r] and 3[1] at p = 2, n = 3
  const GaloisRing z8(f2(), 3);
  const auto one = AlgebraElement::one(f2());
  CHECK(z8.canonical_map(MonoidAlgebraElement::symbol(one).scaled(3)) ==
        witt_from_ints(f2(), {1, 1, 0}));
  for (const auto& r : enumerate_algebra(f4())) {
    const GaloisRing ring(f4(), 3);
    const WittVector w = ring.canonical_map(MonoidAlgebraElement::symbol(r));
    CHECK(w.component(0) == r);
    CHECK(w.component(1).is_zero());
  }
}

TEST_CASE("witt ring operations") {
  const GaloisRing z4(f2(), 2);
  const WittVector w10 = witt_from_ints(f2(), {1, 0});
  const WittVector w01 = witt_from_ints(f2(), {0, 1});
  const WittVector w11 = witt_from_ints(f2(), {1, 1});
  const WittVector zero = WittVector::zero(f2(), 2);

  CHECK(z4.witt_add(w10, zero) == w10);
  CHECK(z4.witt_mul(w11, w10) == w11);  // (1,0,...) is the identity
  CHECK(z4.witt_add(w10, w10) == w01);  // 1 + 1 = 2 in Z/4
  CHECK(z4.witt_add(w10, w11) == zero);  // 1 + 3 = 0 in Z/4
  CHECK(z4.witt_mul(w01, w01) == zero);  // 2 * 2 = 0 in Z/4
  CHECK(z4.witt_add(w11, z4.witt_neg(w11)) == zero);

  // mutually inverse bijections, exhaustively for p^(e n) <= 4096
  std::mt19937_64 rng(5);
  for (const auto& desc : {f2(), f3(), f4()}) {
    for (unsigned n : {2u, 3u}) {
      const GaloisRing ring(desc, n);
      const auto elements = enumerate_algebra(desc);
      std::vector<std::size_t> index(n, 0);
      while (true) {
        std::vector<AlgebraElement> components;
        for (unsigned k = 0; k < n; ++k) components.push_back(elements[index[k]]);
        const WittVector w(desc, std::move(components));
        CHECK(ring.to_witt(ring.from_witt(w)) == w);
        unsigned k = 0;
        for (; k < n; ++k) {
          if (++index[k] < elements.size()) break;
          index[k] = 0;
        }
        if (k == n) break;
      }
    }
  }
}

TEST_CASE("product algebras work factorwise") {
  const auto prod = AlgebraDescriptor::make(
      2, {FieldFactor{1, default_modulus(2, 1)}, FieldFactor{2, default_modulus(2, 2)}});
  const GaloisRing ring(prod, 3);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_monoid_element(prod, rng);
    const auto y = random_monoid_element(prod, rng);
    CHECK(ring.canonical_map(x + y) ==
          ring.witt_add(ring.canonical_map(x), ring.canonical_map(y)));
    CHECK(ring.canonical_map(x * y) ==
          ring.witt_mul(ring.canonical_map(x), ring.canonical_map(y)));
  }
}
