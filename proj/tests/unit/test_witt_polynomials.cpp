#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "witt/galois_ring.hpp"
#include "witt/parser.hpp"
#include "witt/sampling.hpp"
#include "witt/witt_polynomials.hpp"

using namespace witt;

namespace {

SparsePolynomial poly_of(unsigned arity,
                         std::vector<std::pair<std::vector<unsigned>, mpq_class>> terms) {
  SparsePolynomial out(arity);
  for (auto& [exponents, coeff] : terms) out.add_term(std::move(exponents), coeff);
  return out;
}

}  // namespace

TEST_CASE("ghost polynomials") {
  // w_0 = X0
  CHECK(ghost_polynomial(2, 0, 0, 3) == SparsePolynomial::variable(6, 0));
  // w_1 = X0^p + p X1
  CHECK(ghost_polynomial(3, 1, 0, 2) ==
        poly_of(4, {{{3, 0, 0, 0}, 1}, {{0, 1, 0, 0}, 3}}));
  // p = 2: w_2 = X0^4 + 2 X1^2 + 4 X2
  CHECK(ghost_polynomial(2, 2, 0, 3) ==
        poly_of(6, {{{4, 0, 0, 0, 0, 0}, 1}, {{0, 2, 0, 0, 0, 0}, 2}, {{0, 0, 1, 0, 0, 0}, 4}}));
  // y family lives in the second half of the variables
  CHECK(ghost_polynomial(2, 0, 1, 2) == SparsePolynomial::variable(4, 2));
}

TEST_CASE("first witt polynomials") {
  const WittPolynomialSet set2 = build_witt_polynomials(2, 2);
  CHECK(set2.sum[0] == poly_of(4, {{{1, 0, 0, 0}, 1}, {{0, 0, 1, 0}, 1}}));  // X0 + Y0
  CHECK(set2.product[0] == poly_of(4, {{{1, 0, 1, 0}, 1}}));                 // X0 Y0
  // p = 2: S_1 = X1 + Y1 - X0 Y0 over Z (solve (X0^2+2X1)+(Y0^2+2Y1) =
  // (X0+Y0)^2 + 2 S_1; the sign only disappears mod 2)
  CHECK(set2.sum[1] ==
        poly_of(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 0, 1}, 1}, {{1, 0, 1, 0}, -1}}));

  // p = 3: S_1 = X1 + Y1 - X0^2 Y0 - X0 Y0^2
  const WittPolynomialSet set3 = build_witt_polynomials(3, 2);
  CHECK(set3.sum[1] == poly_of(4, {{{0, 1, 0, 0}, 1},
                                   {{0, 0, 0, 1}, 1},
                                   {{2, 0, 1, 0}, -1},
                                   {{1, 0, 2, 0}, -1}}));
}

TEST_CASE("integrality and ghost identities within default bounds") {
  for (unsigned p : {2u, 3u}) {
    for (unsigned n : {1u, 2u, 3u}) {
      const WittPolynomialSet set = build_witt_polynomials(p, n);
      for (unsigned i = 0; i < n; ++i) {
        CHECK(set.sum[i].is_integral());
        CHECK(set.product[i].is_integral());
        const SparsePolynomial gx = ghost_polynomial(p, i, 0, n);
        const SparsePolynomial gy = ghost_polynomial(p, i, 1, n);
        CHECK(ghost_of(p, i, set.sum) == gx + gy);
        CHECK(ghost_of(p, i, set.product) == gx * gy);
      }
    }
  }
  CHECK(default_generation_limit(2) == 4);
  CHECK(default_generation_limit(3) == 4);
  CHECK(default_generation_limit(5) == 3);
  CHECK(default_generation_limit(7) == 2);
  CHECK(default_generation_limit(13) == 1);
  CHECK_THROWS_AS(build_witt_polynomials(13, 4), BoundExceeded);
  CHECK_NOTHROW(build_witt_polynomials(13, 1));
}

TEST_CASE("evaluation mod p") {
  const auto f2 = AlgebraDescriptor::make_field(2, 1);
  const auto one = AlgebraElement::one(f2);
  const auto zero = AlgebraElement::zero(f2);
  const WittPolynomialSet set = build_witt_polynomials(2, 2);

  // S_0(r, s) = r + s
  CHECK(evaluate_mod_p(set.sum[0], {one, zero, one, zero}) == one + one);
  CHECK(evaluate_mod_p(set.sum[0], {one, zero, zero, zero}) == one);
  // S_1 at X = (1,0), Y = (1,0) gives the carry digit 1
  CHECK(evaluate_mod_p(set.sum[1], {one, zero, one, zero}) == one);
  // P_0 at X0 = 0 vanishes
  CHECK(evaluate_mod_p(set.product[0], {zero, one, one, one}).is_zero());
}

TEST_CASE("polynomial backend agrees with the galois ring") {
  const auto f2 = AlgebraDescriptor::make_field(2, 1);
  for (unsigned n : {1u, 2u, 3u}) {
    const WittPolynomialSet set = build_witt_polynomials(2, n);
    const GaloisRing ring(f2, n);
    const auto elements = enumerate_algebra(f2);
    std::vector<WittVector> all;
    std::vector<std::size_t> index(n, 0);
    while (true) {
      std::vector<AlgebraElement> components;
      for (unsigned k = 0; k < n; ++k) components.push_back(elements[index[k]]);
      all.emplace_back(f2, std::move(components));
      unsigned k = 0;
      for (; k < n; ++k) {
        if (++index[k] < elements.size()) break;
        index[k] = 0;
      }
      if (k == n) break;
    }
    for (const auto& a : all)
      for (const auto& b : all) {
        CHECK(poly_backend_add(set, a, b) == ring.witt_add(a, b));
        CHECK(poly_backend_mul(set, a, b) == ring.witt_mul(a, b));
      }
  }

  const auto f9 = AlgebraDescriptor::make_field(3, 2);
  const WittPolynomialSet set = build_witt_polynomials(3, 2);
  const GaloisRing ring(f9, 2);
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    const WittVector a(f9, {random_element(f9, rng), random_element(f9, rng)});
    const WittVector b(f9, {random_element(f9, rng), random_element(f9, rng)});
    CHECK(poly_backend_add(set, a, b) == ring.witt_add(a, b));
    CHECK(poly_backend_mul(set, a, b) == ring.witt_mul(a, b));
    CHECK(poly_backend_add(set, a, WittVector::zero(f9, 2)) == a);
  }
}

TEST_CASE("exchange format") {
  const WittPolynomialSet set = build_witt_polynomials(2, 2);
  const std::string text = to_exchange_format(set);
  CHECK(text.find("witt-poly v1 p=2 n=2\n") == 0);
  CHECK(text.find("S 0: 1 x0 ; 1 y0\n") != std::string::npos);
  CHECK(text.find("S 1: 1 x1 ; 1 y1 ; -1 x0 y0\n") != std::string::npos);
  CHECK(text.find("P 0: 1 x0 y0\n") != std::string::npos);

  // bit-exact round trip
  CHECK(parse_exchange_format(text) == set);
  CHECK(to_exchange_format(parse_exchange_format(text)) == text);

  const WittPolynomialSet set3 = build_witt_polynomials(3, 3);
  const std::string text3 = to_exchange_format(set3);
  CHECK(parse_exchange_format(text3) == set3);
  CHECK(to_exchange_format(parse_exchange_format(text3)) == text3);

  CHECK_THROWS_AS(parse_exchange_format("garbage"), ParseError);
  CHECK_THROWS_AS(parse_exchange_format("witt-poly v1 p=2 n=2\nS 1: 1 x1\n"), ParseError);
}

TEST_CASE("disk cache") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "witt-poly-cache-test";
  fs::remove_all(dir);

  const WittPolynomialSet built = load_or_build(2, 3, dir.string());
  const fs::path file = dir / "witt-poly-v1-p2-n3.txt";
  CHECK(fs::exists(file));
  const WittPolynomialSet reloaded = load_or_build(2, 3, dir.string());
  CHECK(reloaded == built);

  // corrupt cache entries are rebuilt
  {
    std::ofstream out(file);
    out << "not a witt-poly file";
  }
  const WittPolynomialSet rebuilt = load_or_build(2, 3, dir.string());
  CHECK(rebuilt == built);
  CHECK(load_or_build(2, 3, "") == built);  // empty dir disables caching
  fs::remove_all(dir);
}
