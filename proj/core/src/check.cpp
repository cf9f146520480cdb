#include "witt/check.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "witt/galois_ring.hpp"
#include "witt/isomorphism.hpp"
#include "witt/monoid_algebra.hpp"
#include "witt/parser.hpp"
#include "witt/sampling.hpp"
#include "witt/witt_polynomials.hpp"

namespace witt {
namespace {

struct Ctx {
  std::mt19937_64 rng;
  long samples;
  const CheckOptions& options;
  std::string counterexample;

  bool fail(const std::string& what) {
    counterexample = what;
    return false;
  }
};

struct Property {
  const char* name;
  long default_samples;
  bool (*fn)(Ctx&);
};

std::uint64_t fnv1a(const char* s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001b3ull;
  return h;
}

// --- algebra configurations ---------------------------------------------

AlgebraPtr field(unsigned p, unsigned e) { return AlgebraDescriptor::make_field(p, e); }

AlgebraPtr product_f2_f4() {
  return AlgebraDescriptor::make(
      2, {FieldFactor{1, default_modulus(2, 1)}, FieldFactor{2, default_modulus(2, 2)}});
}

std::string label(const AlgebraPtr& desc) { return desc->to_string(); }

// Greedy shrink of a failing element: drop terms and shrink coefficients
// while the predicate keeps failing.
MonoidAlgebraElement shrink_failing(
    MonoidAlgebraElement x, const std::function<bool(const MonoidAlgebraElement&)>& fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [key, coeff] : x.terms()) {
      MonoidAlgebraElement without = x - MonoidAlgebraElement::symbol(key).scaled(coeff);
      if (fails(without)) {
        x = std::move(without);
        changed = true;
        break;
      }
      for (const mpz_class& smaller : {mpz_class(coeff / 2), mpz_class(coeff - sgn(coeff))}) {
        if (smaller == coeff) continue;
        MonoidAlgebraElement variant =
            x + MonoidAlgebraElement::symbol(key).scaled(smaller - coeff);
        if (fails(variant)) {
          x = std::move(variant);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return x;
}

// --- perfect_algebra properties ------------------------------------------

bool prop_ring_axioms(Ctx& ctx) {
  for (const AlgebraPtr& desc :
       {field(2, 2), field(3, 2), product_f2_f4(), field(7, 1), field(13, 1)}) {
    const auto elements = enumerate_algebra(desc, 16);
    const AlgebraElement one = AlgebraElement::one(desc);
    const AlgebraElement zero = AlgebraElement::zero(desc);
    for (const auto& a : elements) {
      if (a + zero != a || a * one != a || (a + (-a)) != zero)
        return ctx.fail("identity/inverse failed at " + a.to_string() + " in " + label(desc));
      for (const auto& b : elements) {
        if (a + b != b + a || a * b != b * a)
          return ctx.fail("commutativity failed in " + label(desc));
        for (const auto& c : elements) {
          if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c) ||
              a * (b + c) != a * b + a * c)
            return ctx.fail("associativity/distributivity failed in " + label(desc));
        }
      }
    }
  }
  ctx.samples = 0;
  return true;
}

bool prop_frobenius_bijective(Ctx& ctx) {
  for (const AlgebraPtr& desc :
       {field(2, 2), field(2, 3), field(2, 4), field(3, 3), field(5, 2), field(7, 2),
        product_f2_f4()}) {
    for (const auto& a : enumerate_algebra(desc, 64))
      if (frobenius_inv(frobenius(a)) != a || frobenius(frobenius_inv(a)) != a)
        return ctx.fail("roundtrip failed at " + a.to_string() + " in " + label(desc));
  }
  const AlgebraPtr big = field(3, 4);  // |R| = 81, randomized
  for (long i = 0; i < ctx.samples; ++i) {
    const AlgebraElement a = random_element(big, ctx.rng);
    if (frobenius_inv(frobenius(a)) != a || frobenius(frobenius_inv(a)) != a)
      return ctx.fail("roundtrip failed at " + a.to_string() + " in " + label(big));
  }
  return true;
}

bool prop_frobenius_homomorphism(Ctx& ctx) {
  for (const AlgebraPtr& desc : {field(2, 3), field(3, 2), field(5, 2), product_f2_f4()}) {
    const auto elements = enumerate_algebra(desc, 64);
    for (const auto& a : elements)
      for (const auto& b : elements)
        if (frobenius(a + b) != frobenius(a) + frobenius(b) ||
            frobenius(a * b) != frobenius(a) * frobenius(b))
          return ctx.fail("failed at a=" + a.to_string() + " b=" + b.to_string() + " in " +
                          label(desc));
  }
  const AlgebraPtr big = field(3, 4);
  for (long i = 0; i < ctx.samples; ++i) {
    const AlgebraElement a = random_element(big, ctx.rng);
    const AlgebraElement b = random_element(big, ctx.rng);
    if (frobenius(a + b) != frobenius(a) + frobenius(b) ||
        frobenius(a * b) != frobenius(a) * frobenius(b))
      return ctx.fail("failed at a=" + a.to_string() + " b=" + b.to_string());
  }
  return true;
}

bool prop_char_p_kills(Ctx& ctx) {
  for (const AlgebraPtr& desc : {field(2, 2), field(3, 2), field(7, 1), product_f2_f4()}) {
    for (const auto& a : enumerate_algebra(desc, 64))
      if (!a.scaled(desc->characteristic()).is_zero())
        return ctx.fail("p*x != 0 at " + a.to_string() + " in " + label(desc));
  }
  ctx.samples = 0;
  return true;
}

// --- monoid_algebra properties -------------------------------------------

bool prop_delta_symbol_zero(Ctx& ctx) {
  for (const AlgebraPtr& desc : {field(2, 2), field(3, 2), field(3, 3), field(5, 1),
                                 field(7, 1), product_f2_f4()}) {
    for (const auto& r : enumerate_algebra(desc, 64))
      if (!delta(MonoidAlgebraElement::symbol(r)).is_zero())
        return ctx.fail("delta([r]) != 0 at r=" + r.to_string() + " in " + label(desc));
  }
  ctx.samples = 0;
  return true;
}

bool prop_delta_sum_rule(Ctx& ctx) {
  const MonoidSampleParams params{4, 50};
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const AlgebraPtr desc = p == 2 ? field(2, 2) : field(p, 1);
    for (long i = 0; i < ctx.samples; ++i) {
      const MonoidAlgebraElement x = random_monoid_element(desc, ctx.rng, params);
      const MonoidAlgebraElement y = random_monoid_element(desc, ctx.rng, params);
      MonoidAlgebraElement rhs = delta(x) + delta(y);
      for (unsigned k = 1; k < p; ++k) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), p, k);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), p);
        rhs -= (pow(x, k) * pow(y, p - k)).scaled(binom);
      }
      if (delta(x + y) != rhs)
        return ctx.fail("p=" + std::to_string(p) + " x=" + x.to_string() +
                        " y=" + y.to_string());
    }
  }
  return true;
}

bool prop_delta_product_rule(Ctx& ctx) {
  const MonoidSampleParams params{4, 50};
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const AlgebraPtr desc = p == 3 ? field(3, 2) : field(p, 1);
    const unsigned long pl = p;
    for (long i = 0; i < ctx.samples; ++i) {
      const MonoidAlgebraElement x = random_monoid_element(desc, ctx.rng, params);
      const MonoidAlgebraElement y = random_monoid_element(desc, ctx.rng, params);
      if (delta(x * y) != delta(x) * phi_shift(y) + pow(x, pl) * delta(y))
        return ctx.fail("p=" + std::to_string(p) + " x=" + x.to_string() +
                        " y=" + y.to_string());
    }
  }
  return true;
}

bool prop_delta_multifactor_rule(Ctx& ctx) {
  const MonoidSampleParams params{3, 20};
  for (unsigned p : {2u, 3u, 5u}) {
    const AlgebraPtr desc = field(p, 1);
    const unsigned long pl = p;
    for (long i = 0; i < ctx.samples; ++i) {
      for (unsigned count : {3u, 4u}) {
        std::vector<MonoidAlgebraElement> xs;
        MonoidAlgebraElement prod = MonoidAlgebraElement::symbol(AlgebraElement::one(desc));
        for (unsigned k = 0; k < count; ++k) {
          xs.push_back(random_monoid_element(desc, ctx.rng, params));
          prod = prod * xs.back();
        }
        MonoidAlgebraElement rhs = MonoidAlgebraElement::zero(desc);
        for (unsigned k = 0; k < count; ++k) {
          MonoidAlgebraElement term = MonoidAlgebraElement::symbol(AlgebraElement::one(desc));
          for (unsigned j = 0; j < k; ++j) term = term * pow(xs[j], pl);
          term = term * delta(xs[k]);
          for (unsigned j = k + 1; j < count; ++j) term = term * phi_shift(xs[j]);
          rhs += term;
        }
        if (delta(prod) != rhs) return ctx.fail("p=" + std::to_string(p) + " factors=" +
                                                std::to_string(count));
      }
    }
  }
  return true;
}

bool prop_pi_phi_intertwine(Ctx& ctx) {
  for (const AlgebraPtr& desc : {field(2, 2), field(3, 2), field(5, 1), product_f2_f4()}) {
    for (long i = 0; i < ctx.samples; ++i) {
      const MonoidAlgebraElement x = random_monoid_element(desc, ctx.rng);
      if (augmentation_pi(phi_shift(x)) != frobenius(augmentation_pi(x)))
        return ctx.fail("x=" + x.to_string() + " in " + label(desc));
    }
  }
  return true;
}

// --- witt_core properties --------------------------------------------------

struct Config {
  AlgebraPtr desc;
  unsigned max_n;
};

std::vector<Config> formula_configs() {
  return {{field(2, 1), 3}, {field(2, 2), 3},        {field(3, 1), 3},
          {field(3, 2), 3}, {product_f2_f4(), 3},    {field(5, 1), 5},
          {field(7, 1), 4}};
}

bool prop_roundtrip_alpha_beta(Ctx& ctx) {
  for (const Config& config : formula_configs()) {
    for (unsigned n = 1; n <= config.max_n; ++n) {
      const mpz_class card = config.desc->cardinality();
      mpz_class tuples;
      mpz_pow_ui(tuples.get_mpz_t(), card.get_mpz_t(), n);
      if (tuples <= 4096) {
        const auto elements = enumerate_algebra(config.desc);
        std::vector<std::size_t> index(n, 0);
        while (true) {
          std::vector<AlgebraElement> components;
          for (unsigned k = 0; k < n; ++k) components.push_back(elements[index[k]]);
          const WittVector w(config.desc, std::move(components));
          if (alpha(beta_n(w), n) != w)
            return ctx.fail("w=" + w.to_string() + " in " + label(config.desc));
          unsigned k = 0;
          for (; k < n; ++k) {
            if (++index[k] < elements.size()) break;
            index[k] = 0;
          }
          if (k == n) break;
        }
      } else {
        for (long i = 0; i < ctx.samples; ++i) {
          std::vector<AlgebraElement> components;
          for (unsigned k = 0; k < n; ++k) components.push_back(random_element(config.desc, ctx.rng));
          const WittVector w(config.desc, std::move(components));
          if (alpha(beta_n(w), n) != w)
            return ctx.fail("w=" + w.to_string() + " in " + label(config.desc));
        }
      }
    }
  }
  return true;
}

bool prop_section_beta_alpha(Ctx& ctx) {
  for (const Config& config : formula_configs()) {
    for (unsigned n = 1; n <= config.max_n; ++n) {
      for (long i = 0; i < ctx.samples / 4 + 1; ++i) {
        const MonoidAlgebraElement x = random_monoid_element(config.desc, ctx.rng);
        if (!congruent_mod_ideal_pow(beta_n(alpha(x, n)), x, n))
          return ctx.fail("x=" + x.to_string() + " n=" + std::to_string(n) + " in " +
                          label(config.desc));
      }
    }
  }
  return true;
}

bool prop_alpha_matches_oracle(Ctx& ctx) {
  for (const Config& config : formula_configs()) {
    for (unsigned n = 1; n <= config.max_n; ++n) {
      const GaloisRing ring(config.desc, n);
      auto disagrees = [&](const MonoidAlgebraElement& e) {
        return alpha(e, n) != ring.canonical_map(e);
      };
      for (long i = 0; i < ctx.samples; ++i) {
        MonoidAlgebraElement x = random_monoid_element(config.desc, ctx.rng);
        if (disagrees(x)) {
          x = shrink_failing(x, disagrees);
          return ctx.fail("alpha != oracle at x=" + x.to_string() + " n=" + std::to_string(n) +
                          " in " + label(config.desc));
        }
      }
      // small scalar-multiple sweep k[r], |k| <= 9
      for (const auto& r : enumerate_algebra(config.desc, 9)) {
        for (long k = -9; k <= 9; ++k) {
          const MonoidAlgebraElement x = MonoidAlgebraElement::symbol(r).scaled(k);
          if (disagrees(x))
            return ctx.fail("alpha != oracle at x=" + x.to_string() + " n=" + std::to_string(n) +
                            " in " + label(config.desc));
        }
      }
    }
  }
  return true;
}

bool prop_alpha_ring_homomorphism(Ctx& ctx) {
  for (const Config& config : formula_configs()) {
    for (unsigned n = 2; n <= config.max_n; ++n) {
      const GaloisRing ring(config.desc, n);
      for (long i = 0; i < ctx.samples / 2 + 1; ++i) {
        const MonoidAlgebraElement x = random_monoid_element(config.desc, ctx.rng);
        const MonoidAlgebraElement y = random_monoid_element(config.desc, ctx.rng);
        if (alpha(x + y, n) != ring.witt_add(alpha(x, n), alpha(y, n)))
          return ctx.fail("additive failure at n=" + std::to_string(n) + " in " +
                          label(config.desc));
        if (alpha(x * y, n) != ring.witt_mul(alpha(x, n), alpha(y, n)))
          return ctx.fail("multiplicative failure at n=" + std::to_string(n) + " in " +
                          label(config.desc));
      }
    }
  }
  return true;
}

bool prop_alpha_truncation(Ctx& ctx) {
  for (const Config& config : formula_configs()) {
    for (unsigned n = 2; n <= config.max_n; ++n) {
      for (long i = 0; i < ctx.samples / 2 + 1; ++i) {
        const MonoidAlgebraElement x = random_monoid_element(config.desc, ctx.rng);
        if (alpha(x, n).truncated(n - 1) != alpha(x, n - 1))
          return ctx.fail("x=" + x.to_string() + " n=" + std::to_string(n) + " in " +
                          label(config.desc));
      }
    }
  }
  return true;
}

bool prop_quotient_ops_match_oracle(Ctx& ctx) {
  for (const Config& config : formula_configs()) {
    for (unsigned n = 1; n <= config.max_n; ++n) {
      const GaloisRing ring(config.desc, n);
      for (long i = 0; i < ctx.samples / 4 + 1; ++i) {
        std::vector<AlgebraElement> ca, cb;
        for (unsigned k = 0; k < n; ++k) {
          ca.push_back(random_element(config.desc, ctx.rng));
          cb.push_back(random_element(config.desc, ctx.rng));
        }
        const WittVector a(config.desc, ca), b(config.desc, cb);
        if (quotient_add(a, b) != ring.witt_add(a, b) ||
            quotient_mul(a, b) != ring.witt_mul(a, b))
          return ctx.fail("a=" + a.to_string() + " b=" + b.to_string() + " in " +
                          label(config.desc));
      }
    }
  }
  return true;
}

bool prop_delta_congruence_descends(Ctx& ctx) {
  for (unsigned p : {2u, 3u, 5u}) {
    const AlgebraPtr desc = field(p, 1);
    for (unsigned n : {2u, 3u}) {
      for (long i = 0; i < ctx.samples; ++i) {
        const MonoidAlgebraElement x = random_monoid_element(desc, ctx.rng);
        const MonoidAlgebraElement y = x + sample_ideal_pow(desc, n, ctx.rng, 1 + i % 2);
        if (!congruent_mod_ideal_pow(delta(x), delta(y), n - 1))
          return ctx.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) +
                          " x=" + x.to_string());
      }
    }
  }
  return true;
}

bool prop_delta_congruence_split_remainder(Ctx& ctx) {
  for (unsigned p : {2u, 3u, 5u}) {
    const AlgebraPtr desc = field(p, 1);
    for (unsigned n : {2u, 3u}) {
      for (long i = 0; i < ctx.samples; ++i) {
        const MonoidAlgebraElement b = random_monoid_element(desc, ctx.rng);
        const MonoidAlgebraElement c = sample_ideal_pow(desc, n - 1, ctx.rng);
        const MonoidAlgebraElement a = b + c + sample_ideal_pow(desc, n, ctx.rng);
        if (!congruent_mod_ideal_pow(delta(a), delta(b) + delta(c), n - 1))
          return ctx.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) +
                          " b=" + b.to_string());
      }
    }
  }
  return true;
}

bool prop_delta_additive_on_complementary_ideals(Ctx& ctx) {
  for (unsigned p : {2u, 3u, 5u}) {
    const AlgebraPtr desc = field(p, 1);
    for (unsigned n : {2u, 3u, 4u}) {
      for (long i = 0; i < ctx.samples; ++i) {
        const unsigned j = 1 + static_cast<unsigned>(ctx.rng() % (n - 1));
        const MonoidAlgebraElement a = sample_ideal_pow(desc, j, ctx.rng, 1 + i % 2);
        const MonoidAlgebraElement b = sample_ideal_pow(desc, n - j, ctx.rng);
        if (!congruent_mod_ideal_pow(delta(a + b), delta(a) + delta(b), n))
          return ctx.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) +
                          " j=" + std::to_string(j));
      }
    }
  }
  return true;
}

bool prop_delta_of_p(Ctx& ctx) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const AlgebraPtr desc = field(p, 1);
    const MonoidAlgebraElement p_one = MonoidAlgebraElement::constant(desc, p);
    const MonoidAlgebraElement one = MonoidAlgebraElement::constant(desc, 1);
    if (!congruent_mod_ideal_pow(delta(p_one), one, p - 1))
      return ctx.fail("delta(p*1) != 1 mod I^(p-1) at p=" + std::to_string(p));
  }
  ctx.samples = 0;
  return true;
}

bool prop_delta_of_p_times(Ctx& ctx) {
  for (unsigned p : {2u, 3u, 5u}) {
    const AlgebraPtr desc = field(p, 1);
    for (long i = 0; i < ctx.samples; ++i) {
      const MonoidAlgebraElement a = random_monoid_element(desc, ctx.rng);
      const MonoidAlgebraElement lhs = delta(a.scaled(p));
      const MonoidAlgebraElement rhs = phi_shift(a);
      for (unsigned k = 1; k < p; ++k)
        if (!congruent_mod_ideal_pow(lhs, rhs, k))
          return ctx.fail("p=" + std::to_string(p) + " k=" + std::to_string(k) +
                          " a=" + a.to_string());
    }
  }
  return true;
}

bool prop_delta_sum_ideal(Ctx& ctx) {
  for (unsigned p : {2u, 3u, 5u}) {
    const AlgebraPtr desc = field(p, 1);
    for (unsigned n : {1u, 2u, 3u}) {
      for (long i = 0; i < ctx.samples; ++i) {
        const MonoidAlgebraElement x = random_monoid_element(desc, ctx.rng);
        const MonoidAlgebraElement y = sample_ideal_pow(desc, n, ctx.rng, 1 + i % 2);
        if (!congruent_mod_ideal_pow(delta(x + y), delta(x) + delta(y), n))
          return ctx.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) +
                          " x=" + x.to_string());
        if (!congruent_mod_ideal_pow(delta(y + x), delta(y) + delta(x), n))
          return ctx.fail("swapped case, p=" + std::to_string(p) + " n=" + std::to_string(n));
      }
    }
  }
  return true;
}

bool prop_delta_ideal_power(Ctx& ctx) {
  for (unsigned p : {2u, 3u, 5u}) {
    const AlgebraPtr desc = field(p, 1);
    for (unsigned n : {2u, 3u, 4u}) {
      for (long i = 0; i < ctx.samples; ++i) {
        const MonoidAlgebraElement x = sample_ideal_pow(desc, n, ctx.rng, 1 + i % 3);
        if (!in_ideal_pow(delta(x), n - 1))
          return ctx.fail("delta(I^n) escaped I^(n-1): p=" + std::to_string(p) +
                          " n=" + std::to_string(n) + " x=" + x.to_string());
      }
    }
  }
  return true;
}

bool prop_remark_delta_shift(Ctx& ctx) {
  for (const AlgebraPtr& desc : {field(2, 1), field(3, 1), field(5, 1), field(2, 2),
                                 product_f2_f4()}) {
    for (long i = 0; i < ctx.samples; ++i) {
      const MonoidAlgebraElement x = random_monoid_element(desc, ctx.rng);
      const AlgebraElement lhs = augmentation_pi(delta(x));
      const AlgebraElement rhs = augmentation_pi(
          delta(x - MonoidAlgebraElement::symbol(augmentation_pi(x))));
      if (lhs != rhs) return ctx.fail("x=" + x.to_string() + " in " + label(desc));
    }
  }
  return true;
}

bool prop_alpha3_sign_necessity(Ctx& ctx) {
  // At p = 2 the correct third-component sign is +1 ((-1)^p with p even);
  // the mutation flips the sign the suite treats as correct, which must
  // make this property fail (negative control).
  const bool mutated = ctx.options.mutation == "sign-flip-alpha3";
  const int correct_sign = mutated ? -1 : +1;
  const AlgebraPtr desc = field(2, 1);
  const GaloisRing ring(desc, 3);
  const AlgebraElement one = AlgebraElement::one(desc);
  bool wrong_sign_differs_somewhere = false;
  for (long k = -8; k <= 8; ++k) {
    const MonoidAlgebraElement x = MonoidAlgebraElement::symbol(one).scaled(k);
    const WittVector expected = ring.canonical_map(x);
    if (alpha_3_with_sign(x, correct_sign) != expected)
      return ctx.fail("formula disagrees with oracle at x=" + x.to_string());
    if (alpha_3_with_sign(x, -correct_sign) != expected) wrong_sign_differs_somewhere = true;
  }
  if (!wrong_sign_differs_somewhere)
    return ctx.fail("wrong-sign variant never disagreed with the oracle over |k| <= 8");
  ctx.samples = 34;
  return true;
}

// --- witt_oracle properties -------------------------------------------------

bool prop_oracle_coordinate_bijection(Ctx& ctx) {
  struct Case {
    AlgebraPtr desc;
    unsigned n;
  };
  for (const Case& c : {Case{field(2, 1), 3}, Case{field(2, 2), 3}, Case{field(3, 1), 3},
                        Case{field(5, 1), 2}, Case{product_f2_f4(), 2}}) {
    const GaloisRing ring(c.desc, c.n);
    // every witt vector round trips through the ring
    const auto elements = enumerate_algebra(c.desc);
    std::vector<std::size_t> index(c.n, 0);
    while (true) {
      std::vector<AlgebraElement> components;
      for (unsigned k = 0; k < c.n; ++k) components.push_back(elements[index[k]]);
      const WittVector w(c.desc, std::move(components));
      if (ring.to_witt(ring.from_witt(w)) != w)
        return ctx.fail("w=" + w.to_string() + " in " + label(c.desc));
      unsigned k = 0;
      for (; k < c.n; ++k) {
        if (++index[k] < elements.size()) break;
        index[k] = 0;
      }
      if (k == c.n) break;
    }
    // every ring element round trips through coordinates, also exhaustive
    // (p^(e n) values, bounded by 4096 in these cases)
    const unsigned long pn = ring.modulus().get_ui();
    std::size_t slots = 0;
    for (const FieldFactor& factor : c.desc->factors()) slots += factor.e;
    std::vector<unsigned long> odo(slots, 0);
    while (true) {
      std::vector<std::vector<mpz_class>> coeffs;
      std::size_t v = 0;
      for (const FieldFactor& factor : c.desc->factors()) {
        std::vector<mpz_class> fc(factor.e);
        for (auto& value : fc) value = odo[v++];
        coeffs.push_back(std::move(fc));
      }
      const GaloisRingElement y = ring.from_coefficients(std::move(coeffs));
      if (ring.from_witt(ring.to_witt(y)) != y)
        return ctx.fail("y=" + y.to_string() + " in " + label(c.desc));
      std::size_t k = 0;
      for (; k < slots; ++k) {
        if (++odo[k] < pn) break;
        odo[k] = 0;
      }
      if (k == slots) break;
    }
  }
  ctx.samples = 0;
  return true;
}

bool prop_teichmuller_multiplicative(Ctx& ctx) {
  struct Case {
    AlgebraPtr desc;
    unsigned n;
  };
  for (const Case& c : {Case{field(2, 2), 3}, Case{field(3, 1), 3}, Case{field(3, 2), 2},
                        Case{field(5, 1), 3}, Case{product_f2_f4(), 2}}) {
    const GaloisRing ring(c.desc, c.n);
    const auto elements = enumerate_algebra(c.desc, 16);
    // tau^N == tau holds uniformly for N = 1 + lcm(p^e - 1) over the factors:
    // each nonzero factor component of tau is a (p^e - 1)-th root of unity.
    unsigned long exponent = 1;
    for (const FieldFactor& factor : c.desc->factors()) {
      unsigned long q = 1;
      for (unsigned i = 0; i < factor.e; ++i) q *= c.desc->characteristic();
      exponent = std::lcm(exponent, q - 1 ? q - 1 : 1);
    }
    exponent += 1;
    for (const auto& r : elements) {
      GaloisRingElement acc = ring.one();
      for (unsigned long i = 0; i < exponent; ++i) acc = ring.mul(acc, ring.teichmuller(r));
      if (acc != ring.teichmuller(r))
        return ctx.fail("tau(r)^N != tau(r) at r=" + r.to_string() + " in " + label(c.desc));
      for (const auto& s : elements)
        if (ring.teichmuller(r * s) != ring.mul(ring.teichmuller(r), ring.teichmuller(s)))
          return ctx.fail("tau not multiplicative at r=" + r.to_string() +
                          " s=" + s.to_string() + " in " + label(c.desc));
    }
  }
  ctx.samples = 0;
  return true;
}

bool prop_canonical_ring_homomorphism(Ctx& ctx) {
  for (const AlgebraPtr& desc : {field(2, 1), field(2, 2), field(3, 1), product_f2_f4()}) {
    for (unsigned n : {2u, 3u, 4u}) {
      const GaloisRing ring(desc, n);
      for (long i = 0; i < ctx.samples / 2 + 1; ++i) {
        const MonoidAlgebraElement x = random_monoid_element(desc, ctx.rng);
        const MonoidAlgebraElement y = random_monoid_element(desc, ctx.rng);
        if (ring.canonical_map(x + y) !=
            ring.witt_add(ring.canonical_map(x), ring.canonical_map(y)))
          return ctx.fail("additive failure at n=" + std::to_string(n) + " in " + label(desc));
        if (ring.canonical_map(x * y) !=
            ring.witt_mul(ring.canonical_map(x), ring.canonical_map(y)))
          return ctx.fail("multiplicative failure at n=" + std::to_string(n) + " in " +
                          label(desc));
      }
    }
  }
  return true;
}

bool prop_oracle_product_projection(Ctx& ctx) {
  const AlgebraPtr prod = product_f2_f4();
  const AlgebraPtr f2 = field(2, 1);
  const AlgebraPtr f4 = field(2, 2);
  auto project = [](const MonoidAlgebraElement& x, const AlgebraPtr& target, std::size_t f) {
    MonoidAlgebraElement::TermMap terms;
    for (const auto& [key, coeff] : x.terms()) {
      const AlgebraElement proj =
          AlgebraElement::from_coefficients(target, {key.coefficients()[f]});
      auto [it, inserted] = terms.emplace(proj, coeff);
      if (!inserted) it->second += coeff;
    }
    return MonoidAlgebraElement::from_terms(target, std::move(terms));
  };
  for (unsigned n : {2u, 3u}) {
    const GaloisRing ring(prod, n);
    const GaloisRing ring2(f2, n);
    const GaloisRing ring4(f4, n);
    for (long i = 0; i < ctx.samples; ++i) {
      const MonoidAlgebraElement x = random_monoid_element(prod, ctx.rng);
      const WittVector w = ring.canonical_map(x);
      const WittVector w2 = ring2.canonical_map(project(x, f2, 0));
      const WittVector w4 = ring4.canonical_map(project(x, f4, 1));
      for (unsigned k = 0; k < n; ++k) {
        if (AlgebraElement::from_coefficients(f2, {w.component(k).coefficients()[0]}) !=
                w2.component(k) ||
            AlgebraElement::from_coefficients(f4, {w.component(k).coefficients()[1]}) !=
                w4.component(k))
          return ctx.fail("projection mismatch at x=" + x.to_string() +
                          " n=" + std::to_string(n));
      }
    }
  }
  return true;
}

// --- witt_polynomials properties ---------------------------------------------

bool prop_wittpoly_ghost_identities(Ctx& ctx) {
  struct Case {
    unsigned p, n;
  };
  for (const Case& c : {Case{2, 3}, Case{3, 3}, Case{5, 2}}) {
    const WittPolynomialSet set = load_or_build(c.p, c.n, ctx.options.cache_dir);
    for (unsigned i = 0; i < c.n; ++i) {
      if (!set.sum[i].is_integral() || !set.product[i].is_integral())
        return ctx.fail("non-integral coefficient at p=" + std::to_string(c.p) +
                        " i=" + std::to_string(i));
      const SparsePolynomial gx = ghost_polynomial(c.p, i, 0, c.n);
      const SparsePolynomial gy = ghost_polynomial(c.p, i, 1, c.n);
      if (ghost_of(c.p, i, set.sum) != gx + gy)
        return ctx.fail("sum ghost identity failed at p=" + std::to_string(c.p) +
                        " i=" + std::to_string(i));
      if (ghost_of(c.p, i, set.product) != gx * gy)
        return ctx.fail("product ghost identity failed at p=" + std::to_string(c.p) +
                        " i=" + std::to_string(i));
    }
  }
  ctx.samples = 0;
  return true;
}

bool prop_wittpoly_backend_agreement(Ctx& ctx) {
  // exhaustive on F_2 up to n = 3
  const AlgebraPtr f2 = field(2, 1);
  for (unsigned n = 1; n <= 3; ++n) {
    const WittPolynomialSet set = load_or_build(2, n, ctx.options.cache_dir);
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
    for (const WittVector& a : all)
      for (const WittVector& b : all) {
        if (poly_backend_add(set, a, b) != ring.witt_add(a, b))
          return ctx.fail("add mismatch at a=" + a.to_string() + " b=" + b.to_string() +
                          " n=" + std::to_string(n));
        if (poly_backend_mul(set, a, b) != ring.witt_mul(a, b))
          return ctx.fail("mul mismatch at a=" + a.to_string() + " b=" + b.to_string() +
                          " n=" + std::to_string(n));
      }
  }
  // randomized on F_9, n = 2
  const AlgebraPtr f9 = field(3, 2);
  const WittPolynomialSet set = load_or_build(3, 2, ctx.options.cache_dir);
  const GaloisRing ring(f9, 2);
  for (long i = 0; i < ctx.samples; ++i) {
    const WittVector a(f9, {random_element(f9, ctx.rng), random_element(f9, ctx.rng)});
    const WittVector b(f9, {random_element(f9, ctx.rng), random_element(f9, ctx.rng)});
    if (poly_backend_add(set, a, b) != ring.witt_add(a, b) ||
        poly_backend_mul(set, a, b) != ring.witt_mul(a, b))
      return ctx.fail("F9 mismatch at a=" + a.to_string() + " b=" + b.to_string());
  }
  return true;
}

// --- parser properties ---------------------------------------------------------

bool prop_parser_roundtrip(Ctx& ctx) {
  for (const AlgebraPtr& desc :
       {field(2, 1), field(2, 2), field(3, 2), field(5, 1), product_f2_f4()}) {
    if (parse_element("0", desc) != MonoidAlgebraElement::zero(desc))
      return ctx.fail("\"0\" did not parse to the zero element");
    for (long i = 0; i < ctx.samples; ++i) {
      const MonoidAlgebraElement x = random_monoid_element(desc, ctx.rng);
      if (parse_element(x.to_string(), desc) != x)
        return ctx.fail("roundtrip failed for \"" + x.to_string() + "\" in " + label(desc));
    }
  }
  return true;
}

const Property kProperties[] = {
    {"algebra/char_p_kills", 0, prop_char_p_kills},
    {"algebra/frobenius_bijective", 200, prop_frobenius_bijective},
    {"algebra/frobenius_homomorphism", 200, prop_frobenius_homomorphism},
    {"algebra/ring_axioms", 0, prop_ring_axioms},
    {"monoid/delta_multifactor_rule", 60, prop_delta_multifactor_rule},
    {"monoid/delta_product_rule", 200, prop_delta_product_rule},
    {"monoid/delta_sum_rule", 200, prop_delta_sum_rule},
    {"monoid/delta_symbol_zero", 0, prop_delta_symbol_zero},
    {"monoid/pi_phi_intertwine", 200, prop_pi_phi_intertwine},
    {"oracle/canonical_ring_homomorphism", 100, prop_canonical_ring_homomorphism},
    {"oracle/coordinate_bijection", 200, prop_oracle_coordinate_bijection},
    {"oracle/product_projection", 100, prop_oracle_product_projection},
    {"oracle/teichmuller_multiplicative", 0, prop_teichmuller_multiplicative},
    {"parser/roundtrip", 300, prop_parser_roundtrip},
    {"witt/alpha3_sign_necessity", 34, prop_alpha3_sign_necessity},
    {"witt/alpha_matches_oracle", 150, prop_alpha_matches_oracle},
    {"witt/alpha_ring_homomorphism", 60, prop_alpha_ring_homomorphism},
    {"witt/alpha_truncation", 100, prop_alpha_truncation},
    {"witt/delta_ideal_power", 100, prop_delta_ideal_power},
    {"witt/delta_of_p", 0, prop_delta_of_p},
    {"witt/delta_of_p_times", 100, prop_delta_of_p_times},
    {"witt/delta_sum_ideal", 100, prop_delta_sum_ideal},
    {"witt/delta_congruence_descends", 150, prop_delta_congruence_descends},
    {"witt/delta_additive_on_complementary_ideals", 150, prop_delta_additive_on_complementary_ideals},
    {"witt/delta_congruence_split_remainder", 150, prop_delta_congruence_split_remainder},
    {"witt/quotient_ops_match_oracle", 60, prop_quotient_ops_match_oracle},
    {"witt/remark_delta_shift", 300, prop_remark_delta_shift},
    {"witt/roundtrip_alpha_beta", 200, prop_roundtrip_alpha_beta},
    {"witt/section_beta_alpha", 100, prop_section_beta_alpha},
    {"wittpoly/backend_agreement", 100, prop_wittpoly_backend_agreement},
    {"wittpoly/ghost_identities", 0, prop_wittpoly_ghost_identities},
};

}  // namespace

bool is_known_mutation(const std::string& name) {
  return name.empty() || name == "sign-flip-alpha3";
}

CheckReport run_check_suite(const CheckOptions& options) {
  if (!is_known_mutation(options.mutation))
    throw std::invalid_argument("unknown mutation: " + options.mutation);

  const unsigned workers =
      options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());

  CheckReport report;
  report.options = options;
  report.results.resize(std::size(kProperties));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= std::size(kProperties)) break;
      const Property& prop = kProperties[i];
      PropertyResult result;
      result.name = prop.name;
      const long samples = options.samples > 0 ? options.samples : prop.default_samples;
      Ctx ctx{std::mt19937_64(options.seed ^ fnv1a(prop.name)), samples, options, {}};
      const auto start = std::chrono::steady_clock::now();
      try {
        result.passed = prop.fn(ctx);
        result.counterexample = ctx.counterexample;
      } catch (const std::exception& e) {
        result.passed = false;
        result.counterexample = std::string("exception: ") + e.what();
      }
      result.samples = ctx.samples;
      result.millis = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      report.results[i] = std::move(result);
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::sort(report.results.begin(), report.results.end(),
            [](const PropertyResult& a, const PropertyResult& b) { return a.name < b.name; });
  return report;
}

std::string report_to_text(const CheckReport& report) {
  std::ostringstream os;
  os << "seed: " << report.options.seed << "  samples: "
     << (report.options.samples > 0 ? std::to_string(report.options.samples)
                                    : std::string("per-property defaults"))
     << "  mutation: "
     << (report.options.mutation.empty() ? "(none)" : report.options.mutation) << '\n';
  int passed = 0;
  for (const PropertyResult& r : report.results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.samples << " samples, "
       << r.millis << " ms)";
    if (!r.passed) os << "\n       counterexample: " << r.counterexample;
    os << '\n';
    passed += r.passed ? 1 : 0;
  }
  os << "overall: " << (report.all_passed() ? "PASS" : "FAIL") << " (" << passed << '/'
     << report.results.size() << " properties)\n";
  return os.str();
}

std::string report_to_json(const CheckReport& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const PropertyResult& r : report.results) {
    results.push_back({{"name", r.name},
                       {"passed", r.passed},
                       {"samples", r.samples},
                       {"millis", r.millis},
                       {"counterexample", r.counterexample}});
  }
  const nlohmann::json doc = {
      {"command", "check"},
      {"seed", report.options.seed},
      {"samples", report.options.samples},
      {"mutation", report.options.mutation},
      {"all_passed", report.all_passed()},
      {"results", results},
  };
  return doc.dump();
}

}  // namespace witt
