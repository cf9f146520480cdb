#include "witt/sampling.hpp"

namespace witt {

AlgebraElement random_element(const AlgebraPtr& desc, std::mt19937_64& rng) {
  const unsigned p = desc->characteristic();
  std::uniform_int_distribution<unsigned> coeff(0, p - 1);
  std::vector<std::vector<unsigned>> coeffs;
  coeffs.reserve(desc->factor_count());
  for (const FieldFactor& factor : desc->factors()) {
    std::vector<unsigned> factor_coeffs(factor.e);
    for (auto& c : factor_coeffs) c = coeff(rng);
    coeffs.push_back(std::move(factor_coeffs));
  }
  return AlgebraElement::from_coefficients(desc, std::move(coeffs));
}

MonoidAlgebraElement random_monoid_element(const AlgebraPtr& desc, std::mt19937_64& rng,
                                           const MonoidSampleParams& params) {
  std::uniform_int_distribution<unsigned> support(0, params.max_support);
  std::uniform_int_distribution<long> coeff(-params.coeff_bound, params.coeff_bound);
  MonoidAlgebraElement out = MonoidAlgebraElement::zero(desc);
  const unsigned terms = support(rng);
  for (unsigned i = 0; i < terms; ++i)
    out += MonoidAlgebraElement::symbol(random_element(desc, rng)).scaled(coeff(rng));
  return out;
}

MonoidAlgebraElement sample_ideal_pow(const AlgebraPtr& desc, unsigned n,
                                      std::mt19937_64& rng, unsigned summands) {
  if (n < 1) throw std::invalid_argument("ideal power needs n >= 1");
  MonoidAlgebraElement out = MonoidAlgebraElement::zero(desc);
  for (unsigned s = 0; s < summands; ++s) {
    MonoidAlgebraElement product =
        MonoidAlgebraElement::symbol(AlgebraElement::one(desc));
    for (unsigned i = 0; i < n; ++i) {
      const AlgebraElement r = random_element(desc, rng);
      const AlgebraElement t = random_element(desc, rng);
      MonoidAlgebraElement generator = MonoidAlgebraElement::symbol(r);
      generator += MonoidAlgebraElement::symbol(t);
      generator -= MonoidAlgebraElement::symbol(r + t);
      product = product * generator;
    }
    out += product;
  }
  return out;
}

}  // namespace witt
