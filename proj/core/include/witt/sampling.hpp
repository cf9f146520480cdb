#pragma once

#include <random>

#include "witt/monoid_algebra.hpp"

namespace witt {

struct MonoidSampleParams {
  unsigned max_support = 5;
  long coeff_bound = 100;  // coefficients drawn from [-bound, bound]
};

// Uniformly random element of R.
AlgebraElement random_element(const AlgebraPtr& desc, std::mt19937_64& rng);

// Random element of ZR with bounded support and coefficients.
MonoidAlgebraElement random_monoid_element(const AlgebraPtr& desc, std::mt19937_64& rng,
                                           const MonoidSampleParams& params = {});

// A provable element of I^n: a product of n random augmentation-ideal
// generators [r] + [s] - [r+s], summed over `summands` such products.
MonoidAlgebraElement sample_ideal_pow(const AlgebraPtr& desc, unsigned n,
                                      std::mt19937_64& rng, unsigned summands = 1);

}  // namespace witt
