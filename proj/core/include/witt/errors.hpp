#pragma once

#include <stdexcept>
#include <string>

namespace witt {

// Operands belong to different algebras or different truncation levels.
class DescriptorMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// No explicit coordinate formula exists for the requested (p, n): the
// recursive formula needs p >= n, and no closed form is available for
// n >= 4 with p < n.  The oracle path has no such restriction.
class UnsupportedTruncation : public std::runtime_error {
public:
  UnsupportedTruncation(unsigned prime, unsigned level)
      : std::runtime_error("no coordinate formula for n=" + std::to_string(level) +
                           " at p=" + std::to_string(prime) +
                           ": the recursive formula requires p >= n, and no closed form"
                           " is available for n >= 4 below that range (use the oracle)"),
        prime_(prime), level_(level) {}
  unsigned prime() const { return prime_; }
  unsigned level() const { return level_; }

private:
  unsigned prime_;
  unsigned level_;
};

// A configured size limit was exceeded (enumeration bound, polynomial
// generation bound).
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exactness invariant failed (division that must be exact was not,
// a coefficient that must be integral was not).  These conditions are
// mathematically impossible; hitting one means the implementation is
// broken, so the computation must abort rather than round.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace witt
