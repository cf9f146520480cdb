#include "witt/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>

namespace witt {
namespace {

// Dense polynomial over Z/p, constant-first, no trailing zero coefficients
// (empty vector is the zero polynomial).
using Poly = std::vector<unsigned>;

Poly trimmed(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

unsigned mod_inverse(unsigned a, unsigned p) {
  // p is prime and a != 0 mod p: a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  unsigned exp = p - 2;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<unsigned>(result);
}

Poly poly_sub(const Poly& a, const Poly& b, unsigned p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t av = i < a.size() ? a[i] : 0;
    std::uint64_t bv = i < b.size() ? b[i] : 0;
    out[i] = static_cast<unsigned>((av + p - bv) % p);
  }
  return trimmed(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<unsigned>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return trimmed(std::move(out));
}

// Remainder of a modulo nonzero f.
Poly poly_mod(Poly a, const Poly& f, unsigned p) {
  a = trimmed(std::move(a));
  const std::size_t df = f.size() - 1;
  const unsigned lead_inv = mod_inverse(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t q = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<unsigned>(
          (a[shift + i] + static_cast<std::uint64_t>(p) * p - q * f[i] % p) % p);
    }
    a = trimmed(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, unsigned p) {
  return poly_mod(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, unsigned exp, const Poly& f, unsigned p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (exp > 0) {
    if (exp & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    exp >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  a = trimmed(std::move(a));
  b = trimmed(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// f monic of degree e is irreducible over Z/p iff gcd(x^(p^k) - x, f) is a
// unit for 1 <= k < e and x^(p^e) = x mod f.
bool is_irreducible(const Poly& f, unsigned p, unsigned e) {
  const Poly x{0, 1};
  Poly t = poly_mod(x, f, p);
  for (unsigned k = 1; k <= e; ++k) {
    t = poly_powmod(t, p, f, p);  // t = x^(p^k) mod f
    if (k < e) {
      Poly g = poly_gcd(poly_sub(t, poly_mod(x, f, p), p), f, p);
      if (g.size() != 1) return false;
    } else {
      if (trimmed(poly_sub(t, poly_mod(x, f, p), p)).size() != 0) return false;
    }
  }
  return true;
}

void validate_factor(const FieldFactor& factor, unsigned p) {
  if (factor.e < 1) throw std::invalid_argument("field factor needs degree e >= 1");
  if (factor.modulus.size() != factor.e + 1)
    throw std::invalid_argument("modulus must have e+1 coefficients (constant first)");
  for (unsigned c : factor.modulus)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
  if (factor.modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic");
  if (!is_irreducible(factor.modulus, p, factor.e))
    throw std::invalid_argument("modulus is reducible over Z/" + std::to_string(p));
}

// Multiplication of coefficient vectors (fixed length e) modulo the monic
// factor modulus.
std::vector<unsigned> factor_mul(const std::vector<unsigned>& a,
                                 const std::vector<unsigned>& b,
                                 const FieldFactor& factor, unsigned p) {
  const unsigned e = factor.e;
  std::vector<std::uint64_t> prod(2 * e - 1, 0);
  for (unsigned i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < e; ++j)
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  }
  // reduce x^(e+k) by the monic modulus, top down
  for (unsigned k = 2 * e - 2; k >= e && k < 2 * e; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < e; ++i) {
      prod[k - e + i] =
          (prod[k - e + i] + static_cast<std::uint64_t>(p) * p - c * factor.modulus[i] % p) % p;
    }
  }
  std::vector<unsigned> out(e);
  for (unsigned i = 0; i < e; ++i) out[i] = static_cast<unsigned>(prod[i]);
  return out;
}

std::vector<unsigned> factor_pow(std::vector<unsigned> base, unsigned exp,
                                 const FieldFactor& factor, unsigned p) {
  std::vector<unsigned> result(factor.e, 0);
  result[0] = 1;
  while (exp > 0) {
    if (exp & 1) result = factor_mul(result, base, factor, p);
    base = factor_mul(base, base, factor, p);
    exp >>= 1;
  }
  return result;
}

const char* kDefaultModulusError =
    "no built-in default modulus for this (p, e); supply one explicitly";

}  // namespace

AlgebraPtr AlgebraDescriptor::make(unsigned p, std::vector<FieldFactor> factors) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (factors.empty()) throw std::invalid_argument("algebra needs at least one factor");
  for (const FieldFactor& factor : factors) validate_factor(factor, p);
  return AlgebraPtr(new AlgebraDescriptor(p, std::move(factors)));
}

AlgebraPtr AlgebraDescriptor::make_field(unsigned p, unsigned e) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  return make(p, {FieldFactor{e, default_modulus(p, e)}});
}

AlgebraPtr AlgebraDescriptor::make_field(unsigned p, unsigned e, std::vector<unsigned> modulus) {
  return make(p, {FieldFactor{e, std::move(modulus)}});
}

mpz_class AlgebraDescriptor::cardinality() const {
  mpz_class card = 1;
  for (const FieldFactor& factor : factors_) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p_, factor.e);
    card *= q;
  }
  return card;
}

std::string AlgebraDescriptor::to_string() const {
  std::ostringstream os;
  os << "p=" << p_;
  bool first = true;
  for (const FieldFactor& factor : factors_) {
    os << (first ? "," : ";") << "e=" << factor.e << ",mod=[";
    for (unsigned i = 0; i <= factor.e; ++i) {
      if (i) os << ',';
      os << factor.modulus[i];
    }
    os << ']';
    first = false;
  }
  return os.str();
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

bool is_prime_number(unsigned p) { return is_prime(p); }

std::vector<unsigned> default_modulus(unsigned p, unsigned e) {
  // Lexicographically smallest monic irreducible of degree e over Z/p
  // (leading coefficients compared first), frozen as a table.
  struct Entry {
    unsigned p, e;
    std::vector<unsigned> modulus;
  };
  static const std::vector<Entry> table = {
      {2, 1, {0, 1}},          {2, 2, {1, 1, 1}},        {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}}, {3, 1, {0, 1}},           {3, 2, {1, 0, 1}},
      {3, 3, {1, 2, 0, 1}},    {3, 4, {2, 1, 0, 0, 1}},  {5, 1, {0, 1}},
      {5, 2, {2, 0, 1}},       {5, 3, {1, 1, 0, 1}},     {5, 4, {2, 0, 0, 0, 1}},
      {7, 1, {0, 1}},          {7, 2, {1, 0, 1}},        {7, 3, {2, 0, 0, 1}},
      {7, 4, {1, 1, 0, 0, 1}}, {11, 1, {0, 1}},          {11, 2, {1, 0, 1}},
      {11, 3, {4, 1, 0, 1}},   {11, 4, {2, 1, 0, 0, 1}}, {13, 1, {0, 1}},
      {13, 2, {2, 0, 1}},      {13, 3, {2, 0, 0, 1}},    {13, 4, {2, 0, 0, 0, 1}},
  };
  for (const Entry& entry : table)
    if (entry.p == p && entry.e == e) return entry.modulus;
  throw BoundExceeded(kDefaultModulusError);
}

AlgebraElement AlgebraElement::zero(const AlgebraPtr& desc) {
  std::vector<std::vector<unsigned>> coeffs;
  coeffs.reserve(desc->factor_count());
  for (const FieldFactor& factor : desc->factors())
    coeffs.emplace_back(factor.e, 0u);
  return AlgebraElement(desc, std::move(coeffs));
}

AlgebraElement AlgebraElement::one(const AlgebraPtr& desc) {
  return constant(desc, 1);
}

AlgebraElement AlgebraElement::constant(const AlgebraPtr& desc, unsigned c) {
  AlgebraElement out = zero(desc);
  for (auto& factor_coeffs : out.coeffs_) factor_coeffs[0] = c % desc->characteristic();
  return out;
}

AlgebraElement AlgebraElement::from_coefficients(AlgebraPtr desc,
                                                 std::vector<std::vector<unsigned>> coeffs) {
  if (coeffs.size() != desc->factor_count())
    throw std::invalid_argument("coefficient vector count != factor count");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].size() != desc->factors()[i].e)
      throw std::invalid_argument("coefficient count != factor degree");
    for (unsigned c : coeffs[i])
      if (c >= desc->characteristic())
        throw std::invalid_argument("coefficient out of range [0, p)");
  }
  return AlgebraElement(std::move(desc), std::move(coeffs));
}

bool AlgebraElement::is_zero() const {
  for (const auto& factor_coeffs : coeffs_)
    for (unsigned c : factor_coeffs)
      if (c != 0) return false;
  return true;
}

bool AlgebraElement::is_one() const { return *this == one(desc_); }

namespace {
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!same_algebra(a, b)) throw DescriptorMismatch("elements of different algebras");
}
}  // namespace

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  require_same_algebra(desc_, rhs.desc_);
  const unsigned p = desc_->characteristic();
  AlgebraElement out = *this;
  for (std::size_t f = 0; f < coeffs_.size(); ++f)
    for (std::size_t i = 0; i < coeffs_[f].size(); ++i)
      out.coeffs_[f][i] = (coeffs_[f][i] + rhs.coeffs_[f][i]) % p;
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
  return *this + (-rhs);
}

AlgebraElement AlgebraElement::operator-() const {
  const unsigned p = desc_->characteristic();
  AlgebraElement out = *this;
  for (auto& factor_coeffs : out.coeffs_)
    for (auto& c : factor_coeffs) c = (p - c) % p;
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
  require_same_algebra(desc_, rhs.desc_);
  const unsigned p = desc_->characteristic();
  AlgebraElement out = *this;
  for (std::size_t f = 0; f < coeffs_.size(); ++f)
    out.coeffs_[f] = factor_mul(coeffs_[f], rhs.coeffs_[f], desc_->factors()[f], p);
  return out;
}

AlgebraElement AlgebraElement::scaled(const mpz_class& k) const {
  const unsigned p = desc_->characteristic();
  const unsigned c = static_cast<unsigned>(mpz_fdiv_ui(k.get_mpz_t(), p));
  AlgebraElement out = *this;
  for (auto& factor_coeffs : out.coeffs_)
    for (auto& v : factor_coeffs)
      v = static_cast<unsigned>(static_cast<std::uint64_t>(v) * c % p);
  return out;
}

AlgebraElement AlgebraElement::pow(const mpz_class& k) const {
  if (k < 0) throw std::invalid_argument("negative exponent");
  AlgebraElement result = one(desc_);
  AlgebraElement base = *this;
  const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  if (k == 0) return result;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(k.get_mpz_t(), i)) result = result * base;
    if (i + 1 < bits) base = base * base;
  }
  return result;
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
  return same_algebra(desc_, rhs.desc_) && coeffs_ == rhs.coeffs_;
}

bool AlgebraElement::operator<(const AlgebraElement& rhs) const {
  return coeffs_ < rhs.coeffs_;
}

std::string AlgebraElement::to_string() const {
  std::ostringstream os;
  auto print_factor = [&](std::size_t f) {
    const FieldFactor& factor = desc_->factors()[f];
    if (factor.e == 1) {
      os << coeffs_[f][0];
    } else {
      os << '[';
      for (unsigned i = 0; i < factor.e; ++i) {
        if (i) os << ',';
        os << coeffs_[f][i];
      }
      os << ']';
    }
  };
  if (desc_->is_single_field()) {
    print_factor(0);
  } else {
    os << '(';
    for (std::size_t f = 0; f < coeffs_.size(); ++f) {
      if (f) os << "; ";
      print_factor(f);
    }
    os << ')';
  }
  return os.str();
}

AlgebraElement frobenius(const AlgebraElement& a) {
  return a.pow(a.algebra()->characteristic());
}

AlgebraElement frobenius_inv(const AlgebraElement& a) {
  // On a factor of degree e the inverse Frobenius is phi^(e-1) = x^(p^(e-1)),
  // applied per factor since degrees may differ across a product.
  const AlgebraPtr& desc = a.algebra();
  const unsigned p = desc->characteristic();
  std::vector<std::vector<unsigned>> out;
  out.reserve(desc->factor_count());
  for (std::size_t f = 0; f < desc->factor_count(); ++f) {
    const FieldFactor& factor = desc->factors()[f];
    std::vector<unsigned> coeffs = a.coefficients()[f];
    for (unsigned step = 0; step + 1 < factor.e; ++step)
      coeffs = factor_pow(coeffs, p, factor, p);
    out.push_back(std::move(coeffs));
  }
  return AlgebraElement::from_coefficients(desc, std::move(out));
}

AlgebraElement frobenius_pow(const AlgebraElement& a, long k) {
  AlgebraElement out = a;
  if (k >= 0) {
    for (long i = 0; i < k; ++i) out = frobenius(out);
  } else {
    for (long i = 0; i < -k; ++i) out = frobenius_inv(out);
  }
  return out;
}

std::vector<AlgebraElement> enumerate_algebra(const AlgebraPtr& desc, std::size_t bound) {
  const mpz_class card = desc->cardinality();
  if (card > static_cast<unsigned long>(bound))
    throw BoundExceeded("algebra has " + card.get_str() + " elements, enumeration bound is " +
                        std::to_string(bound));
  const std::size_t total = static_cast<std::size_t>(card.get_ui());
  const unsigned p = desc->characteristic();

  std::vector<AlgebraElement> out;
  out.reserve(total);
  std::vector<std::vector<unsigned>> coeffs;
  for (const FieldFactor& factor : desc->factors()) coeffs.emplace_back(factor.e, 0u);
  while (true) {
    out.push_back(AlgebraElement::from_coefficients(desc, coeffs));
    // odometer increment, last coefficient fastest (canonical ascending order)
    std::size_t f = coeffs.size();
    bool carried = true;
    while (carried && f > 0) {
      --f;
      for (std::size_t i = coeffs[f].size(); i > 0 && carried;) {
        --i;
        if (++coeffs[f][i] < p) {
          carried = false;
        } else {
          coeffs[f][i] = 0;
        }
      }
    }
    if (carried) break;
  }
  if (out.size() != total) throw InternalError("enumeration produced wrong count");
  return out;
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a) {
  return os << a.to_string();
}

}  // namespace witt
