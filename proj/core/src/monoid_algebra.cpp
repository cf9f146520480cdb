#include "witt/monoid_algebra.hpp"

#include <ostream>
#include <sstream>

namespace witt {

MonoidAlgebraElement MonoidAlgebraElement::zero(const AlgebraPtr& desc) {
  return MonoidAlgebraElement(desc);
}

MonoidAlgebraElement MonoidAlgebraElement::symbol(const AlgebraElement& r) {
  MonoidAlgebraElement out(r.algebra());
  out.terms_.emplace(r, 1);
  return out;
}

MonoidAlgebraElement MonoidAlgebraElement::constant(const AlgebraPtr& desc, const mpz_class& k) {
  MonoidAlgebraElement out(desc);
  if (k != 0) out.terms_.emplace(AlgebraElement::one(desc), k);
  return out;
}

MonoidAlgebraElement MonoidAlgebraElement::from_terms(const AlgebraPtr& desc, TermMap terms) {
  MonoidAlgebraElement out(desc);
  out.terms_ = std::move(terms);
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (!same_algebra(it->first.algebra(), desc))
      throw DescriptorMismatch("support key from a different algebra");
    if (it->second == 0)
      it = out.terms_.erase(it);
    else
      ++it;
  }
  return out;
}

mpz_class MonoidAlgebraElement::coefficient(const AlgebraElement& r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void MonoidAlgebraElement::add_term(const AlgebraElement& key, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!same_algebra(a, b)) throw DescriptorMismatch("monoid-algebra elements of different algebras");
}
}  // namespace

MonoidAlgebraElement& MonoidAlgebraElement::operator+=(const MonoidAlgebraElement& rhs) {
  require_same_algebra(desc_, rhs.desc_);
  for (const auto& [key, coeff] : rhs.terms_) add_term(key, coeff);
  return *this;
}

MonoidAlgebraElement& MonoidAlgebraElement::operator-=(const MonoidAlgebraElement& rhs) {
  require_same_algebra(desc_, rhs.desc_);
  for (const auto& [key, coeff] : rhs.terms_) add_term(key, -coeff);
  return *this;
}

MonoidAlgebraElement MonoidAlgebraElement::operator+(const MonoidAlgebraElement& rhs) const {
  MonoidAlgebraElement out = *this;
  out += rhs;
  return out;
}

MonoidAlgebraElement MonoidAlgebraElement::operator-(const MonoidAlgebraElement& rhs) const {
  MonoidAlgebraElement out = *this;
  out -= rhs;
  return out;
}

MonoidAlgebraElement MonoidAlgebraElement::operator-() const {
  MonoidAlgebraElement out(desc_);
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
  return out;
}

MonoidAlgebraElement MonoidAlgebraElement::operator*(const MonoidAlgebraElement& rhs) const {
  require_same_algebra(desc_, rhs.desc_);
  MonoidAlgebraElement out(desc_);
  for (const auto& [r, a] : terms_)
    for (const auto& [s, b] : rhs.terms_) out.add_term(r * s, a * b);
  return out;
}

MonoidAlgebraElement MonoidAlgebraElement::scaled(const mpz_class& k) const {
  MonoidAlgebraElement out(desc_);
  if (k == 0) return out;
  for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * k);
  return out;
}

bool MonoidAlgebraElement::operator==(const MonoidAlgebraElement& rhs) const {
  return same_algebra(desc_, rhs.desc_) && terms_ == rhs.terms_;
}

std::string MonoidAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    if (first) {
      if (coeff < 0) os << '-';
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    os << abs(coeff) << "*[" << key.to_string() << ']';
    first = false;
  }
  return os.str();
}

MonoidAlgebraElement teichmuller_symbol(const AlgebraElement& r) {
  return MonoidAlgebraElement::symbol(r);
}

MonoidAlgebraElement phi_shift(const MonoidAlgebraElement& x) {
  MonoidAlgebraElement::TermMap terms;
  for (const auto& [key, coeff] : x.terms()) terms[frobenius(key)] += coeff;
  return MonoidAlgebraElement::from_terms(x.algebra(), std::move(terms));
}

MonoidAlgebraElement pow(const MonoidAlgebraElement& x, unsigned long k) {
  MonoidAlgebraElement result =
      MonoidAlgebraElement::symbol(AlgebraElement::one(x.algebra()));
  MonoidAlgebraElement base = x;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

AlgebraElement augmentation_pi(const MonoidAlgebraElement& x) {
  AlgebraElement acc = AlgebraElement::zero(x.algebra());
  for (const auto& [key, coeff] : x.terms()) acc = acc + key.scaled(coeff);
  return acc;
}

MonoidAlgebraElement delta(const MonoidAlgebraElement& x) {
  const unsigned long p = x.algebra()->characteristic();
  MonoidAlgebraElement diff = phi_shift(x) - pow(x, p);
  MonoidAlgebraElement::TermMap terms;
  for (const auto& [key, coeff] : diff.terms()) {
    if (!mpz_divisible_ui_p(coeff.get_mpz_t(), p))
      throw InternalError("delta: coefficient not divisible by p (phi(x) == x^p mod p failed)");
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), coeff.get_mpz_t(), p);
    terms.emplace(key, std::move(q));
  }
  return MonoidAlgebraElement::from_terms(x.algebra(), std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const MonoidAlgebraElement& x) {
  return os << x.to_string();
}

}  // namespace witt
