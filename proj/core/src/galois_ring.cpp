#include "witt/galois_ring.hpp"

#include <sstream>

namespace witt {

std::string GaloisRingElement::to_string() const {
  std::ostringstream os;
  auto print_factor = [&](const std::vector<mpz_class>& coeffs) {
    if (coeffs.size() == 1) {
      os << coeffs[0];
    } else {
      os << '[';
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ',';
        os << coeffs[i];
      }
      os << ']';
    }
  };
  if (coeffs_.size() == 1) {
    print_factor(coeffs_[0]);
  } else {
    os << '(';
    for (std::size_t f = 0; f < coeffs_.size(); ++f) {
      if (f) os << "; ";
      print_factor(coeffs_[f]);
    }
    os << ')';
  }
  return os.str();
}

GaloisRing::GaloisRing(AlgebraPtr desc, unsigned level)
    : desc_(std::move(desc)), level_(level) {
  if (level_ < 1) throw std::invalid_argument("galois ring needs level n >= 1");
  mpz_ui_pow_ui(pn_.get_mpz_t(), desc_->characteristic(), level_);
}

GaloisRingElement GaloisRing::zero() const {
  std::vector<std::vector<mpz_class>> coeffs;
  for (const FieldFactor& factor : desc_->factors())
    coeffs.emplace_back(factor.e, mpz_class(0));
  return GaloisRingElement(desc_, level_, std::move(coeffs));
}

GaloisRingElement GaloisRing::one() const {
  GaloisRingElement out = zero();
  for (auto& factor_coeffs : out.coeffs_) factor_coeffs[0] = 1;
  return out;
}

GaloisRingElement GaloisRing::from_coefficients(
    std::vector<std::vector<mpz_class>> coeffs) const {
  if (coeffs.size() != desc_->factor_count())
    throw std::invalid_argument("coefficient vector count != factor count");
  for (std::size_t f = 0; f < coeffs.size(); ++f) {
    if (coeffs[f].size() != desc_->factors()[f].e)
      throw std::invalid_argument("coefficient count != factor degree");
    for (mpz_class& c : coeffs[f]) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pn_.get_mpz_t());
  }
  return GaloisRingElement(desc_, level_, std::move(coeffs));
}

GaloisRingElement GaloisRing::lift(const AlgebraElement& r) const {
  if (!same_algebra(r.algebra(), desc_))
    throw DescriptorMismatch("element from a different algebra");
  GaloisRingElement out = zero();
  for (std::size_t f = 0; f < desc_->factor_count(); ++f)
    for (std::size_t i = 0; i < out.coeffs_[f].size(); ++i)
      out.coeffs_[f][i] = r.coefficients()[f][i];
  return out;
}

AlgebraElement GaloisRing::residue(const GaloisRingElement& y) const {
  require_mine(y);
  const unsigned p = desc_->characteristic();
  std::vector<std::vector<unsigned>> coeffs;
  coeffs.reserve(y.coeffs_.size());
  for (const auto& factor_coeffs : y.coeffs_) {
    std::vector<unsigned> reduced(factor_coeffs.size());
    for (std::size_t i = 0; i < factor_coeffs.size(); ++i)
      reduced[i] = static_cast<unsigned>(mpz_fdiv_ui(factor_coeffs[i].get_mpz_t(), p));
    coeffs.push_back(std::move(reduced));
  }
  return AlgebraElement::from_coefficients(desc_, std::move(coeffs));
}

namespace {
void require_same_ring(const GaloisRingElement& a, const GaloisRingElement& b) {
  if (a.level() != b.level() || !same_algebra(a.algebra(), b.algebra()))
    throw DescriptorMismatch("galois ring elements of different rings");
}
}  // namespace

void GaloisRing::require_mine(const GaloisRingElement& a) const {
  if (a.level() != level_ || !same_algebra(a.algebra(), desc_))
    throw DescriptorMismatch("element belongs to a different galois ring");
}

GaloisRingElement GaloisRing::add(const GaloisRingElement& a, const GaloisRingElement& b) const {
  require_mine(a);
  require_same_ring(a, b);
  GaloisRingElement out = a;
  for (std::size_t f = 0; f < out.coeffs_.size(); ++f)
    for (std::size_t i = 0; i < out.coeffs_[f].size(); ++i) {
      out.coeffs_[f][i] += b.coeffs_[f][i];
      mpz_fdiv_r(out.coeffs_[f][i].get_mpz_t(), out.coeffs_[f][i].get_mpz_t(), pn_.get_mpz_t());
    }
  return out;
}

GaloisRingElement GaloisRing::sub(const GaloisRingElement& a, const GaloisRingElement& b) const {
  return add(a, neg(b));
}

GaloisRingElement GaloisRing::neg(const GaloisRingElement& a) const {
  require_mine(a);
  GaloisRingElement out = a;
  for (auto& factor_coeffs : out.coeffs_)
    for (mpz_class& c : factor_coeffs) {
      c = -c;
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pn_.get_mpz_t());
    }
  return out;
}

GaloisRingElement GaloisRing::scalar_mul(const mpz_class& k, const GaloisRingElement& a) const {
  require_mine(a);
  mpz_class kr;
  mpz_fdiv_r(kr.get_mpz_t(), k.get_mpz_t(), pn_.get_mpz_t());
  GaloisRingElement out = a;
  for (auto& factor_coeffs : out.coeffs_)
    for (mpz_class& c : factor_coeffs) {
      c *= kr;
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pn_.get_mpz_t());
    }
  return out;
}

std::vector<mpz_class> GaloisRing::factor_mul(const std::vector<mpz_class>& a,
                                              const std::vector<mpz_class>& b,
                                              std::size_t f) const {
  const FieldFactor& factor = desc_->factors()[f];
  const unsigned e = factor.e;
  std::vector<mpz_class> prod(2 * e - 1, mpz_class(0));
  for (unsigned i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < e; ++j) prod[i + j] += a[i] * b[j];
  }
  // reduce by the monic modulus lifted verbatim to Z/p^n
  for (unsigned k = 2 * e - 2; k >= e && k < 2 * e; --k) {
    if (prod[k] == 0) continue;
    for (unsigned i = 0; i < e; ++i) prod[k - e + i] -= prod[k] * factor.modulus[i];
    prod[k] = 0;
  }
  std::vector<mpz_class> out(e);
  for (unsigned i = 0; i < e; ++i)
    mpz_fdiv_r(out[i].get_mpz_t(), prod[i].get_mpz_t(), pn_.get_mpz_t());
  return out;
}

GaloisRingElement GaloisRing::mul(const GaloisRingElement& a, const GaloisRingElement& b) const {
  require_mine(a);
  require_same_ring(a, b);
  GaloisRingElement out = a;
  for (std::size_t f = 0; f < out.coeffs_.size(); ++f)
    out.coeffs_[f] = factor_mul(a.coeffs_[f], b.coeffs_[f], f);
  return out;
}

GaloisRingElement GaloisRing::pow_qth(const GaloisRingElement& a) const {
  const unsigned p = desc_->characteristic();
  GaloisRingElement out = a;
  for (std::size_t f = 0; f < out.coeffs_.size(); ++f) {
    unsigned long q = 1;
    for (unsigned i = 0; i < desc_->factors()[f].e; ++i) q *= p;
    std::vector<mpz_class> result(out.coeffs_[f].size(), mpz_class(0));
    result[0] = 1;
    std::vector<mpz_class> base = a.coeffs_[f];
    while (q > 0) {
      if (q & 1) result = factor_mul(result, base, f);
      q >>= 1;
      if (q > 0) base = factor_mul(base, base, f);
    }
    out.coeffs_[f] = std::move(result);
  }
  return out;
}

GaloisRingElement GaloisRing::teichmuller(const AlgebraElement& r) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = tau_cache_.find(r);
    if (it != tau_cache_.end()) return it->second;
  }
  GaloisRingElement t = lift(r);
  for (unsigned k = 1; k < level_; ++k) t = pow_qth(t);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    tau_cache_.emplace(r, t);
  }
  return t;
}

WittVector GaloisRing::to_witt(const GaloisRingElement& y) const {
  require_mine(y);
  const unsigned p = desc_->characteristic();
  std::vector<AlgebraElement> components;
  components.reserve(level_);
  GaloisRingElement cur = y;
  mpz_class m = pn_;  // p^(n-k), the modulus the current residual is valid under
  for (unsigned k = 0; k < level_; ++k) {
    const AlgebraElement digit = residue(cur);
    components.push_back(frobenius_pow(digit, static_cast<long>(k)));
    const GaloisRingElement tau = teichmuller(digit);
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    for (std::size_t f = 0; f < cur.coeffs_.size(); ++f)
      for (std::size_t i = 0; i < cur.coeffs_[f].size(); ++i) {
        mpz_class diff = cur.coeffs_[f][i] - tau.coeffs_[f][i];
        if (!mpz_divisible_ui_p(diff.get_mpz_t(), p))
          throw InternalError("digit extraction: residual not divisible by p");
        mpz_divexact_ui(diff.get_mpz_t(), diff.get_mpz_t(), p);
        mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
        cur.coeffs_[f][i] = std::move(diff);
      }
  }
  return WittVector(desc_, std::move(components));
}

GaloisRingElement GaloisRing::from_witt(const WittVector& w) const {
  if (!same_algebra(w.algebra(), desc_) || w.level() != level_)
    throw DescriptorMismatch("witt vector does not match this ring");
  GaloisRingElement acc = zero();
  mpz_class pk = 1;
  for (unsigned k = 0; k < level_; ++k) {
    const AlgebraElement pre = frobenius_pow(w.component(k), -static_cast<long>(k));
    acc = add(acc, scalar_mul(pk, teichmuller(pre)));
    pk *= desc_->characteristic();
  }
  return acc;
}

WittVector GaloisRing::canonical_map(const MonoidAlgebraElement& x) const {
  if (!same_algebra(x.algebra(), desc_))
    throw DescriptorMismatch("element from a different algebra");
  GaloisRingElement acc = zero();
  for (const auto& [r, coeff] : x.terms())
    acc = add(acc, scalar_mul(coeff, teichmuller(r)));
  return to_witt(acc);
}

WittVector GaloisRing::witt_add(const WittVector& a, const WittVector& b) const {
  return to_witt(add(from_witt(a), from_witt(b)));
}

WittVector GaloisRing::witt_mul(const WittVector& a, const WittVector& b) const {
  return to_witt(mul(from_witt(a), from_witt(b)));
}

WittVector GaloisRing::witt_neg(const WittVector& a) const {
  return to_witt(neg(from_witt(a)));
}

WittVector canonical_map(const MonoidAlgebraElement& x, unsigned level) {
  return GaloisRing(x.algebra(), level).canonical_map(x);
}

}  // namespace witt
