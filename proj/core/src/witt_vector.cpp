#include "witt/witt_vector.hpp"

#include <ostream>
#include <sstream>

namespace witt {

WittVector::WittVector(AlgebraPtr desc, std::vector<AlgebraElement> components)
    : desc_(std::move(desc)), components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("witt vector needs level n >= 1");
  for (const AlgebraElement& c : components_)
    if (!same_algebra(c.algebra(), desc_))
      throw DescriptorMismatch("witt vector component from a different algebra");
}

WittVector WittVector::zero(const AlgebraPtr& desc, unsigned n) {
  if (n < 1) throw std::invalid_argument("witt vector needs level n >= 1");
  std::vector<AlgebraElement> components(n, AlgebraElement::zero(desc));
  return WittVector(desc, std::move(components));
}

bool WittVector::is_zero() const {
  for (const AlgebraElement& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

WittVector WittVector::truncated(unsigned m) const {
  if (m < 1 || m > level()) throw std::invalid_argument("bad truncation length");
  return WittVector(desc_, std::vector<AlgebraElement>(components_.begin(),
                                                       components_.begin() + m));
}

bool WittVector::operator==(const WittVector& rhs) const {
  return same_algebra(desc_, rhs.desc_) && components_ == rhs.components_;
}

std::string WittVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << ", ";
    os << components_[i].to_string();
  }
  os << ')';
  return os.str();
}

std::string WittVector::to_json_string() const {
  // Component syntax uses only [](),;0-9 and spaces, so no escaping needed.
  std::ostringstream os;
  os << "{\"p\":" << desc_->characteristic() << ",\"n\":" << level() << ",\"components\":[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << ',';
    os << '"' << components_[i].to_string() << '"';
  }
  os << "]}";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const WittVector& w) {
  return os << w.to_string();
}

}  // namespace witt
