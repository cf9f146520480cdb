#pragma once

#include <stdexcept>
#include <string>

#include "witt/monoid_algebra.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

// Syntax error with the byte offset of the first offending character.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// Element grammar (whitespace insignificant):
//   element := [sign] term (sign term)*
//   term    := integer '*' '[' field_elem ']' | '[' field_elem ']' | integer
// where a bare integer k denotes k*[1].  Field elements: decimal digits for
// prime fields, "[c0,c1,...]" for extensions, "(elem; elem; ...)" for
// products, all coefficients strictly in [0, p).
MonoidAlgebraElement parse_element(const std::string& src, const AlgebraPtr& desc);

// A single field element, entire input.
AlgebraElement parse_field_element(const std::string& src, const AlgebraPtr& desc);

// "(r0, r1, ..., r_{n-1})"; the level is the component count.
WittVector parse_witt_vector(const std::string& src, const AlgebraPtr& desc);

// Descriptor syntax "p=5,e=2,mod=[2,1,1]" (e defaults to 1, mod to the
// built-in table); product factors joined by ';'.
AlgebraPtr parse_descriptor(const std::string& src);

// One factor spec "e=2,mod=[1,1,1]" (mod optional) for a given p.
FieldFactor parse_factor_spec(const std::string& src, unsigned p);

}  // namespace witt
