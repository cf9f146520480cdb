#include "witt/parser.hpp"

#include <cctype>
#include <limits>

namespace witt {
namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos, message); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) fail(what);
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  unsigned long read_unsigned() {
    skip_ws();
    if (!at_digit()) fail("expected a number");
    unsigned long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (value > (std::numeric_limits<unsigned long>::max() - 9) / 10)
        fail("number too large");
      value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
      ++pos;
    }
    return value;
  }

  mpz_class read_mpz() {
    skip_ws();
    if (!at_digit()) fail("expected an integer");
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return mpz_class(text.substr(start, pos - start));
  }

  bool consume_word(const char* word) {
    skip_ws();
    const std::size_t len = std::char_traits<char>::length(word);
    if (text.compare(pos, len, word) == 0) {
      pos += len;
      return true;
    }
    return false;
  }
};

unsigned read_field_coefficient(Cursor& cur, unsigned p) {
  const std::size_t at = cur.pos;
  const unsigned long c = cur.read_unsigned();
  if (c >= p) throw ParseError(at, "field coefficient out of range [0, p)");
  return static_cast<unsigned>(c);
}

std::vector<unsigned> parse_factor_element(Cursor& cur, const FieldFactor& factor, unsigned p) {
  if (factor.e == 1) return {read_field_coefficient(cur, p)};
  cur.expect('[', "expected '[' starting a coefficient list");
  std::vector<unsigned> coeffs;
  coeffs.reserve(factor.e);
  coeffs.push_back(read_field_coefficient(cur, p));
  while (cur.consume(',')) coeffs.push_back(read_field_coefficient(cur, p));
  const std::size_t at = cur.pos;
  cur.expect(']', "expected ']' closing the coefficient list");
  if (coeffs.size() != factor.e)
    throw ParseError(at, "coefficient list needs exactly e=" + std::to_string(factor.e) +
                             " entries");
  return coeffs;
}

AlgebraElement parse_field_element_inner(Cursor& cur, const AlgebraPtr& desc) {
  const unsigned p = desc->characteristic();
  std::vector<std::vector<unsigned>> coeffs;
  if (desc->is_single_field()) {
    coeffs.push_back(parse_factor_element(cur, desc->factors()[0], p));
  } else {
    cur.expect('(', "expected '(' starting a product element");
    for (std::size_t f = 0; f < desc->factor_count(); ++f) {
      if (f) cur.expect(';', "expected ';' between product components");
      coeffs.push_back(parse_factor_element(cur, desc->factors()[f], p));
    }
    cur.expect(')', "expected ')' closing the product element");
  }
  return AlgebraElement::from_coefficients(desc, std::move(coeffs));
}

AlgebraElement parse_symbol_body(Cursor& cur, const AlgebraPtr& desc) {
  cur.expect('[', "expected '['");
  AlgebraElement r = parse_field_element_inner(cur, desc);
  cur.expect(']', "expected ']' closing the symbol");
  return r;
}

}  // namespace

MonoidAlgebraElement parse_element(const std::string& src, const AlgebraPtr& desc) {
  Cursor cur{src};
  MonoidAlgebraElement::TermMap terms;
  auto accumulate = [&](const AlgebraElement& key, const mpz_class& coeff) {
    auto [it, inserted] = terms.emplace(key, coeff);
    if (!inserted) it->second += coeff;
  };

  bool first = true;
  while (true) {
    int sign = 1;
    if (first) {
      if (cur.consume('-'))
        sign = -1;
      else
        cur.consume('+');
      if (cur.done()) cur.fail("empty element");
    } else {
      if (cur.done()) break;
      if (cur.consume('-'))
        sign = -1;
      else if (cur.consume('+'))
        sign = 1;
      else
        cur.fail("expected '+' or '-' between terms");
    }

    if (cur.at_digit()) {
      mpz_class coeff = cur.read_mpz();
      if (sign < 0) coeff = -coeff;
      if (cur.consume('*')) {
        accumulate(parse_symbol_body(cur, desc), coeff);
      } else {
        accumulate(AlgebraElement::one(desc), coeff);  // bare integer k is k*[1]
      }
    } else if (cur.peek() == '[') {
      accumulate(parse_symbol_body(cur, desc), mpz_class(sign));
    } else {
      cur.fail("expected a term");
    }
    first = false;
  }
  return MonoidAlgebraElement::from_terms(desc, std::move(terms));
}

AlgebraElement parse_field_element(const std::string& src, const AlgebraPtr& desc) {
  Cursor cur{src};
  AlgebraElement out = parse_field_element_inner(cur, desc);
  if (!cur.done()) cur.fail("trailing input after field element");
  return out;
}

WittVector parse_witt_vector(const std::string& src, const AlgebraPtr& desc) {
  Cursor cur{src};
  cur.expect('(', "expected '(' starting a witt vector");
  std::vector<AlgebraElement> components;
  components.push_back(parse_field_element_inner(cur, desc));
  while (cur.consume(',')) components.push_back(parse_field_element_inner(cur, desc));
  cur.expect(')', "expected ')' closing the witt vector");
  if (!cur.done()) cur.fail("trailing input after witt vector");
  return WittVector(desc, std::move(components));
}

FieldFactor parse_factor_spec(const std::string& src, unsigned p) {
  Cursor cur{src};
  FieldFactor factor;
  if (!cur.consume_word("e=")) cur.fail("expected 'e=<degree>'");
  factor.e = static_cast<unsigned>(cur.read_unsigned());
  if (cur.consume(',')) {
    if (!cur.consume_word("mod=[")) cur.fail("expected 'mod=[...]'");
    factor.modulus.clear();
    factor.modulus.push_back(static_cast<unsigned>(cur.read_unsigned()));
    while (cur.consume(',')) factor.modulus.push_back(static_cast<unsigned>(cur.read_unsigned()));
    cur.expect(']', "expected ']' closing the modulus");
  } else {
    factor.modulus = default_modulus(p, factor.e);
  }
  if (!cur.done()) cur.fail("trailing input after factor spec");
  return factor;
}

AlgebraPtr parse_descriptor(const std::string& src) {
  Cursor cur{src};
  if (!cur.consume_word("p=")) cur.fail("expected 'p=<prime>'");
  const unsigned p = static_cast<unsigned>(cur.read_unsigned());
  if (!is_prime_number(p)) throw std::invalid_argument("characteristic must be prime");
  std::vector<FieldFactor> factors;
  if (cur.done()) {
    factors.push_back(FieldFactor{1, default_modulus(p, 1)});
  } else {
    cur.expect(',', "expected ',' after the prime");
    while (true) {
      // factor spec: e=<n>[,mod=[...]]
      if (!cur.consume_word("e=")) cur.fail("expected 'e=<degree>'");
      FieldFactor factor;
      factor.e = static_cast<unsigned>(cur.read_unsigned());
      bool has_mod = false;
      {
        const std::size_t save = cur.pos;
        if (cur.consume(',')) {
          if (cur.consume_word("mod=[")) {
            has_mod = true;
            factor.modulus.push_back(static_cast<unsigned>(cur.read_unsigned()));
            while (cur.consume(','))
              factor.modulus.push_back(static_cast<unsigned>(cur.read_unsigned()));
            cur.expect(']', "expected ']' closing the modulus");
          } else {
            cur.pos = save;
          }
        }
      }
      if (!has_mod) factor.modulus = default_modulus(p, factor.e);
      factors.push_back(std::move(factor));
      if (!cur.consume(';')) break;
    }
    if (!cur.done()) cur.fail("trailing input after descriptor");
  }
  return AlgebraDescriptor::make(p, std::move(factors));
}

}  // namespace witt
