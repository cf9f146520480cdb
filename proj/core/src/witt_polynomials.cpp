#include "witt/witt_polynomials.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "witt/errors.hpp"
#include "witt/parser.hpp"

namespace witt {

bool PolyTermOrder::operator()(const std::vector<unsigned>& a,
                               const std::vector<unsigned>& b) const {
  const unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
  const unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
  if (da != db) return da < db;
  return a > b;  // within a degree, lexicographically greater vector first
}

SparsePolynomial SparsePolynomial::constant(unsigned arity, const mpq_class& c) {
  SparsePolynomial out(arity);
  out.add_term(std::vector<unsigned>(arity, 0), c);
  return out;
}

SparsePolynomial SparsePolynomial::variable(unsigned arity, unsigned index) {
  if (index >= arity) throw std::invalid_argument("variable index out of range");
  SparsePolynomial out(arity);
  std::vector<unsigned> exponents(arity, 0);
  exponents[index] = 1;
  out.add_term(std::move(exponents), 1);
  return out;
}

void SparsePolynomial::add_term(std::vector<unsigned> exponents, const mpq_class& coeff) {
  if (exponents.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(exponents), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SparsePolynomial::is_integral() const {
  for (const auto& [exponents, coeff] : terms_)
    if (coeff.get_den() != 1) return false;
  return true;
}

unsigned SparsePolynomial::total_degree() const {
  unsigned deg = 0;
  for (const auto& [exponents, coeff] : terms_)
    deg = std::max(deg, static_cast<unsigned>(
                            std::accumulate(exponents.begin(), exponents.end(), 0u)));
  return deg;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& rhs) const {
  if (arity_ != rhs.arity_) throw std::invalid_argument("polynomial arity mismatch");
  SparsePolynomial out = *this;
  for (const auto& [exponents, coeff] : rhs.terms_) out.add_term(exponents, coeff);
  return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& rhs) const {
  if (arity_ != rhs.arity_) throw std::invalid_argument("polynomial arity mismatch");
  SparsePolynomial out = *this;
  for (const auto& [exponents, coeff] : rhs.terms_) out.add_term(exponents, -coeff);
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& rhs) const {
  if (arity_ != rhs.arity_) throw std::invalid_argument("polynomial arity mismatch");
  SparsePolynomial out(arity_);
  std::vector<unsigned> exponents(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (unsigned v = 0; v < arity_; ++v) exponents[v] = ea[v] + eb[v];
      out.add_term(exponents, ca * cb);
    }
  }
  return out;
}

SparsePolynomial SparsePolynomial::scaled(const mpq_class& c) const {
  SparsePolynomial out(arity_);
  if (c == 0) return out;
  for (const auto& [exponents, coeff] : terms_) out.add_term(exponents, coeff * c);
  return out;
}

SparsePolynomial SparsePolynomial::pow(unsigned long k) const {
  SparsePolynomial result = constant(arity_, 1);
  SparsePolynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {
mpz_class upow(unsigned base, unsigned exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}
}  // namespace

SparsePolynomial ghost_polynomial(unsigned p, unsigned i, unsigned family, unsigned n) {
  if (family > 1) throw std::invalid_argument("family must be 0 (x) or 1 (y)");
  if (i >= n) throw std::invalid_argument("ghost index out of range");
  const unsigned arity = 2 * n;
  SparsePolynomial out(arity);
  for (unsigned j = 0; j <= i; ++j) {
    std::vector<unsigned> exponents(arity, 0);
    exponents[family * n + j] = static_cast<unsigned>(upow(p, i - j).get_ui());
    out.add_term(std::move(exponents), mpq_class(upow(p, j)));
  }
  return out;
}

SparsePolynomial ghost_of(unsigned p, unsigned i, const std::vector<SparsePolynomial>& coords) {
  if (coords.size() <= i) throw std::invalid_argument("not enough coordinate polynomials");
  SparsePolynomial acc(coords[0].arity());
  for (unsigned j = 0; j <= i; ++j) {
    const unsigned long exp = upow(p, i - j).get_ui();
    acc = acc + coords[j].pow(exp).scaled(mpq_class(upow(p, j)));
  }
  return acc;
}

unsigned default_generation_limit(unsigned p) {
  if (p == 2 || p == 3) return 4;
  if (p == 5) return 3;
  if (p == 7) return 2;
  return 1;
}

WittPolynomialSet build_witt_polynomials(unsigned p, unsigned n, unsigned limit) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (limit == 0) limit = default_generation_limit(p);
  if (n > limit)
    throw BoundExceeded("witt polynomial generation for p=" + std::to_string(p) +
                        " is bounded at n=" + std::to_string(limit) + ", requested n=" +
                        std::to_string(n));
  WittPolynomialSet set;
  set.p = p;
  set.n = n;

  auto solve_level = [&](std::vector<SparsePolynomial>& coords, unsigned i,
                         const SparsePolynomial& ghost_combination) {
    SparsePolynomial numerator = ghost_combination;
    for (unsigned j = 0; j < i; ++j) {
      const unsigned long exp = upow(p, i - j).get_ui();
      numerator = numerator - coords[j].pow(exp).scaled(mpq_class(upow(p, j)));
    }
    SparsePolynomial poly = numerator.scaled(mpq_class(1, upow(p, i)));
    if (!poly.is_integral())
      throw InternalError("witt polynomial integrality violated at level " + std::to_string(i));
    coords.push_back(std::move(poly));
  };

  for (unsigned i = 0; i < n; ++i) {
    const SparsePolynomial gx = ghost_polynomial(p, i, 0, n);
    const SparsePolynomial gy = ghost_polynomial(p, i, 1, n);
    solve_level(set.sum, i, gx + gy);
    solve_level(set.product, i, gx * gy);
  }
  return set;
}

namespace {

void print_polynomial_line(std::ostream& os, char tag, unsigned i,
                           const SparsePolynomial& poly, unsigned n) {
  os << tag << ' ' << i << ':';
  if (poly.is_zero()) {
    os << " 0";
  } else {
    bool first = true;
    for (const auto& [exponents, coeff] : poly.terms()) {
      os << (first ? " " : " ; ");
      os << coeff.get_num().get_str();
      for (unsigned v = 0; v < exponents.size(); ++v) {
        if (exponents[v] == 0) continue;
        os << ' ' << (v < n ? 'x' : 'y') << (v < n ? v : v - n);
        if (exponents[v] > 1) os << '^' << exponents[v];
      }
      first = false;
    }
  }
  os << '\n';
}

}  // namespace

std::string to_exchange_format(const WittPolynomialSet& set) {
  std::ostringstream os;
  os << "witt-poly v1 p=" << set.p << " n=" << set.n << '\n';
  for (unsigned i = 0; i < set.n; ++i) print_polynomial_line(os, 'S', i, set.sum[i], set.n);
  for (unsigned i = 0; i < set.n; ++i) print_polynomial_line(os, 'P', i, set.product[i], set.n);
  return os.str();
}

namespace {

// Minimal cursor over the exchange text; reports absolute byte offsets.
struct ExchangeCursor {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos, message); }
  bool done() const { return pos >= text.size(); }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  void skip_spaces() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_word(const char* word) {
    std::size_t len = std::string_view(word).size();
    if (text.compare(pos, len, word) == 0) {
      pos += len;
      return true;
    }
    return false;
  }
  unsigned long read_unsigned() {
    if (!isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    unsigned long value = 0;
    while (isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
      ++pos;
    }
    return value;
  }
  mpz_class read_integer() {
    bool negative = consume('-');
    if (!isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::size_t start = pos;
    while (isdigit(static_cast<unsigned char>(peek()))) ++pos;
    mpz_class value(text.substr(start, pos - start));
    return negative ? mpz_class(-value) : value;
  }
};

}  // namespace

WittPolynomialSet parse_exchange_format(const std::string& text) {
  ExchangeCursor cur{text};
  if (!cur.consume_word("witt-poly v1 p=")) cur.fail("expected header 'witt-poly v1 p=...'");
  const unsigned p = static_cast<unsigned>(cur.read_unsigned());
  if (!cur.consume_word(" n=")) cur.fail("expected ' n=' in header");
  const unsigned n = static_cast<unsigned>(cur.read_unsigned());
  cur.expect('\n');
  if (n < 1) cur.fail("header needs n >= 1");

  WittPolynomialSet set;
  set.p = p;
  set.n = n;
  const unsigned arity = 2 * n;

  auto parse_line = [&](char tag, unsigned expect_index) {
    if (!cur.consume(tag)) cur.fail(std::string("expected '") + tag + "' line");
    cur.skip_spaces();
    const unsigned index = static_cast<unsigned>(cur.read_unsigned());
    if (index != expect_index) cur.fail("polynomial index out of order");
    cur.expect(':');
    SparsePolynomial poly(arity);
    cur.skip_spaces();
    if (cur.consume('0') && (cur.peek() == '\n' || cur.done())) {
      // zero polynomial
    } else {
      while (true) {
        const mpz_class coeff = cur.read_integer();
        std::vector<unsigned> exponents(arity, 0);
        cur.skip_spaces();
        while (cur.peek() == 'x' || cur.peek() == 'y') {
          const bool is_y = cur.peek() == 'y';
          ++cur.pos;
          const unsigned var = static_cast<unsigned>(cur.read_unsigned());
          if (var >= n) cur.fail("variable index out of range");
          unsigned exp = 1;
          if (cur.consume('^')) exp = static_cast<unsigned>(cur.read_unsigned());
          if (exp == 0) cur.fail("zero exponent is not written explicitly");
          exponents[(is_y ? n : 0) + var] += exp;
          cur.skip_spaces();
        }
        poly.add_term(std::move(exponents), mpq_class(coeff));
        cur.skip_spaces();
        if (!cur.consume(';')) break;
        cur.skip_spaces();
      }
    }
    if (!cur.done()) cur.expect('\n');
    return poly;
  };

  for (unsigned i = 0; i < n; ++i) set.sum.push_back(parse_line('S', i));
  for (unsigned i = 0; i < n; ++i) set.product.push_back(parse_line('P', i));
  if (!cur.done()) cur.fail("trailing content");
  return set;
}

WittPolynomialSet load_or_build(unsigned p, unsigned n, const std::string& cache_dir,
                                unsigned limit) {
  namespace fs = std::filesystem;
  fs::path path;
  if (!cache_dir.empty()) {
    path = fs::path(cache_dir) /
           ("witt-poly-v1-p" + std::to_string(p) + "-n" + std::to_string(n) + ".txt");
    std::ifstream in(path);
    if (in) {
      std::ostringstream buffer;
      buffer << in.rdbuf();
      try {
        WittPolynomialSet set = parse_exchange_format(buffer.str());
        if (set.p == p && set.n == n) return set;
      } catch (const ParseError&) {
        // corrupt cache entry: fall through and rebuild
      }
    }
  }
  WittPolynomialSet set = build_witt_polynomials(p, n, limit);
  if (!cache_dir.empty()) {
    std::error_code ec;
    fs::create_directories(fs::path(cache_dir), ec);
    std::ofstream out(path);
    if (out) out << to_exchange_format(set);
  }
  return set;
}

AlgebraElement evaluate_mod_p(const SparsePolynomial& poly,
                              const std::vector<AlgebraElement>& assignment) {
  if (assignment.size() != poly.arity())
    throw std::invalid_argument("assignment size != polynomial arity");
  const AlgebraPtr& desc = assignment[0].algebra();
  const unsigned p = desc->characteristic();
  AlgebraElement acc = AlgebraElement::zero(desc);
  for (const auto& [exponents, coeff] : poly.terms()) {
    if (coeff.get_den() != 1) throw InternalError("evaluating a non-integral coefficient");
    const unsigned c = static_cast<unsigned>(mpz_fdiv_ui(coeff.get_num().get_mpz_t(), p));
    if (c == 0) continue;
    AlgebraElement term = AlgebraElement::constant(desc, c);
    for (unsigned v = 0; v < exponents.size(); ++v) {
      if (exponents[v] == 0) continue;
      term = term * assignment[v].pow(exponents[v]);
    }
    acc = acc + term;
  }
  return acc;
}

namespace {
std::vector<AlgebraElement> backend_assignment(const WittPolynomialSet& set,
                                               const WittVector& a, const WittVector& b) {
  if (!same_algebra(a.algebra(), b.algebra()) || a.level() != b.level())
    throw DescriptorMismatch("witt vectors of different algebras or levels");
  if (a.level() != set.n || a.algebra()->characteristic() != set.p)
    throw DescriptorMismatch("polynomial set does not match (p, n)");
  std::vector<AlgebraElement> assignment;
  assignment.reserve(2 * set.n);
  for (unsigned i = 0; i < set.n; ++i) assignment.push_back(a.component(i));
  for (unsigned i = 0; i < set.n; ++i) assignment.push_back(b.component(i));
  return assignment;
}
}  // namespace

WittVector poly_backend_add(const WittPolynomialSet& set, const WittVector& a,
                            const WittVector& b) {
  const std::vector<AlgebraElement> assignment = backend_assignment(set, a, b);
  std::vector<AlgebraElement> components;
  components.reserve(set.n);
  for (unsigned i = 0; i < set.n; ++i)
    components.push_back(evaluate_mod_p(set.sum[i], assignment));
  return WittVector(a.algebra(), std::move(components));
}

WittVector poly_backend_mul(const WittPolynomialSet& set, const WittVector& a,
                            const WittVector& b) {
  const std::vector<AlgebraElement> assignment = backend_assignment(set, a, b);
  std::vector<AlgebraElement> components;
  components.reserve(set.n);
  for (unsigned i = 0; i < set.n; ++i)
    components.push_back(evaluate_mod_p(set.product[i], assignment));
  return WittVector(a.algebra(), std::move(components));
}

}  // namespace witt
