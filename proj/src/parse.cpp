#include "cent2/parse.hpp"

#include <cctype>

namespace cent2 {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::int64_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int digit = text_[pos_] - '0';
      if (__builtin_mul_overflow(value, 10, &value) || __builtin_add_overflow(value, digit, &value)) {
        throw ParseError("integer literal out of range", start);
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  std::string_view consume_until(char c) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != c) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos_); }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Optional leading sign for the first term, mandatory +/- between terms.
// Returns 0 when no further term follows.
int term_sign(Cursor& in, bool first) {
  if (in.accept('+')) return 1;
  if (in.accept('-')) return -1;
  return first ? 1 : 0;
}

Element parse_int(Cursor& in) {
  int sign = in.accept('-') ? -1 : 1;
  return Element::integer(sign * in.number());
}

Element parse_gauss(Cursor& in) {
  std::int64_t re = 0, im = 0;
  bool first = true;
  while (true) {
    int sign = term_sign(in, first);
    if (sign == 0) break;
    if (in.peek() == 'i') in.fail("imaginary unit needs an explicit coefficient (write 1i)");
    std::int64_t c = checked::mul(sign, in.number());
    if (in.accept('i')) {
      im = checked::add(im, c);
    } else {
      re = checked::add(re, c);
    }
    first = false;
  }
  return Element::gaussian(re, im);
}

Element parse_poly(Cursor& in, std::int64_t p) {
  std::vector<std::int64_t> coeffs;
  bool first = true;
  while (true) {
    int sign = term_sign(in, first);
    if (sign == 0) break;
    std::int64_t c = 1;
    bool has_coeff = false;
    if (in.peek_digit()) {
      c = in.number() % p;
      has_coeff = true;
      in.accept('*');
    }
    std::size_t degree = 0;
    if (in.accept('x')) {
      degree = 1;
      if (in.accept('^')) degree = static_cast<std::size_t>(in.number());
      if (degree > 4096) in.fail("polynomial degree too large");
    } else if (!has_coeff) {
      in.fail("expected a polynomial term");
    }
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
    coeffs[degree] = checked::floor_mod(coeffs[degree] + sign * c, p);
    first = false;
  }
  return Element::polynomial(p, std::move(coeffs));
}

Element parse_element_at(Cursor& in, const BaseRing& ring) {
  switch (ring.kind) {
    case RingKind::Int: return parse_int(in);
    case RingKind::Gauss: return parse_gauss(in);
    case RingKind::Poly: return parse_poly(in, ring.characteristic);
  }
  in.fail("unknown ring");
}

void expect_end(Cursor& in) {
  if (!in.at_end()) in.fail("unexpected trailing input");
}

std::vector<std::vector<Element>> parse_rows(Cursor& in, const BaseRing& ring) {
  std::vector<std::vector<Element>> rows;
  in.expect('[');
  do {
    in.expect('[');
    std::vector<Element> row;
    do {
      row.push_back(parse_element_at(in, ring));
    } while (in.accept(','));
    in.expect(']');
    rows.push_back(std::move(row));
  } while (in.accept(','));
  in.expect(']');
  return rows;
}

}  // namespace

Element parse_element(std::string_view text, const BaseRing& ring) {
  Cursor in(text);
  Element x = parse_element_at(in, ring);
  expect_end(in);
  return x;
}

Context parse_ring(std::string_view text) {
  Cursor in(text);
  std::string_view kind = in.consume_until('/');
  if (!in.accept('/')) in.fail("expected '<ring>/<modulus>'");
  BaseRing ring;
  if (kind == "int") {
    ring = BaseRing::integers();
  } else if (kind == "gauss") {
    ring = BaseRing::gaussian();
  } else if (kind == "poly") {
    const std::size_t at = in.pos();
    std::int64_t p = in.number();
    if (!is_prime(p)) throw ParseError("characteristic " + std::to_string(p) + " is not prime", at);
    ring = BaseRing::polynomials(p);
    in.expect('/');
  } else {
    throw ParseError("unknown ring '" + std::string(kind) + "' (expected int, gauss or poly)", 0);
  }
  const std::size_t at = in.pos();
  Element k = parse_element_at(in, ring);
  expect_end(in);
  try {
    return make_context(ring, k);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), at);
  }
}

MatN<Element> parse_matrix(std::string_view text, const BaseRing& ring) {
  Cursor in(text);
  auto rows = parse_rows(in, ring);
  expect_end(in);
  std::vector<Element> entries;
  for (auto& row : rows) {
    if (row.size() != rows.size()) throw ParseError("matrix is not square", 0);
    for (auto& x : row) entries.push_back(std::move(x));
  }
  return MatN<Element>(rows.size(), std::move(entries));
}

Mat2<Element> parse_matrix2(std::string_view text, const BaseRing& ring) {
  MatN<Element> m = parse_matrix(text, ring);
  if (m.n() != 2) throw ParseError("expected a 2x2 matrix", 0);
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

}  // namespace cent2
