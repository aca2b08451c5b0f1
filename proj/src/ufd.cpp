#include "cent2/ufd.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace cent2 {

struct ElementAccess {
  static Element make(Element::Value v) { return Element(std::move(v)); }
};

namespace {

Element make_int(std::int64_t v) { return ElementAccess::make(v); }
Element make_gauss(std::int64_t re, std::int64_t im) { return ElementAccess::make(Gaussian{re, im}); }

void trim(std::vector<std::int64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Element make_poly(std::int64_t p, std::vector<std::int64_t> c) {
  trim(c);
  return ElementAccess::make(Polynomial{p, std::move(c)});
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // p prime, a != 0 mod p. Extended Euclid on small integers.
  std::int64_t r0 = p, r1 = checked::floor_mod(a, p), s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw DomainError("coefficient is not invertible mod " + std::to_string(p));
  return checked::floor_mod(s0, p);
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<Int128>(a) * b) % p);
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b, bool subtract) {
  std::vector<std::int64_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t x = i < a.coeffs.size() ? a.coeffs[i] : 0;
    std::int64_t y = i < b.coeffs.size() ? b.coeffs[i] : 0;
    c[i] = checked::floor_mod(subtract ? x - y : x + y, a.p);
  }
  trim(c);
  return {a.p, std::move(c)};
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {a.p, {}};
  std::vector<std::int64_t> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      c[i + j] = (c[i + j] + mulmod(a.coeffs[i], b.coeffs[j], a.p)) % a.p;
    }
  }
  trim(c);
  return {a.p, std::move(c)};
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  const std::int64_t p = a.p;
  std::vector<std::int64_t> rem = a.coeffs;
  const int db = b.degree();
  if (static_cast<int>(rem.size()) - 1 < db) return {{p, {}}, a};
  std::vector<std::int64_t> quo(rem.size() - static_cast<std::size_t>(db), 0);
  const std::int64_t lead_inv = mod_inverse(b.coeffs.back(), p);
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    std::int64_t c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::int64_t q = mulmod(c, lead_inv, p);
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = checked::floor_mod(slot - mulmod(q, b.coeffs[static_cast<std::size_t>(j)], p), p);
    }
  }
  trim(quo);
  trim(rem);
  return {{p, std::move(quo)}, {p, std::move(rem)}};
}

Gaussian gauss_mul(const Gaussian& a, const Gaussian& b) {
  using namespace checked;
  return {sub(mul(a.re, b.re), mul(a.im, b.im)), add(mul(a.re, b.im), mul(a.im, b.re))};
}

// Nearest integer to n/d for d > 0.
std::int64_t round_div(std::int64_t n, std::int64_t d) {
  using namespace checked;
  return floor_div(add(mul(n, 2), d), mul(d, 2));
}

const char* kind_name(RingKind k) {
  switch (k) {
    case RingKind::Int: return "int";
    case RingKind::Gauss: return "gauss";
    case RingKind::Poly: return "poly";
  }
  return "?";
}

}  // namespace

// ------------------------------------------------------------------ counts

std::string to_string(Cardinality value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Cardinality checked_mul(Cardinality a, Cardinality b) {
  Cardinality r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("cardinality overflow");
  return r;
}

Cardinality checked_pow(Cardinality base, unsigned exponent) {
  Cardinality r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

std::int64_t neg(std::int64_t a) { return sub(0, a); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace checked

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BaseRing BaseRing::polynomials(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("polynomial ring needs a prime characteristic, got " + std::to_string(p));
  return {RingKind::Poly, p};
}

std::string BaseRing::name() const {
  if (kind == RingKind::Poly) return "poly/" + std::to_string(characteristic);
  return kind_name(kind);
}

// ----------------------------------------------------------------- Element

Element Element::integer(std::int64_t value) { return make_int(value); }

Element Element::gaussian(std::int64_t re, std::int64_t im) { return make_gauss(re, im); }

Element Element::polynomial(std::int64_t p, std::vector<std::int64_t> coeffs) {
  if (!is_prime(p)) throw DomainError("polynomial ring needs a prime characteristic, got " + std::to_string(p));
  for (auto& c : coeffs) c = checked::floor_mod(c, p);
  return make_poly(p, std::move(coeffs));
}

Element Element::constant(const BaseRing& ring, std::int64_t value) {
  switch (ring.kind) {
    case RingKind::Int: return make_int(value);
    case RingKind::Gauss: return make_gauss(value, 0);
    case RingKind::Poly: {
      std::int64_t c = checked::floor_mod(value, ring.characteristic);
      return make_poly(ring.characteristic, {c});
    }
  }
  throw TypeError("unknown ring");
}

BaseRing Element::ring() const {
  switch (kind()) {
    case RingKind::Int: return BaseRing::integers();
    case RingKind::Gauss: return BaseRing::gaussian();
    case RingKind::Poly: return {RingKind::Poly, std::get<Polynomial>(value_).p};
  }
  throw TypeError("unknown ring");
}

bool Element::is_zero() const {
  switch (kind()) {
    case RingKind::Int: return std::get<std::int64_t>(value_) == 0;
    case RingKind::Gauss: {
      const auto& z = std::get<Gaussian>(value_);
      return z.re == 0 && z.im == 0;
    }
    case RingKind::Poly: return std::get<Polynomial>(value_).coeffs.empty();
  }
  return false;
}

bool Element::is_one() const { return *this == one(ring()); }

bool Element::is_unit() const {
  switch (kind()) {
    case RingKind::Int: {
      auto v = std::get<std::int64_t>(value_);
      return v == 1 || v == -1;
    }
    case RingKind::Gauss: {
      const auto& z = std::get<Gaussian>(value_);
      return (z.re == 0 && (z.im == 1 || z.im == -1)) || (z.im == 0 && (z.re == 1 || z.re == -1));
    }
    case RingKind::Poly: return std::get<Polynomial>(value_).coeffs.size() == 1;
  }
  return false;
}

std::int64_t Element::as_integer() const {
  if (kind() != RingKind::Int) throw TypeError("expected an integer, got " + ring().name());
  return std::get<std::int64_t>(value_);
}

const Gaussian& Element::as_gaussian() const {
  if (kind() != RingKind::Gauss) throw TypeError("expected a Gaussian integer, got " + ring().name());
  return std::get<Gaussian>(value_);
}

const Polynomial& Element::as_polynomial() const {
  if (kind() != RingKind::Poly) throw TypeError("expected a polynomial, got " + ring().name());
  return std::get<Polynomial>(value_);
}

std::string Element::to_string() const {
  switch (kind()) {
    case RingKind::Int: return std::to_string(std::get<std::int64_t>(value_));
    case RingKind::Gauss: {
      const auto& z = std::get<Gaussian>(value_);
      if (z.im == 0) return std::to_string(z.re);
      std::string im = std::to_string(z.im) + "i";
      if (z.re == 0) return im;
      return std::to_string(z.re) + (z.im > 0 ? "+" : "") + im;
    }
    case RingKind::Poly: {
      const auto& f = std::get<Polynomial>(value_);
      if (f.coeffs.empty()) return "0";
      std::string out;
      for (int d = f.degree(); d >= 0; --d) {
        std::int64_t c = f.coeffs[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (d == 0 || c != 1) out += std::to_string(c);
        if (d >= 1) out += "x";
        if (d >= 2) out += "^" + std::to_string(d);
      }
      return out;
    }
  }
  return "?";
}

void require_same_ring(const Element& a, const Element& b) {
  if (a.ring() != b.ring()) {
    throw TypeError("mixed base rings: " + a.ring().name() + " and " + b.ring().name());
  }
}

Element Element::operator-() const {
  switch (kind()) {
    case RingKind::Int: return make_int(checked::neg(std::get<std::int64_t>(value_)));
    case RingKind::Gauss: {
      const auto& z = std::get<Gaussian>(value_);
      return make_gauss(checked::neg(z.re), checked::neg(z.im));
    }
    case RingKind::Poly: {
      const auto& f = std::get<Polynomial>(value_);
      return ElementAccess::make(poly_add({f.p, {}}, f, true));
    }
  }
  throw TypeError("unknown ring");
}

Element operator+(const Element& a, const Element& b) {
  require_same_ring(a, b);
  switch (a.kind()) {
    case RingKind::Int: return make_int(checked::add(a.as_integer(), b.as_integer()));
    case RingKind::Gauss: {
      const auto &x = a.as_gaussian(), &y = b.as_gaussian();
      return make_gauss(checked::add(x.re, y.re), checked::add(x.im, y.im));
    }
    case RingKind::Poly: return ElementAccess::make(poly_add(a.as_polynomial(), b.as_polynomial(), false));
  }
  throw TypeError("unknown ring");
}

Element operator-(const Element& a, const Element& b) {
  require_same_ring(a, b);
  switch (a.kind()) {
    case RingKind::Int: return make_int(checked::sub(a.as_integer(), b.as_integer()));
    case RingKind::Gauss: {
      const auto &x = a.as_gaussian(), &y = b.as_gaussian();
      return make_gauss(checked::sub(x.re, y.re), checked::sub(x.im, y.im));
    }
    case RingKind::Poly: return ElementAccess::make(poly_add(a.as_polynomial(), b.as_polynomial(), true));
  }
  throw TypeError("unknown ring");
}

Element operator*(const Element& a, const Element& b) {
  require_same_ring(a, b);
  switch (a.kind()) {
    case RingKind::Int: return make_int(checked::mul(a.as_integer(), b.as_integer()));
    case RingKind::Gauss: {
      auto z = gauss_mul(a.as_gaussian(), b.as_gaussian());
      return make_gauss(z.re, z.im);
    }
    case RingKind::Poly: return ElementAccess::make(poly_mul(a.as_polynomial(), b.as_polynomial()));
  }
  throw TypeError("unknown ring");
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (auto c = a.value_.index() <=> b.value_.index(); c != 0) return c;
  switch (a.kind()) {
    case RingKind::Int: {
      auto x = a.as_integer(), y = b.as_integer();
      auto ax = x < 0 ? -static_cast<Int128>(x) : x;
      auto ay = y < 0 ? -static_cast<Int128>(y) : y;
      if (auto c = ax <=> ay; c != 0) return c;
      return x <=> y;
    }
    case RingKind::Gauss: {
      const auto &x = a.as_gaussian(), &y = b.as_gaussian();
      auto nx = static_cast<Int128>(x.re) * x.re + static_cast<Int128>(x.im) * x.im;
      auto ny = static_cast<Int128>(y.re) * y.re + static_cast<Int128>(y.im) * y.im;
      if (auto c = nx <=> ny; c != 0) return c;
      if (auto c = x.re <=> y.re; c != 0) return c;
      return x.im <=> y.im;
    }
    case RingKind::Poly: {
      const auto &x = a.as_polynomial(), &y = b.as_polynomial();
      if (auto c = x.p <=> y.p; c != 0) return c;
      if (auto c = x.degree() <=> y.degree(); c != 0) return c;
      for (int d = x.degree(); d >= 0; --d) {
        auto i = static_cast<std::size_t>(d);
        if (auto c = x.coeffs[i] <=> y.coeffs[i]; c != 0) return c;
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

// --------------------------------------------------------- Euclidean layer

DivMod divmod(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw DomainError("division by zero");
  switch (a.kind()) {
    case RingKind::Int: {
      auto x = a.as_integer(), y = b.as_integer();
      if (x == std::numeric_limits<std::int64_t>::min() && y == -1) {
        throw OverflowError("integer overflow in division");
      }
      return {make_int(x / y), make_int(x % y)};
    }
    case RingKind::Gauss: {
      using namespace checked;
      const auto &x = a.as_gaussian(), &y = b.as_gaussian();
      std::int64_t n = norm(y);
      std::int64_t nr = add(mul(x.re, y.re), mul(x.im, y.im));
      std::int64_t ni = sub(mul(x.im, y.re), mul(x.re, y.im));
      Gaussian q{round_div(nr, n), round_div(ni, n)};
      Gaussian qb = gauss_mul(q, y);
      return {make_gauss(q.re, q.im), make_gauss(sub(x.re, qb.re), sub(x.im, qb.im))};
    }
    case RingKind::Poly: {
      auto [q, r] = poly_divmod(a.as_polynomial(), b.as_polynomial());
      return {ElementAccess::make(std::move(q)), ElementAccess::make(std::move(r))};
    }
  }
  throw TypeError("unknown ring");
}

bool divides(const Element& d, const Element& a) {
  require_same_ring(d, a);
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).remainder.is_zero();
}

Element exact_div(const Element& a, const Element& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError(b.to_string() + " does not divide " + a.to_string());
  return q;
}

Associate normalize_associate(const Element& a) {
  const BaseRing ring = a.ring();
  if (a.is_zero()) return {Element::one(ring), a};
  switch (a.kind()) {
    case RingKind::Int:
      if (a.as_integer() < 0) return {make_int(-1), -a};
      return {make_int(1), a};
    case RingKind::Gauss: {
      // Candidates w = unit^{-1} in the order 1, -i, -1, i.
      static const std::array<Gaussian, 4> rotations{{{1, 0}, {0, -1}, {-1, 0}, {0, 1}}};
      static const std::array<Gaussian, 4> units{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
      const auto& z = a.as_gaussian();
      for (std::size_t i = 0; i < 4; ++i) {
        Gaussian c = gauss_mul(z, rotations[i]);
        if (c.re > 0 && c.im >= 0) return {make_gauss(units[i].re, units[i].im), make_gauss(c.re, c.im)};
      }
      throw DomainError("no first-quadrant associate");  // unreachable for z != 0
    }
    case RingKind::Poly: {
      const auto& f = a.as_polynomial();
      std::int64_t lead = f.coeffs.back();
      std::int64_t inv = mod_inverse(lead, f.p);
      std::vector<std::int64_t> c(f.coeffs);
      for (auto& x : c) x = mulmod(x, inv, f.p);
      return {make_poly(f.p, {lead}), make_poly(f.p, std::move(c))};
    }
  }
  throw TypeError("unknown ring");
}

Element normalize(const Element& a) { return normalize_associate(a).canonical; }

bool associates(const Element& a, const Element& b) { return normalize(a) == normalize(b); }

Element unit_inverse(const Element& unit) {
  if (!unit.is_unit()) throw DomainError(unit.to_string() + " is not a unit");
  switch (unit.kind()) {
    case RingKind::Int: return unit;
    case RingKind::Gauss: {
      const auto& z = unit.as_gaussian();
      return make_gauss(z.re, -z.im);
    }
    case RingKind::Poly: {
      const auto& f = unit.as_polynomial();
      return make_poly(f.p, {mod_inverse(f.coeffs[0], f.p)});
    }
  }
  throw TypeError("unknown ring");
}

Element gcd(const Element& a, const Element& b) {
  require_same_ring(a, b);
  Element x = a, y = b;
  while (!y.is_zero()) {
    Element r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return normalize(x);
}

Element gcd(std::span<const Element> elements) {
  if (elements.empty()) throw DomainError("gcd of an empty list");
  Element g = normalize(elements[0]);
  for (std::size_t i = 1; i < elements.size(); ++i) g = gcd(g, elements[i]);
  return g;
}

Element gcd(std::initializer_list<Element> elements) {
  return gcd(std::span<const Element>(elements.begin(), elements.size()));
}

Bezout extended_gcd(const Element& a, const Element& b) {
  require_same_ring(a, b);
  const BaseRing ring = a.ring();
  Element r0 = a, r1 = b;
  Element s0 = Element::one(ring), s1 = Element::zero(ring);
  Element t0 = Element::zero(ring), t1 = Element::one(ring);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Element s2 = s0 - q * s1;
    Element t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  auto [unit, canonical] = normalize_associate(r0);
  Element inv = unit_inverse(unit);
  return {canonical, s0 * inv, t0 * inv};
}

Element power(const Element& base, int exponent) {
  if (exponent < 0) throw DomainError("negative exponent");
  Element r = Element::one(base.ring());
  for (int i = 0; i < exponent; ++i) r = r * base;
  return r;
}

Element Factorization::expand() const {
  Element r = unit;
  for (const auto& pp : factors) r = r * power(pp.prime, pp.exponent);
  return r;
}

std::int64_t norm(const Gaussian& z) {
  using namespace checked;
  return add(mul(z.re, z.re), mul(z.im, z.im));
}

std::uint64_t quotient_size(const Element& k) {
  if (k.is_zero()) throw DomainError("R/<0> is infinite");
  switch (k.kind()) {
    case RingKind::Int: {
      auto v = k.as_integer();
      if (v == std::numeric_limits<std::int64_t>::min()) throw OverflowError("modulus too large");
      return static_cast<std::uint64_t>(v < 0 ? -v : v);
    }
    case RingKind::Gauss: return static_cast<std::uint64_t>(norm(k.as_gaussian()));
    case RingKind::Poly: {
      const auto& f = k.as_polynomial();
      std::uint64_t r = 1;
      for (int i = 0; i < f.degree(); ++i) r = checked::mul(r, static_cast<std::uint64_t>(f.p));
      return r;
    }
  }
  throw TypeError("unknown ring");
}

// ---------------------------------------------------------- factorization

namespace {

// Strips every factor `prime` from `rest`, returning the multiplicity.
int strip(Element& rest, const Element& prime) {
  int e = 0;
  while (true) {
    auto [q, r] = divmod(rest, prime);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++e;
  }
  return e;
}

std::vector<std::pair<std::int64_t, int>> factor_integer(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Factorization factor_int(const Element& k) {
  std::int64_t v = k.as_integer();
  Factorization f{make_int(v < 0 ? -1 : 1), {}};
  if (v == std::numeric_limits<std::int64_t>::min()) throw OverflowError("cannot factor INT64_MIN");
  for (auto [p, e] : factor_integer(v < 0 ? -v : v)) f.factors.push_back({make_int(p), e});
  return f;
}

Factorization factor_gauss(const Element& k) {
  Element rest = k;
  std::vector<PrimePower> factors;
  for (auto [p, e] : factor_integer(norm(k.as_gaussian()))) {
    (void)e;
    if (p == 2) {
      Element pi = make_gauss(1, 1);
      factors.push_back({pi, strip(rest, pi)});
    } else if (p % 4 == 3) {
      Element pi = make_gauss(p, 0);
      factors.push_back({pi, strip(rest, pi)});
    } else {
      std::int64_t root = 1;
      while (mulmod(root, root, p) != p - 1) ++root;
      Element pi = gcd(make_gauss(p, 0), make_gauss(root, 1));
      const auto& z = pi.as_gaussian();
      Element conj = normalize(make_gauss(z.re, -z.im));
      for (const Element& q : {pi, conj}) {
        int m = strip(rest, q);
        if (m > 0) factors.push_back({q, m});
      }
    }
  }
  if (!rest.is_unit()) throw DomainError("Gaussian factorization left a non-unit cofactor");
  std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) { return x.prime < y.prime; });
  return {rest, std::move(factors)};
}

Factorization factor_poly(const Element& k) {
  auto [unit, rest] = normalize_associate(k);
  const std::int64_t p = k.as_polynomial().p;
  std::vector<PrimePower> factors;
  // Trial division by monic polynomials of increasing degree: any candidate
  // that still divides is irreducible because smaller factors are gone.
  for (int d = 1; 2 * d <= rest.as_polynomial().degree(); ++d) {
    std::vector<std::int64_t> low(static_cast<std::size_t>(d), 0);
    while (true) {
      std::vector<std::int64_t> c = low;
      c.push_back(1);
      Element cand = make_poly(p, std::move(c));
      int e = strip(rest, cand);
      if (e > 0) factors.push_back({cand, e});
      if (2 * d > rest.as_polynomial().degree()) break;
      std::size_t i = 0;
      while (i < low.size() && ++low[i] == p) low[i++] = 0;
      if (i == low.size()) break;
    }
  }
  if (rest.as_polynomial().degree() >= 1) {
    auto it = std::find_if(factors.begin(), factors.end(), [&](const auto& f) { return f.prime == rest; });
    if (it != factors.end()) {
      ++it->exponent;
    } else {
      factors.push_back({rest, 1});
    }
  }
  std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) { return x.prime < y.prime; });
  return {unit, std::move(factors)};
}

}  // namespace

Factorization factor(const Element& k) {
  if (k.is_zero()) throw DomainError("cannot factor zero");
  switch (k.kind()) {
    case RingKind::Int: return factor_int(k);
    case RingKind::Gauss: return factor_gauss(k);
    case RingKind::Poly: return factor_poly(k);
  }
  throw TypeError("unknown ring");
}

}  // namespace cent2
