#include "cent2/quotient.hpp"

#include <algorithm>

namespace cent2 {

Context make_context(const BaseRing& ring, const Element& k) {
  if (k.ring() != ring) throw TypeError("modulus " + k.to_string() + " is not in " + ring.name());
  if (k.is_zero()) throw DomainError("modulus must be nonzero");
  if (k.is_unit()) throw DomainError("modulus must be a nonunit, got " + k.to_string());
  return Context(new QuotientContext(ring, normalize(k)));
}

Context make_context(const Element& k) { return make_context(k.ring(), k); }

QuotientContext::QuotientContext(BaseRing ring, Element modulus)
    : ring_(ring), modulus_(std::move(modulus)), factorization_(factor(modulus_)), size_(quotient_size(modulus_)) {
  if (ring_.kind == RingKind::Gauss) {
    // Lattice spanned by k = (a, b) and i*k = (-b, a). Its projection on the
    // imaginary axis is D*Z with D = gcd(a, b); s*b + t*a = D picks the
    // lattice vector (s*a - t*b, D). The real-axis sublattice is A*Z with
    // A*D = N(k).
    const auto& z = modulus_.as_gaussian();
    Bezout bz = extended_gcd(Element::integer(z.im), Element::integer(z.re));
    hnf_d_ = bz.gcd.as_integer();
    const std::int64_t s = bz.s.as_integer(), t = bz.t.as_integer();
    hnf_a_ = static_cast<std::int64_t>(size_) / hnf_d_;
    hnf_offset_ = checked::floor_mod(checked::sub(checked::mul(s, z.re), checked::mul(t, z.im)), hnf_a_);
  }
}

Element QuotientContext::canonical(const Element& x) const {
  if (x.ring() != ring_) throw TypeError("element " + x.to_string() + " is not in " + ring_.name());
  switch (ring_.kind) {
    case RingKind::Int: return Element::integer(checked::floor_mod(x.as_integer(), modulus_.as_integer()));
    case RingKind::Gauss: {
      using namespace checked;
      const auto& z = x.as_gaussian();
      std::int64_t q = floor_div(z.im, hnf_d_);
      std::int64_t re = sub(z.re, mul(q, hnf_offset_));
      std::int64_t im = sub(z.im, mul(q, hnf_d_));
      return Element::gaussian(floor_mod(re, hnf_a_), im);
    }
    case RingKind::Poly: return divmod(x, modulus_).remainder;
  }
  throw TypeError("unknown ring");
}

Residue QuotientContext::reduce(const Element& x) const { return Residue(shared_from_this(), canonical(x)); }

Residue QuotientContext::zero() const { return Residue(shared_from_this(), Element::zero(ring_)); }

Residue QuotientContext::one() const { return Residue(shared_from_this(), Element::one(ring_)); }

std::uint64_t QuotientContext::index_of(const Residue& r) const {
  if (!r.context().same_as(*this)) throw TypeError("residue belongs to a different quotient ring");
  const Element& x = r.lift();
  switch (ring_.kind) {
    case RingKind::Int: return static_cast<std::uint64_t>(x.as_integer());
    case RingKind::Gauss: {
      const auto& z = x.as_gaussian();
      return static_cast<std::uint64_t>(z.re) * static_cast<std::uint64_t>(hnf_d_) + static_cast<std::uint64_t>(z.im);
    }
    case RingKind::Poly: {
      const auto& f = x.as_polynomial();
      std::uint64_t idx = 0;
      for (int d = f.degree(); d >= 0; --d) {
        idx = idx * static_cast<std::uint64_t>(f.p) + static_cast<std::uint64_t>(f.coeffs[static_cast<std::size_t>(d)]);
      }
      return idx;
    }
  }
  throw TypeError("unknown ring");
}

Residue QuotientContext::at(std::uint64_t index) const {
  if (index >= size_) throw DomainError("residue index out of range");
  switch (ring_.kind) {
    case RingKind::Int: return Residue(shared_from_this(), Element::integer(static_cast<std::int64_t>(index)));
    case RingKind::Gauss: {
      auto d = static_cast<std::uint64_t>(hnf_d_);
      return Residue(shared_from_this(),
                     Element::gaussian(static_cast<std::int64_t>(index / d), static_cast<std::int64_t>(index % d)));
    }
    case RingKind::Poly: {
      const auto p = static_cast<std::uint64_t>(ring_.characteristic);
      std::vector<std::int64_t> c;
      for (std::uint64_t rest = index; rest > 0; rest /= p) c.push_back(static_cast<std::int64_t>(rest % p));
      return Residue(shared_from_this(), Element::polynomial(ring_.characteristic, std::move(c)));
    }
  }
  throw TypeError("unknown ring");
}

std::vector<Residue> QuotientContext::enumerate() const {
  std::vector<Residue> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(at(i));
  return out;
}

std::string QuotientContext::spec() const {
  switch (ring_.kind) {
    case RingKind::Int: return "int/" + modulus_.to_string();
    case RingKind::Gauss: return "gauss/" + modulus_.to_string();
    case RingKind::Poly: return "poly/" + std::to_string(ring_.characteristic) + "/" + modulus_.to_string();
  }
  return "?";
}

bool QuotientContext::same_as(const QuotientContext& other) const {
  return this == &other || (ring_ == other.ring_ && modulus_ == other.modulus_);
}

// ----------------------------------------------------------------- Residue

void require_same_context(const Residue& a, const Residue& b) {
  if (!a.context().same_as(b.context())) {
    throw TypeError("residues from " + a.context().spec() + " and " + b.context().spec());
  }
}

Residue Residue::operator-() const { return ctx_->reduce(-rep_); }

Residue operator+(const Residue& a, const Residue& b) {
  require_same_context(a, b);
  return a.ctx_->reduce(a.rep_ + b.rep_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_context(a, b);
  return a.ctx_->reduce(a.rep_ - b.rep_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_context(a, b);
  return a.ctx_->reduce(a.rep_ * b.rep_);
}

bool operator==(const Residue& a, const Residue& b) { return a.context().same_as(b.context()) && a.rep_ == b.rep_; }

// ------------------------------------------------------------------ ideals

Element PrincipalIdeal::base_generator() const { return gcd(generator.lift(), generator.context().modulus()); }

bool PrincipalIdeal::contains(const Residue& x) const {
  require_same_context(generator, x);
  return divides(base_generator(), x.lift());
}

std::vector<Residue> PrincipalIdeal::elements() const {
  const QuotientContext& ctx = generator.context();
  std::vector<bool> seen(ctx.size(), false);
  std::vector<Residue> out;
  for (const Residue& r : ctx.enumerate()) {
    Residue m = r * generator;
    auto idx = ctx.index_of(m);
    if (!seen[idx]) {
      seen[idx] = true;
      out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Residue& a, const Residue& b) { return ctx.index_of(a) < ctx.index_of(b); });
  return out;
}

bool PrincipalIdeal::is_whole_ring() const { return cardinality == generator.context().size(); }

PrincipalIdeal principal_ideal(const Residue& g) {
  const QuotientContext& ctx = g.context();
  Element base = gcd(g.lift(), ctx.modulus());
  return {g, ctx.size() / quotient_size(base)};
}

bool is_invertible(const Residue& r) { return gcd(r.lift(), r.context().modulus()).is_one(); }

std::optional<Residue> inverse(const Residue& r) {
  const QuotientContext& ctx = r.context();
  Bezout bz = extended_gcd(r.lift(), ctx.modulus());
  if (!bz.gcd.is_one()) return std::nullopt;
  return ctx.reduce(bz.s);
}

PrincipalIdeal annihilator(const Residue& r) {
  const QuotientContext& ctx = r.context();
  Element delta = gcd(r.lift(), ctx.modulus());
  return principal_ideal(ctx.reduce(exact_div(ctx.modulus(), delta)));
}

PrincipalIdeal ann_intersection(const Residue& x, const Residue& y) {
  require_same_context(x, y);
  return annihilator(x.context().reduce(gcd(x.lift(), y.lift())));
}

}  // namespace cent2
