#include "cent2/matrix.hpp"

namespace cent2 {

namespace {

template <class T>
std::string render2(const Mat2<T>& m) {
  return "[[" + m.e.to_string() + "," + m.f.to_string() + "],[" + m.g.to_string() + "," + m.h.to_string() + "]]";
}

template <class T>
std::string renderN(const MatN<T>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.n(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (j) out += ",";
      out += m(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

Mat2<Element> identity2(const BaseRing& ring) {
  return {Element::one(ring), Element::zero(ring), Element::zero(ring), Element::one(ring)};
}

Mat2<Residue> identity2(const QuotientContext& ctx) { return {ctx.one(), ctx.zero(), ctx.zero(), ctx.one()}; }

Mat2<Residue> reduce(const QuotientContext& ctx, const Mat2<Element>& b) {
  return {ctx.reduce(b.e), ctx.reduce(b.f), ctx.reduce(b.g), ctx.reduce(b.h)};
}

Mat2<Element> lift(const Mat2<Residue>& b) { return {b.e.lift(), b.f.lift(), b.g.lift(), b.h.lift()}; }

std::string to_string(const Mat2<Element>& m) { return render2(m); }
std::string to_string(const Mat2<Residue>& m) { return render2(m); }

MatN<Residue> reduce(const QuotientContext& ctx, const MatN<Element>& b) {
  std::vector<Residue> c;
  c.reserve(b.entries().size());
  for (const auto& x : b.entries()) c.push_back(ctx.reduce(x));
  return MatN<Residue>(b.n(), std::move(c));
}

MatN<Element> to_elements(const MatN<std::int64_t>& b) {
  std::vector<Element> c;
  c.reserve(b.entries().size());
  for (auto x : b.entries()) c.push_back(Element::integer(x));
  return MatN<Element>(b.n(), std::move(c));
}

std::string to_string(const MatN<Element>& m) { return renderN(m); }
std::string to_string(const MatN<Residue>& m) { return renderN(m); }

}  // namespace cent2
