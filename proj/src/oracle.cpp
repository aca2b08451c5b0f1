#include "cent2/oracle.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "cent2/centralizer.hpp"
#include "cent2/containment.hpp"
#include "cent2/counting.hpp"

namespace cent2::oracle {

namespace {

std::uint64_t pow4(std::uint64_t n) { return checked::mul(checked::mul(n, n), checked::mul(n, n)); }

unsigned worker_count(const Budget& budget, std::uint64_t tasks) {
  unsigned t = budget.threads ? budget.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(tasks, 1)));
}

// Runs fn(begin, end, out) over contiguous blocks of [0, tasks) and
// concatenates the per-block outputs in block order.
template <class Fn>
std::vector<Key> run_blocks(std::uint64_t tasks, const Budget& budget, Fn fn) {
  const unsigned workers = worker_count(budget, tasks);
  std::vector<std::vector<Key>> parts(workers);
  if (workers == 1) {
    fn(0, tasks, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t begin = tasks * w / workers, end = tasks * (w + 1) / workers;
      pool.emplace_back([&, begin, end, w] { fn(begin, end, parts[w]); });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<Key> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

std::vector<Key> sorted_unique(std::vector<Key> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

IndexMat indices(const FiniteRing& ring, const Mat2<Residue>& a) {
  return {ring.index(a.e), ring.index(a.f), ring.index(a.g), ring.index(a.h)};
}

IndexMat mat_add(const FiniteRing& r, const IndexMat& a, const IndexMat& b) {
  return {r.add(a[0], b[0]), r.add(a[1], b[1]), r.add(a[2], b[2]), r.add(a[3], b[3])};
}

IndexMat mat_mul(const FiniteRing& r, const IndexMat& a, const IndexMat& b) {
  return {r.add(r.mul(a[0], b[0]), r.mul(a[1], b[2])), r.add(r.mul(a[0], b[1]), r.mul(a[1], b[3])),
          r.add(r.mul(a[2], b[0]), r.mul(a[3], b[2])), r.add(r.mul(a[2], b[1]), r.mul(a[3], b[3]))};
}

}  // namespace

FiniteRing::FiniteRing(Context ctx) : ctx_(std::move(ctx)) {
  if (ctx_->size() > kMaxSize) throw BudgetError("finite ring tables", ctx_->size(), kMaxSize);
  n_ = static_cast<std::uint32_t>(ctx_->size());
  residues_ = ctx_->enumerate();
  const std::size_t cells = static_cast<std::size_t>(n_) * n_;
  add_.resize(cells);
  sub_.resize(cells);
  mul_.resize(cells);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      const std::size_t at = static_cast<std::size_t>(i) * n_ + j;
      add_[at] = static_cast<std::uint16_t>(ctx_->index_of(residues_[i] + residues_[j]));
      sub_[at] = static_cast<std::uint16_t>(ctx_->index_of(residues_[i] - residues_[j]));
      mul_[at] = static_cast<std::uint16_t>(ctx_->index_of(residues_[i] * residues_[j]));
    }
  }
}

std::uint32_t FiniteRing::index(const Residue& r) const { return static_cast<std::uint32_t>(ctx_->index_of(r)); }

std::uint32_t FiniteRing::index(const Element& x) const { return index(ctx_->reduce(x)); }

MatrixSet::MatrixSet(const FiniteRing& ring, std::vector<Key> keys)
    : ctx_(ring.context()), n_(ring.size()), keys_(sorted_unique(std::move(keys))) {}

bool MatrixSet::contains(Key key) const { return std::binary_search(keys_.begin(), keys_.end(), key); }

Key MatrixSet::key_of(const IndexMat& a) const { return ((a[0] * n_ + a[1]) * n_ + a[2]) * n_ + a[3]; }

Key MatrixSet::key_of(const Mat2<Residue>& a) const {
  return key_of(IndexMat{static_cast<std::uint32_t>(ctx_->index_of(a.e)), static_cast<std::uint32_t>(ctx_->index_of(a.f)),
                         static_cast<std::uint32_t>(ctx_->index_of(a.g)), static_cast<std::uint32_t>(ctx_->index_of(a.h))});
}

IndexMat MatrixSet::unpack(Key key) const {
  IndexMat a{};
  for (int i = 3; i >= 0; --i) {
    a[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(key % n_);
    key /= n_;
  }
  return a;
}

std::vector<Mat2<Residue>> MatrixSet::matrices() const {
  std::vector<Mat2<Residue>> out;
  out.reserve(keys_.size());
  for (Key k : keys_) {
    IndexMat a = unpack(k);
    out.push_back({ctx_->at(a[0]), ctx_->at(a[1]), ctx_->at(a[2]), ctx_->at(a[3])});
  }
  return out;
}

bool MatrixSet::subset_of(const MatrixSet& other) const {
  return std::includes(other.keys_.begin(), other.keys_.end(), keys_.begin(), keys_.end());
}

MatrixSet brute_force_cen(const FiniteRing& ring, const Mat2<Residue>& bhat, const Budget& budget) {
  const std::uint32_t n = ring.size();
  require_budget("brute-force centralizer", pow4(n), budget);
  const auto [e, f, g, h] = indices(ring, bhat);
  const MatrixSet shape(ring, {});
  auto keys = run_blocks(n, budget, [&](std::uint64_t begin, std::uint64_t end, std::vector<Key>& out) {
    std::vector<std::uint32_t> bs, cs;
    for (auto a = static_cast<std::uint32_t>(begin); a < end; ++a) {
      for (std::uint32_t d = 0; d < n; ++d) {
        // A = [[a, b], [c, d]]. Entry (1,2) of AB and BA involves only b, and
        // entry (2,1) only c, so filter those first and test the rest on pairs.
        bs.clear();
        cs.clear();
        for (std::uint32_t b = 0; b < n; ++b)
          if (ring.add(ring.mul(a, f), ring.mul(b, h)) == ring.add(ring.mul(e, b), ring.mul(f, d))) bs.push_back(b);
        if (bs.empty()) continue;
        for (std::uint32_t c = 0; c < n; ++c)
          if (ring.add(ring.mul(c, e), ring.mul(d, g)) == ring.add(ring.mul(g, a), ring.mul(h, c))) cs.push_back(c);
        for (std::uint32_t b : bs) {
          for (std::uint32_t c : cs) {
            if (ring.add(ring.mul(a, e), ring.mul(b, g)) != ring.add(ring.mul(e, a), ring.mul(f, c))) continue;
            if (ring.add(ring.mul(c, f), ring.mul(d, h)) != ring.add(ring.mul(g, b), ring.mul(h, d))) continue;
            out.push_back(shape.key_of(IndexMat{a, b, c, d}));
          }
        }
      }
    }
  });
  return MatrixSet(ring, std::move(keys));
}

MatrixSet s1_matrices(const FiniteRing& ring, const Mat2<Element>& b, const Budget& budget) {
  const std::uint64_t n = ring.size();
  BaseCentralizer base = base_centralizer(b);
  std::vector<Key> keys;
  if (base.full_ring) {
    require_budget("S1 (full matrix ring)", pow4(n), budget);
    keys.resize(pow4(n));
    for (Key k = 0; k < keys.size(); ++k) keys[k] = k;
    return MatrixSet(ring, std::move(keys));
  }
  require_budget("S1 parameter pairs", n * n, budget);
  const MatrixSet shape(ring, {});
  const std::uint32_t one = ring.index(Element::one(b.e.ring()));
  const IndexMat id{one, 0, 0, one};
  const IndexMat c{ring.index(base.generator.e), ring.index(base.generator.f), ring.index(base.generator.g),
                   ring.index(base.generator.h)};
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t w = 0; w < n; ++w) {
      IndexMat a;
      for (std::size_t i = 0; i < 4; ++i) a[i] = ring.add(ring.mul(v, id[i]), ring.mul(w, c[i]));
      keys.push_back(shape.key_of(a));
    }
  }
  return MatrixSet(ring, std::move(keys));
}

std::uint64_t S2Entries::size() const {
  std::uint64_t s = 1;
  for (const auto& e : entries) s = checked::mul(s, static_cast<std::uint64_t>(e.size()));
  return s;
}

S2Entries extensional_s2(const FiniteRing& ring, const Mat2<Residue>& bhat) {
  const auto [e, f, g, h] = indices(ring, bhat);
  const std::uint32_t diff = ring.sub(e, h);
  auto killing = [&](std::uint32_t y, std::uint32_t z) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < ring.size(); ++x)
      if (ring.mul(x, y) == 0 && ring.mul(x, z) == 0) out.push_back(x);
    return out;
  };
  S2Entries s2;
  s2.entries[0] = killing(f, g);
  s2.entries[1] = killing(g, diff);
  s2.entries[2] = killing(f, diff);
  s2.entries[3] = s2.entries[0];
  return s2;
}

MatrixSet s2_matrices(const FiniteRing& ring, const S2Entries& s2, const Budget& budget) {
  require_budget("materialized S2", s2.size(), budget);
  const MatrixSet shape(ring, {});
  std::vector<Key> keys;
  keys.reserve(s2.size());
  for (auto x : s2.entries[0])
    for (auto y : s2.entries[1])
      for (auto z : s2.entries[2])
        for (auto w : s2.entries[3]) keys.push_back(shape.key_of(IndexMat{x, y, z, w}));
  return MatrixSet(ring, std::move(keys));
}

MatrixSet sumset(const FiniteRing& ring, const MatrixSet& s1, const S2Entries& s2, const Budget& budget) {
  require_budget("sumset S1 + S2", checked::mul(static_cast<std::uint64_t>(s1.size()), s2.size()), budget);
  const std::uint64_t n = ring.size();
  const std::uint64_t space = pow4(n);
  constexpr std::uint64_t kBitmapLimit = std::uint64_t{1} << 31;
  const auto& [x0, x1, x2, x3] = s2.entries;
  auto each_sum = [&](auto&& emit) {
    for (Key k : s1.keys()) {
      const IndexMat a = s1.unpack(k);
      for (auto p : x0) {
        const Key ke = ring.add(a[0], p);
        for (auto q : x1) {
          const Key kf = ke * n + ring.add(a[1], q);
          for (auto r : x2) {
            const Key kg = kf * n + ring.add(a[2], r);
            for (auto s : x3) emit(kg * n + ring.add(a[3], s));
          }
        }
      }
    }
  };
  std::vector<Key> keys;
  if (space <= kBitmapLimit) {
    std::vector<std::uint64_t> bits((space + 63) / 64, 0);
    each_sum([&](Key key) { bits[key >> 6] |= std::uint64_t{1} << (key & 63); });
    for (std::uint64_t w = 0; w < bits.size(); ++w)
      for (std::uint64_t word = bits[w]; word != 0; word &= word - 1)
        keys.push_back(w * 64 + static_cast<std::uint64_t>(__builtin_ctzll(word)));
  } else {
    each_sum([&](Key key) { keys.push_back(key); });
  }
  return MatrixSet(ring, std::move(keys));
}

MatrixSet transpose(const FiniteRing& ring, const MatrixSet& set) {
  std::vector<Key> keys;
  keys.reserve(set.size());
  for (Key k : set.keys()) {
    IndexMat a = set.unpack(k);
    keys.push_back(set.key_of(IndexMat{a[0], a[2], a[1], a[3]}));
  }
  return MatrixSet(ring, std::move(keys));
}

bool transpose_check(const FiniteRing& ring, const Mat2<Residue>& bhat, const Budget& budget) {
  return brute_force_cen(ring, cent2::transpose(bhat), budget) == transpose(ring, brute_force_cen(ring, bhat, budget));
}

// --- integer commutant -----------------------------------------------------

namespace {

using Row = std::vector<std::int64_t>;

void sub_multiple(Row& target, const Row& source, std::int64_t q) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] = checked::sub(target[i], checked::mul(q, source[i]));
}

// Unimodular row reduction of the first `cols` columns to echelon form.
// Returns the number of pivot rows.
std::size_t echelon(std::vector<Row>& rows, std::size_t cols, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || std::abs(rows[r][col]) < std::abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool cleared = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        sub_multiple(rows[r], rows[top], rows[r][col] / rows[top][col]);
        if (rows[r][col] != 0) cleared = false;
      }
      if (cleared) {
        if (pivots) pivots->push_back(col);
        ++top;
        break;
      }
    }
  }
  return top;
}

}  // namespace

IntKernelBasis int_commutant_basis(const MatN<std::int64_t>& b) {
  const std::size_t n = b.n();
  const std::size_t N = n * n;
  // Row j holds [L(E_j) | E_j] with L(X) = BX - XB and E_j the j-th unit matrix.
  std::vector<Row> rows(N, Row(2 * N, 0));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      Row& row = rows[p * n + q];
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
          std::int64_t v = 0;
          if (s == q) v = checked::add(v, b(r, p));
          if (r == p) v = checked::sub(v, b(q, s));
          row[r * n + s] = v;
        }
      }
      row[N + p * n + q] = 1;
    }
  }
  const std::size_t rank = echelon(rows, N);
  std::vector<Row> kernel;
  for (std::size_t r = rank; r < N; ++r) kernel.emplace_back(rows[r].begin() + static_cast<std::ptrdiff_t>(N), rows[r].end());

  std::vector<std::size_t> pivots;
  const std::size_t k = echelon(kernel, N, &pivots);
  kernel.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (kernel[i][pivots[i]] < 0)
      for (auto& x : kernel[i]) x = checked::neg(x);
    for (std::size_t above = 0; above < i; ++above)
      sub_multiple(kernel[above], kernel[i], checked::floor_div(kernel[above][pivots[i]], kernel[i][pivots[i]]));
  }
  IntKernelBasis out{n, {}};
  for (auto& row : kernel) out.basis.emplace_back(n, std::move(row));
  return out;
}

bool IntKernelBasis::contains(const MatN<std::int64_t>& x) const {
  if (x.n() != n) return false;
  Row v = x.entries();
  for (const auto& m : basis) {
    const Row& row = m.entries();
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    if (v[p] % row[p] != 0) return false;
    sub_multiple(v, row, v[p] / row[p]);
  }
  return std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
}

// --- n x n commutants modulo k --------------------------------------------

ReductionResult commutant_reduction_check(const MatN<std::int64_t>& b, const Context& ctx, const Budget& budget) {
  if (ctx->ring().kind != RingKind::Int) throw TypeError("the n x n inclusion check needs an integer context");
  const std::size_t n = b.n();
  const std::size_t N = n * n;
  const std::uint64_t q = ctx->size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < N; ++i) total = checked::mul(total, q);
  require_budget("M_n(R/<k>) enumeration", total, budget);

  const FiniteRing ring(ctx);
  using Digits = std::vector<std::uint32_t>;
  auto encode = [&](const Digits& x) {
    std::uint64_t key = 0;
    for (auto d : x) key = key * q + d;
    return key;
  };
  auto decode = [&](std::uint64_t key) {
    Digits x(N);
    for (std::size_t i = N; i-- > 0;) {
      x[i] = static_cast<std::uint32_t>(key % q);
      key /= q;
    }
    return x;
  };
  Digits bh(N);
  for (std::size_t i = 0; i < N; ++i) bh[i] = ring.index(Element::integer(b.entries()[i]));

  std::vector<bool> rhs(total, false);
  std::uint64_t rhs_size = 0;
  for (std::uint64_t key = 0; key < total; ++key) {
    const Digits x = decode(key);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        std::uint32_t bx = 0, xb = 0;
        for (std::size_t l = 0; l < n; ++l) {
          bx = ring.add(bx, ring.mul(bh[i * n + l], x[l * n + j]));
          xb = ring.add(xb, ring.mul(x[i * n + l], bh[l * n + j]));
        }
        ok = bx == xb;
      }
    }
    if (ok) {
      rhs[key] = true;
      ++rhs_size;
    }
  }

  std::vector<Digits> generators;
  for (const auto& m : int_commutant_basis(b).basis) {
    Digits g(N);
    for (std::size_t i = 0; i < N; ++i) g[i] = ring.index(Element::integer(m.entries()[i]));
    generators.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint32_t> kill;
      for (std::size_t l = 0; l < n; ++l) {
        if (l != j) kill.push_back(bh[j * n + l]);
        if (l != i) kill.push_back(bh[l * n + i]);
      }
      kill.push_back(ring.sub(bh[i * n + i], bh[j * n + j]));
      for (std::uint32_t x = 1; x < q; ++x) {
        if (std::all_of(kill.begin(), kill.end(), [&](std::uint32_t y) { return ring.mul(x, y) == 0; })) {
          Digits g(N, 0);
          g[i * n + j] = x;
          generators.push_back(std::move(g));
        }
      }
    }
  }

  // Additive closure: S + <g> is the union of the cosets S + c*g for c below
  // the order of g modulo S.
  std::vector<bool> lhs(total, false);
  std::vector<std::uint64_t> members{0};
  lhs[0] = true;
  for (const auto& g : generators) {
    if (lhs[encode(g)]) continue;
    const std::size_t base = members.size();
    Digits step = g;
    while (!lhs[encode(step)]) {
      for (std::size_t m = 0; m < base; ++m) {
        Digits x = decode(members[m]);
        for (std::size_t i = 0; i < N; ++i) x[i] = ring.add(x[i], step[i]);
        const std::uint64_t key = encode(x);
        if (!lhs[key]) {
          lhs[key] = true;
          members.push_back(key);
        }
      }
      for (std::size_t i = 0; i < N; ++i) step[i] = ring.add(step[i], g[i]);
    }
  }

  ReductionResult out;
  out.lhs_size = members.size();
  out.rhs_size = rhs_size;
  out.inclusion_holds = std::all_of(members.begin(), members.end(), [&](std::uint64_t key) { return rhs[key]; });
  out.strict = out.inclusion_holds && out.lhs_size < out.rhs_size;
  for (std::uint64_t key = 0; key < total && out.strict; ++key) {
    if (rhs[key] && !lhs[key]) {
      std::vector<Residue> entries;
      for (auto d : decode(key)) entries.push_back(ring.residue(d));
      out.witness.emplace(n, std::move(entries));
      break;
    }
  }
  return out;
}

// --- combined checks -------------------------------------------------------

InstanceCheck check_instance(const FiniteRing& ring, const Mat2<Element>& b, const Budget& budget) {
  const QuotientContext& ctx = *ring.context();
  const Mat2<Residue> bhat = reduce(ctx, b);
  InstanceCheck out;
  auto fail = [&](const std::string& what) { out.mismatches.push_back(what); };

  const MatrixSet cen = brute_force_cen(ring, bhat, budget);
  const MatrixSet s1 = s1_matrices(ring, b, budget);
  const S2Entries s2e = extensional_s2(ring, bhat);
  const MatrixSet s2 = s2_matrices(ring, s2e, budget);

  out.formula_count = count(ctx, b);
  out.oracle_count = cen.size();
  if (out.formula_count != out.oracle_count) fail("count " + to_string(out.formula_count) + " != oracle " + std::to_string(out.oracle_count));
  if (ctx.ring().kind == RingKind::Int && count_zk(b, ctx.modulus().as_integer()) != out.formula_count)
    fail("(kd)^2 disagrees with the general count");

  if (!s1.subset_of(cen)) fail("S1 not inside Cen");
  if (!s2.subset_of(cen)) fail("S2 not inside Cen");

  const Mat2<PrincipalIdeal> ideals = s2_ideals(bhat);
  const PrincipalIdeal* by_entry[4] = {&ideals.e, &ideals.f, &ideals.g, &ideals.h};
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::uint32_t> members;
    for (const auto& r : by_entry[i]->elements()) members.push_back(ring.index(r));
    std::sort(members.begin(), members.end());
    if (members != s2e.entries[i] || by_entry[i]->cardinality != members.size())
      fail("S2 ideal at entry " + std::to_string(i) + " differs from its annihilator set");
  }

  out.theta_predicate = cen_equals_theta(ctx, b);
  out.theta_set = cen.subset_of(s1);
  if (out.theta_predicate != out.theta_set) fail("S2 in S1: predicate disagrees with sets");
  out.s2_predicate = cen_equals_s2(bhat);
  out.s2_set = cen.subset_of(s2);
  if (out.s2_predicate != out.s2_set) fail("S1 in S2: predicate disagrees with sets");
  out.equal_predicate = s1_equals_s2(bhat);
  out.equal_set = s1 == s2;
  if (out.equal_predicate != out.equal_set) fail("S1 = S2: predicate disagrees with sets");
  out.sufficient = sufficient_invertible(bhat);
  if (out.sufficient && !out.theta_predicate) fail("an invertible entry did not force S2 in S1");
  out.pid_shortcut = cent2::pid_shortcut(ctx, b);
  if (out.pid_shortcut != out.theta_predicate) fail("scalar-or-coprime test disagrees with S2 in S1");

  out.sumset_matches = sumset(ring, s1, s2e, budget) == cen;
  if (!out.sumset_matches) fail("S1 + S2 != Cen");
  return out;
}

EquivCheck check_equivalence(const FiniteRing& ring, const Mat2<Element>& b, std::mt19937_64& rng, int trials,
                             const Budget& budget) {
  const Context& ctx = ring.context();
  const EquivClassStructure st = equiv_structure(ctx, b);
  const MatrixSet cen = brute_force_cen(ring, reduce(*ctx, b), budget);
  EquivCheck out;
  auto fail = [&](const std::string& what) { out.mismatches.push_back(what); };
  if (st.degenerate()) {
    out.degenerate = true;
    out.partition_ok = cen.size() == st.class_size;
    out.gamma_ok = out.operations_ok = true;
    if (!out.partition_ok) fail("single class does not cover Cen");
    return out;
  }

  const FiniteRing reduced(st.reduced_ctx);
  const MatrixSet reduced_shape(reduced, {});
  std::vector<std::uint32_t> down(ring.size());
  for (std::uint32_t i = 0; i < ring.size(); ++i) down[i] = reduced.index(ring.residue(i).lift());
  auto class_key = [&](const IndexMat& a) {
    return reduced_shape.key_of(IndexMat{down[a[0]], down[a[1]], down[a[2]], down[a[3]]});
  };

  std::map<Key, std::uint64_t> classes;
  for (Key k : cen.keys()) ++classes[class_key(cen.unpack(k))];
  out.partition_ok = classes.size() == st.class_count &&
                     std::all_of(classes.begin(), classes.end(), [&](const auto& kv) { return kv.second == st.class_size; });
  if (!out.partition_ok) fail("classes are not blocks of |<k/d>|^4 elements");

  std::vector<Key> images;
  for (const auto& kv : classes) images.push_back(kv.first);
  const MatrixSet reduced_cen = brute_force_cen(reduced, reduce(*st.reduced_ctx, st.reduced_matrix), budget);
  out.gamma_ok = MatrixSet(reduced, images) == reduced_cen;
  if (!out.gamma_ok) fail("classes do not correspond to Cen(B') over R/<k/d>");

  std::vector<std::uint32_t> ideal;
  for (std::uint32_t i = 0; i < ring.size(); ++i)
    if (down[i] == 0) ideal.push_back(i);
  auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  auto resample = [&](const IndexMat& a) {
    IndexMat out_a;
    for (std::size_t i = 0; i < 4; ++i) out_a[i] = ring.add(a[i], ideal[pick(ideal.size())]);
    return out_a;
  };
  out.operations_ok = true;
  for (int t = 0; t < trials; ++t) {
    const IndexMat a = cen.unpack(cen.keys()[pick(cen.size())]);
    const IndexMat c = cen.unpack(cen.keys()[pick(cen.size())]);
    const IndexMat a2 = resample(a), c2 = resample(c);
    if (!cen.contains(cen.key_of(a2)) || !cen.contains(cen.key_of(c2)) ||
        class_key(mat_add(ring, a, c)) != class_key(mat_add(ring, a2, c2)) ||
        class_key(mat_mul(ring, a, c)) != class_key(mat_mul(ring, a2, c2))) {
      out.operations_ok = false;
      fail("class operations depend on the representative");
      break;
    }
  }
  return out;
}

CrtCheck check_crt(const Context& ctx, const Mat2<Element>& b, const Budget& budget) {
  CrtCheck out;
  auto fail = [&](const std::string& what) { out.mismatches.push_back(what); };
  const CrtDecomposition dec = crt_decompose(ctx);
  const FiniteRing full(ctx);
  const Mat2<Residue> bhat = reduce(*ctx, b);
  const MatrixSet cen = brute_force_cen(full, bhat, budget);
  out.full_count = cen.size();

  std::vector<FiniteRing> parts;
  std::vector<MatrixSet> part_cens;
  Cardinality product = 1;
  for (const auto& f : dec.factors) {
    parts.emplace_back(f.ctx);
    part_cens.push_back(brute_force_cen(parts.back(), reduce(*f.ctx, b), budget));
    out.factor_counts.push_back(part_cens.back().size());
    product = checked_mul(product, part_cens.back().size());
  }
  out.product_ok = product == out.full_count;
  if (!out.product_ok) fail("centralizer counts are not multiplicative");

  out.bijection_ok = true;
  std::vector<Key> images;
  for (std::uint32_t i = 0; i < full.size(); ++i) {
    const Residue& r = full.residue(i);
    const auto split = dec.forward(r);
    if (!(dec.backward(split) == r)) out.bijection_ok = false;
    Key key = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) key = key * parts[p].size() + parts[p].index(split[p]);
    images.push_back(key);
  }
  if (sorted_unique(images).size() != full.size()) out.bijection_ok = false;
  for (std::uint32_t i = 0; i < full.size() && out.bijection_ok; ++i) {
    const std::uint32_t j = (i * 7 + 3) % full.size();
    const auto lhs = dec.forward(full.residue(i) * full.residue(j));
    const auto x = dec.forward(full.residue(i)), y = dec.forward(full.residue(j));
    for (std::size_t p = 0; p < parts.size(); ++p)
      if (!(lhs[p] == x[p] * y[p])) out.bijection_ok = false;
  }
  for (const auto& a : cen.matrices()) {
    const auto split = dec.forward(a);
    for (std::size_t p = 0; p < parts.size(); ++p)
      if (!part_cens[p].contains(split[p])) out.bijection_ok = false;
    if (!(dec.backward(split) == a)) out.bijection_ok = false;
  }
  if (!out.bijection_ok) fail("CRT maps are not mutually inverse ring isomorphisms");
  return out;
}

FieldCheck check_field(std::int64_t p, const Mat2<Element>& b, const Budget& budget) {
  const FieldCentralizer fc = field_centralizer(p, b);
  const FiniteRing ring(fc.ctx);
  const MatrixSet cen = brute_force_cen(ring, reduce(*fc.ctx, b), budget);
  const auto elements = fc.elements();
  std::vector<Key> keys;
  for (const auto& a : elements) keys.push_back(cen.key_of(a));
  const MatrixSet param(ring, keys);
  return {cen.size(), fc.cardinality, param == cen && param.size() == elements.size()};
}

}  // namespace cent2::oracle
