#pragma once

// Ground truth by enumeration. Nothing here uses the structural results:
// centralizers are found by testing AB = BA entry by entry, ideals by
// testing x*y = 0, and sums by forming every pairwise sum. Every enumeration
// is checked against an explicit Budget and refuses rather than truncates.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cent2/matrix.hpp"

namespace cent2::oracle {

/// R/<k> as addition and multiplication tables over residue indices.
class FiniteRing {
 public:
  static constexpr std::uint64_t kMaxSize = 1024;

  explicit FiniteRing(Context ctx);

  const Context& context() const { return ctx_; }
  std::uint32_t size() const { return n_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * n_ + b]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return sub_[a * n_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * n_ + b]; }

  std::uint32_t index(const Residue& r) const;
  std::uint32_t index(const Element& x) const;
  const Residue& residue(std::uint32_t i) const { return residues_[i]; }

 private:
  Context ctx_;
  std::uint32_t n_;
  std::vector<Residue> residues_;
  std::vector<std::uint16_t> add_, sub_, mul_;
};

using Key = std::uint64_t;
using IndexMat = std::array<std::uint32_t, 4>;  // e, f, g, h

/// Sorted, deduplicated set of 2x2 matrices over one ring of size n, stored
/// as keys ((e*n + f)*n + g)*n + h.
class MatrixSet {
 public:
  MatrixSet(const FiniteRing& ring, std::vector<Key> keys);

  std::size_t size() const { return keys_.size(); }
  const std::vector<Key>& keys() const { return keys_; }
  bool contains(Key key) const;
  bool contains(const Mat2<Residue>& a) const { return contains(key_of(a)); }
  std::vector<Mat2<Residue>> matrices() const;

  Key key_of(const Mat2<Residue>& a) const;
  Key key_of(const IndexMat& a) const;
  IndexMat unpack(Key key) const;

  bool subset_of(const MatrixSet& other) const;
  friend bool operator==(const MatrixSet& a, const MatrixSet& b) { return a.keys_ == b.keys_; }

 private:
  Context ctx_;
  std::uint64_t n_;
  std::vector<Key> keys_;
};

/// {A : A*B^ = B^*A}, by enumeration. Requires |R/<k>|^4 <= budget.cap.
MatrixSet brute_force_cen(const FiniteRing& ring, const Mat2<Residue>& bhat, const Budget& budget = {});

/// {vE + wC : v, w} for the base-ring centralizer of the lift b, or the full
/// matrix ring when b is scalar; formed from the tables.
MatrixSet s1_matrices(const FiniteRing& ring, const Mat2<Element>& b, const Budget& budget = {});

/// The four entry sets of S2, each found as {x : x*y = 0 for the relevant y}.
struct S2Entries {
  std::array<std::vector<std::uint32_t>, 4> entries;
  std::uint64_t size() const;
};

S2Entries extensional_s2(const FiniteRing& ring, const Mat2<Residue>& bhat);
MatrixSet s2_matrices(const FiniteRing& ring, const S2Entries& s2, const Budget& budget = {});

/// {A1 + A2 : A1 in s1, A2 in S2}. Requires |s1|*|S2| <= budget.cap.
MatrixSet sumset(const FiniteRing& ring, const MatrixSet& s1, const S2Entries& s2, const Budget& budget = {});

MatrixSet transpose(const FiniteRing& ring, const MatrixSet& set);

/// brute_force_cen(B^T) == brute_force_cen(B)^T.
bool transpose_check(const FiniteRing& ring, const Mat2<Residue>& bhat, const Budget& budget = {});

/// Integer lattice {X in M_n(Z) : BX = XB}, as rows of a Hermite normal form
/// over the flattened row-major n^2 coordinates.
struct IntKernelBasis {
  std::size_t n = 0;
  std::vector<MatN<std::int64_t>> basis;

  std::size_t rank() const { return basis.size(); }
  bool contains(const MatN<std::int64_t>& x) const;
};

IntKernelBasis int_commutant_basis(const MatN<std::int64_t>& b);

struct ReductionResult {
  bool inclusion_holds = false;
  bool strict = false;
  std::optional<MatN<Residue>> witness;  // in Cen(B^) but not in the left side
  std::uint64_t lhs_size = 0;
  std::uint64_t rhs_size = 0;
};

/// Theta(Cen(B)) + [A_ij] against Cen(B^) in M_n(Z/kZ), both enumerated.
/// Requires an integer context and k^(n^2) <= budget.cap.
ReductionResult commutant_reduction_check(const MatN<std::int64_t>& b, const Context& ctx, const Budget& budget = {});

/// Formula, predicates and set-level facts for one matrix, with a list of
/// every disagreement found.
struct InstanceCheck {
  Cardinality formula_count = 0;
  std::uint64_t oracle_count = 0;
  bool theta_predicate = false, theta_set = false;
  bool s2_predicate = false, s2_set = false;
  bool equal_predicate = false, equal_set = false;
  bool sufficient = false;
  bool pid_shortcut = false;
  bool sumset_matches = false;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

InstanceCheck check_instance(const FiniteRing& ring, const Mat2<Element>& b, const Budget& budget = {});

struct EquivCheck {
  bool degenerate = false;
  bool partition_ok = false;   // every class has exactly class_size members in Cen
  bool gamma_ok = false;       // classes map onto Cen(B') over R/<k/d>
  bool operations_ok = false;  // class sums and products do not depend on representatives
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

EquivCheck check_equivalence(const FiniteRing& ring, const Mat2<Element>& b, std::mt19937_64& rng, int trials = 200,
                             const Budget& budget = {});

struct CrtCheck {
  std::uint64_t full_count = 0;
  std::vector<std::uint64_t> factor_counts;
  bool product_ok = false;
  bool bijection_ok = false;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

CrtCheck check_crt(const Context& ctx, const Mat2<Element>& b, const Budget& budget = {});

/// field_centralizer's case parameterization against brute force over F_p.
struct FieldCheck {
  std::uint64_t oracle_count = 0;
  Cardinality expected = 0;
  bool elements_match = false;
};

FieldCheck check_field(std::int64_t p, const Mat2<Element>& b, const Budget& budget = {});

}  // namespace cent2::oracle
