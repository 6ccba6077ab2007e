#pragma once

#include <cstdint>
#include <vector>

#include "qlab/gf.hpp"
#include "qlab/perm_group.hpp"

namespace qlab {

/// Distinct parameters (d,q) in {(2,2),(2,3)} are rejected: those linear
/// groups fall outside the doubly transitive family under study.
class ExcludedParameters : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Canonical enumeration of the projective points of F_q^d: each line is
/// represented by its vector with first nonzero coordinate 1, listed in
/// ascending lexicographic order of the full coordinate tuple.
std::vector<std::vector<FieldElem>> projective_points(const FieldCtx& ctx, unsigned d);

/// The permutation image of SL(d,q) (standard transvection generators) on
/// canonicalized projective points. Scalars act trivially, so this is the
/// natural PSL(d,q) action of degree (q^d-1)/(q-1).
PermGroup psl_action(unsigned d, unsigned q, std::uint32_t degree_bound = 10000);

/// |PSL(d,q)| = q^(d(d-1)/2) * prod_{i=2..d} (q^i - 1) / gcd(d, q-1).
std::uint64_t psl_order(unsigned d, unsigned q);

/// Stabilizer of the point [1:0:...:0] in psl_action has trivial center.
bool psl_stabilizer_center_trivial(unsigned d, unsigned q,
                                   std::size_t cap = kDefaultElementCap);

struct PsuClassRow {
  std::uint64_t centralizer_size = 0;
  std::uint64_t class_size = 0;
};

struct PsuClassTable {
  unsigned q = 0;
  unsigned d = 0;  // gcd(3, q+1)
  std::uint64_t group_order = 0;
  std::vector<PsuClassRow> rows;
  bool any_class_of_degree_size = false;  // some class size equals q^3+1
};

/// Evaluates the eight centralizer-size formulas for PSU(3,q) and the
/// derived class sizes; purely arithmetic, no group is constructed.
/// Requires q >= 3.
PsuClassTable psu_class_size_table(unsigned q);

/// The diagonal generator d(lambda) of the Ree stabilizer inside SL(7,q),
/// q = 3^(2d+1): exponents (1, e-1, -e+2, 0, e-2, -e+1, -1) with
/// e = 3^(d+1). Determinant 1 by construction.
FqMatrix ree_diag(const FieldCtx& ctx, FieldElem lambda);

/// The two fixed unitriangular 7x7 generators of the Ree stabilizer,
/// entries in the prime subfield of a characteristic-3 context.
std::pair<FqMatrix, FqMatrix> ree_fixed_matrices(const FieldCtx& ctx);

/// Breadth-first product closure of invertible matrices with a hashed
/// element set. The resulting element list is sorted by entry bytes, so
/// the set is deterministic regardless of generator order.
class MatrixGroupClosure {
 public:
  MatrixGroupClosure(std::vector<FqMatrix> generators, std::size_t cap);

  std::uint64_t order() const { return static_cast<std::uint64_t>(elements_.size()); }
  const std::vector<FqMatrix>& generators() const { return generators_; }
  const std::vector<FqMatrix>& elements() const { return elements_; }
  bool contains(const FqMatrix& m) const;

 private:
  std::vector<FqMatrix> generators_;
  std::vector<FqMatrix> elements_;
};

/// Only the identity commutes with every generator (sufficient: the
/// generators generate).
bool closure_center_trivial(const MatrixGroupClosure& closure);

}  // namespace qlab
