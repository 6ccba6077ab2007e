#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlab/gf.hpp"
#include "qlab/perm.hpp"
#include "qlab/perm_group.hpp"

namespace qlab {

/// A partition of a quandle's underlying set that is compatible with both
/// translation actions (a congruence). block_of maps each element to a
/// block id; ids follow the smallest member of each block.
struct Congruence {
  std::vector<std::uint32_t> block_of;
  std::uint32_t block_count = 0;

  bool same(std::uint32_t a, std::uint32_t b) const { return block_of[a] == block_of[b]; }
  bool is_full() const { return block_count == 1; }
  bool is_equality() const { return block_count == block_of.size(); }
  std::vector<std::vector<std::uint32_t>> blocks() const;
};

struct ClassifierReport {
  std::size_t n = 0;
  std::string digest;
  bool connected = false;
  bool cyclic_type = false;
  unsigned transitivity_degree = 0;
  bool primitive = false;
  bool simple = false;
  std::uint64_t inner_order = 0;
  bool inner_frobenius = false;
};

/// A finite quandle as a validated n x n Cayley table. Convention: the
/// LEFT operation, table[x][y] = x * y with left self-distributivity
/// x * (y * z) = (x * y) * (x * z); row x is the translation phi_x,
/// y -> x * y. Rows are indexed by the acting element.
///
/// Immutable after construction.
class Quandle {
 public:
  /// Validates idempotence, row bijectivity, and left self-distributivity;
  /// throws ValidationError with a witness cell or triple on failure.
  static Quandle from_table(std::vector<std::vector<std::uint32_t>> table);

  std::size_t size() const { return n_; }

  std::uint32_t at(std::uint32_t x, std::uint32_t y) const { return table_[x * n_ + y]; }

  /// Row x as a permutation.
  Perm phi(std::uint32_t x) const;

  /// Group generated by all translations.
  PermGroup inner_group() const;

  /// Transitivity of the inner group on the underlying set.
  bool is_connected() const;

  /// Literal row-by-row test: every phi_x restricted to the complement of
  /// x is a single (n-1)-cycle. Defined for n >= 3 only; smaller sizes are
  /// rejected (the degenerate cycle reading is ambiguous).
  bool is_cyclic_type() const;

  /// Criterion imported from the literature: connected and phi_0 acts as
  /// an (n-1)-cycle. Must agree with is_cyclic_type on every input; the
  /// agreement is a tested property. n >= 3.
  bool cyclic_type_shortcut() const;

  unsigned transitivity_degree(unsigned cap = 5) const;

  /// Smallest congruence identifying a and b, by pair closure under both
  /// translation compatibilities.
  Congruence principal_congruence(std::uint32_t a, std::uint32_t b) const;

  /// No quotients except itself and the one-point quandle. Convention: the
  /// one-point quandle is NOT simple; the two-point trivial quandle IS
  /// (only trivial congruences exist at |X| = 2).
  bool is_simple() const;

  /// Quotient by a congruence; throws ValidationError (with a witness
  /// pair) if the partition is not a congruence.
  Quandle quotient(const Congruence& c) const;

  /// A table-preserving bijection onto other, or nullopt. Backtracking
  /// with row-cycle-structure pruning; the first bijection found wins.
  std::optional<std::vector<std::uint32_t>> isomorphism_to(const Quandle& other) const;

  bool is_isomorphic_to(const Quandle& other) const { return isomorphism_to(other).has_value(); }

  /// Whether the stabilizer of x in the inner group is exactly the cyclic
  /// group on phi_x (order comparison plus membership). Requires a
  /// cyclic-type quandle.
  bool stabilizer_generated_by_phi(std::uint32_t x) const;

  /// Whether phi_x commutes with every generator of the stabilizer of x in
  /// the inner group. Expected to hold for every quandle and every point.
  bool phi_central_in_stabilizer(std::uint32_t x) const;

  /// All predicates in one sweep; internal implications (cyclic type =>
  /// doubly transitive => primitive => simple, for n >= 3) are asserted.
  ClassifierReport classify() const;

  /// FNV-1a digest of the canonical table text.
  std::string digest() const;

  const std::vector<std::uint32_t>& flat_table() const { return table_; }

  bool operator==(const Quandle& other) const = default;

 private:
  Quandle(std::size_t n, std::vector<std::uint32_t> flat);

  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;  // row-major
};

/// x * y = 2x - y mod n.
Quandle dihedral_quandle(unsigned n);

/// x * y = (1 - alpha) x + alpha y over the field; alpha must be nonzero
/// (alpha = 1 is allowed and yields the trivial quandle). Elements are
/// enumerated by field index.
Quandle alexander_quandle(const FieldCtx& ctx, FieldElem alpha);

/// General Alexander quandle on a product of cyclic groups Z_{d1} x ... x
/// Z_{dr} with an automorphism given as an integer matrix: x * y =
/// (1 - g)(x) + g(y). Throws unless g is a well-defined automorphism.
Quandle alexander_general(const std::vector<unsigned>& cyclic_orders,
                          const std::vector<std::vector<long long>>& g);

/// Quandle on the conjugacy class of class_rep with x * y = x y x^-1.
Quandle conjugation_quandle(const PermGroup& G, const Perm& class_rep,
                            std::size_t cap = kDefaultElementCap);

}  // namespace qlab
