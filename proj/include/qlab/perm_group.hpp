#pragma once

#include <cstdint>
#include <vector>

#include "qlab/perm.hpp"
#include "qlab/util.hpp"

namespace qlab {

/// A block system of a transitive action: every point is mapped to a block
/// id in {0..block_count-1}; ids are normalized so that block id order
/// follows the smallest point of each block.
struct BlockSystem {
  std::vector<std::uint32_t> block_of;
  std::uint32_t block_count = 0;

  bool is_single_block() const { return block_count == 1; }
  bool is_discrete() const { return block_count == block_of.size(); }
  std::vector<std::vector<std::uint32_t>> blocks() const;
};

enum class BurnsideBranch {
  RegularElementaryAbelian,
  NonabelianSimple,
  Undetermined,
};

/// Outcome of the minimal-normal-subgroup dichotomy test on a doubly
/// transitive group: the minimal normal subgroup is either regular and
/// elementary abelian, or nonregular nonabelian simple.
struct BurnsideReport {
  BurnsideBranch branch = BurnsideBranch::Undetermined;
  std::uint64_t socle_order = 0;
  bool regular = false;
  bool abelian = false;
  bool elementary_abelian = false;
  bool simple = false;
  std::vector<Perm> socle_generators;
};

/// A permutation group held as a base and strong generating set, built by a
/// deterministic (non-randomized) Schreier-Sims run so results are
/// reproducible across runs. New base points are the smallest point moved
/// by the element that forced the extension.
///
/// Immutable after construction; all queries are safe to call concurrently.
class PermGroup {
 public:
  /// Builds from a nonempty generator list of uniform degree.
  static PermGroup from_generators(std::vector<Perm> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }

  /// The defining generators, as given.
  const std::vector<Perm>& generators() const { return generators_; }

  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool contains(const Perm& g) const;

  std::vector<std::uint32_t> orbit_of(std::uint32_t x) const;
  std::vector<std::vector<std::uint32_t>> orbits() const;
  bool is_transitive() const;

  /// Point stabilizer G_x as a group in its own right (same degree).
  PermGroup stabilizer(std::uint32_t x) const;

  /// True iff the action is transitive on ordered k-tuples of distinct
  /// points; computed by iterated point stabilizers. Requires
  /// 1 <= k <= degree.
  bool is_k_transitive(unsigned k) const;

  /// Largest k <= cap with is_k_transitive(k); 0 if intransitive.
  unsigned transitivity_degree(unsigned cap) const;

  /// Finest block system in which a and b share a block. Requires a
  /// transitive group and a != b.
  BlockSystem minimal_block_system(std::uint32_t a, std::uint32_t b) const;

  /// Requires transitive, degree >= 2.
  bool is_primitive() const;

  /// All elements in a deterministic order (products of transversal
  /// representatives along the base). Throws CapExceeded if order() > cap.
  std::vector<Perm> elements(std::size_t cap = kDefaultElementCap) const;

  /// Z(G), by element scan against the generators. Throws CapExceeded if
  /// order() > cap.
  PermGroup center(std::size_t cap = kDefaultElementCap) const;

  /// C_G(c) for c in G acting as an (n-1)-cycle with one fixed point; for
  /// such c the result equals the powers of c intersected with G, which is
  /// asserted. Throws ValidationError if c is not in G or not of the
  /// required cycle type.
  PermGroup centralizer_of_cycle(const Perm& c, std::size_t cap = kDefaultElementCap) const;

  /// Sizes of all conjugacy classes, sorted ascending. Each unvisited
  /// element is closed under conjugation by the generators. Throws
  /// CapExceeded if order() > cap.
  std::vector<std::uint64_t> conjugacy_class_sizes(std::size_t cap = kDefaultElementCap) const;

  /// The conjugacy class of g, sorted. Throws ValidationError if g is not
  /// in G; CapExceeded if the class grows beyond cap.
  std::vector<Perm> conjugacy_class_of(const Perm& g, std::size_t cap = kDefaultElementCap) const;

  /// True iff distinct point stabilizers intersect trivially. Requires a
  /// transitive action of degree >= 2. For doubly transitive groups a
  /// single pair decides (all pairs are conjugate); otherwise every pair
  /// is tested.
  bool is_frobenius_action() const;

  /// Normal closure of the commutators of the generators.
  PermGroup derived_subgroup() const;

  /// Smallest normal subgroup containing the seeds.
  PermGroup normal_closure(const std::vector<Perm>& seeds) const;

  /// Finds a minimal normal subgroup and reports which branch of the
  /// doubly-transitive dichotomy holds. Requires a doubly transitive group
  /// within the element cap.
  BurnsideReport burnside_dichotomy(std::size_t cap = kDefaultElementCap) const;

  const std::vector<std::uint32_t>& base() const { return base_; }
  std::vector<Perm> strong_generators() const;

 private:
  struct Level {
    std::uint32_t base_point = 0;
    std::vector<Perm> gens;
    std::vector<std::int32_t> orbit_pos;  // point -> transversal index, -1 if outside
    std::vector<std::uint32_t> orbit;     // BFS discovery order
    std::vector<Perm> transversal;        // transversal[i] maps base_point to orbit[i]
  };

  PermGroup() = default;
  void build(std::vector<Perm> gens, const std::vector<std::uint32_t>& forced_prefix);
  void distribute(const Perm& g);
  void recompute_orbit(std::size_t level);
  // Sifts g through levels [from..); returns the residue and the level at
  // which sifting stopped (levels_.size() on full success).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  PermGroup rebuilt_with_prefix(const std::vector<std::uint32_t>& prefix) const;

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
  std::vector<std::uint32_t> base_;
  std::uint64_t order_ = 1;
};

// Named constructions shared by checks and tests.
PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);
PermGroup cyclic_group(unsigned n);

}  // namespace qlab
