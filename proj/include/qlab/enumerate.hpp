#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qlab/perm.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

/// Counters from an exhaustive search. All counts are artifact-derived:
/// the searches are the source, not any published census.
struct SearchStats {
  unsigned n = 0;
  std::uint64_t candidates_tested = 0;
  std::uint64_t found_raw = 0;   // accepted tables before isomorphism reduction
  std::uint64_t found_iso = 0;   // isomorphism classes
  double elapsed_seconds = 0.0;
};

struct EnumerationResult {
  std::vector<Quandle> representatives;  // sorted by table bytes
  SearchStats stats;
};

struct CyclicEnumOptions {
  /// Override for the normalized first row (must be an (n-1)-cycle); used
  /// to test that the normalization does not change the class count.
  std::optional<Perm> first_row;
  /// 0 = one task per first-image value, capped by hardware concurrency.
  unsigned threads = 0;
  /// Permit n beyond the default bound of 13.
  bool allow_large = false;
};

/// All cyclic-type quandles of size n up to isomorphism.
///
/// Search normalization: the row of the fixed point x0 of phi_{x0} is
/// pinned to one standard (n-1)-cycle c. This is sound up to isomorphism
/// because any (n-1)-cycle fixing x0 is conjugate to c by a permutation
/// fixing x0, and conjugating a whole table by such a permutation is a
/// quandle isomorphism. A candidate row at the pivot y0 (the least point
/// other than x0) then determines every other row by left
/// self-distributivity: the row at c^k(y0) must be c^k phi_{y0} c^-k.
/// Candidates are scanned exhaustively ((n-2)! of them).
EnumerationResult enumerate_cyclic(unsigned n, const CyclicEnumOptions& options = {});

/// All connected quandles of size n up to isomorphism, by row-by-row
/// backtracking over permutations fixing the row index with forced-row
/// propagation and partial-distributivity pruning. Rows of a connected
/// quandle are conjugate, so rows must share row 0's cycle type; that
/// prune keeps completeness for the connected target. n <= 6 by default;
/// n = 7 permitted with long_run.
EnumerationResult enumerate_connected_bruteforce(unsigned n, bool long_run = false);

/// phi(q-1)/m for q = p^m: the predicted number of cyclic iso classes
/// (unit-group generators modulo the Frobenius twist). A cross-check
/// target only, never ground truth by itself.
std::uint64_t cyclic_count_formula(std::uint64_t q);

}  // namespace qlab
