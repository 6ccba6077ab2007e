#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace qlab {

/// A permutation of the points {0..n-1}, stored as its image table.
///
/// Composition convention: `a * b` applies b first, then a, so
/// `(a * b)[x] == a[b[x]]`. All cycle notation in text I/O is 0-based;
/// the identity prints as "()".
class Perm {
 public:
  Perm() = default;

  /// Identity on `degree` points.
  explicit Perm(std::size_t degree);

  /// Takes ownership of an image table; throws ValidationError unless it
  /// is a bijection on {0..n-1}.
  explicit Perm(std::vector<std::uint32_t> images);

  /// Parses disjoint-cycle notation, e.g. "(0 1 2)(3 4)". Points not
  /// mentioned are fixed. "()" is the identity. Throws ValidationError on
  /// malformed input, out-of-range points, or repeated points.
  static Perm parse(const std::string& text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::uint32_t x) const { return images_[x]; }
  bool fixes(std::uint32_t x) const { return images_[x] == x; }
  bool is_identity() const;

  Perm inverse() const;

  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Function composition, right factor applied first.
  friend Perm operator*(const Perm& a, const Perm& b);

  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& other) const { return images_ < other.images_; }

  std::string to_cycles() const;

  /// Smallest moved point, or degree() for the identity.
  std::uint32_t smallest_moved() const;

  /// Cycle lengths over all points, fixed points included as 1s, sorted
  /// descending.
  std::vector<std::uint32_t> cycle_type() const;

  const std::vector<std::uint32_t>& images() const { return images_; }

 private:
  std::vector<std::uint32_t> images_;
};

std::ostream& operator<<(std::ostream& os, const Perm& p);

}  // namespace qlab

template <>
struct std::hash<qlab::Perm> {
  std::size_t operator()(const qlab::Perm& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t v : p.images()) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};
