#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qlab {

/// Base class for all qlab errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element scan, enumeration, or closure would exceed its configured cap.
/// Carries the cap and the size reached, so callers can report the event
/// instead of silently approximating.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap, std::size_t reached)
      : Error(what + " (cap " + std::to_string(cap) + ", reached " +
              std::to_string(reached) + ")"),
        cap_(cap),
        reached_(reached) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t cap_;
  std::size_t reached_;
};

/// Structural validation failure (quandle axioms, bijection checks, bad
/// parameters). The message carries a concrete witness where one exists.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Default bound for element scans (centers, class sizes, closures).
inline constexpr std::size_t kDefaultElementCap = 10'000'000;

bool is_prime(std::uint64_t n);

/// (p, m) with n = p^m, m >= 1, if n is a prime power; nullopt otherwise.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// FNV-1a 64-bit digest in hex. Fingerprints tables in reports.
std::string fnv1a_hex(const void* data, std::size_t len);

}  // namespace qlab
