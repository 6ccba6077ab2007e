#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlab/util.hpp"

namespace qlab {

/// An element of GF(p^m), encoded as an index in {0..q-1}. The base-p
/// digits of the index, least significant first, are the polynomial-basis
/// coefficients c0..c(m-1).
using FieldElem = std::uint32_t;

/// Arithmetic context for GF(p^m) in polynomial basis.
///
/// When no modulus is supplied, the lexicographically least monic
/// irreducible of degree m is selected (coefficients compared low-degree
/// first), so contexts are reproducible. For fields up to the table bound
/// the full addition/multiplication tables are precomputed.
class FieldCtx {
 public:
  FieldCtx(unsigned p, unsigned m);
  FieldCtx(unsigned p, unsigned m, std::vector<unsigned> modulus);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint32_t q() const { return q_; }

  /// Modulus coefficients c0..cm, low degree first, monic.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  FieldElem zero() const { return 0; }
  FieldElem one() const { return 1; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  /// a^e; negative exponents allowed for nonzero a.
  FieldElem pow(FieldElem a, long long e) const;

  /// The class of the polynomial variable (coefficient vector 0,1,0,...).
  FieldElem generator() const { return m_ == 1 ? (p_ > 1 ? 1u % p_ : 0u) : p_; }

  /// Least k >= 1 with a^k = 1; divides q-1. Throws on zero input.
  std::uint64_t mult_order(FieldElem a) const;

  /// All units of multiplicative order exactly q-1, ascending.
  std::vector<FieldElem> primitive_elements() const;

  /// Smallest primitive element (for q = 2 this is the unit 1).
  FieldElem least_primitive() const;

  std::vector<unsigned> coeffs(FieldElem a) const;
  FieldElem from_coeffs(const std::vector<unsigned>& c) const;

  /// "c0,c1,...,c(m-1)" low degree first.
  std::string to_string(FieldElem a) const;

  static constexpr std::uint32_t kMaxQ = 1u << 20;

 private:
  void init_tables();
  FieldElem mul_slow(FieldElem a, FieldElem b) const;

  unsigned p_ = 0;
  unsigned m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<unsigned> modulus_;
  bool tabled_ = false;
  std::vector<FieldElem> add_table_;
  std::vector<FieldElem> mul_table_;
};

/// Candidate modulus scan used by the default constructor; exposed so the
/// choice can be cross-checked against published tables.
std::vector<unsigned> least_irreducible_monic(unsigned p, unsigned m);

bool poly_is_irreducible(const std::vector<unsigned>& poly, unsigned p);

/// Dense square matrix over GF(p^m) with one byte per entry (requires
/// q <= 256, which covers every field used by the classical constructions).
class FqMatrix {
 public:
  FqMatrix(const FieldCtx& ctx, unsigned dim);
  static FqMatrix identity(const FieldCtx& ctx, unsigned dim);
  static FqMatrix diagonal(const FieldCtx& ctx, const std::vector<FieldElem>& entries);

  const FieldCtx& ctx() const { return *ctx_; }
  unsigned dim() const { return dim_; }

  FieldElem at(unsigned i, unsigned j) const { return entries_[i * dim_ + j]; }
  void set(unsigned i, unsigned j, FieldElem v);

  friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
  bool operator==(const FqMatrix& other) const;

  /// Gauss-Jordan inverse; throws ValidationError on a singular matrix.
  FqMatrix inverse() const;
  FieldElem determinant() const;

  /// Row-major entry bytes; the hash key for closure sets.
  const std::vector<std::uint8_t>& bytes() const { return entries_; }

  std::string to_string() const;

 private:
  const FieldCtx* ctx_;
  unsigned dim_;
  std::vector<std::uint8_t> entries_;
};

}  // namespace qlab
