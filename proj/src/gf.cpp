#include "qlab/gf.hpp"

#include <algorithm>
#include <sstream>

namespace qlab {

namespace {

// Polynomials are coefficient vectors over GF(p), low degree first, with no
// trailing zeros (except the zero polynomial, which is empty).

void poly_trim(std::vector<unsigned>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b monic-leading (any nonzero lead works via inverse mod p).
std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned>& b,
                               unsigned p) {
  poly_trim(a);
  const std::size_t db = b.size() - 1;
  // inverse of leading coefficient of b mod p
  unsigned lead_inv = 1;
  for (unsigned t = 1; t < p; ++t) {
    if (b.back() * t % p == 1) {
      lead_inv = t;
      break;
    }
  }
  while (a.size() >= b.size() && !a.empty()) {
    const unsigned factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p * factor - factor * b[i] % p) % p;
    }
    poly_trim(a);
  }
  return a;
}

}  // namespace

bool poly_is_irreducible(const std::vector<unsigned>& poly, unsigned p) {
  std::vector<unsigned> f = poly;
  poly_trim(f);
  if (f.size() < 2) return false;  // constants are not irreducible
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<unsigned> g(d + 1, 0);
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> least_irreducible_monic(unsigned p, unsigned m) {
  // Scan monic degree-m candidates in lexicographic order of
  // (c0, c1, ..., c(m-1)), c0 compared first.
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<unsigned> f(m + 1, 0);
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < m; ++i) {
      // idx encodes c0 as the most significant digit so ascending idx is
      // ascending lexicographic order on (c0, c1, ...).
      f[m - 1 - i] = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    f[m] = 1;
    if (poly_is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible monic polynomial found (unreachable for prime p)");
}

FieldCtx::FieldCtx(unsigned p, unsigned m) : FieldCtx(p, m, least_irreducible_monic(p, m)) {}

FieldCtx::FieldCtx(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw ValidationError("characteristic must be prime: " + std::to_string(p_));
  if (m_ < 1) throw ValidationError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m_; ++i) {
    q *= p_;
    if (q > kMaxQ) throw ValidationError("field size exceeds bound 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (modulus_.size() != m_ + 1 || modulus_.back() != 1) {
    throw ValidationError("modulus must be monic of degree m");
  }
  for (unsigned c : modulus_) {
    if (c >= p_) throw ValidationError("modulus coefficient out of range");
  }
  if (!poly_is_irreducible(modulus_, p_)) {
    throw ValidationError("modulus polynomial is reducible");
  }
  init_tables();
}

std::vector<unsigned> FieldCtx::coeffs(FieldElem a) const {
  std::vector<unsigned> c(m_);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

FieldElem FieldCtx::from_coeffs(const std::vector<unsigned>& c) const {
  if (c.size() > m_) throw ValidationError("too many coefficients for field");
  FieldElem v = 0;
  for (std::size_t i = c.size(); i > 0; --i) {
    if (c[i - 1] >= p_) throw ValidationError("coefficient out of range");
    v = v * p_ + c[i - 1];
  }
  return v;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  if (tabled_) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  FieldElem out = 0;
  std::uint32_t mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

FieldElem FieldCtx::neg(FieldElem a) const {
  FieldElem out = 0;
  std::uint32_t mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul_slow(FieldElem a, FieldElem b) const {
  std::vector<unsigned> prod(2 * m_ - 1, 0);
  const std::vector<unsigned> ca = coeffs(a);
  const std::vector<unsigned> cb = coeffs(b);
  for (unsigned i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
  }
  // reduce by the monic modulus
  for (std::size_t k = prod.size(); k > m_; --k) {
    const unsigned c = prod[k - 1];
    if (c == 0) continue;
    prod[k - 1] = 0;
    const std::size_t shift = k - 1 - m_;
    for (unsigned i = 0; i < m_; ++i) {
      prod[shift + i] = (prod[shift + i] + p_ * c - c * modulus_[i] % p_) % p_;
    }
  }
  FieldElem v = 0;
  for (std::size_t i = m_; i > 0; --i) v = v * p_ + prod[i - 1];
  return v;
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  if (tabled_) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return mul_slow(a, b);
}

void FieldCtx::init_tables() {
  constexpr std::uint32_t kTableBound = 512;
  if (q_ > kTableBound) return;
  add_table_.resize(static_cast<std::size_t>(q_) * q_);
  mul_table_.resize(static_cast<std::size_t>(q_) * q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_table_[static_cast<std::size_t>(a) * q_ + b] = add(a, b);
      mul_table_[static_cast<std::size_t>(a) * q_ + b] = mul_slow(a, b);
    }
  }
  tabled_ = true;
}

FieldElem FieldCtx::pow(FieldElem a, long long e) const {
  if (a == 0) {
    if (e <= 0) throw ValidationError("zero has no nonpositive powers");
    return 0;
  }
  const long long group = q_ - 1;
  long long r = e % group;
  if (r < 0) r += group;
  FieldElem result = 1;
  FieldElem base = a;
  while (r > 0) {
    if (r & 1) result = mul(result, base);
    base = mul(base, base);
    r >>= 1;
  }
  return result;
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a == 0) throw ValidationError("zero is not invertible");
  return pow(a, -1);
}

std::uint64_t FieldCtx::mult_order(FieldElem a) const {
  if (a == 0) throw ValidationError("multiplicative order of zero is undefined");
  // start from q-1 and strip prime factors while the power stays 1
  std::uint64_t e = q_ - 1;
  std::uint64_t rest = e;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    while (rest % d == 0) {
      rest /= d;
      while (e % d == 0 && pow(a, static_cast<long long>(e / d)) == 1) e /= d;
    }
  }
  if (rest > 1) {
    while (e % rest == 0 && pow(a, static_cast<long long>(e / rest)) == 1) e /= rest;
  }
  return e == 0 ? 1 : e;
}

std::vector<FieldElem> FieldCtx::primitive_elements() const {
  std::vector<FieldElem> out;
  for (FieldElem a = 1; a < q_; ++a) {
    if (mult_order(a) == q_ - 1) out.push_back(a);
  }
  return out;
}

FieldElem FieldCtx::least_primitive() const {
  for (FieldElem a = 1; a < q_; ++a) {
    if (mult_order(a) == q_ - 1) return a;
  }
  throw Error("no primitive element (unreachable: the unit group is cyclic)");
}

std::string FieldCtx::to_string(FieldElem a) const {
  std::ostringstream os;
  const auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os.str();
}

FqMatrix::FqMatrix(const FieldCtx& ctx, unsigned dim)
    : ctx_(&ctx), dim_(dim), entries_(static_cast<std::size_t>(dim) * dim, 0) {
  if (ctx.q() > 256) throw ValidationError("matrix entries require q <= 256");
  if (dim == 0) throw ValidationError("matrix dimension must be positive");
}

FqMatrix FqMatrix::identity(const FieldCtx& ctx, unsigned dim) {
  FqMatrix m(ctx, dim);
  for (unsigned i = 0; i < dim; ++i) m.set(i, i, ctx.one());
  return m;
}

FqMatrix FqMatrix::diagonal(const FieldCtx& ctx, const std::vector<FieldElem>& entries) {
  FqMatrix m(ctx, static_cast<unsigned>(entries.size()));
  for (unsigned i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

void FqMatrix::set(unsigned i, unsigned j, FieldElem v) {
  if (v >= ctx_->q()) throw ValidationError("matrix entry out of field range");
  entries_[i * dim_ + j] = static_cast<std::uint8_t>(v);
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.ctx_ != b.ctx_ && !(a.ctx_->p() == b.ctx_->p() && a.ctx_->modulus() == b.ctx_->modulus())) {
    throw ValidationError("matrix product across different fields");
  }
  if (a.dim_ != b.dim_) throw ValidationError("matrix dimension mismatch");
  const FieldCtx& F = *a.ctx_;
  const unsigned n = a.dim_;
  FqMatrix out(F, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned k = 0; k < n; ++k) {
      const FieldElem aik = a.at(i, k);
      if (aik == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        const FieldElem t = F.mul(aik, b.at(k, j));
        out.entries_[i * n + j] = static_cast<std::uint8_t>(F.add(out.at(i, j), t));
      }
    }
  }
  return out;
}

bool FqMatrix::operator==(const FqMatrix& other) const {
  return dim_ == other.dim_ && entries_ == other.entries_;
}

FqMatrix FqMatrix::inverse() const {
  const FieldCtx& F = *ctx_;
  const unsigned n = dim_;
  FqMatrix work = *this;
  FqMatrix inv = identity(F, n);
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw ValidationError("singular matrix");
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j) {
        std::swap(work.entries_[pivot * n + j], work.entries_[col * n + j]);
        std::swap(inv.entries_[pivot * n + j], inv.entries_[col * n + j]);
      }
    }
    const FieldElem scale = F.inv(work.at(col, col));
    for (unsigned j = 0; j < n; ++j) {
      work.set(col, j, F.mul(scale, work.at(col, j)));
      inv.set(col, j, F.mul(scale, inv.at(col, j)));
    }
    for (unsigned row = 0; row < n; ++row) {
      if (row == col) continue;
      const FieldElem factor = work.at(row, col);
      if (factor == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        work.set(row, j, F.sub(work.at(row, j), F.mul(factor, work.at(col, j))));
        inv.set(row, j, F.sub(inv.at(row, j), F.mul(factor, inv.at(col, j))));
      }
    }
  }
  return inv;
}

FieldElem FqMatrix::determinant() const {
  const FieldCtx& F = *ctx_;
  const unsigned n = dim_;
  FqMatrix work = *this;
  FieldElem det = F.one();
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return F.zero();
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j) {
        std::swap(work.entries_[pivot * n + j], work.entries_[col * n + j]);
      }
      det = F.neg(det);
    }
    det = F.mul(det, work.at(col, col));
    const FieldElem scale = F.inv(work.at(col, col));
    for (unsigned row = col + 1; row < n; ++row) {
      const FieldElem factor = F.mul(scale, work.at(row, col));
      if (factor == 0) continue;
      for (unsigned j = col; j < n; ++j) {
        work.set(row, j, F.sub(work.at(row, j), F.mul(factor, work.at(col, j))));
      }
    }
  }
  return det;
}

std::string FqMatrix::to_string() const {
  std::ostringstream os;
  for (unsigned i = 0; i < dim_; ++i) {
    if (i) os << "; ";
    for (unsigned j = 0; j < dim_; ++j) {
      if (j) os << ' ';
      os << static_cast<unsigned>(at(i, j));
    }
  }
  return os.str();
}

}  // namespace qlab
