#include "qlab/quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qlab {

std::vector<std::vector<std::uint32_t>> Congruence::blocks() const {
  std::vector<std::vector<std::uint32_t>> out(block_count);
  for (std::uint32_t x = 0; x < block_of.size(); ++x) out[block_of[x]].push_back(x);
  return out;
}

Quandle::Quandle(std::size_t n, std::vector<std::uint32_t> flat)
    : n_(n), table_(std::move(flat)) {}

Quandle Quandle::from_table(std::vector<std::vector<std::uint32_t>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("empty table");
  std::vector<std::uint32_t> flat;
  flat.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) {
      throw ValidationError("table is not square at row " + std::to_string(x));
    }
    for (std::uint32_t v : table[x]) {
      if (v >= n) throw ValidationError("entry out of range in row " + std::to_string(x));
      flat.push_back(v);
    }
  }
  auto at = [&](std::size_t x, std::size_t y) { return flat[x * n + y]; };

  for (std::size_t x = 0; x < n; ++x) {
    if (at(x, x) != x) {
      throw ValidationError("idempotence fails at x=" + std::to_string(x) +
                            ": table[x][x]=" + std::to_string(at(x, x)));
    }
  }
  std::vector<bool> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[at(x, y)]) {
        throw ValidationError("row " + std::to_string(x) +
                              " is not a permutation (value " + std::to_string(at(x, y)) +
                              " repeated)");
      }
      seen[at(x, y)] = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const std::uint32_t lhs = at(x, at(y, z));
        const std::uint32_t rhs = at(at(x, y), at(x, z));
        if (lhs != rhs) {
          throw ValidationError("left self-distributivity fails at (x,y,z)=(" +
                                std::to_string(x) + "," + std::to_string(y) + "," +
                                std::to_string(z) + "): x*(y*z)=" + std::to_string(lhs) +
                                " but (x*y)*(x*z)=" + std::to_string(rhs));
        }
      }
    }
  }
  return Quandle(n, std::move(flat));
}

Perm Quandle::phi(std::uint32_t x) const {
  if (x >= n_) throw ValidationError("point out of range: " + std::to_string(x));
  std::vector<std::uint32_t> images(table_.begin() + static_cast<std::ptrdiff_t>(x * n_),
                                    table_.begin() + static_cast<std::ptrdiff_t>((x + 1) * n_));
  return Perm(std::move(images));
}

PermGroup Quandle::inner_group() const {
  std::vector<Perm> gens;
  gens.reserve(n_);
  for (std::uint32_t x = 0; x < n_; ++x) gens.push_back(phi(x));
  return PermGroup::from_generators(std::move(gens));
}

bool Quandle::is_connected() const { return inner_group().is_transitive(); }

namespace {

// phi restricted to the complement of its fixed point x is one (n-1)-cycle.
bool row_is_long_cycle(const std::vector<std::uint32_t>& flat, std::size_t n, std::uint32_t x) {
  const std::uint32_t start = x == 0 ? 1 : 0;
  std::uint32_t steps = 0;
  std::uint32_t cur = start;
  do {
    cur = flat[x * n + cur];
    if (cur == x) return false;  // x may not appear in the long cycle
    ++steps;
  } while (cur != start && steps <= n);
  return steps == n - 1;
}

}  // namespace

bool Quandle::is_cyclic_type() const {
  if (n_ < 3) {
    throw ValidationError("cyclic type is undefined for quandles of size < 3");
  }
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (!row_is_long_cycle(table_, n_, x)) return false;
  }
  return true;
}

bool Quandle::cyclic_type_shortcut() const {
  if (n_ < 3) {
    throw ValidationError("cyclic type is undefined for quandles of size < 3");
  }
  return row_is_long_cycle(table_, n_, 0) && is_connected();
}

unsigned Quandle::transitivity_degree(unsigned cap) const {
  return inner_group().transitivity_degree(cap);
}

Congruence Quandle::principal_congruence(std::uint32_t a, std::uint32_t b) const {
  if (a >= n_ || b >= n_ || a == b) {
    throw ValidationError("principal congruence needs two distinct elements");
  }
  std::vector<std::uint32_t> parent(n_);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  // Close the merged-pair queue under both compatibilities: u ~ v forces
  // c*u ~ c*v and u*c ~ v*c for every c.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> queue;
  auto unite = [&](std::uint32_t x, std::uint32_t y) {
    const std::uint32_t rx = find(x);
    const std::uint32_t ry = find(y);
    if (rx == ry) return;
    parent[ry] = rx;
    queue.emplace_back(x, y);
  };
  unite(a, b);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [u, v] = queue[head];
    for (std::uint32_t c = 0; c < n_; ++c) {
      unite(at(c, u), at(c, v));
      unite(at(u, c), at(v, c));
    }
  }

  Congruence out;
  out.block_of.assign(n_, 0);
  std::map<std::uint32_t, std::uint32_t> ids;
  for (std::uint32_t x = 0; x < n_; ++x) {
    const std::uint32_t root = find(x);
    auto [it, fresh] = ids.emplace(root, static_cast<std::uint32_t>(ids.size()));
    out.block_of[x] = it->second;
    (void)fresh;
  }
  out.block_count = static_cast<std::uint32_t>(ids.size());
  return out;
}

bool Quandle::is_simple() const {
  if (n_ < 2) return false;
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = a + 1; b < n_; ++b) {
      if (!principal_congruence(a, b).is_full()) return false;
    }
  }
  return true;
}

Quandle Quandle::quotient(const Congruence& c) const {
  if (c.block_of.size() != n_) throw ValidationError("congruence size mismatch");
  const std::uint32_t m = c.block_count;
  std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m, m));
  for (std::uint32_t x = 0; x < n_; ++x) {
    for (std::uint32_t y = 0; y < n_; ++y) {
      const std::uint32_t bx = c.block_of[x];
      const std::uint32_t by = c.block_of[y];
      const std::uint32_t val = c.block_of[at(x, y)];
      if (table[bx][by] == m) {
        table[bx][by] = val;
      } else if (table[bx][by] != val) {
        throw ValidationError("partition is not a congruence: blocks (" + std::to_string(bx) +
                              "," + std::to_string(by) + ") have inconsistent products");
      }
    }
  }
  return from_table(std::move(table));
}

namespace {

// Per-point invariant preserved by isomorphisms: the cycle type of the row.
std::vector<std::string> row_profiles(const Quandle& q) {
  std::vector<std::string> out(q.size());
  for (std::uint32_t x = 0; x < q.size(); ++x) {
    std::ostringstream os;
    for (std::uint32_t len : q.phi(x).cycle_type()) os << len << '.';
    out[x] = os.str();
  }
  return out;
}

struct IsoSearch {
  const Quandle& A;
  const Quandle& B;
  std::vector<std::string> profA, profB;
  std::vector<std::int32_t> img, pre;
  std::vector<std::uint32_t> assigned;

  IsoSearch(const Quandle& a, const Quandle& b)
      : A(a), B(b), profA(row_profiles(a)), profB(row_profiles(b)),
        img(a.size(), -1), pre(b.size(), -1) {}

  bool push(std::uint32_t x, std::uint32_t y) {
    if (img[x] >= 0) return img[x] == static_cast<std::int32_t>(y);
    if (pre[y] >= 0) return false;
    if (profA[x] != profB[y]) return false;
    img[x] = static_cast<std::int32_t>(y);
    pre[y] = static_cast<std::int32_t>(x);
    assigned.push_back(x);
    return true;
  }

  // Propagate table constraints from every new assignment against all
  // assigned points; false on conflict.
  bool close(std::size_t from) {
    for (std::size_t qi = from; qi < assigned.size(); ++qi) {
      const std::uint32_t x = assigned[qi];
      const auto y = static_cast<std::uint32_t>(img[x]);
      for (std::size_t ai = 0; ai < assigned.size(); ++ai) {
        const std::uint32_t a = assigned[ai];
        const auto b = static_cast<std::uint32_t>(img[a]);
        if (!push(A.at(x, a), B.at(y, b))) return false;
        if (!push(A.at(a, x), B.at(b, y))) return false;
      }
    }
    return true;
  }

  void rewind(std::size_t mark) {
    while (assigned.size() > mark) {
      const std::uint32_t x = assigned.back();
      assigned.pop_back();
      pre[static_cast<std::size_t>(img[x])] = -1;
      img[x] = -1;
    }
  }

  bool dfs() {
    std::uint32_t x = 0;
    while (x < A.size() && img[x] >= 0) ++x;
    if (x == A.size()) return true;
    for (std::uint32_t y = 0; y < B.size(); ++y) {
      if (pre[y] >= 0 || profA[x] != profB[y]) continue;
      const std::size_t mark = assigned.size();
      if (push(x, y) && close(mark) && dfs()) return true;
      rewind(mark);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::uint32_t>> Quandle::isomorphism_to(const Quandle& other) const {
  if (n_ != other.n_) return std::nullopt;
  IsoSearch search(*this, other);
  {
    auto a = search.profA;
    auto b = search.profB;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  if (!search.dfs()) return std::nullopt;
  std::vector<std::uint32_t> out(n_);
  for (std::uint32_t x = 0; x < n_; ++x) out[x] = static_cast<std::uint32_t>(search.img[x]);
  return out;
}

bool Quandle::stabilizer_generated_by_phi(std::uint32_t x) const {
  if (!is_cyclic_type()) {
    throw ValidationError("stabilizer test applies to cyclic-type quandles only");
  }
  const PermGroup inner = inner_group();
  const PermGroup stab = inner.stabilizer(x);
  if (stab.order() != n_ - 1) return false;
  const Perm row = phi(x);
  std::vector<Perm> powers;
  Perm cur(n_);
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    cur = row * cur;
    powers.push_back(cur);
  }
  for (const Perm& g : stab.generators()) {
    if (!g.is_identity() && std::find(powers.begin(), powers.end(), g) == powers.end()) {
      return false;
    }
  }
  return true;
}

bool Quandle::phi_central_in_stabilizer(std::uint32_t x) const {
  const Perm row = phi(x);
  const PermGroup stab = inner_group().stabilizer(x);
  for (const Perm& g : stab.generators()) {
    if (!(g * row == row * g)) return false;
  }
  return true;
}

ClassifierReport Quandle::classify() const {
  ClassifierReport r;
  r.n = n_;
  r.digest = digest();
  const PermGroup inner = inner_group();
  r.connected = inner.is_transitive();
  r.cyclic_type = n_ >= 3 && is_cyclic_type();
  r.transitivity_degree = inner.transitivity_degree(5);
  r.primitive = n_ >= 2 && r.connected && inner.is_primitive();
  r.simple = is_simple();
  r.inner_order = inner.order();
  r.inner_frobenius = n_ >= 2 && r.connected && inner.is_frobenius_action();

  if (n_ >= 3) {
    if (r.cyclic_type && r.transitivity_degree < 2) {
      throw Error("classifier implication violated: cyclic type without double transitivity");
    }
    if (r.transitivity_degree >= 2 && !r.primitive) {
      throw Error("classifier implication violated: doubly transitive but imprimitive");
    }
    if (r.primitive && !r.simple) {
      throw Error("classifier implication violated: primitive but not simple");
    }
  }
  return r;
}

std::string Quandle::digest() const {
  std::ostringstream os;
  os << n_ << ';';
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i) os << ' ';
    os << table_[i];
  }
  const std::string text = os.str();
  return fnv1a_hex(text.data(), text.size());
}

Quandle dihedral_quandle(unsigned n) {
  if (n == 0) throw ValidationError("dihedral quandle needs at least one element");
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      table[x][y] = (2u * x % n + n - y % n) % n;
    }
  }
  return Quandle::from_table(std::move(table));
}

Quandle alexander_quandle(const FieldCtx& ctx, FieldElem alpha) {
  if (alpha == 0) throw ValidationError("alpha must be nonzero (translations must be bijective)");
  const std::uint32_t q = ctx.q();
  const FieldElem one_minus = ctx.sub(ctx.one(), alpha);
  std::vector<std::vector<std::uint32_t>> table(q, std::vector<std::uint32_t>(q));
  for (std::uint32_t x = 0; x < q; ++x) {
    const FieldElem ax = ctx.mul(one_minus, x);
    for (std::uint32_t y = 0; y < q; ++y) {
      table[x][y] = ctx.add(ax, ctx.mul(alpha, y));
    }
  }
  return Quandle::from_table(std::move(table));
}

Quandle alexander_general(const std::vector<unsigned>& cyclic_orders,
                          const std::vector<std::vector<long long>>& g) {
  const std::size_t r = cyclic_orders.size();
  if (r == 0) throw ValidationError("empty group");
  if (g.size() != r) throw ValidationError("automorphism matrix has wrong shape");
  std::uint64_t total = 1;
  for (unsigned d : cyclic_orders) {
    if (d == 0) throw ValidationError("cyclic order must be positive");
    total *= d;
    if (total > 1u << 20) throw ValidationError("group too large");
  }
  // Well-definedness on the product of cyclic groups: g[i][j] must kill the
  // relation d_j * e_j = 0 in Z_{d_i}.
  std::vector<std::vector<long long>> mat(r, std::vector<long long>(r));
  for (std::size_t i = 0; i < r; ++i) {
    if (g[i].size() != r) throw ValidationError("automorphism matrix has wrong shape");
    for (std::size_t j = 0; j < r; ++j) {
      const long long di = cyclic_orders[i];
      long long v = g[i][j] % di;
      if (v < 0) v += di;
      mat[i][j] = v;
      if (static_cast<long long>(cyclic_orders[j]) * v % di != 0) {
        throw ValidationError("matrix does not define a homomorphism on the product group");
      }
    }
  }

  const auto n = static_cast<std::uint32_t>(total);
  auto decode = [&](std::uint32_t idx) {
    std::vector<std::uint32_t> v(r);
    for (std::size_t i = 0; i < r; ++i) {
      v[i] = idx % cyclic_orders[i];
      idx /= cyclic_orders[i];
    }
    return v;
  };
  auto encode = [&](const std::vector<std::uint32_t>& v) {
    std::uint32_t idx = 0;
    for (std::size_t i = r; i > 0; --i) idx = idx * cyclic_orders[i - 1] + v[i - 1];
    return idx;
  };
  auto apply = [&](const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> out(r);
    for (std::size_t i = 0; i < r; ++i) {
      long long acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc += mat[i][j] * v[j];
      out[i] = static_cast<std::uint32_t>(acc % cyclic_orders[i]);
    }
    return out;
  };

  std::vector<std::uint32_t> image(n);
  std::vector<bool> hit(n, false);
  for (std::uint32_t idx = 0; idx < n; ++idx) {
    image[idx] = encode(apply(decode(idx)));
    hit[image[idx]] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw ValidationError("matrix is not invertible on the product group");
  }

  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x) {
    const auto vx = decode(x);
    const auto gx = decode(image[x]);
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto gy = decode(image[y]);
      std::vector<std::uint32_t> res(r);
      for (std::size_t i = 0; i < r; ++i) {
        const unsigned d = cyclic_orders[i];
        res[i] = (vx[i] + d - gx[i] + gy[i]) % d;
      }
      table[x][y] = encode(res);
    }
  }
  return Quandle::from_table(std::move(table));
}

Quandle conjugation_quandle(const PermGroup& G, const Perm& class_rep, std::size_t cap) {
  const std::vector<Perm> cls = G.conjugacy_class_of(class_rep, cap);
  const auto n = static_cast<std::uint32_t>(cls.size());
  auto index_of = [&](const Perm& p) {
    const auto it = std::lower_bound(cls.begin(), cls.end(), p);
    return static_cast<std::uint32_t>(it - cls.begin());
  };
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    const Perm inv = cls[i].inverse();
    for (std::uint32_t j = 0; j < n; ++j) {
      table[i][j] = index_of(cls[i] * cls[j] * inv);
    }
  }
  return Quandle::from_table(std::move(table));
}

}  // namespace qlab
