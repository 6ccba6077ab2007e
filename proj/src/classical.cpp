#include "qlab/classical.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace qlab {

std::vector<std::vector<FieldElem>> projective_points(const FieldCtx& ctx, unsigned d) {
  const std::uint64_t q = ctx.q();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= q;

  std::vector<std::vector<FieldElem>> points;
  auto canonical = [&](std::vector<FieldElem> v) {
    unsigned lead = 0;
    while (lead < d && v[lead] == 0) ++lead;
    const FieldElem scale = ctx.inv(v[lead]);
    for (unsigned i = lead; i < d; ++i) v[i] = ctx.mul(scale, v[i]);
    return v;
  };

  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::vector<FieldElem> v(d);
    std::uint64_t rest = idx;
    for (unsigned i = d; i > 0; --i) {
      v[i - 1] = static_cast<FieldElem>(rest % q);
      rest /= q;
    }
    // keep only vectors already in canonical form: first nonzero entry 1
    unsigned lead = 0;
    while (lead < d && v[lead] == 0) ++lead;
    if (v[lead] != ctx.one()) continue;
    points.push_back(canonical(std::move(v)));
  }
  return points;
}

namespace {

Perm matrix_to_projective_perm(const FqMatrix& m,
                               const std::vector<std::vector<FieldElem>>& points) {
  const FieldCtx& F = m.ctx();
  const unsigned d = m.dim();

  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(points.size() * 2);
  auto key = [&](const std::vector<FieldElem>& v) {
    std::string k;
    k.reserve(v.size());
    for (FieldElem e : v) k.push_back(static_cast<char>(e));
    return k;
  };
  for (std::uint32_t i = 0; i < points.size(); ++i) index.emplace(key(points[i]), i);

  std::vector<std::uint32_t> images(points.size());
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    std::vector<FieldElem> w(d, 0);
    for (unsigned r = 0; r < d; ++r) {
      FieldElem acc = 0;
      for (unsigned c = 0; c < d; ++c) acc = F.add(acc, F.mul(m.at(r, c), points[i][c]));
      w[r] = acc;
    }
    unsigned lead = 0;
    while (lead < d && w[lead] == 0) ++lead;
    if (lead == d) throw Error("singular matrix applied to projective point");
    const FieldElem scale = F.inv(w[lead]);
    for (unsigned r = lead; r < d; ++r) w[r] = F.mul(scale, w[r]);
    images[i] = index.at(key(w));
  }
  return Perm(std::move(images));
}

}  // namespace

std::uint64_t psl_order(unsigned d, unsigned q) {
  std::uint64_t order = 1;
  for (unsigned i = 0; i < d * (d - 1) / 2; ++i) order *= q;
  for (unsigned i = 2; i <= d; ++i) {
    std::uint64_t qi = 1;
    for (unsigned k = 0; k < i; ++k) qi *= q;
    order *= qi - 1;
  }
  return order / std::gcd<std::uint64_t>(d, q - 1);
}

PermGroup psl_action(unsigned d, unsigned q, std::uint32_t degree_bound) {
  if (d < 2) throw ValidationError("projective action needs dimension >= 2");
  if ((d == 2 && q == 2) || (d == 2 && q == 3)) {
    throw ExcludedParameters("parameters (d,q)=(" + std::to_string(d) + "," + std::to_string(q) +
                             ") are excluded");
  }
  const auto pm = prime_power(q);
  if (!pm) throw ValidationError("q must be a prime power: " + std::to_string(q));
  const FieldCtx ctx(static_cast<unsigned>(pm->first), pm->second);

  std::uint64_t degree = 0;
  {
    std::uint64_t qd = 1;
    for (unsigned i = 0; i < d; ++i) qd *= q;
    degree = (qd - 1) / (q - 1);
  }
  if (degree > degree_bound) {
    throw CapExceeded("projective degree over bound", degree_bound, degree);
  }

  const auto points = projective_points(ctx, d);

  // Transvections I + lambda*E(i,j), lambda over a basis of F_q over F_p,
  // generate SL(d,q).
  std::vector<FqMatrix> gens;
  FieldElem basis = ctx.one();
  for (unsigned t = 0; t < ctx.m(); ++t) {
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned j = 0; j < d; ++j) {
        if (i == j) continue;
        FqMatrix m = FqMatrix::identity(ctx, d);
        m.set(i, j, basis);
        gens.push_back(std::move(m));
      }
    }
    basis = ctx.mul(basis, ctx.generator());
  }

  std::vector<Perm> perm_gens;
  perm_gens.reserve(gens.size());
  for (const FqMatrix& m : gens) perm_gens.push_back(matrix_to_projective_perm(m, points));
  return PermGroup::from_generators(std::move(perm_gens));
}

bool psl_stabilizer_center_trivial(unsigned d, unsigned q, std::size_t cap) {
  const PermGroup G = psl_action(d, q);
  // point [1:0:...:0] sits at a known place in the canonical enumeration;
  // locate it by its coordinates.
  const auto pm = prime_power(q);
  const FieldCtx ctx(static_cast<unsigned>(pm->first), pm->second);
  const auto points = projective_points(ctx, d);
  std::uint32_t target = 0;
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    bool match = points[i][0] == ctx.one();
    for (unsigned k = 1; match && k < d; ++k) match = points[i][k] == 0;
    if (match) {
      target = i;
      break;
    }
  }
  return G.stabilizer(target).center(cap).is_trivial();
}

PsuClassTable psu_class_size_table(unsigned q) {
  if (q < 3) throw ValidationError("unitary class arithmetic requires q >= 3");
  PsuClassTable table;
  table.q = q;
  table.d = static_cast<unsigned>(std::gcd(3u, q + 1));
  const std::uint64_t Q = q;
  const std::uint64_t d = table.d;
  const std::uint64_t q2 = Q * Q;
  const std::uint64_t q3 = q2 * Q;
  table.group_order = q3 * (q3 + 1) * (q2 - 1) / d;

  const std::uint64_t centralizers[8] = {
      q3 * (Q + 1) / d,
      q2,
      Q * (Q + 1) * (Q + 1) * (Q - 1) / d,
      Q * (Q + 1) / d,
      (Q + 1) * (Q + 1),
      (Q + 1) * (Q + 1) / d,
      (q2 - Q + 1) / d,
      table.group_order,
  };
  for (std::uint64_t c : centralizers) {
    if (c == 0 || table.group_order % c != 0) {
      throw Error("centralizer size does not divide the group order at q=" + std::to_string(q));
    }
    PsuClassRow row;
    row.centralizer_size = c;
    row.class_size = table.group_order / c;
    if (row.class_size == q3 + 1) table.any_class_of_degree_size = true;
    table.rows.push_back(row);
  }
  return table;
}

FqMatrix ree_diag(const FieldCtx& ctx, FieldElem lambda) {
  if (ctx.p() != 3) throw ValidationError("Ree stabilizer lives in characteristic 3");
  if (ctx.m() % 2 == 0 || ctx.m() < 3) {
    throw ValidationError("field size must be 3^(2d+1) with d >= 1");
  }
  if (lambda == 0) throw ValidationError("lambda must be a unit");
  const unsigned dd = (ctx.m() - 1) / 2;
  long long e = 1;  // 3^(d+1)
  for (unsigned i = 0; i < dd + 1; ++i) e *= 3;
  const long long exps[7] = {1, e - 1, -e + 2, 0, e - 2, -e + 1, -1};
  std::vector<FieldElem> diag(7);
  for (unsigned i = 0; i < 7; ++i) diag[i] = ctx.pow(lambda, exps[i]);
  return FqMatrix::diagonal(ctx, diag);
}

std::pair<FqMatrix, FqMatrix> ree_fixed_matrices(const FieldCtx& ctx) {
  if (ctx.p() != 3) throw ValidationError("Ree stabilizer lives in characteristic 3");
  static constexpr unsigned a_rows[7][7] = {
      {1, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 0, 0},
      {0, 1, 0, 1, 0, 0, 0},
      {2, 0, 0, 0, 1, 0, 0},
      {0, 1, 0, 2, 0, 1, 0},
      {1, 0, 1, 0, 2, 0, 1},
  };
  static constexpr unsigned b_rows[7][7] = {
      {1, 0, 0, 0, 0, 0, 0},
      {2, 1, 0, 0, 0, 0, 0},
      {1, 2, 1, 0, 0, 0, 0},
      {0, 0, 1, 1, 0, 0, 0},
      {2, 0, 1, 2, 1, 0, 0},
      {1, 0, 1, 2, 1, 1, 0},
      {2, 1, 1, 0, 0, 1, 1},
  };
  FqMatrix a(ctx, 7);
  FqMatrix b(ctx, 7);
  for (unsigned i = 0; i < 7; ++i) {
    for (unsigned j = 0; j < 7; ++j) {
      a.set(i, j, a_rows[i][j]);  // prime-subfield entries embed as indices
      b.set(i, j, b_rows[i][j]);
    }
  }
  return {a, b};
}

MatrixGroupClosure::MatrixGroupClosure(std::vector<FqMatrix> generators, std::size_t cap)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw ValidationError("empty generator list");
  const unsigned dim = generators_[0].dim();
  const FieldCtx& F = generators_[0].ctx();
  for (const FqMatrix& g : generators_) {
    if (g.dim() != dim) throw ValidationError("generators of mixed dimension");
    g.inverse();  // throws on a singular generator
  }

  // Right-multiplication closure suffices: in a finite setting every
  // element's inverse is a positive power of itself.
  std::unordered_map<std::string, std::uint32_t> seen;
  std::vector<FqMatrix> order_found;
  auto key = [](const FqMatrix& m) {
    return std::string(m.bytes().begin(), m.bytes().end());
  };

  order_found.push_back(FqMatrix::identity(F, dim));
  seen.emplace(key(order_found.front()), 0);
  for (std::size_t head = 0; head < order_found.size(); ++head) {
    // copy: the vector may reallocate while we append products
    const FqMatrix cur = order_found[head];
    for (const FqMatrix& g : generators_) {
      FqMatrix prod = cur * g;
      std::string k = key(prod);
      if (seen.emplace(std::move(k), static_cast<std::uint32_t>(order_found.size())).second) {
        order_found.push_back(std::move(prod));
        if (order_found.size() > cap) {
          throw CapExceeded("matrix closure over cap", cap, order_found.size());
        }
      }
    }
  }

  elements_ = std::move(order_found);
  std::sort(elements_.begin(), elements_.end(),
            [](const FqMatrix& x, const FqMatrix& y) { return x.bytes() < y.bytes(); });
}

bool MatrixGroupClosure::contains(const FqMatrix& m) const {
  const auto it = std::lower_bound(
      elements_.begin(), elements_.end(), m,
      [](const FqMatrix& x, const FqMatrix& y) { return x.bytes() < y.bytes(); });
  return it != elements_.end() && *it == m;
}

bool closure_center_trivial(const MatrixGroupClosure& closure) {
  for (const FqMatrix& e : closure.elements()) {
    bool central = true;
    for (const FqMatrix& g : closure.generators()) {
      if (!(e * g == g * e)) {
        central = false;
        break;
      }
    }
    if (central) {
      const FqMatrix id = FqMatrix::identity(e.ctx(), e.dim());
      if (!(e == id)) return false;
    }
  }
  return true;
}

}  // namespace qlab
