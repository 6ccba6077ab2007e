#include "qlab/perm_group.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace qlab {

std::vector<std::vector<std::uint32_t>> BlockSystem::blocks() const {
  std::vector<std::vector<std::uint32_t>> out(block_count);
  for (std::uint32_t x = 0; x < block_of.size(); ++x) out[block_of[x]].push_back(x);
  return out;
}

PermGroup PermGroup::from_generators(std::vector<Perm> generators) {
  if (generators.empty()) throw ValidationError("empty generator list");
  const std::size_t degree = generators.front().degree();
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw ValidationError("generators of mixed degree: " + std::to_string(degree) + " vs " +
                            std::to_string(g.degree()));
    }
  }
  PermGroup G;
  G.degree_ = degree;
  G.generators_ = generators;
  G.build(std::move(generators), {});
  return G;
}

PermGroup PermGroup::trivial(std::size_t degree) {
  PermGroup G;
  G.degree_ = degree;
  G.generators_ = {Perm(degree)};
  G.order_ = 1;
  return G;
}

void PermGroup::distribute(const Perm& g) {
  std::size_t j = 0;
  while (true) {
    if (j == levels_.size()) {
      Level lvl;
      lvl.base_point = g.smallest_moved();
      levels_.push_back(std::move(lvl));
    }
    levels_[j].gens.push_back(g);
    if (!g.fixes(levels_[j].base_point)) return;
    ++j;
  }
}

void PermGroup::recompute_orbit(std::size_t level) {
  Level& lvl = levels_[level];
  lvl.orbit_pos.assign(degree_, -1);
  lvl.orbit.clear();
  lvl.transversal.clear();
  lvl.orbit.push_back(lvl.base_point);
  lvl.transversal.emplace_back(degree_);
  lvl.orbit_pos[lvl.base_point] = 0;
  for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
    const std::uint32_t pt = lvl.orbit[head];
    for (const Perm& g : lvl.gens) {
      const std::uint32_t img = g[pt];
      if (lvl.orbit_pos[img] < 0) {
        lvl.orbit_pos[img] = static_cast<std::int32_t>(lvl.orbit.size());
        lvl.orbit.push_back(img);
        lvl.transversal.push_back(g * lvl.transversal[head]);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const Level& lvl = levels_[j];
    const std::uint32_t img = g[lvl.base_point];
    const std::int32_t pos = lvl.orbit_pos[img];
    if (pos < 0) return {std::move(g), j};
    g = lvl.transversal[static_cast<std::size_t>(pos)].inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build(std::vector<Perm> gens, const std::vector<std::uint32_t>& forced_prefix) {
  levels_.clear();
  for (std::uint32_t b : forced_prefix) {
    Level lvl;
    lvl.base_point = b;
    levels_.push_back(std::move(lvl));
  }
  for (const Perm& g : gens) {
    if (!g.is_identity()) distribute(g);
  }
  for (std::size_t j = 0; j < levels_.size(); ++j) recompute_orbit(j);

  // Verify Schreier generators level by level, deepest first; a failed sift
  // adds a strong generator and resumes from the level it reached.
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t lev = i - 1;
    bool clean = true;
    Level& L = levels_[lev];
    for (std::size_t idx = 0; clean && idx < L.orbit.size(); ++idx) {
      const std::uint32_t x = L.orbit[idx];
      const Perm& ux = L.transversal[idx];
      for (const Perm& s : L.gens) {
        const std::uint32_t sx = s[x];
        const Perm& usx = L.transversal[static_cast<std::size_t>(L.orbit_pos[sx])];
        Perm schreier = usx.inverse() * (s * ux);
        if (schreier.is_identity()) continue;
        auto [h, j] = strip(std::move(schreier), lev + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) {
          Level fresh;
          fresh.base_point = h.smallest_moved();
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t k = lev + 1; k <= j; ++k) levels_[k].gens.push_back(h);
        for (std::size_t k = lev + 1; k <= j; ++k) recompute_orbit(k);
        i = j + 1;
        clean = false;
        break;
      }
    }
    if (clean) --i;
  }

  order_ = 1;
  base_.clear();
  for (const Level& lvl : levels_) {
    order_ *= lvl.orbit.size();
    base_.push_back(lvl.base_point);
  }
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = strip(g, 0);
  return level == levels_.size() && residue.is_identity();
}

std::vector<std::uint32_t> PermGroup::orbit_of(std::uint32_t x) const {
  if (x >= degree_) throw ValidationError("point out of range: " + std::to_string(x));
  std::vector<bool> seen(degree_, false);
  std::vector<std::uint32_t> orbit{x};
  seen[x] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const Perm& g : generators_) {
      const std::uint32_t img = g[orbit[head]];
      if (!seen[img]) {
        seen[img] = true;
        orbit.push_back(img);
      }
    }
  }
  return orbit;
}

std::vector<std::vector<std::uint32_t>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit_of(x);
    for (std::uint32_t p : orb) seen[p] = true;
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 && orbit_of(0).size() == degree_;
}

PermGroup PermGroup::rebuilt_with_prefix(const std::vector<std::uint32_t>& prefix) const {
  PermGroup G;
  G.degree_ = degree_;
  G.generators_ = generators_;
  std::vector<Perm> gens = generators_;
  G.build(std::move(gens), prefix);
  return G;
}

PermGroup PermGroup::stabilizer(std::uint32_t x) const {
  if (x >= degree_) throw ValidationError("point out of range: " + std::to_string(x));
  const PermGroup anchored = rebuilt_with_prefix({x});
  std::vector<Perm> stab_gens;
  std::unordered_set<Perm> seen;
  for (std::size_t j = 1; j < anchored.levels_.size(); ++j) {
    for (const Perm& g : anchored.levels_[j].gens) {
      if (seen.insert(g).second) stab_gens.push_back(g);
    }
  }
  if (stab_gens.empty()) return trivial(degree_);
  return from_generators(std::move(stab_gens));
}

bool PermGroup::is_k_transitive(unsigned k) const {
  if (k < 1 || k > degree_) {
    throw ValidationError("transitivity arity out of range: " + std::to_string(k));
  }
  PermGroup cur = *this;
  std::vector<bool> fixed(degree_, false);
  std::size_t remaining = degree_;
  for (unsigned step = 0; step < k; ++step) {
    std::uint32_t pt = 0;
    while (fixed[pt]) ++pt;
    if (cur.orbit_of(pt).size() != remaining) return false;
    if (step + 1 == k) break;
    cur = cur.stabilizer(pt);
    fixed[pt] = true;
    --remaining;
  }
  return true;
}

unsigned PermGroup::transitivity_degree(unsigned cap) const {
  if (cap < 1) throw ValidationError("transitivity cap must be at least 1");
  const auto limit = static_cast<unsigned>(std::min<std::size_t>(cap, degree_));
  PermGroup cur = *this;
  std::vector<bool> fixed(degree_, false);
  std::size_t remaining = degree_;
  unsigned k = 0;
  while (k < limit) {
    std::uint32_t pt = 0;
    while (fixed[pt]) ++pt;
    if (cur.orbit_of(pt).size() != remaining) break;
    ++k;
    if (k == limit) break;
    cur = cur.stabilizer(pt);
    fixed[pt] = true;
    --remaining;
  }
  return k;
}

BlockSystem PermGroup::minimal_block_system(std::uint32_t a, std::uint32_t b) const {
  if (!is_transitive()) throw ValidationError("block systems require a transitive group");
  if (a >= degree_ || b >= degree_ || a == b) {
    throw ValidationError("block seed must be a pair of distinct points");
  }
  // Atkinson's refinement: merge the seed pair, then close the partition
  // under every generator until stable.
  std::vector<std::uint32_t> parent(degree_);
  for (std::uint32_t x = 0; x < degree_; ++x) parent[x] = x;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::vector<std::uint32_t> queue;
  auto unite = [&](std::uint32_t x, std::uint32_t y) {
    const std::uint32_t rx = find(x);
    const std::uint32_t ry = find(y);
    if (rx == ry) return;
    parent[ry] = rx;
    queue.push_back(ry);
  };

  unite(a, b);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t gamma = queue[head];
    const std::uint32_t delta = find(gamma);
    for (const Perm& g : generators_) unite(g[gamma], g[delta]);
  }

  BlockSystem sys;
  sys.block_of.assign(degree_, 0);
  std::unordered_map<std::uint32_t, std::uint32_t> ids;
  for (std::uint32_t x = 0; x < degree_; ++x) {
    const std::uint32_t root = find(x);
    auto [it, fresh] = ids.emplace(root, static_cast<std::uint32_t>(ids.size()));
    sys.block_of[x] = it->second;
    (void)fresh;
  }
  sys.block_count = static_cast<std::uint32_t>(ids.size());
  return sys;
}

bool PermGroup::is_primitive() const {
  if (degree_ < 2) throw ValidationError("primitivity requires degree >= 2");
  if (!is_transitive()) throw ValidationError("primitivity requires a transitive group");
  for (std::uint32_t b = 1; b < degree_; ++b) {
    if (!minimal_block_system(0, b).is_single_block()) return false;
  }
  return true;
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
  if (order_ > cap) throw CapExceeded("element enumeration over cap", cap, order_);
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order_));
  out.emplace_back(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Perm> next;
    next.reserve(out.size() * it->transversal.size());
    for (const Perm& u : it->transversal) {
      for (const Perm& tail : out) next.push_back(u * tail);
    }
    out = std::move(next);
  }
  return out;
}

PermGroup PermGroup::center(std::size_t cap) const {
  std::vector<Perm> central;
  for (const Perm& g : elements(cap)) {
    bool commutes = true;
    for (const Perm& s : generators_) {
      if (!(g * s == s * g)) {
        commutes = false;
        break;
      }
    }
    if (commutes && !g.is_identity()) central.push_back(g);
  }
  if (central.empty()) return trivial(degree_);
  return from_generators(std::move(central));
}

PermGroup PermGroup::centralizer_of_cycle(const Perm& c, std::size_t cap) const {
  if (!contains(c)) throw ValidationError("cycle is not a member of the group");
  auto type = c.cycle_type();
  if (degree_ < 3 || type.size() != 2 || type[0] != degree_ - 1 || type[1] != 1) {
    throw ValidationError("centralizer_of_cycle requires an (n-1)-cycle fixing one point");
  }
  std::vector<Perm> commuting;
  for (const Perm& g : elements(cap)) {
    if (g * c == c * g && !g.is_identity()) commuting.push_back(g);
  }
  PermGroup result = commuting.empty() ? trivial(degree_) : from_generators(std::move(commuting));

  // For an (n-1)-cycle the centralizer in the full symmetric group is the
  // cyclic group on c, so C_G(c) must coincide with the powers of c in G.
  std::uint64_t power_count = 0;
  Perm pw(degree_);
  do {
    pw = c * pw;
    ++power_count;
  } while (!pw.is_identity());
  if (result.order() != power_count) {
    throw Error("centralizer of (n-1)-cycle is not the cycle's own powers");
  }
  return result;
}

std::vector<std::uint64_t> PermGroup::conjugacy_class_sizes(std::size_t cap) const {
  const std::vector<Perm> elems = elements(cap);
  std::unordered_map<Perm, std::size_t> index;
  index.reserve(elems.size() * 2);
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

  std::vector<bool> visited(elems.size(), false);
  std::vector<std::uint64_t> sizes;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (visited[i]) continue;
    visited[i] = true;
    stack.assign(1, i);
    std::uint64_t size = 0;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      ++size;
      for (const Perm& g : generators_) {
        const Perm conj = g * elems[cur] * g.inverse();
        const std::size_t j = index.at(conj);
        if (!visited[j]) {
          visited[j] = true;
          stack.push_back(j);
        }
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<Perm> PermGroup::conjugacy_class_of(const Perm& g, std::size_t cap) const {
  if (!contains(g)) throw ValidationError("conjugacy class seed is not a member of the group");
  std::unordered_set<Perm> seen{g};
  std::vector<Perm> queue{g};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Perm cur = queue[head];
    for (const Perm& s : generators_) {
      Perm conj = s * cur * s.inverse();
      if (seen.insert(conj).second) {
        queue.push_back(std::move(conj));
        if (queue.size() > cap) {
          throw CapExceeded("conjugacy class over cap", cap, queue.size());
        }
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool PermGroup::is_frobenius_action() const {
  if (degree_ < 2) throw ValidationError("Frobenius test requires degree >= 2");
  if (!is_transitive()) throw ValidationError("Frobenius test requires a transitive group");
  if (is_k_transitive(2)) {
    // All pairs of distinct points are equivalent under G, one test decides.
    return stabilizer(0).stabilizer(1).is_trivial();
  }
  for (std::uint32_t x = 0; x < degree_; ++x) {
    const PermGroup Gx = stabilizer(x);
    if (Gx.is_trivial()) continue;
    for (std::uint32_t y = x + 1; y < degree_; ++y) {
      if (!Gx.stabilizer(y).is_trivial()) return false;
    }
  }
  return true;
}

PermGroup PermGroup::normal_closure(const std::vector<Perm>& seeds) const {
  std::vector<Perm> gens;
  std::unordered_set<Perm> seen;
  for (const Perm& s : seeds) {
    if (!s.is_identity() && seen.insert(s).second) gens.push_back(s);
  }
  if (gens.empty()) return trivial(degree_);
  PermGroup N = from_generators(gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (const Perm& g : generators_) {
        Perm conj = g * gens[i] * g.inverse();
        if (!N.contains(conj)) {
          seen.insert(conj);
          gens.push_back(std::move(conj));
          N = from_generators(gens);
          grew = true;
        }
      }
    }
  }
  return N;
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Perm> commutators;
  for (const Perm& a : generators_) {
    for (const Perm& b : generators_) {
      Perm c = a * b * a.inverse() * b.inverse();
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  }
  return normal_closure(commutators);
}

BurnsideReport PermGroup::burnside_dichotomy(std::size_t cap) const {
  if (!is_k_transitive(2)) {
    throw ValidationError("dichotomy test requires a doubly transitive group");
  }

  // One normal closure per conjugacy class suffices: closures of conjugate
  // elements coincide. The minimal closure is a minimal normal subgroup.
  const std::vector<Perm> elems = elements(cap);
  std::unordered_set<Perm> visited;
  PermGroup minimal = trivial(degree_);
  bool have = false;
  for (const Perm& g : elems) {
    if (g.is_identity() || visited.count(g)) continue;
    for (const Perm& c : conjugacy_class_of(g, cap)) visited.insert(c);
    PermGroup ncl = normal_closure({g});
    if (!have || ncl.order() < minimal.order()) {
      minimal = std::move(ncl);
      have = true;
    }
  }
  if (!have) throw ValidationError("dichotomy test requires a nontrivial group");

  BurnsideReport report;
  report.socle_order = minimal.order();
  report.socle_generators = minimal.generators();
  report.regular = minimal.is_transitive() && minimal.order() == degree_;

  report.abelian = true;
  for (const Perm& a : minimal.generators()) {
    for (const Perm& b : minimal.generators()) {
      if (!(a * b == b * a)) {
        report.abelian = false;
        break;
      }
    }
    if (!report.abelian) break;
  }

  report.elementary_abelian = false;
  if (report.abelian) {
    if (auto pp = prime_power(minimal.order())) {
      const std::uint64_t p = pp->first;
      report.elementary_abelian = true;
      for (const Perm& a : minimal.generators()) {
        if (a.order() != p) {
          report.elementary_abelian = false;
          break;
        }
      }
    }
  }

  report.simple = false;
  if (!report.abelian) {
    report.simple = true;
    std::unordered_set<Perm> covered;
    for (const Perm& h : minimal.elements(cap)) {
      if (h.is_identity() || covered.count(h)) continue;
      for (const Perm& c : minimal.conjugacy_class_of(h, cap)) covered.insert(c);
      if (minimal.normal_closure({h}).order() != minimal.order()) {
        report.simple = false;
        break;
      }
    }
  }

  if (report.regular && report.elementary_abelian) {
    report.branch = BurnsideBranch::RegularElementaryAbelian;
  } else if (!report.regular && !report.abelian && report.simple) {
    report.branch = BurnsideBranch::NonabelianSimple;
  } else {
    report.branch = BurnsideBranch::Undetermined;
  }
  return report;
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> out;
  std::unordered_set<Perm> seen;
  for (const Level& lvl : levels_) {
    for (const Perm& g : lvl.gens) {
      if (seen.insert(g).second) out.push_back(g);
    }
  }
  if (out.empty()) out.emplace_back(degree_);
  return out;
}

PermGroup symmetric_group(unsigned n) {
  if (n == 0) throw ValidationError("symmetric group needs at least one point");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<std::uint32_t> transposition(n), cycle(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    transposition[i] = i;
    cycle[i] = (i + 1) % n;
  }
  transposition[0] = 1;
  transposition[1] = 0;
  if (n == 2) return PermGroup::from_generators({Perm(std::move(transposition))});
  return PermGroup::from_generators({Perm(std::move(transposition)), Perm(std::move(cycle))});
}

PermGroup alternating_group(unsigned n) {
  if (n < 3) return PermGroup::trivial(n == 0 ? 1 : n);
  std::vector<std::uint32_t> three(n);
  for (std::uint32_t i = 0; i < n; ++i) three[i] = i;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return PermGroup::from_generators({Perm(std::move(three))});
  std::vector<std::uint32_t> big(n);
  for (std::uint32_t i = 0; i < n; ++i) big[i] = i;
  if (n % 2 == 1) {
    for (std::uint32_t i = 0; i < n; ++i) big[i] = (i + 1) % n;  // n-cycle, even parity
  } else {
    for (std::uint32_t i = 1; i < n; ++i) big[i] = i % (n - 1) + 1;  // (n-1)-cycle on 1..n-1
  }
  return PermGroup::from_generators({Perm(std::move(three)), Perm(std::move(big))});
}

PermGroup cyclic_group(unsigned n) {
  if (n == 0) throw ValidationError("cyclic group needs at least one point");
  std::vector<std::uint32_t> cycle(n);
  for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return PermGroup::from_generators({Perm(std::move(cycle))});
}

}  // namespace qlab
