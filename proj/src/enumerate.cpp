#include "qlab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "qlab/util.hpp"

namespace qlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Quandle> iso_reduce(const std::vector<Quandle>& raw) {
  std::vector<Quandle> reps;
  for (const Quandle& q : raw) {
    bool fresh = true;
    for (const Quandle& rep : reps) {
      if (q.is_isomorphic_to(rep)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(q);
  }
  std::sort(reps.begin(), reps.end(), [](const Quandle& a, const Quandle& b) {
    return a.flat_table() < b.flat_table();
  });
  return reps;
}

// ---------------------------------------------------------------------------
// Cyclic-type search
// ---------------------------------------------------------------------------

struct CyclicTask {
  // candidate rows at the pivot share a fixed first image s1 = phi(x0)
  std::uint32_t s1 = 0;
  std::uint64_t candidates = 0;
  std::vector<std::vector<std::uint32_t>> accepted;  // flat tables
};

struct CyclicSearch {
  unsigned n;
  std::uint32_t x0;                     // fixed point of the pinned row
  std::uint32_t y0;                     // pivot whose row is the candidate
  std::vector<std::uint32_t> c;         // pinned row as image table
  std::vector<std::vector<std::uint32_t>> cpow;     // c^k, k = 0..n-2
  std::vector<std::vector<std::uint32_t>> cpow_inv; // c^-k
  std::vector<std::uint32_t> shift_of;  // point t != x0 -> k with c^k(y0) = t

  explicit CyclicSearch(unsigned n_, const Perm& first_row) : n(n_) {
    const auto type = first_row.cycle_type();
    if (type.size() != 2 || type[0] != n - 1 || type[1] != 1) {
      throw ValidationError("pinned row must be an (n-1)-cycle with one fixed point");
    }
    c = first_row.images();
    x0 = 0;
    while (c[x0] != x0) ++x0;
    y0 = x0 == 0 ? 1 : 0;

    cpow.assign(n - 1, std::vector<std::uint32_t>(n));
    cpow_inv.assign(n - 1, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i) {
      cpow[0][i] = i;
      cpow_inv[0][i] = i;
    }
    for (std::uint32_t k = 1; k + 1 < n; ++k) {
      for (std::uint32_t i = 0; i < n; ++i) cpow[k][i] = c[cpow[k - 1][i]];
      for (std::uint32_t i = 0; i < n; ++i) cpow_inv[k][cpow[k][i]] = i;
    }

    shift_of.assign(n, 0);
    std::uint32_t t = y0;
    for (std::uint32_t k = 0; k + 1 < n; ++k) {
      shift_of[t] = k;
      t = c[t];
    }
  }

  // Candidate = ordering (s1, ..., s_{n-2}) of the points outside {x0,y0};
  // the pivot row maps x0 -> s1 -> ... -> s_{n-2} -> x0 and fixes y0.
  void build_row(const std::vector<std::uint32_t>& seq, std::vector<std::uint32_t>& row) const {
    row[y0] = y0;
    std::uint32_t prev = x0;
    for (std::uint32_t s : seq) {
      row[prev] = s;
      prev = s;
    }
    row[prev] = x0;
  }

  // Necessary condition from the pair (y0, x0): the row forced at
  // phi(x0) = s1 as a conjugate of the pinned row must equal
  // phi * c * phi^-1 pointwise. Kills almost every candidate in O(1).
  bool fast_filter(const std::vector<std::uint32_t>& row, std::uint32_t s1) const {
    const std::uint32_t k = shift_of[s1];
    const auto& ck = cpow[k];
    const auto& cki = cpow_inv[k];
    for (std::uint32_t t = 0; t < n; ++t) {
      const std::uint32_t u = row[t];
      // A(u) with A = row.c.row^-1 equals row[c[t]]
      if (row[c[t]] != ck[row[cki[u]]]) return false;
    }
    return true;
  }

  // Full check: with every row forced, left self-distributivity for the
  // pivot row against all rows; conjugation symmetry covers the rest.
  bool accept(const std::vector<std::uint32_t>& row, std::vector<std::uint32_t>& table) const {
    // rows by conjugation
    for (std::uint32_t t = 0; t < n; ++t) {
      if (t == x0) {
        for (std::uint32_t i = 0; i < n; ++i) table[t * n + i] = c[i];
      } else {
        const std::uint32_t k = shift_of[t];
        const auto& ck = cpow[k];
        for (std::uint32_t i = 0; i < n; ++i) table[t * n + ck[i]] = ck[row[i]];
      }
    }
    // phi_{row[y]} == row . phi_y . row^-1 for all y
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t target = row[y];
      for (std::uint32_t i = 0; i < n; ++i) {
        if (table[target * n + row[i]] != row[table[y * n + i]]) return false;
      }
    }
    return true;
  }

  void run_task(CyclicTask& task) const {
    std::vector<std::uint32_t> rest;
    for (std::uint32_t t = 0; t < n; ++t) {
      if (t != x0 && t != y0 && t != task.s1) rest.push_back(t);
    }
    std::sort(rest.begin(), rest.end());

    std::vector<std::uint32_t> seq(n - 2);
    std::vector<std::uint32_t> row(n);
    std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
    do {
      seq[0] = task.s1;
      std::copy(rest.begin(), rest.end(), seq.begin() + 1);
      ++task.candidates;
      build_row(seq, row);
      if (!fast_filter(row, task.s1)) continue;
      if (accept(row, table)) task.accepted.push_back(table);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
};

// ---------------------------------------------------------------------------
// Connected brute-force search
// ---------------------------------------------------------------------------

struct ConnectedSearch {
  unsigned n;
  std::vector<std::vector<std::uint32_t>> rows;      // set rows (empty = unset)
  std::vector<std::vector<std::uint32_t>> forced;    // pending forced values
  std::uint64_t nodes = 0;
  std::vector<std::vector<std::uint32_t>> accepted;  // flat tables

  explicit ConnectedSearch(unsigned n_)
      : n(n_), rows(n_), forced(n_) {}

  static std::string type_of(const std::vector<std::uint32_t>& images) {
    std::vector<std::uint32_t> lens;
    std::vector<bool> seen(images.size(), false);
    for (std::uint32_t s = 0; s < images.size(); ++s) {
      if (seen[s]) continue;
      std::uint32_t len = 0;
      for (std::uint32_t x = s; !seen[x]; x = images[x]) {
        seen[x] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    std::string out;
    for (std::uint32_t l : lens) {
      out += std::to_string(l);
      out += '.';
    }
    return out;
  }

  // Constraints from the pair (a, b), both rows set: the row at a*b is
  // phi_a phi_b phi_a^-1. Returns false on conflict; records new forcings
  // and checks already-set rows.
  bool constrain(std::uint32_t a, std::uint32_t b, std::vector<std::uint32_t>& touched) {
    const auto& ra = rows[a];
    const auto& rb = rows[b];
    const std::uint32_t t = ra[b];
    std::vector<std::uint32_t> conj(n);
    for (std::uint32_t i = 0; i < n; ++i) conj[ra[i]] = ra[rb[i]];
    if (!rows[t].empty()) return rows[t] == conj;
    if (!forced[t].empty()) return forced[t] == conj;
    forced[t] = std::move(conj);
    touched.push_back(t);
    return true;
  }

  bool set_row(std::uint32_t x, std::vector<std::uint32_t> images,
               std::vector<std::uint32_t>& touched_forced,
               std::vector<std::uint32_t>& touched_set, const std::string& want_type) {
    if (!want_type.empty() && type_of(images) != want_type) return false;
    rows[x] = std::move(images);
    touched_set.push_back(x);
    ++nodes;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (rows[b].empty() || b == x) continue;
      if (!constrain(x, b, touched_forced)) return false;
      if (!constrain(b, x, touched_forced)) return false;
    }
    return constrain(x, x, touched_forced);
  }

  void undo(const std::vector<std::uint32_t>& touched_forced,
            const std::vector<std::uint32_t>& touched_set) {
    for (std::uint32_t t : touched_forced) forced[t].clear();
    for (std::uint32_t x : touched_set) rows[x].clear();
  }

  void complete() {
    // all rows set; every pair constraint has been checked on the way
    std::vector<std::uint32_t> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());

    // connectivity: orbit of 0 under all rows
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::uint32_t p = stack.back();
      stack.pop_back();
      for (std::uint32_t x = 0; x < n; ++x) {
        const std::uint32_t img = flat[x * n + p];
        if (!seen[img]) {
          seen[img] = true;
          ++count;
          stack.push_back(img);
        }
      }
    }
    if (count == n) accepted.push_back(std::move(flat));
  }

  void dfs() {
    std::uint32_t x = 0;
    while (x < n && !rows[x].empty()) ++x;
    if (x == n) {
      complete();
      return;
    }
    const std::string want = x == 0 ? std::string() : type_of(rows[0]);
    if (!forced[x].empty()) {
      std::vector<std::uint32_t> images = forced[x];
      if (images[x] != x) return;  // forced row must fix its own index
      std::vector<std::uint32_t> tf, ts;
      if (set_row(x, std::move(images), tf, ts, want)) dfs();
      undo(tf, ts);
      return;
    }
    // branch over permutations of the other points, row fixes x
    std::vector<std::uint32_t> others;
    for (std::uint32_t t = 0; t < n; ++t) {
      if (t != x) others.push_back(t);
    }
    std::vector<std::uint32_t> perm = others;
    do {
      std::vector<std::uint32_t> images(n);
      images[x] = x;
      for (std::size_t i = 0; i < others.size(); ++i) images[others[i]] = perm[i];
      std::vector<std::uint32_t> tf, ts;
      if (set_row(x, std::move(images), tf, ts, want)) dfs();
      undo(tf, ts);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
};

std::vector<Quandle> tables_to_quandles(const std::vector<std::vector<std::uint32_t>>& flats,
                                        unsigned n) {
  std::vector<Quandle> out;
  out.reserve(flats.size());
  for (const auto& flat : flats) {
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) table[x][y] = flat[x * n + y];
    }
    out.push_back(Quandle::from_table(std::move(table)));
  }
  return out;
}

}  // namespace

EnumerationResult enumerate_cyclic(unsigned n, const CyclicEnumOptions& options) {
  if (n < 3) throw ValidationError("cyclic-type search starts at n = 3");
  if (n > 13 && !options.allow_large) {
    throw ValidationError("n beyond 13 requires the long-run override");
  }
  const auto start = Clock::now();

  Perm first_row(0);
  if (options.first_row) {
    if (options.first_row->degree() != n) throw ValidationError("pinned row degree mismatch");
    first_row = *options.first_row;
  } else {
    std::vector<std::uint32_t> images(n);
    images[0] = 0;
    for (std::uint32_t i = 1; i < n; ++i) images[i] = i + 1 == n ? 1 : i + 1;
    first_row = Perm(std::move(images));
  }

  const CyclicSearch search(n, first_row);

  std::vector<CyclicTask> tasks;
  for (std::uint32_t t = 0; t < n; ++t) {
    if (t != search.x0 && t != search.y0) {
      CyclicTask task;
      task.s1 = t;
      tasks.push_back(task);
    }
  }

  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));

  if (workers <= 1 || tasks.size() <= 1) {
    for (CyclicTask& task : tasks) search.run_task(task);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) break;
          search.run_task(tasks[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // merge in task order: results are independent of the worker count
  std::vector<std::vector<std::uint32_t>> accepted;
  std::uint64_t candidates = 0;
  for (const CyclicTask& task : tasks) {
    candidates += task.candidates;
    accepted.insert(accepted.end(), task.accepted.begin(), task.accepted.end());
  }

  std::vector<Quandle> raw = tables_to_quandles(accepted, n);
  for (const Quandle& q : raw) {
    if (!q.is_cyclic_type()) throw Error("search produced a non-cyclic table");
  }

  EnumerationResult result;
  result.representatives = iso_reduce(raw);
  result.stats.n = n;
  result.stats.candidates_tested = candidates;
  result.stats.found_raw = raw.size();
  result.stats.found_iso = result.representatives.size();
  result.stats.elapsed_seconds = seconds_since(start);
  return result;
}

EnumerationResult enumerate_connected_bruteforce(unsigned n, bool long_run) {
  if (n < 1) throw ValidationError("size must be positive");
  const unsigned bound = long_run ? 7 : 6;
  if (n > bound) {
    throw ValidationError("connected search capped at n = " + std::to_string(bound) +
                          (long_run ? "" : " (pass the long-run override for 7)"));
  }
  const auto start = Clock::now();

  ConnectedSearch search(n);
  search.dfs();

  std::vector<Quandle> raw = tables_to_quandles(search.accepted, n);
  EnumerationResult result;
  result.representatives = iso_reduce(raw);
  result.stats.n = n;
  result.stats.candidates_tested = search.nodes;
  result.stats.found_raw = raw.size();
  result.stats.found_iso = result.representatives.size();
  result.stats.elapsed_seconds = seconds_since(start);
  return result;
}

std::uint64_t cyclic_count_formula(std::uint64_t q) {
  const auto pm = prime_power(q);
  if (!pm || q < 3) throw ValidationError("count formula needs a prime power q >= 3");
  const std::uint64_t phi = euler_phi(q - 1);
  if (phi % pm->second != 0) {
    throw Error("phi(q-1) not divisible by the extension degree (unreachable)");
  }
  return phi / pm->second;
}

}  // namespace qlab
