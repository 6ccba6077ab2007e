#include "qlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qlab/util.hpp"

namespace qlab {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw ValidationError("image table is not a bijection on {0.." +
                            std::to_string(images_.size()) + "-1}");
    }
    seen[v] = true;
  }
}

Perm Perm::parse(const std::string& text, std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ValidationError("empty permutation text");
  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ValidationError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw ValidationError("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ValidationError("expected point or ')' in cycle notation: " + text);
      }
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        ++i;
      }
      if (v >= degree) {
        throw ValidationError("point " + std::to_string(v) + " out of range for degree " +
                              std::to_string(degree));
      }
      auto pt = static_cast<std::uint32_t>(v);
      if (used[pt]) throw ValidationError("point " + std::to_string(v) + " repeated in cycles");
      used[pt] = true;
      cycle.push_back(pt);
    }
    any_cycle = true;
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) images[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) images[cycle.back()] = cycle.front();
  }
  if (!any_cycle) throw ValidationError("no cycles in permutation text: " + text);
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  for (std::uint32_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw ValidationError("degree mismatch in composition: " + std::to_string(a.degree()) +
                          " vs " + std::to_string(b.degree()));
  }
  Perm r;
  r.images_.resize(a.degree());
  for (std::uint32_t x = 0; x < a.degree(); ++x) r.images_[x] = a.images_[b.images_[x]];
  return r;
}

std::string Perm::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    os << '(' << start;
    seen[start] = true;
    for (std::uint32_t x = images_[start]; x != start; x = images_[x]) {
      os << ' ' << x;
      seen[x] = true;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

std::uint32_t Perm::smallest_moved() const {
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return x;
  }
  return static_cast<std::uint32_t>(images_.size());
}

std::vector<std::uint32_t> Perm::cycle_type() const {
  std::vector<std::uint32_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint32_t len = 0;
    for (std::uint32_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.to_cycles(); }

}  // namespace qlab
