#include "qlab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qlab/util.hpp"

namespace qlab {

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string next_content_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!is_blank_or_comment(line)) return line;
  }
  throw ValidationError("unexpected end of input");
}

}  // namespace

Quandle read_qnd(std::istream& in) {
  std::istringstream header(next_content_line(in));
  std::string tag;
  std::size_t n = 0;
  if (!(header >> tag >> n) || tag != "quandle" || n == 0) {
    throw ValidationError("expected header \"quandle n\"");
  }
  std::vector<std::vector<std::uint32_t>> table(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::istringstream row(next_content_line(in));
    std::uint32_t v = 0;
    while (row >> v) table[x].push_back(v);
    if (table[x].size() != n) {
      throw ValidationError("row " + std::to_string(x) + " has " +
                            std::to_string(table[x].size()) + " entries, expected " +
                            std::to_string(n));
    }
  }
  return Quandle::from_table(std::move(table));
}

Quandle read_qnd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_qnd(in);
}

std::string to_qnd(const Quandle& q) {
  std::ostringstream os;
  const std::size_t n = q.size();
  os << "quandle " << n << '\n';
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (y) os << ' ';
      os << q.at(x, y);
    }
    os << '\n';
  }
  return os.str();
}

void write_qnd_file(const Quandle& q, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << to_qnd(q);
}

std::vector<Perm> read_perm_list(std::istream& in, std::size_t forced_degree) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!is_blank_or_comment(line)) lines.push_back(line);
  }
  if (lines.empty()) throw ValidationError("no permutations in input");

  // two passes: find the covering degree, then parse
  std::size_t degree = forced_degree;
  if (degree == 0) {
    degree = 1;
    for (const std::string& text : lines) {
      std::uint64_t v = 0;
      bool in_number = false;
      for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
          v = v * 10 + static_cast<std::uint64_t>(ch - '0');
          in_number = true;
        } else if (in_number) {
          degree = std::max<std::size_t>(degree, v + 1);
          v = 0;
          in_number = false;
        }
      }
      if (in_number) degree = std::max<std::size_t>(degree, v + 1);
    }
  }
  std::vector<Perm> perms;
  perms.reserve(lines.size());
  for (const std::string& text : lines) perms.push_back(Perm::parse(text, degree));
  return perms;
}

std::vector<Perm> read_perm_list_file(const std::string& path, std::size_t forced_degree) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_perm_list(in, forced_degree);
}

}  // namespace qlab
