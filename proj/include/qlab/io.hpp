#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qlab/perm.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

/// Text format for quandles (.qnd): a "quandle n" header, then n rows of n
/// space-separated 0-based entries, row x holding x * y for y = 0..n-1.
/// Lines starting with '#' are comments and may appear anywhere.
Quandle read_qnd(std::istream& in);
Quandle read_qnd_file(const std::string& path);
std::string to_qnd(const Quandle& q);
void write_qnd_file(const Quandle& q, const std::string& path);

/// Group files: one permutation in cycle notation per line, '#' comments.
/// The degree is the smallest covering all points unless a larger one is
/// forced.
std::vector<Perm> read_perm_list(std::istream& in, std::size_t forced_degree = 0);
std::vector<Perm> read_perm_list_file(const std::string& path, std::size_t forced_degree = 0);

}  // namespace qlab
