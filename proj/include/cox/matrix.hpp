#pragma once

#include <string>
#include <vector>

#include "cox/ring.hpp"

namespace cox {

// Bond labels: m >= 1 finite, 0 encodes infinity.
inline constexpr int infinite_bond = 0;
inline bool bond_is_finite(int m) { return m != infinite_bond; }

class CoxeterMatrix {
 public:
  CoxeterMatrix(int rank, std::vector<std::vector<int>> entries);

  // Text format: first non-comment line is the rank n, followed by n rows
  // of n whitespace-separated tokens; a token is a positive integer, `inf`,
  // or `0` (the last two both meaning infinity).  Lines starting with `#`
  // are ignored.
  static CoxeterMatrix parse(const std::string& text);
  static CoxeterMatrix parse_file(const std::string& path);

  int rank() const { return rank_; }
  int bond(int i, int j) const { return entries_[i][j]; }
  bool finite_bond(int i, int j) const { return bond_is_finite(entries_[i][j]); }

  // lcm of the finite off-diagonal bonds; 1 if there are none
  long ring_level() const { return level_; }

  std::vector<int> all_indices() const;
  // connected components of the induced diagram on `subset`
  // (edges are pairs with bond != 2)
  std::vector<std::vector<int>> components(const std::vector<int>& subset) const;
  bool connected(const std::vector<int>& subset) const;

  std::string str() const;

 private:
  int rank_;
  std::vector<std::vector<int>> entries_;
  long level_;
};

}  // namespace cox
