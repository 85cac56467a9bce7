#pragma once

#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cox/system.hpp"

namespace cox {

// A vector in the root space, coordinates over the simple-root basis.
struct Root {
  std::vector<FieldElement> coord;

  bool operator==(const Root& o) const { return coord == o.coord; }
  bool operator!=(const Root& o) const { return coord != o.coord; }
};

struct RootHash {
  std::size_t operator()(const Root& r) const {
    std::size_t h = 0x8f3b0c7a5d2e4f1bULL;
    for (const auto& c : r.coord)
      h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

using RootSet = std::unordered_set<Root, RootHash>;
template <typename T>
using RootMap = std::unordered_map<Root, T, RootHash>;

Root simple_root(const CoxSystem& sys, int i);
Root zero_vector(const CoxSystem& sys);

bool is_positive(const Root& r);  // all coordinates >= 0, not all zero
bool is_negative(const Root& r);

// B(alpha_i, x)
FieldElement bilinear_with_simple(const CoxSystem& sys, int i, const Root& x);
// B(x, y)
FieldElement bilinear(const CoxSystem& sys, const Root& x, const Root& y);

// s_i(x) = x - 2 B(alpha_i, x) alpha_i
void reflect_in_place(const CoxSystem& sys, Root& x, int i);
Root reflect(const CoxSystem& sys, const Root& x, int i);
// reflection in an arbitrary root: x - 2 B(r, x) r
Root reflect_by_root(const CoxSystem& sys, const Root& r, const Root& x);

// Minimal length of a word inverting the positive root, computed by
// greedy descent (each step with B(alpha_i, x) > 0 lowers depth by one).
int depth(const CoxSystem& sys, Root x);

// all positive roots of depth <= d, ordered by depth then coordinates
std::vector<Root> roots_up_to_depth(const CoxSystem& sys, int d,
                                    std::size_t cap = 2000000);

std::string root_str(const Root& r);          // e.g. "a1+2*a3"
std::string root_coord_str(const Root& r);    // e.g. "[1, 2, 0]"
// deterministic comparison used for canonical orderings
bool root_str_less(const Root& a, const Root& b);

}  // namespace cox
