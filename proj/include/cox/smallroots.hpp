#pragma once

#include "cox/root.hpp"

namespace cox {

// Transition codes for the reflection action on small roots.
inline constexpr int small_negative = -1;  // beta = alpha_s, image is negative
inline constexpr int small_escaped = -2;   // image dominates alpha_s

// The finite set of small roots: positive roots that dominate no other
// positive root.  Closed under the generator action in the sense that the
// image of a small root is another small root, goes negative, or escapes
// (becomes dominating) for good.
struct SmallRootSet {
  std::vector<Root> roots;  // indices 0..rank-1 are the simple roots
  std::vector<std::vector<int>> next;  // next[r][s]: index or code above
  std::vector<std::pair<Root, Root>> dominance_pairs;  // (dominating, dominated)

  int index_of(const Root& r) const {
    auto it = lookup.find(r);
    return it == lookup.end() ? -1 : it->second;
  }
  RootMap<int> lookup;
};

// BFS closure of the simple roots; a reflection with -1 < B(alpha_s, beta) < 0
// yields a new small root, B <= -1 escapes.  Throws when the cap is hit.
SmallRootSet build_small_roots(const CoxSystem& sys, std::size_t cap = 10000);

// B(beta, gamma) >= 1 for distinct positive roots; the deeper root then
// dominates the shallower one.
bool dominance_test(const CoxSystem& sys, const Root& beta, const Root& gamma);

}  // namespace cox
