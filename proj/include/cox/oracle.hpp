#pragma once

#include <map>

#include "cox/word.hpp"

namespace cox {
namespace oracle {

// Everything in this namespace is computed from first definitions (root
// tracking only), for use as ground truth in tests.  No automaton, no
// small roots, no shortcuts; determinism over speed.

struct CayleySlice {
  std::vector<Word> elements;   // ShortLex normal forms, sorted by (length, lex)
  std::vector<int> length;
  // up[x][s]: index of x*s when longer and still inside the slice, else -1
  std::vector<std::vector<int>> up;
  // down[x][s]: index of x*s when shorter, else -1
  std::vector<std::vector<int>> down;
  std::map<Word, int> index;

  int count_of_length(int l) const;
};

CayleySlice bfs_elements(const CoxSystem& sys, int n, std::size_t cap = 500000);

// all reduced words for the element represented by `w` (must be reduced)
std::vector<Word> all_reduced_words(const CoxSystem& sys, const Word& w);

struct BrutePoset {
  CayleySlice slice;
  // leq[u][w]: u is below w in the (right) weak order
  std::vector<std::vector<bool>> leq;
};

BrutePoset weak_order_brute(const CoxSystem& sys, int n);

// reflection set of the subgroup generated by the given reflections:
// orbit of the generating roots under repeated generator reflections
std::vector<Root> reflection_closure_brute(const CoxSystem& sys,
                                           const std::vector<Root>& refl,
                                           std::size_t cap);

// sorted canonical key for an element: its inversion-root set
std::vector<std::string> inversion_key(const CoxSystem& sys, const Word& w);

}  // namespace oracle
}  // namespace cox
