#pragma once

#include "cox/order.hpp"

namespace cox {

// A face of the reflection arrangement of a finite system: the sign of
// B(x, beta) for an interior point x, over every positive root beta.
struct ArrangementFace {
  std::vector<int> signs;  // -1, 0, +1 per positive root
  int dimension;
  std::string str() const;  // "+-0..." in root order

  bool operator==(const ArrangementFace& o) const { return signs == o.signs; }
  bool operator<(const ArrangementFace& o) const;
};

struct FiniteArrangement {
  std::vector<Root> positive_roots;     // of the finite system
  std::vector<ArrangementFace> faces;   // all faces except the origin
};

// enumerate chambers by group BFS and collect the sign vectors of every
// w-translate of every face of the fundamental domain
FiniteArrangement finite_arrangement_faces(const CoxSystem& finite_sys,
                                           std::size_t cap = 100000);

struct CensusEntry {
  ArrangementFace face;
  std::vector<EPWord> words;
  std::string wxi_type;
  bool wxi_infinite = false;
  bool chamber = false;  // full-dimensional face
};

struct CensusReport {
  // finite Weyl system data: the affine system with the last generator removed
  std::vector<int> finite_part;         // generator indices kept
  std::vector<Root> finite_roots;       // positive roots, ambient coordinates
  std::vector<CensusEntry> entries;     // sorted by face string
  std::vector<std::pair<EPWord, std::string>> unassigned;  // word, reason
  std::string table() const;
};

// assign each EP word to a face of the finite arrangement through the
// side pattern of its walls, grouped by parallelism class
CensusReport affine_block_census(const EPEngine& eng,
                                 const std::vector<EPWord>& words,
                                 int depth_bound,
                                 const OrderOptions& opt = {});

}  // namespace cox
