#pragma once

#include "cox/smallroots.hpp"
#include "cox/word.hpp"

namespace cox {

// Canonical reduced-word recognizer.  A state is the set of small roots
// currently inverted ("low"); reading s from a state containing alpha_s
// rejects, otherwise the set is reflected and alpha_s joins it.  All
// states are accepting; the missing transition means "not reduced".
class ReducedWordDFA {
 public:
  static ReducedWordDFA build(const CoxSystem& sys, const SmallRootSet& srs,
                              std::size_t state_cap = 1000000);

  int start() const { return 0; }
  // -1 rejects
  int step(int state, int gen) const { return trans_[state][gen]; }
  bool is_reduced(const Word& w) const;
  std::size_t num_states() const { return states_.size(); }
  const std::vector<int>& state_members(int st) const { return states_[st]; }
  int rank() const { return rank_; }

  std::string to_dot(const SmallRootSet& srs) const;

 private:
  int rank_ = 0;
  std::vector<std::vector<int>> states_;  // sorted small-root index sets
  std::vector<std::vector<int>> trans_;
};

// ShortLex-least reduced word of the same element (any input word).
inline Word normal_form(const CoxSystem& sys, const Word& w) {
  return normal_form_of_element(sys, w);
}

}  // namespace cox
