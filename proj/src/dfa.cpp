#include "cox/dfa.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cox {

ReducedWordDFA ReducedWordDFA::build(const CoxSystem& sys, const SmallRootSet& srs,
                                     std::size_t state_cap) {
  ReducedWordDFA dfa;
  dfa.rank_ = sys.rank();
  std::map<std::vector<int>, int> ids;
  dfa.states_.push_back({});
  ids[{}] = 0;
  for (size_t head = 0; head < dfa.states_.size(); ++head) {
    std::vector<int> cur = dfa.states_[head];
    std::vector<int> row(sys.rank(), -1);
    for (int s = 0; s < sys.rank(); ++s) {
      if (std::binary_search(cur.begin(), cur.end(), s)) continue;  // alpha_s low
      std::vector<int> nxt{s};
      for (int r : cur) {
        int t = srs.next[r][s];
        if (t == small_negative)
          throw Error("dfa: low set contained alpha_s unnoticed");
        if (t >= 0) nxt.push_back(t);
      }
      std::sort(nxt.begin(), nxt.end());
      nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
      auto it = ids.find(nxt);
      int id;
      if (it == ids.end()) {
        id = static_cast<int>(dfa.states_.size());
        if (dfa.states_.size() >= state_cap) throw Error("dfa: state cap exceeded");
        ids[nxt] = id;
        dfa.states_.push_back(std::move(nxt));
      } else {
        id = it->second;
      }
      row[s] = id;
    }
    dfa.trans_.push_back(std::move(row));
  }
  return dfa;
}

bool ReducedWordDFA::is_reduced(const Word& w) const {
  int st = 0;
  for (int g : w) {
    st = trans_[st][g];
    if (st < 0) return false;
  }
  return true;
}

std::string ReducedWordDFA::to_dot(const SmallRootSet& srs) const {
  std::ostringstream os;
  os << "digraph reduced_words {\n  rankdir=LR;\n";
  for (size_t i = 0; i < states_.size(); ++i) {
    os << "  q" << i << " [label=\"{";
    for (size_t j = 0; j < states_[i].size(); ++j) {
      if (j) os << ",";
      os << states_[i][j];
    }
    os << "}\"];\n";
  }
  for (size_t i = 0; i < states_.size(); ++i)
    for (int s = 0; s < rank_; ++s)
      if (trans_[i][s] >= 0)
        os << "  q" << i << " -> q" << trans_[i][s] << " [label=\"" << (s + 1)
           << "\"];\n";
  os << "}\n";
  (void)srs;
  return os.str();
}

}  // namespace cox
