#pragma once

#include <optional>

#include "cox/classify.hpp"
#include "cox/dfa.hpp"
#include "cox/smallroots.hpp"

namespace cox {

// Eventually periodic infinite word u v v v ...  Canonical form: the period
// is primitive (not a proper power) and the prefix is minimal (while the
// last prefix letter equals the last period letter, it is pulled into a
// rotated period).  Canonical representations of equal letter sequences
// are identical.
struct EPWord {
  Word prefix, period;

  bool operator==(const EPWord& o) const {
    return prefix == o.prefix && period == o.period;
  }
  bool operator<(const EPWord& o) const {
    return str() < o.str();
  }
  int letter(std::size_t k) const {
    if (k < prefix.size()) return prefix[k];
    return period[(k - prefix.size()) % period.size()];
  }
  std::string str() const;
};

EPWord make_ep_word(Word u, Word v);
// parse 1-based text, e.g. prefix "1", period "2 5"
EPWord parse_ep_word(const std::string& prefix, const std::string& period, int rank);

enum class WallVerdict { Crossed, Boundary, Divergent, Unknown };

std::string wall_verdict_str(WallVerdict v);

struct WallClass {
  WallVerdict verdict;
  long crossed_step = 0;   // Crossed: 1-based letter index
  long orbit_length = 0;   // Boundary: period-map cycle length
  long bound = 0;          // Unknown: exhausted step cap
  // Divergent evidence: consecutive boundary values with B >= 1 and
  // strictly increasing depth
  std::optional<Root> evidence_from, evidence_to;
  std::string str() const;
};

struct ClassifyOptions {
  long step_cap = 0;       // 0: 64 * |period| * |small roots|
  int growth_window = 3;   // consecutive growing periods before certifying
};

// Which side of a wall the limit point of the word lies on.
enum class WallSide { OnBoundary, Positive, Negative, Unknown };

struct SideInfo {
  WallSide side;
  bool crossed;
  long crossed_step;  // valid when crossed
  WallClass primary;  // classification of the root against the word
  WallClass tail;     // after crossing: classification of the far side
};

struct BoundarySet {
  std::vector<Root> roots;  // verdict Boundary, by depth then coordinates
  bool infinite;            // a pair of returned walls is disjoint
  bool complete;            // no Unknown verdict among probed roots
  std::vector<Root> unknown_roots;
};

// Per-system engine bundling the small-root set and the recognizer.
class EPEngine {
 public:
  explicit EPEngine(const CoxSystem& sys, std::size_t small_cap = 10000);

  const CoxSystem& system() const { return sys_; }
  const SmallRootSet& small_roots() const { return srs_; }
  const ReducedWordDFA& dfa() const { return dfa_; }

  // every finite truncation is reduced (decided by state recurrence)
  bool ep_is_reduced(const EPWord& w) const;

  // trichotomy of a positive root against a reduced EP word
  WallClass root_membership(const EPWord& w, const Root& beta,
                            const ClassifyOptions& opt = {}) const;

  SideInfo wall_side(const EPWord& w, const Root& beta,
                     const ClassifyOptions& opt = {}) const;

  BoundarySet boundary_reflections(const EPWord& w, int depth_bound,
                                   const ClassifyOptions& opt = {}) const;

  // positive roots of depth <= d, cached
  const std::vector<Root>& roots_to_depth(int d) const;

  // all canonical EP-reduced words within the size bounds, sorted
  std::vector<EPWord> enumerate_ep_words(int max_prefix, int max_period) const;

 private:
  void require_infinite(const char* op) const;

  const CoxSystem& sys_;
  SmallRootSet srs_;
  ReducedWordDFA dfa_;
  bool group_finite_;
  mutable std::vector<std::pair<int, std::vector<Root>>> root_cache_;
};

}  // namespace cox
