#pragma once

#include "cox/epword.hpp"
#include "cox/oracle.hpp"

namespace cox {

enum class VerdictKind { Yes, No, Unknown };

struct Verdict3 {
  VerdictKind kind;
  std::optional<Root> witness;  // set on No
  long bound = 0;               // probe depth on Unknown
  std::string str() const;      // "yes" | "no <witness>" | "unknown <bound>"
  bool yes() const { return kind == VerdictKind::Yes; }
  bool no() const { return kind == VerdictKind::No; }
};

struct OrderOptions {
  int depth_bound = 6;
  ClassifyOptions cls;
  int commensuration_cap = 12;  // exponent search bound for period alignment
};

// Inv(a) subset of Inv(b)?  No needs a witness root, Yes needs the
// periodic stabilization certificate; Unknown otherwise.
Verdict3 braid_limit_leq(const EPEngine& eng, const EPWord& a, const EPWord& b,
                         const OrderOptions& opt = {});

// Do Inv(a) and Inv(b) differ by finitely many roots?
Verdict3 same_block(const EPEngine& eng, const EPWord& a, const EPWord& b,
                    const OrderOptions& opt = {});

struct ReflectionSubgroup {
  std::vector<Root> generators_in;   // positivized input reflections
  std::vector<Root> closure;         // reflection set found (sorted)
  std::vector<Root> canonical_gens;  // distinguished generating reflections
  std::vector<std::vector<int>> pair_order;  // bond labels, 0 = infinity
  bool closure_complete = true;
  bool infinite = false;  // certified by a disjoint pair of walls

  CoxeterMatrix coxeter_matrix() const;  // on the canonical generators
  std::string type_str() const;          // e.g. "A1", "A1 x A1", "trivial"
};

ReflectionSubgroup canonical_generators(const CoxSystem& sys,
                                        const std::vector<Root>& refl,
                                        std::size_t cap = 2000);

struct WxiResult {
  ReflectionSubgroup subgroup;
  std::vector<Root> xi_walls;  // walls whose boundary holds the limit point
  bool partial = false;        // an Unknown verdict occurred while probing
};

// reflection subgroup fixing the limit point of the word, from the walls
// the word follows (crossed or not)
WxiResult wxi_group(const EPEngine& eng, const EPWord& w,
                    const OrderOptions& opt = {});

// the element of the reflection subgroup whose inversion set inside the
// subgroup equals Inv(w) restricted to the subgroup's reflections;
// returned as a word in the canonical generators
std::vector<int> project_inversions(const CoxSystem& sys, const Word& w,
                                    const ReflectionSubgroup& sub);

struct BlockPoset {
  std::vector<EPWord> words;           // canonical representatives
  std::vector<std::string> labels;
  std::vector<Word> sub_elements;      // matching words in canonical gens
  std::vector<std::vector<bool>> leq;
  std::vector<std::pair<int, int>> covers;  // (lower, upper)
  std::string to_dot() const;
  std::string cover_list() const;
};

// the block of w, enumerated through the finite subgroup fixing its limit
// point; refuses (throws) when that subgroup is infinite or undetermined
BlockPoset block_fiber_poset(const EPEngine& eng, const EPWord& w,
                             const OrderOptions& opt = {});

struct MoussongResult {
  bool hyperbolic;
  std::vector<int> witness;  // obstructing subset when not hyperbolic
  std::string reason;        // "affine" or "product"
  std::string str() const;
};

MoussongResult moussong_hyperbolic(const CoxSystem& sys);

struct EndsResult {
  enum Count { Zero = 0, One = 1, Two = 2, Infinity = 3 };
  Count count;
  std::vector<int> witness;
  std::string evidence;
  std::string str() const;
};

EndsResult ends_count(const CoxSystem& sys);

}  // namespace cox
