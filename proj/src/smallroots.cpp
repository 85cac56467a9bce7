#include "cox/smallroots.hpp"

namespace cox {

bool dominance_test(const CoxSystem& sys, const Root& beta, const Root& gamma) {
  if (beta == gamma) throw Error("dominance_test: roots must be distinct");
  FieldElement d = bilinear(sys, beta, gamma) - sys.field().one();
  return d.sign() >= 0;
}

SmallRootSet build_small_roots(const CoxSystem& sys, std::size_t cap) {
  SmallRootSet srs;
  const NumberField& F = sys.field();
  for (int i = 0; i < sys.rank(); ++i) {
    Root a = simple_root(sys, i);
    srs.lookup[a] = i;
    srs.roots.push_back(std::move(a));
  }
  // breadth-first closure upward in depth
  for (size_t head = 0; head < srs.roots.size(); ++head) {
    Root beta = srs.roots[head];  // copy: srs.roots may reallocate
    for (int s = 0; s < sys.rank(); ++s) {
      FieldElement c = bilinear_with_simple(sys, s, beta);
      int cs = c.sign();
      if (cs >= 0) continue;                       // not depth-increasing
      if ((c + F.one()).sign() <= 0) continue;     // image dominates alpha_s
      Root img = reflect(sys, beta, s);
      if (srs.lookup.count(img)) continue;
      if (srs.roots.size() >= cap)
        throw Error("small-root cap exceeded (" + std::to_string(cap) + ")");
      srs.lookup[img] = static_cast<int>(srs.roots.size());
      srs.roots.push_back(std::move(img));
    }
  }
  // full transition table
  srs.next.assign(srs.roots.size(), std::vector<int>(sys.rank(), small_escaped));
  for (size_t r = 0; r < srs.roots.size(); ++r) {
    const Root& beta = srs.roots[r];
    for (int s = 0; s < sys.rank(); ++s) {
      if (static_cast<int>(r) == s) {
        srs.next[r][s] = small_negative;
        continue;
      }
      FieldElement c = bilinear_with_simple(sys, s, beta);
      if ((c + F.one()).sign() <= 0) {
        srs.next[r][s] = small_escaped;
        srs.dominance_pairs.emplace_back(reflect(sys, beta, s), simple_root(sys, s));
        continue;
      }
      if (c.is_zero()) {
        srs.next[r][s] = static_cast<int>(r);
        continue;
      }
      Root img = reflect(sys, beta, s);
      int idx = srs.index_of(img);
      if (idx < 0)
        throw Error("small-root set not closed; construction bug");
      srs.next[r][s] = idx;
    }
  }
  return srs;
}

}  // namespace cox
