#include "cox/oracle.hpp"

#include <algorithm>
#include <set>

namespace cox {
namespace oracle {

int CayleySlice::count_of_length(int l) const {
  int c = 0;
  for (int x : length)
    if (x == l) ++c;
  return c;
}

std::vector<std::string> inversion_key(const CoxSystem& sys, const Word& w) {
  std::vector<std::string> key;
  for (const Root& r : inversion_roots(sys, w)) key.push_back(root_coord_str(r));
  std::sort(key.begin(), key.end());
  return key;
}

CayleySlice bfs_elements(const CoxSystem& sys, int n, std::size_t cap) {
  CayleySlice slice;
  std::map<std::vector<std::string>, int> by_key;

  slice.elements.push_back({});
  slice.length.push_back(0);
  by_key[{}] = 0;
  slice.index[{}] = 0;

  size_t frontier_begin = 0;
  for (int len = 1; len <= n; ++len) {
    size_t frontier_end = slice.elements.size();
    for (size_t x = frontier_begin; x < frontier_end; ++x) {
      for (int s = 0; s < sys.rank(); ++s) {
        Word cand = slice.elements[x];
        cand.push_back(s);
        if (!is_reduced(sys, cand)) continue;
        auto key = inversion_key(sys, cand);
        if (by_key.count(key)) continue;
        int id = static_cast<int>(slice.elements.size());
        by_key[key] = id;
        slice.index[cand] = id;
        slice.elements.push_back(std::move(cand));
        slice.length.push_back(len);
        if (slice.elements.size() > cap) throw Error("bfs_elements: cap exceeded");
      }
    }
    frontier_begin = frontier_end;
  }

  // ascending edges by lookup; descending edges are their inverses
  int m = static_cast<int>(slice.elements.size());
  slice.up.assign(m, std::vector<int>(sys.rank(), -1));
  slice.down.assign(m, std::vector<int>(sys.rank(), -1));
  for (int x = 0; x < m; ++x) {
    for (int s = 0; s < sys.rank(); ++s) {
      Word cand = slice.elements[x];
      cand.push_back(s);
      if (!is_reduced(sys, cand)) continue;
      auto it = by_key.find(inversion_key(sys, cand));
      if (it == by_key.end()) continue;  // product is beyond the slice
      slice.up[x][s] = it->second;
      slice.down[it->second][s] = x;
    }
  }
  return slice;
}

std::vector<Word> all_reduced_words(const CoxSystem& sys, const Word& w) {
  if (!is_reduced(sys, w)) throw Error("all_reduced_words: input not reduced");
  if (w.empty()) return {Word{}};
  std::vector<Word> out;
  // right descents: s with w*s shorter, i.e. alpha_s inverted by w^{-1},
  // equivalently w(alpha_s) < 0: column s of the matrix of w
  GMatrix m = word_matrix(sys, w);
  for (int s = 0; s < sys.rank(); ++s) {
    bool neg = false, pos = false;
    for (int i = 0; i < sys.rank(); ++i) {
      int sg = m[i][s].sign();
      if (sg < 0) neg = true;
      if (sg > 0) pos = true;
    }
    if (!neg || pos) continue;
    // find a reduced word for w*s by the exchange property
    Word target = w;
    target.push_back(s);
    Word shorter;
    bool found = false;
    for (size_t j = 0; j < w.size() && !found; ++j) {
      Word cand = w;
      cand.erase(cand.begin() + j);
      if (!is_reduced(sys, cand)) continue;
      Word check = cand;
      check.push_back(s);
      if (!is_reduced(sys, check)) continue;
      if (inversion_key(sys, check) == inversion_key(sys, w)) {
        shorter = cand;
        found = true;
      }
    }
    if (!found) throw Error("all_reduced_words: exchange failed");
    for (Word sub : all_reduced_words(sys, shorter)) {
      sub.push_back(s);
      out.push_back(std::move(sub));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BrutePoset weak_order_brute(const CoxSystem& sys, int n) {
  BrutePoset p;
  p.slice = bfs_elements(sys, n);
  int m = static_cast<int>(p.slice.elements.size());
  p.leq.assign(m, std::vector<bool>(m, false));
  // reachability along ascending edges, in length order
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&p](int a, int b) { return p.slice.length[a] < p.slice.length[b]; });
  for (int w : order) {
    p.leq[w][w] = true;
    for (int s = 0; s < sys.rank(); ++s) {
      int below = p.slice.down[w][s];
      if (below < 0) continue;
      for (int u = 0; u < m; ++u)
        if (p.leq[u][below]) p.leq[u][w] = true;
    }
  }
  return p;
}

std::vector<Root> reflection_closure_brute(const CoxSystem& sys,
                                           const std::vector<Root>& refl,
                                           std::size_t cap) {
  std::vector<Root> gens;
  RootSet seen;
  for (Root r : refl) {
    if (is_negative(r)) {
      for (auto& c : r.coord) c = -c;
    }
    if (!is_positive(r)) throw Error("reflection_closure_brute: not a root");
    if (seen.insert(r).second) gens.push_back(r);
  }
  std::vector<Root> out = gens, frontier = gens;
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& g : gens) {
      for (const Root& x : frontier) {
        Root img = reflect_by_root(sys, g, x);
        if (is_negative(img))
          for (auto& c : img.coord) c = -c;
        if (seen.insert(img).second) {
          next.push_back(img);
          out.push_back(img);
          if (out.size() > cap) throw Error("reflection_closure_brute: cap exceeded");
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), root_str_less);
  return out;
}

}  // namespace oracle
}  // namespace cox
