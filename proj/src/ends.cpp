#include "cox/order.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace cox {

namespace {

std::string subset_str(const std::vector<int>& t) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ",";
    os << t[i] + 1;
  }
  os << "}";
  return os.str();
}

// subsets of 0..n-1 ordered by size then lexicographically
std::vector<std::vector<int>> subsets_by_size(int n, int min_size) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> t;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) t.push_back(i);
    if (static_cast<int>(t.size()) >= min_size) out.push_back(std::move(t));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace

std::string MoussongResult::str() const {
  if (hyperbolic) return "hyperbolic: yes";
  return "hyperbolic: no (" + reason + " witness T = " + subset_str(witness) + ")";
}

MoussongResult moussong_hyperbolic(const CoxSystem& sys) {
  int n = sys.rank();
  if (n > 20) throw Error("moussong_hyperbolic: rank too large for subset scan");
  for (const auto& t : subsets_by_size(n, 2)) {
    auto comps = sys.matrix().components(t);
    if (comps.size() >= 2) {
      int infinite_comps = 0;
      for (const auto& c : comps)
        if (!is_spherical(sys, c)) ++infinite_comps;
      if (infinite_comps >= 2) return {false, t, "product"};
    } else if (t.size() >= 3) {
      SubgroupType st = subgroup_classify(sys, t);
      if (st.cls == SubgroupClass::Affine) return {false, t, "affine"};
    }
  }
  return {true, {}, ""};
}

std::string EndsResult::str() const {
  std::string n;
  switch (count) {
    case Zero: n = "0"; break;
    case One: n = "1"; break;
    case Two: n = "2"; break;
    default: n = "infinity"; break;
  }
  std::string s = "ends: " + n;
  if (!evidence.empty()) s += " (" + evidence + ")";
  return s;
}

EndsResult ends_count(const CoxSystem& sys) {
  int n = sys.rank();
  if (n > 20) throw Error("ends_count: rank too large for subset scan");
  std::vector<int> all = sys.matrix().all_indices();

  if (is_spherical(sys, all)) return {EndsResult::Zero, {}, "finite group"};

  // two ends: one infinite-dihedral diagram component, the rest spherical
  {
    auto comps = sys.matrix().components(all);
    int dinf = -1;
    bool rest_spherical = true;
    for (size_t c = 0; c < comps.size(); ++c) {
      if (comps[c].size() == 2 &&
          !sys.matrix().finite_bond(comps[c][0], comps[c][1])) {
        if (dinf == -1) {
          dinf = static_cast<int>(c);
          continue;
        }
      }
      if (!is_spherical(sys, comps[c])) rest_spherical = false;
    }
    if (dinf >= 0 && rest_spherical)
      return {EndsResult::Two, comps[dinf],
              "infinite dihedral factor " + subset_str(comps[dinf])};
  }

  // punctured nerves: vertices are generators, edges are spherical pairs;
  // deleting the closed simplex of a spherical T keeps simplices not
  // containing T.  T = {} stands for the nerve itself.
  auto punctured_connected = [&sys, n](const std::vector<int>& t) {
    std::vector<int> verts;
    for (int s = 0; s < n; ++s) {
      if (t.size() == 1 && t[0] == s) continue;
      verts.push_back(s);
    }
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (size_t a = 0; a < verts.size(); ++a)
      for (size_t b = a + 1; b < verts.size(); ++b) {
        int u = verts[a], v = verts[b];
        if (!sys.matrix().finite_bond(u, v)) continue;  // pair not spherical
        if (t.size() == 2 && ((t[0] == u && t[1] == v) || (t[0] == v && t[1] == u)))
          continue;  // edge removed with the simplex
        parent[find(u)] = find(v);
      }
    int comps = 0;
    for (int v : verts)
      if (find(v) == v) ++comps;
    return comps <= 1;
  };

  for (const auto& t : subsets_by_size(n, 0)) {
    if (!t.empty() && !is_spherical(sys, t)) continue;
    if (!punctured_connected(t))
      return {EndsResult::Infinity, t,
              t.empty() ? std::string("disconnected nerve")
                        : "witness T = " + subset_str(t)};
  }
  return {EndsResult::One, {}, "every punctured nerve is connected"};
}

}  // namespace cox
