#include "cox/affine.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cox {

namespace {

// solve A x = b by Gaussian elimination; A square and invertible
std::vector<FieldElement> solve_linear(const CoxSystem& sys,
                                       std::vector<std::vector<FieldElement>> a,
                                       std::vector<FieldElement> b) {
  const NumberField& F = sys.field();
  int k = static_cast<int>(a.size());
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (a[r][col].sign() != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("solve_linear: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    FieldElement inv = F.inverse(a[col][col]);
    for (int r = 0; r < k; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      FieldElement f = a[r][col] * inv;
      for (int c = col; c < k; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<FieldElement> x(k, F.zero());
  for (int i = 0; i < k; ++i) x[i] = b[i] * F.inverse(a[i][i]);
  return x;
}

// one-dimensional kernel vector of the Gram matrix of an irreducible
// affine system, normalized to positive entries
Root affine_null_vector(const CoxSystem& sys) {
  const NumberField& F = sys.field();
  int n = sys.rank();
  std::vector<std::vector<FieldElement>> a(n, std::vector<FieldElement>(n, F.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = sys.bilinear(i, j);
  // eliminate; the last unpivoted column carries the kernel
  std::vector<int> pivot_of_col(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (a[r][col].sign() != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    FieldElement inv = F.inverse(a[row][col]);
    for (int r = 0; r < n; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      FieldElement f = a[r][col] * inv;
      for (int c = 0; c < n; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (pivot_of_col[c] < 0) free_col = c;
  if (free_col < 0) throw Error("affine_null_vector: Gram matrix is invertible");
  Root delta{std::vector<FieldElement>(n, F.zero())};
  delta.coord[free_col] = F.one();
  for (int c = 0; c < n; ++c) {
    if (pivot_of_col[c] < 0) continue;
    int r = pivot_of_col[c];
    delta.coord[c] = -(a[r][free_col] * F.inverse(a[r][c]));
  }
  // verify and normalize sign
  for (int i = 0; i < n; ++i) {
    FieldElement dot = bilinear_with_simple(sys, i, delta);
    if (!dot.is_zero()) throw Error("affine_null_vector: not in the kernel");
  }
  int s = 0;
  for (int i = 0; i < n && s == 0; ++i) s = delta.coord[i].sign();
  if (s < 0)
    for (auto& c : delta.coord) c = -c;
  for (int i = 0; i < n; ++i)
    if (delta.coord[i].sign() <= 0)
      throw Error("affine_null_vector: kernel vector not positive");
  return delta;
}

// positive roots of the parabolic subgroup on `gens` (ambient coordinates)
std::vector<Root> parabolic_positive_roots(const CoxSystem& sys,
                                           const std::vector<int>& gens,
                                           std::size_t cap) {
  std::vector<Root> out;
  RootSet seen;
  std::vector<Root> layer;
  for (int i : gens) {
    Root a = simple_root(sys, i);
    seen.insert(a);
    layer.push_back(a);
    out.push_back(std::move(a));
  }
  while (!layer.empty()) {
    std::vector<Root> next;
    for (const Root& r : layer)
      for (int i : gens) {
        if (bilinear_with_simple(sys, i, r).sign() >= 0) continue;
        Root img = reflect(sys, r, i);
        if (seen.insert(img).second) next.push_back(img);
      }
    std::sort(next.begin(), next.end(), root_str_less);
    for (const Root& r : next) out.push_back(r);
    if (out.size() > cap) throw Error("parabolic root enumeration cap exceeded");
    layer = std::move(next);
  }
  return out;
}

struct FaceData {
  std::vector<Root> positive_roots;
  std::vector<ArrangementFace> faces;
};

FaceData arrangement_faces_of_parabolic(const CoxSystem& sys,
                                        const std::vector<int>& gens,
                                        std::size_t cap) {
  if (!is_spherical(sys, gens))
    throw Error("arrangement: the system is not spherical");
  const NumberField& F = sys.field();
  int k = static_cast<int>(gens.size());
  FaceData out;
  out.positive_roots = parabolic_positive_roots(sys, gens, cap);

  // group elements as matrices, breadth first
  std::vector<GMatrix> elems{identity_matrix(sys)};
  std::map<std::string, int> seen;
  auto key_of = [](const GMatrix& m) {
    std::ostringstream os;
    for (const auto& row : m)
      for (const auto& c : row) os << c.str() << ";";
    return os.str();
  };
  seen[key_of(elems[0])] = 0;
  for (size_t head = 0; head < elems.size(); ++head) {
    GMatrix cur = elems[head];
    for (int g : gens) {
      GMatrix nxt = cur;
      matrix_mul_generator(sys, nxt, g);
      std::string key = key_of(nxt);
      if (seen.count(key)) continue;
      seen[key] = static_cast<int>(elems.size());
      elems.push_back(std::move(nxt));
      if (elems.size() > cap) throw Error("arrangement: group cap exceeded");
    }
  }

  // interior points of the fundamental faces: B(x, alpha_i) = 0 on T,
  // = 1 off T, solved inside the parabolic span
  std::vector<std::vector<FieldElement>> gram(k, std::vector<FieldElement>(k, F.zero()));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gram[i][j] = sys.bilinear(gens[i], gens[j]);

  std::map<std::string, ArrangementFace> found;
  for (unsigned mask = 0; mask + 1 < (1u << k); ++mask) {
    // mask bit set: generator in T (wall contains the face)
    std::vector<FieldElement> target(k, F.zero());
    int dim = 0;
    for (int i = 0; i < k; ++i)
      if (!(mask & (1u << i))) {
        target[i] = F.one();
        ++dim;
      }
    std::vector<FieldElement> sol = solve_linear(sys, gram, target);
    Root x = zero_vector(sys);
    for (int i = 0; i < k; ++i) x.coord[gens[i]] = sol[i];
    for (const GMatrix& w : elems) {
      Root wx = matrix_apply(sys, w, x);
      ArrangementFace face;
      face.dimension = dim;
      for (const Root& beta : out.positive_roots)
        face.signs.push_back(bilinear(sys, wx, beta).sign());
      found.emplace(face.str(), std::move(face));
    }
  }
  for (auto& [k2, f] : found) out.faces.push_back(std::move(f));
  return out;
}

}  // namespace

bool ArrangementFace::operator<(const ArrangementFace& o) const {
  return str() < o.str();
}

std::string ArrangementFace::str() const {
  std::string s;
  for (int v : signs) s += (v > 0 ? '+' : (v < 0 ? '-' : '0'));
  return s;
}

FiniteArrangement finite_arrangement_faces(const CoxSystem& finite_sys,
                                           std::size_t cap) {
  FaceData d = arrangement_faces_of_parabolic(
      finite_sys, finite_sys.matrix().all_indices(), cap);
  return {std::move(d.positive_roots), std::move(d.faces)};
}

CensusReport affine_block_census(const EPEngine& eng,
                                 const std::vector<EPWord>& words,
                                 int depth_bound, const OrderOptions& opt) {
  const CoxSystem& sys = eng.system();
  const NumberField& F = sys.field();
  int n = sys.rank();
  {
    SubgroupType t = subgroup_classify(sys, sys.matrix().all_indices());
    if (t.cls != SubgroupClass::Affine || t.components.size() != 1)
      throw Error("census: system must be irreducible affine");
  }

  CensusReport rep;
  for (int i = 0; i + 1 < n; ++i) rep.finite_part.push_back(i);
  Root delta = affine_null_vector(sys);
  FaceData fin = arrangement_faces_of_parabolic(sys, rep.finite_part, 100000);
  rep.finite_roots = fin.positive_roots;

  // gradient part of an ambient root: kill the last coordinate along delta
  auto gradient = [&](const Root& beta) {
    Root g = beta;
    FieldElement f = beta.coord[n - 1] * F.inverse(delta.coord[n - 1]);
    for (int i = 0; i < n; ++i) g.coord[i] -= f * delta.coord[i];
    return g;
  };
  auto finite_index = [&](const Root& g, int& orientation) -> int {
    for (size_t f = 0; f < fin.positive_roots.size(); ++f) {
      if (g == fin.positive_roots[f]) {
        orientation = 1;
        return static_cast<int>(f);
      }
      Root neg = g;
      for (auto& c : neg.coord) c = -c;
      if (neg == fin.positive_roots[f]) {
        orientation = -1;
        return static_cast<int>(f);
      }
    }
    return -1;
  };

  std::map<std::string, CensusEntry> entries;
  for (const EPWord& w : words) {
    int nf = static_cast<int>(fin.positive_roots.size());
    std::vector<int> vote(nf, 2);  // 2 = undecided
    bool conflict = false, unknown = false;
    for (const Root& beta : eng.roots_to_depth(depth_bound)) {
      int orientation = 0;
      int f = finite_index(gradient(beta), orientation);
      if (f < 0) throw Error("census: root outside the parallelism classes");
      if (vote[f] == 0) continue;  // class already pinned to the boundary
      SideInfo s = eng.wall_side(w, beta, opt.cls);
      int v = 2;
      switch (s.side) {
        case WallSide::OnBoundary: v = 0; break;
        case WallSide::Positive: v = orientation; break;
        case WallSide::Negative: v = -orientation; break;
        case WallSide::Unknown: unknown = true; continue;
      }
      if (vote[f] == 2 || v == 0)
        vote[f] = v;
      else if (vote[f] != v)
        conflict = true;
    }
    bool undecided = false;
    for (int v : vote)
      if (v == 2) undecided = true;
    if (conflict || undecided) {
      rep.unassigned.emplace_back(
          w, conflict ? "conflicting side votes"
                      : (unknown ? "undetermined wall verdicts" : "no evidence"));
      continue;
    }
    ArrangementFace face;
    face.signs = vote;
    face.dimension = 0;  // filled from the arrangement list below
    auto it = std::find_if(fin.faces.begin(), fin.faces.end(),
                           [&](const ArrangementFace& f) { return f == face; });
    if (it == fin.faces.end()) {
      rep.unassigned.emplace_back(w, "sign pattern is not a face");
      continue;
    }
    face.dimension = it->dimension;

    auto& entry = entries[face.str()];
    if (entry.words.empty()) {
      entry.face = face;
      entry.chamber = true;
      for (int v : vote)
        if (v == 0) entry.chamber = false;
      WxiResult wxi = wxi_group(eng, w, opt);
      entry.wxi_type = wxi.subgroup.type_str();
      entry.wxi_infinite = wxi.subgroup.infinite;
    }
    entry.words.push_back(w);
  }
  for (auto& [key, e] : entries) {
    std::sort(e.words.begin(), e.words.end());
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::string CensusReport::table() const {
  std::ostringstream os;
  os << "roots:";
  for (const Root& r : finite_roots) os << " " << root_str(r);
  os << "\n";
  for (const auto& e : entries) {
    os << e.face.str() << " dim " << e.face.dimension
       << (e.chamber ? " chamber" : "       ") << " | wxi " << e.wxi_type
       << (e.wxi_infinite ? " (infinite family)" : "") << " |";
    for (const auto& w : e.words) os << "  " << w.str();
    os << "\n";
  }
  for (const auto& [w, why] : unassigned)
    os << "unassigned " << w.str() << " (" << why << ")\n";
  return os.str();
}

}  // namespace cox
