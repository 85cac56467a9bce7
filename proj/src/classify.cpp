#include "cox/classify.hpp"

#include <algorithm>
#include <sstream>

namespace cox {

std::string subgroup_class_str(SubgroupClass c) {
  switch (c) {
    case SubgroupClass::Spherical: return "spherical";
    case SubgroupClass::Affine: return "affine";
    default: return "indefinite";
  }
}

Signature gram_signature(const CoxSystem& sys, const std::vector<int>& subset) {
  const NumberField& F = sys.field();
  int k = static_cast<int>(subset.size());
  std::vector<std::vector<FieldElement>> a(k, std::vector<FieldElement>(k, F.zero()));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i][j] = sys.bilinear(subset[i], subset[j]);

  Signature sig;
  std::vector<int> live(k);
  for (int i = 0; i < k; ++i) live[i] = i;

  while (!live.empty()) {
    int piv = -1;
    for (int idx : live)
      if (a[idx][idx].sign() != 0) {
        piv = idx;
        break;
      }
    if (piv >= 0) {
      int s = a[piv][piv].sign();
      if (s > 0)
        ++sig.pos;
      else
        ++sig.neg;
      FieldElement inv = F.inverse(a[piv][piv]);
      std::vector<int> rest;
      for (int idx : live)
        if (idx != piv) rest.push_back(idx);
      // Schur complement with respect to the pivot
      for (int r : rest)
        for (int c : rest) {
          if (a[r][piv].is_zero() || a[piv][c].is_zero()) continue;
          a[r][c] -= a[r][piv] * inv * a[piv][c];
        }
      live = std::move(rest);
      continue;
    }
    // zero diagonal everywhere: either the block is zero, or take a
    // hyperbolic 2x2 block [[0,v],[v,0]] contributing (+1,-1)
    int bi = -1, bj = -1;
    for (size_t x = 0; x < live.size() && bi < 0; ++x)
      for (size_t y = x + 1; y < live.size() && bi < 0; ++y)
        if (!a[live[x]][live[y]].is_zero()) {
          bi = live[x];
          bj = live[y];
        }
    if (bi < 0) {
      sig.zero += static_cast<int>(live.size());
      break;
    }
    ++sig.pos;
    ++sig.neg;
    FieldElement inv = F.inverse(a[bi][bj]);
    std::vector<int> rest;
    for (int idx : live)
      if (idx != bi && idx != bj) rest.push_back(idx);
    for (int r : rest)
      for (int c : rest) {
        FieldElement t = a[r][bj] * inv * a[bi][c] + a[r][bi] * inv * a[bj][c];
        a[r][c] -= t;
      }
    live = std::move(rest);
  }
  return sig;
}

SubgroupType subgroup_classify(const CoxSystem& sys, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  SubgroupType out;
  out.signature = gram_signature(sys, subset);
  out.components = sys.matrix().components(subset);
  for (const auto& comp : out.components) {
    Signature s = gram_signature(sys, comp);
    if (s.pos == static_cast<int>(comp.size()))
      out.component_class.push_back(SubgroupClass::Spherical);
    else if (s.neg == 0)
      out.component_class.push_back(SubgroupClass::Affine);
    else
      out.component_class.push_back(SubgroupClass::Indefinite);
  }
  int k = static_cast<int>(subset.size());
  if (out.signature.pos == k)
    out.cls = SubgroupClass::Spherical;
  else if (out.signature.neg == 0)
    out.cls = SubgroupClass::Affine;
  else
    out.cls = SubgroupClass::Indefinite;
  return out;
}

bool is_spherical(const CoxSystem& sys, const std::vector<int>& subset) {
  Signature s = gram_signature(sys, subset);
  return s.pos == static_cast<int>(subset.size());
}

std::string SubgroupType::str() const {
  std::ostringstream os;
  os << subgroup_class_str(cls);
  os << " (signature +" << signature.pos << " -" << signature.neg << " 0*"
     << signature.zero << ")";
  if (components.size() > 1 || (components.size() == 1 && cls != SubgroupClass::Spherical)) {
    os << " components:";
    for (size_t c = 0; c < components.size(); ++c) {
      os << " {";
      for (size_t i = 0; i < components[c].size(); ++i) {
        if (i) os << ",";
        os << components[c][i] + 1;
      }
      os << "}=" << subgroup_class_str(component_class[c]);
    }
  }
  return os.str();
}

PairOrder pair_generates_finite(const CoxSystem& sys, const Root& b, const Root& c) {
  if (b == c) throw Error("pair_generates_finite: roots must be distinct");
  const NumberField& F = sys.field();
  FieldElement dot = bilinear(sys, b, c);
  if ((dot - F.one()).sign() >= 0 || (dot + F.one()).sign() <= 0)
    return {false, 0};
  // rotation s_b s_c on span(b, c), basis (b, c)
  FieldElement two_dot = dot + dot;
  FieldElement m00 = two_dot * two_dot - F.one();
  std::vector<std::vector<FieldElement>> p = {{m00, two_dot}, {-two_dot, -F.one()}};
  auto is_id = [&F](const std::vector<std::vector<FieldElement>>& m) {
    return m[0][0] == F.one() && m[1][1] == F.one() && m[0][1].is_zero() &&
           m[1][0].is_zero();
  };
  std::vector<std::vector<FieldElement>> acc = p;
  for (long k = 1; k <= 10000; ++k) {
    if (is_id(acc)) return {true, k};
    std::vector<std::vector<FieldElement>> next(2, std::vector<FieldElement>(2, F.zero()));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) next[i][j] += acc[i][l] * p[l][j];
    acc = std::move(next);
  }
  throw Error("pair_generates_finite: rotation order exceeds cap");
}

}  // namespace cox
