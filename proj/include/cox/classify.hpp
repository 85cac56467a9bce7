#pragma once

#include "cox/root.hpp"
#include "cox/word.hpp"

namespace cox {

enum class SubgroupClass { Spherical, Affine, Indefinite };

std::string subgroup_class_str(SubgroupClass c);

struct Signature {
  int pos = 0, neg = 0, zero = 0;
};

struct SubgroupType {
  SubgroupClass cls;
  std::vector<std::vector<int>> components;  // irreducible pieces of the diagram
  std::vector<SubgroupClass> component_class;
  Signature signature;
  std::string str() const;
};

// exact signature of the Gram form restricted to `subset`
Signature gram_signature(const CoxSystem& sys, const std::vector<int>& subset);

// positive definite -> Spherical; positive semidefinite with kernel ->
// Affine; otherwise Indefinite.  The empty set is Spherical.
SubgroupType subgroup_classify(const CoxSystem& sys, std::vector<int> subset);

bool is_spherical(const CoxSystem& sys, const std::vector<int>& subset);

struct PairOrder {
  bool finite;
  long order;  // dihedral order m of <s_b, s_c>; valid when finite
};

// Walls of two distinct positive roots intersect iff |B| < 1; the order of
// the rotation s_b s_c is reported exactly when they do.
PairOrder pair_generates_finite(const CoxSystem& sys, const Root& b, const Root& c);

}  // namespace cox
