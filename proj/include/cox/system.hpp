#pragma once

#include <memory>

#include "cox/matrix.hpp"
#include "cox/ring.hpp"

namespace cox {

// A Coxeter matrix together with its exact geometric realisation: the
// number field Q(2cos(pi/L)) and the Gram matrix B(alpha_i, alpha_j) of
// the simple roots.  B(a_i,a_i) = 1, B(a_i,a_j) = -cos(pi/m_ij) for
// finite bonds and -1 for infinite bonds.  Immutable.
class CoxSystem {
 public:
  explicit CoxSystem(CoxeterMatrix m);

  const CoxeterMatrix& matrix() const { return matrix_; }
  const NumberField& field() const { return *field_; }
  int rank() const { return matrix_.rank(); }

  const FieldElement& bilinear(int i, int j) const { return gram_[i][j]; }
  // generators j != i with B(alpha_i, alpha_j) != 0
  const std::vector<int>& star(int i) const { return star_[i]; }

 private:
  CoxeterMatrix matrix_;
  std::unique_ptr<NumberField> field_;
  std::vector<std::vector<FieldElement>> gram_;
  std::vector<std::vector<int>> star_;
};

}  // namespace cox
