#include "cox/system.hpp"

namespace cox {

CoxSystem::CoxSystem(CoxeterMatrix m) : matrix_(std::move(m)) {
  field_ = std::make_unique<NumberField>(matrix_.ring_level());
  int n = matrix_.rank();
  long L = matrix_.ring_level();
  gram_.assign(n, std::vector<FieldElement>(n, field_->zero()));
  star_.assign(n, {});
  Rational minus_half(-1, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        gram_[i][j] = field_->one();
      } else if (!matrix_.finite_bond(i, j)) {
        gram_[i][j] = field_->rational(Rational(-1));
      } else {
        int mij = matrix_.bond(i, j);
        // -cos(pi/m) = -V_{L/m}(theta)/2 with theta = 2cos(pi/L)
        FieldElement v = field_->two_cos_pi_times(L / mij);
        v.scale(minus_half);
        gram_[i][j] = v;
      }
      if (i != j && !gram_[i][j].is_zero()) star_[i].push_back(j);
    }
  }
}

}  // namespace cox
