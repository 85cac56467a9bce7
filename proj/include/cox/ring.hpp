#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cox {

using Rational = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

std::size_t hash_rational(const Rational& q);
std::string rational_str(const Rational& q);

class FieldElement;

// The real field Q(theta) with theta = 2*cos(pi/L).  All root coordinates
// and Gram entries of a Coxeter system with bond level L live here.
// Immutable after construction.
class NumberField {
 public:
  explicit NumberField(long level);

  long level() const { return level_; }
  int degree() const { return degree_; }
  const std::vector<Rational>& minpoly() const { return minpoly_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement rational(const Rational& q) const;
  FieldElement theta() const;
  // 2*cos(k*pi/L) as a field element; k >= 0.
  FieldElement two_cos_pi_times(long k) const;

  // Exact sign of an element under the embedding theta = 2*cos(pi/L).
  int sign(const FieldElement& e) const;

  // Multiplication with reduction mod the minimal polynomial.
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inverse(const FieldElement& a) const;

  double theta_approx() const { return theta_approx_; }

 private:
  long level_;
  int degree_;
  std::vector<Rational> minpoly_;  // monic, size degree_+1
  // reduction_[j] = x^(degree_+j) mod minpoly, each of size degree_
  std::vector<std::vector<Rational>> reduction_;
  // isolating interval for theta among the roots of minpoly (degree >= 2);
  // minpoly changes sign across [iso_lo_, iso_hi_]
  Rational iso_lo_, iso_hi_;
  Rational theta_exact_;  // degree 1 only
  double theta_approx_;
};

// Element of a NumberField: polynomial in theta of degree < field degree.
// Carries a pointer to its field; the field outlives all of its elements.
class FieldElement {
 public:
  FieldElement() : field_(nullptr) {}
  FieldElement(const NumberField* f, std::vector<Rational> coeffs)
      : field_(f), c_(std::move(coeffs)) {}

  const NumberField* field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // no theta component
  Rational rational_value() const;

  int sign() const { return field_->sign(*this); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) {
    a += b;
    return a;
  }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) {
    a -= b;
    return a;
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return a.field()->mul(a, b);
  }
  bool operator==(const FieldElement& o) const { return c_ == o.c_; }
  bool operator!=(const FieldElement& o) const { return c_ != o.c_; }

  // scale by a rational, in place
  void scale(const Rational& q);
  // this += q * other  (fused form used by reflections)
  void add_scaled(const Rational& q, const FieldElement& other);

  std::size_t hash() const;
  std::string str() const;   // deterministic, e.g. "-1/2" or "1/2x+1"
  double approx() const;     // float evaluation, reporting only

 private:
  const NumberField* field_;
  std::vector<Rational> c_;
  friend class NumberField;
};

// ---- polynomial helpers over Rational (dense, c[i] is the x^i coefficient)

using Poly = std::vector<Rational>;

Poly poly_trim(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
// division with remainder; b must be nonzero
void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
Rational poly_eval(const Poly& p, const Rational& x);
Poly poly_derivative(const Poly& p);
int poly_degree(const Poly& p);  // -1 for zero

// n-th cyclotomic polynomial, integer coefficients
Poly cyclotomic(long n);

// Number of real roots of squarefree p in the half-open interval (lo, hi],
// by Sturm chains.
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);

}  // namespace cox
