#include "cox/ring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cox {

std::size_t hash_rational(const Rational& q) {
  auto hash_mpz = [](const mpz_class& z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) + 0x9e3779b9;
    std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) +
           0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  };
  std::size_t h = hash_mpz(q.get_num());
  h ^= hash_mpz(q.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// ---------------------------------------------------------------- polynomials

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return poly_trim(std::move(r));
}

void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  int db = poly_degree(b);
  if (db < 0) throw Error("polynomial division by zero");
  rem = poly_trim(a);
  quot.assign(rem.size(), Rational(0));
  while (poly_degree(rem) >= db) {
    int dr = poly_degree(rem);
    Rational f = rem[dr] / b[db];
    quot[dr - db] += f;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b[i];
    rem = poly_trim(std::move(rem));
  }
  quot = poly_trim(std::move(quot));
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational r(0);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) r = r * x + p[i];
  return r;
}

Poly poly_derivative(const Poly& p) {
  Poly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rational(static_cast<long>(i)));
  return poly_trim(std::move(r));
}

Poly cyclotomic(long n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly q, r;
    poly_divmod(num, cyclotomic(d), q, r);
    if (poly_degree(r) >= 0) throw Error("cyclotomic division not exact");
    num = q;
  }
  return num;
}

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
  std::vector<Poly> chain;
  chain.push_back(poly_trim(p));
  chain.push_back(poly_derivative(p));
  while (poly_degree(chain.back()) > 0) {
    Poly q, r;
    poly_divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (poly_degree(r) < 0) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  auto variations = [&chain](const Rational& x) {
    int v = 0, last = 0;
    for (const auto& q : chain) {
      Rational val = poly_eval(q, x);
      int s = sgn(val);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations(lo) - variations(hi);
}

// ------------------------------------------------------------------ the field

namespace {

// minimal polynomial of 2*cos(pi/L), monic with integer coefficients
Poly theta_minpoly(long L) {
  if (L == 1) return {Rational(2), Rational(1)};   // theta = -2
  // fold the palindromic cyclotomic Phi_{2L}: Phi(x)/x^m expressed in
  // y = x + 1/x via x^k + x^-k = V_k(y), V_0 = 2, V_1 = y.
  Poly phi = cyclotomic(2 * L);
  int m = poly_degree(phi) / 2;
  Poly result(m + 1, Rational(0));
  result[0] = phi[m];
  Poly vprev = {Rational(2)};            // V_0
  Poly vcur = {Rational(0), Rational(1)};  // V_1
  for (int k = 1; k <= m; ++k) {
    Poly scaled = vcur;
    for (auto& c : scaled) c *= phi[m + k];
    result = poly_add(result, scaled);
    Poly vnext = poly_sub(poly_mul({Rational(0), Rational(1)}, vcur), vprev);
    vprev = std::move(vcur);
    vcur = std::move(vnext);
  }
  return poly_trim(result);
}

}  // namespace

NumberField::NumberField(long level) : level_(level) {
  if (level < 1) throw Error("field level must be positive");
  minpoly_ = theta_minpoly(level);
  degree_ = poly_degree(minpoly_);
  theta_approx_ = 2.0 * std::cos(M_PI / static_cast<double>(level));

  if (degree_ == 1) {
    theta_exact_ = -minpoly_[0] / minpoly_[1];
  } else {
    // x^(d+j) mod minpoly, computed once
    Poly cur(degree_ + 1, Rational(0));
    cur[degree_] = 1;
    for (int j = 0; j < degree_ - 1; ++j) {
      Poly q, r;
      poly_divmod(cur, minpoly_, q, r);
      r.resize(degree_, Rational(0));
      reduction_.push_back(r);
      cur.insert(cur.begin(), Rational(0));  // multiply by x
    }
    // isolate the largest real root: theta = 2cos(pi/L) is the maximum of
    // the conjugates 2cos(k pi/L), gcd(k,2L)=1
    Rational lo(-3), hi(3);
    while (sturm_count(minpoly_, lo, hi) > 1 ||
           poly_eval(minpoly_, lo) == 0) {
      Rational mid = (lo + hi) / 2;
      if (sturm_count(minpoly_, mid, hi) >= 1)
        lo = mid;
      else
        hi = mid;
    }
    // shrink until the endpoints straddle the root with opposite signs
    while (sgn(poly_eval(minpoly_, lo)) * sgn(poly_eval(minpoly_, hi)) >= 0) {
      Rational mid = (lo + hi) / 2;
      if (sturm_count(minpoly_, mid, hi) >= 1)
        lo = mid;
      else
        hi = mid;
    }
    iso_lo_ = lo;
    iso_hi_ = hi;
  }
}

FieldElement NumberField::zero() const {
  return FieldElement(this, std::vector<Rational>(degree_, Rational(0)));
}

FieldElement NumberField::one() const { return rational(Rational(1)); }

FieldElement NumberField::rational(const Rational& q) const {
  std::vector<Rational> c(degree_, Rational(0));
  c[0] = q;
  return FieldElement(this, std::move(c));
}

FieldElement NumberField::theta() const {
  if (degree_ == 1) return rational(theta_exact_);
  std::vector<Rational> c(degree_, Rational(0));
  c[1] = 1;
  return FieldElement(this, std::move(c));
}

FieldElement NumberField::two_cos_pi_times(long k) const {
  // V_k(theta) with V_0 = 2, V_1 = theta, V_{j+1} = theta*V_j - V_{j-1}
  k = std::abs(k);
  FieldElement vprev = rational(Rational(2));
  if (k == 0) return vprev;
  FieldElement vcur = theta();
  for (long j = 1; j < k; ++j) {
    FieldElement vnext = mul(theta(), vcur) - vprev;
    vprev = vcur;
    vcur = vnext;
  }
  return vcur;
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
  if (degree_ == 1) {
    return FieldElement(this, {a.c_[0] * b.c_[0]});
  }
  std::vector<Rational> prod(2 * degree_ - 1, Rational(0));
  for (int i = 0; i < degree_; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + degree_);
  for (int j = 0; j < degree_ - 1; ++j) {
    const Rational& f = prod[degree_ + j];
    if (f == 0) continue;
    const auto& row = reduction_[j];
    for (int i = 0; i < degree_; ++i) out[i] += f * row[i];
  }
  return FieldElement(this, std::move(out));
}

FieldElement NumberField::inverse(const FieldElement& a) const {
  if (a.is_zero()) throw Error("division by zero field element");
  if (degree_ == 1) return FieldElement(this, {1 / a.c_[0]});
  // extended Euclid: s*a + t*minpoly = gcd = constant (minpoly irreducible)
  Poly r0 = minpoly_, r1 = poly_trim(a.c_);
  Poly s0 = {}, s1 = {Rational(1)};
  while (poly_degree(r1) > 0) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (poly_degree(r1) != 0) throw Error("inverse: element not invertible");
  Rational g = r1[0];
  std::vector<Rational> out(degree_, Rational(0));
  for (size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / g;
  return FieldElement(this, std::move(out));
}

int NumberField::sign(const FieldElement& e) const {
  bool constant = true;
  for (int i = 1; i < degree_; ++i)
    if (e.c_[i] != 0) {
      constant = false;
      break;
    }
  if (constant) return sgn(e.c_[0]);
  if (degree_ == 1) return sgn(e.c_[0]);

  // Interval evaluation at the isolating interval of theta, refining by
  // bisection until zero is excluded.  Terminates: a reduced nonzero
  // element cannot vanish at theta (the minimal polynomial is irreducible).
  Poly p = poly_trim(e.c_);
  Rational lo = iso_lo_, hi = iso_hi_;
  for (int iter = 0; iter < 100000; ++iter) {
    // bound p over [lo,hi] by Horner with interval arithmetic
    Rational plo(0), phi(0);
    for (int i = poly_degree(p); i >= 0; --i) {
      // [plo,phi] * [lo,hi] + p[i]
      Rational a = plo * lo, b = plo * hi, c = phi * lo, d = phi * hi;
      Rational nlo = std::min(std::min(a, b), std::min(c, d)) + p[i];
      Rational nhi = std::max(std::max(a, b), std::max(c, d)) + p[i];
      plo = nlo;
      phi = nhi;
    }
    if (sgn(plo) > 0) return 1;
    if (sgn(phi) < 0) return -1;
    // refine the isolating interval, keeping a sign change of minpoly
    Rational mid = (lo + hi) / 2;
    Rational pm = poly_eval(minpoly_, mid);
    if (pm == 0) {
      // theta itself is the midpoint root: nudge the interval
      Rational quarter = (hi - lo) / 4;
      lo = mid - quarter;
      hi = mid + quarter;
      continue;
    }
    if (sgn(poly_eval(minpoly_, lo)) * sgn(pm) < 0)
      hi = mid;
    else
      lo = mid;
  }
  throw Error("sign determination did not converge");
}

// -------------------------------------------------------------- field element

bool FieldElement::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw Error("field element is not rational");
  return c_[0];
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

void FieldElement::scale(const Rational& q) {
  for (auto& c : c_) c *= q;
}

void FieldElement::add_scaled(const Rational& q, const FieldElement& other) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += q * other.c_[i];
}

std::size_t FieldElement::hash() const {
  std::size_t h = 0x2545f4914f6cdd1dULL;
  for (const auto& q : c_)
    h ^= hash_rational(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string FieldElement::str() const {
  if (is_rational()) return rational_str(c_.empty() ? Rational(0) : c_[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first && sgn(c_[i]) > 0) os << "+";
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] == -1)
        os << "-";
      else if (c_[i] != 1)
        os << c_[i] << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

double FieldElement::approx() const {
  double t = field_ ? field_->theta_approx() : 0.0;
  double r = 0.0;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
    r = r * t + c_[i].get_d();
  return r;
}

}  // namespace cox
