#include "cox/word.hpp"

#include <sstream>

namespace cox {

Word parse_word(const std::string& text, int rank) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    int v;
    try {
      v = std::stoi(tok);
    } catch (...) {
      throw Error("malformed word token '" + tok + "'");
    }
    if (v < 1 || v > rank)
      throw Error("generator " + tok + " out of range 1.." + std::to_string(rank));
    w.push_back(v - 1);
  }
  return w;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << " ";
    os << (w[i] + 1);
  }
  return os.str();
}

bool is_reduced(const CoxSystem& sys, const Word& w) {
  // maintain the matrix of the prefix element and read off prefix(alpha_k)
  GMatrix m = identity_matrix(sys);
  for (size_t k = 0; k < w.size(); ++k) {
    bool pos = false, neg = false;
    for (int i = 0; i < sys.rank(); ++i) {
      int s = m[i][w[k]].sign();
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (neg || !pos) return false;
    matrix_mul_generator(sys, m, w[k]);
  }
  return true;
}

std::vector<Root> inversion_roots(const CoxSystem& sys, const Word& w) {
  std::vector<Root> out;
  GMatrix m = identity_matrix(sys);
  for (size_t k = 0; k < w.size(); ++k) {
    Root r{std::vector<FieldElement>(sys.rank(), sys.field().zero())};
    for (int i = 0; i < sys.rank(); ++i) r.coord[i] = m[i][w[k]];
    if (!is_positive(r)) throw Error("inversion_roots: word is not reduced");
    out.push_back(std::move(r));
    matrix_mul_generator(sys, m, w[k]);
  }
  return out;
}

GMatrix identity_matrix(const CoxSystem& sys) {
  int n = sys.rank();
  GMatrix m(n, std::vector<FieldElement>(n, sys.field().zero()));
  for (int i = 0; i < n; ++i) m[i][i] = sys.field().one();
  return m;
}

GMatrix generator_matrix(const CoxSystem& sys, int i) {
  GMatrix m = identity_matrix(sys);
  // row i:  (s_i x)_i = -x_i - 2 sum_{j != i} B(i,j) x_j
  m[i][i] = -sys.field().one();
  for (int j : sys.star(i)) {
    FieldElement v = sys.bilinear(i, j);
    v += v;
    m[i][j] = -v;
  }
  return m;
}

GMatrix matrix_mul(const CoxSystem& sys, const GMatrix& a, const GMatrix& b) {
  int n = sys.rank();
  GMatrix r(n, std::vector<FieldElement>(n, sys.field().zero()));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  return r;
}

void matrix_mul_generator(const CoxSystem& sys, GMatrix& m, int g) {
  // M * M_g differs from M only in column g:
  // new col_g = -col_g - 2 sum_{j in star(g)} B(g,j) col_j
  int n = sys.rank();
  for (int i = 0; i < n; ++i) {
    FieldElement v = -m[i][g];
    for (int j : sys.star(g)) {
      if (m[i][j].is_zero()) continue;
      FieldElement b = sys.bilinear(g, j);
      b += b;
      v -= b * m[i][j];
    }
    m[i][g] = v;
  }
}

GMatrix word_matrix(const CoxSystem& sys, const Word& w) {
  GMatrix m = identity_matrix(sys);
  for (int g : w) matrix_mul_generator(sys, m, g);
  return m;
}

GMatrix word_matrix_reversed(const CoxSystem& sys, const Word& w) {
  GMatrix m = identity_matrix(sys);
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    matrix_mul_generator(sys, m, *it);
  return m;
}

GMatrix reflection_matrix(const CoxSystem& sys, const Root& r) {
  int n = sys.rank();
  GMatrix m = identity_matrix(sys);
  // columns: image of alpha_j is alpha_j - 2 B(r, alpha_j) r
  for (int j = 0; j < n; ++j) {
    FieldElement dot = bilinear_with_simple(sys, j, r);
    dot += dot;
    if (dot.is_zero()) continue;
    for (int i = 0; i < n; ++i) {
      if (r.coord[i].is_zero()) continue;
      m[i][j] -= dot * r.coord[i];
    }
  }
  return m;
}

Root matrix_apply(const CoxSystem& sys, const GMatrix& m, const Root& x) {
  int n = sys.rank();
  Root r{std::vector<FieldElement>(n, sys.field().zero())};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m[i][j].is_zero() || x.coord[j].is_zero()) continue;
      r.coord[i] += m[i][j] * x.coord[j];
    }
  return r;
}

bool matrix_eq(const GMatrix& a, const GMatrix& b) { return a == b; }

bool matrix_is_identity(const CoxSystem& sys, const GMatrix& m) {
  int n = sys.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && m[i][j] != sys.field().one()) return false;
      if (i != j && !m[i][j].is_zero()) return false;
    }
  return true;
}

std::size_t matrix_hash(const GMatrix& m) {
  std::size_t h = 0xc2b2ae3d27d4eb4fULL;
  for (const auto& row : m)
    for (const auto& c : row)
      h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Word normal_form_of_element(const CoxSystem& sys, const Word& w) {
  return shortlex_word_from_inverse(sys, word_matrix_reversed(sys, w));
}

bool word_inverts_root(const CoxSystem& sys, const Word& w, const Root& beta) {
  Root g = beta;
  for (int i : w) {
    bool simple = g.coord[i] == sys.field().one();
    if (simple)
      for (size_t j = 0; j < g.coord.size() && simple; ++j)
        if (static_cast<int>(j) != i && !g.coord[j].is_zero()) simple = false;
    if (simple) return true;
    reflect_in_place(sys, g, i);
  }
  return false;
}

Word shortlex_word_from_inverse(const CoxSystem& sys, GMatrix inv) {
  // Column j of the inverse-element matrix is w^{-1}(alpha_j); the least j
  // with a negative column is the ShortLex-first letter.
  Word out;
  for (;;) {
    int letter = -1;
    for (int j = 0; j < sys.rank() && letter == -1; ++j) {
      bool neg = false, pos = false;
      for (int i = 0; i < sys.rank(); ++i) {
        int s = inv[i][j].sign();
        if (s < 0) neg = true;
        if (s > 0) pos = true;
      }
      if (neg && !pos) letter = j;
    }
    if (letter == -1) {
      if (!matrix_is_identity(sys, inv))
        throw Error("normal_form: no descent on a non-identity element");
      return out;
    }
    out.push_back(letter);
    // w <- s_letter * w, so w^{-1} <- w^{-1} * s_letter
    matrix_mul_generator(sys, inv, letter);
    if (out.size() > 4096) throw Error("normal_form: runaway");
  }
}

}  // namespace cox
