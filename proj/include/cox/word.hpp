#pragma once

#include <string>
#include <vector>

#include "cox/root.hpp"

namespace cox {

// Generator indices are 0-based internally; all text I/O is 1-based.
using Word = std::vector<int>;

Word parse_word(const std::string& text, int rank);  // "1 3 5" -> {0,2,4}
std::string word_str(const Word& w);                 // "1 3 5"; "e" when empty

// w = s_{w0} s_{w1} ... is reduced iff every prefix ascends, i.e. each
// r_k = s_{w0}...s_{w_{k-2}}(alpha_{w_{k-1}}) is a positive root.
bool is_reduced(const CoxSystem& sys, const Word& w);

// the ordered roots r_1..r_k above; throws if w is not reduced
std::vector<Root> inversion_roots(const CoxSystem& sys, const Word& w);

// ---- exact matrices for the geometric action (column convention:
//      (M x)_i = sum_j M[i][j] x_j on root coordinates)

using GMatrix = std::vector<std::vector<FieldElement>>;

GMatrix identity_matrix(const CoxSystem& sys);
GMatrix generator_matrix(const CoxSystem& sys, int i);
GMatrix matrix_mul(const CoxSystem& sys, const GMatrix& a, const GMatrix& b);
// matrix of s_{w0} s_{w1} ... s_{wk} acting on coordinates
GMatrix word_matrix(const CoxSystem& sys, const Word& w);
// matrix of the inverse element s_{wk} ... s_{w0}
GMatrix word_matrix_reversed(const CoxSystem& sys, const Word& w);
GMatrix reflection_matrix(const CoxSystem& sys, const Root& r);
Root matrix_apply(const CoxSystem& sys, const GMatrix& m, const Root& x);
// right-multiply by a generator in place: M <- M * M_i
void matrix_mul_generator(const CoxSystem& sys, GMatrix& m, int i);
bool matrix_eq(const GMatrix& a, const GMatrix& b);
bool matrix_is_identity(const CoxSystem& sys, const GMatrix& m);
std::size_t matrix_hash(const GMatrix& m);

// ShortLex-least reduced word of the element given by w (any word).
Word normal_form_of_element(const CoxSystem& sys, const Word& w);
// Same extraction given the matrix of the inverse element.
Word shortlex_word_from_inverse(const CoxSystem& sys, GMatrix inv);

// does the tracked root hit a simple root along w (i.e. beta in Inv(w))
bool word_inverts_root(const CoxSystem& sys, const Word& w, const Root& beta);

}  // namespace cox
