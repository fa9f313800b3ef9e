#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pbw/linalg.hpp"

namespace pbw {

std::size_t ipow(std::size_t b, std::size_t e);

// Degree-n piece of S = T(V)/(R) with the lex-earliest monomial complement.
struct SComponent {
  std::size_t degree = 0;
  Rows ideal;                       // echelon basis of the relation span in V^{⊗n}, pivot = last nonzero
  std::vector<std::size_t> ideal_pivots;
  std::vector<std::size_t> words;   // monomial indices forming the S_n basis
  std::vector<long> word_pos;       // monomial index -> position in words, or -1
};

struct QuadraticAlgebraData {
  Field field;
  std::size_t dim_v = 0;
  std::vector<std::string> labels;
  Rows relation_basis;  // user ordering; parameters are indexed against it
  Subspace relations;   // canonical form of R
  std::size_t cutoff = 0;
  std::vector<SComponent> comps;  // degrees 0..cutoff

  std::size_t dim_s(std::size_t n) const { return comps.at(n).words.size(); }
  std::size_t dim_r() const { return relation_basis.size(); }
  std::string word_label(std::size_t n, std::size_t word) const;
};

// Throws InputError when the relation list is dependent or mis-shaped.
QuadraticAlgebraData make_quadratic(const Field& f, std::size_t dim_v, Rows relation_basis,
                                    std::size_t cutoff, std::vector<std::string> labels = {});

// Relation span Σ_i V^{⊗i}⊗R⊗V^{⊗(n−2−i)} in V^{⊗n}.
Subspace relation_span(const QuadraticAlgebraData& s, std::size_t n);
std::vector<std::size_t> graded_dims(const QuadraticAlgebraData& s, std::size_t n_max);
// ∩_j V^{⊗j}⊗R⊗V^{⊗(n−2−j)}; n = 2 gives R.
Subspace koszul_term(const QuadraticAlgebraData& s, std::size_t n);
// Necessary condition for Koszulity: Σ_i (−1)^i dim K̃_i · dim S_{n−i} = 0 for
// 1 ≤ n ≤ n_max. Returns the first degree where the sum is nonzero. Degrees
// ≤ 3 hold for every quadratic algebra, so n_max ≥ 4 is needed to see anything.
std::optional<std::size_t> koszul_euler_defect(const QuadraticAlgebraData& s, std::size_t n_max);
// Coordinates in the S_n basis of the image of an element of V^{⊗n}.
Vec normal_form(const QuadraticAlgebraData& s, const Vec& tensor, std::size_t n);
// Product of words, then normal form: S_a × S_b → S_{a+b} on basis indices.
Vec s_multiply_basis(const QuadraticAlgebraData& s, std::size_t a, std::size_t i, std::size_t b,
                     std::size_t j);
// Tensor a ⊗ b of vectors over V^{⊗p} and V^{⊗q}.
Vec tensor_vec(const Vec& a, const Vec& b);
// R equals span{v⊗w − w⊗v}.
bool is_symmetric_algebra(const QuadraticAlgebraData& s);
Rows antisymmetric_relations(const Field& f, std::size_t dim_v);

}  // namespace pbw
