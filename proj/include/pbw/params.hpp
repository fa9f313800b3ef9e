#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pbw/smash.hpp"

namespace pbw {

struct ParameterTriple {
  std::vector<std::vector<Vec>> lambda;  // lambda[h][v] = λ_L(b_h ⊗ e_v) ∈ H
  std::vector<Rows> alpha;               // alpha[k][v][h]: α(r_k) = Σ alpha[k][v][h] e_v ⊗ b_h
  std::vector<Vec> beta;                 // beta[k] = β(r_k) ∈ H

  static ParameterTriple zero(const ProblemData& d);
  friend bool operator==(const ParameterTriple& a, const ParameterTriple& b) {
    return a.lambda == b.lambda && a.alpha == b.alpha && a.beta == b.beta;
  }
};

// α̃(r_k) ∈ H⊗V⊗H as alpha_tilde[k][h][v] = vector over the right H leg.
using AlphaTilde = std::vector<std::vector<Rows>>;

ValidationReport validate_params(const ProblemData& d, const ParameterTriple& p);

struct NormalizedAlpha {
  std::vector<Rows> alpha;
  std::vector<Vec> beta;
};

// α = γ∘α̃ with γ(h⊗v⊗h') = Σ ^{h1}v ⊗ h2h'; β = β̃ + λ∘γ'∘α̃ where λ acts on
// H⊗V⊗H as λ(h⊗v⊗h') = λ_L(h⊗v)h'.
NormalizedAlpha normalize_alpha(const ProblemData& d, const AlphaTilde& alpha_tilde,
                                const std::vector<Vec>& beta_tilde,
                                const std::vector<std::vector<Vec>>& lambda);

// Word in T_H(W)[t]: key = [t-power, h0, v1, h1, ..., vi, hi] (basis indices).
using GWord = std::vector<std::uint32_t>;
using GElement = std::map<GWord, Scalar>;

inline std::size_t gword_vdegree(const GWord& w) { return (w.size() - 2) / 2; }
inline std::size_t gword_degree(const GWord& w) { return w[0] + gword_vdegree(w); }
void gadd(GElement& e, const GWord& w, const Scalar& c);
std::string gelement_to_string(const ProblemData& d, const GElement& e);

struct DeformedRelations {
  std::vector<GElement> P, Pp;    // filtered relations (t-power entries are 0)
  std::vector<GElement> Pt, Ppt;  // homogenized
  std::vector<std::pair<std::size_t, std::size_t>> pp_index;  // (H̄ index, V index)
};

DeformedRelations homogenize(const ProblemData& d, const ParameterTriple& p);
// Same relations with α̃ left in H⊗V⊗H: r − α̃(r)t − β̃(r)t².
DeformedRelations homogenize_tilde(const ProblemData& d, const std::vector<std::vector<Vec>>& lambda,
                                   const AlphaTilde& alpha_tilde, const std::vector<Vec>& beta_tilde);
// Drop every term with positive t-power.
GElement set_t_zero(const GElement& e);

}  // namespace pbw
