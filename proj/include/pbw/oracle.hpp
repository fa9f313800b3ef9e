#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pbw/params.hpp"

namespace pbw {

// Homogeneous component (B_t)_n of B_t = T_H(W)[t] / (P'_t, P_t).
//
// Full: rank of all sandwiches a·p·b·t^c inside G_n = ⊕_c W^{⊗_H (n−c)} t^c.
// Reduced: every word is first rewritten into V^{⊗i}⊗H·t^c by moving H letters
// to the right with the P'_t relations, then the ideal image is built degree by
// degree. Both give the same number; Reduced works in a space smaller by a
// factor of dim H^i.
enum class OracleMethod { Reduced, Full };

struct OracleOptions {
  OracleMethod method = OracleMethod::Reduced;
  // Upper bound on the ambient dimension the linear algebra may touch.
  std::size_t ceiling = 200000;
};

// dim W^{⊗_H i} = dim H^{i+1} · dim V^i.
std::size_t tensor_power_dim(const ProblemData& d, std::size_t i);
// Working dimension at degree n for the given method.
std::size_t working_dim(const ProblemData& d, std::size_t n, OracleMethod m);

// λ_L together with the homogenized relations; the λ table drives the
// rewriting of H letters in the reduced method.
struct Presentation {
  std::vector<std::vector<Vec>> lambda;
  DeformedRelations rel;
};
Presentation presentation(const ProblemData& d, const ParameterTriple& p);
Presentation presentation(const ProblemData& d, const std::vector<std::vector<Vec>>& lambda,
                          const AlphaTilde& alpha_tilde, const std::vector<Vec>& beta_tilde);

std::size_t homogenized_component_dim(const ProblemData& d, const ParameterTriple& p,
                                      std::size_t n, const OracleOptions& opt = {});
// dim (B_t)_n for n = 0..n_max.
std::vector<std::size_t> homogenized_dims(const ProblemData& d, const ParameterTriple& p,
                                          std::size_t n_max, const OracleOptions& opt = {});
std::vector<std::size_t> homogenized_dims(const ProblemData& d, const Presentation& pres,
                                          std::size_t n_max, const OracleOptions& opt = {});
// Σ_{j ≤ n} dim S_j · dim H, the value (B_t)_n takes exactly when B is PBW
// through degree n.
std::vector<std::size_t> expected_dims(const ProblemData& d, std::size_t n_max);

struct OracleVerdict {
  bool pbw = true;
  std::size_t max_degree = 0;
  std::vector<std::size_t> dims, expected;
  std::optional<std::size_t> fail_degree;
  std::size_t deficit = 0;  // expected − actual at fail_degree
  std::string summary() const;
};

// PBW up to degree N, or the first degree with a deficit.
OracleVerdict pbw_oracle(const ProblemData& d, const ParameterTriple& p, std::size_t max_degree,
                         const OracleOptions& opt = {});

OracleVerdict pbw_oracle(const ProblemData& d, const Presentation& pres, std::size_t max_degree,
                         const OracleOptions& opt = {});

// Associated graded dimensions of B = B_t/(t−1) for n ≤ N, computed inside
// degree N: F_n B is the image of t^{N−n}(B_t)_n in (B_t)_N. Exact whenever t
// acts injectively up to degree N.
std::vector<std::size_t> gr_dims(const ProblemData& d, const ParameterTriple& p,
                                 std::size_t max_degree, const OracleOptions& opt = {});

}  // namespace pbw
