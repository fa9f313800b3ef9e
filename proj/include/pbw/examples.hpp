#pragma once

#include <string>
#include <vector>

#include "pbw/params.hpp"

namespace pbw {

// Bundled (H, S, action) triples used by the test battery and the CLI.
ProblemData make_problem(HopfAlgebraData h, QuadraticAlgebraData s, ActionData a);

// k[x_1..x_n] with the generator of ℤ/2 acting by −1.
ProblemData z2_sign_poly(const Field& f, std::size_t n, std::size_t cutoff = 4);
// k[x,y] with g = diag(1,−1).
ProblemData z2_diag_kxy(const Field& f, std::size_t cutoff = 4);
// Sweedler's H4 on k[u,v]: g = diag(1,−1), x: v ↦ u, u ↦ 0.
ProblemData sweedler_kuv(const Field& f, std::size_t cutoff = 4);
// S₃ permuting the variables of k[x,y,z].
ProblemData s3_perm_kxyz(const Field& f, std::size_t cutoff = 4);
// Quantum plane xy = q yx with trivial ℤ/2 action.
ProblemData z2_trivial_quantum_plane(const Field& f, const Scalar& q, std::size_t cutoff = 4);

std::vector<std::vector<std::size_t>> s3_cayley_table();

// β(r_k) = h for every relation.
ParameterTriple constant_beta(const ProblemData& d, const Vec& h);

}  // namespace pbw
