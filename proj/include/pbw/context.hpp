#pragma once

#include <optional>

#include "pbw/params.hpp"

namespace pbw {

// Precomputed structure shared by the condition checkers and the homological
// route: the truncated smash algebra, R coordinates, and K̃_3 with its two legs.
class EvalContext {
 public:
  explicit EvalContext(const ProblemData& d, std::size_t cutoff = 3);

  const ProblemData& data() const { return *d_; }
  const HopfAlgebraData& H() const { return d_->H; }
  const QuadraticAlgebraData& S() const { return d_->S; }
  const SmashAlgebra& A() const { return A_; }
  const HbarProjector& hbar() const { return hbar_; }
  const Field& field() const { return d_->H.field; }
  std::size_t nh() const { return d_->H.dim; }
  std::size_t nv() const { return d_->S.dim_v; }
  std::size_t nr() const { return d_->S.dim_r(); }

  Vec hb(std::size_t i) const { return d_->H.basis(i); }
  Vec vb(std::size_t i) const { return unit_vector(field(), nv(), i); }
  Vec hmul(const Vec& a, const Vec& b) const { return d_->H.mul(a, b); }
  Vec act(const Vec& h, const Vec& v) const { return A_.act(1, h, v); }

  // R-coordinates of an element of V⊗V; nullopt if outside R.
  std::optional<Vec> r_coords(const Vec& vv) const { return rco_.coords(vv); }
  Vec r_coords_or_throw(const Vec& vv) const;
  const Vec& relation(std::size_t k) const { return d_->S.relation_basis[k]; }

  // K̃_3 basis and decomposition of each basis vector as Σ r_k⊗e_u and Σ e_v⊗r_k.
  const Rows& k3_basis() const { return k3_; }
  const std::vector<Rows>& k3_left() const { return k3_left_; }   // [ξ][k][u]
  const std::vector<Rows>& k3_right() const { return k3_right_; } // [ξ][v][k]

  // Parameter maps on arbitrary (non-basis) arguments.
  static Vec lambda_L(const ParameterTriple& p, const HopfAlgebraData& H, const Vec& h, const Vec& v);
  // λ_R(v⊗h) = −λ_L(τ⁻¹(v⊗h))
  Vec lambda_R(const ParameterTriple& p, const Vec& v, const Vec& h) const;
  Rows alpha_of(const ParameterTriple& p, const Vec& rc) const;  // [v][h]
  Vec beta_of(const ParameterTriple& p, const Vec& rc) const;

  // τ(h⊗v) = Σ ^{h1}v⊗h2 on basis h, as [v][h] tensor.
  Rows tau_hv(const Vec& h, const Vec& v) const;
  // τ⁻¹(v⊗h) = Σ h2 ⊗ ^{γ⁻¹(h1)}v, as [h][v] tensor.
  Rows tau_inv_vh(const Vec& v, const Vec& h) const;

  // (1⊗τ)(τ⊗1)(h⊗r) = Σ ^{h1}r ⊗ h2 in R⊗H: result [k][h'].
  Rows transport(const Vec& h, const Vec& r) const;
  // (τ⁻¹⊗1)(1⊗τ⁻¹)(r⊗h) = Σ h2 ⊗ ^{γ⁻¹(h1)}r in H⊗R: result [h'][k].
  Rows transport_inv(const Vec& r, const Vec& h) const;

  // Degree-2 defect of ξ_i: (1⊗τ)(α⊗1)ξ − (1⊗α)ξ ∈ V⊗V⊗H, sliced by the H leg.
  Rows k3_defect(const ParameterTriple& p, std::size_t i) const;
  // The same element in R⊗H coordinates [k][h]; requires condition (6).
  Rows r_coords_by_h(const Rows& slices) const;

  // Smash-algebra helpers.
  SmashElement elemH(const Vec& h) const { return A_.from_h(h); }
  SmashElement elemV(const Vec& v) const { return A_.from_v(v); }
  SmashElement elemVH(const Rows& vh) const { return A_.from_sh(1, vh); }
  SmashElement mul(const SmashElement& a, const SmashElement& b) const { return A_.multiply(a, b); }

 private:
  const ProblemData* d_;
  SmashAlgebra A_;
  HbarProjector hbar_;
  Coordinatizer rco_;
  Rows k3_;
  std::vector<Rows> k3_left_, k3_right_;
};

}  // namespace pbw
