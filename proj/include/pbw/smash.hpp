#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pbw/hopf.hpp"
#include "pbw/koszul.hpp"

namespace pbw {

// rho[h][i][j] = coefficient of e_i in b_h · e_j.
struct ActionData {
  std::vector<Rows> rho;
};

struct ProblemData {
  HopfAlgebraData H;
  QuadraticAlgebraData S;
  ActionData action;
};

ValidationReport validate_action(const HopfAlgebraData& h, const QuadraticAlgebraData& s,
                                 const ActionData& a);

// ^h w for w ∈ V^{⊗n}, via Δ^{n−1}(h).
Vec act_on_tensor(const ProblemData& d, const Vec& h, const Vec& w, std::size_t n);
// ^h v on V.
Vec act_on_v(const ProblemData& d, const Vec& h, const Vec& v);

// Element of A = S#H truncated at filtered degree `cutoff`.
struct SmashElement {
  std::size_t cutoff = 0;
  Vec coords;
  bool is_zero() const { return pbw::is_zero(coords); }
  SmashElement& operator+=(const SmashElement& o);
  SmashElement& operator-=(const SmashElement& o);
  friend SmashElement operator+(SmashElement a, const SmashElement& b) { return a += b; }
  friend SmashElement operator-(SmashElement a, const SmashElement& b) { return a -= b; }
  friend SmashElement operator*(const Scalar& c, SmashElement a) {
    for (auto& x : a.coords) x *= c;
    return a;
  }
  friend bool operator==(const SmashElement& a, const SmashElement& b) {
    return a.cutoff == b.cutoff && a.coords == b.coords;
  }
};

// Tensor in H⊗S_d as [h][s], or S_d⊗H as [s][h].
using HSTensor = Rows;
using SHTensor = Rows;

class SmashAlgebra {
 public:
  SmashAlgebra(const ProblemData& d, std::size_t cutoff);

  const ProblemData& data() const { return *d_; }
  const Field& field() const { return d_->H.field; }
  std::size_t cutoff() const { return cutoff_; }
  std::size_t dim() const { return offsets_.back(); }
  std::size_t dim_h() const { return d_->H.dim; }
  std::size_t dim_s(std::size_t n) const { return d_->S.dim_s(n); }
  std::size_t index(std::size_t deg, std::size_t s, std::size_t h) const {
    return offsets_[deg] + s * dim_h() + h;
  }
  struct Coord {
    std::size_t deg, s, h;
  };
  Coord coord(std::size_t idx) const;

  // ^h s on S_n, matrix acting on coordinates (column = image of a basis vector).
  const Rows& action_matrix(std::size_t n, std::size_t hbasis) const { return act_[n][hbasis]; }
  Vec act(std::size_t n, const Vec& h, const Vec& s) const;
  // s·h = ^{γ⁻¹(h)} s
  Vec right_act(std::size_t n, const Vec& s, const Vec& h) const;

  SHTensor twist(std::size_t n, const HSTensor& t) const;
  HSTensor untwist(std::size_t n, const SHTensor& t) const;

  SmashElement zero() const;
  SmashElement one() const;
  SmashElement from_h(const Vec& h) const;
  SmashElement from_v(const Vec& v) const;
  SmashElement from_s(std::size_t n, const Vec& s) const;
  SmashElement from_sh(std::size_t n, const SHTensor& t) const;
  SmashElement basis_element(std::size_t idx) const;
  SmashElement multiply(const SmashElement& a, const SmashElement& b) const;
  // Product of several factors, left to right.
  SmashElement product(std::initializer_list<SmashElement> xs) const;
  std::size_t degree(const SmashElement& a) const;  // filtered degree (0 for zero)
  std::string to_string(const SmashElement& a) const;

 private:
  const ProblemData* d_;
  std::size_t cutoff_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<Rows>> act_;  // [n][h] matrix
  std::vector<std::vector<Rows>> smul_; // [a][b] flattened S_a×S_b -> S_{a+b}
};

}  // namespace pbw
