#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pbw/linalg.hpp"

namespace pbw {

struct CoTerm {
  Scalar c;
  std::size_t l, r;
};

// Term of an element of H^{⊗k}: coefficient times a tuple of basis indices.
struct TensorTerm {
  Scalar c;
  std::vector<std::size_t> idx;
};
using TensorElement = std::vector<TensorTerm>;

struct HopfAlgebraData {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Vec>> mult;      // mult[i][j] = b_i b_j
  Vec unit;                                // 1_H
  std::vector<std::vector<CoTerm>> comult; // Δ(b_i)
  Vec counit;                              // ε(b_i)
  Rows antipode;                           // antipode[i] = γ(b_i)
  Rows antipode_inv;                       // antipode_inv[i] = γ⁻¹(b_i)
  // Complement of k·1_H. Either basis indices (hbar_section) or, when the unit
  // is not a basis vector, a basis of ker ε.
  std::vector<std::size_t> hbar_section;
  Rows hbar_basis;

  Vec basis(std::size_t i) const { return unit_vector(field, dim, i); }
  Vec zero() const { return zeros(field, dim); }
  Vec mul(const Vec& a, const Vec& b) const;
  Scalar eps(const Vec& a) const;
  Vec gamma(const Vec& a) const;
  Vec gamma_inv(const Vec& a) const;
  // Δ(a) as a dense dim×dim coefficient table [left][right].
  Rows coproduct(const Vec& a) const;
  // Index of the basis vector equal to 1_H, or dim if none.
  std::size_t unit_index() const;
};

// Fills hbar_section/hbar_basis by the default rule: non-identity basis
// elements if 1_H is a basis vector, otherwise a basis of ker ε.
void set_default_hbar(HopfAlgebraData& h);
std::string describe_hbar(const HopfAlgebraData& h);

// H = k·1 ⊕ H̄: projection onto H̄ and coordinates in hbar_basis.
class HbarProjector {
 public:
  explicit HbarProjector(const HopfAlgebraData& h);
  Vec project(const Vec& a) const;      // pr_{H̄}(a) in H-coordinates
  Vec coords(const Vec& a) const;       // coordinates of pr_{H̄}(a) in hbar_basis
  Scalar unit_part(const Vec& a) const; // coefficient of 1_H
  std::size_t dim() const { return n_; }
  const Vec& vector(std::size_t j) const { return basis_.at(j); }

 private:
  Field f_;
  std::size_t n_;
  Rows basis_;
  Vec unit_;
  Coordinatizer coord_;
};

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  const AxiomCheck* first_failure() const;
  const AxiomCheck* find(const std::string& name) const;
  std::string summary() const;
};

// Throws DimensionMismatch on inconsistent tensor shapes.
ValidationReport validate_hopf(const HopfAlgebraData& h);

// Δ^n(x) as an element of H^{⊗(n+1)}; Δ^0 = identity. Terms sorted, zeros dropped.
TensorElement sweedler_iterate(const HopfAlgebraData& h, const Vec& x, std::size_t n);

// Group algebra from a Cayley table (table[i][j] = index of g_i g_j).
HopfAlgebraData group_algebra(const Field& f, const std::vector<std::vector<std::size_t>>& table,
                              std::vector<std::string> labels = {});
HopfAlgebraData cyclic_group_algebra(const Field& f, std::size_t n);
// Sweedler's 4-dimensional algebra, basis (1, g, x, gx).
HopfAlgebraData sweedler_h4(const Field& f);

}  // namespace pbw
