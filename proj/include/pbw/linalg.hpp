#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pbw/scalar.hpp"

namespace pbw {

using Vec = std::vector<Scalar>;
using Rows = std::vector<Vec>;

Vec zeros(const Field& f, std::size_t n);
Vec unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
// y += a * x
void axpy(Vec& y, const Scalar& a, const Vec& x);
Vec scaled(const Vec& x, const Scalar& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);

// Reduced row echelon form in place; zero rows removed, rows ordered by pivot.
// Returns pivot columns.
std::vector<std::size_t> rref(Rows& rows, std::size_t ncols);
std::size_t rank(Rows rows, std::size_t ncols);

// Kernel basis of the matrix whose rows are given (solutions x with A x = 0).
Rows nullspace(const Field& f, const Rows& a, std::size_t ncols);

struct AffineSolution {
  Vec particular;
  Rows kernel;
};

// Solve A x = b. Returns nullopt when inconsistent.
std::optional<AffineSolution> solve_linear(const Field& f, const Rows& a, const Vec& b,
                                           std::size_t ncols);

class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& f, std::size_t ambient) : f_(f), ambient_(ambient) {}
  static Subspace span(const Field& f, std::size_t ambient, Rows vectors);
  static Subspace whole(const Field& f, std::size_t ambient);

  const Field& field() const { return f_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const Rows& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  // Reduce v modulo the subspace (canonical representative).
  Vec reduce(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Field f_;
  std::size_t ambient_ = 0;
  Rows basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_intersect(const Subspace& u, const Subspace& w);
Subspace subspace_sum(const Subspace& u, const Subspace& w);
std::size_t quotient_dim(std::size_t ambient, const Subspace& u);

// Coordinates of v in the stored (echelon) basis of U.
std::optional<Vec> decompose(const Vec& v, const Subspace& u);
// Coordinates of v with respect to an arbitrary linearly independent list.
std::optional<Vec> decompose(const Vec& v, const Rows& basis);

// Precomputed solver for coordinates relative to a fixed independent list.
class Coordinatizer {
 public:
  Coordinatizer() = default;
  // Throws InputError if the list is dependent.
  Coordinatizer(const Field& f, std::size_t ambient, const Rows& basis);
  std::optional<Vec> coords(const Vec& v) const;
  std::size_t size() const { return k_; }
  std::size_t ambient_dim() const { return ambient_; }

 private:
  Field f_;
  std::size_t ambient_ = 0, k_ = 0;
  Rows ech_;   // echelon rows (ambient part)
  Rows comb_;  // combination producing each echelon row
  std::vector<std::size_t> piv_;
};

// Growing echelon basis for rank computations with many candidate vectors.
class IncrementalEchelon {
 public:
  IncrementalEchelon(const Field& f, std::size_t ambient);
  // Returns true if v was independent of the current span.
  bool add(Vec v);
  Vec reduce(Vec v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const Rows& rows() const { return rows_; }

 private:
  Field f_;
  std::size_t ambient_;
  Rows rows_;                       // each row normalized at its pivot
  std::vector<long> pivot_row_;     // column -> row index or -1
  std::vector<std::size_t> pivot_;  // row -> pivot column
};

}  // namespace pbw
