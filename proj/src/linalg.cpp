#include "pbw/linalg.hpp"

#include <algorithm>

#include "pbw/errors.hpp"

namespace pbw {

Vec zeros(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zeros(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (y.size() != x.size()) throw DimensionMismatch("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vec scaled(const Vec& x, const Scalar& a) {
  Vec r = x;
  for (auto& s : r) s *= a;
  return r;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(r, Scalar::one(b.empty() ? Field() : b[0].field()), b);
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  if (!b.empty()) axpy(r, -Scalar::one(b[0].field()), b);
  return r;
}

std::vector<std::size_t> rref(Rows& rows, std::size_t ncols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Scalar inv = rows[r][c].inverse();
    for (auto& s : rows[r]) s *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar a = -rows[i][c];
      axpy(rows[i], a, rows[r]);
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

std::size_t rank(Rows rows, std::size_t ncols) { return rref(rows, ncols).size(); }

Rows nullspace(const Field& f, const Rows& a, std::size_t ncols) {
  Rows m = a;
  auto piv = rref(m, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (auto c : piv) is_piv[c] = true;
  Rows out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_piv[free]) continue;
    Vec x = zeros(f, ncols);
    x[free] = Scalar::one(f);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -m[i][free];
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<AffineSolution> solve_linear(const Field& f, const Rows& a, const Vec& b,
                                           std::size_t ncols) {
  if (a.size() != b.size()) throw DimensionMismatch("solve_linear: rhs length");
  Rows aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != ncols) throw DimensionMismatch("solve_linear: row length");
    Vec row = a[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  auto piv = rref(aug, ncols + 1);
  if (!piv.empty() && piv.back() == ncols) return std::nullopt;
  AffineSolution sol;
  sol.particular = zeros(f, ncols);
  for (std::size_t i = 0; i < piv.size(); ++i) sol.particular[piv[i]] = aug[i][ncols];
  sol.kernel = nullspace(f, a, ncols);
  return sol;
}

Subspace Subspace::span(const Field& f, std::size_t ambient, Rows vectors) {
  for (auto& v : vectors)
    if (v.size() != ambient) throw DimensionMismatch("span: vector length differs from ambient");
  Subspace s(f, ambient);
  s.pivots_ = rref(vectors, ambient);
  s.basis_ = std::move(vectors);
  return s;
}

Subspace Subspace::whole(const Field& f, std::size_t ambient) {
  Rows r;
  for (std::size_t i = 0; i < ambient; ++i) r.push_back(unit_vector(f, ambient, i));
  return span(f, ambient, std::move(r));
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("reduce: length mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (r[pivots_[i]].is_zero()) continue;
    Scalar a = -r[pivots_[i]];
    axpy(r, a, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw DimensionMismatch("subspace_intersect: ambient dimension mismatch");
  const std::size_t n = u.ambient_dim();
  const Field& f = u.field();
  // Zassenhaus: rows (u|u) and (w|0); rows with vanishing left half carry U ∩ W.
  Rows m;
  for (const auto& b : u.basis()) {
    Vec row = b;
    row.insert(row.end(), b.begin(), b.end());
    m.push_back(std::move(row));
  }
  for (const auto& b : w.basis()) {
    Vec row = b;
    Vec z = zeros(f, n);
    row.insert(row.end(), z.begin(), z.end());
    m.push_back(std::move(row));
  }
  auto piv = rref(m, 2 * n);
  Rows out;
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (piv[i] >= n) out.emplace_back(m[i].begin() + n, m[i].end());
  return Subspace::span(f, n, std::move(out));
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw DimensionMismatch("subspace_sum: ambient dimension mismatch");
  Rows r = u.basis();
  r.insert(r.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.field(), u.ambient_dim(), std::move(r));
}

std::size_t quotient_dim(std::size_t ambient, const Subspace& u) {
  if (u.ambient_dim() != ambient) throw DimensionMismatch("quotient_dim: ambient mismatch");
  return ambient - u.dim();
}

std::optional<Vec> decompose(const Vec& v, const Subspace& u) {
  if (v.size() != u.ambient_dim()) throw DimensionMismatch("decompose: length mismatch");
  Vec c = zeros(u.field(), u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) c[i] = v[u.pivots()[i]];
  Vec r = v;
  for (std::size_t i = 0; i < u.dim(); ++i) axpy(r, -c[i], u.basis()[i]);
  if (!is_zero(r)) return std::nullopt;
  return c;
}

std::optional<Vec> decompose(const Vec& v, const Rows& basis) {
  if (basis.empty()) {
    if (!is_zero(v)) return std::nullopt;
    return Vec{};
  }
  Coordinatizer c(basis[0][0].field(), v.size(), basis);
  return c.coords(v);
}

Coordinatizer::Coordinatizer(const Field& f, std::size_t ambient, const Rows& basis)
    : f_(f), ambient_(ambient), k_(basis.size()) {
  Rows m;
  for (std::size_t i = 0; i < k_; ++i) {
    if (basis[i].size() != ambient) throw DimensionMismatch("Coordinatizer: vector length");
    Vec row = basis[i];
    Vec e = unit_vector(f, k_, i);
    row.insert(row.end(), e.begin(), e.end());
    m.push_back(std::move(row));
  }
  auto piv = rref(m, ambient + k_);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= ambient) throw InputError("Coordinatizer: basis vectors are dependent");
    ech_.emplace_back(m[i].begin(), m[i].begin() + ambient);
    comb_.emplace_back(m[i].begin() + ambient, m[i].end());
    piv_.push_back(piv[i]);
  }
  if (ech_.size() != k_) throw InputError("Coordinatizer: basis vectors are dependent");
}

std::optional<Vec> Coordinatizer::coords(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("coords: length mismatch");
  Vec r = v;
  Vec c = zeros(f_, k_);
  for (std::size_t i = 0; i < ech_.size(); ++i) {
    Scalar a = r[piv_[i]];
    if (a.is_zero()) continue;
    axpy(r, -a, ech_[i]);
    axpy(c, a, comb_[i]);
  }
  if (!is_zero(r)) return std::nullopt;
  return c;
}

IncrementalEchelon::IncrementalEchelon(const Field& f, std::size_t ambient)
    : f_(f), ambient_(ambient), pivot_row_(ambient, -1) {}

Vec IncrementalEchelon::reduce(Vec v) const {
  if (v.size() != ambient_) throw DimensionMismatch("IncrementalEchelon: length mismatch");
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (v[c].is_zero() || pivot_row_[c] < 0) continue;
    Scalar a = -v[c];
    const Vec& row = rows_[pivot_row_[c]];
    for (std::size_t j = c; j < ambient_; ++j)
      if (!row[j].is_zero()) v[j] += a * row[j];
  }
  return v;
}

bool IncrementalEchelon::add(Vec v) {
  v = reduce(std::move(v));
  std::size_t c = 0;
  while (c < ambient_ && v[c].is_zero()) ++c;
  if (c == ambient_) return false;
  Scalar inv = v[c].inverse();
  for (std::size_t j = c; j < ambient_; ++j) v[j] *= inv;
  pivot_row_[c] = static_cast<long>(rows_.size());
  pivot_.push_back(c);
  rows_.push_back(std::move(v));
  return true;
}

}  // namespace pbw
