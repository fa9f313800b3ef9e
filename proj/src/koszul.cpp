#include "pbw/koszul.hpp"

#include <algorithm>

#include "pbw/errors.hpp"

namespace pbw {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Vec tensor_vec(const Vec& a, const Vec& b) {
  const Field f = a.empty() ? Field() : a[0].field();
  Vec r = zeros(f, a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

Subspace relation_span(const QuadraticAlgebraData& s, std::size_t n) {
  const Field& f = s.field;
  const std::size_t d = s.dim_v, amb = ipow(d, n);
  Rows gens;
  if (n >= 2) {
    for (std::size_t i = 0; i + 2 <= n; ++i) {
      std::size_t pre = ipow(d, i), post = ipow(d, n - 2 - i);
      for (std::size_t a = 0; a < pre; ++a)
        for (const auto& r : s.relation_basis)
          for (std::size_t b = 0; b < post; ++b)
            gens.push_back(tensor_vec(tensor_vec(unit_vector(f, pre, a), r), unit_vector(f, post, b)));
    }
  }
  return Subspace::span(f, amb, std::move(gens));
}

namespace {

SComponent build_component(const QuadraticAlgebraData& s, std::size_t n) {
  const std::size_t amb = ipow(s.dim_v, n);
  Subspace span = relation_span(s, n);
  // Echelon form whose pivots are the latest columns: reverse, rref, reverse.
  Rows rows;
  for (const auto& b : span.basis()) rows.emplace_back(b.rbegin(), b.rend());
  auto piv = rref(rows, amb);
  SComponent c;
  c.degree = n;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    c.ideal.emplace_back(rows[i].rbegin(), rows[i].rend());
    c.ideal_pivots.push_back(amb - 1 - piv[i]);
  }
  std::vector<bool> is_piv(amb, false);
  for (auto p : c.ideal_pivots) is_piv[p] = true;
  c.word_pos.assign(amb, -1);
  for (std::size_t w = 0; w < amb; ++w)
    if (!is_piv[w]) {
      c.word_pos[w] = static_cast<long>(c.words.size());
      c.words.push_back(w);
    }
  return c;
}

}  // namespace

std::string QuadraticAlgebraData::word_label(std::size_t n, std::size_t word) const {
  if (n == 0) return "1";
  std::string out;
  std::vector<std::size_t> letters(n);
  for (std::size_t k = n; k-- > 0;) {
    letters[k] = word % dim_v;
    word /= dim_v;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t l = letters[k];
    out += l < labels.size() ? labels[l] : "v" + std::to_string(l);
  }
  return out;
}

QuadraticAlgebraData make_quadratic(const Field& f, std::size_t dim_v, Rows relation_basis,
                                    std::size_t cutoff, std::vector<std::string> labels) {
  if (dim_v == 0) throw InputError("dim_v must be positive");
  for (const auto& r : relation_basis)
    if (r.size() != dim_v * dim_v) throw DimensionMismatch("relation vector must have dim_v² entries");
  if (rank(relation_basis, dim_v * dim_v) != relation_basis.size())
    throw InputError("relation basis vectors are linearly dependent");
  if (!labels.empty() && labels.size() != dim_v) throw InputError("label count differs from dim_v");
  QuadraticAlgebraData s;
  s.field = f;
  s.dim_v = dim_v;
  s.labels = std::move(labels);
  s.relation_basis = std::move(relation_basis);
  s.relations = Subspace::span(f, dim_v * dim_v, s.relation_basis);
  s.cutoff = cutoff;
  for (std::size_t n = 0; n <= cutoff; ++n) s.comps.push_back(build_component(s, n));
  return s;
}

std::vector<std::size_t> graded_dims(const QuadraticAlgebraData& s, std::size_t n_max) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n <= s.cutoff)
      out.push_back(s.dim_s(n));
    else
      out.push_back(quotient_dim(ipow(s.dim_v, n), relation_span(s, n)));
  }
  return out;
}

std::optional<std::size_t> koszul_euler_defect(const QuadraticAlgebraData& s, std::size_t n_max) {
  auto sd = graded_dims(s, n_max);
  std::vector<long> kd{1, long(s.dim_v)};
  for (std::size_t i = 2; i <= n_max; ++i) kd.push_back(long(koszul_term(s, i).dim()));
  for (std::size_t n = 1; n <= n_max; ++n) {
    long acc = 0;
    for (std::size_t i = 0; i <= n; ++i) acc += (i % 2 ? -1 : 1) * kd[i] * long(sd[n - i]);
    if (acc != 0) return n;
  }
  return std::nullopt;
}

Subspace koszul_term(const QuadraticAlgebraData& s, std::size_t n) {
  if (n < 2) throw InputError("koszul_term requires n >= 2");
  const Field& f = s.field;
  const std::size_t d = s.dim_v;
  Subspace acc;
  for (std::size_t j = 0; j + 2 <= n; ++j) {
    std::size_t pre = ipow(d, j), post = ipow(d, n - 2 - j);
    Rows gens;
    for (std::size_t a = 0; a < pre; ++a)
      for (const auto& r : s.relation_basis)
        for (std::size_t b = 0; b < post; ++b)
          gens.push_back(tensor_vec(tensor_vec(unit_vector(f, pre, a), r), unit_vector(f, post, b)));
    Subspace piece = Subspace::span(f, ipow(d, n), std::move(gens));
    acc = j == 0 ? piece : subspace_intersect(acc, piece);
  }
  return acc;
}

Vec normal_form(const QuadraticAlgebraData& s, const Vec& tensor, std::size_t n) {
  if (n > s.cutoff)
    throw CutoffOverflow("normal_form: degree " + std::to_string(n) + " exceeds cutoff " +
                         std::to_string(s.cutoff));
  const SComponent& c = s.comps[n];
  if (tensor.size() != ipow(s.dim_v, n)) throw DimensionMismatch("normal_form: tensor length");
  Vec r = tensor;
  for (std::size_t i = 0; i < c.ideal.size(); ++i) {
    Scalar a = r[c.ideal_pivots[i]];
    if (a.is_zero()) continue;
    axpy(r, -a, c.ideal[i]);
  }
  Vec out = zeros(s.field, c.words.size());
  for (std::size_t k = 0; k < c.words.size(); ++k) out[k] = r[c.words[k]];
  return out;
}

Vec s_multiply_basis(const QuadraticAlgebraData& s, std::size_t a, std::size_t i, std::size_t b,
                     std::size_t j) {
  std::size_t w1 = s.comps.at(a).words.at(i), w2 = s.comps.at(b).words.at(j);
  std::size_t n = a + b;
  if (n > s.cutoff) throw CutoffOverflow("product degree exceeds cutoff");
  std::size_t w = w1 * ipow(s.dim_v, b) + w2;
  const SComponent& c = s.comps[n];
  if (c.word_pos[w] >= 0) return unit_vector(s.field, c.words.size(), c.word_pos[w]);
  return normal_form(s, unit_vector(s.field, ipow(s.dim_v, n), w), n);
}

Rows antisymmetric_relations(const Field& f, std::size_t d) {
  Rows out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec r = zeros(f, d * d);
      r[i * d + j] = Scalar::one(f);
      r[j * d + i] = -Scalar::one(f);
      out.push_back(r);
    }
  return out;
}

bool is_symmetric_algebra(const QuadraticAlgebraData& s) {
  return s.relations == Subspace::span(s.field, s.dim_v * s.dim_v, antisymmetric_relations(s.field, s.dim_v));
}

}  // namespace pbw
