#include "pbw/examples.hpp"

#include <algorithm>
#include <array>

#include "pbw/errors.hpp"

namespace pbw {

ProblemData make_problem(HopfAlgebraData h, QuadraticAlgebraData s, ActionData a) {
  auto hr = validate_hopf(h);
  if (!hr.ok()) throw InputError("Hopf axioms fail: " + hr.summary());
  auto ar = validate_action(h, s, a);
  if (!ar.ok()) throw InputError("action invalid: " + ar.summary());
  return ProblemData{std::move(h), std::move(s), std::move(a)};
}

namespace {

Rows identity(const Field& f, std::size_t n) {
  Rows m(n, zeros(f, n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(f);
  return m;
}

Rows diag(const Field& f, const std::vector<long>& d) {
  Rows m(d.size(), zeros(f, d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = Scalar::from_int(f, d[i]);
  return m;
}

std::vector<std::string> var_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(n <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1));
  return out;
}

}  // namespace

ProblemData z2_sign_poly(const Field& f, std::size_t n, std::size_t cutoff) {
  auto S = make_quadratic(f, n, antisymmetric_relations(f, n), cutoff, var_labels(n));
  Rows minus = identity(f, n);
  for (auto& row : minus)
    for (auto& x : row) x = -x;
  return make_problem(cyclic_group_algebra(f, 2), std::move(S), ActionData{{identity(f, n), minus}});
}

ProblemData z2_diag_kxy(const Field& f, std::size_t cutoff) {
  auto S = make_quadratic(f, 2, antisymmetric_relations(f, 2), cutoff, {"x", "y"});
  return make_problem(cyclic_group_algebra(f, 2), std::move(S),
                      ActionData{{identity(f, 2), diag(f, {1, -1})}});
}

ProblemData sweedler_kuv(const Field& f, std::size_t cutoff) {
  auto S = make_quadratic(f, 2, antisymmetric_relations(f, 2), cutoff, {"u", "v"});
  Rows x(2, zeros(f, 2));
  x[0][1] = Scalar::one(f);  // v ↦ u
  Rows gx = x;               // g·x acts as diag(1,−1)·x
  return make_problem(sweedler_h4(f), std::move(S),
                      ActionData{{identity(f, 2), diag(f, {1, -1}), x, gx}});
}

std::vector<std::vector<std::size_t>> s3_cayley_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto find = [&](const std::array<int, 3>& q) {
    return std::size_t(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = find(c);
    }
  return t;
}

ProblemData s3_perm_kxyz(const Field& f, std::size_t cutoff) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> labels;
  ActionData a;
  for (const auto& q : perms) {
    labels.push_back(std::string("s") + char('0' + q[0]) + char('0' + q[1]) + char('0' + q[2]));
    Rows m(3, zeros(f, 3));
    for (int k = 0; k < 3; ++k) m[q[k]][k] = Scalar::one(f);  // e_k ↦ e_{σ(k)}
    a.rho.push_back(std::move(m));
  }
  labels[0] = "1";
  auto S = make_quadratic(f, 3, antisymmetric_relations(f, 3), cutoff, {"x", "y", "z"});
  return make_problem(group_algebra(f, s3_cayley_table(), labels), std::move(S), std::move(a));
}

ProblemData z2_trivial_quantum_plane(const Field& f, const Scalar& q, std::size_t cutoff) {
  Vec r = zeros(f, 4);
  r[1] = Scalar::one(f);
  r[2] = -q;
  auto S = make_quadratic(f, 2, {r}, cutoff, {"x", "y"});
  return make_problem(cyclic_group_algebra(f, 2), std::move(S),
                      ActionData{{identity(f, 2), identity(f, 2)}});
}

ParameterTriple constant_beta(const ProblemData& d, const Vec& h) {
  ParameterTriple p = ParameterTriple::zero(d);
  for (auto& b : p.beta) b = h;
  return p;
}

}  // namespace pbw
