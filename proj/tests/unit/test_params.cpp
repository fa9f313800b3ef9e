#include <doctest.h>

#include "pbw/errors.hpp"
#include "pbw/examples.hpp"
#include "pbw/oracle.hpp"
#include "support/sampling.hpp"

using namespace pbw;
using pbw::testing::Rng;

namespace {

GWord w0(std::initializer_list<std::uint32_t> xs) {
  GWord w{0};
  w.insert(w.end(), xs);
  return w;
}

AlphaTilde zero_tilde(const ProblemData& d) {
  return AlphaTilde(d.S.dim_r(), std::vector<Rows>(d.H.dim, Rows(d.S.dim_v, d.H.zero())));
}

AlphaTilde random_tilde(const ProblemData& d, Rng& rng) {
  AlphaTilde at = zero_tilde(d);
  for (auto& a : at)
    for (auto& b : a)
      for (auto& c : b)
        for (auto& s : c) s = pbw::testing::random_scalar(d.H.field, rng);
  return at;
}

}  // namespace

TEST_SUITE("pbwparams") {
  TEST_CASE("validate_params examples") {
    Field Q = Field::rationals();
    auto d = z2_sign_poly(Q, 2);
    CHECK(validate_params(d, ParameterTriple::zero(d)).ok());

    auto p = ParameterTriple::zero(d);
    p.lambda[0][1] = d.H.basis(1);  // λ(1⊗y) = g
    auto r = validate_params(d, p);
    const AxiomCheck* lu = r.find("lambda_vanishes_on_unit");
    REQUIRE(lu);
    CHECK_FALSE(lu->passed);
    CHECK(lu->witness == std::vector<std::size_t>{1});

    auto q = ParameterTriple::zero(d);
    q.alpha[0].push_back(d.H.zero());  // a third V leg
    CHECK_FALSE(validate_params(d, q).find("alpha_shape")->passed);
    auto b = ParameterTriple::zero(d);
    b.beta[0].pop_back();
    CHECK_FALSE(validate_params(d, b).find("beta_shape")->passed);
  }

  TEST_CASE("λ on rows other than 1_H is unconstrained by validation") {
    auto d = sweedler_kuv(Field::prime(7));
    auto p = ParameterTriple::zero(d);
    p.lambda[2][0] = d.H.basis(1);
    CHECK(validate_params(d, p).ok());
  }

  TEST_CASE("normalize_alpha fixes normalized α̃") {
    Field Q = Field::rationals();
    auto d = sweedler_kuv(Q);
    Rng rng(5);
    AlphaTilde at = zero_tilde(d);
    std::vector<Vec> bt(d.S.dim_r(), d.H.zero());
    for (std::size_t v = 0; v < 2; ++v)
      for (auto& s : at[0][0][v]) s = pbw::testing::random_scalar(Q, rng);
    bt[0] = d.H.basis(3);
    auto lam = pbw::testing::random_triple(d, rng).lambda;
    auto n = normalize_alpha(d, at, bt, lam);
    CHECK(n.alpha[0] == at[0][0]);
    CHECK(n.beta == bt);
  }

  TEST_CASE("normalize_alpha on zero α̃") {
    Field Q = Field::rationals();
    auto d = z2_sign_poly(Q, 2);
    std::vector<Vec> bt{d.H.basis(1)};
    auto n = normalize_alpha(d, zero_tilde(d), bt, ParameterTriple::zero(d).lambda);
    CHECK(n.alpha == ParameterTriple::zero(d).alpha);
    CHECK(n.beta == bt);
  }

  TEST_CASE("normalize_alpha moves a group-like left leg across v") {
    // g v = ^g v g + λ(g⊗v) in the quotient, so g⊗v⊗1 becomes (^g v)⊗g and
    // β picks up λ(g⊗v).
    Field Q = Field::rationals();
    auto d = z2_diag_kxy(Q);
    auto lam = ParameterTriple::zero(d).lambda;
    lam[1][1] = d.H.basis(0);  // λ(g⊗y) = 1
    AlphaTilde at = zero_tilde(d);
    at[0][1][1] = d.H.basis(0);  // α̃(r) = g⊗y⊗1
    std::vector<Vec> bt{d.H.basis(1)};
    auto n = normalize_alpha(d, at, bt, lam);
    Rows want(2, d.H.zero());
    want[1][1] = Scalar::from_int(Q, -1);  // ^g y = −y
    CHECK(n.alpha[0] == want);
    CHECK(n.beta[0] == d.H.basis(1) + d.H.basis(0));
  }

  TEST_CASE("property: normalize_alpha output validates and has the right shape") {
    Rng rng(11);
    Field F = Field::prime(7);
    for (const auto& d : {z2_sign_poly(F, 2), sweedler_kuv(F), s3_perm_kxyz(F, 3)}) {
      for (int it = 0; it < 20; ++it) {
        auto p = pbw::testing::random_triple(d, rng);
        auto n = normalize_alpha(d, random_tilde(d, rng), p.beta, p.lambda);
        p.alpha = n.alpha;
        p.beta = n.beta;
        CHECK(validate_params(d, p).ok());
      }
    }
  }

  TEST_CASE("homogenize examples") {
    Field Q = Field::rationals();
    auto d = z2_sign_poly(Q, 2);
    auto z = homogenize(d, ParameterTriple::zero(d));
    REQUIRE(z.Pt.size() == 1);
    // r = x⊗y − y⊗x with unit letters between
    GElement r;
    gadd(r, w0({0, 0, 0, 1, 0}), Scalar::one(Q));
    gadd(r, w0({0, 1, 0, 0, 0}), Scalar::from_int(Q, -1));
    CHECK(z.Pt[0] == r);

    auto b = homogenize(d, constant_beta(d, d.H.basis(1)));
    GElement rb = r;
    gadd(rb, {2, 1}, Scalar::from_int(Q, -1));
    CHECK(b.Pt[0] == rb);
    CHECK(b.P[0] != b.Pt[0]);

    auto p = ParameterTriple::zero(d);
    p.lambda[1][0] = d.H.basis(0);
    auto l = homogenize(d, p);
    // (g⊗x⊗1 − 1⊗τ(g⊗x)) − 1·t with τ(g⊗x) = −x⊗g
    GElement want;
    gadd(want, w0({1, 0, 0}), Scalar::one(Q));
    gadd(want, w0({0, 0, 1}), Scalar::one(Q));
    gadd(want, {1, 0}, Scalar::from_int(Q, -1));
    REQUIRE(l.pp_index[0] == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(l.Ppt[0] == want);
  }

  TEST_CASE("property: setting t = 0 recovers R and R'") {
    Rng rng(2);
    Field F = Field::prime(7);
    for (const auto& d : {z2_sign_poly(F, 2), sweedler_kuv(F)}) {
      auto z = homogenize(d, ParameterTriple::zero(d));
      for (int it = 0; it < 10; ++it) {
        auto rel = homogenize(d, pbw::testing::random_triple(d, rng));
        for (std::size_t k = 0; k < rel.Pt.size(); ++k) CHECK(set_t_zero(rel.Pt[k]) == z.Pt[k]);
        for (std::size_t k = 0; k < rel.Ppt.size(); ++k) CHECK(set_t_zero(rel.Ppt[k]) == z.Ppt[k]);
        for (const auto& e : rel.Pt)
          for (const auto& [w, c] : e) CHECK(gword_degree(w) == 2);
        for (const auto& e : rel.Ppt)
          for (const auto& [w, c] : e) CHECK(gword_degree(w) == 1);
      }
    }
  }

  TEST_CASE("homogenize_tilde agrees with homogenize on normalized α̃") {
    Rng rng(9);
    Field F = Field::prime(7);
    auto d = sweedler_kuv(F);
    auto p = pbw::testing::random_triple(d, rng);
    AlphaTilde at = zero_tilde(d);
    for (std::size_t k = 0; k < at.size(); ++k) at[k][0] = p.alpha[k];
    auto a = homogenize(d, p), b = homogenize_tilde(d, p.lambda, at, p.beta);
    CHECK(a.Pt == b.Pt);
    CHECK(a.Ppt == b.Ppt);
    CHECK_THROWS_AS(homogenize_tilde(d, p.lambda, AlphaTilde{}, p.beta), DimensionMismatch);
  }

  TEST_CASE("property: α̃ and its normalization give the same homogenized dimensions") {
    Rng rng(21);
    Field F = Field::prime(7);
    for (const auto& d : {z2_sign_poly(F, 2), z2_diag_kxy(F)}) {
      for (int it = 0; it < 8; ++it) {
        auto p = pbw::testing::random_triple(d, rng, 0.5);
        AlphaTilde at = random_tilde(d, rng);
        auto n = normalize_alpha(d, at, p.beta, p.lambda);
        ParameterTriple q{p.lambda, n.alpha, n.beta};
        auto tilde = homogenized_dims(d, presentation(d, p.lambda, at, p.beta), 3);
        CHECK(tilde == homogenized_dims(d, q, 3));
      }
    }
  }
}
