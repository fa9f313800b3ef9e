#include <doctest.h>

#include "pbw/errors.hpp"
#include "pbw/examples.hpp"
#include "pbw/oracle.hpp"
#include "support/sampling.hpp"

using namespace pbw;
using pbw::testing::Rng;

namespace {

Rows r_times(const EvalContext& ctx, std::size_t h, const Scalar& c) {
  Rows t(ctx.nr(), ctx.H().zero());
  t[0][h] = c;
  return t;
}

// The triple with λ(g⊗x) = 1, λ(g⊗y) = g, α(x⊗y − y⊗x) = −y⊗g on the sign
// action. Naive signs in (2)/(4) reject it; the oracle says PBW.
ParameterTriple cross_term(const ProblemData& d) {
  auto p = ParameterTriple::zero(d);
  p.lambda[1][0] = d.H.basis(0);
  p.lambda[1][1] = d.H.basis(1);
  p.alpha[0][1][1] = Scalar::from_int(d.H.field, -1);
  return p;
}

}  // namespace

TEST_SUITE("conditions") {
  TEST_CASE("twisted_relation_transport examples") {
    Field Q = Field::rationals();
    auto sign = z2_sign_poly(Q, 2);
    EvalContext cs(sign);
    const Vec& r = cs.relation(0);
    CHECK(twisted_relation_transport(cs, cs.hb(0), r) == r_times(cs, 0, Scalar::one(Q)));
    CHECK(twisted_relation_transport(cs, cs.hb(1), r) == r_times(cs, 1, Scalar::one(Q)));
    auto diag = z2_diag_kxy(Q);
    EvalContext cd(diag);
    CHECK(twisted_relation_transport(cd, cd.hb(1), cd.relation(0)) ==
          r_times(cd, 1, Scalar::from_int(Q, -1)));
  }

  TEST_CASE("zero parameters satisfy every condition in every mode") {
    Field F = Field::prime(7);
    for (const auto& d : {z2_sign_poly(F, 2), z2_diag_kxy(F), sweedler_kuv(F), s3_perm_kxyz(F, 3),
                          z2_trivial_quantum_plane(F, Scalar::from_int(F, 3))}) {
      EvalContext ctx(d);
      auto rep = check_pbw(ctx, ParameterTriple::zero(d));
      for (int k = 1; k <= 6; ++k) {
        CHECK(rep.left[k].status == Status::Holds);
        CHECK(rep.right[k].status == Status::Holds);
      }
    }
  }

  TEST_CASE("Drinfeld-Hecke triple on the sign action") {
    Field Q = Field::rationals();
    auto d = z2_sign_poly(Q, 2);
    EvalContext ctx(d);
    auto p = constant_beta(d, d.H.basis(1));
    auto c2 = check_condition(2, ctx, p, Mode::Left);
    CHECK(c2.status == Status::Holds);
    CHECK(c2.inputs_checked == 2);
    auto rep = check_pbw(ctx, p);
    CHECK(rep.holds());
    CHECK(rep.modes_agree());
    CHECK(check_polynomial_case(ctx, p).holds());
  }

  TEST_CASE("diag action with β = g fails (2) with residual 2·1") {
    Field Q = Field::rationals();
    auto d = z2_diag_kxy(Q);
    EvalContext ctx(d);
    auto p = constant_beta(d, d.H.basis(1));
    auto rep = check_pbw(ctx, p);
    CHECK_FALSE(rep.holds());
    CHECK(rep.modes_agree());
    for (const ConditionReport* m : {&rep.left, &rep.right}) {
      const auto& c2 = (*m)[2];
      CHECK(c2.status == Status::Fails);
      REQUIRE(c2.residual);
      CHECK(*c2.residual == Scalar::from_int(Q, 2) * ctx.A().one());
      for (int k : {1, 3, 4, 5, 6}) CHECK((*m)[k].status == Status::Holds);
    }
    CHECK(rep.left[2].witness->idx == std::vector<std::size_t>{1, 0});
    CHECK_FALSE(check_polynomial_case(ctx, p).holds());
  }

  TEST_CASE("cross-term triple is PBW by both the conditions and the oracle") {
    Field Q = Field::rationals();
    auto d = z2_sign_poly(Q, 2);
    EvalContext ctx(d);
    auto p = cross_term(d);
    auto rep = check_pbw(ctx, p);
    CHECK(rep.holds());
    CHECK(rep.modes_agree());
    CHECK(check_polynomial_case(ctx, p).holds());
    CHECK(pbw_oracle(d, p, 4).pbw);
    // Flipping the α sign breaks it, and the oracle sees that too.
    p.alpha[0][1][1] = Scalar::one(Q);
    CHECK_FALSE(check_pbw(ctx, p).holds());
    CHECK_FALSE(pbw_oracle(d, p, 4).pbw);
  }

  TEST_CASE("(4) and (5) are undefined when (6) fails") {
    Field F = Field::prime(7);
    auto d = z2_sign_poly(F, 3);
    EvalContext ctx(d);
    Rng rng(17);
    int seen = 0;
    for (int it = 0; it < 50 && seen < 3; ++it) {
      auto p = pbw::testing::random_triple(d, rng);
      auto rep = check_conditions(ctx, p, Mode::Left);
      if (rep[6].status != Status::Fails) continue;
      ++seen;
      CHECK(rep[4].status == Status::Undefined);
      CHECK(rep[5].status == Status::Undefined);
      CHECK_FALSE(rep.holds());
      CHECK_THROWS_AS(check_condition(4, ctx, p, Mode::Left), Condition456Undefined);
      CHECK_THROWS_AS(check_condition(5, ctx, p, Mode::Right), Condition456Undefined);
    }
    CHECK(seen > 0);
  }

  TEST_CASE("polynomial mode needs a symmetric algebra") {
    Field Q = Field::rationals();
    auto d = z2_trivial_quantum_plane(Q, Scalar::from_int(Q, 2));
    EvalContext ctx(d);
    CHECK_THROWS_AS(check_polynomial_case(ctx, ParameterTriple::zero(d)), NotSymmetricAlgebra);
    auto s3 = z2_sign_poly(Q, 3);
    EvalContext c3(s3);
    CHECK(check_polynomial_case(c3, ParameterTriple::zero(s3)).holds());
  }

  TEST_CASE("solve_beta on the sign action with α = λ = 0") {
    Field Q = Field::rationals();
    auto d = z2_sign_poly(Q, 2);
    EvalContext ctx(d);
    auto res = solve_beta(ctx, ParameterTriple::zero(d));
    auto* s = std::get_if<BetaSolutions>(&res);
    REQUIRE(s);
    // Both β = 0 and β = g lie in the affine space.
    CHECK(is_zero(s->particular[0]));
    Rows span;
    for (const auto& k : s->kernel) span.push_back(k[0]);
    CHECK(rank(span, 2) == 2);
    auto p = ParameterTriple::zero(d);
    Rng rng(4);
    for (int it = 0; it < 10; ++it) {
      Vec c;
      for (std::size_t i = 0; i < s->kernel.size(); ++i) c.push_back(pbw::testing::random_scalar(Q, rng));
      p.beta = s->member(c);
      CHECK(check_pbw(ctx, p).holds());
    }
  }

  TEST_CASE("solve_beta reports the first β-free failure") {
    Field Q = Field::rationals();
    auto d = z2_diag_kxy(Q);
    EvalContext ctx(d);
    auto p = ParameterTriple::zero(d);
    p.lambda[1][0] = d.H.basis(0);  // λ(g⊗x) = 1 with ^g x = x
    CHECK(check_condition(1, ctx, p, Mode::Left).status == Status::Fails);
    auto res = solve_beta(ctx, p);
    REQUIRE(std::holds_alternative<NoLift>(res));
    CHECK(std::get<NoLift>(res).condition == 1);

    // On the sign action (1) carries no constraint, and λ(g⊗x) = 1 alone breaks (3).
    auto s = z2_sign_poly(Q, 2);
    EvalContext cs(s);
    auto q = ParameterTriple::zero(s);
    q.lambda[1][0] = s.H.basis(0);
    auto rs = solve_beta(cs, q);
    REQUIRE(std::holds_alternative<NoLift>(rs));
    CHECK(std::get<NoLift>(rs).condition == 3);
  }

  TEST_CASE("property: solve_beta soundness on sampled (λ, α)") {
    Field F = Field::prime(7);
    Rng rng(8);
    for (const auto& d : {z2_sign_poly(F, 2), sweedler_kuv(F), z2_sign_poly(F, 3)}) {
      EvalContext ctx(d);
      Rows space = pbw::testing::linear_solution_space(ctx, {1, 3, 6});
      int lifted = 0;
      for (int it = 0; it < 15; ++it) {
        auto p = pbw::testing::sample_space(ctx, space, rng, false);
        auto res = solve_beta(ctx, p);
        if (auto* s = std::get_if<BetaSolutions>(&res)) {
          ++lifted;
          Vec c;
          for (std::size_t i = 0; i < s->kernel.size(); ++i) c.push_back(pbw::testing::random_scalar(F, rng));
          p.beta = s->member(c);
          auto rep = check_pbw(ctx, p);
          CHECK(rep.holds());
          CHECK(rep.modes_agree());
        } else {
          CHECK(std::holds_alternative<Inconsistent>(res));
        }
      }
      CHECK(lifted > 0);
    }
  }

  TEST_CASE("property: left, right and polynomial verdicts agree over F7") {
    Field F = Field::prime(7);
    Rng rng(99);
    for (const auto& d : {z2_sign_poly(F, 2), z2_diag_kxy(F), sweedler_kuv(F), z2_sign_poly(F, 3)}) {
      EvalContext ctx(d);
      Rows space = pbw::testing::linear_solution_space(ctx, {1, 3, 6});
      for (int it = 0; it < 30; ++it) {
        auto p = it % 2 ? pbw::testing::random_triple(d, rng, 0.3)
                        : pbw::testing::sample_space(ctx, space, rng, it % 4 == 0);
        auto rep = check_pbw(ctx, p);
        CHECK(rep.modes_agree());
        if (is_symmetric_algebra(d.S)) CHECK(check_polynomial_case(ctx, p).holds() == rep.holds());
      }
    }
  }

  TEST_CASE("property: the verdict matches the oracle on sampled triples") {
    Field F = Field::prime(7);
    Rng rng(31);
    for (const auto& d : {z2_sign_poly(F, 2), z2_diag_kxy(F), sweedler_kuv(F)}) {
      EvalContext ctx(d);
      Rows space = pbw::testing::linear_solution_space(ctx, {1, 3, 6});
      for (int it = 0; it < 12; ++it) {
        auto p = pbw::testing::sample_space(ctx, space, rng, false);
        auto res = solve_beta(ctx, p);
        if (auto* s = std::get_if<BetaSolutions>(&res); s && it % 2) p.beta = s->particular;
        CHECK(check_pbw(ctx, p).holds() == pbw_oracle(d, p, 4).pbw);
      }
    }
  }
}
