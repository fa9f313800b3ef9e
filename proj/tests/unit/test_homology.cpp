#include <doctest.h>

#include "pbw/errors.hpp"
#include "pbw/examples.hpp"
#include "pbw/homology.hpp"
#include "support/sampling.hpp"

using namespace pbw;
using pbw::testing::Rng;

namespace {

Status conj(Status a, Status b) {
  if (a == Status::Fails || b == Status::Fails) return Status::Fails;
  if (a == Status::Undefined || b == Status::Undefined) return Status::Undefined;
  return Status::Holds;
}

BarElement bar(const EvalContext& ctx, std::initializer_list<SmashElement> mid, const Scalar& c) {
  std::vector<SmashElement> legs{ctx.A().one()};
  legs.insert(legs.end(), mid);
  legs.push_back(ctx.A().one());
  BarElement b = bar_tensor(ctx, legs), out;
  for (const auto& [k, v] : b.terms) out.add(k, c * v);
  return out;
}

BarElement sum(BarElement a, const BarElement& b) {
  for (const auto& [k, v] : b.terms) a.add(k, v);
  return a;
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("X generator counts") {
    auto d = z2_sign_poly(Field::rationals(), 3);
    EvalContext ctx(d);
    XComplex x(ctx);
    CHECK(x.size(0, 2) == 1);
    CHECK(x.size(1, 1) == 3);
    CHECK(x.size(2, 0) == 3);
    CHECK(x.size(2, 1) == 3);
    CHECK(x.size(3, 0) == 1);
    CHECK(x.size(1, 3) == 0);
    auto s = sweedler_kuv(Field::rationals());
    EvalContext cs(s);
    XComplex xs(cs);
    CHECK(xs.nb == 3);
    CHECK(xs.size(1, 2) == 2 * 9);
    CHECK(xs.size(3, 0) == 0);
    CHECK(xs.label(cs, 1, 2, 5) == "X12[u⊗h̄1⊗h̄2]");
  }

  TEST_CASE("lift_cochains examples") {
    Field Q = Field::rationals();
    auto d = z2_sign_poly(Q, 2);
    EvalContext ctx(d);
    auto z = lift_cochains(ctx, ParameterTriple::zero(d));
    CHECK(z.alpha.is_zero());
    CHECK(z.beta.is_zero());
    CHECK(z.lambda.is_zero());

    auto p = ParameterTriple::zero(d);
    p.lambda[1][0] = d.H.basis(0);  // λ_L(g⊗x) = 1
    p.alpha[0][0][1] = Scalar::one(Q);  // α(r) = x⊗g
    auto l = lift_cochains(ctx, p);
    // λ_R(x⊗g) = −λ_L(τ⁻¹(x⊗g)) = −λ_L(g⊗(−x)) = 1
    CHECK(l.lambda.comp[1][0] == ctx.A().one());
    CHECK(l.lambda.comp[1][1].is_zero());
    CHECK(l.alpha.comp[2][0] == ctx.mul(ctx.elemV(ctx.vb(0)), ctx.elemH(ctx.hb(1))));
    CHECK(l.alpha.comp[0].size() == 1);
    CHECK(l.alpha.comp[0][0].is_zero());
    CHECK(l.alpha.comp[1][0].is_zero());
  }

  TEST_CASE("dstar on zero and on the X_{0,3} component") {
    Field F = Field::prime(7);
    Rng rng(6);
    for (const auto& d : {z2_sign_poly(F, 2), sweedler_kuv(F), z2_sign_poly(F, 3)}) {
      EvalContext ctx(d);
      CHECK(dstar(ctx, Cochain::zero(ctx, 2)).is_zero());
      CHECK_THROWS_AS(dstar(ctx, Cochain::zero(ctx, 3)), InputError);
      for (int it = 0; it < 10; ++it) {
        auto lc = lift_cochains(ctx, pbw::testing::random_triple(d, rng));
        auto da = dstar(ctx, lc.alpha + lc.lambda);
        for (const auto& e : da.comp[0]) CHECK(e.is_zero());
      }
    }
  }

  TEST_CASE("brackets examples") {
    Field Q = Field::rationals();
    auto d = z2_sign_poly(Q, 2);
    EvalContext ctx(d);
    auto z = brackets(ctx, ParameterTriple::zero(d));
    CHECK(z.sq.is_zero());
    CHECK(z.mixed.is_zero());
    auto p = ParameterTriple::zero(d);
    p.lambda[1][0] = d.H.basis(1);
    p.lambda[1][1] = d.H.basis(0);
    auto b = brackets(ctx, p);
    CHECK(b.mixed.is_zero());
    CHECK_FALSE(b.sq.is_zero());

    auto dh = constant_beta(d, d.H.basis(1));
    auto lc = lift_cochains(ctx, dh);
    auto bd = brackets(ctx, dh);
    CHECK((bd.sq - Scalar::from_int(Q, 2) * dstar(ctx, lc.beta)).is_zero());
  }

  TEST_CASE("brackets need (6)") {
    Field F = Field::prime(7);
    auto d = z2_sign_poly(F, 3);
    EvalContext ctx(d);
    Rng rng(17);
    int seen = 0;
    for (int it = 0; it < 40 && seen < 3; ++it) {
      auto p = pbw::testing::random_triple(d, rng);
      if (check_condition(6, ctx, p, Mode::Left).status != Status::Fails) continue;
      ++seen;
      CHECK_THROWS_AS(brackets(ctx, p), BracketUndefined);
      auto abc = check_abc(ctx, p);
      CHECK(abc.a.status == Status::Fails);
      CHECK(abc.c.status == Status::Undefined);
    }
    CHECK(seen > 0);
  }

  TEST_CASE("check_abc examples") {
    Field Q = Field::rationals();
    auto sign = z2_sign_poly(Q, 2);
    EvalContext cs(sign);
    CHECK(check_abc(cs, ParameterTriple::zero(sign)).holds());
    CHECK(check_abc(cs, constant_beta(sign, sign.H.basis(1))).holds());

    auto diag = z2_diag_kxy(Q);
    EvalContext cd(diag);
    auto p = ParameterTriple::zero(diag);
    p.lambda[1][0] = diag.H.basis(0);
    auto c1 = check_condition(1, cd, p, Mode::Left);
    REQUIRE(c1.status == Status::Fails);
    CHECK(c1.witness->label == "g⊗g⊗x");
    auto abc = check_abc(cd, p);
    CHECK(abc.a.status == Status::Fails);
    CHECK(*abc.a.witness == "X12[x⊗h̄0⊗h̄0]");

    auto broken = check_abc(cd, constant_beta(diag, diag.H.basis(1)));
    CHECK(broken.a.status == Status::Holds);
    CHECK(broken.b.status == Status::Fails);
    CHECK(broken.c.status == Status::Holds);
  }

  TEST_CASE("property: (a), (b), (c) track the six conditions over F7") {
    Field F = Field::prime(7);
    Rng rng(123);
    for (const auto& d : {z2_sign_poly(F, 2), z2_diag_kxy(F), sweedler_kuv(F), z2_sign_poly(F, 3)}) {
      EvalContext ctx(d);
      std::vector<Rows> spaces{pbw::testing::linear_solution_space(ctx, {1}),
                               pbw::testing::linear_solution_space(ctx, {1, 3, 6})};
      for (int it = 0; it < 30; ++it) {
        auto p = it % 3 == 0 ? pbw::testing::random_triple(d, rng, 0.4)
                             : pbw::testing::sample_space(ctx, spaces[it % 3 - 1], rng, it % 2);
        auto L = check_conditions(ctx, p, Mode::Left);
        auto abc = check_abc(ctx, p);
        CHECK(conj(conj(L[1].status, L[3].status), L[6].status) == abc.a.status);
        CHECK(conj(L[2].status, L[4].status) == abc.b.status);
        CHECK(L[5].status == abc.c.status);
      }
    }
  }

  TEST_CASE("ι table rows") {
    Field Q = Field::rationals();
    auto d = z2_sign_poly(Q, 2);
    EvalContext ctx(d);
    auto x = ctx.elemV(ctx.vb(0)), y = ctx.elemV(ctx.vb(1)), g = ctx.elemH(ctx.hb(1));
    const Scalar one = Scalar::one(Q), m1 = Scalar::from_int(Q, -1);
    // ι(r) = r
    CHECK(iota_table(ctx, {2, 0, 0}).terms == sum(bar(ctx, {x, y}, one), bar(ctx, {y, x}, m1)).terms);
    // ι(x⊗g) = x⊗g − τ⁻¹(x⊗g) = x⊗g + g⊗x
    CHECK(iota_table(ctx, {1, 1, 0}).terms == sum(bar(ctx, {x, g}, one), bar(ctx, {g, x}, one)).terms);
    auto d3 = z2_sign_poly(Q, 3);
    EvalContext c3(d3);
    BarElement xi = iota_table(c3, {3, 0, 0});
    CHECK(xi.terms.size() == 6);
    for (const auto& [k, c] : xi.terms) CHECK((c == Scalar::one(Q) || c == Scalar::from_int(Q, -1)));
    CHECK_THROWS_AS(iota_table(ctx, {0, 2, 0}), UntabulatedInput);
  }

  TEST_CASE("π table rows") {
    Field Q = Field::rationals();
    auto d = z2_sign_poly(Q, 2);
    EvalContext ctx(d);
    auto x = ctx.elemV(ctx.vb(0)), y = ctx.elemV(ctx.vb(1)), g = ctx.elemH(ctx.hb(1));
    const Scalar one = Scalar::one(Q);
    CHECK(pi_table(ctx, bar(ctx, {x, g}, one)).is_zero());
    CHECK(pi_table(ctx, sum(bar(ctx, {x, y}, one), bar(ctx, {y, x}, Scalar::from_int(Q, -1)))) ==
          x_generator(ctx, {2, 0, 0}));
    // π(g⊗x) = −(^g x)⊗ḡ = x⊗ḡ
    CHECK(pi_table(ctx, bar(ctx, {g, x}, one)) == x_generator(ctx, {1, 1, 0}));
    // π(g⊗g) is the X02 generator
    CHECK(pi_table(ctx, bar(ctx, {g, g}, one)) == x_generator(ctx, {0, 2, 0}));
    CHECK_THROWS_AS(pi_table(ctx, bar(ctx, {x, x, x}, one)), UntabulatedInput);
    CHECK_THROWS_AS(pi_table(ctx, bar(ctx, {x, x}, one)), UntabulatedInput);
  }

  TEST_CASE("verify_pi_iota on every bundled triple") {
    for (const Field& f : {Field::rationals(), Field::prime(7)}) {
      for (const auto& d : {z2_sign_poly(f, 2), z2_diag_kxy(f), sweedler_kuv(f), s3_perm_kxyz(f, 3),
                            z2_trivial_quantum_plane(f, Scalar::from_int(f, 2))}) {
        EvalContext ctx(d);
        auto r = verify_pi_iota(ctx);
        CHECK(r.ok());
        XComplex xc(ctx);
        CHECK(r.checked == xc.size(1, 1) + xc.size(2, 0));
      }
    }
  }
}
