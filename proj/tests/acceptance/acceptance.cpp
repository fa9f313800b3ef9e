// Acceptance battery: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pbw/errors.hpp"
#include "pbw/examples.hpp"
#include "pbw/homology.hpp"
#include "pbw/oracle.hpp"
#include "support/sampling.hpp"

using namespace pbw;
using pbw::testing::Rng;

namespace {

struct Fixture {
  std::string name;
  ProblemData d;
};

std::vector<Fixture> basic(const Field& f) {
  return {{"Z2 sign on k[x,y]", z2_sign_poly(f, 2)},
          {"Z2 diag(1,-1) on k[x,y]", z2_diag_kxy(f)},
          {"H4 on k[u,v]", sweedler_kuv(f)}};
}

// Collects reasons; a criterion passes iff nothing was recorded and it ran in time.
struct Verdict {
  std::vector<std::string> problems;
  std::string info;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

Status conj(Status a, Status b) {
  if (a == Status::Fails || b == Status::Fails) return Status::Fails;
  if (a == Status::Undefined || b == Status::Undefined) return Status::Undefined;
  return Status::Holds;
}

bool all_hold(const ConditionReport& r) {
  for (int k = 1; k <= 6; ++k)
    if (r[k].status != Status::Holds) return false;
  return true;
}

// ---------------------------------------------------------------------------

void criterion1(Verdict& v) {
  Field Q = Field::rationals();
  std::vector<std::pair<std::string, HopfAlgebraData>> good{
      {"Z2", cyclic_group_algebra(Q, 2)},
      {"S3", group_algebra(Q, s3_cayley_table())},
      {"H4", sweedler_h4(Q)}};
  for (const auto& [name, h] : good) v.require(validate_hopf(h).ok(), name + " rejected");

  auto z2 = good[0].second;
  z2.counit[1] = Scalar::zero(Q);
  auto s3 = good[1].second;
  std::swap(s3.mult[1][2], s3.mult[1][3]);
  auto h4 = good[2].second;
  h4.antipode[2] = h4.basis(3);
  std::ostringstream os;
  for (const auto& [name, h] : std::vector<std::pair<std::string, HopfAlgebraData>>{
           {"Z2", z2}, {"S3", s3}, {"H4", h4}}) {
    auto r = validate_hopf(h);
    const AxiomCheck* bad = r.first_failure();
    v.require(bad != nullptr, "corrupted " + name + " accepted");
    if (bad) {
      v.require(!bad->witness.empty(), "corrupted " + name + " has no witness");
      os << name << ":" << bad->name << " ";
    }
  }
  v.info = "corruptions caught by " + os.str();
}

void criterion2(Verdict& v, std::vector<double>& per_fixture) {
  for (const auto& fx : basic(Field::rationals())) {
    auto t0 = std::chrono::steady_clock::now();
    const auto& d = fx.d;
    EvalContext ctx(d);
    auto p = ParameterTriple::zero(d);
    auto rep = check_pbw(ctx, p);
    v.require(all_hold(rep.left) && all_hold(rep.right), fx.name + ": a condition fails");
    v.require(check_abc(ctx, p).holds(), fx.name + ": (a)/(b)/(c) fail");
    auto o = pbw_oracle(d, p, 4);
    v.require(o.pbw && o.max_degree == 4, fx.name + ": oracle " + o.summary());
    auto gr = gr_dims(d, p, 4);
    auto s = graded_dims(d.S, 4);
    for (std::size_t n = 0; n <= 4; ++n)
      v.require(gr[n] == s[n] * d.H.dim, fx.name + ": gr dim mismatch at " + std::to_string(n));
    per_fixture.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
}

void criterion3(Verdict& v) {
  auto d = z2_sign_poly(Field::rationals(), 2);
  EvalContext ctx(d);
  auto p = constant_beta(d, d.H.basis(1));
  auto rep = check_pbw(ctx, p);
  v.require(rep.holds() && rep.modes_agree(), "check_pbw rejects");
  v.require(check_abc(ctx, p).holds(), "check_abc rejects");
  auto o = pbw_oracle(d, p, 4);
  v.require(o.pbw, "oracle: " + o.summary());
  v.info = "oracle " + o.summary();
}

void criterion4(Verdict& v) {
  Field Q = Field::rationals();
  auto d = z2_diag_kxy(Q);
  EvalContext ctx(d);
  auto p = constant_beta(d, d.H.basis(1));
  auto c2 = check_condition(2, ctx, p, Mode::Left);
  v.require(c2.status == Status::Fails, "(2) holds");
  v.require(c2.residual && *c2.residual == Scalar::from_int(Q, 2) * ctx.A().one(), "(2) residual is not 2·1");
  v.require(check_abc(ctx, p).b.status == Status::Fails, "(b) holds");
  auto o = pbw_oracle(d, p, 4);
  v.require(!o.pbw && o.fail_degree && *o.fail_degree <= 4, "oracle does not fail by degree 4");
  v.info = "(2) residual " + (c2.residual ? ctx.A().to_string(*c2.residual) : "none") + ", oracle " + o.summary();
}

void criterion5(Verdict& v) {
  Field F = Field::prime(7);
  auto fixtures = basic(F);
  fixtures.push_back({"Z2 sign on k[x,y,z]", z2_sign_poly(F, 3)});
  fixtures.push_back({"S3 on k[x,y,z]", s3_perm_kxyz(F, 3)});
  const int per = 200;
  std::ostringstream os;
  for (const auto& fx : fixtures) {
    const auto& d = fx.d;
    EvalContext ctx(d);
    Rng rng(1729);
    // Mix uniform triples with triples drawn from the spaces cut out by the
    // β-free conditions, so that every condition pattern is exercised.
    std::vector<Rows> spaces{pbw::testing::linear_solution_space(ctx, {1}),
                             pbw::testing::linear_solution_space(ctx, {1, 3}),
                             pbw::testing::linear_solution_space(ctx, {1, 3, 6})};
    int exceptions = 0, pbw_count = 0;
    for (int it = 0; it < per; ++it) {
      int kind = it % 5;
      ParameterTriple p = kind == 4   ? pbw::testing::random_triple(d, rng, 0.3)
                          : kind == 3 ? pbw::testing::random_triple(d, rng, 1.0)
                                      : pbw::testing::sample_space(ctx, spaces[kind], rng, it % 2);
      if (kind == 2 && it % 3 == 0) {
        auto sb = solve_beta(ctx, p);
        if (auto* s = std::get_if<BetaSolutions>(&sb)) {
          Vec c;
          for (std::size_t i = 0; i < s->kernel.size(); ++i) c.push_back(pbw::testing::random_scalar(F, rng));
          p.beta = s->member(c);
        }
      }
      auto L = check_conditions(ctx, p, Mode::Left);
      auto R = check_conditions(ctx, p, Mode::Right);
      auto abc = check_abc(ctx, p);
      bool ok = conj(conj(L[1].status, L[3].status), L[6].status) == abc.a.status &&
                conj(L[2].status, L[4].status) == abc.b.status && L[5].status == abc.c.status &&
                L.holds() == R.holds();
      if (is_symmetric_algebra(d.S)) ok = ok && check_polynomial_case(ctx, p).holds() == L.holds();
      if (!ok) ++exceptions;
      if (L.holds()) ++pbw_count;
    }
    v.require(exceptions == 0, fx.name + ": " + std::to_string(exceptions) + " exceptions");
    os << fx.name << " " << per << " triples (" << pbw_count << " PBW); ";
  }
  v.info = os.str();
}

void criterion6(Verdict& v) {
  std::size_t checked = 0;
  for (const auto& fx : basic(Field::rationals())) {
    EvalContext ctx(fx.d);
    auto r = verify_pi_iota(ctx);
    checked += r.checked;
    v.require(r.ok(), fx.name + ": " + (r.failures.empty() ? "" : r.failures.front()));
    XComplex xc(ctx);
    v.require(r.checked == xc.size(1, 1) + xc.size(2, 0), fx.name + ": not every generator checked");
  }
  v.info = std::to_string(checked) + " generators";
}

// γ on a single H⊗V⊗H slot, as a matrix from H⊗V⊗H coordinates (h, v, h') to V⊗H coordinates.
Rows gamma_matrix(const ProblemData& d) {
  const std::size_t nh = d.H.dim, nv = d.S.dim_v, nr = d.S.dim_r();
  const std::size_t n_in = nh * nv * nh, n_out = nv * nh;
  Rows m(n_out, zeros(d.H.field, n_in));
  auto lam0 = ParameterTriple::zero(d).lambda;
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t h2 = 0; h2 < nh; ++h2) {
        AlphaTilde at(nr, std::vector<Rows>(nh, Rows(nv, d.H.zero())));
        at[0][h][v][h2] = Scalar::one(d.H.field);
        auto n = normalize_alpha(d, at, std::vector<Vec>(nr, d.H.zero()), lam0);
        for (std::size_t w = 0; w < nv; ++w)
          for (std::size_t b = 0; b < nh; ++b) m[w * nh + b][(h * nv + v) * nh + h2] = n.alpha[0][w][b];
      }
  return m;
}

void criterion7(Verdict& v) {
  Field F = Field::prime(7);
  Rng rng(2024);
  int total = 0, pbw_count = 0;
  for (const auto& fx : basic(F)) {
    const auto& d = fx.d;
    EvalContext ctx(d);
    const std::size_t nh = d.H.dim, nv = d.S.dim_v, nr = d.S.dim_r();
    Rows kernel = nullspace(F, gamma_matrix(d), nh * nv * nh);
    Rows lifted = pbw::testing::linear_solution_space(ctx, {1, 3, 6});
    for (int it = 0; it < 20; ++it) {
      ParameterTriple base = it % 2 ? pbw::testing::random_triple(d, rng)
                                    : pbw::testing::sample_space(ctx, lifted, rng, false);
      AlphaTilde at(nr, std::vector<Rows>(nh, Rows(nv, d.H.zero())));
      std::vector<Vec> bt = base.beta;
      if (it % 2) {
        for (auto& a : at)
          for (auto& b : a)
            for (auto& c : b)
              for (auto& s : c) s = pbw::testing::random_scalar(F, rng);
      } else {
        // α̃ = α on the 1_H slot plus a random element of ker γ, so γ(α̃) = α;
        // β̃ absorbs the λ∘γ' correction, β = β̃ + λγ'(α̃).
        auto sb = solve_beta(ctx, base);
        if (auto* s = std::get_if<BetaSolutions>(&sb)) {
          Vec c;
          for (std::size_t i = 0; i < s->kernel.size(); ++i) c.push_back(pbw::testing::random_scalar(F, rng));
          base.beta = s->member(c);
        }
        const std::size_t u = d.H.unit_index();
        for (std::size_t k = 0; k < nr; ++k) {
          at[k][u] = base.alpha[k];
          for (const auto& kv : kernel) {
            Scalar c = pbw::testing::random_scalar(F, rng);
            for (std::size_t h = 0; h < nh; ++h)
              for (std::size_t w = 0; w < nv; ++w)
                for (std::size_t h2 = 0; h2 < nh; ++h2) at[k][h][w][h2] += c * kv[(h * nv + w) * nh + h2];
          }
        }
        auto shift = normalize_alpha(d, at, std::vector<Vec>(nr, d.H.zero()), base.lambda);
        for (std::size_t k = 0; k < nr; ++k) bt[k] = base.beta[k] - shift.beta[k];
      }
      auto n = normalize_alpha(d, at, bt, base.lambda);
      ParameterTriple q{base.lambda, n.alpha, n.beta};
      v.require(validate_params(d, q).ok(), fx.name + ": normalized triple invalid");
      auto pres = presentation(d, base.lambda, at, bt);
      auto raw = pbw_oracle(d, pres, 3), norm = pbw_oracle(d, q, 3);
      bool verdict = check_pbw(ctx, q).holds();
      v.require(raw.dims == norm.dims, fx.name + ": homogenized dims differ");
      v.require(raw.pbw == norm.pbw && norm.pbw == verdict, fx.name + ": verdicts differ");
      ++total;
      if (verdict) ++pbw_count;
    }
  }
  v.require(total >= 50, "fewer than 50 samples");
  v.info = std::to_string(total) + " α̃ (" + std::to_string(pbw_count) + " PBW)";
}

void criterion8(Verdict& v) {
  Field Q = Field::rationals();
  auto d = z2_sign_poly(Q, 2);
  EvalContext ctx(d);
  auto res = solve_beta(ctx, ParameterTriple::zero(d));
  auto* s = std::get_if<BetaSolutions>(&res);
  v.require(s != nullptr, "no solutions on the sign action");
  std::size_t tried = 0;
  if (s) {
    std::vector<Vec> choices{zeros(Q, s->kernel.size())};
    for (std::size_t i = 0; i < s->kernel.size(); ++i) choices.push_back(unit_vector(Q, s->kernel.size(), i));
    Rng rng(8);
    for (int it = 0; it < 10; ++it) {
      Vec c;
      for (std::size_t i = 0; i < s->kernel.size(); ++i) c.push_back(pbw::testing::random_scalar(Q, rng));
      choices.push_back(c);
    }
    for (const auto& c : choices) {
      auto p = ParameterTriple::zero(d);
      p.beta = s->member(c);
      v.require(check_pbw(ctx, p).holds(), "returned β is not PBW");
      ++tried;
    }
  }
  // Every λ satisfies (1) on the sign action, so the diag action provides the violation.
  auto diag = z2_diag_kxy(Q);
  EvalContext cd(diag);
  auto p = ParameterTriple::zero(diag);
  p.lambda[1][0] = diag.H.basis(0);
  auto nl = solve_beta(cd, p);
  v.require(std::holds_alternative<NoLift>(nl) && std::get<NoLift>(nl).condition == 1,
            "λ violating (1) does not give NoLift(1)");
  v.info = "solution space of dim " + std::to_string(s ? s->kernel.size() : 0) + ", " + std::to_string(tried) +
           " members round-tripped; diag λ(g⊗x)=1 gives NoLift(1)";
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int n, double limit, const std::function<void(Verdict&)>& body) {
    Verdict v;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(v);
    } catch (const std::exception& e) {
      v.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit) v.problems.push_back("took " + std::to_string(secs) + " s");
    bool ok = v.problems.empty();
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << " (" << secs << " s, limit " << limit << " s)";
    if (!v.info.empty()) std::cout << ": " << v.info;
    for (const auto& p : v.problems) std::cout << "\n    " << p;
    std::cout << std::endl;
  };

  report(1, 1, criterion1);
  std::vector<double> per;
  report(2, 30, [&](Verdict& v) {
    criterion2(v, per);
    std::ostringstream os;
    for (std::size_t i = 0; i < per.size(); ++i) {
      os << (i ? ", " : "per fixture ") << per[i] << " s";
      if (per[i] > 10) v.problems.push_back("fixture " + std::to_string(i) + " over 10 s");
    }
    v.info = os.str();
  });
  report(3, 30, criterion3);
  report(4, 30, criterion4);
  report(5, 300, criterion5);
  report(6, 1, criterion6);
  report(7, 120, criterion7);
  report(8, 60, criterion8);
  return failures == 0 ? 0 : 1;
}
