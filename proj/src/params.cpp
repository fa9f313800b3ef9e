#include "pbw/params.hpp"

#include <sstream>

#include "pbw/errors.hpp"

namespace pbw {

ParameterTriple ParameterTriple::zero(const ProblemData& d) {
  const Field& f = d.H.field;
  ParameterTriple p;
  p.lambda.assign(d.H.dim, std::vector<Vec>(d.S.dim_v, zeros(f, d.H.dim)));
  p.alpha.assign(d.S.dim_r(), Rows(d.S.dim_v, zeros(f, d.H.dim)));
  p.beta.assign(d.S.dim_r(), zeros(f, d.H.dim));
  return p;
}

ValidationReport validate_params(const ProblemData& d, const ParameterTriple& p) {
  const std::size_t nh = d.H.dim, nv = d.S.dim_v, nr = d.S.dim_r();
  ValidationReport rep;
  AxiomCheck ls{"lambda_shape", true, {}, {}};
  if (p.lambda.size() != nh) ls.passed = false;
  for (std::size_t h = 0; h < p.lambda.size() && ls.passed; ++h) {
    if (p.lambda[h].size() != nv) ls.passed = false, ls.witness = {h};
    for (const auto& x : p.lambda[h])
      if (x.size() != nh) ls.passed = false, ls.witness = {h};
  }
  AxiomCheck as{"alpha_shape", true, {}, {}};
  if (p.alpha.size() != nr) as.passed = false;
  for (std::size_t k = 0; k < p.alpha.size() && as.passed; ++k) {
    if (p.alpha[k].size() != nv) as.passed = false, as.witness = {k};
    for (const auto& row : p.alpha[k])
      if (row.size() != nh) as.passed = false, as.witness = {k};
  }
  if (!as.passed) as.detail = "α must take values in V⊗H (dim_v × dim_h per relation)";
  AxiomCheck bs{"beta_shape", true, {}, {}};
  if (p.beta.size() != nr) bs.passed = false;
  for (std::size_t k = 0; k < p.beta.size() && bs.passed; ++k)
    if (p.beta[k].size() != nh) bs.passed = false, bs.witness = {k};
  rep.checks = {ls, as, bs};
  AxiomCheck lu{"lambda_vanishes_on_unit", true, {}, {}};
  if (ls.passed) {
    for (std::size_t v = 0; v < nv && lu.passed; ++v) {
      Vec acc = d.H.zero();
      for (std::size_t h = 0; h < nh; ++h) axpy(acc, d.H.unit[h], p.lambda[h][v]);
      if (!is_zero(acc)) {
        lu.passed = false;
        lu.witness = {v};
        lu.detail = "λ_L(1_H ⊗ v) ≠ 0";
      }
    }
  } else {
    lu.passed = false;
    lu.detail = "skipped: λ has the wrong shape";
  }
  rep.checks.push_back(lu);
  return rep;
}

NormalizedAlpha normalize_alpha(const ProblemData& d, const AlphaTilde& at,
                                const std::vector<Vec>& beta_tilde,
                                const std::vector<std::vector<Vec>>& lambda) {
  const auto& H = d.H;
  const std::size_t nh = H.dim, nv = d.S.dim_v, nr = d.S.dim_r();
  if (at.size() != nr || beta_tilde.size() != nr) throw DimensionMismatch("normalize_alpha: relation count");
  NormalizedAlpha out;
  for (std::size_t k = 0; k < nr; ++k) {
    if (at[k].size() != nh) throw DimensionMismatch("normalize_alpha: α̃ left H leg");
    Rows a(nv, H.zero());
    Vec b = beta_tilde[k];
    for (std::size_t h = 0; h < nh; ++h) {
      if (at[k][h].size() != nv) throw DimensionMismatch("normalize_alpha: α̃ V leg");
      for (std::size_t v = 0; v < nv; ++v) {
        const Vec& right = at[k][h][v];
        if (right.size() != nh) throw DimensionMismatch("normalize_alpha: α̃ right H leg");
        if (is_zero(right)) continue;
        // γ part: Σ ^{h1}v ⊗ h2 h'
        for (const auto& ct : H.comult[h]) {
          Vec hv = H.mul(H.basis(ct.r), right);
          for (std::size_t w = 0; w < nv; ++w) {
            const Scalar& m = d.action.rho[ct.l][w][v];
            if (m.is_zero()) continue;
            axpy(a[w], ct.c * m, hv);
          }
        }
        // λ∘γ' part: λ_L(h⊗v) h'
        b = b + H.mul(lambda[h][v], right);
      }
    }
    out.alpha.push_back(std::move(a));
    out.beta.push_back(std::move(b));
  }
  return out;
}

void gadd(GElement& e, const GWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = e.find(w);
  if (it == e.end()) {
    e.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) e.erase(it);
}

std::string gelement_to_string(const ProblemData& d, const GElement& e) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (std::size_t i = 1; i < w.size(); ++i) {
      bool is_h = (i % 2) == 1;
      std::size_t x = w[i];
      if (is_h)
        os << (i == 1 ? " " : "⊗") << (x < d.H.labels.size() ? d.H.labels[x] : "b" + std::to_string(x));
      else
        os << "⊗" << (x < d.S.labels.size() ? d.S.labels[x] : "v" + std::to_string(x));
    }
    if (w[0]) os << " t^" << w[0];
  }
  if (first) os << "0";
  return os.str();
}

DeformedRelations homogenize(const ProblemData& d, const ParameterTriple& p) {
  const auto& H = d.H;
  const std::size_t nh = H.dim, nv = d.S.dim_v;
  DeformedRelations out;
  auto word = [](std::uint32_t t, std::initializer_list<std::uint32_t> xs) {
    GWord w{t};
    w.insert(w.end(), xs);
    return w;
  };
  // P'_t : h̄⊗v⊗1 − 1⊗τ(h̄⊗v) − λ_L(h̄⊗v) t
  for (std::size_t j = 0; j < H.hbar_basis.size(); ++j) {
    const Vec& hb = H.hbar_basis[j];
    for (std::size_t v = 0; v < nv; ++v) {
      GElement e, et;
      Vec lam = H.zero();
      for (std::size_t b = 0; b < nh; ++b) {
        if (hb[b].is_zero()) continue;
        for (std::size_t u = 0; u < nh; ++u) {
          if (H.unit[u].is_zero()) continue;
          GWord w = word(0, {std::uint32_t(b), std::uint32_t(v), std::uint32_t(u)});
          gadd(e, w, hb[b] * H.unit[u]);
        }
        for (const auto& ct : H.comult[b])
          for (std::size_t w2 = 0; w2 < nv; ++w2) {
            const Scalar& m = d.action.rho[ct.l][w2][v];
            if (m.is_zero()) continue;
            for (std::size_t u = 0; u < nh; ++u) {
              if (H.unit[u].is_zero()) continue;
              gadd(e, word(0, {std::uint32_t(u), std::uint32_t(w2), std::uint32_t(ct.r)}),
                   -(hb[b] * ct.c * m * H.unit[u]));
            }
          }
        axpy(lam, hb[b], p.lambda[b][v]);
      }
      et = e;
      for (std::size_t h = 0; h < nh; ++h) {
        gadd(e, word(0, {std::uint32_t(h)}), -lam[h]);
        gadd(et, word(1, {std::uint32_t(h)}), -lam[h]);
      }
      out.Pp.push_back(std::move(e));
      out.Ppt.push_back(std::move(et));
      out.pp_index.emplace_back(j, v);
    }
  }
  // P_t : r − α(r) t − β(r) t²
  for (std::size_t k = 0; k < d.S.dim_r(); ++k) {
    const Vec& r = d.S.relation_basis[k];
    GElement e, et;
    for (std::size_t a = 0; a < nv; ++a)
      for (std::size_t b = 0; b < nv; ++b) {
        const Scalar& c = r[a * nv + b];
        if (c.is_zero()) continue;
        for (std::size_t u0 = 0; u0 < nh; ++u0)
          for (std::size_t u1 = 0; u1 < nh; ++u1)
            for (std::size_t u2 = 0; u2 < nh; ++u2) {
              Scalar cu = c * H.unit[u0] * H.unit[u1] * H.unit[u2];
              if (cu.is_zero()) continue;
              GWord w = word(0, {std::uint32_t(u0), std::uint32_t(a), std::uint32_t(u1),
                                 std::uint32_t(b), std::uint32_t(u2)});
              gadd(e, w, cu);
              gadd(et, w, cu);
            }
      }
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t h = 0; h < nh; ++h) {
        const Scalar& c = p.alpha[k][v][h];
        if (c.is_zero()) continue;
        for (std::size_t u = 0; u < nh; ++u) {
          if (H.unit[u].is_zero()) continue;
          gadd(e, word(0, {std::uint32_t(u), std::uint32_t(v), std::uint32_t(h)}), -(c * H.unit[u]));
          gadd(et, word(1, {std::uint32_t(u), std::uint32_t(v), std::uint32_t(h)}), -(c * H.unit[u]));
        }
      }
    for (std::size_t h = 0; h < nh; ++h) {
      gadd(e, word(0, {std::uint32_t(h)}), -p.beta[k][h]);
      gadd(et, word(2, {std::uint32_t(h)}), -p.beta[k][h]);
    }
    out.P.push_back(std::move(e));
    out.Pt.push_back(std::move(et));
  }
  return out;
}

DeformedRelations homogenize_tilde(const ProblemData& d, const std::vector<std::vector<Vec>>& lambda,
                                   const AlphaTilde& at, const std::vector<Vec>& beta_tilde) {
  const std::size_t nh = d.H.dim, nv = d.S.dim_v, nr = d.S.dim_r();
  if (at.size() != nr || beta_tilde.size() != nr) throw DimensionMismatch("homogenize_tilde: relation count");
  ParameterTriple p = ParameterTriple::zero(d);
  p.lambda = lambda;
  p.beta = beta_tilde;
  DeformedRelations out = homogenize(d, p);
  for (std::size_t k = 0; k < nr; ++k)
    for (std::size_t h = 0; h < nh; ++h) {
      if (at[k].size() != nh || at[k][h].size() != nv) throw DimensionMismatch("homogenize_tilde: α̃ shape");
      for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t h2 = 0; h2 < nh; ++h2) {
          const Scalar& c = at[k][h][v].at(h2);
          if (c.is_zero()) continue;
          gadd(out.P[k], {0, std::uint32_t(h), std::uint32_t(v), std::uint32_t(h2)}, -c);
          gadd(out.Pt[k], {1, std::uint32_t(h), std::uint32_t(v), std::uint32_t(h2)}, -c);
        }
    }
  return out;
}

GElement set_t_zero(const GElement& e) {
  GElement out;
  for (const auto& [w, c] : e)
    if (w[0] == 0) out.emplace(w, c);
  return out;
}

}  // namespace pbw
