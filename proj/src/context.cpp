#include "pbw/context.hpp"

#include "pbw/errors.hpp"

namespace pbw {

EvalContext::EvalContext(const ProblemData& d, std::size_t cutoff)
    : d_(&d), A_(d, cutoff), hbar_(d.H) {
  const Field& f = field();
  const std::size_t v = nv();
  rco_ = Coordinatizer(f, v * v, d.S.relation_basis);
  k3_ = koszul_term(d.S, 3).basis();
  Rows left_basis, right_basis;
  for (std::size_t k = 0; k < nr(); ++k)
    for (std::size_t u = 0; u < v; ++u) left_basis.push_back(tensor_vec(relation(k), vb(u)));
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t k = 0; k < nr(); ++k) right_basis.push_back(tensor_vec(vb(a), relation(k)));
  if (!k3_.empty()) {
    Coordinatizer lc(f, v * v * v, left_basis), rc(f, v * v * v, right_basis);
    for (const auto& xi : k3_) {
      auto l = lc.coords(xi);
      auto r = rc.coords(xi);
      if (!l || !r) throw std::logic_error("K̃_3 vector outside R⊗V or V⊗R");
      Rows lm(nr(), zeros(f, v)), rm(v, zeros(f, nr()));
      for (std::size_t k = 0; k < nr(); ++k)
        for (std::size_t u = 0; u < v; ++u) lm[k][u] = (*l)[k * v + u];
      for (std::size_t a = 0; a < v; ++a)
        for (std::size_t k = 0; k < nr(); ++k) rm[a][k] = (*r)[a * nr() + k];
      k3_left_.push_back(std::move(lm));
      k3_right_.push_back(std::move(rm));
    }
  }
}

Vec EvalContext::r_coords_or_throw(const Vec& vv) const {
  auto c = rco_.coords(vv);
  if (!c) throw std::logic_error("element expected in R lies outside R (corrupted action data?)");
  return *c;
}

Vec EvalContext::lambda_L(const ParameterTriple& p, const HopfAlgebraData& H, const Vec& h,
                          const Vec& v) {
  Vec out = H.zero();
  for (std::size_t b = 0; b < H.dim; ++b) {
    if (h[b].is_zero()) continue;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) axpy(out, h[b] * v[i], p.lambda[b][i]);
  }
  return out;
}

Rows EvalContext::tau_hv(const Vec& h, const Vec& v) const {
  HSTensor t(nh(), zeros(field(), nv()));
  for (std::size_t b = 0; b < nh(); ++b)
    if (!h[b].is_zero()) axpy(t[b], h[b], v);
  return A_.twist(1, t);
}

Rows EvalContext::tau_inv_vh(const Vec& v, const Vec& h) const {
  SHTensor t(nv(), zeros(field(), nh()));
  for (std::size_t i = 0; i < nv(); ++i)
    if (!v[i].is_zero()) axpy(t[i], v[i], h);
  return A_.untwist(1, t);
}

Vec EvalContext::lambda_R(const ParameterTriple& p, const Vec& v, const Vec& h) const {
  Rows hv = tau_inv_vh(v, h);  // [h][v]
  Vec out = H().zero();
  for (std::size_t b = 0; b < nh(); ++b)
    if (!is_zero(hv[b])) axpy(out, -Scalar::one(field()), lambda_L(p, H(), hb(b), hv[b]));
  return out;
}

Rows EvalContext::alpha_of(const ParameterTriple& p, const Vec& rc) const {
  Rows out(nv(), H().zero());
  for (std::size_t k = 0; k < nr(); ++k) {
    if (rc[k].is_zero()) continue;
    for (std::size_t v = 0; v < nv(); ++v) axpy(out[v], rc[k], p.alpha[k][v]);
  }
  return out;
}

Vec EvalContext::beta_of(const ParameterTriple& p, const Vec& rc) const {
  Vec out = H().zero();
  for (std::size_t k = 0; k < nr(); ++k) axpy(out, rc[k], p.beta[k]);
  return out;
}

Rows EvalContext::transport(const Vec& h, const Vec& r) const {
  const std::size_t v = nv();
  // accumulate V⊗V⊗H as [h'] -> V⊗V vector
  Rows acc(nh(), zeros(field(), v * v));
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = 0; b < v; ++b) {
      const Scalar& c = r[a * v + b];
      if (c.is_zero()) continue;
      // (τ⊗1)(h⊗e_a⊗e_b): Σ ^{h1}e_a ⊗ h2 ⊗ e_b
      Rows t1 = tau_hv(h, vb(a));  // [v][h]
      for (std::size_t x = 0; x < v; ++x)
        for (std::size_t m = 0; m < nh(); ++m) {
          if (t1[x][m].is_zero()) continue;
          Rows t2 = tau_hv(hb(m), vb(b));  // [w][h']
          for (std::size_t w = 0; w < v; ++w)
            for (std::size_t hp = 0; hp < nh(); ++hp)
              if (!t2[w][hp].is_zero()) acc[hp][x * v + w] += c * t1[x][m] * t2[w][hp];
        }
    }
  Rows out(nr(), zeros(field(), nh()));
  for (std::size_t hp = 0; hp < nh(); ++hp) {
    if (is_zero(acc[hp])) continue;
    Vec rc = r_coords_or_throw(acc[hp]);
    for (std::size_t k = 0; k < nr(); ++k) out[k][hp] = rc[k];
  }
  return out;
}

Rows EvalContext::transport_inv(const Vec& r, const Vec& h) const {
  const std::size_t v = nv();
  Rows acc(nh(), zeros(field(), v * v));  // [h''] -> V⊗V
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = 0; b < v; ++b) {
      const Scalar& c = r[a * v + b];
      if (c.is_zero()) continue;
      // (1⊗τ⁻¹): e_a ⊗ τ⁻¹(e_b⊗h) = Σ e_a ⊗ h' ⊗ w
      Rows t1 = tau_inv_vh(vb(b), h);  // [h'][w]
      for (std::size_t m = 0; m < nh(); ++m) {
        if (is_zero(t1[m])) continue;
        // (τ⁻¹⊗1): τ⁻¹(e_a⊗b_m) ⊗ w
        Rows t2 = tau_inv_vh(vb(a), hb(m));  // [h''][x]
        for (std::size_t hh = 0; hh < nh(); ++hh)
          for (std::size_t x = 0; x < v; ++x) {
            if (t2[hh][x].is_zero()) continue;
            for (std::size_t w = 0; w < v; ++w)
              if (!t1[m][w].is_zero()) acc[hh][x * v + w] += c * t2[hh][x] * t1[m][w];
          }
      }
    }
  Rows out(nh(), zeros(field(), nr()));
  for (std::size_t hh = 0; hh < nh(); ++hh)
    if (!is_zero(acc[hh])) out[hh] = r_coords_or_throw(acc[hh]);
  return out;
}

Rows EvalContext::k3_defect(const ParameterTriple& p, std::size_t i) const {
  const std::size_t h_n = nh(), v_n = nv(), r_n = nr();
  const Rows& a = k3_left_[i];
  const Rows& b = k3_right_[i];
  Rows y(h_n, zeros(field(), v_n * v_n));
  for (std::size_t k = 0; k < r_n; ++k)
    for (std::size_t u = 0; u < v_n; ++u) {
      if (a[k][u].is_zero()) continue;
      for (std::size_t w = 0; w < v_n; ++w)
        for (std::size_t h = 0; h < h_n; ++h) {
          const Scalar& al = p.alpha[k][w][h];
          if (al.is_zero()) continue;
          Rows t = tau_hv(hb(h), vb(u));
          for (std::size_t x = 0; x < v_n; ++x)
            for (std::size_t m = 0; m < h_n; ++m)
              if (!t[x][m].is_zero()) y[m][w * v_n + x] += a[k][u] * al * t[x][m];
        }
    }
  for (std::size_t v = 0; v < v_n; ++v)
    for (std::size_t k = 0; k < r_n; ++k) {
      if (b[v][k].is_zero()) continue;
      for (std::size_t w = 0; w < v_n; ++w)
        for (std::size_t h = 0; h < h_n; ++h)
          if (!p.alpha[k][w][h].is_zero()) y[h][v * v_n + w] -= b[v][k] * p.alpha[k][w][h];
    }
  return y;
}

Rows EvalContext::r_coords_by_h(const Rows& y) const {
  Rows Y(nr(), zeros(field(), nh()));
  for (std::size_t h = 0; h < nh(); ++h) {
    if (is_zero(y[h])) continue;
    Vec rc = r_coords_or_throw(y[h]);
    for (std::size_t k = 0; k < nr(); ++k) Y[k][h] = rc[k];
  }
  return Y;
}

}  // namespace pbw
