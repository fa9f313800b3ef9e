#include "pbw/conditions.hpp"

#include "pbw/errors.hpp"

namespace pbw {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Left: return "left";
    case Mode::Right: return "right";
    case Mode::Polynomial: return "poly";
  }
  return "?";
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Undefined: return "undefined";
  }
  return "?";
}

bool ConditionReport::holds() const {
  for (const auto& r : results)
    if (r.status != Status::Holds) return false;
  return true;
}

std::vector<Vec> BetaSolutions::member(const Vec& c) const {
  std::vector<Vec> out = particular;
  for (std::size_t i = 0; i < kernel.size() && i < c.size(); ++i)
    for (std::size_t k = 0; k < out.size(); ++k) axpy(out[k], c[i], kernel[i][k]);
  return out;
}

Rows twisted_relation_transport(const EvalContext& ctx, const Vec& h, const Vec& r) {
  return ctx.transport(h, r);
}

namespace {

class Evaluator {
 public:
  Evaluator(const EvalContext& c, const ParameterTriple& p) : c_(c), p_(p), A_(c.A()) {}

  // --- element builders in truncated A
  SmashElement E(const Vec& h) const { return A_.from_h(h); }
  SmashElement V(const Vec& v) const { return A_.from_v(v); }
  SmashElement VH(const Rows& vh) const { return A_.from_sh(1, vh); }
  SmashElement HV(const Rows& hv) const { return A_.from_sh(1, A_.twist(1, hv)); }
  SmashElement M(const SmashElement& a, const SmashElement& b) const { return A_.multiply(a, b); }

  Vec lam(const Vec& h, const Vec& v) const { return EvalContext::lambda_L(p_, c_.H(), h, v); }
  Vec lamR(const Vec& v, const Vec& h) const { return c_.lambda_R(p_, v, h); }
  Vec hb(std::size_t i) const { return c_.hb(i); }
  Vec vb(std::size_t i) const { return c_.vb(i); }
  Vec hm(const Vec& a, const Vec& b) const { return c_.hmul(a, b); }
  Scalar one() const { return Scalar::one(c_.field()); }

  std::string hl(std::size_t i) const { return c_.H().labels.at(i); }
  std::string vl(std::size_t i) const { return c_.S().labels.at(i); }
  std::string rl(std::size_t k) const { return "r" + std::to_string(k); }

  // --- left mode -----------------------------------------------------------

  void cond1_left(const ResidualSink& sink) const {
    const std::size_t nh = c_.nh(), nv = c_.nv();
    for (std::size_t h = 0; h < nh; ++h)
      for (std::size_t h2 = 0; h2 < nh; ++h2)
        for (std::size_t v = 0; v < nv; ++v) {
          Vec e = hm(hb(h), lam(hb(h2), vb(v))) - lam(hm(hb(h), hb(h2)), vb(v));
          Rows t = c_.tau_hv(hb(h2), vb(v));
          for (std::size_t x = 0; x < nv; ++x)
            for (std::size_t m = 0; m < nh; ++m)
              if (!t[x][m].is_zero()) axpy(e, t[x][m], hm(lam(hb(h), vb(x)), hb(m)));
          if (!sink({{h, h2, v}, hl(h) + "⊗" + hl(h2) + "⊗" + vl(v)}, E(e))) return;
        }
  }

  // (2) and (3) share the domain H⊗R.
  void cond23_left(int k, const ResidualSink& sink) const {
    const std::size_t nh = c_.nh(), nv = c_.nv(), nr = c_.nr();
    for (std::size_t h = 0; h < nh; ++h)
      for (std::size_t q = 0; q < nr; ++q) {
        const Vec& r = c_.relation(q);
        Rows T = c_.transport(hb(h), r);
        SmashElement res = A_.zero();
        if (k == 3) {
          res = M(E(hb(h)), VH(p_.alpha[q]));
          for (std::size_t k2 = 0; k2 < nr; ++k2)
            for (std::size_t m = 0; m < nh; ++m)
              if (!T[k2][m].is_zero()) res -= T[k2][m] * M(VH(p_.alpha[k2]), E(hb(m)));
          for (std::size_t a = 0; a < nv; ++a)
            for (std::size_t b = 0; b < nv; ++b) {
              const Scalar& cab = r[a * nv + b];
              if (cab.is_zero()) continue;
              res -= cab * M(E(lam(hb(h), vb(a))), V(vb(b)));
              Rows t = c_.tau_hv(hb(h), vb(a));
              for (std::size_t x = 0; x < nv; ++x)
                for (std::size_t m = 0; m < nh; ++m)
                  if (!t[x][m].is_zero())
                    res -= (cab * t[x][m]) * M(V(vb(x)), E(lam(hb(m), vb(b))));
            }
        } else {
          Vec e = hm(hb(h), p_.beta[q]);
          for (std::size_t v = 0; v < nv; ++v)
            for (std::size_t m = 0; m < nh; ++m)
              if (!p_.alpha[q][v][m].is_zero()) axpy(e, p_.alpha[q][v][m], hm(lam(hb(h), vb(v)), hb(m)));
          for (std::size_t k2 = 0; k2 < nr; ++k2)
            for (std::size_t m = 0; m < nh; ++m)
              if (!T[k2][m].is_zero()) axpy(e, -T[k2][m], hm(p_.beta[k2], hb(m)));
          for (std::size_t a = 0; a < nv; ++a)
            for (std::size_t b = 0; b < nv; ++b) {
              const Scalar& cab = r[a * nv + b];
              if (!cab.is_zero()) axpy(e, -cab, lam(lam(hb(h), vb(a)), vb(b)));
            }
          res = E(e);
        }
        if (!sink({{h, q}, hl(h) + "⊗" + rl(q)}, res)) return;
      }
  }

  SmashElement res6_left(std::size_t i) const {
    const std::size_t nv = c_.nv(), nr = c_.nr();
    const Rows& a = c_.k3_left()[i];
    const Rows& b = c_.k3_right()[i];
    SmashElement res = A_.zero();
    for (std::size_t k = 0; k < nr; ++k)
      for (std::size_t u = 0; u < nv; ++u)
        if (!a[k][u].is_zero()) res += a[k][u] * M(VH(p_.alpha[k]), V(vb(u)));
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t k = 0; k < nr; ++k)
        if (!b[v][k].is_zero()) res -= b[v][k] * M(V(vb(v)), VH(p_.alpha[k]));
    return res;
  }

  SmashElement res45_left(int which, std::size_t i) const {
    const std::size_t nh = c_.nh(), nv = c_.nv(), nr = c_.nr();
    const Rows& a = c_.k3_left()[i];
    const Rows& b = c_.k3_right()[i];
    Rows Y = c_.r_coords_by_h(c_.k3_defect(p_, i));
    if (which == 4) {
      SmashElement res = A_.zero();
      for (std::size_t k = 0; k < nr; ++k)
        for (std::size_t h = 0; h < nh; ++h)
          if (!Y[k][h].is_zero()) res += Y[k][h] * M(VH(p_.alpha[k]), E(hb(h)));
      for (std::size_t k = 0; k < nr; ++k)
        for (std::size_t u = 0; u < nv; ++u) {
          if (a[k][u].is_zero()) continue;
          for (std::size_t w = 0; w < nv; ++w)
            for (std::size_t h = 0; h < nh; ++h)
              if (!p_.alpha[k][w][h].is_zero())
                res += (a[k][u] * p_.alpha[k][w][h]) * M(V(vb(w)), E(lam(hb(h), vb(u))));
          res += a[k][u] * M(E(p_.beta[k]), V(vb(u)));
        }
      for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t k = 0; k < nr; ++k)
          if (!b[v][k].is_zero()) res -= b[v][k] * M(V(vb(v)), E(p_.beta[k]));
      return res;
    }
    Vec e = c_.H().zero();
    for (std::size_t k = 0; k < nr; ++k)
      for (std::size_t h = 0; h < nh; ++h)
        if (!Y[k][h].is_zero()) axpy(e, Y[k][h], hm(p_.beta[k], hb(h)));
    for (std::size_t k = 0; k < nr; ++k)
      for (std::size_t u = 0; u < nv; ++u)
        if (!a[k][u].is_zero()) axpy(e, a[k][u], lam(p_.beta[k], vb(u)));
    return E(e);
  }

  // --- right mode: everything in the H⊗S normal form ------------------------

  void prep_right() {
    if (prepared_) return;
    const std::size_t nh = c_.nh(), nv = c_.nv(), nr = c_.nr();
    for (std::size_t k = 0; k < nr; ++k) {
      Rows ap(nh, zeros(c_.field(), nv));
      Vec cc = p_.beta[k];
      for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t h = 0; h < nh; ++h) {
          const Scalar& al = p_.alpha[k][v][h];
          if (al.is_zero()) continue;
          Rows t = c_.tau_inv_vh(vb(v), hb(h));
          for (std::size_t m = 0; m < nh; ++m) axpy(ap[m], al, t[m]);
          axpy(cc, al, lamR(vb(v), hb(h)));
        }
      alphaP_.push_back(std::move(ap));
      cR_.push_back(std::move(cc));
    }
    prepared_ = true;
  }

  void cond1_right(const ResidualSink& sink) const {
    const std::size_t nh = c_.nh(), nv = c_.nv();
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t h = 0; h < nh; ++h)
        for (std::size_t h2 = 0; h2 < nh; ++h2) {
          Vec e = hm(lamR(vb(v), hb(h)), hb(h2)) - lamR(vb(v), hm(hb(h), hb(h2)));
          Rows t = c_.tau_inv_vh(vb(v), hb(h));
          for (std::size_t m = 0; m < nh; ++m)
            for (std::size_t w = 0; w < nv; ++w)
              if (!t[m][w].is_zero()) axpy(e, t[m][w], hm(hb(m), lamR(vb(w), hb(h2))));
          if (!sink({{v, h, h2}, vl(v) + "⊗" + hl(h) + "⊗" + hl(h2)}, E(e))) return;
        }
  }

  void cond23_right(int k, const ResidualSink& sink) const {
    const std::size_t nh = c_.nh(), nv = c_.nv(), nr = c_.nr();
    for (std::size_t q = 0; q < nr; ++q)
      for (std::size_t h = 0; h < nh; ++h) {
        const Vec& r = c_.relation(q);
        Rows Ti = c_.transport_inv(r, hb(h));  // [h''][k']
        SmashElement res = A_.zero();
        if (k == 3) {
          res = M(HV(alphaP_[q]), E(hb(h)));
          for (std::size_t m = 0; m < nh; ++m)
            for (std::size_t k2 = 0; k2 < nr; ++k2)
              if (!Ti[m][k2].is_zero()) res -= Ti[m][k2] * M(E(hb(m)), HV(alphaP_[k2]));
          for (std::size_t a = 0; a < nv; ++a)
            for (std::size_t b = 0; b < nv; ++b) {
              const Scalar& cab = r[a * nv + b];
              if (cab.is_zero()) continue;
              Rows t = c_.tau_inv_vh(vb(b), hb(h));
              for (std::size_t m = 0; m < nh; ++m)
                for (std::size_t w = 0; w < nv; ++w)
                  if (!t[m][w].is_zero())
                    res -= (cab * t[m][w]) * M(E(lamR(vb(a), hb(m))), V(vb(w)));
              res -= cab * M(V(vb(a)), E(lamR(vb(b), hb(h))));
            }
        } else {
          Vec e = hm(cR_[q], hb(h));
          for (std::size_t m = 0; m < nh; ++m)
            for (std::size_t w = 0; w < nv; ++w)
              if (!alphaP_[q][m][w].is_zero()) axpy(e, alphaP_[q][m][w], hm(hb(m), lamR(vb(w), hb(h))));
          for (std::size_t m = 0; m < nh; ++m)
            for (std::size_t k2 = 0; k2 < nr; ++k2)
              if (!Ti[m][k2].is_zero()) axpy(e, -Ti[m][k2], hm(hb(m), cR_[k2]));
          for (std::size_t a = 0; a < nv; ++a)
            for (std::size_t b = 0; b < nv; ++b) {
              const Scalar& cab = r[a * nv + b];
              if (!cab.is_zero()) axpy(e, -cab, lamR(vb(a), lamR(vb(b), hb(h))));
            }
          res = E(e);
        }
        if (!sink({{q, h}, rl(q) + "⊗" + hl(h)}, res)) return;
      }
  }

  // Degree-2 part of Σ a r_k u − Σ b v r_k in the H⊗S form: [h] -> V⊗V.
  Rows y_right(std::size_t i) const {
    const std::size_t nh = c_.nh(), nv = c_.nv(), nr = c_.nr();
    const Rows& a = c_.k3_left()[i];
    const Rows& b = c_.k3_right()[i];
    Rows y(nh, zeros(c_.field(), nv * nv));
    for (std::size_t k = 0; k < nr; ++k)
      for (std::size_t u = 0; u < nv; ++u) {
        if (a[k][u].is_zero()) continue;
        for (std::size_t h = 0; h < nh; ++h)
          for (std::size_t w = 0; w < nv; ++w)
            if (!alphaP_[k][h][w].is_zero()) y[h][w * nv + u] += a[k][u] * alphaP_[k][h][w];
      }
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t k = 0; k < nr; ++k) {
        if (b[v][k].is_zero()) continue;
        for (std::size_t h = 0; h < nh; ++h)
          for (std::size_t w = 0; w < nv; ++w) {
            const Scalar& ap = alphaP_[k][h][w];
            if (ap.is_zero()) continue;
            Rows t = c_.tau_inv_vh(vb(v), hb(h));
            for (std::size_t m = 0; m < nh; ++m)
              for (std::size_t x = 0; x < nv; ++x)
                if (!t[m][x].is_zero()) y[m][x * nv + w] -= b[v][k] * ap * t[m][x];
          }
      }
    return y;
  }

  SmashElement res6_right(std::size_t i) const {
    Rows y = y_right(i);
    SmashElement res = A_.zero();
    for (std::size_t h = 0; h < c_.nh(); ++h)
      if (!is_zero(y[h])) res += M(E(hb(h)), A_.from_s(2, normal_form(c_.S(), y[h], 2)));
    return res;
  }

  SmashElement res45_right(int which, std::size_t i) const {
    const std::size_t nh = c_.nh(), nv = c_.nv(), nr = c_.nr();
    const Rows& a = c_.k3_left()[i];
    const Rows& b = c_.k3_right()[i];
    Rows Y = c_.r_coords_by_h(y_right(i));  // [k][h]
    if (which == 4) {
      SmashElement res = A_.zero();
      for (std::size_t k = 0; k < nr; ++k)
        for (std::size_t h = 0; h < nh; ++h)
          if (!Y[k][h].is_zero()) res += Y[k][h] * M(E(hb(h)), HV(alphaP_[k]));
      for (std::size_t k = 0; k < nr; ++k)
        for (std::size_t u = 0; u < nv; ++u)
          if (!a[k][u].is_zero()) res += a[k][u] * M(E(cR_[k]), V(vb(u)));
      for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t k = 0; k < nr; ++k) {
          if (b[v][k].is_zero()) continue;
          for (std::size_t h = 0; h < nh; ++h)
            for (std::size_t w = 0; w < nv; ++w)
              if (!alphaP_[k][h][w].is_zero())
                res -= (b[v][k] * alphaP_[k][h][w]) * M(E(lamR(vb(v), hb(h))), V(vb(w)));
          res -= b[v][k] * M(V(vb(v)), E(cR_[k]));
        }
      return res;
    }
    Vec e = c_.H().zero();
    for (std::size_t k = 0; k < nr; ++k)
      for (std::size_t h = 0; h < nh; ++h)
        if (!Y[k][h].is_zero()) axpy(e, Y[k][h], hm(hb(h), cR_[k]));
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t k = 0; k < nr; ++k)
        if (!b[v][k].is_zero()) axpy(e, -b[v][k], lamR(vb(v), cR_[k]));
    return E(e);
  }

  // --- polynomial mode: alternating forms on V -----------------------------

  void prep_poly() {
    if (poly_ready_) return;
    if (!is_symmetric_algebra(c_.S())) throw NotSymmetricAlgebra();
    const std::size_t nv = c_.nv(), nh = c_.nh();
    const Field& f = c_.field();
    Scalar half = Scalar::from_int(f, 2).inverse();
    af_.assign(nv, std::vector<Rows>(nv, Rows(nv, zeros(f, nh))));
    bf_.assign(nv, std::vector<Vec>(nv, zeros(f, nh)));
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = i + 1; j < nv; ++j) {
        Vec r = zeros(f, nv * nv);
        r[i * nv + j] = one();
        r[j * nv + i] = -one();
        Vec rc = c_.r_coords_or_throw(r);
        Rows al = c_.alpha_of(p_, rc);
        Vec be = c_.beta_of(p_, rc);
        for (std::size_t v = 0; v < nv; ++v) {
          af_[i][j][v] = scaled(al[v], half);
          af_[j][i][v] = scaled(al[v], -half);
        }
        bf_[i][j] = scaled(be, half);
        bf_[j][i] = scaled(be, -half);
      }
    poly_ready_ = true;
  }
  // ⟨a,b⟩ for the α and β forms.
  Rows aform(const Vec& x, const Vec& y) const {
    const std::size_t nv = c_.nv();
    Rows out(nv, c_.H().zero());
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nv; ++j) {
        if (i == j || x[i].is_zero() || y[j].is_zero()) continue;
        for (std::size_t v = 0; v < nv; ++v) axpy(out[v], x[i] * y[j], af_[i][j][v]);
      }
    return out;
  }
  Vec bform(const Vec& x, const Vec& y) const {
    const std::size_t nv = c_.nv();
    Vec out = c_.H().zero();
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nv; ++j)
        if (i != j && !x[i].is_zero() && !y[j].is_zero()) axpy(out, x[i] * y[j], bf_[i][j]);
    return out;
  }
  Rows alpha2(std::size_t i, std::size_t j) const {  // α(v_i, v_j) = 2⟨v_i,v_j⟩
    Rows out = af_[i][j];
    for (auto& row : out) row = row + row;
    return out;
  }
  Vec beta2(std::size_t i, std::size_t j) const { return bf_[i][j] + bf_[i][j]; }
  Vec act(std::size_t h, const Vec& v) const { return act_on_v(c_.data(), hb(h), v); }

  void cond23_poly(int k, const ResidualSink& sink) const {
    const std::size_t nh = c_.nh(), nv = c_.nv();
    for (std::size_t h = 0; h < nh; ++h) {
      TensorElement d2 = sweedler_iterate(c_.H(), hb(h), 2);
      const auto& d1 = c_.H().comult[h];
      for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
          SmashElement res = A_.zero();
          if (k == 3) {
            res = M(E(hb(h)), VH(alpha2(i, j)));
            for (const auto& t : d2) {
              Rows f = aform(act(t.idx[0], vb(i)), act(t.idx[1], vb(j)));
              Rows g = aform(act(t.idx[0], vb(j)), act(t.idx[1], vb(i)));
              for (std::size_t v = 0; v < nv; ++v) f[v] = f[v] - g[v];
              res -= t.c * M(VH(f), E(hb(t.idx[2])));
            }
            res -= M(E(lam(hb(h), vb(i))), V(vb(j)));
            res += M(E(lam(hb(h), vb(j))), V(vb(i)));
            for (const auto& t : d1) {
              res -= t.c * M(V(act(t.l, vb(i))), E(lam(hb(t.r), vb(j))));
              res += t.c * M(V(act(t.l, vb(j))), E(lam(hb(t.r), vb(i))));
            }
          } else {
            Rows al = alpha2(i, j);
            Vec e = hm(hb(h), beta2(i, j));
            for (std::size_t v = 0; v < nv; ++v)
              for (std::size_t m = 0; m < nh; ++m)
                if (!al[v][m].is_zero()) axpy(e, al[v][m], hm(lam(hb(h), vb(v)), hb(m)));
            for (const auto& t : d2) {
              Vec f = bform(act(t.idx[0], vb(i)), act(t.idx[1], vb(j))) -
                      bform(act(t.idx[0], vb(j)), act(t.idx[1], vb(i)));
              axpy(e, -t.c, hm(f, hb(t.idx[2])));
            }
            e = e - lam(lam(hb(h), vb(i)), vb(j)) + lam(lam(hb(h), vb(j)), vb(i));
            res = E(e);
          }
          if (!sink({{h, i, j}, hl(h) + "⊗(" + vl(i) + "," + vl(j) + ")"}, res)) return;
        }
    }
  }

  // Triples i<j<l with the Alt₃ sum over (a,b,c) ∈ {(i,j,l),(j,l,i),(l,i,j)}.
  template <class F>
  void for_triples(F&& f) const {
    const std::size_t nv = c_.nv();
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = i + 1; j < nv; ++j)
        for (std::size_t l = j + 1; l < nv; ++l) {
          std::array<std::array<std::size_t, 3>, 3> cyc{{{i, j, l}, {j, l, i}, {l, i, j}}};
          if (!f(i, j, l, cyc)) return;
        }
  }

  Rows y_poly(const std::array<std::array<std::size_t, 3>, 3>& cyc) const {
    const std::size_t nh = c_.nh(), nv = c_.nv();
    Rows y(nh, zeros(c_.field(), nv * nv));
    for (const auto& [a, b, cc] : cyc) {
      Rows al = alpha2(a, b);
      for (std::size_t w = 0; w < nv; ++w)
        for (std::size_t h = 0; h < nh; ++h) {
          if (al[w][h].is_zero()) continue;
          Rows t = c_.tau_hv(hb(h), vb(cc));
          for (std::size_t x = 0; x < nv; ++x)
            for (std::size_t m = 0; m < nh; ++m)
              if (!t[x][m].is_zero()) y[m][w * nv + x] += al[w][h] * t[x][m];
          y[h][cc * nv + w] -= al[w][h];
        }
    }
    return y;
  }

  void cond456_poly(int k, const ResidualSink& sink) const {
    const std::size_t nh = c_.nh(), nv = c_.nv();
    for_triples([&](std::size_t i, std::size_t j, std::size_t l, const auto& cyc) {
      SmashElement res = A_.zero();
      if (k == 6) {
        for (const auto& [a, b, cc] : cyc) {
          res += M(VH(alpha2(a, b)), V(vb(cc)));
          res -= M(V(vb(cc)), VH(alpha2(a, b)));
        }
      } else {
        Rows y = y_poly(cyc);
        if (k == 4) {
          for (std::size_t h = 0; h < nh; ++h) {
            Rows ay(nv, c_.H().zero());
            for (std::size_t p = 0; p < nv; ++p)
              for (std::size_t q = 0; q < nv; ++q) {
                const Scalar& c = y[h][p * nv + q];
                if (c.is_zero() || p == q) continue;
                for (std::size_t v = 0; v < nv; ++v) axpy(ay[v], c, af_[p][q][v]);
              }
            res += M(VH(ay), E(hb(h)));
          }
          for (const auto& [a, b, cc] : cyc) {
            Rows al = alpha2(a, b);
            for (std::size_t w = 0; w < nv; ++w)
              for (std::size_t h = 0; h < nh; ++h)
                if (!al[w][h].is_zero()) res += al[w][h] * M(V(vb(w)), E(lam(hb(h), vb(cc))));
            res -= M(V(vb(cc)), E(beta2(a, b)));
            res += M(E(beta2(a, b)), V(vb(cc)));
          }
        } else {
          Vec e = c_.H().zero();
          for (std::size_t h = 0; h < nh; ++h)
            for (std::size_t p = 0; p < nv; ++p)
              for (std::size_t q = 0; q < nv; ++q) {
                const Scalar& c = y[h][p * nv + q];
                if (!c.is_zero() && p != q) axpy(e, c, hm(bf_[p][q], hb(h)));
              }
          for (const auto& [a, b, cc] : cyc) e = e + lam(beta2(a, b), vb(cc));
          res = E(e);
        }
      }
      return sink({{i, j, l}, "(" + vl(i) + "," + vl(j) + "," + vl(l) + ")"}, res);
    });
  }

  // --- dispatch --------------------------------------------------------------

  void scan(int k, Mode mode, const ResidualSink& sink) {
    if (k < 1 || k > 6) throw InputError("condition index must be 1..6");
    if (mode == Mode::Polynomial) {
      prep_poly();
      if (k == 1) return cond1_left(sink);
      if (k == 2 || k == 3) return cond23_poly(k, sink);
      if (k != 6) {
        bool ok6 = true;
        cond456_poly(6, [&](const Witness&, const SmashElement& r) { return ok6 = r.is_zero(); });
        if (!ok6) throw Condition456Undefined();
      }
      return cond456_poly(k, sink);
    }
    if (mode == Mode::Right) prep_right();
    const bool left = mode == Mode::Left;
    if (k == 1) return left ? cond1_left(sink) : cond1_right(sink);
    if (k == 2 || k == 3) return left ? cond23_left(k, sink) : cond23_right(k, sink);
    const std::size_t nk = c_.k3_basis().size();
    auto r6 = [&](std::size_t i) { return left ? res6_left(i) : res6_right(i); };
    if (k != 6)
      for (std::size_t i = 0; i < nk; ++i)
        if (!r6(i).is_zero()) throw Condition456Undefined();
    for (std::size_t i = 0; i < nk; ++i) {
      SmashElement r = k == 6 ? r6(i) : (left ? res45_left(k, i) : res45_right(k, i));
      if (!sink({{i}, "ξ" + std::to_string(i)}, r)) return;
    }
  }

 private:
  const EvalContext& c_;
  const ParameterTriple& p_;
  const SmashAlgebra& A_;
  bool prepared_ = false, poly_ready_ = false;
  std::vector<Rows> alphaP_;  // right normal form of α(r_k): [h][v]
  std::vector<Vec> cR_;       // degree-0 part of r_k in the right normal form
  std::vector<std::vector<Rows>> af_;
  std::vector<std::vector<Vec>> bf_;
};

ConditionResult run_one(Evaluator& ev, int k, Mode mode) {
  ConditionResult out;
  out.index = k;
  ev.scan(k, mode, [&](const Witness& w, const SmashElement& r) {
    ++out.inputs_checked;
    if (r.is_zero()) return true;
    out.status = Status::Fails;
    out.witness = w;
    out.residual = r;
    return false;
  });
  return out;
}

}  // namespace

void scan_condition(int k, const EvalContext& ctx, const ParameterTriple& p, Mode mode,
                    const ResidualSink& sink) {
  Evaluator ev(ctx, p);
  ev.scan(k, mode, sink);
}

ConditionResult check_condition(int k, const EvalContext& ctx, const ParameterTriple& p, Mode mode) {
  Evaluator ev(ctx, p);
  return run_one(ev, k, mode);
}

ConditionReport check_conditions(const EvalContext& ctx, const ParameterTriple& p, Mode mode) {
  Evaluator ev(ctx, p);
  ConditionReport rep;
  rep.mode = mode;
  for (int k : {1, 2, 3, 6}) rep.results[k - 1] = run_one(ev, k, mode);
  const bool six = rep.results[5].status == Status::Holds;
  for (int k : {4, 5}) {
    if (six) {
      rep.results[k - 1] = run_one(ev, k, mode);
    } else {
      rep.results[k - 1].index = k;
      rep.results[k - 1].status = Status::Undefined;
    }
  }
  return rep;
}

PBWReport check_pbw(const EvalContext& ctx, const ParameterTriple& p) {
  return PBWReport{check_conditions(ctx, p, Mode::Left), check_conditions(ctx, p, Mode::Right)};
}

ConditionReport check_polynomial_case(const EvalContext& ctx, const ParameterTriple& p) {
  return check_conditions(ctx, p, Mode::Polynomial);
}

namespace {

Vec residual_vector(const EvalContext& ctx, const ParameterTriple& p) {
  Vec out;
  Evaluator ev(ctx, p);
  for (int k : {2, 4, 5})
    ev.scan(k, Mode::Left, [&](const Witness&, const SmashElement& r) {
      out.insert(out.end(), r.coords.begin(), r.coords.end());
      return true;
    });
  return out;
}

}  // namespace

SolveBetaResult solve_beta(const EvalContext& ctx, const ParameterTriple& p0) {
  ParameterTriple p = p0;
  const Field& f = ctx.field();
  const std::size_t nh = ctx.nh(), nr = ctx.nr();
  p.beta.assign(nr, zeros(f, nh));
  for (int k : {1, 3, 6})
    if (check_condition(k, ctx, p, Mode::Left).status != Status::Holds) return NoLift{k};
  Vec e0 = residual_vector(ctx, p);
  const std::size_t n = nr * nh;
  Rows cols;
  for (std::size_t k = 0; k < nr; ++k)
    for (std::size_t h = 0; h < nh; ++h) {
      ParameterTriple q = p;
      q.beta[k][h] = Scalar::one(f);
      cols.push_back(residual_vector(ctx, q) - e0);
    }
  Rows a(e0.size(), zeros(f, n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < e0.size(); ++i) a[i][j] = cols[j][i];
  Vec rhs = scaled(e0, -Scalar::one(f));
  auto sol = solve_linear(f, a, rhs, n);
  if (!sol) return Inconsistent{};
  auto unflatten = [&](const Vec& x) {
    std::vector<Vec> b(nr, zeros(f, nh));
    for (std::size_t k = 0; k < nr; ++k)
      for (std::size_t h = 0; h < nh; ++h) b[k][h] = x[k * nh + h];
    return b;
  };
  BetaSolutions out;
  out.particular = unflatten(sol->particular);
  for (const auto& kv : sol->kernel) out.kernel.push_back(unflatten(kv));
  return out;
}

}  // namespace pbw
