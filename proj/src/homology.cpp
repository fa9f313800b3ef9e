#include "pbw/homology.hpp"

#include <sstream>

#include "pbw/errors.hpp"

namespace pbw {

XComplex::XComplex(const EvalContext& ctx)
    : nb(ctx.hbar().dim()), nv(ctx.nv()), nr(ctx.nr()), nk3(ctx.k3_basis().size()) {}

std::size_t XComplex::size(int i, int j) const {
  std::size_t left = i == 0 ? 1 : i == 1 ? nv : i == 2 ? nr : i == 3 ? nk3 : 0;
  if (i > 3 || i + j > 3) return 0;
  return left * ipow(nb, std::size_t(j));
}

std::string XComplex::label(const EvalContext& ctx, int i, int j, std::size_t idx) const {
  std::vector<std::string> parts;
  std::vector<std::size_t> hs(j);
  for (int t = j - 1; t >= 0; --t) {
    hs[t] = idx % nb;
    idx /= nb;
  }
  if (i == 1) parts.push_back(ctx.S().labels.at(idx));
  if (i == 2) parts.push_back("r" + std::to_string(idx));
  if (i == 3) parts.push_back("ξ" + std::to_string(idx));
  for (auto h : hs) parts.push_back("h̄" + std::to_string(h));
  std::string s = "X" + std::to_string(i) + std::to_string(j) + "[";
  for (std::size_t t = 0; t < parts.size(); ++t) s += (t ? "⊗" : "") + parts[t];
  return s + "]";
}

Cochain Cochain::zero(const EvalContext& ctx, int degree) {
  XComplex x(ctx);
  Cochain c;
  c.degree = degree;
  for (int i = 0; i <= degree; ++i) c.comp[i].assign(x.size(i, degree - i), ctx.A().zero());
  return c;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  for (int i = 0; i < 4; ++i)
    for (std::size_t t = 0; t < comp[i].size(); ++t) comp[i][t] += o.comp[i][t];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  for (int i = 0; i < 4; ++i)
    for (std::size_t t = 0; t < comp[i].size(); ++t) comp[i][t] -= o.comp[i][t];
  return *this;
}

Cochain operator*(const Scalar& c, Cochain a) {
  for (auto& v : a.comp)
    for (auto& e : v) e = c * e;
  return a;
}

bool Cochain::is_zero() const {
  for (const auto& v : comp)
    for (const auto& e : v)
      if (!e.is_zero()) return false;
  return true;
}

namespace {

// Shared helpers over the evaluation context.
struct Ops {
  const EvalContext& c;
  const SmashAlgebra& A;
  std::size_t nb;
  explicit Ops(const EvalContext& ctx) : c(ctx), A(ctx.A()), nb(ctx.hbar().dim()) {}

  SmashElement E(const Vec& h) const { return A.from_h(h); }
  SmashElement V(const Vec& v) const { return A.from_v(v); }
  SmashElement VH(const Rows& vh) const { return A.from_sh(1, vh); }
  SmashElement M(const SmashElement& a, const SmashElement& b) const { return A.multiply(a, b); }
  Vec hbar(std::size_t j) const { return c.hbar().vector(j); }
  Vec act(const Vec& h, const Vec& v) const { return c.act(h, v); }
  Vec ginv(std::size_t b) const { return c.H().gamma_inv(c.hb(b)); }

  // Degree-2 cochain evaluated on arbitrary arguments, pr_H̄ applied to H legs.
  SmashElement c02(const Cochain& x, const Vec& h, const Vec& h2) const {
    Vec a = c.hbar().coords(h), b = c.hbar().coords(h2);
    SmashElement out = A.zero();
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        if (!a[i].is_zero() && !b[j].is_zero()) out += (a[i] * b[j]) * x.comp[0][i * nb + j];
    return out;
  }
  SmashElement c11(const Cochain& x, const Vec& v, const Vec& h) const {
    Vec b = c.hbar().coords(h);
    SmashElement out = A.zero();
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < nb; ++j)
        if (!v[i].is_zero() && !b[j].is_zero()) out += (v[i] * b[j]) * x.comp[1][i * nb + j];
    return out;
  }
  SmashElement c20(const Cochain& x, const Vec& rc) const {
    SmashElement out = A.zero();
    for (std::size_t k = 0; k < rc.size(); ++k)
      if (!rc[k].is_zero()) out += rc[k] * x.comp[2][k];
    return out;
  }
};

}  // namespace

LiftedCochains lift_cochains(const EvalContext& ctx, const ParameterTriple& p) {
  Ops o(ctx);
  LiftedCochains out{Cochain::zero(ctx, 2), Cochain::zero(ctx, 2), Cochain::zero(ctx, 2)};
  for (std::size_t k = 0; k < ctx.nr(); ++k) {
    out.alpha.comp[2][k] = o.VH(p.alpha[k]);
    out.beta.comp[2][k] = o.E(p.beta[k]);
  }
  for (std::size_t v = 0; v < ctx.nv(); ++v)
    for (std::size_t j = 0; j < o.nb; ++j)
      out.lambda.comp[1][v * o.nb + j] = o.E(ctx.lambda_R(p, ctx.vb(v), o.hbar(j)));
  return out;
}

Cochain dstar(const EvalContext& ctx, const Cochain& x) {
  if (x.degree != 2) throw InputError("dstar expects a degree-2 cochain");
  Ops o(ctx);
  const auto& H = ctx.H();
  const std::size_t nb = o.nb, nv = ctx.nv(), nr = ctx.nr(), nh = ctx.nh();
  Cochain out = Cochain::zero(ctx, 3);
  // X03: reduced bar differential of H
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t c = 0; c < nb; ++c) {
        Vec h1 = o.hbar(a), h2 = o.hbar(b), h3 = o.hbar(c);
        SmashElement e = o.M(o.E(h1), o.c02(x, h2, h3));
        e -= o.c02(x, H.mul(h1, h2), h3);
        e += o.c02(x, h1, H.mul(h2, h3));
        e -= o.M(o.c02(x, h1, h2), o.E(h3));
        out.comp[0][(a * nb + b) * nb + c] = e;
      }
  // X12
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t a = 0; a < nb; ++a)
      for (std::size_t b = 0; b < nb; ++b) {
        Vec h = o.hbar(a), h2 = o.hbar(b), ev = ctx.vb(v);
        Rows dh = H.coproduct(h), dh2 = H.coproduct(h2);
        SmashElement e = o.M(o.V(ev), o.c02(x, h, h2));
        for (std::size_t l = 0; l < nh; ++l)
          for (std::size_t r = 0; r < nh; ++r) {
            if (dh[l][r].is_zero()) continue;
            Vec w = o.act(o.ginv(l), ev);
            for (std::size_t l2 = 0; l2 < nh; ++l2)
              for (std::size_t r2 = 0; r2 < nh; ++r2)
                if (!dh2[l2][r2].is_zero())
                  e -= (dh[l][r] * dh2[l2][r2]) *
                       o.M(o.c02(x, ctx.hb(r), ctx.hb(r2)), o.V(o.act(o.ginv(l2), w)));
            e -= dh[l][r] * o.M(o.E(ctx.hb(r)), o.c11(x, w, h2));
          }
        e += o.c11(x, ev, H.mul(h, h2));
        e -= o.M(o.c11(x, ev, h), o.E(h2));
        out.comp[1][(v * nb + a) * nb + b] = e;
      }
  // X21
  for (std::size_t k = 0; k < nr; ++k)
    for (std::size_t j = 0; j < nb; ++j) {
      const Vec& r = ctx.relation(k);
      Vec h = o.hbar(j);
      Rows dh = H.coproduct(h);
      SmashElement e = ctx.A().zero();
      for (std::size_t a = 0; a < nv; ++a)
        for (std::size_t b = 0; b < nv; ++b) {
          const Scalar& cab = r[a * nv + b];
          if (cab.is_zero()) continue;
          e += cab * o.M(o.V(ctx.vb(a)), o.c11(x, ctx.vb(b), h));
          for (std::size_t l = 0; l < nh; ++l)
            for (std::size_t rr = 0; rr < nh; ++rr)
              if (!dh[l][rr].is_zero())
                e += (cab * dh[l][rr]) *
                     o.M(o.c11(x, ctx.vb(a), ctx.hb(rr)), o.V(o.act(o.ginv(l), ctx.vb(b))));
        }
      Rows ti = ctx.transport_inv(r, h);
      for (std::size_t m = 0; m < nh; ++m)
        if (!is_zero(ti[m])) e += o.M(o.E(ctx.hb(m)), o.c20(x, ti[m]));
      e -= o.M(x.comp[2][k], o.E(h));
      out.comp[2][k * nb + j] = e;
    }
  // X30
  for (std::size_t i = 0; i < ctx.k3_basis().size(); ++i) {
    const Rows& a = ctx.k3_left()[i];
    const Rows& b = ctx.k3_right()[i];
    SmashElement e = ctx.A().zero();
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t k = 0; k < nr; ++k)
        if (!b[v][k].is_zero()) e += b[v][k] * o.M(o.V(ctx.vb(v)), x.comp[2][k]);
    for (std::size_t k = 0; k < nr; ++k)
      for (std::size_t u = 0; u < nv; ++u)
        if (!a[k][u].is_zero()) e -= a[k][u] * o.M(x.comp[2][k], o.V(ctx.vb(u)));
    out.comp[3][i] = e;
  }
  return out;
}

namespace {

Brackets compute_brackets(const EvalContext& ctx, const ParameterTriple& p, bool with_x30) {
  Ops o(ctx);
  const auto& H = ctx.H();
  const std::size_t nb = o.nb, nv = ctx.nv(), nr = ctx.nr(), nh = ctx.nh();
  const Scalar two = Scalar::from_int(ctx.field(), 2);
  auto lam = [&](const Vec& h, const Vec& v) { return EvalContext::lambda_L(p, H, h, v); };
  Brackets out{Cochain::zero(ctx, 3), Cochain::zero(ctx, 3)};
  // X21: [λ,λ] = 2λ_L(λ_L⊗1)T and [α,λ] = −(λ_L⊗1)(1⊗α)T with T = (τ⁻¹⊗1)(1⊗τ⁻¹).
  for (std::size_t k = 0; k < nr; ++k)
    for (std::size_t j = 0; j < nb; ++j) {
      Rows ti = ctx.transport_inv(ctx.relation(k), o.hbar(j));
      Vec e = H.zero();
      for (std::size_t m = 0; m < nh; ++m)
        for (std::size_t k2 = 0; k2 < nr; ++k2) {
          const Scalar& c = ti[m][k2];
          if (c.is_zero()) continue;
          const Vec& r = ctx.relation(k2);
          for (std::size_t a = 0; a < nv; ++a)
            for (std::size_t b = 0; b < nv; ++b)
              if (!r[a * nv + b].is_zero())
                axpy(e, c * r[a * nv + b], lam(lam(ctx.hb(m), ctx.vb(a)), ctx.vb(b)));
          for (std::size_t v = 0; v < nv; ++v)
            for (std::size_t h = 0; h < nh; ++h)
              if (!p.alpha[k2][v][h].is_zero())
                axpy(e, -(c * p.alpha[k2][v][h]), H.mul(lam(ctx.hb(m), ctx.vb(v)), ctx.hb(h)));
        }
      out.sq.comp[2][k * nb + j] = two * o.E(e);
    }
  // X30 needs α(K̃_3) ⊂ R⊗H.
  for (std::size_t i = 0; with_x30 && i < ctx.k3_basis().size(); ++i) {
    Rows Y;
    try {
      Y = ctx.r_coords_by_h(ctx.k3_defect(p, i));
    } catch (const std::logic_error&) {
      throw BracketUndefined();
    }
    const Rows& a = ctx.k3_left()[i];
    SmashElement sq = ctx.A().zero();
    Vec mixed = H.zero();
    for (std::size_t k = 0; k < nr; ++k)
      for (std::size_t h = 0; h < nh; ++h)
        if (!Y[k][h].is_zero()) {
          sq += Y[k][h] * o.M(o.VH(p.alpha[k]), o.E(ctx.hb(h)));
          axpy(mixed, Y[k][h], H.mul(p.beta[k], ctx.hb(h)));
        }
    for (std::size_t k = 0; k < nr; ++k)
      for (std::size_t u = 0; u < nv; ++u) {
        if (a[k][u].is_zero()) continue;
        for (std::size_t w = 0; w < nv; ++w)
          for (std::size_t h = 0; h < nh; ++h)
            if (!p.alpha[k][w][h].is_zero())
              sq += (a[k][u] * p.alpha[k][w][h]) * o.M(o.V(ctx.vb(w)), o.E(lam(ctx.hb(h), ctx.vb(u))));
        axpy(mixed, a[k][u], lam(p.beta[k], ctx.vb(u)));
      }
    out.sq.comp[3][i] = two * sq;
    out.mixed.comp[3][i] = o.E(mixed);
  }
  return out;
}

}  // namespace

Brackets brackets(const EvalContext& ctx, const ParameterTriple& p) {
  return compute_brackets(ctx, p, true);
}

namespace {

// First nonzero component, scanning X_{i,3−i} for i in the given order.
std::optional<std::pair<int, std::size_t>> first_nonzero(const Cochain& c, std::initializer_list<int> order) {
  for (int i : order)
    for (std::size_t t = 0; t < c.comp[i].size(); ++t)
      if (!c.comp[i][t].is_zero()) return std::make_pair(i, t);
  return std::nullopt;
}

void fail_at(AbcFlag& f, const EvalContext& ctx, const Cochain& c, std::pair<int, std::size_t> at) {
  f.status = Status::Fails;
  f.witness = XComplex(ctx).label(ctx, at.first, 3 - at.first, at.second);
  f.residual = c.comp[at.first][at.second];
}

}  // namespace

AbcReport check_abc(const EvalContext& ctx, const ParameterTriple& p) {
  AbcReport rep;
  LiftedCochains lc = lift_cochains(ctx, p);
  Cochain da = dstar(ctx, lc.alpha + lc.lambda);
  if (auto at = first_nonzero(da, {0, 1, 2, 3})) fail_at(rep.a, ctx, da, *at);

  Scalar two = Scalar::from_int(ctx.field(), 2);
  Cochain db = two * dstar(ctx, lc.beta);
  bool defined = true;
  Brackets br{Cochain::zero(ctx, 3), Cochain::zero(ctx, 3)};
  try {
    br = brackets(ctx, p);
  } catch (const BracketUndefined&) {
    defined = false;
    br = compute_brackets(ctx, p, false);
  }
  Cochain bdiff = br.sq - db;
  if (!defined) {
    // the X_{2,1} part of (b) does not need (6)
    if (auto at = first_nonzero(bdiff, {0, 1, 2}))
      fail_at(rep.b, ctx, bdiff, *at);
    else
      rep.b.status = Status::Undefined;
    rep.c.status = Status::Undefined;
    return rep;
  }
  if (auto at = first_nonzero(bdiff, {0, 1, 2, 3})) fail_at(rep.b, ctx, bdiff, *at);
  if (auto at = first_nonzero(br.mixed, {0, 1, 2, 3})) fail_at(rep.c, ctx, br.mixed, *at);
  return rep;
}

// --- chain-map tables ---------------------------------------------------------

void BarElement::add(const std::vector<std::size_t>& legs, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(legs);
  if (it == terms.end()) {
    terms.emplace(legs, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

void XElement::add(std::size_t l, const XGen& g, std::size_t r, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_tuple(l, g, r);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

void XElement::add(const SmashElement& l, const XGen& g, const SmashElement& r, const Scalar& c) {
  for (std::size_t i = 0; i < l.coords.size(); ++i) {
    if (l.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < r.coords.size(); ++j)
      if (!r.coords[j].is_zero()) add(i, g, j, c * l.coords[i] * r.coords[j]);
  }
}

namespace {

// pr_Ā: degree-0 block projected onto H̄, positive degrees untouched.
SmashElement project_abar(const EvalContext& ctx, SmashElement a) {
  const auto& A = ctx.A();
  Vec h(ctx.nh());
  for (std::size_t b = 0; b < ctx.nh(); ++b) h[b] = a.coords[A.index(0, 0, b)];
  Vec ph = ctx.hbar().project(h);
  for (std::size_t b = 0; b < ctx.nh(); ++b) a.coords[A.index(0, 0, b)] = ph[b];
  return a;
}

void expand(const std::vector<SmashElement>& legs, std::size_t pos, std::vector<std::size_t>& cur,
            const Scalar& c, BarElement& out) {
  if (pos == legs.size()) {
    out.add(cur, c);
    return;
  }
  const auto& co = legs[pos].coords;
  for (std::size_t i = 0; i < co.size(); ++i) {
    if (co[i].is_zero()) continue;
    cur.push_back(i);
    expand(legs, pos + 1, cur, c * co[i], out);
    cur.pop_back();
  }
}

XGen gen(int i, int j, std::size_t idx) { return XGen{i, j, idx}; }

}  // namespace

BarElement bar_tensor(const EvalContext& ctx, const std::vector<SmashElement>& legs) {
  std::vector<SmashElement> ls = legs;
  for (std::size_t t = 1; t + 1 < ls.size(); ++t) ls[t] = project_abar(ctx, ls[t]);
  BarElement out;
  std::vector<std::size_t> cur;
  expand(ls, 0, cur, Scalar::one(ctx.field()), out);
  return out;
}

BarElement iota_table(const EvalContext& ctx, const XGen& g) {
  Ops o(ctx);
  const auto& A = ctx.A();
  const std::size_t nb = o.nb, nv = ctx.nv(), nh = ctx.nh();
  const SmashElement one = A.one();
  BarElement out;
  auto acc = [&](const std::vector<SmashElement>& mid, const Scalar& c) {
    std::vector<SmashElement> legs{one};
    legs.insert(legs.end(), mid.begin(), mid.end());
    legs.push_back(one);
    for (const auto& [k, v] : bar_tensor(ctx, legs).terms) out.add(k, c * v);
  };
  const Scalar one_s = Scalar::one(ctx.field());
  if (g.i == 1 && g.j == 1) {
    std::size_t v = g.idx / nb, j = g.idx % nb;
    Vec h = o.hbar(j);
    acc({o.V(ctx.vb(v)), o.E(h)}, one_s);
    Rows t = ctx.tau_inv_vh(ctx.vb(v), h);
    for (std::size_t m = 0; m < nh; ++m)
      if (!is_zero(t[m])) acc({o.E(ctx.hb(m)), o.V(t[m])}, -one_s);
    return out;
  }
  if (g.i == 2 && g.j == 0) {
    const Vec& r = ctx.relation(g.idx);
    for (std::size_t a = 0; a < nv; ++a)
      for (std::size_t b = 0; b < nv; ++b)
        if (!r[a * nv + b].is_zero()) acc({o.V(ctx.vb(a)), o.V(ctx.vb(b))}, r[a * nv + b]);
    return out;
  }
  if (g.i == 2 && g.j == 1) {
    std::size_t k = g.idx / nb, j = g.idx % nb;
    const Vec& r = ctx.relation(k);
    Vec h = o.hbar(j);
    for (std::size_t a = 0; a < nv; ++a)
      for (std::size_t b = 0; b < nv; ++b) {
        const Scalar& c = r[a * nv + b];
        if (c.is_zero()) continue;
        acc({o.V(ctx.vb(a)), o.V(ctx.vb(b)), o.E(h)}, c);
        Rows t = ctx.tau_inv_vh(ctx.vb(b), h);  // [m][w]
        for (std::size_t m = 0; m < nh; ++m) {
          if (is_zero(t[m])) continue;
          acc({o.V(ctx.vb(a)), o.E(ctx.hb(m)), o.V(t[m])}, -c);
          Rows t2 = ctx.tau_inv_vh(ctx.vb(a), ctx.hb(m));
          for (std::size_t m2 = 0; m2 < nh; ++m2)
            if (!is_zero(t2[m2])) acc({o.E(ctx.hb(m2)), o.V(t2[m2]), o.V(t[m])}, c);
        }
      }
    return out;
  }
  if (g.i == 3 && g.j == 0) {
    const Vec& xi = ctx.k3_basis().at(g.idx);
    for (std::size_t a = 0; a < nv; ++a)
      for (std::size_t b = 0; b < nv; ++b)
        for (std::size_t c = 0; c < nv; ++c) {
          const Scalar& x = xi[(a * nv + b) * nv + c];
          if (!x.is_zero()) acc({o.V(ctx.vb(a)), o.V(ctx.vb(b)), o.V(ctx.vb(c))}, x);
        }
    return out;
  }
  throw UntabulatedInput("ι is tabulated only on X11, X20, X21, X30");
}

XElement x_generator(const EvalContext& ctx, const XGen& g) {
  XElement x;
  x.add(ctx.A().one(), g, ctx.A().one(), Scalar::one(ctx.field()));
  return x;
}

XElement pi_table(const EvalContext& ctx, const BarElement& bar) {
  Ops o(ctx);
  const auto& A = ctx.A();
  const auto& H = ctx.H();
  const std::size_t nb = o.nb, nv = ctx.nv(), nh = ctx.nh();
  XElement out;
  auto add02 = [&](const SmashElement& l, const Vec& h, const Vec& h2, const SmashElement& r,
                   const Scalar& c) {
    Vec a = ctx.hbar().coords(h), b = ctx.hbar().coords(h2);
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        if (!a[i].is_zero() && !b[j].is_zero()) out.add(l, gen(0, 2, i * nb + j), r, c * a[i] * b[j]);
  };
  auto add11 = [&](const SmashElement& l, const Vec& v, const Vec& h, const SmashElement& r,
                   const Scalar& c) {
    Vec b = ctx.hbar().coords(h);
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        if (!v[i].is_zero() && !b[j].is_zero()) out.add(l, gen(1, 1, i * nb + j), r, c * v[i] * b[j]);
  };
  // (outer-left, outer-right) -> V⊗V part of the degree-(1,1) terms
  std::map<std::pair<std::size_t, std::size_t>, Vec> vv;
  const std::size_t unit = H.unit_index();
  for (const auto& [legs, c] : bar.terms) {
    if (legs.size() != 4) throw UntabulatedInput("π is tabulated only on bar degree 2");
    SmashElement l = A.basis_element(legs[0]), r = A.basis_element(legs[3]);
    auto x = A.coord(legs[1]), y = A.coord(legs[2]);
    if (x.deg == 1 && y.deg == 0) {  // vh ⊗ h'
      add02(A.multiply(l, o.V(ctx.vb(x.s))), ctx.hb(x.h), ctx.hb(y.h), r, c);
    } else if (x.deg == 0 && y.deg == 1) {  // h ⊗ v'h'
      Vec h = ctx.hbar().project(ctx.hb(x.h));
      Rows dh = H.coproduct(h);
      SmashElement rr = A.multiply(o.E(ctx.hb(y.h)), r);
      for (std::size_t a = 0; a < nh; ++a)
        for (std::size_t b = 0; b < nh; ++b) {
          if (dh[a][b].is_zero()) continue;
          Vec w = o.act(ctx.hb(a), ctx.vb(y.s));
          add11(l, w, ctx.hb(b), rr, -(c * dh[a][b]));
          add02(A.multiply(l, o.V(w)), ctx.hb(b), ctx.hb(y.h), r, c * dh[a][b]);
        }
    } else if (x.deg == 0 && y.deg == 0) {
      add02(l, ctx.hb(x.h), ctx.hb(y.h), r, c);
    } else if (x.deg == 1 && y.deg == 1) {
      if (unit >= nh || x.h != unit || y.h != unit)
        throw UntabulatedInput("π on V⊗V legs needs trivial H parts");
      auto key = std::make_pair(legs[0], legs[3]);
      auto it = vv.find(key);
      if (it == vv.end()) it = vv.emplace(key, zeros(ctx.field(), nv * nv)).first;
      it->second[x.s * nv + y.s] += c;
    } else {
      throw UntabulatedInput("bar term outside the tabulated shapes");
    }
  }
  for (const auto& [key, w] : vv) {
    if (is_zero(w)) continue;
    auto rc = ctx.r_coords(w);
    if (!rc) throw UntabulatedInput("V⊗V part of a bar element lies outside R");
    for (std::size_t k = 0; k < rc->size(); ++k)
      out.add(key.first, gen(2, 0, k), key.second, (*rc)[k]);
  }
  return out;
}

PiIotaReport verify_pi_iota(const EvalContext& ctx) {
  PiIotaReport rep;
  XComplex xc(ctx);
  for (auto [i, j] : {std::pair{1, 1}, std::pair{2, 0}})
    for (std::size_t t = 0; t < xc.size(i, j); ++t) {
      XGen g = gen(i, j, t);
      ++rep.checked;
      XElement got = pi_table(ctx, iota_table(ctx, g));
      if (!(got == x_generator(ctx, g)))
        rep.failures.push_back(xc.label(ctx, i, j, t) + " ↦ " + x_to_string(ctx, got));
    }
  return rep;
}

std::string bar_to_string(const EvalContext& ctx, const BarElement& b) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [legs, c] : b.terms) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")";
    first = false;
    for (std::size_t t = 0; t < legs.size(); ++t)
      os << (t ? "⊗" : " ") << ctx.A().to_string(ctx.A().basis_element(legs[t]));
  }
  if (first) os << "0";
  return os.str();
}

std::string x_to_string(const EvalContext& ctx, const XElement& x) {
  std::ostringstream os;
  XComplex xc(ctx);
  bool first = true;
  for (const auto& [key, c] : x.terms) {
    const auto& [l, g, r] = key;
    os << (first ? "" : " + ") << "(" << c.to_string() << ") "
       << ctx.A().to_string(ctx.A().basis_element(l)) << "·" << xc.label(ctx, g.i, g.j, g.idx) << "·"
       << ctx.A().to_string(ctx.A().basis_element(r));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace pbw
