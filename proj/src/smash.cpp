#include "pbw/smash.hpp"

#include <sstream>

#include "pbw/errors.hpp"

namespace pbw {

namespace {

// Apply matrix m (d×d) to tensor leg `leg` of w ∈ V^{⊗n}.
Vec apply_leg(const Vec& w, std::size_t d, std::size_t n, std::size_t leg, const Rows& m) {
  const Field f = w[0].field();
  std::size_t post = ipow(d, n - 1 - leg), pre = ipow(d, leg);
  Vec out = zeros(f, w.size());
  for (std::size_t a = 0; a < pre; ++a)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t b = 0; b < post; ++b) {
        const Scalar& x = w[(a * d + j) * post + b];
        if (x.is_zero()) continue;
        for (std::size_t i = 0; i < d; ++i)
          if (!m[i][j].is_zero()) out[(a * d + i) * post + b] += m[i][j] * x;
      }
  return out;
}

Rows mat_mul(const Rows& a, const Rows& b, const Field& f) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Rows c(n, zeros(f, m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      axpy(c[i], a[i][l], b[l]);
    }
  return c;
}

Rows rho_of(const ProblemData& d, const Vec& h) {
  const std::size_t n = d.S.dim_v;
  Rows m(n, zeros(d.H.field, n));
  for (std::size_t b = 0; b < d.H.dim; ++b) {
    if (h[b].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) axpy(m[i], h[b], d.action.rho[b][i]);
  }
  return m;
}

}  // namespace

Vec act_on_tensor(const ProblemData& d, const Vec& h, const Vec& w, std::size_t n) {
  const HopfAlgebraData& H = d.H;
  if (n == 0) return scaled(w, H.eps(h));
  Vec out = zeros(H.field, w.size());
  for (const auto& term : sweedler_iterate(H, h, n - 1)) {
    Vec x = w;
    for (std::size_t leg = 0; leg < n; ++leg)
      x = apply_leg(x, d.S.dim_v, n, leg, d.action.rho[term.idx[leg]]);
    axpy(out, term.c, x);
  }
  return out;
}

Vec act_on_v(const ProblemData& d, const Vec& h, const Vec& v) { return act_on_tensor(d, h, v, 1); }

ValidationReport validate_action(const HopfAlgebraData& h, const QuadraticAlgebraData& s,
                                 const ActionData& a) {
  const std::size_t n = s.dim_v;
  if (a.rho.size() != h.dim) throw DimensionMismatch("action: need one matrix per H basis element");
  for (const auto& m : a.rho) {
    if (m.size() != n) throw DimensionMismatch("action matrix has wrong row count");
    for (const auto& row : m)
      if (row.size() != n) throw DimensionMismatch("action matrix has wrong column count");
  }
  ProblemData tmp{h, s, a};
  ValidationReport rep;
  const Field& f = h.field;
  Rows id(n, zeros(f, n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = Scalar::one(f);

  AxiomCheck unit{"unit_acts_trivially", true, {}, {}};
  if (rho_of(tmp, h.unit) != id) unit.passed = false;
  rep.checks.push_back(unit);

  AxiomCheck mod{"module_axiom", true, {}, {}};
  for (std::size_t i = 0; i < h.dim && mod.passed; ++i)
    for (std::size_t j = 0; j < h.dim && mod.passed; ++j)
      if (mat_mul(a.rho[i], a.rho[j], f) != rho_of(tmp, h.mult[i][j])) {
        mod.passed = false;
        mod.witness = {i, j};
      }
  rep.checks.push_back(mod);

  // The product rule on V⊗V defines the action there; S inherits an action
  // exactly when that action preserves R.
  AxiomCheck rel{"relation_preservation", true, {}, {}};
  for (std::size_t i = 0; i < h.dim && rel.passed; ++i)
    for (std::size_t k = 0; k < s.relation_basis.size() && rel.passed; ++k)
      if (!s.relations.contains(act_on_tensor(tmp, h.basis(i), s.relation_basis[k], 2))) {
        rel.passed = false;
        rel.witness = {i, k};
      }
  rep.checks.push_back(rel);
  return rep;
}

SmashElement& SmashElement::operator+=(const SmashElement& o) {
  if (cutoff != o.cutoff) throw DimensionMismatch("smash elements with different cutoffs");
  axpy(coords, Scalar::one(o.coords[0].field()), o.coords);
  return *this;
}

SmashElement& SmashElement::operator-=(const SmashElement& o) {
  if (cutoff != o.cutoff) throw DimensionMismatch("smash elements with different cutoffs");
  axpy(coords, -Scalar::one(o.coords[0].field()), o.coords);
  return *this;
}

SmashAlgebra::SmashAlgebra(const ProblemData& d, std::size_t cutoff) : d_(&d), cutoff_(cutoff) {
  if (d.S.cutoff < cutoff) throw InputError("quadratic algebra cutoff below smash cutoff");
  const Field& f = field();
  offsets_.push_back(0);
  for (std::size_t n = 0; n <= cutoff; ++n) offsets_.push_back(offsets_.back() + dim_s(n) * dim_h());
  act_.resize(cutoff + 1);
  for (std::size_t n = 0; n <= cutoff; ++n) {
    const auto& comp = d.S.comps[n];
    std::size_t ds = comp.words.size(), amb = ipow(d.S.dim_v, n);
    for (std::size_t hb = 0; hb < dim_h(); ++hb) {
      Rows m(ds, zeros(f, ds));
      for (std::size_t j = 0; j < ds; ++j) {
        Vec img = normal_form(d.S, act_on_tensor(d, d.H.basis(hb), unit_vector(f, amb, comp.words[j]), n), n);
        for (std::size_t i = 0; i < ds; ++i) m[i][j] = img[i];
      }
      act_[n].push_back(std::move(m));
    }
  }
  smul_.assign(cutoff + 1, std::vector<Rows>(cutoff + 1));
  for (std::size_t a = 0; a <= cutoff; ++a)
    for (std::size_t b = 0; a + b <= cutoff; ++b)
      for (std::size_t i = 0; i < dim_s(a); ++i)
        for (std::size_t j = 0; j < dim_s(b); ++j) smul_[a][b].push_back(s_multiply_basis(d.S, a, i, b, j));
}

SmashAlgebra::Coord SmashAlgebra::coord(std::size_t idx) const {
  std::size_t deg = 0;
  while (offsets_[deg + 1] <= idx) ++deg;
  std::size_t r = idx - offsets_[deg];
  return Coord{deg, r / dim_h(), r % dim_h()};
}

Vec SmashAlgebra::act(std::size_t n, const Vec& h, const Vec& s) const {
  Vec out = zeros(field(), dim_s(n));
  for (std::size_t hb = 0; hb < dim_h(); ++hb) {
    if (h[hb].is_zero()) continue;
    const Rows& m = act_[n][hb];
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j].is_zero()) continue;
      Scalar c = h[hb] * s[j];
      for (std::size_t i = 0; i < out.size(); ++i)
        if (!m[i][j].is_zero()) out[i] += c * m[i][j];
    }
  }
  return out;
}

Vec SmashAlgebra::right_act(std::size_t n, const Vec& s, const Vec& h) const {
  return act(n, d_->H.gamma_inv(h), s);
}

SHTensor SmashAlgebra::twist(std::size_t n, const HSTensor& t) const {
  const auto& H = d_->H;
  SHTensor out(dim_s(n), zeros(field(), dim_h()));
  for (std::size_t h = 0; h < dim_h(); ++h)
    for (std::size_t s = 0; s < dim_s(n); ++s) {
      if (t[h][s].is_zero()) continue;
      for (const auto& ct : H.comult[h]) {
        const Rows& m = act_[n][ct.l];
        Scalar c = t[h][s] * ct.c;
        for (std::size_t i = 0; i < dim_s(n); ++i)
          if (!m[i][s].is_zero()) out[i][ct.r] += c * m[i][s];
      }
    }
  return out;
}

HSTensor SmashAlgebra::untwist(std::size_t n, const SHTensor& t) const {
  const auto& H = d_->H;
  HSTensor out(dim_h(), zeros(field(), dim_s(n)));
  for (std::size_t s = 0; s < dim_s(n); ++s)
    for (std::size_t h = 0; h < dim_h(); ++h) {
      if (t[s][h].is_zero()) continue;
      for (const auto& ct : H.comult[h]) {
        Vec img = act(n, H.antipode_inv[ct.l], unit_vector(field(), dim_s(n), s));
        axpy(out[ct.r], t[s][h] * ct.c, img);
      }
    }
  return out;
}

SmashElement SmashAlgebra::zero() const { return SmashElement{cutoff_, zeros(field(), dim())}; }

SmashElement SmashAlgebra::one() const { return from_h(d_->H.unit); }

SmashElement SmashAlgebra::from_h(const Vec& h) const {
  SmashElement e = zero();
  for (std::size_t i = 0; i < dim_h(); ++i) e.coords[index(0, 0, i)] = h[i];
  return e;
}

SmashElement SmashAlgebra::from_s(std::size_t n, const Vec& s) const {
  SHTensor t(dim_s(n), zeros(field(), dim_h()));
  for (std::size_t i = 0; i < dim_s(n); ++i) axpy(t[i], s[i], d_->H.unit);
  return from_sh(n, t);
}

SmashElement SmashAlgebra::from_v(const Vec& v) const { return from_s(1, v); }

SmashElement SmashAlgebra::from_sh(std::size_t n, const SHTensor& t) const {
  if (n > cutoff_) throw CutoffOverflow("element degree exceeds cutoff");
  SmashElement e = zero();
  for (std::size_t s = 0; s < dim_s(n); ++s)
    for (std::size_t h = 0; h < dim_h(); ++h) e.coords[index(n, s, h)] = t[s][h];
  return e;
}

SmashElement SmashAlgebra::basis_element(std::size_t idx) const {
  SmashElement e = zero();
  e.coords.at(idx) = Scalar::one(field());
  return e;
}

SmashElement SmashAlgebra::multiply(const SmashElement& a, const SmashElement& b) const {
  const auto& H = d_->H;
  SmashElement out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a.coords[i].is_zero()) continue;
    Coord x = coord(i);
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b.coords[j].is_zero()) continue;
      Coord y = coord(j);
      std::size_t deg = x.deg + y.deg;
      if (deg > cutoff_)
        throw CutoffOverflow("product of degree " + std::to_string(deg) + " exceeds cutoff " +
                             std::to_string(cutoff_));
      Scalar c = a.coords[i] * b.coords[j];
      // (s h)(s' h') = Σ s (^{h1} s') h2 h'
      for (const auto& ct : H.comult[x.h]) {
        const Rows& m = act_[y.deg][ct.l];
        const Vec& hh = H.mult[ct.r][y.h];
        for (std::size_t k = 0; k < dim_s(y.deg); ++k) {
          if (m[k][y.s].is_zero()) continue;
          Scalar ck = c * ct.c * m[k][y.s];
          const Vec& ss = smul_[x.deg][y.deg][x.s * dim_s(y.deg) + k];
          for (std::size_t p = 0; p < ss.size(); ++p) {
            if (ss[p].is_zero()) continue;
            Scalar cp = ck * ss[p];
            for (std::size_t q = 0; q < dim_h(); ++q)
              if (!hh[q].is_zero()) out.coords[index(deg, p, q)] += cp * hh[q];
          }
        }
      }
    }
  }
  return out;
}

SmashElement SmashAlgebra::product(std::initializer_list<SmashElement> xs) const {
  SmashElement acc = one();
  for (const auto& x : xs) acc = multiply(acc, x);
  return acc;
}

std::size_t SmashAlgebra::degree(const SmashElement& a) const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a.coords[i].is_zero()) d = std::max(d, coord(i).deg);
  return d;
}

std::string SmashAlgebra::to_string(const SmashElement& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a.coords[i].is_zero()) continue;
    Coord c = coord(i);
    if (!first) os << " + ";
    first = false;
    os << "(" << a.coords[i] << ")";
    if (c.deg > 0) os << "*" << d_->S.word_label(c.deg, d_->S.comps[c.deg].words[c.s]);
    const auto& lab = d_->H.labels;
    os << "*" << (c.h < lab.size() ? lab[c.h] : "b" + std::to_string(c.h));
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace pbw
