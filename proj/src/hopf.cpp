#include "pbw/hopf.hpp"

#include <map>
#include <sstream>

#include "pbw/errors.hpp"

namespace pbw {

Vec HopfAlgebraData::mul(const Vec& a, const Vec& b) const {
  Vec r = zero();
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      axpy(r, a[i] * b[j], mult[i][j]);
    }
  }
  return r;
}

Scalar HopfAlgebraData::eps(const Vec& a) const {
  Scalar s = Scalar::zero(field);
  for (std::size_t i = 0; i < dim; ++i)
    if (!a[i].is_zero()) s += a[i] * counit[i];
  return s;
}

static Vec apply_images(const Rows& images, const Vec& a, const Field& f, std::size_t dim) {
  Vec r = zeros(f, dim);
  for (std::size_t i = 0; i < dim; ++i) axpy(r, a[i], images[i]);
  return r;
}

Vec HopfAlgebraData::gamma(const Vec& a) const { return apply_images(antipode, a, field, dim); }
Vec HopfAlgebraData::gamma_inv(const Vec& a) const {
  return apply_images(antipode_inv, a, field, dim);
}

Rows HopfAlgebraData::coproduct(const Vec& a) const {
  Rows t(dim, zero());
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& term : comult[i]) t[term.l][term.r] += a[i] * term.c;
  }
  return t;
}

std::size_t HopfAlgebraData::unit_index() const {
  for (std::size_t i = 0; i < dim; ++i)
    if (unit == basis(i)) return i;
  return dim;
}

void set_default_hbar(HopfAlgebraData& h) {
  h.hbar_section.clear();
  h.hbar_basis.clear();
  std::size_t u = h.unit_index();
  if (u < h.dim) {
    for (std::size_t i = 0; i < h.dim; ++i)
      if (i != u) {
        h.hbar_section.push_back(i);
        h.hbar_basis.push_back(h.basis(i));
      }
    return;
  }
  h.hbar_basis = nullspace(h.field, Rows{h.counit}, h.dim);
}

std::string describe_hbar(const HopfAlgebraData& h) {
  std::ostringstream os;
  if (!h.hbar_section.empty() || h.dim == 1) {
    os << "span of basis elements {";
    for (std::size_t k = 0; k < h.hbar_section.size(); ++k) {
      std::size_t i = h.hbar_section[k];
      os << (k ? ", " : "") << (i < h.labels.size() ? h.labels[i] : std::to_string(i));
    }
    os << "}";
  } else {
    os << "kernel of the counit (" << h.hbar_basis.size() << "-dimensional)";
  }
  return os.str();
}

HbarProjector::HbarProjector(const HopfAlgebraData& h)
    : f_(h.field), n_(h.hbar_basis.size()), basis_(h.hbar_basis), unit_(h.unit) {
  Rows b;
  b.push_back(h.unit);
  b.insert(b.end(), h.hbar_basis.begin(), h.hbar_basis.end());
  coord_ = Coordinatizer(h.field, h.dim, b);
  if (coord_.size() != h.dim) throw InputError("H̄ section does not complement k·1_H");
}

Vec HbarProjector::coords(const Vec& a) const {
  auto c = coord_.coords(a);
  if (!c) throw InputError("H̄ section does not span a complement of k·1_H");
  return Vec(c->begin() + 1, c->end());
}

Scalar HbarProjector::unit_part(const Vec& a) const {
  auto c = coord_.coords(a);
  if (!c) throw InputError("H̄ section does not span a complement of k·1_H");
  return (*c)[0];
}

Vec HbarProjector::project(const Vec& a) const {
  Vec r = a;
  axpy(r, -unit_part(a), unit_);
  return r;
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const AxiomCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

const AxiomCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "  pass  " : "  FAIL  ") << c.name;
    if (!c.passed) {
      os << "  witness (";
      for (std::size_t k = 0; k < c.witness.size(); ++k) os << (k ? "," : "") << c.witness[k];
      os << ")";
      if (!c.detail.empty()) os << "  " << c.detail;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

void check_shapes(const HopfAlgebraData& h) {
  const std::size_t n = h.dim;
  auto bad = [](const std::string& what) { throw DimensionMismatch("Hopf data: " + what); };
  if (n == 0) bad("dimension 0");
  if (h.mult.size() != n) bad("mult has wrong number of rows");
  for (const auto& row : h.mult) {
    if (row.size() != n) bad("mult row has wrong length");
    for (const auto& v : row)
      if (v.size() != n) bad("mult entry has wrong length");
  }
  if (h.unit.size() != n) bad("unit has wrong length");
  if (h.comult.size() != n) bad("comult has wrong length");
  for (const auto& terms : h.comult)
    for (const auto& t : terms)
      if (t.l >= n || t.r >= n) bad("comult index out of range");
  if (h.counit.size() != n) bad("counit has wrong length");
  if (h.antipode.size() != n || h.antipode_inv.size() != n) bad("antipode has wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    if (h.antipode[i].size() != n || h.antipode_inv[i].size() != n) bad("antipode has wrong shape");
  for (const auto& v : h.hbar_basis)
    if (v.size() != n) bad("H̄ basis vector has wrong length");
  for (auto i : h.hbar_section)
    if (i >= n) bad("H̄ section index out of range");
}

// Dense tensor of rank 3 indexed [a][b][c] flattened.
using Dense3 = std::vector<Scalar>;

}  // namespace

ValidationReport validate_hopf(const HopfAlgebraData& h) {
  check_shapes(h);
  const std::size_t n = h.dim;
  const Field& f = h.field;
  ValidationReport rep;
  auto add = [&](const std::string& name) -> AxiomCheck& {
    rep.checks.push_back(AxiomCheck{name, true, {}, {}});
    return rep.checks.back();
  };
  auto fail = [](AxiomCheck& c, std::vector<std::size_t> w, std::string d = {}) {
    if (!c.passed) return;
    c.passed = false;
    c.witness = std::move(w);
    c.detail = std::move(d);
  };

  {
    auto& c = add("associativity");
    for (std::size_t i = 0; i < n && c.passed; ++i)
      for (std::size_t j = 0; j < n && c.passed; ++j)
        for (std::size_t k = 0; k < n && c.passed; ++k)
          if (h.mul(h.mult[i][j], h.basis(k)) != h.mul(h.basis(i), h.mult[j][k]))
            fail(c, {i, j, k});
  }
  {
    auto& c = add("unit");
    for (std::size_t i = 0; i < n && c.passed; ++i)
      if (h.mul(h.unit, h.basis(i)) != h.basis(i) || h.mul(h.basis(i), h.unit) != h.basis(i))
        fail(c, {i});
  }
  auto delta_left = [&](std::size_t i) {
    Dense3 t(n * n * n, Scalar::zero(f));
    for (const auto& a : h.comult[i])
      for (const auto& b : h.comult[a.l]) t[(b.l * n + b.r) * n + a.r] += a.c * b.c;
    return t;
  };
  auto delta_right = [&](std::size_t i) {
    Dense3 t(n * n * n, Scalar::zero(f));
    for (const auto& a : h.comult[i])
      for (const auto& b : h.comult[a.r]) t[(a.l * n + b.l) * n + b.r] += a.c * b.c;
    return t;
  };
  {
    auto& c = add("coassociativity");
    for (std::size_t i = 0; i < n && c.passed; ++i)
      if (delta_left(i) != delta_right(i)) fail(c, {i});
  }
  {
    auto& c = add("counit");
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      Vec l = h.zero(), r = h.zero();
      for (const auto& t : h.comult[i]) {
        l[t.r] += t.c * h.counit[t.l];
        r[t.l] += t.c * h.counit[t.r];
      }
      if (l != h.basis(i) || r != h.basis(i)) fail(c, {i});
    }
  }
  {
    auto& c = add("comultiplication_multiplicative");
    for (std::size_t i = 0; i < n && c.passed; ++i)
      for (std::size_t j = 0; j < n && c.passed; ++j) {
        Rows lhs = h.coproduct(h.mult[i][j]);
        Rows rhs(n, h.zero());
        for (const auto& a : h.comult[i])
          for (const auto& b : h.comult[j]) {
            const Vec& ll = h.mult[a.l][b.l];
            const Vec& rr = h.mult[a.r][b.r];
            Scalar ab = a.c * b.c;
            for (std::size_t p = 0; p < n; ++p) {
              if (ll[p].is_zero()) continue;
              axpy(rhs[p], ab * ll[p], rr);
            }
          }
        if (lhs != rhs) fail(c, {i, j});
      }
  }
  {
    auto& c = add("counit_multiplicative");
    for (std::size_t i = 0; i < n && c.passed; ++i)
      for (std::size_t j = 0; j < n && c.passed; ++j)
        if (h.eps(h.mult[i][j]) != h.counit[i] * h.counit[j]) fail(c, {i, j});
  }
  {
    auto& c = add("comultiplication_unit");
    Rows d = h.coproduct(h.unit);
    Rows want(n, h.zero());
    for (std::size_t p = 0; p < n; ++p) axpy(want[p], h.unit[p], h.unit);
    if (d != want) fail(c, {});
  }
  {
    auto& c = add("counit_unit");
    if (!h.eps(h.unit).is_one()) fail(c, {});
  }
  {
    auto& c = add("antipode");
    for (std::size_t i = 0; i < n && c.passed; ++i) {
      Vec l = h.zero(), r = h.zero();
      for (const auto& t : h.comult[i]) {
        axpy(l, t.c, h.mul(h.antipode[t.l], h.basis(t.r)));
        axpy(r, t.c, h.mul(h.basis(t.l), h.antipode[t.r]));
      }
      Vec want = scaled(h.unit, h.counit[i]);
      if (l != want || r != want) fail(c, {i});
    }
  }
  {
    auto& c = add("antipode_inverse");
    for (std::size_t i = 0; i < n && c.passed; ++i)
      if (h.gamma(h.antipode_inv[i]) != h.basis(i) || h.gamma_inv(h.antipode[i]) != h.basis(i))
        fail(c, {i});
  }
  {
    auto& c = add("hbar_complement");
    Rows b = h.hbar_basis;
    b.push_back(h.unit);
    if (h.hbar_basis.size() + 1 != n || rank(b, n) != n)
      fail(c, {}, "H̄ section must have dimension dim H − 1 and not contain 1_H");
  }
  return rep;
}

TensorElement sweedler_iterate(const HopfAlgebraData& h, const Vec& x, std::size_t n) {
  std::map<std::vector<std::size_t>, Scalar> cur;
  for (std::size_t i = 0; i < h.dim; ++i)
    if (!x[i].is_zero()) cur[{i}] = x[i];
  for (std::size_t step = 0; step < n; ++step) {
    // expand the last leg
    std::map<std::vector<std::size_t>, Scalar> next;
    for (const auto& [idx, c] : cur) {
      for (const auto& t : h.comult[idx.back()]) {
        auto k = idx;
        k.back() = t.l;
        k.push_back(t.r);
        auto it = next.find(k);
        if (it == next.end())
          next.emplace(std::move(k), c * t.c);
        else
          it->second += c * t.c;
      }
    }
    cur.swap(next);
  }
  TensorElement out;
  for (auto& [idx, c] : cur)
    if (!c.is_zero()) out.push_back(TensorTerm{c, idx});
  return out;
}

HopfAlgebraData group_algebra(const Field& f, const std::vector<std::vector<std::size_t>>& table,
                              std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("empty Cayley table");
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("Cayley table is not square");
    for (auto v : row)
      if (v >= n) throw InputError("Cayley table entry out of range");
  }
  std::size_t e = n;
  for (std::size_t i = 0; i < n && e == n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) ok = ok && table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  if (e == n) throw InputError("Cayley table has no identity element");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw InputError("Cayley table is not associative");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] == e && table[j][i] == e) inv[i] = j;
  for (auto v : inv)
    if (v == n) throw InputError("Cayley table element without inverse");

  HopfAlgebraData h;
  h.field = f;
  h.dim = n;
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == e ? "e" : "g" + std::to_string(i));
  if (labels.size() != n) throw InputError("label count differs from group order");
  h.labels = std::move(labels);
  h.mult.assign(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.mult[i][j] = h.basis(table[i][j]);
  h.unit = h.basis(e);
  h.comult.resize(n);
  for (std::size_t i = 0; i < n; ++i) h.comult[i] = {CoTerm{Scalar::one(f), i, i}};
  h.counit = Vec(n, Scalar::one(f));
  for (std::size_t i = 0; i < n; ++i) {
    h.antipode.push_back(h.basis(inv[i]));
    h.antipode_inv.push_back(h.basis(inv[i]));
  }
  set_default_hbar(h);
  return h;
}

HopfAlgebraData cyclic_group_algebra(const Field& f, std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  return group_algebra(f, t, labels);
}

HopfAlgebraData sweedler_h4(const Field& f) {
  // basis index = a + 2b for g^a x^b
  HopfAlgebraData h;
  h.field = f;
  h.dim = 4;
  h.labels = {"1", "g", "x", "gx"};
  h.mult.assign(4, std::vector<Vec>(4));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          Vec v = h.zero();
          // g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
          if (b + d < 2) v[((a + c) % 2) + 2 * (b + d)] = Scalar::from_int(f, (b && c) ? -1 : 1);
          h.mult[a + 2 * b][c + 2 * d] = v;
        }
  h.unit = h.basis(0);
  Scalar one = Scalar::one(f);
  h.comult = {
      {CoTerm{one, 0, 0}},
      {CoTerm{one, 1, 1}},
      {CoTerm{one, 2, 0}, CoTerm{one, 1, 2}},  // x⊗1 + g⊗x
      {CoTerm{one, 3, 1}, CoTerm{one, 0, 3}},  // gx⊗g + 1⊗gx
  };
  h.counit = {one, one, Scalar::zero(f), Scalar::zero(f)};
  Vec mgx = h.zero(), x = h.basis(2), gx = h.basis(3), mx = h.zero();
  mgx[3] = -one;
  mx[2] = -one;
  h.antipode = {h.basis(0), h.basis(1), mgx, x};     // γ(x) = −gx, γ(gx) = x
  h.antipode_inv = {h.basis(0), h.basis(1), gx, mx}; // γ⁻¹(x) = gx, γ⁻¹(gx) = −x
  set_default_hbar(h);
  return h;
}

}  // namespace pbw
