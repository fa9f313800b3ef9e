#include "pbw/oracle.hpp"

#include <map>
#include <sstream>
#include <tuple>

#include "pbw/context.hpp"
#include "pbw/errors.hpp"
#include "pbw/koszul.hpp"

namespace pbw {

std::size_t tensor_power_dim(const ProblemData& d, std::size_t i) {
  return ipow(d.H.dim, i + 1) * ipow(d.S.dim_v, i);
}

std::size_t working_dim(const ProblemData& d, std::size_t n, OracleMethod m) {
  std::size_t total = 0;
  for (std::size_t c = 0; c <= n; ++c)
    total += m == OracleMethod::Full ? tensor_power_dim(d, n - c)
                                     : ipow(d.S.dim_v, n - c) * d.H.dim;
  return total;
}

namespace {

void check_ceiling(const ProblemData& d, std::size_t n, const OracleOptions& opt) {
  std::size_t w = working_dim(d, n, opt.method);
  if (w > opt.ceiling) throw CeilingExceeded(w, opt.ceiling);
}

// The last degree's relation span plus the t-exponent of every coordinate.
struct Top {
  IncrementalEchelon ech;
  std::vector<std::uint32_t> texp;
};

// --- reduced normal words t^c · u · b_h ---------------------------------------

struct NKey {
  std::uint32_t c, len;
  std::size_t u;
  std::uint32_t h;
  auto operator<=>(const NKey&) const = default;
};
using State = std::map<NKey, Scalar>;

void sadd(State& s, const NKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = s.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

class Reduced {
 public:
  Reduced(const ProblemData& d, const Presentation& pres)
      : d_(d), f_(d.H.field), nh_(d.H.dim), nv_(d.S.dim_v), rel_(pres.rel) {
    ParameterTriple p = ParameterTriple::zero(d);
    p.lambda = pres.lambda;
    HbarProjector pr(d.H);
    tau_.assign(nh_, std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>>>(nv_));
    lam_.assign(nh_, std::vector<std::vector<std::pair<std::uint32_t, Scalar>>>(nv_));
    for (std::size_t h = 0; h < nh_; ++h) {
      Vec hbar = pr.project(d.H.basis(h));
      for (std::size_t v = 0; v < nv_; ++v) {
        // τ(b_h ⊗ e_v) = Σ ^{h1}e_v ⊗ h2
        std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar> acc;
        for (const auto& ct : d.H.comult[h])
          for (std::size_t x = 0; x < nv_; ++x) {
            const Scalar& m = d.action.rho[ct.l][x][v];
            if (m.is_zero()) continue;
            auto key = std::make_pair(std::uint32_t(x), std::uint32_t(ct.r));
            auto [it, fresh] = acc.emplace(key, ct.c * m);
            if (!fresh) it->second += ct.c * m;
          }
        for (auto& [k, c] : acc)
          if (!c.is_zero()) tau_[h][v].emplace_back(k.first, k.second, c);
        Vec lam = EvalContext::lambda_L(p, d.H, hbar, unit_vector(f_, nv_, v));
        for (std::size_t m = 0; m < nh_; ++m)
          if (!lam[m].is_zero()) lam_[h][v].emplace_back(std::uint32_t(m), lam[m]);
      }
    }
  }

  std::size_t dim(std::size_t n) const { return working_dim(d_, n, OracleMethod::Reduced); }

  const std::vector<NKey>& keys(std::size_t n) {
    while (keys_.size() <= n) {
      std::size_t m = keys_.size();
      std::vector<NKey> ks;
      for (std::uint32_t c = 0; c <= m; ++c) {
        std::size_t len = m - c, nu = ipow(nv_, len);
        for (std::size_t u = 0; u < nu; ++u)
          for (std::uint32_t h = 0; h < nh_; ++h) ks.push_back({c, std::uint32_t(len), u, h});
      }
      keys_.push_back(std::move(ks));
    }
    return keys_[n];
  }

  std::size_t index(std::size_t n, const NKey& k) const {
    std::size_t off = 0;
    for (std::uint32_t c = 0; c < k.c; ++c) off += ipow(nv_, n - c) * nh_;
    return off + k.u * nh_ + k.h;
  }

  Vec to_vec(std::size_t n, const State& s) const {
    Vec out = zeros(f_, dim(n));
    for (const auto& [k, c] : s) {
      if (k.c + k.len != n) throw std::logic_error("reduced oracle: degree drift");
      out[index(n, k)] += c;
    }
    return out;
  }

  State from_vec(std::size_t n, const Vec& v) {
    const auto& ks = keys(n);
    State s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) s.emplace(ks[i], v[i]);
    return s;
  }

  State read_h(const State& s, std::size_t g) const {
    State out;
    for (const auto& [k, c] : s)
      for (std::size_t m = 0; m < nh_; ++m) {
        const Scalar& x = d_.H.mult[k.h][g][m];
        if (!x.is_zero()) sadd(out, {k.c, k.len, k.u, std::uint32_t(m)}, c * x);
      }
    return out;
  }

  // h·v ↦ τ(h⊗v) + λ_L(pr_H̄ h ⊗ v)·t
  State read_v(const State& s, std::size_t v) const {
    State out;
    for (const auto& [k, c] : s) {
      for (const auto& [x, m, a] : tau_[k.h][v])
        sadd(out, {k.c, k.len + 1, k.u * nv_ + x, m}, c * a);
      for (const auto& [m, a] : lam_[k.h][v]) sadd(out, {k.c + 1, k.len, k.u, m}, c * a);
    }
    return out;
  }

  State read_word(State s, const GWord& w) const {
    if (w[0]) {
      State t;
      for (auto& [k, c] : s) t.emplace(NKey{k.c + w[0], k.len, k.u, k.h}, c);
      s = std::move(t);
    }
    s = read_h(s, w[1]);
    for (std::size_t i = 2; i + 1 < w.size(); i += 2) s = read_h(read_v(s, w[i]), w[i + 1]);
    return s;
  }

  State read(const State& s, const GElement& e) const {
    State out;
    for (const auto& [w, c] : e)
      for (const auto& [k, a] : read_word(s, w)) sadd(out, k, c * a);
    return out;
  }

  // Ranks of the ideal image in every degree ≤ n_max; the last one is kept.
  std::vector<std::size_t> run(std::size_t n_max, const OracleOptions& opt, Top* top) {
    std::vector<std::size_t> comp;
    Rows prev;
    for (std::size_t n = 0; n <= n_max; ++n) {
      check_ceiling(d_, n, opt);
      const std::size_t amb = dim(n);
      IncrementalEchelon ech(f_, amb);
      auto push = [&](const State& s) {
        if (ech.rank() < amb && !s.empty()) ech.add(to_vec(n, s));
      };
      for (const auto& k : prev) {
        State s = from_vec(n - 1, k);
        State st;
        for (const auto& [key, c] : s) st.emplace(NKey{key.c + 1, key.len, key.u, key.h}, c);
        push(st);
        for (std::size_t v = 0; v < nv_; ++v) {
          State sv = read_v(s, v);
          for (std::size_t h = 0; h < nh_; ++h) push(read_h(sv, h));
        }
      }
      for (std::size_t deg = 1; deg <= 2 && deg <= n; ++deg) {
        const auto& rels = deg == 1 ? rel_.Ppt : rel_.Pt;
        for (const auto& w : keys(n - deg)) {
          State base{{w, Scalar::one(f_)}};
          for (const auto& q : rels) {
            State sq = read(base, q);
            for (std::size_t h = 0; h < nh_; ++h) push(read_h(sq, h));
          }
        }
      }
      comp.push_back(amb - ech.rank());
      prev = ech.rows();
      if (n == n_max && top) {
        top->texp.clear();
        for (const auto& k : keys(n)) top->texp.push_back(k.c);
        top->ech = std::move(ech);
      }
    }
    return comp;
  }

 private:
  const ProblemData& d_;
  Field f_;
  std::size_t nh_, nv_;
  DeformedRelations rel_;
  std::vector<std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>>>> tau_;
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, Scalar>>>> lam_;
  std::vector<std::vector<NKey>> keys_;
};

// --- full sandwich span in G_n ------------------------------------------------

class Full {
 public:
  Full(const ProblemData& d, const Presentation& pres)
      : d_(d), f_(d.H.field), nh_(d.H.dim), nv_(d.S.dim_v), rel_(pres.rel) {}

  // Words of V-degree i with t-power 0.
  std::vector<GWord> words(std::size_t i) const {
    std::vector<GWord> out;
    std::size_t total = ipow(nh_, i + 1) * ipow(nv_, i);
    for (std::size_t code = 0; code < total; ++code) {
      GWord w(2 * i + 2, 0);
      std::size_t x = code;
      for (std::size_t pos = 2 * i + 1; pos >= 1; --pos) {
        std::size_t radix = pos % 2 == 1 ? nh_ : nv_;
        w[pos] = std::uint32_t(x % radix);
        x /= radix;
      }
      out.push_back(std::move(w));
    }
    return out;
  }

  std::size_t index(std::size_t n, const GWord& w) const {
    std::size_t i = gword_vdegree(w), off = 0;
    for (std::uint32_t c = 0; c < w[0]; ++c) off += tensor_power_dim(d_, n - c);
    std::size_t code = 0;
    for (std::size_t pos = 1; pos <= 2 * i + 1; ++pos) code = code * (pos % 2 == 1 ? nh_ : nv_) + w[pos];
    return off + code;
  }

  GElement mul(const GElement& x, const GElement& y) const {
    GElement out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y)
        for (std::size_t m = 0; m < nh_; ++m) {
          const Scalar& hm = d_.H.mult[a.back()][b[1]][m];
          if (hm.is_zero()) continue;
          GWord w{a[0] + b[0]};
          w.insert(w.end(), a.begin() + 1, a.end() - 1);
          w.push_back(std::uint32_t(m));
          w.insert(w.end(), b.begin() + 2, b.end());
          gadd(out, w, ca * cb * hm);
        }
    return out;
  }

  std::size_t rank_at(std::size_t n, const OracleOptions& opt, Top* top) const {
    check_ceiling(d_, n, opt);
    const std::size_t amb = working_dim(d_, n, OracleMethod::Full);
    IncrementalEchelon ech(f_, amb);
    for (std::size_t deg = 1; deg <= 2 && deg <= n; ++deg) {
      const auto& rels = deg == 1 ? rel_.Ppt : rel_.Pt;
      for (std::uint32_t c = 0; c + deg <= n; ++c) {
        std::size_t rest = n - deg - c;
        for (std::size_t ia = 0; ia <= rest; ++ia) {
          auto as = words(ia), bs = words(rest - ia);
          for (const auto& q : rels)
            for (const auto& a : as) {
              GWord at = a;
              at[0] = c;
              GElement aq = mul({{at, Scalar::one(f_)}}, q);
              for (const auto& b : bs) {
                if (ech.rank() == amb) break;
                GElement e = mul(aq, {{b, Scalar::one(f_)}});
                if (e.empty()) continue;
                Vec v = zeros(f_, amb);
                for (const auto& [w, s] : e) v[index(n, w)] += s;
                ech.add(std::move(v));
              }
            }
        }
      }
    }
    std::size_t r = ech.rank();
    if (top) {
      top->texp.assign(amb, 0);
      for (std::uint32_t c = 0, off = 0; c <= n; off += tensor_power_dim(d_, n - c), ++c)
        for (std::size_t i = 0; i < tensor_power_dim(d_, n - c); ++i) top->texp[off + i] = c;
      top->ech = std::move(ech);
    }
    return amb - r;
  }

 private:
  const ProblemData& d_;
  Field f_;
  std::size_t nh_, nv_;
  DeformedRelations rel_;
};

std::vector<std::size_t> run(const ProblemData& d, const Presentation& pres, std::size_t n_max,
                             const OracleOptions& opt, Top* top) {
  if (opt.method == OracleMethod::Reduced) return Reduced(d, pres).run(n_max, opt, top);
  Full full(d, pres);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(full.rank_at(n, opt, n == n_max ? top : nullptr));
  return out;
}

}  // namespace

Presentation presentation(const ProblemData& d, const ParameterTriple& p) {
  return {p.lambda, homogenize(d, p)};
}

Presentation presentation(const ProblemData& d, const std::vector<std::vector<Vec>>& lambda,
                          const AlphaTilde& alpha_tilde, const std::vector<Vec>& beta_tilde) {
  return {lambda, homogenize_tilde(d, lambda, alpha_tilde, beta_tilde)};
}

std::size_t homogenized_component_dim(const ProblemData& d, const ParameterTriple& p,
                                      std::size_t n, const OracleOptions& opt) {
  if (opt.method == OracleMethod::Full) return Full(d, presentation(d, p)).rank_at(n, opt, nullptr);
  return run(d, presentation(d, p), n, opt, nullptr).back();
}

std::vector<std::size_t> homogenized_dims(const ProblemData& d, const Presentation& pres,
                                          std::size_t n_max, const OracleOptions& opt) {
  return run(d, pres, n_max, opt, nullptr);
}

std::vector<std::size_t> homogenized_dims(const ProblemData& d, const ParameterTriple& p,
                                          std::size_t n_max, const OracleOptions& opt) {
  return run(d, presentation(d, p), n_max, opt, nullptr);
}

std::vector<std::size_t> expected_dims(const ProblemData& d, std::size_t n_max) {
  auto s = graded_dims(d.S, n_max);
  std::vector<std::size_t> out;
  std::size_t acc = 0;
  for (auto x : s) out.push_back(acc += x * d.H.dim);
  return out;
}

std::string OracleVerdict::summary() const {
  std::ostringstream os;
  if (pbw)
    os << "PBW up to degree " << max_degree;
  else
    os << "not PBW: degree " << *fail_degree << " falls short by " << deficit;
  return os.str();
}

OracleVerdict pbw_oracle(const ProblemData& d, const Presentation& pres, std::size_t max_degree,
                         const OracleOptions& opt) {
  if (max_degree < 2) throw InputError("pbw_oracle requires max degree >= 2");
  OracleVerdict v;
  v.max_degree = max_degree;
  v.dims = homogenized_dims(d, pres, max_degree, opt);
  v.expected = expected_dims(d, max_degree);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    if (v.dims[n] > v.expected[n])
      throw std::logic_error("oracle: dim (B_t)_" + std::to_string(n) + " exceeds the smash bound");
    if (v.pbw && v.dims[n] < v.expected[n]) {
      v.pbw = false;
      v.fail_degree = n;
      v.deficit = v.expected[n] - v.dims[n];
    }
  }
  return v;
}

OracleVerdict pbw_oracle(const ProblemData& d, const ParameterTriple& p, std::size_t max_degree,
                         const OracleOptions& opt) {
  return pbw_oracle(d, presentation(d, p), max_degree, opt);
}

std::vector<std::size_t> gr_dims(const ProblemData& d, const ParameterTriple& p,
                                 std::size_t max_degree, const OracleOptions& opt) {
  Top top{IncrementalEchelon(d.H.field, 0), {}};
  run(d, presentation(d, p), max_degree, opt, &top);
  const std::size_t base = top.ech.rank(), amb = top.ech.ambient_dim();
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::uint32_t c = std::uint32_t(max_degree - n);
    for (std::size_t i = 0; i < amb; ++i)
      if (top.texp[i] == c) top.ech.add(unit_vector(d.H.field, amb, i));
    std::size_t f_n = top.ech.rank() - base;
    out.push_back(f_n - prev);
    prev = f_n;
  }
  return out;
}

}  // namespace pbw
