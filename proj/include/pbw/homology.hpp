#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pbw/conditions.hpp"

namespace pbw {

// Generator bookkeeping of X = K_S ⊗_τ B̄_H in total degree ≤ 3.
// Index conventions (b = dim H̄):
//   X02 (j1,j2) -> j1·b + j2      X11 (v,j) -> v·b + j      X20 k
//   X03 (j1,j2,j3) -> (j1·b+j2)·b + j3
//   X12 (v,j1,j2) -> (v·b+j1)·b + j2   X21 (k,j) -> k·b + j   X30 ξ
struct XComplex {
  std::size_t nb = 0, nv = 0, nr = 0, nk3 = 0;
  explicit XComplex(const EvalContext& ctx);
  std::size_t size(int i, int j) const;
  std::string label(const EvalContext& ctx, int i, int j, std::size_t idx) const;
};

// comp[i] holds the values on the generators of X_{i, degree−i}.
struct Cochain {
  int degree = 2;
  std::array<std::vector<SmashElement>, 4> comp;
  static Cochain zero(const EvalContext& ctx, int degree);
  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Scalar& c, Cochain a);
  bool is_zero() const;
};

struct LiftedCochains {
  Cochain alpha, beta, lambda;
};

LiftedCochains lift_cochains(const EvalContext& ctx, const ParameterTriple& p);
Cochain dstar(const EvalContext& ctx, const Cochain& c);

struct Brackets {
  Cochain sq;     // [α_X+λ_X, α_X+λ_X]
  Cochain mixed;  // [α_X+λ_X, β_X]
};
// Throws BracketUndefined when condition (6) fails.
Brackets brackets(const EvalContext& ctx, const ParameterTriple& p);

struct AbcFlag {
  Status status = Status::Holds;
  std::optional<std::string> witness;
  std::optional<SmashElement> residual;
};

struct AbcReport {
  AbcFlag a, b, c;
  bool holds() const {
    return a.status == Status::Holds && b.status == Status::Holds && c.status == Status::Holds;
  }
};

AbcReport check_abc(const EvalContext& ctx, const ParameterTriple& p);

// --- chain-map tables ---------------------------------------------------------

// Element of the reduced bar complex: each key lists A-basis indices of all legs
// (outer legs included); middle legs live in Ā.
struct BarElement {
  std::map<std::vector<std::size_t>, Scalar> terms;
  void add(const std::vector<std::size_t>& legs, const Scalar& c);
  bool is_zero() const { return terms.empty(); }
};

// Key: (left A-basis index, (i, j, generator index), right A-basis index).
struct XGen {
  int i, j;
  std::size_t idx;
  auto operator<=>(const XGen&) const = default;
};
struct XElement {
  std::map<std::tuple<std::size_t, XGen, std::size_t>, Scalar> terms;
  void add(std::size_t l, const XGen& g, std::size_t r, const Scalar& c);
  void add(const SmashElement& l, const XGen& g, const SmashElement& r, const Scalar& c);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const XElement& a, const XElement& b) { return a.terms == b.terms; }
};

// Tensor of smash elements as a bar element, pr_Ā on each middle leg.
BarElement bar_tensor(const EvalContext& ctx, const std::vector<SmashElement>& legs);

// Throws UntabulatedInput for bidegrees other than X11, X20, X21, X30.
BarElement iota_table(const EvalContext& ctx, const XGen& g);
// Throws UntabulatedInput when a bar term is outside the tabulated shapes.
XElement pi_table(const EvalContext& ctx, const BarElement& b);
XElement x_generator(const EvalContext& ctx, const XGen& g);

struct PiIotaReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
PiIotaReport verify_pi_iota(const EvalContext& ctx);

std::string bar_to_string(const EvalContext& ctx, const BarElement& b);
std::string x_to_string(const EvalContext& ctx, const XElement& x);

}  // namespace pbw
