#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pbw/context.hpp"

namespace pbw {

enum class Mode { Left, Right, Polynomial };
enum class Status { Holds, Fails, Undefined };

std::string mode_name(Mode m);
std::string status_name(Status s);

// Basis input at which a condition was evaluated.
struct Witness {
  std::vector<std::size_t> idx;
  std::string label;
};

struct ConditionResult {
  int index = 0;
  Status status = Status::Holds;
  std::optional<Witness> witness;      // first failing input
  std::optional<SmashElement> residual; // its residual in truncated A
  std::size_t inputs_checked = 0;
};

struct ConditionReport {
  Mode mode = Mode::Left;
  std::array<ConditionResult, 6> results;
  bool holds() const;
  const ConditionResult& operator[](int k) const { return results.at(k - 1); }
};

struct PBWReport {
  ConditionReport left, right;
  bool modes_agree() const { return left.holds() == right.holds(); }
  bool holds() const { return left.holds(); }
};

// Called for every basis input of condition k with its residual; returning
// false stops the scan.
using ResidualSink = std::function<bool(const Witness&, const SmashElement&)>;

// Evaluates condition k on every basis input of its domain. Throws
// Condition456Undefined for k ∈ {4,5} when (6) fails in the same mode, and
// NotSymmetricAlgebra in polynomial mode on other relation spaces.
void scan_condition(int k, const EvalContext& ctx, const ParameterTriple& p, Mode mode,
                    const ResidualSink& sink);

ConditionResult check_condition(int k, const EvalContext& ctx, const ParameterTriple& p,
                                Mode mode);
// All six in one mode; (4),(5) become Undefined when (6) fails.
ConditionReport check_conditions(const EvalContext& ctx, const ParameterTriple& p, Mode mode);
// Left and right modes together.
PBWReport check_pbw(const EvalContext& ctx, const ParameterTriple& p);
ConditionReport check_polynomial_case(const EvalContext& ctx, const ParameterTriple& p);

// Σ ^{h1}r ⊗ h2 with the V⊗V leg in R-coordinates: [k][h'].
Rows twisted_relation_transport(const EvalContext& ctx, const Vec& h, const Vec& r);

struct NoLift {
  int condition;
};
struct Inconsistent {};
// β = particular + Σ c_i kernel[i], each flattened as beta[k][h] at k·dim_h + h.
struct BetaSolutions {
  std::vector<Vec> particular;
  std::vector<std::vector<Vec>> kernel;
  std::vector<Vec> member(const Vec& c) const;
};
using SolveBetaResult = std::variant<NoLift, Inconsistent, BetaSolutions>;

// p.beta is ignored.
SolveBetaResult solve_beta(const EvalContext& ctx, const ParameterTriple& p);

}  // namespace pbw
