#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qr/linexpr.hpp"

namespace qr {

// Incrementally propagated constraint store. Equalities are eliminated by
// substitution (pivot = smallest VarId), single-variable inequalities become
// interval bounds, and constant rows are checked on the spot; everything left
// is a multi-variable inequality for the simplex. Propagation-detected
// infeasibility is sound; completeness comes from the simplex at check().
class SolveState {
 public:
  // Returns false when the store became infeasible.
  bool add(const Constraint& c);
  bool add(const ConstraintSystem& sys);

  bool infeasible() const { return infeasible_; }

  // Expression with all eliminated variables substituted out.
  LinExpr reduce(LinExpr e) const;

  // Strict-feasibility decision over the full store: all strict rows must admit
  // a common positive slack. Returns the satisfying point on success (every
  // variable the store has seen gets a value; untouched variables default to 1).
  std::optional<std::map<VarId, Rat>> check() const;

 private:
  struct Bound {
    bool present = false;
    Rat value = 0;
    bool strict = false;
  };
  struct Interval {
    Bound lo, hi;
  };

  bool add_reduced(Constraint c);
  bool pin(VarId v, const LinExpr& e);  // eliminate v := e
  bool tighten(VarId v, const Rat& val, bool strict, bool is_lower);

  std::vector<std::pair<VarId, LinExpr>> subs_;  // insertion order, rhs over live vars
  std::map<VarId, size_t> sub_index_;
  std::map<VarId, Interval> bounds_;             // live vars only
  std::vector<Constraint> residual_;             // multi-var ge/gt rows, reduced
  std::vector<VarId> seen_;                      // every var ever mentioned
  bool infeasible_ = false;
};

struct FeasResult {
  bool feasible = false;
  std::map<VarId, Rat> witness;  // strictly satisfies every constraint
};

// Strict rows share one slack t (e > 0 becomes e >= t, t <= 1, maximize t);
// the system is feasible exactly when the optimum has t > 0. Exact rational
// two-phase simplex with Bland's rule throughout: terminating, deterministic,
// identical witnesses on identical systems. Every witness is substituted back
// into the input system and asserted before it is returned.
FeasResult feasible(const ConstraintSystem& sys);

enum class Sign { positive, negative, zero, unknown };

// positive  when sys + (e <= 0) is infeasible,
// negative  when sys + (e >= 0) is infeasible,
// zero      when both e > 0 and e < 0 are infeasible,
// unknown   otherwise. Constant expressions short-circuit without a solve.
Sign implied_sign(const ConstraintSystem& sys, const LinExpr& e);

}  // namespace qr
