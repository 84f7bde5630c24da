#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qr/coevent.hpp"
#include "qr/linfeas.hpp"
#include "qr/qintegral.hpp"
#include "qr/qmeasure.hpp"

namespace qr {

enum class Mode { gen1, gen2, actualize };

const char* mode_name(Mode m);
Mode mode_from_name(const std::string& s);

// One comparison decided on a branch: lhs REL rhs with REL in {'<','=','>'}.
struct TraceStep {
  std::string lhs, rhs;
  char rel = '=';

  bool operator==(const TraceStep&) const = default;
};

// A node of the branch tree: the propagated constraint store, the raw
// constraint list that produced it (for exhaustiveness checks), and the
// comparison decisions taken along the path.
struct BranchContext {
  SolveState state;
  ConstraintSystem constraints;
  std::vector<TraceStep> trace;

  // Adds and propagates; false when the context died.
  bool add(const Constraint& c);
};

// All weak orderings of the given (expression, element) values that the
// context does not already decide, explored in lexicographic element order
// with arms ordered <, =, >. Each surviving branch carries the layered
// integral of the ordered values against phi as an affine expression:
//   sum_j (v_j - v_{j-1}) * phi(union of level-j-and-above elements).
// Expressions known nonnegative need no zero split: a bottom group pinned to
// zero contributes a vanishing first term. Arms whose context dies are pruned.
std::vector<std::pair<LinExpr, BranchContext>> symbolic_q_integral(
    const std::vector<std::pair<LinExpr, int>>& values, const CoeventTable& phi,
    const BranchContext& ctx);

struct SolveOptions {
  long long max_branches = 10'000'000;  // nodes instantiated before the guard trips
  bool lp_at_equations = true;          // full solve after each event equation
  bool collect_leaves = false;          // record every leaf for coverage tests
};

struct LeafRecord {
  ConstraintSystem constraints;
  bool feasible = false;
};

struct FilterVerdict {
  Mode mode = Mode::gen1;
  bool existential = false;
  int n = 0;
  CoeventTable phi;
  bool feasible = false;
  std::optional<Density1> density1;   // gen1 witness
  std::optional<Density2> density2;   // gen2/actualize witness
  std::optional<QMeasure> measure;    // existential witness
  std::vector<TraceStep> trace;       // path to the accepting leaf
  long long branches_explored = 0;
  std::vector<LeafRecord> leaves;     // only when collect_leaves was set
};

// Is there a strictly positive density f with mu(A) = integral over A of f dphi
// for every event? Fixed-measure form decides for the given mu; the existential
// form adds mu(A) unknowns (nonnegative, mu(empty) = 0, grade-2 rows over all
// disjoint nonempty triples) and asks whether any q-measure works. Verdicts and
// witnesses are deterministic; every feasible witness is re-verified against
// the concrete evaluators before being returned. Throws ResourceGuardError
// when the branch budget is exhausted.
FilterVerdict check_1generated(const CoeventTable& phi, const QMeasure& mu,
                               const SolveOptions& opt = {});
FilterVerdict check_1generated_existential(const CoeventTable& phi,
                                           const SolveOptions& opt = {});

// Two-stage form: mu(A) = integral over A of [integral over A of f(.,w') dphi] dphi(w')
// with f symmetric and strictly positive.
FilterVerdict check_2generated(const CoeventTable& phi, const QMeasure& mu,
                               const SolveOptions& opt = {});
FilterVerdict check_2generated_existential(const CoeventTable& phi,
                                           const SolveOptions& opt = {});

// Inner stage over A, outer stage over the whole space.
FilterVerdict check_actualized(const CoeventTable& phi, const QMeasure& mu,
                               const SolveOptions& opt = {});
FilterVerdict check_actualized_existential(const CoeventTable& phi,
                                           const SolveOptions& opt = {});

// Recomputes the witness through the concrete evaluators on every event and
// checks positivity plus (existential) q-measure validity of the witness
// measure. Fixed-measure verdicts need the measure they were solved against.
// Infeasible verdicts verify vacuously. On failure *why names the first
// mismatch.
bool verify_witness(const FilterVerdict& v,
                    const std::optional<QMeasure>& fixed_mu = std::nullopt,
                    std::string* why = nullptr);

// Closed-form arithmetic test for 1-generation at n = 3: some omega0 and
// integer b in {1,2,3} satisfy
//   phi(Omega) + b*phi({omega0}) = sum_pairs phi - sum_singletons phi
// (ordinary integer arithmetic on the 0/1 values). Kept exactly in this
// shifted form so the unit and acceptance suites can compare it against the
// direct solver over all 128 coevents; the comparison is reported, not
// assumed.
bool gen1_shift_criterion_n3(const CoeventTable& phi);

}  // namespace qr
