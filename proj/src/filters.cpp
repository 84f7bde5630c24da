#include "qr/filters.hpp"

#include <algorithm>

#include "qr/error.hpp"

namespace qr {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::gen1:
      return "gen1";
    case Mode::gen2:
      return "gen2";
    case Mode::actualize:
      return "actualize";
  }
  return "?";
}

Mode mode_from_name(const std::string& s) {
  if (s == "gen1") return Mode::gen1;
  if (s == "gen2") return Mode::gen2;
  if (s == "actualize") return Mode::actualize;
  throw ParseError("unknown mode '" + s + "' (expected gen1, gen2 or actualize)");
}

bool BranchContext::add(const Constraint& c) {
  constraints.push_back(c);
  return state.add(c);
}

namespace {

struct Budget {
  long long nodes = 0;
  long long max = 0;

  void bump() {
    if (++nodes > max) throw ResourceGuardError(nodes);
  }
};

struct Group {
  LinExpr rep;  // representative expression (first member); equals join the group
  EventMask mask;
};

LinExpr layered_expr(const std::vector<Group>& groups, const CoeventTable& phi) {
  std::vector<EventMask> suffix(groups.size() + 1, 0);
  for (std::size_t j = groups.size(); j-- > 0;) suffix[j] = suffix[j + 1] | groups[j].mask;
  LinExpr total;
  LinExpr prev;  // zero
  for (std::size_t j = 0; j < groups.size(); ++j) {
    if (phi.eval(suffix[j]) == 1) total += groups[j].rep - prev;
    prev = groups[j].rep;
  }
  return total;
}

using Branches = std::vector<std::pair<LinExpr, BranchContext>>;

void order_rec(const std::vector<std::pair<LinExpr, int>>& values, std::size_t idx,
               const std::vector<Group>& groups, const BranchContext& ctx,
               const CoeventTable& phi, Budget& budget, Branches& out);

// Walk values[idx] up the ascending group list starting at pos. Arms in the
// order <, =, >; comparisons the store already decides follow one arm silently.
void insert_rec(const std::vector<std::pair<LinExpr, int>>& values, std::size_t idx,
                std::size_t pos, const std::vector<Group>& groups, const BranchContext& ctx,
                const CoeventTable& phi, Budget& budget, Branches& out) {
  const LinExpr& e = values[idx].first;
  EventMask bit = EventMask{1} << (values[idx].second - 1);

  if (pos == groups.size()) {
    std::vector<Group> next = groups;
    next.push_back(Group{e, bit});
    order_rec(values, idx + 1, next, ctx, phi, budget, out);
    return;
  }

  const LinExpr& rep = groups[pos].rep;
  LinExpr diff = ctx.state.reduce(e - rep);
  if (diff.is_constant()) {
    if (diff.c < 0) {
      std::vector<Group> next = groups;
      next.insert(next.begin() + pos, Group{e, bit});
      order_rec(values, idx + 1, next, ctx, phi, budget, out);
    } else if (diff.c == 0) {
      std::vector<Group> next = groups;
      next[pos].mask |= bit;
      order_rec(values, idx + 1, next, ctx, phi, budget, out);
    } else {
      insert_rec(values, idx, pos + 1, groups, ctx, phi, budget, out);
    }
    return;
  }

  std::string e_s = e.to_string(), rep_s = rep.to_string();

  budget.bump();
  {
    BranchContext below = ctx;
    if (below.add({rep - e, Rel::gt})) {
      below.trace.push_back({e_s, rep_s, '<'});
      std::vector<Group> next = groups;
      next.insert(next.begin() + pos, Group{e, bit});
      order_rec(values, idx + 1, next, below, phi, budget, out);
    }
  }
  budget.bump();
  {
    BranchContext equal = ctx;
    if (equal.add({e - rep, Rel::eq})) {
      equal.trace.push_back({e_s, rep_s, '='});
      std::vector<Group> next = groups;
      next[pos].mask |= bit;
      order_rec(values, idx + 1, next, equal, phi, budget, out);
    }
  }
  budget.bump();
  {
    BranchContext above = ctx;
    if (above.add({e - rep, Rel::gt})) {
      above.trace.push_back({e_s, rep_s, '>'});
      insert_rec(values, idx, pos + 1, groups, above, phi, budget, out);
    }
  }
}

void order_rec(const std::vector<std::pair<LinExpr, int>>& values, std::size_t idx,
               const std::vector<Group>& groups, const BranchContext& ctx,
               const CoeventTable& phi, Budget& budget, Branches& out) {
  if (idx == values.size()) {
    out.emplace_back(layered_expr(groups, phi), ctx);
    return;
  }
  insert_rec(values, idx, 0, groups, ctx, phi, budget, out);
}

Branches enumerate_orders(const std::vector<std::pair<LinExpr, int>>& values,
                          const CoeventTable& phi, const BranchContext& ctx, Budget& budget) {
  Branches out;
  order_rec(values, 0, {}, ctx, phi, budget, out);
  return out;
}

std::vector<int> event_members(EventMask a, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (contains(a, i)) out.push_back(i);
  return out;
}

struct Engine {
  const CoeventTable& phi;
  Mode mode;
  const QMeasure* fixed_mu;  // null in the existential form
  SolveOptions opt;

  int n;
  std::vector<EventMask> events;
  Budget budget;
  bool found = false;
  std::map<VarId, Rat> witness;
  std::vector<TraceStep> win_trace;
  std::vector<LeafRecord> leaves;

  Engine(const CoeventTable& phi_, Mode mode_, const QMeasure* mu_, const SolveOptions& opt_)
      : phi(phi_), mode(mode_), fixed_mu(mu_), opt(opt_), n(phi_.n) {
    budget.max = opt.max_branches;
    for (EventMask a = 1; a <= full_mask(n); ++a) events.push_back(a);
    std::sort(events.begin(), events.end(), [](EventMask x, EventMask y) {
      return std::pair(popcount(x), x) < std::pair(popcount(y), y);
    });
  }

  LinExpr dvar(int w, int wp) const {
    return mode == Mode::gen1 ? LinExpr::var(VarId::d1(w)) : LinExpr::var(VarId::d2(w, wp));
  }

  BranchContext base_context() const {
    BranchContext ctx;
    if (mode == Mode::gen1) {
      for (int i = 1; i <= n; ++i)
        if (!ctx.add({LinExpr::var(VarId::d1(i)), Rel::gt}))
          throw Error("internal: base context died");
    } else {
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
          if (!ctx.add({LinExpr::var(VarId::d2(i, j)), Rel::gt}))
            throw Error("internal: base context died");
    }
    if (!fixed_mu) {
      for (EventMask a = 1; a <= full_mask(n); ++a)
        ctx.add({LinExpr::var(VarId::mu(a)), Rel::ge});
      for (EventMask a = 1; a <= full_mask(n); ++a)
        for (EventMask b = a + 1; b <= full_mask(n); ++b) {
          if ((a & b) != 0) continue;
          for (EventMask d = b + 1; d <= full_mask(n); ++d) {
            if ((d & (a | b)) != 0) continue;
            LinExpr row = LinExpr::var(VarId::mu(a | b | d)) - LinExpr::var(VarId::mu(a | b)) -
                          LinExpr::var(VarId::mu(a | d)) - LinExpr::var(VarId::mu(b | d)) +
                          LinExpr::var(VarId::mu(a)) + LinExpr::var(VarId::mu(b)) +
                          LinExpr::var(VarId::mu(d));
            if (!ctx.add({row, Rel::eq})) throw Error("internal: base context died");
          }
        }
    }
    return ctx;
  }

  bool finish_event(EventMask a, const LinExpr& value, BranchContext ctx, std::size_t idx) {
    LinExpr rhs =
        fixed_mu ? LinExpr::constant((*fixed_mu)(a)) : LinExpr::var(VarId::mu(a));
    if (!ctx.add({value - rhs, Rel::eq})) return false;
    if (opt.lp_at_equations && !ctx.state.check()) return false;
    return explore(idx + 1, ctx);
  }

  bool outer_stage(EventMask a, const std::vector<std::pair<LinExpr, int>>& gs,
                   const BranchContext& ctx, std::size_t idx) {
    for (auto& [value, nctx] : enumerate_orders(gs, phi, ctx, budget))
      if (finish_event(a, value, std::move(nctx), idx)) return true;
    return false;
  }

  bool stage_rec(EventMask a, const std::vector<int>& outer, std::size_t k,
                 const std::vector<std::pair<LinExpr, int>>& gs, const BranchContext& ctx,
                 std::size_t idx) {
    if (k == outer.size()) return outer_stage(a, gs, ctx, idx);
    int wp = outer[k];
    std::vector<std::pair<LinExpr, int>> inner;
    for (int w : event_members(a, n)) inner.emplace_back(dvar(w, wp), w);
    for (auto& [g, nctx] : enumerate_orders(inner, phi, ctx, budget)) {
      auto gs2 = gs;
      gs2.emplace_back(g, wp);
      if (stage_rec(a, outer, k + 1, gs2, nctx, idx)) return true;
    }
    return false;
  }

  bool explore(std::size_t idx, const BranchContext& ctx) {
    if (idx == events.size()) {
      budget.bump();
      auto pt = ctx.state.check();
      if (opt.collect_leaves) leaves.push_back(LeafRecord{ctx.constraints, pt.has_value()});
      if (!pt) return false;
      if (!found) {
        found = true;
        witness = std::move(*pt);
        win_trace = ctx.trace;
      }
      // collecting mode keeps walking the whole tree for coverage
      return !opt.collect_leaves;
    }
    EventMask a = events[idx];
    if (mode == Mode::gen1) {
      std::vector<std::pair<LinExpr, int>> vals;
      for (int w : event_members(a, n)) vals.emplace_back(dvar(w, w), w);
      for (auto& [value, nctx] : enumerate_orders(vals, phi, ctx, budget))
        if (finish_event(a, value, std::move(nctx), idx)) return true;
      return false;
    }
    std::vector<int> outer =
        event_members(mode == Mode::gen2 ? a : full_mask(n), n);
    return stage_rec(a, outer, 0, {}, ctx, idx);
  }

  FilterVerdict run() {
    if (n < 1 || n > 5) throw Error("point count out of range");
    if (fixed_mu) {
      if (fixed_mu->n != n) throw Error("coevent and measure size mismatch");
      validate(*fixed_mu);
    }
    FilterVerdict v;
    v.mode = mode;
    v.existential = fixed_mu == nullptr;
    v.n = n;
    v.phi = phi;

    explore(0, base_context());

    v.feasible = found;
    v.branches_explored = budget.nodes;
    v.leaves = std::move(leaves);
    if (found) {
      v.trace = std::move(win_trace);
      if (mode == Mode::gen1) {
        Density1 f{n, std::vector<Rat>(n, Rat(0))};
        for (int i = 1; i <= n; ++i) f.v[i - 1] = witness.at(VarId::d1(i));
        v.density1 = std::move(f);
      } else {
        Density2 f{n, std::vector<Rat>(pair_count(n), Rat(0))};
        for (int i = 1; i <= n; ++i)
          for (int j = i; j <= n; ++j) f.at(i, j) = witness.at(VarId::d2(i, j));
        v.density2 = std::move(f);
      }
      if (!fixed_mu) {
        QMeasure m{n, std::vector<Rat>(std::size_t{1} << n, Rat(0))};
        for (EventMask a = 1; a <= full_mask(n); ++a) m.v[a] = witness.at(VarId::mu(a));
        v.measure = std::move(m);
      }
    }

    std::string why;
    if (!verify_witness(v, fixed_mu ? std::optional<QMeasure>(*fixed_mu) : std::nullopt, &why))
      throw Error("internal: witness failed re-verification: " + why);
    return v;
  }
};

FilterVerdict run_filter(const CoeventTable& phi, Mode mode, const QMeasure* mu,
                         const SolveOptions& opt) {
  Engine eng(phi, mode, mu, opt);
  return eng.run();
}

}  // namespace

std::vector<std::pair<LinExpr, BranchContext>> symbolic_q_integral(
    const std::vector<std::pair<LinExpr, int>>& values, const CoeventTable& phi,
    const BranchContext& ctx) {
  Budget budget;
  budget.max = SolveOptions{}.max_branches;
  return enumerate_orders(values, phi, ctx, budget);
}

FilterVerdict check_1generated(const CoeventTable& phi, const QMeasure& mu,
                               const SolveOptions& opt) {
  return run_filter(phi, Mode::gen1, &mu, opt);
}

FilterVerdict check_1generated_existential(const CoeventTable& phi, const SolveOptions& opt) {
  return run_filter(phi, Mode::gen1, nullptr, opt);
}

FilterVerdict check_2generated(const CoeventTable& phi, const QMeasure& mu,
                               const SolveOptions& opt) {
  return run_filter(phi, Mode::gen2, &mu, opt);
}

FilterVerdict check_2generated_existential(const CoeventTable& phi, const SolveOptions& opt) {
  return run_filter(phi, Mode::gen2, nullptr, opt);
}

FilterVerdict check_actualized(const CoeventTable& phi, const QMeasure& mu,
                               const SolveOptions& opt) {
  return run_filter(phi, Mode::actualize, &mu, opt);
}

FilterVerdict check_actualized_existential(const CoeventTable& phi, const SolveOptions& opt) {
  return run_filter(phi, Mode::actualize, nullptr, opt);
}

bool verify_witness(const FilterVerdict& v, const std::optional<QMeasure>& fixed_mu,
                    std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!v.feasible) return true;

  const QMeasure* target = nullptr;
  if (v.existential) {
    if (!v.measure) return fail("existential verdict carries no measure");
    try {
      validate(*v.measure);
    } catch (const Error& e) {
      return fail(std::string("witness measure invalid: ") + e.what());
    }
    target = &*v.measure;
  } else {
    if (!fixed_mu) return fail("fixed-measure verdict needs the measure it was solved against");
    target = &*fixed_mu;
  }
  if (target->n != v.n) return fail("measure size mismatch");

  QMeasure induced;
  if (v.mode == Mode::gen1) {
    if (!v.density1 || v.density1->n != v.n) return fail("missing density");
    for (const Rat& x : v.density1->v)
      if (x <= 0) return fail("witness density is not strictly positive");
    induced = induced_gen1(*v.density1, v.phi);
  } else {
    if (!v.density2 || v.density2->n != v.n) return fail("missing pair density");
    for (const Rat& x : v.density2->v)
      if (x <= 0) return fail("witness density is not strictly positive");
    induced = v.mode == Mode::gen2 ? induced_gen2(*v.density2, v.phi)
                                   : induced_actualize(*v.density2, v.phi);
  }
  for (EventMask a = 0; a <= full_mask(v.n); ++a)
    if (induced.v[a] != target->v[a])
      return fail("mismatch on " + event_to_string(a) + ": integral gives " +
                  rat_to_string(induced.v[a]) + ", measure says " + rat_to_string(target->v[a]));
  return true;
}

bool gen1_shift_criterion_n3(const CoeventTable& phi) {
  if (phi.n != 3) throw Error("criterion is specific to n = 3");
  int s1 = phi.eval(0b001), s2 = phi.eval(0b010), s3 = phi.eval(0b100);
  int rhs = phi.eval(0b011) + phi.eval(0b101) + phi.eval(0b110) - s1 - s2 - s3;
  int w = phi.eval(0b111);
  for (int b = 1; b <= 3; ++b)
    for (int s : {s1, s2, s3})
      if (w + b * s == rhs) return true;
  return false;
}

}  // namespace qr
