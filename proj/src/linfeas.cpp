#include "qr/linfeas.hpp"

#include <algorithm>
#include <set>

#include "qr/error.hpp"

namespace qr {

bool SolveState::add(const Constraint& c) {
  if (infeasible_) return false;
  for (const auto& [v, a] : c.e.terms)
    if (!std::count(seen_.begin(), seen_.end(), v)) seen_.push_back(v);
  return add_reduced(Constraint{reduce(c.e), c.rel});
}

bool SolveState::add(const ConstraintSystem& sys) {
  for (const Constraint& c : sys)
    if (!add(c)) return false;
  return true;
}

LinExpr SolveState::reduce(LinExpr e) const {
  // Every rhs is over live variables, so one pass suffices.
  for (const auto& [v, rhs] : subs_) e.substitute(v, rhs);
  return e;
}

bool SolveState::add_reduced(Constraint c) {
  if (infeasible_) return false;

  if (c.e.is_constant()) {
    bool ok = c.rel == Rel::eq ? c.e.c == 0 : c.rel == Rel::ge ? c.e.c >= 0 : c.e.c > 0;
    if (!ok) infeasible_ = true;
    return ok;
  }

  if (c.e.terms.size() == 1) {
    auto [v, a] = c.e.terms.front();
    Rat val = -c.e.c / a;
    if (c.rel == Rel::eq) return pin(v, LinExpr::constant(val));
    return tighten(v, val, c.rel == Rel::gt, a > 0);
  }

  if (c.rel == Rel::eq) {
    auto [v, a] = c.e.terms.front();  // smallest VarId is the pivot
    LinExpr rhs = c.e;
    rhs.substitute(v, LinExpr::constant(0));
    rhs *= Rat(-1) / a;
    return pin(v, rhs);
  }

  residual_.push_back(std::move(c));
  return true;
}

bool SolveState::pin(VarId v, const LinExpr& rhs) {
  if (infeasible_) return false;
  subs_.emplace_back(v, rhs);
  sub_index_[v] = subs_.size() - 1;
  for (auto& [u, r] : subs_)
    if (!(u == v)) r.substitute(v, rhs);

  std::vector<Constraint> pending;
  if (auto it = bounds_.find(v); it != bounds_.end()) {
    Interval iv = it->second;
    bounds_.erase(it);
    if (iv.lo.present)
      pending.push_back({rhs - LinExpr::constant(iv.lo.value), iv.lo.strict ? Rel::gt : Rel::ge});
    if (iv.hi.present)
      pending.push_back({LinExpr::constant(iv.hi.value) - rhs, iv.hi.strict ? Rel::gt : Rel::ge});
  }
  for (auto it = residual_.begin(); it != residual_.end();) {
    if (it->e.coeff(v)) {
      Constraint moved = std::move(*it);
      it = residual_.erase(it);
      moved.e.substitute(v, rhs);
      pending.push_back(std::move(moved));
    } else {
      ++it;
    }
  }
  for (Constraint& c : pending) {
    // A pin triggered while draining the queue can leave later entries stale.
    c.e = reduce(std::move(c.e));
    if (!add_reduced(std::move(c))) return false;
  }
  return true;
}

bool SolveState::tighten(VarId v, const Rat& val, bool strict, bool is_lower) {
  Interval& iv = bounds_[v];
  Bound& b = is_lower ? iv.lo : iv.hi;
  bool tighter = !b.present || (is_lower ? val > b.value : val < b.value) ||
                 (val == b.value && strict && !b.strict);
  if (tighter) b = Bound{true, val, strict};

  if (iv.lo.present && iv.hi.present) {
    if (iv.lo.value > iv.hi.value ||
        (iv.lo.value == iv.hi.value && (iv.lo.strict || iv.hi.strict))) {
      infeasible_ = true;
      return false;
    }
    if (iv.lo.value == iv.hi.value) {
      Rat pv = iv.lo.value;
      bounds_.erase(v);
      return pin(v, LinExpr::constant(pv));
    }
  }
  return true;
}

namespace {

// max t over { rows hold with e >= t on strict rows, t <= 1, free vars split
// p - q }. Exact rational dense tableau, Bland's rule, two phases.
struct SlackLp {
  bool lp_feasible = false;
  Rat t = 0;
  std::map<VarId, Rat> point;
};

class Tableau {
 public:
  Tableau(std::size_t ncols) : ncols_(ncols) {}

  void add_row(std::vector<Rat> coeffs, Rat b) {
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(std::move(b));
    basis_.push_back(SIZE_MAX);
  }

  std::size_t grow_col() {
    for (auto& r : rows_) r.push_back(Rat(0));
    obj_.push_back(Rat(0));
    return ncols_++;
  }

  void set_basis(std::size_t row, std::size_t col) { basis_[row] = col; }

  void set_coeff(std::size_t row, std::size_t col, const Rat& v) { rows_[row][col] = v; }

  void set_objective(const std::vector<Rat>& coeffs) {
    obj_ = coeffs;
    obj_.resize(ncols_, Rat(0));
    obj_const_ = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rat f = obj_[basis_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < ncols_; ++j) obj_[j] -= f * rows_[r][j];
      obj_const_ += f * rhs_[r];
    }
  }

  // Bland: entering = smallest eligible column, leaving = smallest basis var
  // among the ratio-test minima. Returns the objective value.
  Rat optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = SIZE_MAX;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (allowed[j] && obj_[j] > 0) {
          enter = j;
          break;
        }
      if (enter == SIZE_MAX) return obj_const_;

      std::size_t leave = SIZE_MAX;
      Rat best = 0;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][enter] <= 0) continue;
        Rat ratio = rhs_[r] / rows_[r][enter];
        if (leave == SIZE_MAX || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave]))
          leave = r, best = ratio;
      }
      if (leave == SIZE_MAX) throw Error("internal: unbounded slack LP");
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    Rat d = rows_[r][col];
    for (auto& x : rows_[r]) x /= d;
    rhs_[r] /= d;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][col] == 0) continue;
      Rat f = rows_[i][col];
      for (std::size_t j = 0; j < ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (obj_[col] != 0) {
      Rat f = obj_[col];
      for (std::size_t j = 0; j < ncols_; ++j) obj_[j] -= f * rows_[r][j];
      obj_const_ += f * rhs_[r];
    }
    basis_[r] = col;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + r);
    rhs_.erase(rhs_.begin() + r);
    basis_.erase(basis_.begin() + r);
  }

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  std::size_t basis(std::size_t r) const { return basis_[r]; }
  const Rat& coeff(std::size_t r, std::size_t j) const { return rows_[r][j]; }
  const Rat& rhs(std::size_t r) const { return rhs_[r]; }

  Rat value_of(std::size_t col) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] == col) return rhs_[r];
    return Rat(0);
  }

 private:
  std::size_t ncols_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rat> obj_;
  Rat obj_const_ = 0;
};

SlackLp max_slack(const std::vector<Constraint>& rows) {
  std::set<VarId> var_set;
  for (const Constraint& c : rows) {
    if (c.rel == Rel::eq) throw Error("internal: equality reached the simplex");
    for (const auto& [v, a] : c.e.terms) var_set.insert(v);
  }
  std::vector<VarId> vars(var_set.begin(), var_set.end());
  const std::size_t nv = vars.size();
  const std::size_t t_col = 2 * nv;
  const std::size_t n_struct = 2 * nv + 1;
  auto col_of = [&](VarId v) {
    std::size_t k = std::size_t(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
    return 2 * k;
  };

  const std::size_t m = rows.size() + 1;  // + the t <= 1 row
  Tableau tab(n_struct + m);

  // Row i: -e.terms (split p-q) [+ t if strict] + slack_i = e.c, then sign-fix.
  std::vector<std::size_t> art_rows;
  for (std::size_t i = 0; i <= rows.size(); ++i) {
    std::vector<Rat> row(n_struct + m, Rat(0));
    Rat b;
    if (i < rows.size()) {
      for (const auto& [v, a] : rows[i].e.terms) {
        row[col_of(v)] -= a;
        row[col_of(v) + 1] += a;
      }
      if (rows[i].rel == Rel::gt) row[t_col] = 1;
      b = rows[i].e.c;
    } else {
      row[t_col] = 1;
      b = 1;
    }
    row[n_struct + i] = 1;
    if (b < 0) {
      for (auto& x : row) x = -x;  // slack flips to -1: needs an artificial basis
      b = -b;
      art_rows.push_back(i);
    }
    tab.add_row(std::move(row), std::move(b));
    tab.set_basis(i, n_struct + i);
  }

  std::vector<bool> artificial(tab.ncols(), false);
  for (std::size_t r : art_rows) {
    std::size_t col = tab.grow_col();
    artificial.push_back(true);
    tab.set_coeff(r, col, Rat(1));
    tab.set_basis(r, col);
  }

  // Phase 1: drive the artificials to zero.
  if (!art_rows.empty()) {
    std::vector<Rat> obj(tab.ncols(), Rat(0));
    for (std::size_t j = 0; j < tab.ncols(); ++j)
      if (artificial[j]) obj[j] = -1;
    tab.set_objective(obj);
    std::vector<bool> allowed(tab.ncols(), true);
    Rat z = tab.optimize(allowed);
    if (z < 0) return SlackLp{};
    for (std::size_t r = 0; r < tab.nrows();) {
      if (!artificial[tab.basis(r)]) {
        ++r;
        continue;
      }
      std::size_t piv = SIZE_MAX;
      for (std::size_t j = 0; j < tab.ncols(); ++j)
        if (!artificial[j] && tab.coeff(r, j) != 0) {
          piv = j;
          break;
        }
      if (piv == SIZE_MAX)
        tab.drop_row(r);
      else
        tab.pivot(r, piv), ++r;
    }
  }

  // Phase 2: maximize t over the non-artificial columns.
  std::vector<Rat> obj(tab.ncols(), Rat(0));
  obj[t_col] = 1;
  tab.set_objective(obj);
  std::vector<bool> allowed(tab.ncols(), true);
  for (std::size_t j = 0; j < tab.ncols(); ++j)
    if (j < artificial.size() && artificial[j]) allowed[j] = false;
  Rat t = tab.optimize(allowed);

  SlackLp out;
  out.lp_feasible = true;
  out.t = t;
  for (std::size_t k = 0; k < nv; ++k)
    out.point[vars[k]] = tab.value_of(2 * k) - tab.value_of(2 * k + 1);
  return out;
}

}  // namespace

std::optional<std::map<VarId, Rat>> SolveState::check() const {
  if (infeasible_) return std::nullopt;

  std::set<VarId> lp_vars;
  for (const Constraint& c : residual_)
    for (const auto& [v, a] : c.e.terms) lp_vars.insert(v);

  auto interior = [](const Interval& iv) -> Rat {
    if (iv.lo.present && iv.hi.present) return (iv.lo.value + iv.hi.value) / 2;
    if (iv.lo.present) return iv.lo.strict ? Rat(iv.lo.value + 1) : iv.lo.value;
    return iv.hi.strict ? Rat(iv.hi.value - 1) : iv.hi.value;
  };

  std::map<VarId, Rat> assignment;
  if (!residual_.empty()) {
    std::vector<Constraint> rows = residual_;
    for (const auto& [v, iv] : bounds_) {
      if (!lp_vars.count(v)) continue;
      if (iv.lo.present)
        rows.push_back({LinExpr::var(v) - LinExpr::constant(iv.lo.value),
                        iv.lo.strict ? Rel::gt : Rel::ge});
      if (iv.hi.present)
        rows.push_back({LinExpr::constant(iv.hi.value) - LinExpr::var(v),
                        iv.hi.strict ? Rel::gt : Rel::ge});
    }
    SlackLp lp = max_slack(rows);
    if (!lp.lp_feasible || lp.t <= 0) return std::nullopt;
    assignment = std::move(lp.point);
  }

  for (const auto& [v, iv] : bounds_)
    if (!assignment.count(v)) assignment[v] = interior(iv);
  for (VarId v : seen_)
    if (!sub_index_.count(v) && !assignment.count(v)) assignment[v] = 1;
  for (auto it = subs_.rbegin(); it != subs_.rend(); ++it)
    assignment[it->first] = it->second.eval(assignment);

  for (const Constraint& c : residual_) {
    Rat val = c.e.eval(assignment);
    if (c.rel == Rel::gt ? val <= 0 : val < 0) throw Error("internal: check() witness fails");
  }
  for (const auto& [v, iv] : bounds_) {
    const Rat& x = assignment.at(v);
    if (iv.lo.present && (iv.lo.strict ? x <= iv.lo.value : x < iv.lo.value))
      throw Error("internal: check() witness fails a bound");
    if (iv.hi.present && (iv.hi.strict ? x >= iv.hi.value : x > iv.hi.value))
      throw Error("internal: check() witness fails a bound");
  }
  return assignment;
}

FeasResult feasible(const ConstraintSystem& sys) {
  SolveState st;
  if (!st.add(sys)) return FeasResult{};
  auto pt = st.check();
  if (!pt) return FeasResult{};
  for (const Constraint& c : sys) {
    Rat val = c.e.eval(*pt);
    bool ok = c.rel == Rel::eq ? val == 0 : c.rel == Rel::ge ? val >= 0 : val > 0;
    if (!ok) throw Error("internal: feasibility witness violates " + c.to_string());
  }
  return FeasResult{true, std::move(*pt)};
}

Sign implied_sign(const ConstraintSystem& sys, const LinExpr& e) {
  SolveState st;
  st.add(sys);
  LinExpr r = st.reduce(e);
  if (r.is_constant() && !st.infeasible())
    return r.c > 0 ? Sign::positive : r.c < 0 ? Sign::negative : Sign::zero;

  auto with = [&](const LinExpr& extra, Rel rel) {
    ConstraintSystem s = sys;
    s.push_back({extra, rel});
    return feasible(s).feasible;
  };
  LinExpr neg = e;
  neg *= Rat(-1);
  if (!with(neg, Rel::ge)) return Sign::positive;   // e <= 0 impossible
  if (!with(e, Rel::ge)) return Sign::negative;     // e >= 0 impossible
  if (!with(e, Rel::gt) && !with(neg, Rel::gt)) return Sign::zero;
  return Sign::unknown;
}

}  // namespace qr
