#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qr/event.hpp"
#include "qr/rat.hpp"

namespace qr {

// Unknowns of a generation problem. The numeric code orders variables
// (density-1 before density-2 before measure; within a kind, by index), and
// that order drives deterministic branch exploration.
struct VarId {
  uint32_t code = 0;

  static VarId d1(int omega);             // f(i)
  static VarId d2(int i, int j);          // f(i,j), stored with i <= j
  static VarId mu(EventMask a);           // mu(A)

  enum class Kind { d1, d2, mu };
  Kind kind() const;
  int omega() const;                      // d1
  std::pair<int, int> pair() const;       // d2
  EventMask event() const;                // mu

  std::string name() const;               // "f(2)", "f(1,3)", "mu({1,2})"
  auto operator<=>(const VarId&) const = default;
};

// Affine expression sum(coeff * var) + constant, terms sorted by VarId with no
// zero coefficients.
struct LinExpr {
  std::vector<std::pair<VarId, Rat>> terms;
  Rat c = 0;

  static LinExpr constant(const Rat& r);
  static LinExpr var(VarId v, const Rat& coeff = 1);

  bool is_constant() const { return terms.empty(); }
  bool is_zero() const { return terms.empty() && c == 0; }
  const Rat* coeff(VarId v) const;

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(const Rat& k);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, const Rat& k) { return a *= k; }

  // Replace v by e everywhere.
  void substitute(VarId v, const LinExpr& e);

  Rat eval(const std::map<VarId, Rat>& assignment) const;
  std::string to_string() const;  // e.g. "f(1,1)-f(1,2)+2"
  bool operator==(const LinExpr&) const = default;
};

enum class Rel { eq, ge, gt };  // e = 0, e >= 0, e > 0

struct Constraint {
  LinExpr e;
  Rel rel = Rel::ge;

  std::string to_string() const;
};

using ConstraintSystem = std::vector<Constraint>;

}  // namespace qr
