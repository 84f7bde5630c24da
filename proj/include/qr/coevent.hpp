#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qr/event.hpp"

namespace qr {

// Truth table of a coevent phi : 2^Omega -> {0,1}. Bit A of `bits` is phi(A).
// Invariant: phi(empty) = 0, i.e. bit 0 is clear. Supports n <= 5.
struct CoeventTable {
  int n = 0;
  uint32_t bits = 0;

  bool operator==(const CoeventTable&) const = default;
  int eval(EventMask a) const { return int((bits >> a) & 1u); }
};

// The same coevent as a GF(2) polynomial: a xor of monomials, each monomial
// w_{i1}*...*w_{ik} stored as the nonempty mask {i1..ik}. A monomial evaluates
// to 1 on A exactly when its mask is a subset of A; the polynomial value is the
// parity of the monomials contained in A. Monomials are kept in canonical order:
// ascending cardinality, then lexicographic member list.
struct CoeventPoly {
  int n = 0;
  std::vector<EventMask> monomials;

  bool operator==(const CoeventPoly&) const = default;
};

int eval_coevent(const CoeventTable& t, EventMask a);
int eval_coevent(const CoeventPoly& p, EventMask a);

// Subset-parity (zeta/Moebius over GF(2)) transform; an involution, so the two
// directions share one kernel. Round-trips exactly.
CoeventPoly table_to_poly(const CoeventTable& t);
CoeventTable poly_to_table(const CoeventPoly& p);

void sort_monomials(std::vector<EventMask>& ms);

// Pointwise xor and product; both stay inside the coevent space (bit 0 clear).
CoeventTable coevent_xor(const CoeventTable& a, const CoeventTable& b);
CoeventTable coevent_and(const CoeventTable& a, const CoeventTable& b);

CoeventTable coevent_zero(int n);
// The unit coevent: 1 on every nonempty event.
CoeventTable coevent_one(int n);
// The evaluation map w*: A -> [omega in A].
CoeventTable evaluation_map(int n, int omega);

struct CoeventClass {
  bool classical = false;
  bool unital = false;
  bool additive = false;
  bool multiplicative = false;
  bool quadratic = false;

  bool operator==(const CoeventClass&) const = default;
};

// Structural classification on the polynomial form. Conventions for the zero
// coevent: not additive, not multiplicative, quadratic.
CoeventClass classify(const CoeventTable& t);

// Same predicates decided by the defining identities: unital phi(Omega)=1;
// additive phi(A u B) = phi(A) xor phi(B) over all disjoint pairs; multiplicative
// phi(A n B) = phi(A)phi(B) over all pairs; quadratic via the disjoint-triple
// identity; classical = unital + additive + multiplicative. Zero-coevent
// conventions match classify().
CoeventClass classify_by_identities(const CoeventTable& t);

// The m >= 3 interference expansion, checked over every partition of every
// event into m >= 3 disjoint nonempty blocks:
//   phi(A1 u ... u Am) = xor_{i<j} phi(Ai u Aj)  xor  [m odd] xor_i phi(Ai).
// Equivalent to quadratic.
bool check_eq21(const CoeventTable& t);

// The unique quadratic coevent with the prescribed singleton and doubleton
// values. singletons[i-1] = phi({i}); doubletons indexed by (i,j), i<j, in
// lexicographic order: (1,2),(1,3),...,(n-1,n).
CoeventTable quadratic_from_values(int n, const std::vector<int>& singletons,
                                   const std::vector<int>& doubletons);

enum class ClassFilter { all, classical, unital, additive, multiplicative, quadratic };

// All coevents on n points (2^(2^n - 1) of them), or exactly the members of one
// class. Class-filtered enumeration is structural in polynomial space. n <= 4.
std::vector<CoeventTable> enumerate_coevents(int n, ClassFilter filter = ClassFilter::all);

// Grammar: sum of products over atoms w1..wn | 0 | 1, where * binds tighter
// than + and + means xor. Spaces allowed. Products of evaluation maps are
// monomials; the literals fold (0 absorbs, 1 is the unit coevent).
CoeventTable parse_coevent(const std::string& expr, int n);

// Canonical polynomial rendering: "0" for zero, else monomials joined with "+",
// members joined with "*", e.g. "w1+w2*w3".
std::string coevent_to_string(const CoeventPoly& p);
std::string coevent_to_string(const CoeventTable& t);

}  // namespace qr
