#pragma once

#include <vector>

#include "qr/coevent.hpp"
#include "qr/event.hpp"
#include "qr/qmeasure.hpp"
#include "qr/rat.hpp"

namespace qr {

// f : Omega -> Q, v[i-1] = f(w_i).
struct Density1 {
  int n = 0;
  std::vector<Rat> v;

  const Rat& operator()(int omega) const { return v[omega - 1]; }
  bool operator==(const Density1&) const = default;
};

inline int pair_count(int n) { return n * (n + 1) / 2; }

// Index of the unordered pair {i,j} (1 <= i <= j <= n) in row-major diagonal
// order: (1,1),(1,2),...,(1,n),(2,2),...,(n,n).
int pair_index(int n, int i, int j);

// Symmetric f : Omega x Omega -> Q stored on unordered pairs.
struct Density2 {
  int n = 0;
  std::vector<Rat> v;  // size pair_count(n)

  const Rat& operator()(int i, int j) const;
  Rat& at(int i, int j);
  bool operator==(const Density2&) const = default;
};

// Layered integral of a nonnegative density against a coevent:
//   sum_j (a_j - a_{j-1}) * phi({f >= a_j})
// over the ascending distinct positive values a_1 < ... < a_k of f, a_0 = 0.
// Zero-valued points never enter a level set. Throws DensityError if f has a
// negative value. Not additive in f, not additive in phi, not grade-2 additive
// in the event argument; positively homogeneous and nonnegative.
Rat q_integral(const Density1& f, const CoeventTable& phi);

// Same with f cut off outside A (only members of A contribute levels).
Rat q_integral_over(const Density1& f, const CoeventTable& phi, EventMask a);

// Two-stage integral with both stages over A:
//   g_A(w') = integral over A of f(.,w') dphi;  result = integral over A of g_A dphi.
Rat iterated_2gen(const Density2& f, const CoeventTable& phi, EventMask a);

// Inner stage over A, outer stage over the whole space.
Rat iterated_actualize(const Density2& f, const CoeventTable& phi, EventMask a);

// The induced set functions A -> integral, tabulated on every event.
QMeasure induced_gen1(const Density1& f, const CoeventTable& phi);
QMeasure induced_gen2(const Density2& f, const CoeventTable& phi);
QMeasure induced_actualize(const Density2& f, const CoeventTable& phi);

}  // namespace qr
