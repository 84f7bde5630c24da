#pragma once

#include <utility>
#include <vector>

#include "qr/coevent.hpp"
#include "qr/event.hpp"
#include "qr/rat.hpp"

namespace qr {

// A set function on 2^Omega with rational values, indexed by event mask.
// validate() checks it is a q-measure: mu(empty) = 0, mu >= 0, and grade-2
// additivity over every disjoint triple of nonempty events.
struct QMeasure {
  int n = 0;
  std::vector<Rat> v;  // size 1 << n

  const Rat& operator()(EventMask a) const { return v[a]; }
  Rat& operator()(EventMask a) { return v[a]; }
  bool operator==(const QMeasure&) const = default;
};

// Throws MeasureError on the first violation, in the order: nonzero empty,
// negative value (ascending mask), grade-2 triple (ascending (A,B,C)).
// The triple condition and the m >= 3 expansion
//   mu({w_1..w_m}) = sum_{i<j} mu({w_i,w_j}) - (m-2) sum_i mu({w_i})
// are both checked and must agree; an expansion failure that no triple
// explains is reported as an internal inconsistency.
void validate(const QMeasure& m);

// Builds the full table from singleton and doubleton values via the expansion
// above, then validates. singletons[i-1] = mu({i}); pairs in lexicographic
// (i,j) order. Throws MeasureError{negative_extension} naming the event if an
// extended value is negative.
QMeasure extend_from_pairs(int n, const std::vector<Rat>& singletons,
                           const std::vector<Rat>& pairs);

struct RegularityReport {
  bool r1 = true;  // mu(A)=0 implies mu(A u B)=mu(B), all disjoint A,B
  bool r2 = true;  // mu(A u B)=0 implies mu(A)=mu(B), all disjoint A,B
  std::vector<std::pair<EventMask, EventMask>> r1_witnesses;
  std::vector<std::pair<EventMask, EventMask>> r2_witnesses;

  bool regular() const { return r1 && r2; }
};

RegularityReport is_regular(const QMeasure& m);

// {A : mu(A) = 0} in ascending mask order (the empty event is always there).
std::vector<EventMask> precluded_events(const QMeasure& m);

struct PreclusivityResult {
  bool preclusive = true;
  EventMask witness = 0;  // first precluded event with phi(A) = 1, if any
};

// phi is mu-preclusive when phi vanishes on every precluded event.
PreclusivityResult is_preclusive(const CoeventTable& phi, const QMeasure& m);

// a * delta_omega: mass a on every event containing omega. Requires a > 0.
QMeasure dirac(const Rat& a, int omega, int n);

}  // namespace qr
