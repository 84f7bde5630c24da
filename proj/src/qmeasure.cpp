#include "qr/qmeasure.hpp"

#include "qr/error.hpp"

namespace qr {

namespace {

void check_shape(const QMeasure& m) {
  if (m.n < 1 || m.n > 5 || m.v.size() != (std::size_t{1} << m.n))
    throw Error("measure table has wrong size for n=" + std::to_string(m.n));
}

// sum_{i<j in S} mu({i,j}) - (|S|-2) * sum_{i in S} mu({i})
Rat expansion_value(const QMeasure& m, EventMask s) {
  auto bit = [](int i) { return EventMask{1} << (i - 1); };
  Rat pairs = 0, singles = 0;
  for (int i = 1; i <= m.n; ++i) {
    if (!contains(s, i)) continue;
    singles += m.v[bit(i)];
    for (int j = i + 1; j <= m.n; ++j)
      if (contains(s, j)) pairs += m.v[bit(i) | bit(j)];
  }
  return pairs - Rat(popcount(s) - 2) * singles;
}

}  // namespace

void validate(const QMeasure& m) {
  check_shape(m);
  if (m.v[0] != 0)
    throw MeasureError(MeasureError::Kind::nonzero_empty, "measure of the empty event is nonzero");
  for (EventMask a = 1; a <= full_mask(m.n); ++a)
    if (m.v[a] < 0)
      throw MeasureError(MeasureError::Kind::negative_value,
                         "negative measure on " + event_to_string(a), a);

  const EventMask full = full_mask(m.n);
  bool triple_ok = true;
  EventMask wa = 0, wb = 0, wc = 0;
  for (EventMask a = 1; a <= full && triple_ok; ++a)
    for (EventMask b = a + 1; b <= full && triple_ok; ++b) {
      if ((a & b) != 0) continue;
      for (EventMask c = b + 1; c <= full; ++c) {
        if ((c & (a | b)) != 0) continue;
        Rat lhs = m.v[a | b | c];
        Rat rhs = m.v[a | b] + m.v[a | c] + m.v[b | c] - m.v[a] - m.v[b] - m.v[c];
        if (lhs != rhs) {
          triple_ok = false;
          wa = a;
          wb = b;
          wc = c;
          break;
        }
      }
    }

  bool expansion_ok = true;
  for (EventMask s = 1; s <= full; ++s) {
    if (popcount(s) < 3) continue;
    if (m.v[s] != expansion_value(m, s)) {
      expansion_ok = false;
      break;
    }
  }

  if (triple_ok != expansion_ok)
    throw Error("internal: grade-2 triple and expansion checks disagree");
  if (!triple_ok)
    throw MeasureError(MeasureError::Kind::not_grade2,
                       "grade-2 additivity fails on " + event_to_string(wa) + ", " +
                           event_to_string(wb) + ", " + event_to_string(wc),
                       wa, wb, wc);
}

QMeasure extend_from_pairs(int n, const std::vector<Rat>& singletons,
                           const std::vector<Rat>& pairs) {
  if (n < 1 || n > 5) throw Error("point count out of range");
  if (singletons.size() != std::size_t(n) || pairs.size() != std::size_t(n) * (n - 1) / 2)
    throw Error("extend_from_pairs: wrong value count");

  QMeasure m{n, std::vector<Rat>(std::size_t{1} << n, Rat(0))};
  for (int i = 1; i <= n; ++i) m.v[EventMask{1} << (i - 1)] = singletons[i - 1];
  std::size_t k = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++k)
      m.v[(EventMask{1} << (i - 1)) | (EventMask{1} << (j - 1))] = pairs[k];
  for (EventMask s = 1; s <= full_mask(n); ++s) {
    if (popcount(s) < 3) continue;
    m.v[s] = expansion_value(m, s);
    if (m.v[s] < 0)
      throw MeasureError(MeasureError::Kind::negative_extension,
                         "extension is negative on " + event_to_string(s), s);
  }
  validate(m);
  return m;
}

RegularityReport is_regular(const QMeasure& m) {
  check_shape(m);
  RegularityReport rep;
  const EventMask full = full_mask(m.n);
  for (EventMask a = 0; a <= full; ++a)
    for (EventMask b = 0; b <= full; ++b) {
      if ((a & b) != 0) continue;
      if (m.v[a] == 0 && m.v[a | b] != m.v[b]) {
        rep.r1 = false;
        rep.r1_witnesses.emplace_back(a, b);
      }
      if (a <= b && m.v[a | b] == 0 && m.v[a] != m.v[b]) {
        rep.r2 = false;
        rep.r2_witnesses.emplace_back(a, b);
      }
    }
  return rep;
}

std::vector<EventMask> precluded_events(const QMeasure& m) {
  check_shape(m);
  std::vector<EventMask> out;
  for (EventMask a = 0; a <= full_mask(m.n); ++a)
    if (m.v[a] == 0) out.push_back(a);
  return out;
}

PreclusivityResult is_preclusive(const CoeventTable& phi, const QMeasure& m) {
  check_shape(m);
  if (phi.n != m.n) throw Error("coevent and measure size mismatch");
  for (EventMask a : precluded_events(m))
    if (phi.eval(a) == 1) return PreclusivityResult{false, a};
  return PreclusivityResult{};
}

QMeasure dirac(const Rat& a, int omega, int n) {
  if (n < 1 || n > 5) throw Error("point count out of range");
  if (omega < 1 || omega > n) throw Error("dirac point out of range");
  if (a <= 0) throw Error("dirac mass must be positive");
  QMeasure m{n, std::vector<Rat>(std::size_t{1} << n, Rat(0))};
  for (EventMask s = 1; s <= full_mask(n); ++s)
    if (contains(s, omega)) m.v[s] = a;
  return m;
}

}  // namespace qr
