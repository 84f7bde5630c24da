#include "qr/qintegral.hpp"

#include <algorithm>
#include <utility>

#include "qr/error.hpp"

namespace qr {

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n) throw Error("pair index out of range");
  return (i - 1) * (2 * n - i + 2) / 2 + (j - i);
}

const Rat& Density2::operator()(int i, int j) const { return v[pair_index(n, i, j)]; }

Rat& Density2::at(int i, int j) { return v[pair_index(n, i, j)]; }

namespace {

void check_density1(const Density1& f) {
  if (f.n < 1 || f.n > 5 || f.v.size() != std::size_t(f.n))
    throw Error("density has wrong size for n=" + std::to_string(f.n));
  for (const Rat& x : f.v)
    if (x < 0) throw DensityError("density has a negative value");
}

void check_density2(const Density2& f) {
  if (f.n < 1 || f.n > 5 || f.v.size() != std::size_t(pair_count(f.n)))
    throw Error("pair density has wrong size for n=" + std::to_string(f.n));
  for (const Rat& x : f.v)
    if (x < 0) throw DensityError("pair density has a negative value");
}

// Core layered sum over the points listed in (value, mask) pairs; zero values
// are dropped before layering.
Rat layered(std::vector<std::pair<Rat, EventMask>> pts, const CoeventTable& phi) {
  pts.erase(std::remove_if(pts.begin(), pts.end(),
                           [](const auto& p) { return p.first == 0; }),
            pts.end());
  std::sort(pts.begin(), pts.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  // Merge equal values, then walk levels ascending with suffix masks.
  std::vector<std::pair<Rat, EventMask>> groups;
  for (const auto& p : pts) {
    if (!groups.empty() && groups.back().first == p.first)
      groups.back().second |= p.second;
    else
      groups.push_back(p);
  }
  std::vector<EventMask> suffix(groups.size() + 1, 0);
  for (std::size_t j = groups.size(); j-- > 0;)
    suffix[j] = suffix[j + 1] | groups[j].second;

  Rat total = 0, prev = 0;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    total += (groups[j].first - prev) * phi.eval(suffix[j]);
    prev = groups[j].first;
  }
  return total;
}

}  // namespace

Rat q_integral_over(const Density1& f, const CoeventTable& phi, EventMask a) {
  check_density1(f);
  if (phi.n != f.n) throw Error("density and coevent size mismatch");
  std::vector<std::pair<Rat, EventMask>> pts;
  for (int i = 1; i <= f.n; ++i)
    if (contains(a, i)) pts.emplace_back(f(i), EventMask{1} << (i - 1));
  return layered(std::move(pts), phi);
}

Rat q_integral(const Density1& f, const CoeventTable& phi) {
  return q_integral_over(f, phi, full_mask(f.n));
}

namespace {

Rat iterated(const Density2& f, const CoeventTable& phi, EventMask inner, EventMask outer) {
  check_density2(f);
  if (phi.n != f.n) throw Error("density and coevent size mismatch");
  Density1 g{f.n, std::vector<Rat>(f.n, Rat(0))};
  for (int wp = 1; wp <= f.n; ++wp) {
    if (!contains(outer, wp)) continue;
    Density1 col{f.n, std::vector<Rat>(f.n, Rat(0))};
    for (int w = 1; w <= f.n; ++w)
      if (contains(inner, w)) col.v[w - 1] = f(w, wp);
    g.v[wp - 1] = q_integral_over(col, phi, inner);
  }
  return q_integral_over(g, phi, outer);
}

}  // namespace

Rat iterated_2gen(const Density2& f, const CoeventTable& phi, EventMask a) {
  return iterated(f, phi, a, a);
}

Rat iterated_actualize(const Density2& f, const CoeventTable& phi, EventMask a) {
  return iterated(f, phi, a, full_mask(f.n));
}

QMeasure induced_gen1(const Density1& f, const CoeventTable& phi) {
  QMeasure m{f.n, std::vector<Rat>(std::size_t{1} << f.n, Rat(0))};
  for (EventMask a = 0; a <= full_mask(f.n); ++a) m.v[a] = q_integral_over(f, phi, a);
  return m;
}

QMeasure induced_gen2(const Density2& f, const CoeventTable& phi) {
  QMeasure m{f.n, std::vector<Rat>(std::size_t{1} << f.n, Rat(0))};
  for (EventMask a = 0; a <= full_mask(f.n); ++a) m.v[a] = iterated_2gen(f, phi, a);
  return m;
}

QMeasure induced_actualize(const Density2& f, const CoeventTable& phi) {
  QMeasure m{f.n, std::vector<Rat>(std::size_t{1} << f.n, Rat(0))};
  for (EventMask a = 0; a <= full_mask(f.n); ++a) m.v[a] = iterated_actualize(f, phi, a);
  return m;
}

}  // namespace qr
