#include "qr/linexpr.hpp"

#include <algorithm>

#include "qr/error.hpp"

namespace qr {

namespace {
constexpr uint32_t kKindShift = 28;
}

VarId VarId::d1(int omega) { return VarId{uint32_t(omega)}; }

VarId VarId::d2(int i, int j) {
  if (i > j) std::swap(i, j);
  return VarId{(uint32_t{1} << kKindShift) | (uint32_t(i) << 8) | uint32_t(j)};
}

VarId VarId::mu(EventMask a) { return VarId{(uint32_t{2} << kKindShift) | a}; }

VarId::Kind VarId::kind() const { return Kind(code >> kKindShift); }

int VarId::omega() const { return int(code & 0xFF); }

std::pair<int, int> VarId::pair() const { return {int((code >> 8) & 0xFF), int(code & 0xFF)}; }

EventMask VarId::event() const { return code & ((uint32_t{1} << kKindShift) - 1); }

std::string VarId::name() const {
  switch (kind()) {
    case Kind::d1:
      return "f(" + std::to_string(omega()) + ")";
    case Kind::d2: {
      auto [i, j] = pair();
      return "f(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    case Kind::mu:
      return "mu(" + event_to_string(event()) + ")";
  }
  return "?";
}

LinExpr LinExpr::constant(const Rat& r) {
  LinExpr e;
  e.c = r;
  return e;
}

LinExpr LinExpr::var(VarId v, const Rat& coeff) {
  LinExpr e;
  if (coeff != 0) e.terms.emplace_back(v, coeff);
  return e;
}

const Rat* LinExpr::coeff(VarId v) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), v,
                             [](const auto& t, VarId x) { return t.first < x; });
  if (it != terms.end() && it->first == v) return &it->second;
  return nullptr;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  std::vector<std::pair<VarId, Rat>> merged;
  merged.reserve(terms.size() + o.terms.size());
  std::size_t i = 0, j = 0;
  while (i < terms.size() || j < o.terms.size()) {
    if (j == o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first)) {
      merged.push_back(terms[i++]);
    } else if (i == terms.size() || o.terms[j].first < terms[i].first) {
      merged.push_back(o.terms[j++]);
    } else {
      Rat s = terms[i].second + o.terms[j].second;
      if (s != 0) merged.emplace_back(terms[i].first, s);
      ++i;
      ++j;
    }
  }
  terms = std::move(merged);
  c += o.c;
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  LinExpr neg = o;
  neg *= Rat(-1);
  return *this += neg;
}

LinExpr& LinExpr::operator*=(const Rat& k) {
  if (k == 0) {
    terms.clear();
    c = 0;
    return *this;
  }
  for (auto& t : terms) t.second *= k;
  c *= k;
  return *this;
}

void LinExpr::substitute(VarId v, const LinExpr& e) {
  const Rat* a = coeff(v);
  if (!a) return;
  Rat k = *a;
  terms.erase(std::remove_if(terms.begin(), terms.end(),
                             [v](const auto& t) { return t.first == v; }),
              terms.end());
  LinExpr scaled = e;
  scaled *= k;
  *this += scaled;
}

Rat LinExpr::eval(const std::map<VarId, Rat>& assignment) const {
  Rat total = c;
  for (const auto& [v, a] : terms) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw Error("eval: no value for " + v.name());
    total += a * it->second;
  }
  return total;
}

std::string LinExpr::to_string() const {
  if (terms.empty()) return rat_to_string(c);
  std::string out;
  for (const auto& [v, a] : terms) {
    if (a < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    Rat mag = abs(a);
    if (mag != 1) out += rat_to_string(mag) + "*";
    out += v.name();
  }
  if (c != 0) out += (c < 0 ? "-" : "+") + rat_to_string(abs(c));
  return out;
}

std::string Constraint::to_string() const {
  const char* rel_s = rel == Rel::eq ? " = 0" : rel == Rel::ge ? " >= 0" : " > 0";
  return e.to_string() + rel_s;
}

}  // namespace qr
