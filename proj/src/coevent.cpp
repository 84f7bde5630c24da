#include "qr/coevent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "qr/error.hpp"

namespace qr {

namespace {

void require_n(int n, int max = 5) {
  if (n < 1 || n > max)
    throw Error("point count " + std::to_string(n) + " out of range 1.." + std::to_string(max));
}

std::vector<int> members(EventMask a, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (contains(a, i)) out.push_back(i);
  return out;
}

bool monomial_less(EventMask a, EventMask b, int n) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return members(a, n) < members(b, n);
}

// In-place butterfly: out[A] = xor over subsets S of A of in[S].
uint32_t subset_parity(uint32_t bits, int n) {
  for (int j = 0; j < n; ++j)
    for (EventMask a = 0; a < full_mask(n) + 1u; ++a)
      if (contains(a, j + 1)) bits ^= ((bits >> (a ^ (EventMask{1} << j))) & 1u) << a;
  return bits;
}

}  // namespace

int eval_coevent(const CoeventTable& t, EventMask a) { return t.eval(a); }

int eval_coevent(const CoeventPoly& p, EventMask a) {
  int v = 0;
  for (EventMask m : p.monomials) v ^= subset_of(m, a) ? 1 : 0;
  return v;
}

CoeventPoly table_to_poly(const CoeventTable& t) {
  require_n(t.n);
  CoeventPoly p{t.n, {}};
  uint32_t c = subset_parity(t.bits, t.n);
  for (EventMask m = 1; m <= full_mask(t.n); ++m)
    if ((c >> m) & 1u) p.monomials.push_back(m);
  sort_monomials(p.monomials);
  return p;
}

CoeventTable poly_to_table(const CoeventPoly& p) {
  require_n(p.n);
  uint32_t ind = 0;
  for (EventMask m : p.monomials) {
    if (m == 0 || !subset_of(m, full_mask(p.n))) throw Error("monomial out of range");
    ind |= uint32_t{1} << m;
  }
  return CoeventTable{p.n, subset_parity(ind, p.n)};
}

void sort_monomials(std::vector<EventMask>& ms) {
  int n = 5;
  std::sort(ms.begin(), ms.end(), [n](EventMask a, EventMask b) { return monomial_less(a, b, n); });
}

CoeventTable coevent_xor(const CoeventTable& a, const CoeventTable& b) {
  if (a.n != b.n) throw Error("coevent size mismatch");
  return CoeventTable{a.n, a.bits ^ b.bits};
}

CoeventTable coevent_and(const CoeventTable& a, const CoeventTable& b) {
  if (a.n != b.n) throw Error("coevent size mismatch");
  return CoeventTable{a.n, a.bits & b.bits};
}

CoeventTable coevent_zero(int n) {
  require_n(n);
  return CoeventTable{n, 0};
}

CoeventTable coevent_one(int n) {
  require_n(n);
  uint32_t all = (full_mask(n) == 31u) ? 0xFFFFFFFFu : ((uint32_t{1} << (full_mask(n) + 1)) - 1);
  return CoeventTable{n, all & ~uint32_t{1}};
}

CoeventTable evaluation_map(int n, int omega) {
  require_n(n);
  if (omega < 1 || omega > n) throw Error("evaluation map point out of range");
  uint32_t bits = 0;
  for (EventMask a = 1; a <= full_mask(n); ++a)
    if (contains(a, omega)) bits |= uint32_t{1} << a;
  return CoeventTable{n, bits};
}

CoeventClass classify(const CoeventTable& t) {
  CoeventPoly p = table_to_poly(t);
  CoeventClass c;
  c.unital = t.eval(full_mask(t.n)) == 1;
  bool empty = p.monomials.empty();
  c.additive = !empty && std::all_of(p.monomials.begin(), p.monomials.end(),
                                     [](EventMask m) { return popcount(m) == 1; });
  c.multiplicative = p.monomials.size() == 1;
  c.quadratic = std::all_of(p.monomials.begin(), p.monomials.end(),
                            [](EventMask m) { return popcount(m) <= 2; });
  c.classical = c.additive && c.multiplicative;
  return c;
}

CoeventClass classify_by_identities(const CoeventTable& t) {
  require_n(t.n);
  const EventMask full = full_mask(t.n);
  CoeventClass c;
  c.unital = t.eval(full) == 1;

  bool add_identity = true;
  for (EventMask a = 0; a <= full && add_identity; ++a)
    for (EventMask b = 0; b <= full; ++b) {
      if ((a & b) != 0) continue;
      if (t.eval(a | b) != (t.eval(a) ^ t.eval(b))) {
        add_identity = false;
        break;
      }
    }
  c.additive = add_identity && t.bits != 0;

  bool mult_identity = true;
  for (EventMask a = 0; a <= full && mult_identity; ++a)
    for (EventMask b = 0; b <= full; ++b)
      if (t.eval(a & b) != (t.eval(a) & t.eval(b))) {
        mult_identity = false;
        break;
      }
  c.multiplicative = mult_identity && t.bits != 0;

  bool quad = true;
  for (EventMask a = 0; a <= full && quad; ++a)
    for (EventMask b = 0; b <= full && quad; ++b) {
      if ((a & b) != 0) continue;
      for (EventMask d = 0; d <= full; ++d) {
        if ((d & (a | b)) != 0) continue;
        int lhs = t.eval(a | b | d);
        int rhs = t.eval(a | b) ^ t.eval(a | d) ^ t.eval(b | d) ^ t.eval(a) ^ t.eval(b) ^
                  t.eval(d);
        if (lhs != rhs) {
          quad = false;
          break;
        }
      }
    }
  c.quadratic = quad;

  c.classical = c.unital && add_identity && mult_identity;
  return c;
}

namespace {

// All partitions of `elems` into nonempty blocks, via "each element joins an
// existing block or opens a new one".
void partitions_rec(const std::vector<int>& elems, std::size_t idx,
                    std::vector<EventMask>& blocks,
                    const std::function<void(const std::vector<EventMask>&)>& fn) {
  if (idx == elems.size()) {
    fn(blocks);
    return;
  }
  EventMask bit = EventMask{1} << (elems[idx] - 1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b] |= bit;
    partitions_rec(elems, idx + 1, blocks, fn);
    blocks[b] &= ~bit;
  }
  blocks.push_back(bit);
  partitions_rec(elems, idx + 1, blocks, fn);
  blocks.pop_back();
}

}  // namespace

bool check_eq21(const CoeventTable& t) {
  require_n(t.n);
  bool ok = true;
  for (EventMask e = 0; e <= full_mask(t.n) && ok; ++e) {
    if (popcount(e) < 3) continue;
    std::vector<EventMask> blocks;
    auto elems = members(e, t.n);
    partitions_rec(elems, 0, blocks, [&](const std::vector<EventMask>& bs) {
      std::size_t m = bs.size();
      if (m < 3 || !ok) return;
      int rhs = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) rhs ^= t.eval(bs[i] | bs[j]);
      if (m % 2 == 1)
        for (EventMask b : bs) rhs ^= t.eval(b);
      if (t.eval(e) != rhs) ok = false;
    });
  }
  return ok;
}

CoeventTable quadratic_from_values(int n, const std::vector<int>& singletons,
                                   const std::vector<int>& doubletons) {
  require_n(n);
  std::size_t np = std::size_t(n) * (n - 1) / 2;
  if (singletons.size() != std::size_t(n) || doubletons.size() != np)
    throw Error("quadratic_from_values: wrong value count");
  for (int v : singletons)
    if (v != 0 && v != 1) throw Error("quadratic_from_values: values must be 0/1");
  for (int v : doubletons)
    if (v != 0 && v != 1) throw Error("quadratic_from_values: values must be 0/1");

  CoeventPoly p{n, {}};
  for (int i = 1; i <= n; ++i)
    if (singletons[i - 1]) p.monomials.push_back(EventMask{1} << (i - 1));
  std::size_t k = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++k) {
      int coeff = doubletons[k] ^ singletons[i - 1] ^ singletons[j - 1];
      if (coeff) p.monomials.push_back((EventMask{1} << (i - 1)) | (EventMask{1} << (j - 1)));
    }
  sort_monomials(p.monomials);
  return poly_to_table(p);
}

std::vector<CoeventTable> enumerate_coevents(int n, ClassFilter filter) {
  require_n(n, 4);
  std::vector<CoeventTable> out;
  auto from_monomial_pool = [&](const std::vector<EventMask>& pool, auto keep) {
    for (uint32_t sel = 0; sel < (uint32_t{1} << pool.size()); ++sel) {
      if (!keep(sel)) continue;
      CoeventPoly p{n, {}};
      for (std::size_t i = 0; i < pool.size(); ++i)
        if ((sel >> i) & 1u) p.monomials.push_back(pool[i]);
      sort_monomials(p.monomials);
      out.push_back(poly_to_table(p));
    }
  };
  auto any = [](uint32_t) { return true; };
  auto nonzero = [](uint32_t sel) { return sel != 0; };

  switch (filter) {
    case ClassFilter::all: {
      for (uint32_t k = 0; k < (uint32_t{1} << (full_mask(n))); ++k)
        out.push_back(CoeventTable{n, k << 1});
      return out;  // already ascending by table bits
    }
    case ClassFilter::classical: {
      for (int i = 1; i <= n; ++i) out.push_back(evaluation_map(n, i));
      break;
    }
    case ClassFilter::unital: {
      // Unital iff the monomial count is odd: every monomial is contained in Omega.
      std::vector<EventMask> pool;
      for (EventMask m = 1; m <= full_mask(n); ++m) pool.push_back(m);
      from_monomial_pool(pool, [](uint32_t sel) { return popcount(sel) % 2 == 1; });
      break;
    }
    case ClassFilter::additive: {
      std::vector<EventMask> pool;
      for (int i = 1; i <= n; ++i) pool.push_back(EventMask{1} << (i - 1));
      from_monomial_pool(pool, nonzero);
      break;
    }
    case ClassFilter::multiplicative: {
      for (EventMask m = 1; m <= full_mask(n); ++m)
        out.push_back(poly_to_table(CoeventPoly{n, {m}}));
      break;
    }
    case ClassFilter::quadratic: {
      std::vector<EventMask> pool;
      for (EventMask m = 1; m <= full_mask(n); ++m)
        if (popcount(m) <= 2) pool.push_back(m);
      from_monomial_pool(pool, any);
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CoeventTable& a, const CoeventTable& b) { return a.bits < b.bits; });
  return out;
}

namespace {

struct ExprParser {
  const std::string& s;
  int n;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  CoeventTable atom() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of coevent expression");
    char c = s[pos];
    if (c == '0') {
      ++pos;
      return coevent_zero(n);
    }
    if (c == '1') {
      ++pos;
      return coevent_one(n);
    }
    if (c == 'w') {
      ++pos;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw ParseError("expected an index after 'w'");
      int i = std::stoi(s.substr(start, pos - start));
      if (i < 1 || i > n)
        throw ParseError("w" + std::to_string(i) + " out of range 1.." + std::to_string(n));
      return evaluation_map(n, i);
    }
    throw ParseError(std::string("unexpected character '") + c + "' in coevent expression");
  }

  CoeventTable product() {
    CoeventTable t = atom();
    while (eat('*')) t = coevent_and(t, atom());
    return t;
  }

  CoeventTable sum() {
    CoeventTable t = product();
    while (eat('+')) t = coevent_xor(t, product());
    return t;
  }
};

}  // namespace

CoeventTable parse_coevent(const std::string& expr, int n) {
  require_n(n);
  ExprParser p{expr, n};
  CoeventTable t = p.sum();
  p.skip_ws();
  if (p.pos != expr.size())
    throw ParseError("trailing input in coevent expression at '" + expr.substr(p.pos) + "'");
  return t;
}

std::string coevent_to_string(const CoeventPoly& p) {
  if (p.monomials.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.monomials.size(); ++k) {
    if (k) out += "+";
    auto ms = members(p.monomials[k], p.n);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (i) out += "*";
      out += "w" + std::to_string(ms[i]);
    }
  }
  return out;
}

std::string coevent_to_string(const CoeventTable& t) { return coevent_to_string(table_to_poly(t)); }

}  // namespace qr
