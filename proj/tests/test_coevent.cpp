#include <doctest.h>

#include <random>

#include "qr/coevent.hpp"
#include "qr/error.hpp"

using namespace qr;

namespace {

// Direct-definition oracle: the polynomial value on A is the parity of the
// monomials contained in A.
int poly_eval_oracle(const CoeventPoly& p, EventMask a) {
  int v = 0;
  for (EventMask m : p.monomials) v ^= (m & a) == m;
  return v;
}

}  // namespace

TEST_CASE("transform round-trips and matches the subset-parity definition") {
  for (int n = 2; n <= 3; ++n) {
    for (uint32_t k = 0; k < (uint32_t{1} << full_mask(n)); ++k) {
      CoeventTable t{n, k << 1};
      CoeventPoly p = table_to_poly(t);
      CHECK(poly_to_table(p) == t);
      for (EventMask a = 0; a <= full_mask(n); ++a) {
        CHECK(eval_coevent(p, a) == t.eval(a));
        CHECK(eval_coevent(p, a) == poly_eval_oracle(p, a));
      }
    }
  }
  std::mt19937_64 rng(20260822);
  for (int trial = 0; trial < 500; ++trial) {
    CoeventTable t{4, uint32_t(rng()) & 0xFFFEu};
    CHECK(poly_to_table(table_to_poly(t)) == t);
  }
}

TEST_CASE("monomials come out sorted by cardinality then members") {
  CoeventTable t = parse_coevent("w1*w2+w3", 3);
  CoeventPoly p = table_to_poly(t);
  REQUIRE(p.monomials.size() == 2);
  CHECK(p.monomials[0] == 0b100);
  CHECK(p.monomials[1] == 0b011);
  CHECK(coevent_to_string(t) == "w3+w1*w2");
}

TEST_CASE("frozen truth tables for three reference coevents") {
  CHECK(parse_coevent("w1+w2+w3", 3).bits == 0x96u);
  CHECK(parse_coevent("w1+w2+w3+w1*w2", 3).bits == 0x1Eu);
  CHECK(parse_coevent("w1+w1*w2*w3", 3).bits == 0x2Au);
}

TEST_CASE("every coevent vanishes on the empty event") {
  for (const CoeventTable& t : enumerate_coevents(3)) CHECK(t.eval(0) == 0);
}

TEST_CASE("structural classification agrees with the defining identities") {
  for (int n = 2; n <= 3; ++n)
    for (const CoeventTable& t : enumerate_coevents(n))
      CHECK(classify(t) == classify_by_identities(t));
}

TEST_CASE("class counts over all coevents") {
  auto count = [](int n, auto pred) {
    int c = 0;
    for (const CoeventTable& t : enumerate_coevents(n)) c += pred(classify(t));
    return c;
  };
  CHECK(count(3, [](CoeventClass c) { return c.classical; }) == 3);
  CHECK(count(3, [](CoeventClass c) { return c.additive; }) == 7);
  CHECK(count(3, [](CoeventClass c) { return c.multiplicative; }) == 7);
  CHECK(count(3, [](CoeventClass c) { return c.quadratic; }) == 64);
  CHECK(count(3, [](CoeventClass c) { return c.unital; }) == 64);
  CHECK(count(2, [](CoeventClass c) { return c.classical; }) == 2);
  CHECK(count(2, [](CoeventClass c) { return c.quadratic; }) == 8);
}

TEST_CASE("zero coevent conventions") {
  CoeventClass c = classify(coevent_zero(3));
  CHECK(!c.classical);
  CHECK(!c.unital);
  CHECK(!c.additive);
  CHECK(!c.multiplicative);
  CHECK(c.quadratic);
}

TEST_CASE("the unit coevent is the xor of all monomials") {
  CHECK(coevent_one(2).bits == 0b1110u);
  CHECK(coevent_to_string(coevent_one(2)) == "w1+w2+w1*w2");
  CHECK(parse_coevent("1", 3) == coevent_one(3));
  CHECK(parse_coevent("0", 3) == coevent_zero(3));
  CHECK(parse_coevent("w2*1+0", 2) == evaluation_map(2, 2));
}

TEST_CASE("partition expansion holds exactly on the quadratic class") {
  for (const CoeventTable& t : enumerate_coevents(3))
    CHECK(check_eq21(t) == classify(t).quadratic);
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 300; ++trial) {
    CoeventTable t{4, uint32_t(rng()) & 0xFFFEu};
    CHECK(check_eq21(t) == classify(t).quadratic);
  }
}

TEST_CASE("a quadratic coevent is pinned by its singleton and doubleton values") {
  for (const CoeventTable& t : enumerate_coevents(3, ClassFilter::quadratic)) {
    std::vector<int> s, d;
    for (int i = 1; i <= 3; ++i) s.push_back(t.eval(EventMask{1} << (i - 1)));
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        d.push_back(t.eval((EventMask{1} << (i - 1)) | (EventMask{1} << (j - 1))));
    CHECK(quadratic_from_values(3, s, d) == t);
  }
  CHECK_THROWS_AS(quadratic_from_values(3, {1, 0}, {0, 0, 0}), Error);
  CHECK_THROWS_AS(quadratic_from_values(3, {1, 0, 2}, {0, 0, 0}), Error);
}

TEST_CASE("filtered enumeration is structural, sorted and complete") {
  for (int n = 2; n <= 4; ++n) {
    auto all = enumerate_coevents(n);
    CHECK(all.size() == std::size_t{1} << full_mask(n));

    auto check_filter = [&](ClassFilter f, auto pred, std::size_t expect) {
      auto sel = enumerate_coevents(n, f);
      CHECK(sel.size() == expect);
      for (std::size_t i = 0; i + 1 < sel.size(); ++i) CHECK(sel[i].bits < sel[i + 1].bits);
      std::size_t brute = 0;
      for (const CoeventTable& t : all) brute += pred(classify(t));
      CHECK(brute == sel.size());
      for (const CoeventTable& t : sel) CHECK(pred(classify(t)));
    };
    std::size_t np = std::size_t(n) * (n - 1) / 2;
    check_filter(ClassFilter::classical, [](CoeventClass c) { return c.classical; },
                 std::size_t(n));
    check_filter(ClassFilter::additive, [](CoeventClass c) { return c.additive; },
                 (std::size_t{1} << n) - 1);
    check_filter(ClassFilter::multiplicative,
                 [](CoeventClass c) { return c.multiplicative; }, (std::size_t{1} << n) - 1);
    check_filter(ClassFilter::quadratic, [](CoeventClass c) { return c.quadratic; },
                 std::size_t{1} << (n + np));
    check_filter(ClassFilter::unital, [](CoeventClass c) { return c.unital; },
                 std::size_t{1} << (full_mask(n) - 1));
  }
}

TEST_CASE("expression printing and parsing round-trip") {
  for (const CoeventTable& t : enumerate_coevents(3))
    CHECK(parse_coevent(coevent_to_string(t), 3) == t);
  CHECK(parse_coevent(" w1 * w2 + w3 ", 3) == parse_coevent("w1*w2+w3", 3));
}

TEST_CASE("expression parser rejects malformed input") {
  CHECK_THROWS_AS(parse_coevent("", 3), ParseError);
  CHECK_THROWS_AS(parse_coevent("w0", 3), ParseError);
  CHECK_THROWS_AS(parse_coevent("w4", 3), ParseError);
  CHECK_THROWS_AS(parse_coevent("w1+", 3), ParseError);
  CHECK_THROWS_AS(parse_coevent("w1**w2", 3), ParseError);
  CHECK_THROWS_AS(parse_coevent("x1", 3), ParseError);
  CHECK_THROWS_AS(parse_coevent("w1 w2", 3), ParseError);
}

TEST_CASE("pointwise xor and product match their tables") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    CoeventTable a{3, uint32_t(rng()) & 0xFEu};
    CoeventTable b{3, uint32_t(rng()) & 0xFEu};
    for (EventMask e = 0; e <= full_mask(3); ++e) {
      CHECK(coevent_xor(a, b).eval(e) == (a.eval(e) ^ b.eval(e)));
      CHECK(coevent_and(a, b).eval(e) == (a.eval(e) & b.eval(e)));
    }
  }
  for (int i = 1; i <= 3; ++i)
    for (EventMask e = 0; e <= full_mask(3); ++e)
      CHECK(evaluation_map(3, i).eval(e) == (contains(e, i) ? 1 : 0));
}

TEST_CASE("event strings round-trip") {
  CHECK(event_to_string(0) == "{}");
  CHECK(event_to_string(0b101) == "{1,3}");
  CHECK(parse_event("{1,3}", 3) == 0b101u);
  CHECK(parse_event("{}", 3) == 0u);
  CHECK(parse_event(" { 2 } ", 3) == 0b010u);
  CHECK_THROWS_AS(parse_event("{4}", 3), ParseError);
  CHECK_THROWS_AS(parse_event("{1,1}", 3), ParseError);
  CHECK_THROWS_AS(parse_event("1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_event("{1,}", 3), ParseError);
}
