#pragma once

#include <stdexcept>
#include <string>

namespace qr {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed expressions, event strings, rationals, or JSON documents.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A set function failed q-measure validation.
struct MeasureError : Error {
  enum class Kind { nonzero_empty, negative_value, not_grade2, negative_extension };
  Kind kind;
  // for not_grade2: the violating disjoint triple; for value errors: a = event
  unsigned a = 0, b = 0, c = 0;
  MeasureError(Kind k, const std::string& what, unsigned a_ = 0, unsigned b_ = 0, unsigned c_ = 0)
      : Error(what), kind(k), a(a_), b(b_), c(c_) {}
};

struct DensityError : Error {
  explicit DensityError(const std::string& what) : Error(what) {}
};

// Branch budget exhausted before a definitive verdict.
struct ResourceGuardError : Error {
  long long explored;
  explicit ResourceGuardError(long long n)
      : Error("branch budget exhausted after " + std::to_string(n) + " nodes"), explored(n) {}
};

}  // namespace qr
