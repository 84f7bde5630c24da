#include "qr/rat.hpp"

#include <cctype>

#include "qr/error.hpp"

namespace qr {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty rational");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("bad rational '" + input + "' (expected p or p/q)");
  if (den.find_first_not_of('0') == std::string::npos)
    throw ParseError("zero denominator in '" + input + "'");

  // Dividing two canonical integers canonicalizes; a raw "p/q" string would not.
  Rat r = Rat(boost::multiprecision::mpz_int(num)) / Rat(boost::multiprecision::mpz_int(den));
  return neg ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace qr
