#include "qr/event.hpp"

#include <cctype>

#include "qr/error.hpp"

namespace qr {

std::string event_to_string(EventMask a) {
  std::string s = "{";
  for (int i = 1; a >> (i - 1); ++i) {
    if (!contains(a, i)) continue;
    if (s.size() > 1) s += ",";
    s += std::to_string(i);
  }
  return s + "}";
}

int popcount(EventMask a) {
  int c = 0;
  for (; a; a &= a - 1) ++c;
  return c;
}

EventMask parse_event(const std::string& input, int n) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("bad event '" + input + "' (expected e.g. {} or {1,3})");
  s = s.substr(1, s.size() - 2);
  EventMask mask = 0;
  if (s.empty()) return mask;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad element '" + tok + "' in event '" + input + "'");
    int i = std::stoi(tok);
    if (i < 1 || i > n)
      throw ParseError("element " + tok + " out of range 1.." + std::to_string(n));
    if (contains(mask, i)) throw ParseError("duplicate element " + tok + " in event");
    mask |= EventMask{1} << (i - 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return mask;
}

}  // namespace qr
