#pragma once

#include <string>

namespace qr {

// An event is a subset of the sample space {w1..wn}, stored as a bitmask:
// element i <-> bit (i-1). The empty event is mask 0.
using EventMask = unsigned;

inline EventMask full_mask(int n) { return (1u << n) - 1u; }

inline bool contains(EventMask a, int omega) { return (a >> (omega - 1)) & 1u; }

inline bool subset_of(EventMask a, EventMask b) { return (a & ~b) == 0; }

int popcount(EventMask a);

// "{}" or "{1,3}", members ascending, no spaces.
std::string event_to_string(EventMask a);

// Accepts optional spaces and any member order; duplicate or out-of-range members throw.
EventMask parse_event(const std::string& s, int n);

}  // namespace qr
