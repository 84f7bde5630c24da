#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace qr {

using Rat = boost::multiprecision::mpq_rational;

// Accepts "p", "-p", "p/q"; q > 0 after sign normalization. Decimals are rejected.
Rat parse_rat(const std::string& s);

// "p" when the denominator is 1, else "p/q", always canonical.
std::string rat_to_string(const Rat& r);

}  // namespace qr
