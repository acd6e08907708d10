#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace superds {

using Rational = mpq_class;
using RVec = std::vector<Rational>;

// Accepts "p", "p/q" and "-p/q" (whitespace trimmed). Throws Error(Parse).
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Rational floor_q(const Rational& q);
// Representative of q modulo |m| in [0, |m|); m != 0.
Rational mod_q(const Rational& q, const Rational& m);
Rational pow_q(const Rational& q, unsigned k);

std::string join(const RVec& v, const char* sep = ",");

}  // namespace superds
