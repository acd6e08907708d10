#pragma once

#include <string>
#include <vector>

#include "superds/rational.hpp"

namespace superds {

// A weight in pairing coordinates: a_i = (lambda|eps_i), b_j = (lambda|delta_j),
// k = (lambda|delta) (the level, affine only) and d the coefficient of delta.
struct Weight {
  RVec a;
  RVec b;
  Rational k = 0;
  Rational d = 0;

  bool operator==(const Weight& o) const = default;
  bool operator<(const Weight& o) const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight scaled(const Rational& s) const;
};

// "a1,..;b1,..[;k[;d]]" with integer or p/q entries; either list may be empty.
Weight parse_weight(const std::string& s);
std::string to_string(const Weight& w);

// Element of h^* written in the basis eps_i, delta_j, delta.
struct Functional {
  RVec eps;
  RVec delta;
  Rational d = 0;
  bool operator==(const Functional& o) const = default;
};

Rational pairing(const Weight& w, const Functional& f);

}  // namespace superds
