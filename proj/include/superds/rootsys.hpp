#pragma once

#include <string>
#include <vector>

#include "superds/algebra.hpp"
#include "superds/weight.hpp"

namespace superds {

enum class Parity { Even = 0, Odd = 1 };

// NonReduced: even real roots whose half is again a root (2*delta_j in B(m|n)).
enum class RootClass { Red, NonReduced, Iso, Nis, Imaginary };
const char* to_string(RootClass c);

// Integer coordinates in the basis eps_i, delta_j, delta.
struct Root {
  std::vector<int> eps;
  std::vector<int> delta;
  int d = 0;
  Parity parity = Parity::Even;

  bool operator==(const Root& o) const = default;
  bool operator<(const Root& o) const;
  Root operator-() const;
  // Vector sum with parity added mod 2.
  Root operator+(const Root& o) const;
  bool is_finite_zero() const;
};

std::string to_string(const Root& r);

// (x|y) with (eps_i|eps_j) = delta_ij, (delta_i|delta_j) = -delta_ij, delta isotropic.
Rational form(const Root& x, const Root& y);
Rational form(const Functional& x, const Root& y);
Functional as_functional(const Root& r);
Weight as_weight(const Root& r);
Rational pairing(const Weight& w, const Root& r);

class RootSystem {
 public:
  AlgebraType type;
  int m = 0;
  int n = 0;
  int degree_bound = 0;
  // Finite types: every root. Affine: the roots with |delta-degree| <= degree_bound
  // (twisted types expose the isotropic roots only).
  std::vector<Root> roots;

  bool contains(const Root& r) const;
  bool contains_any_parity(const Root& r) const;
  bool qtype() const { return q_; }
  bool affine() const { return type.is_affine(); }
  bool twisted() const { return type.family == Family::AffineTwisted; }
  // Step between delta-degrees of the isotropic roots (2 for A4 and D2).
  int iso_step() const;

  std::vector<Root> finite_roots() const;

 private:
  friend RootSystem build(const AlgebraType& t, int degree_bound);
  bool q_ = false;
};

RootSystem build(const AlgebraType& t, int degree_bound = 2);

RootClass classify(const RootSystem& sys, const Root& alpha);
Functional covee(const RootSystem& sys, const Root& alpha);
// r_gamma on a vector, gamma an even non-isotropic real root.
Functional reflect(const Functional& v, const Root& gamma);
Root reflect(const Root& v, const Root& gamma);

struct Base {
  std::vector<Root> simple;
  Weight rho;
};

Base distinguished_base(const AlgebraType& t);
// Positive roots of the finite root system; affine types add delta-degree > 0.
bool is_positive(const RootSystem& sys, const Base& base, const Root& alpha);
std::vector<Root> positive_roots(const RootSystem& sys, const Base& base);
// rho = half the signed sum of positive roots (zero for Q-type).
Weight weyl_vector(const RootSystem& sys, const Base& base);

Base odd_reflect(const RootSystem& sys, const Base& base, const Root& beta);
// Highest weight with respect to the odd-reflected base.
Weight hw_transform(const RootSystem& sys, const Weight& nu, const Root& beta, const Base& base);

}  // namespace superds
