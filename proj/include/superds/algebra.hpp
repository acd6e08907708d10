#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "superds/rational.hpp"

namespace superds {

enum class Family {
  GL, SL, PGL, PSL, P, Pprime, Q, SQ, PQ, PSQ, OSP_B, OSP_D, D21a, G3, F4,
  AffineUntwisted, AffineTwisted,
};

enum class Twist { A2, A4, D2 };

// Parameters are "gl-style": m counts the epsilon coordinates and n the delta
// coordinates of the (finite part of the) Cartan subalgebra.
//   GL/SL(m|n)          gl(m|n), sl(m|n)
//   PGL/PSL             m == n
//   P, Pprime, Q, SQ,.. n is the matrix size, m unused
//   OSP_B(m|n)          osp(2m+1|2n) = B(m|n)
//   OSP_D(m|n)          osp(2m|2n)   = D(m|n)
//   AffineUntwisted     base family + its (m, n, a)
//   AffineTwisted A2    b_type: A(2m|2n-1)^(2); otherwise A(2m-1|2n-1)^(2)
//                 A4    A(2m|2n)^(4)
//                 D2    D(m+1|n)^(2)
// The twisted labels above are the ones printed and parsed.
struct AlgebraType {
  Family family = Family::GL;
  int m = 0;
  int n = 0;
  Rational a = 0;
  Family base = Family::GL;
  Twist twist = Twist::A2;
  bool b_type = true;

  bool operator==(const AlgebraType& o) const;
  bool is_affine() const {
    return family == Family::AffineUntwisted || family == Family::AffineTwisted;
  }
  // The finite family a weight lives over; for affine types the finite part.
  Family finite_family() const;
  AlgebraType finite_part() const;
};

namespace alg {
AlgebraType gl(int m, int n);
AlgebraType sl(int m, int n);
AlgebraType pgl(int n);
AlgebraType psl(int n);
AlgebraType p(int n);
AlgebraType pprime(int n);
AlgebraType q(int n);
AlgebraType sq(int n);
AlgebraType pq(int n);
AlgebraType psq(int n);
AlgebraType B(int m, int n);
AlgebraType D(int m, int n);
AlgebraType d21a(const Rational& a);
AlgebraType g3();
AlgebraType f4();
AlgebraType affine(const AlgebraType& finite);
AlgebraType twisted(Twist label, int m, int n, bool b_type = true);
}  // namespace alg

struct SuperDim {
  long even = 0;
  long odd = 0;
  bool operator==(const SuperDim&) const = default;
};
std::string to_string(const SuperDim& d);

// A DS target that is not itself a member of a tabulated family.
struct Degenerate {
  std::string label;
  std::optional<SuperDim> sdim;  // nullopt: infinite-dimensional
  bool operator==(const Degenerate&) const = default;
};

using DSTarget = std::variant<AlgebraType, Degenerate>;

std::string to_string(const AlgebraType& t);
std::string to_string(const DSTarget& t);
AlgebraType parse_algebra(const std::string& s);
// Throws Error(UnsupportedType) when parameters are outside the family's range.
void validate(const AlgebraType& t);

bool is_qtype(const AlgebraType& t);
// Epsilon and delta coordinate counts of the weight space.
std::pair<int, int> coord_dims(const AlgebraType& t);

}  // namespace superds
