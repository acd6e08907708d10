#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "superds/weights.hpp"

namespace superds {

// Signed permutation of the m+n coordinate slots: w(e_i) = sign * e_j is
// stored as img[i] = sign * (j + 1).
struct SignedPerm {
  std::vector<int> img;
  static SignedPerm identity(size_t n);
  SignedPerm operator*(const SignedPerm& o) const;  // (this o o)
  SignedPerm inverse() const;
  bool operator<(const SignedPerm& o) const { return img < o.img; }
  bool operator==(const SignedPerm& o) const = default;
};

Weight apply(const SignedPerm& w, const Weight& lambda);

// Even real roots alpha with (lambda|alpha^) in Z (alpha/2 not a root) or in
// Z + 1/2 (alpha/2 a root). Finite types.
std::vector<Root> delta_lambda(const AlgebraType& t, const Weight& lambda);
std::vector<SignedPerm> w_lambda_group(const AlgebraType& t, const Weight& lambda,
                                       size_t cap = 200000);

enum class Verdict { Yes, No, Unknown };
const char* to_string(Verdict v);

struct BlockWitness {
  std::vector<int> w;             // finite: signed permutation images
  std::vector<std::string> word;  // affine: reflections applied to nu, in order
  RVec m;                         // coefficients along the iso-set
};

struct BlockResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<BlockWitness> witness;
  std::vector<Root> isoset;
  std::string reason;
};

struct BlockOptions {
  int word_bound = 4;
  int degree_bound = 2;
  size_t group_cap = 200000;
  bool highest_weight = false;  // inputs are highest weights, shift by rho first
};

// Inputs are rho-shifted unless opts.highest_weight is set.
BlockResult block_equivalent(const AlgebraType& t, const Weight& lambda, const Weight& nu,
                             const BlockOptions& opts = {});

struct Box {
  Weight lo;
  Weight hi;
  bool contains(const Weight& w) const;
  static Box around(const Weight& center, const Rational& radius, bool with_d);
};

// All nu in the box with (mu, nu) or (nu, mu) a Kac-Kazhdan move.
std::vector<Weight> kk_moves(const AlgebraType& t, const Weight& mu, const Box& box);

// Connected component of lambda under K-moves inside the radius box.
std::set<Weight> block_orbit_oracle(const AlgebraType& t, const Weight& lambda,
                                    const Rational& radius, int jobs = 1,
                                    size_t node_cap = 2000000);

}  // namespace superds
