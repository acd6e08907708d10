#pragma once

#include <string>
#include <vector>

#include "superds/rootsys.hpp"

namespace superds {

// Core of a weight. Kac-Moody cores keep the surviving eps-entries and
// delta-entries apart (they are matched against each other, never within a
// side); for Q-type everything lives in a_part.
struct CoreMultiset {
  RVec a_part;  // sorted canonical representatives
  RVec b_part;
  Rational modulus = 0;     // 0: exact values
  bool signed_fold = false; // values taken up to z -> -z as well
  bool typed = true;

  size_t size() const { return a_part.size() + b_part.size(); }
  RVec flat() const;
  bool operator==(const CoreMultiset& o) const = default;
};

std::string to_string(const CoreMultiset& c);

CoreMultiset core(const AlgebraType& t, const Weight& lambda);
int atyp(const AlgebraType& t, const Weight& lambda);

// Throws DimensionMismatch if the weight does not fit the type.
void check_weight(const AlgebraType& t, const Weight& lambda);

bool isoset_by_definition(const RootSystem& sys, const std::vector<Root>& s);
bool isoset_by_orthogonality(const RootSystem& sys, const std::vector<Root>& s);
// Both criteria, which must agree (twisted types only admit the second).
bool is_isoset(const RootSystem& sys, const std::vector<Root>& s);
bool is_isoset(const AlgebraType& t, const std::vector<Root>& s);

std::vector<Root> max_orthogonal_isoset(const AlgebraType& t, const Weight& lambda,
                                        int degree_bound = 2);

}  // namespace superds
