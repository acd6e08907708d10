#pragma once

#include <string>
#include <vector>

#include "superds/algebra.hpp"

namespace superds {

int defect(const AlgebraType& t);
int depth(const AlgebraType& t);
int depth(const DSTarget& t);  // Degenerate targets have depth 0
DSTarget ds_type(const AlgebraType& t, int r);
Rational dual_coxeter(const AlgebraType& t);

struct Stratum {
  int rank;
  std::string descriptor;
  bool in_X_iso;
  DSTarget target;
};
std::vector<Stratum> x_strata(const AlgebraType& t);

}  // namespace superds
