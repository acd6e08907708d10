#pragma once

#include <optional>
#include <vector>

#include "superds/weights.hpp"

namespace superds {

// a_i - a_{i+1} in Z_{>=0}, and equal neighbours only at 0.
bool dominant(const Weight& lambda);

// First (lexicographic in the root index) set of pairwise non-adjacent simple
// roots eps_i - eps_{i+1} with a_i + a_{i+1} = 0 of size atyp(lambda);
// nullopt when there is none. Throws NotDominant.
std::optional<std::vector<Root>> kw_condition(const Weight& lambda);

struct TamePrediction {
  bool doubled = false;  // L'(lambda') + Pi L'(lambda') instead of L'(lambda')
  Weight lambda_prime;
  AlgebraType target;
  int k = 0;             // atyp(lambda), the rank of x
};

TamePrediction tame_ds_prediction(const Weight& lambda);
std::string to_string(const TamePrediction& p);

// #{beta = eps_i - eps_j in S : a_i - a_j in Z_{>0}}. Throws NotOrthogonal.
int primitq_s(const Weight& lambda, const std::vector<Root>& s);

}  // namespace superds
