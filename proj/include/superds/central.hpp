#pragma once

#include <vector>

#include "superds/weights.hpp"

namespace superds {

// gl: sum a^k - sum b^k. q: sum a^k, k odd. osp: sum a^k - sum b^k, k even.
Rational power_sum(const AlgebraType& t, const Weight& lambda, int k);

// [p_1, p_3, ..., p_{2 order + 1}] of a q-type weight: the Taylor
// coefficients of sum a_i / (1 - a_i^2 z).
RVec phi_series(const Weight& lambda, int order);

enum class CharVerdict { Equal, NotEqual, EqualUpToSigma };
const char* to_string(CharVerdict v);

// Finite gl, q, osp. For osp(2m|2n) at atypicality 0, equal cores only pin
// the character down to {chi, sigma(chi)}; Equal is returned when the
// eps-parts are related by an even number of sign changes.
CharVerdict chi_equal(const AlgebraType& t, const Weight& lambda, const Weight& nu);

// Power sums up to this index separate distinct characters.
int default_oracle_bound(const AlgebraType& t);
// All admissible power sums of index <= K agree. gl, q and osp(2m+1|2n).
bool chi_equal_oracle(const AlgebraType& t, const Weight& lambda, const Weight& nu, int K);

// sigma = reflection in eps_m on osp(2m|2n) weights.
Weight sigma(const AlgebraType& t, const Weight& lambda);

// Zero-pads a weight of ds_type(t, r) into a weight of t: r trailing eps- and
// delta-slots (gl, osp) or 2r trailing slots (q).
Weight theta_restrict(const AlgebraType& t, int r, const Weight& lambda_x);

}  // namespace superds
