#include "superds/central.hpp"

#include <algorithm>

#include "superds/error.hpp"
#include "superds/registry.hpp"

namespace superds {

namespace {

enum class Kind { GL, Q, OSP_B, OSP_D };

Kind kind_of(const AlgebraType& t) {
  if (!t.is_affine()) {
    switch (t.family) {
      case Family::GL: return Kind::GL;
      case Family::Q: return Kind::Q;
      case Family::OSP_B: return Kind::OSP_B;
      case Family::OSP_D: return Kind::OSP_D;
      default: break;
    }
  }
  throw Error(ErrorKind::UnsupportedType, "no central-character model for " + to_string(t));
}

}  // namespace

Rational power_sum(const AlgebraType& t, const Weight& lambda, int k) {
  Kind kind = kind_of(t);
  check_weight(t, lambda);
  if (k < 1) throw Error(ErrorKind::ParityOfIndex, "power-sum index must be positive");
  if (kind == Kind::Q && k % 2 == 0)
    throw Error(ErrorKind::ParityOfIndex, "q-type power sums have odd index, got " + std::to_string(k));
  if ((kind == Kind::OSP_B || kind == Kind::OSP_D) && k % 2 != 0)
    throw Error(ErrorKind::ParityOfIndex, "osp power sums have even index, got " + std::to_string(k));
  Rational s = 0;
  for (const auto& x : lambda.a) s += pow_q(x, k);
  for (const auto& y : lambda.b) s -= pow_q(y, k);
  return s;
}

RVec phi_series(const Weight& lambda, int order) {
  RVec out(order + 1);
  for (const auto& a : lambda.a) {
    Rational sq = a * a, term = a;
    for (int r = 0; r <= order; ++r) {
      out[r] += term;
      term *= sq;
    }
  }
  return out;
}

const char* to_string(CharVerdict v) {
  switch (v) {
    case CharVerdict::Equal: return "equal";
    case CharVerdict::NotEqual: return "not-equal";
    case CharVerdict::EqualUpToSigma: return "equal-up-to-sigma";
  }
  return "?";
}

CharVerdict chi_equal(const AlgebraType& t, const Weight& lambda, const Weight& nu) {
  Kind kind = kind_of(t);
  if (!(core(t, lambda) == core(t, nu))) return CharVerdict::NotEqual;
  if (kind != Kind::OSP_D || atyp(t, lambda) != 0) return CharVerdict::Equal;
  // Typical D-type: W flips an even number of eps-signs, so the product of
  // the eps-entries is the remaining invariant.
  Rational pl = 1, pn = 1;
  for (const auto& x : lambda.a) pl *= x;
  for (const auto& x : nu.a) pn *= x;
  return pl == pn ? CharVerdict::Equal : CharVerdict::EqualUpToSigma;
}

int default_oracle_bound(const AlgebraType& t) {
  switch (kind_of(t)) {
    case Kind::GL: return 2 * (t.m + t.n);
    case Kind::Q: return 4 * t.n + 1;
    case Kind::OSP_B:
    case Kind::OSP_D: return 4 * (t.m + t.n);
  }
  return 0;
}

bool chi_equal_oracle(const AlgebraType& t, const Weight& lambda, const Weight& nu, int K) {
  Kind kind = kind_of(t);
  if (kind == Kind::OSP_D)
    throw Error(ErrorKind::UnsupportedType, "power sums do not separate osp(2m|2n) characters");
  int start = kind == Kind::OSP_B ? 2 : 1;
  int step = kind == Kind::GL ? 1 : 2;
  for (int k = start; k <= K; k += step)
    if (power_sum(t, lambda, k) != power_sum(t, nu, k)) return false;
  check_weight(t, lambda);
  check_weight(t, nu);
  return true;
}

Weight sigma(const AlgebraType& t, const Weight& lambda) {
  if (t.family != Family::OSP_D || t.m < 1)
    throw Error(ErrorKind::UnsupportedType, "sigma is defined on osp(2m|2n), m >= 1");
  check_weight(t, lambda);
  Weight w = lambda;
  w.a.back() = -w.a.back();
  return w;
}

Weight theta_restrict(const AlgebraType& t, int r, const Weight& lambda_x) {
  Kind kind = kind_of(t);
  if (r < 0 || r > depth(t))
    throw Error(ErrorKind::RankOutOfRange,
                "rank " + std::to_string(r) + " exceeds depth " + std::to_string(depth(t)) +
                    " of " + to_string(t));
  auto [m, n] = coord_dims(t);
  int dm = kind == Kind::Q ? 2 * r : r;
  int dn = kind == Kind::Q ? 0 : r;
  if (static_cast<int>(lambda_x.a.size()) != m - dm ||
      static_cast<int>(lambda_x.b.size()) != n - dn)
    throw Error(ErrorKind::DimensionMismatch,
                "weight " + to_string(lambda_x) + " does not fit " + to_string(ds_type(t, r)));
  Weight w = lambda_x;
  w.a.resize(m, Rational(0));
  w.b.resize(n, Rational(0));
  return w;
}

}  // namespace superds
