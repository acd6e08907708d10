#include "superds/registry.hpp"

#include <algorithm>

#include "superds/error.hpp"

namespace superds {

namespace {

const Degenerate kZero{"0", SuperDim{0, 0}};
const Degenerate kC{"C", SuperDim{1, 0}};
const Degenerate kPiC{"Pi(C)", SuperDim{0, 1}};
const Degenerate kCxPiC{"C x Pi(C)", SuperDim{1, 1}};
const Degenerate kPsl11{"psl(1|1)", SuperDim{0, 2}};
const Degenerate kCKd{"CK x Cd", SuperDim{2, 0}};
const Degenerate kHeis{"C^(1)", std::nullopt};

// Zero-dimensional members of a family collapse to the zero algebra.
DSTarget finite_target(const AlgebraType& t) {
  switch (t.family) {
    case Family::GL:
      if (t.m + t.n == 0) return kZero;
      break;
    case Family::SL:
      if (t.m + t.n <= 1) return kZero;
      break;
    case Family::OSP_B:
    case Family::OSP_D:
      if (t.m + t.n == 0) return kZero;
      break;
    case Family::Q:
    case Family::P:
      if (t.n == 0) return kZero;
      break;
    default: break;
  }
  return t;
}

void check_rank(const AlgebraType& t, int r) {
  if (r < 0 || r > depth(t))
    throw Error(ErrorKind::RankOutOfRange,
                "rank " + std::to_string(r) + " for " + to_string(t) + " (depth " +
                    std::to_string(depth(t)) + ")");
}

std::string gl_stratum(int r, int n) {
  if (r == 0) return "zero";
  return "X(gl(" + std::to_string(n) + "|" + std::to_string(n) + "))_" + std::to_string(r);
}

}  // namespace

int defect(const AlgebraType& t) {
  validate(t);
  switch (t.family) {
    case Family::GL:
    case Family::OSP_B:
    case Family::OSP_D: return std::min(t.m, t.n);
    case Family::SL: return t.m == t.n ? t.n - 1 : std::min(t.m, t.n);
    case Family::PGL: return t.n;
    case Family::PSL: return t.n - 1;
    case Family::P: return t.n;
    case Family::Pprime: return t.n - 1;
    case Family::Q:
    case Family::SQ:
    case Family::PQ:
    case Family::PSQ: return t.n / 2;
    case Family::D21a:
    case Family::G3:
    case Family::F4: return 1;
    case Family::AffineUntwisted: return defect(t.finite_part());
    case Family::AffineTwisted: return std::min(t.m, t.n);
  }
  throw Error(ErrorKind::UnsupportedType, to_string(t));
}

// Every tabulated family has depth equal to defect.
int depth(const AlgebraType& t) { return defect(t); }

int depth(const DSTarget& t) {
  if (auto* a = std::get_if<AlgebraType>(&t)) return depth(*a);
  return 0;
}

DSTarget ds_type(const AlgebraType& t, int r) {
  check_rank(t, r);
  if (r == 0) return t;
  const int n = t.n;
  switch (t.family) {
    case Family::GL: return finite_target(alg::gl(t.m - r, t.n - r));
    case Family::SL: return finite_target(alg::sl(t.m - r, t.n - r));
    case Family::PGL: return r < n ? DSTarget(alg::pgl(n - r)) : DSTarget(kPiC);
    case Family::PSL: return r < n - 1 ? DSTarget(alg::psl(n - r)) : DSTarget(kPsl11);
    case Family::P: return finite_target(alg::p(n - r));
    case Family::Pprime: return n - r >= 2 ? DSTarget(alg::pprime(n - r)) : DSTarget(kPiC);
    case Family::Q: return finite_target(alg::q(n - 2 * r));
    case Family::SQ: return r < n / 2 ? DSTarget(alg::sq(n - 2 * r)) : DSTarget(kC);
    case Family::PQ: return r < n / 2 ? DSTarget(alg::pq(n - 2 * r)) : DSTarget(kPiC);
    case Family::PSQ:
      if (r < n / 2) return alg::psq(n - 2 * r);
      return n % 2 ? kZero : kCxPiC;
    case Family::OSP_B: return finite_target(alg::B(t.m - r, t.n - r));
    case Family::OSP_D: return finite_target(alg::D(t.m - r, t.n - r));
    case Family::D21a: return kC;
    case Family::G3: return alg::sl(2, 0);
    case Family::F4: return alg::sl(3, 0);
    case Family::AffineUntwisted: {
      DSTarget f = ds_type(t.finite_part(), r);
      if (auto* a = std::get_if<AlgebraType>(&f)) return alg::affine(*a);
      const auto& d = std::get<Degenerate>(f);
      if (d == kZero) return kCKd;
      if (d == kC) return kHeis;
      return Degenerate{d.label + "^(1)", std::nullopt};
    }
    case Family::AffineTwisted:
      if (t.m == r && t.n == r) return kCKd;
      return alg::twisted(t.twist, t.m - r, t.n - r, t.b_type);
  }
  throw Error(ErrorKind::UnsupportedType, to_string(t));
}

Rational dual_coxeter(const AlgebraType& t) {
  validate(t);
  switch (t.family) {
    case Family::GL:
    case Family::SL: return t.m - t.n;
    case Family::OSP_B: return (2 * t.m + 1) - 2 * t.n - 2;
    case Family::OSP_D: return 2 * t.m - 2 * t.n - 2;
    case Family::D21a: return 0;
    case Family::G3: return 2;
    case Family::F4: return 3;
    case Family::AffineUntwisted: return dual_coxeter(t.finite_part());
    case Family::AffineTwisted:
      switch (t.twist) {
        // h = M - N for A(M|N)^(2) and D(M+1|N)^(2), with M, N the osp sizes
        // of the finite part in the D case.
        case Twist::A2: return t.b_type ? 2 * t.m - (2 * t.n - 1) : 2 * t.m - 2 * t.n;
        case Twist::A4: return t.m - t.n;
        case Twist::D2: return (2 * t.m + 1) - 2 * t.n;
      }
      break;
    default: break;
  }
  throw Error(ErrorKind::UnsupportedType, "no dual Coxeter number tabulated for " + to_string(t));
}

std::vector<Stratum> x_strata(const AlgebraType& t) {
  validate(t);
  std::vector<Stratum> out;
  const int n = t.n;
  const int d = depth(t);
  auto iso = [&](int r, std::string desc) {
    out.push_back({r, std::move(desc), true, ds_type(t, r)});
  };
  switch (t.family) {
    case Family::GL:
    case Family::SL:
      if (t.family == Family::SL && t.m == t.n) {
        for (int r = 0; r < n; ++r) iso(r, gl_stratum(r, n));
        out.push_back({n - 1, gl_stratum(n, n), false, kPiC});
        return out;
      }
      for (int r = 0; r <= d; ++r)
        iso(r, r == 0 ? "zero" : "rank " + std::to_string(r) + " (B,C with BC=CB=0)");
      return out;
    case Family::PGL:
      for (int r = 0; r <= n; ++r) iso(r, gl_stratum(r, n));
      out.push_back({n, "X' (BC in C^* Id)", false, kPiC});
      return out;
    case Family::PSL:
      for (int r = 0; r < n; ++r) iso(r, gl_stratum(r, n));
      out.push_back({n - 1, gl_stratum(n, n), false, kPsl11});
      out.push_back({n - 1, "X' (BC in C^* Id)", false, kPsl11});
      return out;
    case Family::P:
      for (int r = 0; r <= n; ++r) {
        std::string desc = r == 0 ? "zero" : "X(p(" + std::to_string(n) + "))_" + std::to_string(r);
        if (n == 2 && r == 2) desc = "GL_2 x_- ⊔ GL_2(x_1+x_2)";
        if (r == 1) desc = "GL_" + std::to_string(n) + "-orbit X(p(" + std::to_string(n) + "))_1";
        iso(r, desc);
      }
      return out;
    case Family::Pprime:
      for (int r = 0; r < n; ++r)
        iso(r, r == 0 ? "zero" : "X(p(" + std::to_string(n) + "))_" + std::to_string(r));
      out.push_back({n - 1, "X(p(" + std::to_string(n) + "))_" + std::to_string(n), false, kPiC});
      return out;
    case Family::Q:
    case Family::SQ:
    case Family::PQ:
    case Family::PSQ: {
      std::string pre = t.family == Family::Q ? "" : "iota of ";
      for (int r = 0; r <= d; ++r)
        iso(r, r == 0 ? "zero"
                      : pre + "GL_" + std::to_string(n) + "-orbit of x_" + std::to_string(r));
      if (t.family == Family::PQ)
        out.push_back({d, "X' (B^2 in C^* Id)", false, kPiC});
      if (t.family == Family::PSQ && n % 2 == 0)
        out.push_back({d, "X' (B^2 in C^* Id)", false, kCxPiC});
      return out;
    }
    case Family::OSP_B:
    case Family::OSP_D:
      for (int r = 0; r <= d; ++r)
        iso(r, r == 0 ? "zero" : "iso-set support of size " + std::to_string(r));
      return out;
    case Family::D21a:
    case Family::G3:
    case Family::F4:
      iso(0, "zero");
      iso(1, "nonzero (self-commuting odd)");
      return out;
    case Family::AffineUntwisted:
    case Family::AffineTwisted:
      for (int r = 0; r <= d; ++r)
        iso(r, r == 0 ? "zero" : "iso-set support of size " + std::to_string(r));
      return out;
  }
  throw Error(ErrorKind::UnsupportedType, to_string(t));
}

}  // namespace superds
