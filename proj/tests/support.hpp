#pragma once

// Shared generators and brute-force oracles for the test suites. The oracles
// deliberately avoid the library code paths they are compared against.

#include <algorithm>
#include <random>
#include <vector>

#include "superds/central.hpp"
#include "superds/dsmatrix.hpp"
#include "superds/weights.hpp"

namespace superds::oracle {

inline Rational random_rational(std::mt19937& rng, int lo = -6, int hi = 6, int max_den = 3) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_int(std::mt19937& rng, int lo, int hi) {
  return Rational(std::uniform_int_distribution<int>(lo, hi)(rng));
}

// Inputs with repeated and opposite values, so cores of every size show up.
inline Weight random_weight(std::mt19937& rng, const AlgebraType& t, bool integral = false) {
  auto [m, n] = coord_dims(t);
  std::vector<Rational> pool;
  for (int i = 0; i < 3; ++i) pool.push_back(integral ? random_int(rng, -4, 4) : random_rational(rng));
  auto pick = [&]() -> Rational {
    std::uniform_int_distribution<int> coin(0, 3);
    int c = coin(rng);
    if (c == 3) return integral ? random_int(rng, -4, 4) : random_rational(rng);
    Rational v = pool[c];
    return coin(rng) % 2 ? v : Rational(-v);
  };
  Weight w;
  for (int i = 0; i < m; ++i) w.a.push_back(pick());
  for (int j = 0; j < n; ++j) w.b.push_back(pick());
  return w;
}

// Core by repeated deletion of one matching pair at a time.
inline std::pair<RVec, RVec> core_by_deletion(const AlgebraType& t, const Weight& w) {
  RVec a = w.a, b = w.b;
  const bool q = t.family == Family::Q;
  const bool osp = t.family == Family::OSP_B || t.family == Family::OSP_D;
  auto match = [&](const Rational& x, const Rational& y) { return osp ? x * x == y * y : x == y; };
  for (bool again = true; again;) {
    again = false;
    if (q) {
      for (size_t i = 0; i < a.size() && !again; ++i)
        for (size_t j = i + 1; j < a.size() && !again; ++j)
          if (a[i] + a[j] == 0) {
            a.erase(a.begin() + j);
            a.erase(a.begin() + i);
            again = true;
          }
    } else {
      for (size_t i = 0; i < a.size() && !again; ++i)
        for (size_t j = 0; j < b.size() && !again; ++j)
          if (match(a[i], b[j])) {
            a.erase(a.begin() + i);
            b.erase(b.begin() + j);
            again = true;
          }
    }
  }
  if (osp) {
    for (auto& x : a) x *= x;
    for (auto& x : b) x *= x;
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return {a, b};
}

// sdim DS_x from ranks alone: DS_p = dim V_p - rk(x|V_0) - rk(x|V_1).
inline SuperDim ds_dim_by_rank(const MatrixSuperModule& m, const std::string& x) {
  const Matrix& a = m.op(x);
  std::vector<RVec> cols[2];
  for (size_t j = 0; j < m.dim(); ++j) cols[static_cast<int>(m.parity[j])].push_back(a.column(j));
  long r = 0;
  for (auto& c : cols)
    if (!c.empty()) r += static_cast<long>(rank(Matrix::from_columns(m.dim(), c)));
  SuperDim d = m.sdim();
  return {d.even - r, d.odd - r};
}

// Every finite odd positive root that is not Nis, for small exhaustive searches.
inline std::vector<Root> positive_odd_roots(const AlgebraType& t) {
  RootSystem sys = build(t, 0);
  Base base = distinguished_base(t);
  std::vector<Root> out;
  for (const auto& r : sys.roots)
    if (r.parity == Parity::Odd && is_positive(sys, base, r) &&
        (sys.qtype() || classify(sys, r) == RootClass::Iso))
      out.push_back(r);
  return out;
}

// Largest iso-set orthogonal to lambda, by exhaustive search.
inline int atyp_by_search(const AlgebraType& t, const Weight& lambda) {
  RootSystem sys = build(t, 0);
  std::vector<Root> cand;
  for (const auto& r : positive_odd_roots(t))
    if (pairing(lambda, covee(sys, r)) == 0) cand.push_back(r);
  int best = 0;
  const size_t n = cand.size();
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<Root> s;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(cand[i]);
    if (static_cast<int>(s.size()) > best && isoset_by_orthogonality(sys, s))
      best = static_cast<int>(s.size());
  }
  return best;
}

}  // namespace superds::oracle
