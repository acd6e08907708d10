#include "superds/qtype.hpp"

#include <algorithm>

#include "superds/error.hpp"

namespace superds {

namespace {

AlgebraType type_of(const Weight& lambda) {
  if (!lambda.b.empty())
    throw Error(ErrorKind::DimensionMismatch, "q-type weights have no delta-entries");
  return alg::q(static_cast<int>(lambda.a.size()));
}

Root simple(int n, int i) {
  Root r;
  r.eps.assign(n, 0);
  r.eps[i] = 1;
  r.eps[i + 1] = -1;
  r.parity = Parity::Odd;
  return r;
}

bool search(const std::vector<int>& cand, size_t from, int need, int last,
            std::vector<int>& pick) {
  if (need == 0) return true;
  for (size_t c = from; c < cand.size(); ++c) {
    if (last >= 0 && cand[c] <= last + 1) continue;
    pick.push_back(cand[c]);
    if (search(cand, c + 1, need - 1, cand[c], pick)) return true;
    pick.pop_back();
  }
  return false;
}

}  // namespace

bool dominant(const Weight& lambda) {
  type_of(lambda);
  const auto& a = lambda.a;
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    Rational diff = a[i] - a[i + 1];
    if (!is_integer(diff) || diff < 0) return false;
    if (diff == 0 && a[i] != 0) return false;
  }
  return true;
}

std::optional<std::vector<Root>> kw_condition(const Weight& lambda) {
  AlgebraType t = type_of(lambda);
  if (!dominant(lambda)) throw Error(ErrorKind::NotDominant, to_string(lambda));
  const int n = t.n;
  std::vector<int> cand;
  for (int i = 0; i + 1 < n; ++i)
    if (lambda.a[i] + lambda.a[i + 1] == 0) cand.push_back(i);
  std::vector<int> pick;
  if (!search(cand, 0, atyp(t, lambda), -1, pick)) return std::nullopt;
  std::vector<Root> s;
  for (int i : pick) s.push_back(simple(n, i));
  return s;
}

TamePrediction tame_ds_prediction(const Weight& lambda) {
  AlgebraType t = type_of(lambda);
  if (!kw_condition(lambda))
    throw Error(ErrorKind::KWFails, "no simple iso-set of size atyp for " + to_string(lambda));
  TamePrediction p;
  p.k = atyp(t, lambda);
  p.target = alg::q(t.n - 2 * p.k);
  RVec c = core(t, lambda).a_part;
  std::sort(c.begin(), c.end(), std::greater<Rational>());
  p.lambda_prime.a = c;
  int run = 0, best = 0;
  for (const auto& x : lambda.a) {
    run = x == 0 ? run + 1 : 0;
    best = std::max(best, run);
  }
  p.doubled = best < 2 * p.k;
  return p;
}

std::string to_string(const TamePrediction& p) {
  std::string w = "(" + join(p.lambda_prime.a) + ")";
  return std::string(p.doubled ? "doubled " : "single ") + w + " of " + to_string(p.target);
}

int primitq_s(const Weight& lambda, const std::vector<Root>& s) {
  AlgebraType t = type_of(lambda);
  int count = 0;
  for (const auto& beta : s) {
    if (static_cast<int>(beta.eps.size()) != t.n || !beta.delta.empty() || beta.d != 0)
      throw Error(ErrorKind::NotARoot, to_string(beta) + " is not a root of " + to_string(t));
    int i = -1, j = -1, support = 0;
    for (int c = 0; c < t.n; ++c) {
      if (beta.eps[c] != 0) ++support;
      if (beta.eps[c] == 1) i = c;
      if (beta.eps[c] == -1) j = c;
    }
    if (support != 2 || i < 0 || j < 0) throw Error(ErrorKind::NotARoot, to_string(beta) + " is not eps_i - eps_j");
    if (lambda.a[i] + lambda.a[j] != 0)
      throw Error(ErrorKind::NotOrthogonal, to_string(beta) + " against " + to_string(lambda));
    Rational diff = lambda.a[i] - lambda.a[j];
    if (is_integer(diff) && diff > 0) ++count;
  }
  return count;
}

}  // namespace superds
