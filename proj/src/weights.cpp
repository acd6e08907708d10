#include "superds/weights.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "superds/error.hpp"
#include "superds/linalg.hpp"

namespace superds {

RVec CoreMultiset::flat() const {
  RVec v = a_part;
  v.insert(v.end(), b_part.begin(), b_part.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::string to_string(const CoreMultiset& c) {
  if (!c.typed) return "{" + join(c.a_part) + "}";
  return "{" + join(c.a_part) + "}⊔{" + join(c.b_part) + "}";
}

void check_weight(const AlgebraType& t, const Weight& lambda) {
  auto [m, n] = coord_dims(t);
  if (static_cast<int>(lambda.a.size()) != m || static_cast<int>(lambda.b.size()) != n)
    throw Error(ErrorKind::DimensionMismatch,
                "weight " + to_string(lambda) + " does not fit " + to_string(t) + " (expects " +
                    std::to_string(m) + " eps- and " + std::to_string(n) + " delta-entries)");
}

namespace {

enum class Rule { GL, OSP, Q };

struct CoreSpec {
  Rule rule;
  Rational modulus;
};

CoreSpec core_spec(const AlgebraType& t, const Weight& lambda) {
  auto unsupported = [&]() -> CoreSpec {
    throw Error(ErrorKind::UnsupportedType, "no core rule for " + to_string(t));
  };
  if (t.family == Family::AffineTwisted)
    return {Rule::OSP, t.twist == Twist::A2 ? lambda.k : 2 * lambda.k};
  Family f = t.finite_family();
  Rational mod = t.is_affine() ? lambda.k : Rational(0);
  switch (f) {
    case Family::GL: return {Rule::GL, mod};
    case Family::OSP_B:
    case Family::OSP_D: return {Rule::OSP, mod};
    case Family::Q:
      if (t.is_affine()) return unsupported();
      return {Rule::Q, 0};
    default: break;
  }
  return unsupported();
}

Rational canonical(const Rational& v, const CoreSpec& s) {
  if (s.modulus == 0) return s.rule == Rule::OSP ? v * v : v;
  Rational r = mod_q(v, s.modulus);
  if (s.rule == Rule::OSP) {
    Rational other = abs(s.modulus) - r;
    if (other < r) r = other;
  }
  return r;
}

}  // namespace

CoreMultiset core(const AlgebraType& t, const Weight& lambda) {
  validate(t);
  CoreSpec spec = core_spec(t, lambda);
  check_weight(t, lambda);
  CoreMultiset c;
  c.modulus = abs(spec.modulus);
  c.signed_fold = spec.rule == Rule::OSP && spec.modulus != 0;
  if (spec.rule == Rule::Q) {
    c.typed = false;
    std::map<Rational, int> cnt;
    for (const auto& x : lambda.a) ++cnt[x];
    for (auto& [v, k] : cnt) {
      int left = k;
      if (v == 0) left = k % 2;
      else left = k - std::min(k, cnt.count(-v) ? cnt.at(-v) : 0);
      for (int i = 0; i < left; ++i) c.a_part.push_back(v);
    }
    return c;
  }
  std::map<Rational, std::pair<int, int>> cnt;
  for (const auto& x : lambda.a) ++cnt[canonical(x, spec)].first;
  for (const auto& y : lambda.b) ++cnt[canonical(y, spec)].second;
  for (auto& [v, ab] : cnt) {
    int pairs = std::min(ab.first, ab.second);
    for (int i = pairs; i < ab.first; ++i) c.a_part.push_back(v);
    for (int i = pairs; i < ab.second; ++i) c.b_part.push_back(v);
  }
  return c;
}

int atyp(const AlgebraType& t, const Weight& lambda) {
  CoreMultiset c = core(t, lambda);
  auto [m, n] = coord_dims(t);
  return (m + n - static_cast<int>(c.size())) / 2;
}

namespace {

void check_odd_real(const RootSystem& sys, const std::vector<Root>& s) {
  for (const auto& r : s) {
    if (r.parity != Parity::Odd || classify(sys, r) == RootClass::Imaginary)
      throw Error(ErrorKind::NotARoot, "not an odd real root: " + to_string(r));
  }
}

RVec coords(const Root& r) {
  RVec v;
  for (int x : r.eps) v.emplace_back(x);
  for (int x : r.delta) v.emplace_back(x);
  v.emplace_back(r.d);
  return v;
}

}  // namespace

bool isoset_by_definition(const RootSystem& sys, const std::vector<Root>& s) {
  check_odd_real(sys, s);
  if (sys.twisted())
    throw Error(ErrorKind::UnsupportedType, "even roots of twisted types are not modelled");
  if (s.empty()) return true;
  std::vector<RVec> vecs;
  for (const auto& r : s) vecs.push_back(coords(r));
  if (independent_subset(vecs).size() != s.size()) return false;
  std::vector<Root> sym = s;
  for (const auto& r : s) sym.push_back(-r);
  for (const auto& x : sym)
    for (const auto& y : sym) {
      Root z = x + y;
      if (z.parity == Parity::Even && sys.contains(z)) return false;
    }
  return true;
}

bool isoset_by_orthogonality(const RootSystem& sys, const std::vector<Root>& s) {
  check_odd_real(sys, s);
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j) {
      if (form(covee(sys, s[j]), s[i]) != 0) return false;
      if (i != j && ((s[i] + s[j]).is_finite_zero() || (s[i] + (-s[j])).is_finite_zero()))
        return false;
    }
  return true;
}

bool is_isoset(const RootSystem& sys, const std::vector<Root>& s) {
  bool crit = isoset_by_orthogonality(sys, s);
  if (sys.twisted()) return crit;
  bool def = isoset_by_definition(sys, s);
  if (def != crit)
    throw std::logic_error("iso-set criteria disagree on a set of " + std::to_string(s.size()) +
                           " roots of " + to_string(sys.type));
  return def;
}

bool is_isoset(const AlgebraType& t, const std::vector<Root>& s) {
  int bound = 0;
  for (const auto& r : s) bound = std::max(bound, std::abs(r.d));
  return is_isoset(build(t, t.is_affine() ? bound : 0), s);
}

std::vector<Root> max_orthogonal_isoset(const AlgebraType& t, const Weight& lambda,
                                        int degree_bound) {
  RootSystem sys = build(t, t.is_affine() ? degree_bound : 0);
  check_weight(t, lambda);
  Base base = distinguished_base(t);
  std::vector<Root> candidates;
  for (const auto& r : sys.finite_roots()) {
    if (r.parity != Parity::Odd || !is_positive(sys, base, r)) continue;
    if (!sys.qtype() && classify(sys, r) != RootClass::Iso) continue;
    if (!t.is_affine()) {
      candidates.push_back(r);
      continue;
    }
    // One candidate per finite class: the shift making it orthogonal.
    Rational c = pairing(lambda, r);
    if (lambda.k == 0) {
      if (c == 0) candidates.push_back(r);
      continue;
    }
    Rational shift = -c / lambda.k;
    if (!is_integer(shift) || !shift.get_num().fits_sint_p()) continue;
    Root s = r;
    s.d = static_cast<int>(shift.get_num().get_si());
    if (s.d % sys.iso_step() == 0) candidates.push_back(s);
  }
  std::vector<Root> chosen;
  for (const auto& r : candidates) {
    if (pairing(lambda, covee(sys, r)) != 0) continue;
    chosen.push_back(r);
    if (!is_isoset(sys, chosen)) chosen.pop_back();
  }
  return chosen;
}

}  // namespace superds
