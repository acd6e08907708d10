#include "superds/rootsys.hpp"

#include <cstdlib>
#include <tuple>

#include "superds/error.hpp"
#include "superds/linalg.hpp"

namespace superds {

const char* to_string(RootClass c) {
  switch (c) {
    case RootClass::Red: return "Red";
    case RootClass::NonReduced: return "NonReduced";
    case RootClass::Iso: return "Iso";
    case RootClass::Nis: return "Nis";
    case RootClass::Imaginary: return "Imaginary";
  }
  return "?";
}

bool Root::operator<(const Root& o) const {
  return std::tie(d, eps, delta, parity) < std::tie(o.d, o.eps, o.delta, o.parity);
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& x : r.eps) x = -x;
  for (auto& x : r.delta) x = -x;
  r.d = -r.d;
  return r;
}

Root Root::operator+(const Root& o) const {
  if (eps.size() != o.eps.size() || delta.size() != o.delta.size())
    throw Error(ErrorKind::DimensionMismatch, "root sum");
  Root r = *this;
  for (size_t i = 0; i < eps.size(); ++i) r.eps[i] += o.eps[i];
  for (size_t j = 0; j < delta.size(); ++j) r.delta[j] += o.delta[j];
  r.d += o.d;
  r.parity = parity == o.parity ? Parity::Even : Parity::Odd;
  return r;
}

bool Root::is_finite_zero() const {
  for (int x : eps)
    if (x) return false;
  for (int x : delta)
    if (x) return false;
  return true;
}

std::string to_string(const Root& r) {
  std::string s;
  auto term = [&](int c, const std::string& name) {
    if (!c) return;
    if (c < 0) s += "-";
    else if (!s.empty()) s += "+";
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += name;
  };
  for (size_t i = 0; i < r.eps.size(); ++i) term(r.eps[i], "e" + std::to_string(i + 1));
  for (size_t j = 0; j < r.delta.size(); ++j) term(r.delta[j], "d" + std::to_string(j + 1));
  term(r.d, "D");
  if (s.empty()) s = "0";
  return s + (r.parity == Parity::Odd ? " (odd)" : " (even)");
}

Rational form(const Root& x, const Root& y) {
  Rational s = 0;
  for (size_t i = 0; i < x.eps.size(); ++i) s += x.eps[i] * y.eps[i];
  for (size_t j = 0; j < x.delta.size(); ++j) s -= x.delta[j] * y.delta[j];
  return s;
}

Rational form(const Functional& x, const Root& y) {
  Rational s = 0;
  for (size_t i = 0; i < x.eps.size(); ++i) s += x.eps[i] * y.eps[i];
  for (size_t j = 0; j < x.delta.size(); ++j) s -= x.delta[j] * y.delta[j];
  return s;
}

Functional as_functional(const Root& r) {
  Functional f;
  for (int x : r.eps) f.eps.emplace_back(x);
  for (int x : r.delta) f.delta.emplace_back(x);
  f.d = r.d;
  return f;
}

Weight as_weight(const Root& r) {
  Weight w;
  for (int x : r.eps) w.a.emplace_back(x);
  for (int x : r.delta) w.b.emplace_back(-x);
  w.d = r.d;
  return w;
}

Rational pairing(const Weight& w, const Root& r) { return pairing(w, as_functional(r)); }

namespace {

struct Shape {
  std::vector<int> e;  // nonzero eps values
  std::vector<int> dl; // nonzero delta values
};

Shape shape(const Root& r) {
  Shape s;
  for (int x : r.eps)
    if (x) s.e.push_back(x);
  for (int x : r.delta)
    if (x) s.dl.push_back(x);
  return s;
}

bool unit(int x) { return x == 1 || x == -1; }
bool opposite_pair(const std::vector<int>& v) {
  return v.size() == 2 && v[0] == -v[1] && unit(v[0]);
}
bool unit_pair(const std::vector<int>& v) { return v.size() == 2 && unit(v[0]) && unit(v[1]); }

// Membership of the finite part of r in the finite root system of family f.
bool finite_member(Family f, const Root& r) {
  Shape s = shape(r);
  const bool odd = r.parity == Parity::Odd;
  switch (f) {
    case Family::GL:
      if (odd) return s.e.size() == 1 && s.dl.size() == 1 && unit(s.e[0]) && s.dl[0] == -s.e[0];
      return (opposite_pair(s.e) && s.dl.empty()) || (s.e.empty() && opposite_pair(s.dl));
    case Family::Q: return s.dl.empty() && opposite_pair(s.e);
    case Family::OSP_B:
    case Family::OSP_D: {
      const bool b = f == Family::OSP_B;
      if (odd) {
        if (s.e.size() == 1 && s.dl.size() == 1) return unit(s.e[0]) && unit(s.dl[0]);
        return b && s.e.empty() && s.dl.size() == 1 && unit(s.dl[0]);
      }
      if (s.dl.empty()) return unit_pair(s.e) || (b && s.e.size() == 1 && unit(s.e[0]));
      if (s.e.empty())
        return unit_pair(s.dl) || (s.dl.size() == 1 && std::abs(s.dl[0]) == 2);
      return false;
    }
    default: break;
  }
  return false;
}

Root blank(int m, int n, Parity p) {
  Root r;
  r.eps.assign(m, 0);
  r.delta.assign(n, 0);
  r.parity = p;
  return r;
}

std::vector<Root> enumerate_finite(Family f, int m, int n) {
  std::vector<Root> out;
  auto push = [&](Root r) {
    if (finite_member(f, r)) out.push_back(r);
  };
  const int signs[2] = {1, -1};
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        for (int si : signs)
          for (int sj : signs) {
            Root r = blank(m, n, p);
            r.eps[i] = si;
            r.eps[j] = sj;
            push(r);
          }
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        for (int si : signs)
          for (int sj : signs) {
            Root r = blank(m, n, p);
            r.delta[i] = si;
            r.delta[j] = sj;
            push(r);
          }
      }
    for (int i = 0; i < m; ++i)
      for (int si : signs) {
        Root r = blank(m, n, p);
        r.eps[i] = si;
        push(r);
      }
    for (int j = 0; j < n; ++j)
      for (int c : {1, -1, 2, -2}) {
        Root r = blank(m, n, p);
        r.delta[j] = c;
        push(r);
      }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        for (int si : signs)
          for (int sj : signs) {
            Root r = blank(m, n, p);
            r.eps[i] = si;
            r.delta[j] = sj;
            push(r);
          }
  }
  return out;
}

Family root_family(const AlgebraType& t) {
  AlgebraType f = t.finite_part();
  switch (f.family) {
    case Family::GL:
    case Family::OSP_B:
    case Family::OSP_D:
    case Family::Q: return f.family;
    default: break;
  }
  throw Error(ErrorKind::UnsupportedType, "no root system model for " + to_string(t));
}

}  // namespace

int RootSystem::iso_step() const {
  if (type.family == Family::AffineTwisted && (type.twist == Twist::A4 || type.twist == Twist::D2))
    return 2;
  return 1;
}

bool RootSystem::contains(const Root& r) const {
  if (static_cast<int>(r.eps.size()) != m || static_cast<int>(r.delta.size()) != n) return false;
  if (!affine()) return r.d == 0 && finite_member(root_family(type), r);
  if (r.is_finite_zero()) return r.d != 0 && r.parity == Parity::Even;
  if (twisted()) {
    Root f = r;
    f.d = 0;
    Shape s = shape(f);
    return r.parity == Parity::Odd && s.e.size() == 1 && s.dl.size() == 1 && unit(s.e[0]) &&
           unit(s.dl[0]) && r.d % iso_step() == 0;
  }
  return finite_member(root_family(type), r);
}

bool RootSystem::contains_any_parity(const Root& r) const {
  Root e = r, o = r;
  e.parity = Parity::Even;
  o.parity = Parity::Odd;
  return contains(e) || contains(o);
}

std::vector<Root> RootSystem::finite_roots() const {
  return enumerate_finite(root_family(type), m, n);
}

RootSystem build(const AlgebraType& t, int degree_bound) {
  validate(t);
  RootSystem sys;
  sys.type = t;
  Family f = root_family(t);
  sys.q_ = f == Family::Q;
  auto [m, n] = coord_dims(t);
  sys.m = m;
  sys.n = n;
  std::vector<Root> fin = enumerate_finite(f, m, n);
  if (!t.is_affine()) {
    sys.roots = fin;
    return sys;
  }
  if (degree_bound < 0) throw Error(ErrorKind::RankOutOfRange, "negative degree bound");
  sys.degree_bound = degree_bound;
  for (int k = -degree_bound; k <= degree_bound; ++k) {
    for (const auto& r : fin) {
      Root s = r;
      s.d = k;
      if (sys.contains(s)) sys.roots.push_back(s);
    }
    if (k != 0) {
      Root im = blank(m, n, Parity::Even);
      im.d = k;
      sys.roots.push_back(im);
    }
  }
  return sys;
}

RootClass classify(const RootSystem& sys, const Root& alpha) {
  if (!sys.contains(alpha)) throw Error(ErrorKind::NotARoot, to_string(alpha));
  if (alpha.is_finite_zero()) return RootClass::Imaginary;
  if (sys.qtype()) return alpha.parity == Parity::Even ? RootClass::Red : RootClass::Iso;
  if (sys.twisted()) return RootClass::Iso;
  if (alpha.parity == Parity::Even) {
    bool halvable = alpha.d % 2 == 0;
    for (int x : alpha.eps) halvable = halvable && x % 2 == 0;
    for (int x : alpha.delta) halvable = halvable && x % 2 == 0;
    if (halvable) {
      Root h = alpha;
      for (auto& x : h.eps) x /= 2;
      for (auto& x : h.delta) x /= 2;
      h.d /= 2;
      if (sys.contains_any_parity(h)) return RootClass::NonReduced;
    }
    return RootClass::Red;
  }
  Root twice = alpha + alpha;
  twice.parity = Parity::Even;
  return sys.contains(twice) ? RootClass::Nis : RootClass::Iso;
}

Functional covee(const RootSystem& sys, const Root& alpha) {
  RootClass c = classify(sys, alpha);
  if (c == RootClass::Imaginary) throw Error(ErrorKind::ImaginaryRoot, to_string(alpha));
  Functional f = as_functional(alpha);
  if (sys.qtype() && c == RootClass::Iso) {
    // eps_i - eps_j has coroot eps_i + eps_j
    for (auto& x : f.eps) x = abs(x);
    f.d = 0;
    return f;
  }
  Rational nn = form(alpha, alpha);
  if (nn == 0) return f;
  Rational s = 2 / nn;
  for (auto& x : f.eps) x *= s;
  for (auto& x : f.delta) x *= s;
  f.d *= s;
  return f;
}

Functional reflect(const Functional& v, const Root& gamma) {
  Rational nn = form(gamma, gamma);
  if (nn == 0) throw Error(ErrorKind::NotARoot, "reflection in an isotropic vector");
  Rational c = 2 * form(v, gamma) / nn;
  Functional out = v;
  for (size_t i = 0; i < out.eps.size(); ++i) out.eps[i] -= c * gamma.eps[i];
  for (size_t j = 0; j < out.delta.size(); ++j) out.delta[j] -= c * gamma.delta[j];
  out.d -= c * gamma.d;
  return out;
}

Root reflect(const Root& v, const Root& gamma) {
  Functional f = reflect(as_functional(v), gamma);
  Root r = v;
  auto to_int = [](const Rational& q) {
    if (!is_integer(q)) throw Error(ErrorKind::NotARoot, "non-integral reflection image");
    return static_cast<int>(q.get_num().get_si());
  };
  for (size_t i = 0; i < r.eps.size(); ++i) r.eps[i] = to_int(f.eps[i]);
  for (size_t j = 0; j < r.delta.size(); ++j) r.delta[j] = to_int(f.delta[j]);
  r.d = to_int(f.d);
  return r;
}

namespace {

RVec coords(const Root& r) {
  RVec v;
  for (int x : r.eps) v.emplace_back(x);
  for (int x : r.delta) v.emplace_back(x);
  return v;
}

std::vector<Root> distinguished_simple(Family f, int m, int n) {
  std::vector<Root> s;
  auto e = [&](int i, int c = 1) {
    Root r = blank(m, n, Parity::Even);
    r.eps[i] = c;
    return r;
  };
  auto dl = [&](int j, int c = 1) {
    Root r = blank(m, n, Parity::Even);
    r.delta[j] = c;
    return r;
  };
  auto odd = [](Root r) {
    r.parity = Parity::Odd;
    return r;
  };
  auto diff = [](Root x, const Root& y) {
    for (size_t i = 0; i < x.eps.size(); ++i) x.eps[i] -= y.eps[i];
    for (size_t j = 0; j < x.delta.size(); ++j) x.delta[j] -= y.delta[j];
    return x;
  };
  auto sum = [](Root x, const Root& y) {
    for (size_t i = 0; i < x.eps.size(); ++i) x.eps[i] += y.eps[i];
    for (size_t j = 0; j < x.delta.size(); ++j) x.delta[j] += y.delta[j];
    return x;
  };
  switch (f) {
    case Family::GL:
      for (int i = 0; i + 1 < m; ++i) s.push_back(diff(e(i), e(i + 1)));
      if (m > 0 && n > 0) s.push_back(odd(diff(e(m - 1), dl(0))));
      for (int j = 0; j + 1 < n; ++j) s.push_back(diff(dl(j), dl(j + 1)));
      break;
    case Family::Q:
      for (int i = 0; i + 1 < m; ++i) s.push_back(odd(diff(e(i), e(i + 1))));
      break;
    case Family::OSP_B:
    case Family::OSP_D:
      for (int j = 0; j + 1 < n; ++j) s.push_back(diff(dl(j), dl(j + 1)));
      if (n > 0 && m > 0) s.push_back(odd(diff(dl(n - 1), e(0))));
      for (int i = 0; i + 1 < m; ++i) s.push_back(diff(e(i), e(i + 1)));
      if (f == Family::OSP_B) {
        if (m > 0) s.push_back(e(m - 1));
        else if (n > 0) s.push_back(odd(dl(n - 1)));
      } else {
        if (m >= 2) s.push_back(sum(e(m - 2), e(m - 1)));
        else if (m == 1 && n > 0) s.push_back(odd(sum(dl(n - 1), e(0))));
        else if (m == 0 && n > 0) s.push_back(dl(n - 1, 2));
      }
      break;
    default: break;
  }
  return s;
}

void check_simple_isotropic(const RootSystem& sys, const Base& base, const Root& beta) {
  bool simple = false;
  for (const auto& s : base.simple)
    if (s == beta) simple = true;
  if (!simple || sys.qtype() || !sys.contains(beta) || classify(sys, beta) != RootClass::Iso)
    throw Error(ErrorKind::NotSimpleIsotropic, to_string(beta));
}

}  // namespace

bool is_positive(const RootSystem& sys, const Base& base, const Root& alpha) {
  if (alpha.d != 0) return alpha.d > 0;
  if (alpha.is_finite_zero()) return false;
  if (base.simple.empty()) return false;
  std::vector<RVec> cols;
  for (const auto& s : base.simple) cols.push_back(coords(s));
  Matrix mat = Matrix::from_columns(sys.m + sys.n, cols);
  auto c = solve(mat, coords(alpha));
  if (!c) throw Error(ErrorKind::NotARoot, "outside the span of the base: " + to_string(alpha));
  bool nonneg = true, nonpos = true;
  for (const auto& x : *c) {
    if (sgn(x) < 0) nonneg = false;
    if (sgn(x) > 0) nonpos = false;
  }
  if (!nonneg && !nonpos)
    throw Error(ErrorKind::NotARoot, "mixed-sign decomposition of " + to_string(alpha));
  return nonneg;
}

std::vector<Root> positive_roots(const RootSystem& sys, const Base& base) {
  std::vector<Root> out;
  for (const auto& r : sys.roots)
    if (is_positive(sys, base, r)) out.push_back(r);
  return out;
}

Weight weyl_vector(const RootSystem& sys, const Base& base) {
  Weight rho;
  rho.a.assign(sys.m, 0);
  rho.b.assign(sys.n, 0);
  if (sys.qtype()) return rho;
  for (const auto& r : sys.finite_roots()) {
    if (!is_positive(sys, base, r)) continue;
    Weight w = as_weight(r).scaled(r.parity == Parity::Even ? Rational(1, 2) : Rational(-1, 2));
    w.d = 0;
    rho = rho + w;
  }
  return rho;
}

Base distinguished_base(const AlgebraType& t) {
  RootSystem sys = build(t.finite_part());
  Base base;
  base.simple = distinguished_simple(root_family(t), sys.m, sys.n);
  base.rho = weyl_vector(sys, base);
  return base;
}

Base odd_reflect(const RootSystem& sys, const Base& base, const Root& beta) {
  check_simple_isotropic(sys, base, beta);
  Base out;
  for (const auto& a : base.simple) {
    if (a == beta) out.simple.push_back(-beta);
    else if (form(a, beta) != 0) out.simple.push_back(a + beta);
    else out.simple.push_back(a);
  }
  out.rho = base.rho + as_weight(beta);
  return out;
}

Weight hw_transform(const RootSystem& sys, const Weight& nu, const Root& beta, const Base& base) {
  check_simple_isotropic(sys, base, beta);
  if (pairing(nu, beta) != 0) return nu - as_weight(beta);
  return nu;
}

}  // namespace superds
