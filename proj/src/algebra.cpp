#include "superds/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "superds/error.hpp"

namespace superds {

namespace alg {

namespace {
AlgebraType make(Family f, int m, int n) {
  AlgebraType t;
  t.family = f;
  t.m = m;
  t.n = n;
  return t;
}
}  // namespace

AlgebraType gl(int m, int n) { return make(Family::GL, m, n); }
AlgebraType sl(int m, int n) { return make(Family::SL, m, n); }
AlgebraType pgl(int n) { return make(Family::PGL, n, n); }
AlgebraType psl(int n) { return make(Family::PSL, n, n); }
AlgebraType p(int n) { return make(Family::P, 0, n); }
AlgebraType pprime(int n) { return make(Family::Pprime, 0, n); }
AlgebraType q(int n) { return make(Family::Q, 0, n); }
AlgebraType sq(int n) { return make(Family::SQ, 0, n); }
AlgebraType pq(int n) { return make(Family::PQ, 0, n); }
AlgebraType psq(int n) { return make(Family::PSQ, 0, n); }
AlgebraType B(int m, int n) { return make(Family::OSP_B, m, n); }
AlgebraType D(int m, int n) { return make(Family::OSP_D, m, n); }
AlgebraType d21a(const Rational& a) {
  AlgebraType t = make(Family::D21a, 0, 0);
  t.a = a;
  return t;
}
AlgebraType g3() { return make(Family::G3, 0, 0); }
AlgebraType f4() { return make(Family::F4, 0, 0); }

AlgebraType affine(const AlgebraType& finite) {
  if (finite.is_affine())
    throw Error(ErrorKind::UnsupportedType, "affinization of an affine type");
  AlgebraType t = finite;
  t.base = finite.family;
  t.family = Family::AffineUntwisted;
  return t;
}

AlgebraType twisted(Twist label, int m, int n, bool b_type) {
  AlgebraType t = make(Family::AffineTwisted, m, n);
  t.twist = label;
  t.b_type = label == Twist::A2 ? b_type : true;
  return t;
}

}  // namespace alg

bool AlgebraType::operator==(const AlgebraType& o) const {
  if (family != o.family || m != o.m || n != o.n) return false;
  if (family == Family::AffineUntwisted) {
    if (base != o.base) return false;
    if (base == Family::D21a) return a == o.a;
    return true;
  }
  if (family == Family::AffineTwisted) return twist == o.twist && b_type == o.b_type;
  if (family == Family::D21a) return a == o.a;
  return true;
}

AlgebraType AlgebraType::finite_part() const {
  if (family == Family::AffineUntwisted) {
    AlgebraType t = *this;
    t.family = base;
    t.base = Family::GL;
    return t;
  }
  if (family == Family::AffineTwisted)
    return (twist == Twist::A2 && !b_type) ? alg::D(m, n) : alg::B(m, n);
  return *this;
}

Family AlgebraType::finite_family() const { return finite_part().family; }

std::string to_string(const SuperDim& d) {
  return "(" + std::to_string(d.even) + "|" + std::to_string(d.odd) + ")";
}

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "|" + std::to_string(b) + ")";
}

std::string finite_string(const AlgebraType& t) {
  switch (t.family) {
    case Family::GL: return "gl" + pair_str(t.m, t.n);
    case Family::SL: return "sl" + pair_str(t.m, t.n);
    case Family::PGL: return "pgl" + pair_str(t.n, t.n);
    case Family::PSL: return "psl" + pair_str(t.n, t.n);
    case Family::P: return "p(" + std::to_string(t.n) + ")";
    case Family::Pprime: return "p'(" + std::to_string(t.n) + ")";
    case Family::Q: return "q(" + std::to_string(t.n) + ")";
    case Family::SQ: return "sq(" + std::to_string(t.n) + ")";
    case Family::PQ: return "pq(" + std::to_string(t.n) + ")";
    case Family::PSQ: return "psq(" + std::to_string(t.n) + ")";
    case Family::OSP_B: return "osp" + pair_str(2 * t.m + 1, 2 * t.n);
    case Family::OSP_D: return "osp" + pair_str(2 * t.m, 2 * t.n);
    case Family::D21a: return "D(2,1;" + to_string(t.a) + ")";
    case Family::G3: return "G(3)";
    case Family::F4: return "F(4)";
    default: break;
  }
  return "?";
}

}  // namespace

std::string to_string(const AlgebraType& t) {
  if (t.family == Family::AffineUntwisted) return finite_string(t.finite_part()) + "^(1)";
  if (t.family == Family::AffineTwisted) {
    switch (t.twist) {
      case Twist::A2:
        return t.b_type ? "A" + pair_str(2 * t.m, 2 * t.n - 1) + "^(2)"
                        : "A" + pair_str(2 * t.m - 1, 2 * t.n - 1) + "^(2)";
      case Twist::A4: return "A" + pair_str(2 * t.m, 2 * t.n) + "^(4)";
      case Twist::D2: return "D" + pair_str(t.m + 1, t.n) + "^(2)";
    }
  }
  return finite_string(t);
}

std::string to_string(const DSTarget& t) {
  if (auto* a = std::get_if<AlgebraType>(&t)) return to_string(*a);
  return std::get<Degenerate>(t).label;
}

void validate(const AlgebraType& t) {
  auto bad = [&](const char* why) {
    throw Error(ErrorKind::UnsupportedType, to_string(t) + ": " + why);
  };
  if (t.m < 0 || t.n < 0) bad("negative parameter");
  switch (t.family) {
    case Family::GL:
      if (t.m + t.n < 1) bad("gl(0|0) is zero");
      return;
    case Family::SL:
      if (t.m + t.n < 2) bad("sl(m|n) needs m+n >= 2");
      return;
    case Family::PGL:
    case Family::PSL:
      if (t.m != t.n || t.n < 1) bad("needs (n|n) with n >= 1");
      return;
    case Family::P:
      if (t.n < 1) bad("p(n) needs n >= 1");
      return;
    case Family::Pprime:
      if (t.n < 2) bad("p'(n) needs n >= 2");
      return;
    case Family::Q: return;
    case Family::SQ:
    case Family::PQ:
    case Family::PSQ:
      if (t.n < 2) bad("needs n >= 2");
      return;
    case Family::OSP_B:
    case Family::OSP_D:
      if (t.m + t.n < 1) bad("zero algebra");
      return;
    case Family::D21a:
      if (t.a == 0 || t.a == -1) bad("a must differ from 0 and -1");
      return;
    case Family::G3:
    case Family::F4: return;
    case Family::AffineUntwisted: {
      AlgebraType f = t.finite_part();
      validate(f);
      switch (f.family) {
        case Family::GL:
        case Family::OSP_B:
        case Family::OSP_D:
        case Family::D21a:
        case Family::G3:
        case Family::F4: return;
        case Family::SL:
          if (f.m == f.n) bad("no tabulated affinization of sl(n|n)");
          return;
        default: bad("no affinization tabulated for this family");
      }
      return;
    }
    case Family::AffineTwisted:
      if (t.m + t.n < 1) bad("zero finite part");
      if (t.twist == Twist::A2 && !t.b_type && t.m < 1) bad("A(2m-1|2n-1) needs m >= 1");
      return;
  }
}

AlgebraType parse_algebra(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  static const std::regex pair_re(R"(^(gl|sl|pgl|psl|osp|B|D|A)\((\d+)\|(\d+)\)(?:\^\((\d)\))?$)");
  static const std::regex single_re(R"(^(gl|sl)\((\d+)\)(?:\^\((\d)\))?$)");
  static const std::regex size_re(R"(^(p|p'|pprime|q|sq|pq|psq)\((\d+)\)$)");
  static const std::regex d21_re(R"(^D\(2,1;([^)]+)\)(?:\^\((\d)\))?$)");
  static const std::regex exc_re(R"(^(G\(3\)|F\(4\))(?:\^\((\d)\))?$)");
  std::smatch mt;
  auto fail = [&](const std::string& why) -> AlgebraType {
    throw Error(ErrorKind::Parse, "algebra '" + raw + "': " + why);
  };
  auto finish = [&](AlgebraType t, const std::string& tw) {
    if (!tw.empty()) {
      if (tw != "1") fail("twist ^(" + tw + ") not defined for this family");
      t = alg::affine(t);
    }
    validate(t);
    return t;
  };

  if (std::regex_match(s, mt, pair_re)) {
    std::string fam = mt[1];
    int a = std::stoi(mt[2]), b = std::stoi(mt[3]);
    std::string tw = mt[4];
    if (fam == "gl") return finish(alg::gl(a, b), tw);
    if (fam == "sl") return finish(alg::sl(a, b), tw);
    if (fam == "pgl" || fam == "psl") {
      if (a != b) fail("needs equal parameters");
      return finish(fam == "pgl" ? alg::pgl(a) : alg::psl(a), tw);
    }
    if (fam == "osp") {
      if (b % 2) fail("osp(M|N) needs N even");
      return finish(a % 2 ? alg::B((a - 1) / 2, b / 2) : alg::D(a / 2, b / 2), tw);
    }
    if (fam == "B") return finish(alg::B(a, b), tw);
    if (fam == "D") {
      if (tw == "2") {
        if (a < 1) fail("D(p|q)^(2) needs p >= 1");
        AlgebraType t = alg::twisted(Twist::D2, a - 1, b);
        validate(t);
        return t;
      }
      return finish(alg::D(a, b), tw);
    }
    // A(M|N) = sl(M+1|N+1) and its twisted affinizations.
    if (tw == "2") {
      if (b % 2 == 0) fail("A(M|N)^(2) needs N odd");
      AlgebraType t = a % 2 == 0 ? alg::twisted(Twist::A2, a / 2, (b + 1) / 2, true)
                                 : alg::twisted(Twist::A2, (a + 1) / 2, (b + 1) / 2, false);
      validate(t);
      return t;
    }
    if (tw == "4") {
      if (a % 2 || b % 2) fail("A(M|N)^(4) needs M, N even");
      AlgebraType t = alg::twisted(Twist::A4, a / 2, b / 2);
      validate(t);
      return t;
    }
    return finish(alg::sl(a + 1, b + 1), tw);
  }
  if (std::regex_match(s, mt, single_re)) {
    int a = std::stoi(mt[2]);
    return finish(mt[1] == "gl" ? alg::gl(a, 0) : alg::sl(a, 0), mt[3]);
  }
  if (std::regex_match(s, mt, size_re)) {
    std::string fam = mt[1];
    int k = std::stoi(mt[2]);
    AlgebraType t;
    if (fam == "p") t = alg::p(k);
    else if (fam == "p'" || fam == "pprime") t = alg::pprime(k);
    else if (fam == "q") t = alg::q(k);
    else if (fam == "sq") t = alg::sq(k);
    else if (fam == "pq") t = alg::pq(k);
    else t = alg::psq(k);
    validate(t);
    return t;
  }
  if (std::regex_match(s, mt, d21_re)) return finish(alg::d21a(parse_rational(mt[1])), mt[2]);
  if (std::regex_match(s, mt, exc_re))
    return finish(mt[1] == "G(3)" ? alg::g3() : alg::f4(), mt[2]);
  return fail("unrecognised");
}

bool is_qtype(const AlgebraType& t) {
  switch (t.family) {
    case Family::Q:
    case Family::SQ:
    case Family::PQ:
    case Family::PSQ: return true;
    default: return false;
  }
}

std::pair<int, int> coord_dims(const AlgebraType& t) {
  AlgebraType f = t.finite_part();
  switch (f.family) {
    case Family::GL:
    case Family::SL:
    case Family::PGL:
    case Family::PSL:
    case Family::OSP_B:
    case Family::OSP_D: return {f.m, f.n};
    case Family::Q:
    case Family::SQ:
    case Family::PQ:
    case Family::PSQ: return {f.n, 0};
    default: break;
  }
  throw Error(ErrorKind::UnsupportedType, "no weight coordinates for " + to_string(t));
}

}  // namespace superds
