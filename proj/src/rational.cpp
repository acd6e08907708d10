#include "superds/rational.hpp"

#include <cctype>

#include "superds/error.hpp"

namespace superds {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::ImaginaryRoot: return "ImaginaryRoot";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NotSimpleIsotropic: return "NotSimpleIsotropic";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::BoxTooLarge: return "BoxTooLarge";
    case ErrorKind::NotSquareZero: return "NotSquareZero";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::DoesNotCommute: return "DoesNotCommute";
    case ErrorKind::RelationViolated: return "RelationViolated";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::ParityOfIndex: return "ParityOfIndex";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::KWFails: return "KWFails";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
  }
  return "Unknown";
}

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool valid_int(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string s = trim(raw);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw Error(ErrorKind::Parse, "bad rational '" + raw + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + raw + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational floor_q(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

Rational mod_q(const Rational& q, const Rational& m) {
  Rational am = abs(m);
  return q - am * floor_q(q / am);
}

Rational pow_q(const Rational& q, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= q;
  return r;
}

std::string join(const RVec& v, const char* sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out;
}

}  // namespace superds
