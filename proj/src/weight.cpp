#include "superds/weight.hpp"

#include <cctype>
#include <tuple>

#include "superds/error.hpp"

namespace superds {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

RVec parse_list(const std::string& s) {
  RVec out;
  bool blank = true;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) return out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_rational(tok));
  return out;
}

}  // namespace

bool Weight::operator<(const Weight& o) const {
  return std::tie(a, b, k, d) < std::tie(o.a, o.b, o.k, o.d);
}

Weight Weight::operator+(const Weight& o) const {
  if (a.size() != o.a.size() || b.size() != o.b.size())
    throw Error(ErrorKind::DimensionMismatch, "weight sum");
  Weight w = *this;
  for (size_t i = 0; i < a.size(); ++i) w.a[i] += o.a[i];
  for (size_t j = 0; j < b.size(); ++j) w.b[j] += o.b[j];
  w.k += o.k;
  w.d += o.d;
  return w;
}

Weight Weight::operator-(const Weight& o) const { return *this + o.scaled(-1); }

Weight Weight::scaled(const Rational& s) const {
  Weight w = *this;
  for (auto& x : w.a) x *= s;
  for (auto& x : w.b) x *= s;
  w.k *= s;
  w.d *= s;
  return w;
}

Weight parse_weight(const std::string& s) {
  auto parts = split(s, ';');
  if (parts.size() > 4) throw Error(ErrorKind::Parse, "too many ';' fields in weight '" + s + "'");
  Weight w;
  w.a = parse_list(parts[0]);
  if (parts.size() > 1) w.b = parse_list(parts[1]);
  if (parts.size() > 2) w.k = parse_rational(parts[2]);
  if (parts.size() > 3) w.d = parse_rational(parts[3]);
  return w;
}

std::string to_string(const Weight& w) {
  std::string s = join(w.a) + ";" + join(w.b);
  if (w.k != 0 || w.d != 0) s += ";" + to_string(w.k) + ";" + to_string(w.d);
  return s;
}

Rational pairing(const Weight& w, const Functional& f) {
  if (w.a.size() != f.eps.size() || w.b.size() != f.delta.size())
    throw Error(ErrorKind::DimensionMismatch,
                "weight has (" + std::to_string(w.a.size()) + "|" + std::to_string(w.b.size()) +
                    ") coordinates, functional (" + std::to_string(f.eps.size()) + "|" +
                    std::to_string(f.delta.size()) + ")");
  Rational s = f.d * w.k;
  for (size_t i = 0; i < f.eps.size(); ++i) s += f.eps[i] * w.a[i];
  for (size_t j = 0; j < f.delta.size(); ++j) s += f.delta[j] * w.b[j];
  return s;
}

}  // namespace superds
