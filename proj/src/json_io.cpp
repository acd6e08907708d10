#include "superds/json_io.hpp"

#include "superds/error.hpp"

namespace superds {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Parse, what);
}

RVec rvec_from_json(const Json& j) {
  require(j.is_array(), "expected an array of rationals");
  RVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json rvec_json(const RVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

std::vector<int> ints_from_json(const Json& j) {
  require(j.is_array(), "expected an array of integers");
  std::vector<int> v;
  for (const auto& x : j) {
    require(x.is_number_integer(), "expected an integer");
    v.push_back(x.get<int>());
  }
  return v;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_string(), "rationals are \"p/q\" strings");
  return parse_rational(j.get<std::string>());
}

Json to_json(const Weight& w) {
  return {{"a", rvec_json(w.a)}, {"b", rvec_json(w.b)}, {"k", to_json(w.k)}, {"d", to_json(w.d)}};
}

Weight weight_from_json(const Json& j) {
  require(j.is_object() && j.contains("a"), "weight object needs \"a\"");
  Weight w;
  w.a = rvec_from_json(j.at("a"));
  if (j.contains("b")) w.b = rvec_from_json(j.at("b"));
  if (j.contains("k")) w.k = rational_from_json(j.at("k"));
  if (j.contains("d")) w.d = rational_from_json(j.at("d"));
  return w;
}

Json to_json(const Root& r) {
  return {{"eps", r.eps},
          {"delta", r.delta},
          {"d", r.d},
          {"parity", r.parity == Parity::Odd ? "odd" : "even"}};
}

Root root_from_json(const Json& j) {
  require(j.is_object() && j.contains("eps"), "root object needs \"eps\"");
  Root r;
  r.eps = ints_from_json(j.at("eps"));
  if (j.contains("delta")) r.delta = ints_from_json(j.at("delta"));
  if (j.contains("d")) r.d = j.at("d").get<int>();
  std::string p = j.value("parity", "odd");
  require(p == "odd" || p == "even", "parity is \"even\" or \"odd\"");
  r.parity = p == "odd" ? Parity::Odd : Parity::Even;
  return r;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, size_t n) {
  require(j.is_array() && j.size() == n, "operator must have " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    require(j[i].is_array() && j[i].size() == n,
            "operator rows must have " + std::to_string(n) + " entries");
    for (size_t k = 0; k < n; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const MatrixSuperModule& m) {
  Json par = Json::array();
  for (auto p : m.parity) par.push_back(static_cast<int>(p));
  Json ops = Json::object();
  for (const auto& [name, a] : m.ops) ops[name] = to_json(a);
  return {{"parity", par}, {"ops", ops}, {"odd", m.odd}};
}

MatrixSuperModule module_from_json(const Json& j) {
  require(j.is_object() && j.contains("parity"), "module object needs \"parity\"");
  MatrixSuperModule m;
  for (int p : ints_from_json(j.at("parity"))) {
    require(p == 0 || p == 1, "parities are 0 or 1");
    m.parity.push_back(p ? Parity::Odd : Parity::Even);
  }
  if (j.contains("ops")) {
    require(j.at("ops").is_object(), "\"ops\" is an object");
    for (const auto& [name, a] : j.at("ops").items()) m.ops[name] = matrix_from_json(a, m.dim());
  }
  if (j.contains("odd"))
    for (const auto& o : j.at("odd")) m.odd.insert(o.get<std::string>());
  m.check();
  return m;
}

Json to_json(const BlockResult& r) {
  Json j = {{"verdict", to_string(r.verdict)}};
  if (r.witness) {
    Json w = {{"w", r.witness->w}, {"m", rvec_json(r.witness->m)}};
    if (!r.witness->word.empty()) w["word"] = r.witness->word;
    j["witness"] = w;
  }
  Json iso = Json::array();
  for (const auto& b : r.isoset) iso.push_back(to_json(b));
  j["isoset"] = iso;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json to_json(const SuperDim& d) { return {{"even", d.even}, {"odd", d.odd}}; }

Json to_json(const CoreMultiset& c) {
  Json j = {{"core", to_string(c)}, {"a", rvec_json(c.a_part)}};
  if (c.typed) j["b"] = rvec_json(c.b_part);
  if (c.modulus != 0) j["modulus"] = to_json(c.modulus);
  return j;
}

Json to_json(const Stratum& s) {
  return {{"rank", s.rank},
          {"descriptor", s.descriptor},
          {"in_X_iso", s.in_X_iso},
          {"target", to_string(s.target)}};
}

Json to_json(const TamePrediction& p) {
  return {{"kind", p.doubled ? "doubled" : "single"},
          {"lambda_prime", rvec_json(p.lambda_prime.a)},
          {"target", to_string(p.target)},
          {"rank", p.k}};
}

}  // namespace superds
