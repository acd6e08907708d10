#include "superds/dsmatrix.hpp"

#include <algorithm>

#include "superds/error.hpp"

namespace superds {

SuperDim MatrixSuperModule::sdim() const {
  SuperDim d;
  for (auto p : parity) (p == Parity::Even ? d.even : d.odd)++;
  return d;
}

const Matrix& MatrixSuperModule::op(const std::string& name) const {
  auto it = ops.find(name);
  if (it == ops.end()) throw Error(ErrorKind::DimensionMismatch, "no operator named '" + name + "'");
  return it->second;
}

void MatrixSuperModule::check() const {
  const size_t n = dim();
  for (const auto& o : odd)
    if (!ops.count(o)) throw Error(ErrorKind::DimensionMismatch, "odd flag on unknown operator " + o);
  for (const auto& [name, a] : ops) {
    if (a.rows() != n || a.cols() != n)
      throw Error(ErrorKind::DimensionMismatch, "operator " + name + " is not " +
                                                    std::to_string(n) + "x" + std::to_string(n));
    const bool shifts = is_odd(name);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (sgn(a(i, j)) != 0 && ((parity[i] != parity[j]) != shifts))
          throw Error(ErrorKind::RelationViolated,
                      "operator " + name + " does not have its declared parity");
  }
}

MatrixSuperModule with_combination(MatrixSuperModule m, const std::string& name,
                                   const std::vector<std::pair<std::string, Rational>>& terms) {
  if (terms.empty()) throw Error(ErrorKind::DimensionMismatch, "empty combination");
  Matrix acc(m.dim(), m.dim());
  bool odd = m.is_odd(terms.front().first);
  for (const auto& [op, c] : terms) {
    if (m.is_odd(op) != odd)
      throw Error(ErrorKind::RelationViolated, "combination mixes parities");
    acc = acc + m.op(op).scaled(c);
  }
  m.ops[name] = acc;
  if (odd) m.odd.insert(name);
  else m.odd.erase(name);
  return m;
}

MatrixSuperModule direct_sum(const MatrixSuperModule& a, const MatrixSuperModule& b) {
  MatrixSuperModule s;
  s.parity = a.parity;
  s.parity.insert(s.parity.end(), b.parity.begin(), b.parity.end());
  const size_t na = a.dim(), n = s.dim();
  std::set<std::string> names;
  for (const auto& [k, v] : a.ops) names.insert(k);
  for (const auto& [k, v] : b.ops) names.insert(k);
  for (const auto& name : names) {
    bool in_a = a.ops.count(name), in_b = b.ops.count(name);
    if (in_a && in_b && a.is_odd(name) != b.is_odd(name))
      throw Error(ErrorKind::RelationViolated, "operator " + name + " has two parities");
    Matrix mtx(n, n);
    if (in_a)
      for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j) mtx(i, j) = a.op(name)(i, j);
    if (in_b)
      for (size_t i = 0; i < b.dim(); ++i)
        for (size_t j = 0; j < b.dim(); ++j) mtx(na + i, na + j) = b.op(name)(i, j);
    s.ops[name] = mtx;
    if ((in_a && a.is_odd(name)) || (in_b && b.is_odd(name))) s.odd.insert(name);
  }
  return s;
}

MatrixSuperModule parity_shift(const MatrixSuperModule& m) {
  MatrixSuperModule s = m;
  for (auto& p : s.parity) p = p == Parity::Even ? Parity::Odd : Parity::Even;
  return s;
}

MatrixSuperModule change_basis(const MatrixSuperModule& m, const Matrix& g) {
  auto inv = inverse(g);
  if (!inv) throw Error(ErrorKind::DimensionMismatch, "change of basis is not invertible");
  MatrixSuperModule s = m;
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.cols(); ++j)
      if (sgn(g(i, j)) != 0 && m.parity[i] != m.parity[j])
        throw Error(ErrorKind::RelationViolated, "change of basis mixes parities");
  for (auto& [name, a] : s.ops) a = (*inv) * a * g;
  return s;
}

namespace {

bool is_square_zero(const Matrix& a) { return (a * a).is_zero(); }

// [a, b] with the sign given by the parities.
Matrix supercommutator(const Matrix& a, bool a_odd, const Matrix& b, bool b_odd) {
  Matrix ab = a * b, ba = b * a;
  return a_odd && b_odd ? ab + ba : ab - ba;
}

std::vector<size_t> indices_of(const MatrixSuperModule& m, Parity p) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < m.dim(); ++i)
    if (m.parity[i] == p) idx.push_back(i);
  return idx;
}

RVec embed(const RVec& local, const std::vector<size_t>& idx, size_t n) {
  RVec v(n);
  for (size_t i = 0; i < idx.size(); ++i) v[idx[i]] = local[i];
  return v;
}

// Null space of the stacked operators on the parity-p part.
std::vector<RVec> graded_kernel(const MatrixSuperModule& m, const std::vector<const Matrix*>& ops,
                                Parity p) {
  auto idx = indices_of(m, p);
  if (idx.empty()) return {};
  const size_t n = m.dim();
  Matrix stack(n * ops.size(), idx.size());
  for (size_t k = 0; k < ops.size(); ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < idx.size(); ++j) stack(k * n + i, j) = (*ops[k])(i, idx[j]);
  std::vector<RVec> out;
  for (const auto& v : kernel(stack)) out.push_back(embed(v, idx, n));
  return out;
}

// The members of `extra` that extend `base` to a basis of the joint span.
std::vector<RVec> complement(const std::vector<RVec>& base, const std::vector<RVec>& extra) {
  std::vector<RVec> all = base;
  all.insert(all.end(), extra.begin(), extra.end());
  std::vector<RVec> out;
  for (size_t k : independent_subset(all))
    if (k >= base.size()) out.push_back(all[k]);
  return out;
}

std::vector<RVec> basis_of(const std::vector<RVec>& vecs) {
  std::vector<RVec> out;
  for (size_t k : independent_subset(vecs)) out.push_back(vecs[k]);
  return out;
}

// Operators on span(inner + comp) / span(inner), written in the comp basis.
MatrixSuperModule subquotient(const MatrixSuperModule& m, const std::vector<RVec>& inner,
                              const std::vector<RVec>& comp, const std::vector<Parity>& comp_par,
                              const std::vector<std::string>& names, bool strict,
                              std::vector<std::string>* dropped) {
  MatrixSuperModule out;
  out.parity = comp_par;
  std::vector<RVec> cols = inner;
  cols.insert(cols.end(), comp.begin(), comp.end());
  Matrix basis = Matrix::from_columns(m.dim(), cols);
  for (const auto& name : names) {
    const Matrix& a = m.op(name);
    Matrix img(comp.size(), comp.size());
    bool ok = true;
    for (size_t j = 0; j < comp.size() && ok; ++j) {
      auto c = cols.empty() ? std::optional<RVec>() : solve(basis, a.apply(comp[j]));
      if (!c) {
        ok = false;
        break;
      }
      for (size_t i = 0; i < comp.size(); ++i) img(i, j) = (*c)[inner.size() + i];
    }
    if (!ok) {
      if (strict) throw Error(ErrorKind::NotInvariant, "operator " + name + " leaves the subspace");
      if (dropped) dropped->push_back(name);
      continue;
    }
    out.ops[name] = img;
    if (m.is_odd(name)) out.odd.insert(name);
  }
  return out;
}

bool homogeneous(const MatrixSuperModule& m, const RVec& v, Parity* p) {
  bool seen_even = false, seen_odd = false;
  for (size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) (m.parity[i] == Parity::Even ? seen_even : seen_odd) = true;
  if (seen_even && seen_odd) return false;
  *p = seen_odd ? Parity::Odd : Parity::Even;
  return true;
}

}  // namespace

DSResult ds(const MatrixSuperModule& m, const std::string& x,
            const std::vector<std::string>& induced) {
  m.check();
  const Matrix& xm = m.op(x);
  if (!m.is_odd(x)) throw Error(ErrorKind::NotOdd, "operator " + x + " is even");
  if (!is_square_zero(xm)) throw Error(ErrorKind::NotSquareZero, "operator " + x);

  std::vector<RVec> im, quot;
  std::vector<Parity> qpar;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    Parity other = p == Parity::Even ? Parity::Odd : Parity::Even;
    std::vector<RVec> img_cols;
    for (size_t j : indices_of(m, other)) img_cols.push_back(xm.column(j));
    std::vector<RVec> imb = basis_of(img_cols);
    std::vector<RVec> q = complement(imb, graded_kernel(m, {&xm}, p));
    im.insert(im.end(), imb.begin(), imb.end());
    for (auto& v : q) {
      quot.push_back(std::move(v));
      qpar.push_back(p);
    }
  }

  DSResult res;
  const bool strict = !induced.empty();
  std::vector<std::string> names;
  if (strict) {
    names = induced;
  } else {
    for (const auto& [name, a] : m.ops)
      if (name != x) names.push_back(name);
  }
  std::vector<std::string> keep;
  for (const auto& name : names) {
    if (supercommutator(xm, true, m.op(name), m.is_odd(name)).is_zero()) {
      keep.push_back(name);
    } else if (strict) {
      throw Error(ErrorKind::DoesNotCommute, name + " does not supercommute with " + x);
    } else {
      res.dropped.push_back(name);
    }
  }
  res.module = subquotient(m, im, quot, qpar, keep, true, nullptr);
  return res;
}

SuperDim ds_dim(const MatrixSuperModule& m, const std::string& x) {
  MatrixSuperModule bare;
  bare.parity = m.parity;
  bare.ops[x] = m.op(x);
  if (m.is_odd(x)) bare.odd.insert(x);
  return ds(bare, x).module.sdim();
}

MatrixSuperModule zigzag(int s, int sign) {
  if (s < 1) throw Error(ErrorKind::DimensionMismatch, "zigzag length must be positive");
  if (sign != 1 && sign != -1) throw Error(ErrorKind::DimensionMismatch, "zigzag sign is +1 or -1");
  MatrixSuperModule z;
  Matrix x(s, s), y(s, s), h(s, s);
  for (int i = 1; i <= s; ++i) {
    z.parity.push_back((i - 1) % 2 ? Parity::Odd : Parity::Even);
    h(i - 1, i - 1) = i;
    if (i == s) continue;
    // Between v_i and v_{i+1}: an x-arrow v_i -> v_{i+1} or a y-arrow v_{i+1} -> v_i.
    bool x_arrow = (i % 2 == 1) == (sign == 1);
    if (x_arrow) x(i, i - 1) = 1;
    else y(i - 1, i) = 1;
  }
  z.ops = {{"x", x}, {"y", y}, {"h", h}};
  z.odd = {"x", "y"};
  return z;
}

MatrixSuperModule m4() {
  MatrixSuperModule m;
  m.parity = {Parity::Even, Parity::Odd, Parity::Odd, Parity::Even};
  Matrix x(4, 4), y(4, 4), h(4, 4);
  x(1, 0) = 1;   // u1 -> u2
  x(3, 2) = 1;   // u3 -> u4
  y(2, 0) = 1;   // u1 -> u3
  y(3, 1) = -1;  // u2 -> -u4
  h(1, 1) = 1;
  h(2, 2) = -1;
  m.ops = {{"x", x}, {"y", y}, {"h", h}};
  m.odd = {"x", "y"};
  return m;
}

MatrixSuperModule p2_simple(int j) {
  if (j < 1) throw Error(ErrorKind::DimensionMismatch, "p2_simple needs j >= 1");
  MatrixSuperModule s = direct_sum(zigzag(2 * j, 1), zigzag(2 * j, -1));
  MatrixSuperModule out;
  out.parity = s.parity;
  out.ops = {{"x1", s.op("x")}, {"x2", s.op("y")}, {"h", s.op("h")}};
  out.odd = {"x1", "x2"};
  return out;
}

Lem42Result lem42_reduce(const MatrixSuperModule& m, const std::string& x,
                         const std::vector<std::string>& h_names) {
  m.check();
  std::vector<const Matrix*> hs;
  for (const auto& h : h_names) {
    if (m.is_odd(h)) throw Error(ErrorKind::RelationViolated, h + " must be even");
    hs.push_back(&m.op(h));
  }
  std::vector<RVec> basis;
  std::vector<Parity> par;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    auto k = hs.empty() ? std::vector<RVec>() : graded_kernel(m, hs, p);
    if (hs.empty())
      for (size_t i : indices_of(m, p)) {
        RVec e(m.dim());
        e[i] = 1;
        k.push_back(e);
      }
    for (auto& v : k) {
      basis.push_back(std::move(v));
      par.push_back(p);
    }
  }
  std::vector<std::string> names;
  for (const auto& [name, a] : m.ops)
    if (name != x) names.push_back(name);
  Lem42Result r;
  MatrixSuperModule with_x = subquotient(m, {}, basis, par, {x}, true, nullptr);
  std::vector<std::string> dropped;
  r.reduced = subquotient(m, {}, basis, par, names, false, &dropped);
  r.reduced.ops[x] = with_x.op(x);
  if (m.is_odd(x)) r.reduced.odd.insert(x);
  r.ds_full = ds_dim(m, x);
  r.ds_reduced = ds_dim(r.reduced, x);
  r.agree = r.ds_full == r.ds_reduced;
  return r;
}

LemDSXY lemdsxy_check(const MatrixSuperModule& m) {
  m.check();
  const Matrix& x = m.op("x");
  const Matrix& y = m.op("y");
  const Matrix& h = m.op("h");
  auto fail = [](const std::string& why) { throw Error(ErrorKind::RelationViolated, why); };
  if (!m.is_odd("x") || !m.is_odd("y") || m.is_odd("h")) fail("x, y must be odd and h even");
  if (!is_square_zero(x) || !is_square_zero(y)) fail("x and y must square to zero");
  if (!supercommutator(x, true, y, true).is_zero()) fail("[x,y] != 0");
  for (size_t i = 0; i < h.rows(); ++i)
    for (size_t j = 0; j < h.cols(); ++j)
      if (i != j && sgn(h(i, j)) != 0) fail("h is not diagonal");
  if (!(supercommutator(h, false, x, true) == x)) fail("[h,x] != x");
  if (!(supercommutator(h, false, y, true) == y.scaled(-1))) fail("[h,y] != -y");
  LemDSXY r;
  r.ds_ybar_ds_x = ds_dim(ds(m, "x", {"y"}).module, "y");
  r.ds_x_plus_y = ds_dim(with_combination(m, "x+y", {{"x", 1}, {"y", 1}}), "x+y");
  long je = r.ds_ybar_ds_x.even - r.ds_x_plus_y.even;
  long jo = r.ds_ybar_ds_x.odd - r.ds_x_plus_y.odd;
  if (je != jo || je < 0)
    fail("no j >= 0 with DS_ybar DS_x = DS_{x+y} + j(1|1): " + to_string(r.ds_ybar_ds_x) +
         " vs " + to_string(r.ds_x_plus_y));
  r.j = je;
  return r;
}

std::pair<MatrixSuperModule, MatrixSuperModule> generated_submodule(
    const MatrixSuperModule& m, const std::vector<RVec>& seeds) {
  m.check();
  std::vector<RVec> span;
  std::vector<Parity> par;
  std::vector<RVec> queue;
  auto try_add = [&](const RVec& v) {
    Parity p;
    if (!homogeneous(m, v, &p))
      throw Error(ErrorKind::RelationViolated, "seed vector is not homogeneous");
    std::vector<RVec> cand = span;
    cand.push_back(v);
    if (independent_subset(cand).size() == cand.size()) {
      span.push_back(v);
      par.push_back(p);
      queue.push_back(v);
    }
  };
  for (const auto& s : seeds) {
    if (s.size() != m.dim()) throw Error(ErrorKind::DimensionMismatch, "seed length");
    try_add(s);
  }
  while (!queue.empty()) {
    RVec v = queue.back();
    queue.pop_back();
    for (const auto& [name, a] : m.ops) try_add(a.apply(v));
  }
  std::vector<std::string> names;
  for (const auto& [name, a] : m.ops) names.push_back(name);
  MatrixSuperModule sub = subquotient(m, {}, span, par, names, true, nullptr);

  std::vector<RVec> comp;
  std::vector<Parity> cpar;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::vector<RVec> unit;
    for (size_t i : indices_of(m, p)) {
      RVec e(m.dim());
      e[i] = 1;
      unit.push_back(e);
    }
    std::vector<RVec> inner_p;
    for (size_t k = 0; k < span.size(); ++k)
      if (par[k] == p) inner_p.push_back(span[k]);
    for (auto& v : complement(inner_p, unit)) {
      comp.push_back(std::move(v));
      cpar.push_back(p);
    }
  }
  MatrixSuperModule quot = subquotient(m, span, comp, cpar, names, true, nullptr);
  return {sub, quot};
}

}  // namespace superds
