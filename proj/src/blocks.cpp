#include "superds/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <thread>

#include "superds/error.hpp"
#include "superds/linalg.hpp"

namespace superds {

SignedPerm SignedPerm::identity(size_t n) {
  SignedPerm p;
  for (size_t i = 0; i < n; ++i) p.img.push_back(static_cast<int>(i) + 1);
  return p;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  SignedPerm r;
  r.img.resize(o.img.size());
  for (size_t i = 0; i < o.img.size(); ++i) {
    int v = o.img[i];
    int j = std::abs(v) - 1;
    int u = img[j];
    r.img[i] = v > 0 ? u : -u;
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) {
    int j = std::abs(img[i]) - 1;
    r.img[j] = img[i] > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
  }
  return r;
}

Weight apply(const SignedPerm& w, const Weight& lambda) {
  const size_t m = lambda.a.size();
  if (w.img.size() != m + lambda.b.size())
    throw Error(ErrorKind::DimensionMismatch, "signed permutation size");
  RVec in = lambda.a;
  in.insert(in.end(), lambda.b.begin(), lambda.b.end());
  RVec out(in.size());
  for (size_t i = 0; i < in.size(); ++i) {
    int v = w.img[i];
    out[std::abs(v) - 1] = v > 0 ? in[i] : -in[i];
  }
  Weight r = lambda;
  std::copy(out.begin(), out.begin() + m, r.a.begin());
  std::copy(out.begin() + m, out.end(), r.b.begin());
  return r;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

bool integral_for(RootClass c, const Rational& x) {
  if (c == RootClass::NonReduced) return is_integer(x - Rational(1, 2));
  return is_integer(x);
}

std::vector<Root> delta_lambda_in(const RootSystem& sys, const Weight& lambda) {
  std::vector<Root> out;
  for (const auto& r : sys.roots) {
    if (r.parity != Parity::Even) continue;
    RootClass c = classify(sys, r);
    if (c != RootClass::Red && c != RootClass::NonReduced) continue;
    if (integral_for(c, pairing(lambda, covee(sys, r)))) out.push_back(r);
  }
  return out;
}

SignedPerm reflection_perm(const Root& gamma, int m, int n) {
  SignedPerm p;
  for (int i = 0; i < m + n; ++i) {
    Root e;
    e.eps.assign(m, 0);
    e.delta.assign(n, 0);
    if (i < m) e.eps[i] = 1;
    else e.delta[i - m] = 1;
    Root img = reflect(e, gamma);
    int target = 0;
    for (int j = 0; j < m + n; ++j) {
      int c = j < m ? img.eps[j] : img.delta[j - m];
      if (c == 0) continue;
      if (target != 0 || std::abs(c) != 1)
        throw Error(ErrorKind::NotARoot, "reflection is not a signed permutation");
      target = c * (j + 1);
    }
    p.img.push_back(target);
  }
  return p;
}

Weight with_rho(const AlgebraType& t, const Weight& w) {
  Weight rho = distinguished_base(t).rho;
  rho.k = 0;
  rho.d = 0;
  return w + rho;
}

RVec slot_coords(const Weight& w, bool with_d) {
  RVec v = w.a;
  v.insert(v.end(), w.b.begin(), w.b.end());
  if (with_d) v.push_back(w.d);
  return v;
}

// Integer m with diff = sum m_i beta_i, if any.
std::optional<RVec> integral_combination(const std::vector<Root>& s, const Weight& diff,
                                         bool with_d) {
  RVec target = slot_coords(diff, with_d);
  if (s.empty()) {
    for (const auto& x : target)
      if (x != 0) return std::nullopt;
    return RVec{};
  }
  std::vector<RVec> cols;
  for (const auto& b : s) cols.push_back(slot_coords(as_weight(b), with_d));
  auto sol = solve(Matrix::from_columns(target.size(), cols), target);
  if (!sol) return std::nullopt;
  for (const auto& x : *sol)
    if (!is_integer(x)) return std::nullopt;
  return sol;
}

BlockResult finite_decision(const AlgebraType& t, const Weight& lam, const Weight& nu,
                            const BlockOptions& opts) {
  BlockResult res;
  res.isoset = max_orthogonal_isoset(t, lam);
  for (const auto& w : w_lambda_group(t, lam, opts.group_cap)) {
    Weight diff = apply(w.inverse(), nu) - lam;
    if (auto m = integral_combination(res.isoset, diff, false)) {
      res.verdict = Verdict::Yes;
      res.witness = BlockWitness{w.img, {}, *m};
      return res;
    }
  }
  res.verdict = Verdict::No;
  res.reason = "nu not in W(lambda)(lambda + Z S)";
  return res;
}

}  // namespace

std::vector<Root> delta_lambda(const AlgebraType& t, const Weight& lambda) {
  if (t.is_affine()) throw Error(ErrorKind::UnsupportedType, "delta_lambda: finite types only");
  RootSystem sys = build(t);
  check_weight(t, lambda);
  return delta_lambda_in(sys, lambda);
}

std::vector<SignedPerm> w_lambda_group(const AlgebraType& t, const Weight& lambda, size_t cap) {
  auto [m, n] = coord_dims(t);
  std::vector<SignedPerm> gens;
  for (const auto& r : delta_lambda(t, lambda)) {
    SignedPerm g = reflection_perm(r, m, n);
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  std::set<SignedPerm> seen{SignedPerm::identity(m + n)};
  std::deque<SignedPerm> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    SignedPerm cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      SignedPerm nxt = g * cur;
      if (seen.insert(nxt).second) {
        if (seen.size() > cap)
          throw Error(ErrorKind::GroupTooLarge,
                      "W(lambda) exceeds " + std::to_string(cap) + " elements");
        queue.push_back(nxt);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

BlockResult block_equivalent(const AlgebraType& t, const Weight& lambda_in, const Weight& nu_in,
                             const BlockOptions& opts) {
  validate(t);
  check_weight(t, lambda_in);
  check_weight(t, nu_in);
  Weight lam = opts.highest_weight ? with_rho(t, lambda_in) : lambda_in;
  Weight nu = opts.highest_weight ? with_rho(t, nu_in) : nu_in;
  BlockResult res;
  if (t.is_affine() && lam.k != nu.k) {
    res.verdict = Verdict::No;
    res.reason = "levels differ";
    return res;
  }
  if (core(t, lam) != core(t, nu)) {
    res.verdict = Verdict::No;
    res.reason = "cores differ";
    return res;
  }
  if (!t.is_affine()) return finite_decision(t, lam, nu, opts);

  Family f = t.finite_family();
  if (t.family == Family::AffineUntwisted && lam.k == 0 &&
      (f == Family::GL || f == Family::OSP_D)) {
    // Critical level: the finite-part criterion plus an integral delta-shift.
    AlgebraType fin = t.finite_part();
    Weight lf = lam, nf = nu;
    lf.k = lf.d = nf.k = nf.d = 0;
    if (!is_integer(nu.d - lam.d)) {
      res.verdict = Verdict::No;
      res.reason = "delta-coefficients differ by a non-integer";
      return res;
    }
    res = finite_decision(fin, lf, nf, opts);
    if (res.verdict == Verdict::Yes) res.reason = "critical level";
    return res;
  }
  if (t.family == Family::AffineTwisted)
    throw Error(ErrorKind::UnsupportedType, "block search needs the even roots of " + to_string(t));

  // Bounded search over words in the reflections of Delta(lambda).
  RootSystem sys = build(t, opts.degree_bound);
  res.isoset = max_orthogonal_isoset(t, lam, opts.degree_bound);
  std::vector<Root> gens;
  for (const auto& r : sys.roots) {
    if (r.parity != Parity::Even || r.is_finite_zero()) continue;
    RootClass c = classify(sys, r);
    if (c != RootClass::Red && c != RootClass::NonReduced) continue;
    if (integral_for(c, pairing(lam, covee(sys, r)))) gens.push_back(r);
  }
  std::map<Weight, std::vector<std::string>> seen{{nu, {}}};
  std::vector<Weight> frontier{nu};
  for (int len = 0; len <= opts.word_bound; ++len) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      if (auto m = integral_combination(res.isoset, mu - lam, true)) {
        res.verdict = Verdict::Yes;
        res.witness = BlockWitness{{}, seen[mu], *m};
        return res;
      }
      if (len == opts.word_bound) continue;
      for (const auto& g : gens) {
        Weight img = mu - as_weight(g).scaled(pairing(mu, covee(sys, g)));
        if (seen.count(img)) continue;
        auto word = seen[mu];
        word.push_back(to_string(g));
        seen.emplace(img, std::move(word));
        next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  res.verdict = Verdict::Unknown;
  res.reason = "no witness within word bound " + std::to_string(opts.word_bound) +
               " and degree bound " + std::to_string(opts.degree_bound);
  return res;
}

bool Box::contains(const Weight& w) const {
  if (w.a.size() != lo.a.size() || w.b.size() != lo.b.size()) return false;
  for (size_t i = 0; i < w.a.size(); ++i)
    if (w.a[i] < lo.a[i] || w.a[i] > hi.a[i]) return false;
  for (size_t j = 0; j < w.b.size(); ++j)
    if (w.b[j] < lo.b[j] || w.b[j] > hi.b[j]) return false;
  return w.k >= lo.k && w.k <= hi.k && w.d >= lo.d && w.d <= hi.d;
}

Box Box::around(const Weight& c, const Rational& radius, bool with_d) {
  Box b{c, c};
  for (size_t i = 0; i < c.a.size(); ++i) {
    b.lo.a[i] -= radius;
    b.hi.a[i] += radius;
  }
  for (size_t j = 0; j < c.b.size(); ++j) {
    b.lo.b[j] -= radius;
    b.hi.b[j] += radius;
  }
  if (with_d) {
    b.lo.d -= radius;
    b.hi.d += radius;
  }
  return b;
}

namespace {

struct Move {
  Root alpha;
  RootClass cls;
  Functional coroot;
  Weight shift;  // alpha as a weight
};

struct MoveTable {
  std::vector<Move> moves;
  bool imaginary = false;
};

MoveTable move_table(const AlgebraType& t, const Box& box) {
  if (t.family == Family::AffineTwisted)
    throw Error(ErrorKind::UnsupportedType, "K-moves need the even roots of " + to_string(t));
  int bound = 0;
  if (t.is_affine()) {
    Rational span = box.hi.d - box.lo.d;
    bound = std::max(1, static_cast<int>(floor_q(span).get_num().get_si()));
  }
  RootSystem sys = build(t, bound);
  Base base = distinguished_base(t);
  MoveTable tab;
  tab.imaginary = t.is_affine();
  for (const auto& r : sys.roots) {
    if (r.is_finite_zero() || !is_positive(sys, base, r)) continue;
    RootClass c = classify(sys, r);
    if (c == RootClass::NonReduced) continue;
    tab.moves.push_back({r, c, covee(sys, r), as_weight(r)});
  }
  return tab;
}

std::vector<Weight> moves_from(const MoveTable& tab, const Weight& mu, const Box& box) {
  std::vector<Weight> out;
  auto keep = [&](Weight w) {
    if (box.contains(w)) out.push_back(std::move(w));
  };
  for (const auto& mv : tab.moves) {
    Rational c = pairing(mu, mv.coroot);
    switch (mv.cls) {
      case RootClass::Red:
        // c > 0: (mu, mu - c alpha); c < 0: (mu - c alpha, mu).
        if (c != 0 && is_integer(c)) keep(mu - mv.shift.scaled(c));
        break;
      case RootClass::Nis:
        if (is_integer(c) && c.get_num() % 2 != 0) keep(mu - mv.shift.scaled(c));
        break;
      case RootClass::Iso:
        if (c == 0) {
          keep(mu - mv.shift);
          keep(mu + mv.shift);
        }
        break;
      default: break;
    }
  }
  if (tab.imaginary && mu.k == 0) {
    Weight up = mu, down = mu;
    up.d += 1;
    down.d -= 1;
    keep(down);
    keep(up);
  }
  return out;
}

}  // namespace

std::vector<Weight> kk_moves(const AlgebraType& t, const Weight& mu, const Box& box) {
  validate(t);
  check_weight(t, mu);
  if (!box.contains(mu)) throw Error(ErrorKind::DimensionMismatch, "mu lies outside the box");
  auto out = moves_from(move_table(t, box), mu, box);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<Weight> block_orbit_oracle(const AlgebraType& t, const Weight& lambda,
                                    const Rational& radius, int jobs, size_t node_cap) {
  validate(t);
  check_weight(t, lambda);
  Box box = Box::around(lambda, radius, t.is_affine());
  MoveTable tab = move_table(t, box);
  std::set<Weight> seen{lambda};
  std::vector<Weight> frontier{lambda};
  jobs = std::max(1, jobs);
  while (!frontier.empty()) {
    std::vector<std::vector<Weight>> found(jobs);
    auto work = [&](int id) {
      for (size_t i = id; i < frontier.size(); i += jobs) {
        auto mv = moves_from(tab, frontier[i], box);
        found[id].insert(found[id].end(), mv.begin(), mv.end());
      }
    };
    if (jobs == 1 || frontier.size() < 64) {
      for (int id = 0; id < jobs; ++id) work(id);
    } else {
      std::vector<std::thread> pool;
      for (int id = 0; id < jobs; ++id) pool.emplace_back(work, id);
      for (auto& th : pool) th.join();
    }
    std::vector<Weight> next;
    for (auto& part : found)
      for (auto& w : part)
        if (seen.insert(w).second) {
          if (seen.size() > node_cap)
            throw Error(ErrorKind::BoxTooLarge,
                        "orbit exceeds " + std::to_string(node_cap) + " nodes");
          next.push_back(std::move(w));
        }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace superds
