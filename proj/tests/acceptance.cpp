// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// `acceptance N` runs criterion N alone.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "superds/blocks.hpp"
#include "superds/central.hpp"
#include "superds/dsmatrix.hpp"
#include "superds/error.hpp"
#include "superds/qtype.hpp"
#include "superds/registry.hpp"
#include "support.hpp"

using namespace superds;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string str(const SuperDim& d) { return to_string(d); }

// ---------------------------------------------------------------------------
// 1. Tabulated defect / depth / DS type / dual Coxeter values.

Outcome table_reproduction() {
  struct Cell {
    std::string what, got, want;
  };
  std::vector<Cell> cells;
  auto T = [](const char* s) { return parse_algebra(s); };
  auto num = [&](const char* what, long got, long want) {
    cells.push_back({what, std::to_string(got), std::to_string(want)});
  };
  auto ds = [&](const char* t, int r, const std::string& want) {
    cells.push_back({std::string("DS ") + t + " r=" + std::to_string(r),
                     to_string(ds_type(T(t), r)), want});
  };
  auto hv = [&](const char* t, const std::string& want) {
    cells.push_back({std::string("h ") + t, to_string(dual_coxeter(T(t))), want});
  };
  // gl family
  num("defect gl(1|1)", defect(T("gl(1|1)")), 1);
  num("defect pgl(1|1)", defect(T("pgl(1|1)")), 1);
  num("depth gl(1|1)", depth(T("gl(1|1)")), 1);
  num("depth pgl(1|1)", depth(T("pgl(1|1)")), 1);
  ds("gl(1|1)", 1, "0");
  ds("pgl(1|1)", 1, "Pi(C)");
  num("defect sl(1|1)", defect(T("sl(1|1)")), 0);
  num("depth sl(1|1)", depth(T("sl(1|1)")), 0);
  num("depth psl(1|1)", depth(T("psl(1|1)")), 0);
  num("defect gl(2|3)", defect(T("gl(2|3)")), 2);
  num("depth gl(3|2)", depth(T("gl(3|2)")), 2);
  ds("gl(3|2)", 1, "gl(2|1)");
  ds("gl(4|3)", 2, "gl(2|1)");
  ds("sl(3|1)", 1, "sl(2|0)");
  num("defect sl(3|3)", defect(T("sl(3|3)")), 2);
  num("depth sl(3|3)", depth(T("sl(3|3)")), 2);
  ds("sl(3|3)", 1, "sl(2|2)");
  num("depth pgl(3|3)", depth(T("pgl(3|3)")), 3);
  ds("pgl(3|3)", 2, "pgl(1|1)");
  ds("pgl(3|3)", 3, "Pi(C)");
  num("depth psl(3|3)", depth(T("psl(3|3)")), 2);
  ds("psl(3|3)", 1, "psl(2|2)");
  // p family
  num("depth p(4)", depth(T("p(4)")), 4);
  ds("p(4)", 2, "p(2)");
  num("depth p'(4)", depth(T("p'(4)")), 3);
  ds("p'(4)", 1, "p'(3)");
  // q family
  num("defect q(5)", defect(T("q(5)")), 2);
  num("depth q(5)", depth(T("q(5)")), 2);
  ds("q(5)", 1, "q(3)");
  ds("q(6)", 2, "q(2)");
  num("depth psq(4)", depth(T("psq(4)")), 2);
  ds("psq(4)", 2, "C x Pi(C)");
  ds("psq(3)", 1, "0");
  ds("psq(5)", 1, "psq(3)");
  ds("sq(4)", 2, "C");
  ds("sq(5)", 1, "sq(3)");
  ds("pq(4)", 2, "Pi(C)");
  ds("pq(2)", 1, "Pi(C)");
  ds("psq(2)", 1, "C x Pi(C)");
  // osp and exceptional
  ds("osp(5|4)", 1, "osp(3|2)");
  ds("osp(6|4)", 1, "osp(4|2)");
  ds("D(2,1;1/2)", 1, "C");
  cells.push_back({"DS G(3)", to_string(ds_type(T("G(3)"), 1)), to_string(alg::sl(2, 0))});
  cells.push_back({"DS F(4)", to_string(ds_type(T("F(4)"), 1)), to_string(alg::sl(3, 0))});
  // affine
  ds("A(4|2)^(4)", 1, "A(2|0)^(4)");
  ds("sl(2|1)^(1)", 1, "CK x Cd");
  hv("osp(4|2)^(1)", "0");
  hv("osp(5|2)^(1)", "1");
  hv("G(3)^(1)", "2");
  hv("F(4)^(1)", "3");
  hv("D(2,1;3)^(1)", "0");
  hv("A(2|2)^(4)", "0");
  hv("A(4|2)^(4)", "1");
  hv("A(3|1)^(1)", "2");
  hv("A(2|1)^(2)", "1");
  hv("A(3|1)^(2)", "2");

  std::string bad;
  size_t ok = 0;
  for (const auto& c : cells) {
    if (c.got == c.want) ++ok;
    else bad += "; " + c.what + " gave " + c.got + ", expected " + c.want;
  }
  return {ok == cells.size(), std::to_string(ok) + "/" + std::to_string(cells.size()) +
                                  " table cells" + bad};
}

// ---------------------------------------------------------------------------
// 2. Worked core examples.

Outcome core_examples() {
  std::string bad;
  CoreMultiset c = core(alg::gl(3, 2), Weight{{1, 1, 1}, {1, 2}});
  if (c.flat() != RVec{1, 1, 2} || to_string(c) != "{1,1}⊔{2}")
    bad += "; gl(3|2) gave " + to_string(c);
  int checked = 1;
  for (int m = 3; m <= 12; ++m, ++checked) {
    Weight w;
    w.a.assign(m, 0);
    w.a[0] = w.a[1] = 1;
    w.a[m - 1] = -1;
    std::string got = to_string(core(alg::q(m), w));
    std::string want = m % 2 ? "{1}" : "{0,1}";
    if (got != want) bad += "; q(" + std::to_string(m) + ") gave " + got;
  }
  return {bad.empty(), std::to_string(checked) + " examples (gl(3|2): {1,1}⊔{2}; q_m for m=3..12)" + bad};
}

// ---------------------------------------------------------------------------
// 3. |core| = m + n - 2 atyp, with atyp read off an orthogonal iso-set.

Outcome core_size_law() {
  std::mt19937 rng(2024);
  std::vector<AlgebraType> types;
  for (int s = 1; s <= 7; ++s)
    for (int m = 0; m <= s; ++m) {
      int n = s - m;
      types.push_back(alg::gl(m, n));
      types.push_back(alg::B(m, n));
      if (m != 1 || n != 0) types.push_back(alg::D(m, n));
    }
  for (int n = 1; n <= 7; ++n) types.push_back(alg::q(n));
  long total = 0, bad = 0;
  std::string first;
  for (const auto& t : types) {
    auto [m, n] = coord_dims(t);
    for (int trial = 0; trial < 1000; ++trial, ++total) {
      Weight w = oracle::random_weight(rng, t);
      int k = static_cast<int>(max_orthogonal_isoset(t, w).size());
      if (static_cast<int>(core(t, w).size()) != m + n - 2 * k) {
        if (!bad++) first = "; e.g. " + to_string(t) + " at " + to_string(w);
      }
    }
  }
  return {bad == 0, std::to_string(total) + " weights on " + std::to_string(types.size()) +
                        " types, " + std::to_string(bad) + " violations" + first};
}

// ---------------------------------------------------------------------------
// 4/5. K-closure against the block criterion.

struct BlockRun {
  long pairs_yes = 0;
  long seeds = 0;
  long mismatches = 0;
  long invariance_violations = 0;
  std::string first;
  double seconds = 0;
};

void box_points(const Weight& c, int radius, std::vector<Weight>& out) {
  std::vector<Rational> coords = c.a;
  coords.insert(coords.end(), c.b.begin(), c.b.end());
  const size_t d = coords.size();
  std::vector<int> off(d, -radius);
  while (true) {
    Weight w = c;
    for (size_t i = 0; i < d; ++i) {
      if (i < c.a.size()) w.a[i] += off[i];
      else w.b[i - c.a.size()] += off[i];
    }
    out.push_back(w);
    size_t i = 0;
    while (i < d && off[i] == radius) off[i++] = -radius;
    if (i == d) break;
    ++off[i];
  }
}

const BlockRun& block_run() {
  static BlockRun run;
  static bool done = false;
  if (done) return run;
  done = true;
  auto t0 = std::chrono::steady_clock::now();
  auto W = [](std::vector<int> a, std::vector<int> b) {
    Weight w;
    for (int x : a) w.a.emplace_back(x);
    for (int x : b) w.b.emplace_back(x);
    return w;
  };
  std::vector<std::pair<AlgebraType, std::vector<Weight>>> cases = {
      {alg::gl(1, 1), {W({0}, {0}), W({1}, {1}), W({1}, {0}), W({2}, {-1}), W({-1}, {-1})}},
      {alg::gl(2, 1),
       {W({1, 0}, {1}), W({0, 0}, {0}), W({2, 1}, {1}), W({1, -1}, {0}), W({3, 1}, {2})}},
      {alg::gl(2, 2),
       {W({0, 0}, {0, 0}), W({1, 0}, {1, 0}), W({2, 1}, {1, 0}), W({1, 2}, {3, 1}),
        W({0, 1}, {0, -1})}},
      {alg::B(1, 1), {W({0}, {0}), W({1}, {1}), W({1}, {0}), W({2}, {1}), W({1}, {2})}},
      {alg::q(2), {W({0, 0}, {}), W({1, -1}, {}), W({1, 0}, {}), W({2, 1}, {}), W({2, -2}, {})}},
      {alg::q(3),
       {W({0, 0, 0}, {}), W({1, -1, 0}, {}), W({2, 1, -1}, {}), W({1, 0, 0}, {}),
        W({3, -3, 1}, {})}},
  };
  const int radius = 2;
  for (const auto& [t, seeds] : cases) {
    for (const auto& seed : seeds) {
      ++run.seeds;
      Box box = Box::around(seed, radius, false);
      std::vector<Weight> pts;
      box_points(seed, radius, pts);
      std::set<Weight> formula;
      for (const auto& nu : pts)
        if (block_equivalent(t, seed, nu).verdict == Verdict::Yes) {
          formula.insert(nu);
          ++run.pairs_yes;
          if (core(t, seed) != core(t, nu) || atyp(t, seed) != atyp(t, nu)) {
            ++run.invariance_violations;
          }
        }
      // Paths may leave the comparison box; widen the search box until the
      // part inside stops growing.
      std::set<Weight> prev;
      std::set<Weight> inside;
      for (int r = radius; r <= radius + 8; r += 2) {
        inside.clear();
        for (const auto& w : block_orbit_oracle(t, seed, r, 4))
          if (box.contains(w)) inside.insert(w);
        if (r > radius && inside == prev) break;
        prev = inside;
      }
      if (inside != formula) {
        if (!run.mismatches++) {
          std::ostringstream os;
          os << "; e.g. " << to_string(t) << " seed " << to_string(seed) << ": oracle "
             << inside.size() << " vs formula " << formula.size();
          run.first = os.str();
        }
      }
    }
  }
  run.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

Outcome block_oracle() {
  const BlockRun& r = block_run();
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1f s", r.seconds);
  bool fast = r.seconds < 60;
  return {r.mismatches == 0 && fast,
          std::to_string(r.seeds) + " seeds on 6 types, " + std::to_string(r.mismatches) +
              " orbit/formula mismatches, " + secs + (fast ? "" : " (over 60 s)") + r.first};
}

Outcome block_invariants() {
  const BlockRun& r = block_run();
  return {r.invariance_violations == 0 && r.pairs_yes > 0,
          std::to_string(r.pairs_yes) + " yes-pairs, " + std::to_string(r.invariance_violations) +
              " with differing core or atyp"};
}

// ---------------------------------------------------------------------------
// 6. The zigzag display of the pgl(1|1) classification.

Outcome zigzag_table() {
  const SuperDim zero{0, 0}, one{1, 0}, both{1, 1};
  long ok = 0, total = 0;
  std::string bad;
  auto claim = [&](const std::string& what, const SuperDim& got, const SuperDim& want) {
    ++total;
    if (got == want) ++ok;
    else bad += "; " + what + " is " + str(got) + ", claimed " + str(want);
  };
  auto xy = [](const MatrixSuperModule& m) {
    return with_combination(m, "x+y", {{"x", 1}, {"y", 1}});
  };
  for (int n = 1; n <= 5; ++n) {
    std::string N = std::to_string(n);
    for (int sign : {1, -1}) {
      const char* s = sign > 0 ? "+" : "-";
      claim(std::string("DS_x(V^") + s + "_" + std::to_string(2 * n - 1) + ")",
            oracle::ds_dim_by_rank(zigzag(2 * n - 1, sign), "x"), one);
      claim(std::string("DS_y(V^") + s + "_" + std::to_string(2 * n + 1) + ")",
            ds_dim(zigzag(2 * n + 1, sign), "y"), one);
      claim(std::string("DS_x+y(V^") + s + "_" + std::to_string(2 * n + 1) + ")",
            ds_dim(xy(zigzag(2 * n + 1, sign)), "x+y"), one);
      claim(std::string("DS_x+y(V^") + s + "_" + std::to_string(2 * n) + ")",
            ds_dim(xy(zigzag(2 * n, sign)), "x+y"), zero);
    }
    claim("DS_x(V^+_" + std::to_string(2 * n) + ")", ds_dim(zigzag(2 * n, 1), "x"), zero);
    if (n > 1) {
      auto v = zigzag(2 * n, -1);
      claim("DS_x(V^-_" + std::to_string(2 * n) + ")", ds_dim(v, "x"), both);
      claim("DS_ybar DS_x(V^-_" + std::to_string(2 * n) + ")",
            ds_dim(ds(v, "x", {"y"}).module, "y"), both);
    }
  }
  claim("DS_x(V^-_2)", ds_dim(zigzag(2, -1), "x"), zero);
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " claims" + bad};
}

// ---------------------------------------------------------------------------
// 7. The p_2 modules L^(2j) = V^+_2j + V^-_2j.

Outcome p2_example() {
  long ok = 0, total = 0;
  std::string bad;
  auto claim = [&](const std::string& what, const SuperDim& got, const SuperDim& want) {
    ++total;
    if (got == want) ++ok;
    else bad += "; " + what + " is " + str(got) + ", claimed " + str(want);
  };
  for (int j = 1; j <= 3; ++j) {
    MatrixSuperModule l = p2_simple(j);
    std::string J = std::to_string(j);
    claim("DS_x1+x2(L^(" + std::to_string(2 * j) + "))",
          ds_dim(with_combination(l, "s", {{"x1", 1}, {"x2", 1}}), "s"), SuperDim{0, 0});
    SuperDim x2_then_x1 = ds_dim(ds(l, "x2", {"x1"}).module, "x1");
    SuperDim x1_then_x2 = ds_dim(ds(l, "x1", {"x2"}).module, "x2");
    if (j > 1) {
      claim("DS_x1 DS_x2(L^(" + std::to_string(2 * j) + "))", x2_then_x1, SuperDim{1, 1});
    } else {
      claim("DS_x2 DS_x1(L^(2))", x1_then_x2, SuperDim{1, 1});
    }
    claim("DS_x1(L^(" + std::to_string(2 * j) + "))", ds_dim(l, "x1"), SuperDim{1, 1});
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " claims" + bad};
}

// ---------------------------------------------------------------------------
// 8. sdim, parity shift and direct sums on random composites.

Outcome conservation() {
  std::mt19937 rng(88);
  std::uniform_int_distribution<int> parts(1, 4), len(1, 8), coin(0, 5), mix(-2, 2);
  long checks = 0, bad = 0;
  std::string first;
  auto fail = [&](const std::string& why) {
    if (!bad++) first = "; " + why;
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<MatrixSuperModule> summands;
    int k = parts(rng);
    for (int i = 0; i < k; ++i) {
      MatrixSuperModule s = coin(rng) == 0 ? m4() : zigzag(len(rng), coin(rng) % 2 ? 1 : -1);
      if (coin(rng) < 2) s = parity_shift(s);
      summands.push_back(s);
    }
    MatrixSuperModule m = summands[0];
    for (int i = 1; i < k; ++i) m = direct_sum(m, summands[i]);
    // A random even change of basis hides the decomposition.
    Matrix g = Matrix::identity(m.dim());
    for (size_t i = 0; i < m.dim(); ++i)
      for (size_t j = i + 1; j < m.dim(); ++j)
        if (m.parity[i] == m.parity[j] && coin(rng) == 0) g(i, j) = mix(rng);
    MatrixSuperModule hidden = change_basis(m, g);
    hidden = with_combination(hidden, "x+y", {{"x", 1}, {"y", 1}});
    for (const char* x : {"x", "y", "x+y"}) {
      SuperDim d = ds_dim(hidden, x);
      SuperDim sd = hidden.sdim();
      ++checks;
      if (d.even - d.odd != sd.even - sd.odd) fail(std::string("sdim changed under DS_") + x);
      ++checks;
      SuperDim pi = ds_dim(parity_shift(hidden), x);
      if (!(pi == SuperDim{d.odd, d.even})) fail(std::string("Pi does not commute with DS_") + x);
      ++checks;
      SuperDim sum{0, 0};
      for (const auto& s : summands) {
        MatrixSuperModule s2 = with_combination(s, "x+y", {{"x", 1}, {"y", 1}});
        SuperDim part = ds_dim(s2, x);
        sum.even += part.even;
        sum.odd += part.odd;
      }
      if (!(sum == d)) fail(std::string("DS_") + x + " not additive");
      ++checks;
      if (!(oracle::ds_dim_by_rank(hidden, x) == d)) fail("rank formula disagrees");
    }
  }
  return {bad == 0, std::to_string(checks) + " checks on 200 composites, " +
                        std::to_string(bad) + " failures" + first};
}

// ---------------------------------------------------------------------------
// 9. Core classes against power-sum classes.

struct Partition {
  std::map<std::string, std::string> core_to_sig, sig_to_core;
  long weights = 0, conflicts = 0;
  std::string first;

  void add(const AlgebraType& t, const Weight& w, int bound) {
    ++weights;
    std::string c = to_string(core(t, w));
    std::string s;
    int start = 1, step = t.family == Family::Q ? 2 : 1;
    for (int k = start; k <= bound; k += step) s += to_string(power_sum(t, w, k)) + ",";
    auto note = [&](std::map<std::string, std::string>& m, const std::string& key,
                    const std::string& val) {
      auto [it, fresh] = m.emplace(key, val);
      if (!fresh && it->second != val && !conflicts++)
        first = "; e.g. " + to_string(t) + " at " + to_string(w);
    };
    note(core_to_sig, c, s);
    note(sig_to_core, s, c);
  }
};

void all_integer_weights(const AlgebraType& t, int lo, int hi,
                         const std::function<void(const Weight&)>& f) {
  auto [m, n] = coord_dims(t);
  std::vector<int> v(m + n, lo);
  while (true) {
    Weight w;
    for (int i = 0; i < m; ++i) w.a.emplace_back(v[i]);
    for (int j = 0; j < n; ++j) w.b.emplace_back(v[m + j]);
    f(w);
    int i = 0;
    while (i < m + n && v[i] == hi) v[i++] = lo;
    if (i == m + n) break;
    ++v[i];
  }
}

Outcome central_characters() {
  long weights = 0, conflicts = 0, types = 0;
  std::string first;
  auto finish = [&](const Partition& p) {
    weights += p.weights;
    conflicts += p.conflicts;
    if (first.empty()) first = p.first;
    ++types;
  };
  for (int n : {2, 3}) {
    Partition p;
    AlgebraType t = alg::q(n);
    all_integer_weights(t, -3, 3, [&](const Weight& w) { p.add(t, w, default_oracle_bound(t)); });
    finish(p);
  }
  std::mt19937 rng(9);
  for (int n : {4, 5, 6}) {
    Partition p;
    AlgebraType t = alg::q(n);
    for (int i = 0; i < 500; ++i) {
      Weight w;
      for (int k = 0; k < n; ++k) w.a.push_back(oracle::random_int(rng, -3, 3));
      p.add(t, w, default_oracle_bound(t));
    }
    finish(p);
  }
  for (int s = 1; s <= 5; ++s)
    for (int m = 0; m <= s; ++m) {
      Partition p;
      AlgebraType t = alg::gl(m, s - m);
      all_integer_weights(t, -3, 3, [&](const Weight& w) { p.add(t, w, default_oracle_bound(t)); });
      finish(p);
    }
  return {conflicts == 0, std::to_string(weights) + " weights on " + std::to_string(types) +
                              " types, " + std::to_string(conflicts) +
                              " core/power-sum class conflicts" + first};
}

// ---------------------------------------------------------------------------
// 10. theta_restrict keeps the core and adds r to atyp.

Outcome theta_restriction() {
  std::mt19937 rng(10);
  std::vector<AlgebraType> types = {alg::gl(3, 2), alg::gl(2, 4), alg::gl(3, 3), alg::B(2, 2),
                                    alg::B(3, 1), alg::B(1, 3),   alg::D(2, 2), alg::D(3, 2),
                                    alg::D(2, 3), alg::q(4),      alg::q(5),    alg::q(6)};
  long cases = 0, bad = 0, pairs = 0;
  std::string first;
  for (const auto& t : types)
    for (int r = 0; r <= depth(t); ++r) {
      ++pairs;
      auto [m, n] = coord_dims(t);
      bool q = t.family == Family::Q;
      int sm = q ? m - 2 * r : m - r, sn = q ? 0 : n - r;
      bool zero = sm == 0 && sn == 0;  // gl(0|0), q(0), osp(1|0) are zero
      AlgebraType small = zero ? t
                          : q ? alg::q(sm)
                          : t.family == Family::GL ? alg::gl(sm, sn)
                          : t.family == Family::OSP_B ? alg::B(sm, sn)
                                                      : alg::D(sm, sn);
      for (int i = 0; i < 100; ++i, ++cases) {
        Weight x;
        for (int k = 0; k < sm; ++k) x.a.push_back(oracle::random_rational(rng));
        for (int k = 0; k < sn; ++k) x.b.push_back(oracle::random_rational(rng));
        Weight w = theta_restrict(t, r, x);
        CoreMultiset big = core(t, w);
        bool same = zero ? big.size() == 0 : big == core(small, x);
        int ax = zero ? 0 : atyp(small, x);
        if (!same || atyp(t, w) != ax + r) {
          if (!bad++) first = "; e.g. " + to_string(t) + " r=" + std::to_string(r);
        }
      }
    }
  return {bad == 0, std::to_string(cases) + " weights over " + std::to_string(pairs) +
                        " (type, rank) pairs, " + std::to_string(bad) + " violations" + first};
}

// ---------------------------------------------------------------------------
// 11. Tame predictions over all small dominant q_n weights.

void dominant_weights(int n, int height, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == n) {
    f(cur);
    return;
  }
  int top = cur.empty() ? height : cur.back();
  for (int v = top; v >= -height; --v) {
    if (!cur.empty() && v == cur.back() && v != 0) continue;
    cur.push_back(v);
    dominant_weights(n, height, cur, f);
    cur.pop_back();
  }
}

Outcome tame_predictions() {
  long weights = 0, kw = 0, doubled = 0, bad = 0;
  std::string first;
  auto fail = [&](const std::string& why) {
    if (!bad++) first = "; " + why;
  };
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> cur;
    dominant_weights(n, 6, cur, [&](const std::vector<int>& a) {
      ++weights;
      Weight w;
      for (int x : a) w.a.emplace_back(x);
      if (!dominant(w)) fail("enumerated weight not dominant: " + to_string(w));
      if (!kw_condition(w)) return;
      ++kw;
      TamePrediction p = tame_ds_prediction(w);
      RVec c = core(alg::q(n), w).a_part;
      int k = (n - static_cast<int>(c.size())) / 2;
      // Independent case split: a run of 2k zeros among the coordinates.
      std::string zeros;
      for (int x : a) zeros += x == 0 ? '0' : '.';
      bool single = zeros.find(std::string(2 * k, '0')) != std::string::npos;
      std::sort(c.begin(), c.end(), std::greater<Rational>());
      if (p.k != k) fail("rank mismatch at " + to_string(w));
      if (p.doubled == single) fail("case split differs at " + to_string(w));
      if (p.lambda_prime.a != c || !(p.target == alg::q(n - 2 * k)))
        fail("lambda' wrong at " + to_string(w));
      if (atyp(p.target, p.lambda_prime) != 0) fail("lambda' atypical at " + to_string(w));
      if (p.doubled) {
        ++doubled;
        if (k != 1) fail("doubled with atyp " + std::to_string(k) + " at " + to_string(w));
      }
    });
  }
  return {bad == 0, std::to_string(weights) + " dominant weights, " + std::to_string(kw) +
                        " KW, " + std::to_string(doubled) + " doubled, " + std::to_string(bad) +
                        " failures" + first};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"table reproduction", table_reproduction},
      {"core examples", core_examples},
      {"core-size law", core_size_law},
      {"block oracle equivalence", block_oracle},
      {"atyp/core agree on blocks", block_invariants},
      {"zigzag DS table", zigzag_table},
      {"p_2 example", p2_example},
      {"conservation suite", conservation},
      {"central characters", central_characters},
      {"theta restriction", theta_restriction},
      {"tame predictions", tame_predictions},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first
              << ": " << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
