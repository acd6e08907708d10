#include "superds/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "superds/central.hpp"
#include "superds/error.hpp"
#include "superds/json_io.hpp"

namespace superds {

namespace {

// Compact root syntax "e1,..;d1,..[;d]" with integer entries, or a JSON object.
Root parse_root(const std::string& s) {
  if (!s.empty() && s.front() == '{') return root_from_json(Json::parse(s));
  Weight w = parse_weight(s);
  Root r;
  auto as_int = [&](const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_sint_p())
      throw Error(ErrorKind::Parse, "root coordinates are integers: '" + s + "'");
    return static_cast<int>(q.get_num().get_si());
  };
  for (const auto& x : w.a) r.eps.push_back(as_int(x));
  for (const auto& x : w.b) r.delta.push_back(as_int(x));
  if (w.d != 0) throw Error(ErrorKind::Parse, "root has at most three ';' fields: '" + s + "'");
  r.d = as_int(w.k);
  r.parity = Parity::Odd;
  return r;
}

std::string read_module_arg(const std::string& s) {
  if (s.empty() || s.front() != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + s.substr(1));
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string roots_text(const std::vector<Root>& rs) {
  std::string s = "{";
  for (size_t i = 0; i < rs.size(); ++i) s += (i ? ", " : "") + to_string(rs[i]);
  return s + "}";
}

Json roots_json(const std::vector<Root>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return a;
}

struct Args {
  std::string type, weight, lhs, rhs, module, x = "x", induced, sign = "+";
  std::vector<std::string> roots;
  int rank = 1, word_bound = 4, degree_bound = 2, jobs = 1, length = 1, simple = 0, oracle = 0;
  std::string radius = "2";
  bool json = false, highest_weight = false, rho_shifted = false, m4 = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Duflo-Serre functors, cores and blocks of Lie superalgebras", "superds"};
  app.require_subcommand(1);
  Args a;
  app.add_flag("--json", a.json, "JSON output");
  app.fallthrough();

  std::map<CLI::App*, std::function<void()>> actions;
  auto typed = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("type", a.type, "algebra, e.g. gl(3|2), q(4), osp(5|4), gl(2|1)^(1)")
        ->required();
    return sub;
  };
  auto emit = [&](const Json& j, const std::string& text) {
    if (a.json) out << j.dump() << "\n";
    else out << text << "\n";
  };

  {
    auto* s = typed("info", "type summary");
    actions[s] = [&] {
      AlgebraType t = parse_algebra(a.type);
      validate(t);
      Json j = {{"type", to_string(t)}, {"defect", defect(t)}, {"depth", depth(t)}};
      std::string text = "type: " + to_string(t) + "\ndefect: " + std::to_string(defect(t)) +
                         "\ndepth: " + std::to_string(depth(t));
      try {
        Rational h = dual_coxeter(t);
        j["dual_coxeter"] = to_json(h);
        text += "\ndual coxeter: " + to_string(h);
      } catch (const Error&) {
      }
      try {
        auto [m, n] = coord_dims(t);
        j["weight_coords"] = {m, n};
        text += "\nweight coordinates: " + std::to_string(m) + " eps, " + std::to_string(n) +
                " delta";
      } catch (const Error&) {
      }
      emit(j, text);
    };
  }
  {
    auto* s = typed("defect", "defect");
    actions[s] = [&] {
      int d = defect(parse_algebra(a.type));
      emit({{"defect", d}}, std::to_string(d));
    };
  }
  {
    auto* s = typed("depth", "maximal rank of a square-zero odd element");
    actions[s] = [&] {
      int d = depth(parse_algebra(a.type));
      emit({{"depth", d}}, std::to_string(d));
    };
  }
  {
    auto* s = typed("ds-type", "type of g_x for x of the given rank");
    s->add_option("--rank", a.rank, "rank of x")->required();
    actions[s] = [&] {
      std::string t = to_string(ds_type(parse_algebra(a.type), a.rank));
      emit({{"target", t}}, t);
    };
  }
  {
    auto* s = typed("strata", "strata of the self-commuting cone");
    actions[s] = [&] {
      auto st = x_strata(parse_algebra(a.type));
      Json j = Json::array();
      std::string text;
      for (const auto& x : st) {
        j.push_back(to_json(x));
        text += std::to_string(x.rank) + "\t" + x.descriptor + "\t" + to_string(x.target) +
                (x.in_X_iso ? "" : "\t(not in X_iso)") + "\n";
      }
      if (!text.empty()) text.pop_back();
      emit(j, text);
    };
  }
  {
    auto* s = typed("core", "core of a weight");
    s->add_option("--weight", a.weight, "a1,..;b1,..[;k[;d]]")->required();
    actions[s] = [&] {
      CoreMultiset c = core(parse_algebra(a.type), parse_weight(a.weight));
      emit(to_json(c), to_string(c));
    };
  }
  {
    auto* s = typed("atyp", "atypicality of a weight");
    s->add_option("--weight", a.weight)->required();
    actions[s] = [&] {
      int k = atyp(parse_algebra(a.type), parse_weight(a.weight));
      emit({{"atyp", k}}, std::to_string(k));
    };
  }
  {
    auto* s = typed("isoset", "check an iso-set, or build a maximal one orthogonal to a weight");
    auto* w = s->add_option("--weight", a.weight);
    auto* r = s->add_option("--root", a.roots, "e1,..;d1,..[;d] (odd) or root JSON");
    w->excludes(r);
    s->add_option("--degree-bound", a.degree_bound);
    actions[s] = [&] {
      AlgebraType t = parse_algebra(a.type);
      if (!a.weight.empty()) {
        auto set = max_orthogonal_isoset(t, parse_weight(a.weight), a.degree_bound);
        emit({{"isoset", roots_json(set)}, {"size", set.size()}},
             roots_text(set) + "\nsize: " + std::to_string(set.size()));
        return;
      }
      std::vector<Root> set;
      for (const auto& x : a.roots) set.push_back(parse_root(x));
      bool ok = is_isoset(t, set);
      emit({{"isoset", ok}}, ok ? "true" : "false");
    };
  }
  auto block_flags = [&](CLI::App* s) {
    s->add_option("--word-bound", a.word_bound, "affine reflection word length");
    s->add_option("--degree-bound", a.degree_bound, "delta-degree bound for affine roots");
    auto* hw = s->add_flag("--highest-weight", a.highest_weight, "inputs are highest weights");
    auto* rs = s->add_flag("--rho-shifted", a.rho_shifted, "inputs are rho-shifted (default)");
    hw->excludes(rs);
  };
  {
    auto* s = typed("block-eq", "are two weights in one block");
    s->add_option("--lhs", a.lhs)->required();
    s->add_option("--rhs", a.rhs)->required();
    block_flags(s);
    actions[s] = [&] {
      BlockOptions o;
      o.word_bound = a.word_bound;
      o.degree_bound = a.degree_bound;
      o.highest_weight = a.highest_weight;
      BlockResult r = block_equivalent(parse_algebra(a.type), parse_weight(a.lhs),
                                       parse_weight(a.rhs), o);
      std::string text = to_string(r.verdict);
      if (r.witness) {
        std::vector<std::string> w;
        for (int x : r.witness->w) w.push_back(std::to_string(x));
        text += "\nwitness w: [";
        for (size_t i = 0; i < w.size(); ++i) text += (i ? "," : "") + w[i];
        text += "]\nwitness m: [" + join(r.witness->m) + "]";
        if (!r.witness->word.empty()) {
          text += "\nwitness word:";
          for (const auto& x : r.witness->word) text += " " + x;
        }
      }
      text += "\niso-set: " + roots_text(r.isoset);
      if (!r.reason.empty()) text += "\nreason: " + r.reason;
      emit(to_json(r), text);
    };
  }
  {
    auto* s = typed("block-orbit", "closure of a weight under Kac-Kazhdan moves in a box");
    s->add_option("--weight", a.weight)->required();
    s->add_option("--radius", a.radius, "box half-width around the weight");
    s->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
    actions[s] = [&] {
      auto orbit = block_orbit_oracle(parse_algebra(a.type), parse_weight(a.weight),
                                      parse_rational(a.radius), a.jobs);
      Json j = Json::array();
      std::string text = "size: " + std::to_string(orbit.size());
      for (const auto& w : orbit) {
        j.push_back(to_json(w));
        text += "\n" + to_string(w);
      }
      emit({{"size", orbit.size()}, {"orbit", j}}, text);
    };
  }
  {
    auto* s = app.add_subcommand("ds-matrix", "DS_x of a module given by matrices");
    s->add_option("--module", a.module, "module JSON, or @file")->required();
    s->add_option("--x", a.x, "name of the odd operator");
    s->add_option("--induced", a.induced, "comma-separated operators to carry over (strict)");
    actions[s] = [&] {
      MatrixSuperModule m = module_from_json(Json::parse(read_module_arg(a.module)));
      DSResult r = ds(m, a.x, split_names(a.induced));
      SuperDim d = r.module.sdim();
      Json j = {{"sdim", to_json(d)}, {"module", to_json(r.module)}, {"dropped", r.dropped}};
      std::string text = "sdim: " + to_string(d);
      for (const auto& x : r.dropped) text += "\ndropped: " + x;
      emit(j, text);
    };
  }
  {
    auto* s = app.add_subcommand("zigzag", "DS dimensions of a zigzag module or M_4");
    s->add_option("--length", a.length, "number of basis vectors");
    s->add_option("--sign", a.sign, "+ or - (use --sign=-)");
    s->add_flag("--m4", a.m4, "use the 4-dimensional module M_4 instead");
    actions[s] = [&] {
      if (a.sign != "+" && a.sign != "-")
        throw Error(ErrorKind::Parse, "--sign must be + or -");
      MatrixSuperModule m = a.m4 ? m4() : zigzag(a.length, a.sign == "+" ? 1 : -1);
      SuperDim dx = ds_dim(m, "x"), dy = ds_dim(m, "y");
      SuperDim dxy = ds_dim(with_combination(m, "x+y", {{"x", 1}, {"y", 1}}), "x+y");
      SuperDim dyx = ds_dim(ds(m, "x", {"y"}).module, "y");
      Json j = {{"sdim", to_json(m.sdim())}, {"ds_x", to_json(dx)}, {"ds_y", to_json(dy)},
                {"ds_x_plus_y", to_json(dxy)}, {"ds_ybar_ds_x", to_json(dyx)}};
      emit(j, "sdim: " + to_string(m.sdim()) + "\nDS_x: " + to_string(dx) +
                  "\nDS_y: " + to_string(dy) + "\nDS_x+y: " + to_string(dxy) +
                  "\nDS_ybar DS_x: " + to_string(dyx));
    };
  }
  {
    auto* s = typed("chi-eq", "compare central characters");
    s->add_option("--lhs", a.lhs)->required();
    s->add_option("--rhs", a.rhs)->required();
    s->add_option("--oracle", a.oracle, "also compare power sums up to this index (0: default)");
    actions[s] = [&, s] {
      AlgebraType t = parse_algebra(a.type);
      Weight l = parse_weight(a.lhs), r = parse_weight(a.rhs);
      CharVerdict v = chi_equal(t, l, r);
      Json j = {{"verdict", to_string(v)}};
      std::string text = to_string(v);
      if (s->count("--oracle")) {
        int k = a.oracle > 0 ? a.oracle : default_oracle_bound(t);
        bool o = chi_equal_oracle(t, l, r, k);
        j["oracle"] = o;
        j["bound"] = k;
        text += "\npower sums up to " + std::to_string(k) + ": " + (o ? "agree" : "differ");
      }
      emit(j, text);
    };
  }
  {
    auto* s = typed("theta", "pull a weight of g_x back to g by zero-padding");
    s->add_option("--rank", a.rank)->required();
    s->add_option("--weight", a.weight, "weight of ds-type(type, rank)")->required();
    actions[s] = [&] {
      AlgebraType t = parse_algebra(a.type);
      Weight w = theta_restrict(t, a.rank, parse_weight(a.weight));
      CoreMultiset c = core(t, w);
      int k = atyp(t, w);
      emit({{"weight", to_json(w)}, {"core", to_string(c)}, {"atyp", k}},
           to_string(w) + "\ncore: " + to_string(c) + "\natyp: " + std::to_string(k));
    };
  }
  {
    auto* s = app.add_subcommand("kw", "KW-condition for a dominant q(n) weight");
    s->add_option("--weight", a.weight, "a1,..,an")->required();
    actions[s] = [&] {
      auto set = kw_condition(parse_weight(a.weight));
      if (!set) emit({{"kw", false}}, "fail");
      else emit({{"kw", true}, {"isoset", roots_json(*set)}}, roots_text(*set));
    };
  }
  {
    auto* s = app.add_subcommand("tame", "DS_x(L(lambda)) for a KW weight of q(n)");
    s->add_option("--weight", a.weight, "a1,..,an")->required();
    actions[s] = [&] {
      TamePrediction p = tame_ds_prediction(parse_weight(a.weight));
      emit(to_json(p), to_string(p));
    };
  }
  {
    auto* s = typed("odd-reflect", "odd reflection of the distinguished base");
    auto* i = s->add_option("--simple", a.simple, "1-based index of the simple root");
    auto* r = s->add_option("--root", a.roots, "the simple root, e1,..;d1,.. or JSON");
    i->excludes(r);
    s->add_option("--weight", a.weight, "highest weight to carry along");
    actions[s] = [&] {
      AlgebraType t = parse_algebra(a.type);
      RootSystem sys = build(t, t.is_affine() ? a.degree_bound : 0);
      Base base = distinguished_base(t);
      Root beta;
      if (!a.roots.empty()) {
        if (a.roots.size() != 1) throw Error(ErrorKind::Parse, "give a single --root");
        beta = parse_root(a.roots.front());
      } else {
        if (a.simple < 1 || a.simple > static_cast<int>(base.simple.size()))
          throw Error(ErrorKind::NotSimpleIsotropic,
                      "simple root index out of range 1.." + std::to_string(base.simple.size()));
        beta = base.simple[a.simple - 1];
      }
      Base nb = odd_reflect(sys, base, beta);
      Json j = {{"simple", roots_json(nb.simple)}, {"rho", to_json(nb.rho)}};
      std::string text = "simple: " + roots_text(nb.simple) + "\nrho: " + to_string(nb.rho);
      if (!a.weight.empty()) {
        Weight w = hw_transform(sys, parse_weight(a.weight), beta, base);
        j["weight"] = to_json(w);
        text += "\nweight: " + to_string(w);
      }
      emit(j, text);
    };
  }

  std::vector<std::string> argv_s = {"superds"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_s) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "superds: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands()) err << sub->help();
    if (app.get_subcommands().empty()) err << app.help();
    return 1;
  }
  try {
    for (auto* sub : app.get_subcommands()) actions.at(sub)();
  } catch (const Error& e) {
    err << "superds: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? 1 : 2;
  } catch (const Json::exception& e) {
    err << "superds: malformed JSON: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace superds
