#include <gtest/gtest.h>

#include <sstream>

#include "superds/cli.hpp"
#include "superds/error.hpp"
#include "superds/json_io.hpp"

using namespace superds;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out call(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = run(args, o, e);
  return {c, o.str(), e.str()};
}

}  // namespace

TEST(Cli, Examples) {
  EXPECT_EQ(call({"ds-type", "gl(3|2)", "--rank", "1"}).out, "gl(2|1)\n");
  EXPECT_EQ(call({"core", "q(4)", "--weight", "1,1,0,-1"}).out, "{0,1}\n");
  Out b = call({"block-eq", "gl(1|1)", "--lhs", "1;1", "--rhs", "2;2"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out.substr(0, 4), "yes\n");
  EXPECT_NE(b.out.find("witness"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({"ds-type", "gl(3|2)"}).code, 1);
  EXPECT_EQ(call({"ds-type", "gl(3|", "--rank", "1"}).code, 1);
  EXPECT_EQ(call({"ds-type", "gl(3|2)", "--rank", "7"}).code, 2);
  EXPECT_EQ(call({"core", "gl(2|1)", "--weight", "1;1"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
  Out e = call({"tame", "--weight", "1,0,0,-1"});
  EXPECT_EQ(e.code, 2);
  EXPECT_NE(e.err.find("KWFails"), std::string::npos);
}

TEST(Cli, Verbs) {
  EXPECT_EQ(call({"defect", "gl(2|3)"}).out, "2\n");
  EXPECT_EQ(call({"depth", "p(4)"}).out, "4\n");
  EXPECT_EQ(call({"atyp", "gl(3|2)", "--weight", "1,1,1;1,2"}).out, "1\n");
  EXPECT_EQ(call({"kw", "--weight", "1,0,0,-1"}).out, "fail\n");
  EXPECT_EQ(call({"tame", "--weight", "2,1,-1"}).out, "doubled (2) of q(1)\n");
  EXPECT_EQ(call({"chi-eq", "q(3)", "--lhs", "1,-1,2", "--rhs", "2,0,0"}).out, "equal\n");
  EXPECT_EQ(call({"isoset", "q(4)", "--root", "1,-1,0,0", "--root", "0,0,1,-1"}).out, "true\n");
  EXPECT_EQ(call({"theta", "q(3)", "--rank", "1", "--weight", "2"}).out,
            "2,0,0;\ncore: {2}\natyp: 1\n");
  Out z = call({"zigzag", "--length", "4", "--sign=-"});
  EXPECT_NE(z.out.find("DS_x: (1|1)"), std::string::npos);
  EXPECT_EQ(call({"odd-reflect", "gl(1|1)", "--simple", "1"}).code, 0);
  EXPECT_EQ(call({"odd-reflect", "gl(2|1)", "--simple", "1"}).code, 2);
  Out st = call({"strata", "q(3)"});
  EXPECT_NE(st.out.find("GL_3-orbit of x_1"), std::string::npos);
  Out orb = call({"block-orbit", "gl(1|1)", "--weight", "1;1", "--radius", "2", "--jobs", "2"});
  EXPECT_EQ(orb.out.substr(0, 8), "size: 5\n");
}

TEST(Cli, JsonOutputsReparse) {
  Json w = Json::parse(call({"--json", "theta", "gl(2|1)", "--rank", "1", "--weight", "5"}).out);
  EXPECT_EQ(weight_from_json(w.at("weight")), (Weight{{5, 0}, {0}}));

  Json b = Json::parse(call({"--json", "block-eq", "gl(1|1)", "--lhs", "1;1", "--rhs", "2;2"}).out);
  EXPECT_EQ(b.at("verdict"), "yes");
  EXPECT_EQ(b.at("witness").at("m"), Json::array({"1"}));
  for (const auto& r : b.at("isoset")) EXPECT_EQ(to_json(root_from_json(r)), r);

  Json m = Json::parse(
      call({"--json", "ds-matrix", "--module", to_json(zigzag(4, -1)).dump(), "--x", "x"}).out);
  EXPECT_EQ(m.at("sdim"), (Json{{"even", 1}, {"odd", 1}}));
  MatrixSuperModule back = module_from_json(m.at("module"));
  EXPECT_EQ(back.sdim(), (SuperDim{1, 1}));
  EXPECT_EQ(m.at("dropped"), Json::array({"h"}));

  Json o = Json::parse(call({"--json", "isoset", "q(4)", "--weight", "0,0,0,0"}).out);
  EXPECT_EQ(o.at("size"), 2);
  Json c = Json::parse(call({"--json", "core", "gl(3|2)", "--weight", "1,1,1;1,2"}).out);
  EXPECT_EQ(c.at("core"), "{1,1}⊔{2}");
  Json s = Json::parse(call({"--json", "strata", "p(2)"}).out);
  EXPECT_TRUE(s.is_array());
}

TEST(JsonIo, RoundTrips) {
  Weight w{{Rational(1, 2), -3}, {7}, 2, Rational(-1, 3)};
  EXPECT_EQ(weight_from_json(to_json(w)), w);
  EXPECT_EQ(to_json(w).dump(), R"({"a":["1/2","-3"],"b":["7"],"d":"-1/3","k":"2"})");
  Root r{{1, 0}, {0, -1}, 2, Parity::Odd};
  EXPECT_EQ(root_from_json(to_json(r)), r);
  MatrixSuperModule m = m4();
  MatrixSuperModule back = module_from_json(to_json(m));
  EXPECT_EQ(back.parity, m.parity);
  EXPECT_EQ(back.odd, m.odd);
  for (const auto& [k, v] : m.ops) EXPECT_TRUE(back.op(k) == v);
  EXPECT_THROW(module_from_json(Json::parse(R"({"parity":[0,1],"ops":{"x":[[0,1],[1]]}})")),
               Error);
}

TEST(Cli, JsonFlagEitherSide) {
  Out before = call({"--json", "core", "gl(3|2)", "--weight", "1,1,1;1,2"});
  Out after = call({"core", "gl(3|2)", "--weight", "1,1,1;1,2", "--json"});
  EXPECT_EQ(before.code, 0);
  EXPECT_EQ(before.out, after.out);
  EXPECT_EQ(Json::parse(before.out)["core"], "{1,1}⊔{2}");
}
