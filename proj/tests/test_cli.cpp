#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hilbtan/cli.hpp"
#include "json.hpp"

using namespace hilbtan;

namespace {

std::string data(const std::string& name) { return std::string(HILBTAN_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(IdealFileFormat, ParsesRingAndGens) {
  auto f = parse_ideal_file("# c\nring char=3 x=[a, b] y=[c]\ngen a*c + b*c  # tail\n\ngen a^2\n");
  EXPECT_EQ(f.ring->describe(), "ring char=3 x=[a,b] y=[c]");
  EXPECT_EQ(f.ideal.generators().size(), 2u);
  EXPECT_FALSE(f.frame);
}

TEST(IdealFileFormat, EmptyGeneratorListIsZeroIdeal) {
  auto f = parse_ideal_file("ring char=0 x=[x]\n");
  EXPECT_TRUE(f.ideal.is_zero());
}

TEST(IdealFileFormat, ErrorsCarryLineAndColumn) {
  try {
    parse_ideal_file("ring char=3 x=[a,b]\ngen a + $\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 9u);
  }
  try {
    parse_ideal_file("ring char=3 x=[a,b] y=[a]\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("a"), std::string::npos);
  }
  EXPECT_THROW(parse_ideal_file("gen x\n"), InputError);
  EXPECT_THROW(parse_ideal_file("ring char=4 x=[a]\n"), InputError);
  EXPECT_THROW(parse_ideal_file("ring char=3 x=[a]\nring char=3 x=[a]\n"), InputError);
  EXPECT_THROW(parse_ideal_file("ring char=3 x=[a] z=[b]\n"), InputError);
  EXPECT_THROW(parse_ideal_file("ring char=3 x=[a]\nframe a=two\n"), InputError);
  EXPECT_THROW(parse_ideal_file("ring char=3 x=[a]\nbogus\n"), InputError);
  EXPECT_THROW(parse_ideal_file(""), InputError);
}

TEST(IdealFileFormat, FormatRoundTrip) {
  auto f = parse_ideal_file("ring char=7 x=[x1,x2] y=[y1]\ngen x1*y1 - 3*x2*y1\ngen x1^2\n");
  auto text = format_ideal_file(f.ring, f.ideal.generators());
  auto g = parse_ideal_file(text);
  EXPECT_EQ(format_ideal_file(g.ring, g.ideal.generators()), text);
}

TEST(Cli, GroebnerBasis) {
  auto r = run({"gb", data("xy.ideal")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ring char=5 x=[x,y]\ngen y\ngen x\n");
}

TEST(Cli, NormalForm) {
  auto r = run({"nf", data("squares.ideal"), "--poly", "x^3 + x*y + 2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x*y + 2\n");
}

TEST(Cli, Tnt) {
  auto r = run({"tnt", data("xy.ideal")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "TNT: true, dim_{<0} = 2 (expected 2)\n");
  auto s = run({"tnt", data("squares.ideal")});
  EXPECT_EQ(s.code, 2);
  EXPECT_EQ(s.out.rfind("TNT: false", 0), 0u);
}

TEST(Cli, HomJson) {
  auto r = run({"--format", "json", "hom", data("squares.ideal"), "--degree", "-1"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dimension"], 4);
  EXPECT_EQ(j["degree"], nlohmann::json::array({-1, 0}));
}

TEST(Cli, HomBasis) {
  auto r = run({"hom", data("xy.ideal"), "--degree", "-1", "--basis"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim Hom_(-1, 0) = 2"), std::string::npos);
  EXPECT_NE(r.out.find("basis 2:"), std::string::npos);
}

TEST(Cli, Regularity) {
  auto r = run({"reg", data("mdp_K.ideal")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "regularity: 4\n");
}

TEST(Cli, Frame) {
  auto r = run({"frame", data("frame0.ideal")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("ring char=5 x=[x1,x2,x3] y=[y1,y2,y3]\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 18);
}

TEST(Cli, FrameLikeGate) {
  auto r = run({"framelike", data("frame_i2.ideal")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("frame-likeness hypothesis unmet"), std::string::npos);
  EXPECT_NE(r.err.find("I_2"), std::string::npos);
}

TEST(Cli, FrameLikeZero) {
  auto r = run({"--threads", "1", "framelike", data("frame0.ideal")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("frame-like: true"), std::string::npos);
}

TEST(Cli, ParseErrorReportsPosition) {
  auto r = run({"gb", data("bad_poly.ideal")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3, column"), std::string::npos);
  auto d = run({"gb", data("bad_dup.ideal")});
  EXPECT_EQ(d.code, 1);
  EXPECT_NE(d.err.find("line 1"), std::string::npos);
  auto c = run({"gb", data("bad_char.ideal")});
  EXPECT_EQ(c.code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"gb"}).code, 1);
  EXPECT_EQ(run({"gb", data("missing.ideal")}).code, 1);
  EXPECT_EQ(run({"--format", "xml", "gb", data("xy.ideal")}).code, 1);
  EXPECT_EQ(run({"hom", data("xy.ideal"), "--degree", "x"}).code, 1);
  EXPECT_EQ(run({"example", "nope"}).code, 1);
  EXPECT_EQ(run({"cert"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, W2) {
  auto ex = run({"example", "bo2"});
  ASSERT_EQ(ex.code, 0);
  auto path = ::testing::TempDir() + "bo2.ideal";
  std::ofstream(path) << ex.out;
  auto r = run({"w2", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("obstructed: true"), std::string::npos);
  auto s = run({"w2", data("xy.ideal")});
  EXPECT_EQ(s.code, 1);
  std::remove(path.c_str());
}

TEST(Cli, OutputFile) {
  auto path = ::testing::TempDir() + "gb.out";
  auto r = run({"-o", path, "gb", data("twisted.ideal")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str().rfind("ring char=0 x=[x,y,z,w]\n", 0), 0u);
  std::remove(path.c_str());
}

TEST(Cli, CertificateQ3) {
  auto r = run({"--threads", "1", "cert", "--example", "q3"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["orbit_dim"], 26);
  EXPECT_EQ(j["hom0_dim"], 26);
  EXPECT_EQ(j["verdict"], true);
  auto q4 = run({"--threads", "1", "cert", "--example", "q4"});
  EXPECT_EQ(q4.code, 2);
  EXPECT_TRUE(nlohmann::json::parse(q4.out)["w2_nf"].is_null());
}
