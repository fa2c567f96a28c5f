#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "depthforge/cli.hpp"
#include "depthforge/random.hpp"
#include "test_support.hpp"

namespace depthforge {
namespace {

using testing::ideal;
using testing::mono;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return Json::parse(r.out);
}

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column, const std::string& what) {
    try {
        parse_ideal(text);
        ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), line) << text;
        EXPECT_EQ(e.column(), column) << text;
        EXPECT_NE(std::string(e.what()).find(what), std::string::npos) << e.what();
    }
}

TEST(Parse, Examples) {
    const auto p = parse_ideal("vars x, y ; x^2, x*y");
    EXPECT_EQ(p.context.names(), (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(p.ideal, ideal(2, {mono({2, 0}), mono({1, 1})}));
    EXPECT_TRUE(parse_ideal("vars a,b;0").ideal.is_zero());
    EXPECT_TRUE(parse_ideal("vars a ; 1").ideal.is_unit());
    EXPECT_EQ(parse_ideal("vars x ; x*x^2").ideal, ideal(1, {mono({3})}));
    EXPECT_EQ(parse_ideal("  vars\n x1 ,\ty_2 ;\n x1^10 * y_2 ").ideal, ideal(2, {mono({10, 1})}));
    const auto none = parse_ideal("vars ; 0");
    EXPECT_EQ(none.ideal.num_vars(), 0u);
}

TEST(Parse, ErrorsCarryPositions) {
    expect_parse_error("vars x ; y", 1, 10, "undeclared variable 'y'");
    expect_parse_error("vars x, x ; x", 1, 9, "duplicate variable declaration 'x'");
    expect_parse_error("vars x ; x^-1", 1, 12, "negative exponent");
    expect_parse_error("vars x ;\n  x^0", 2, 5, "zero exponent");
    expect_parse_error("vars x ; x $", 1, 12, "unexpected character '$'");
    expect_parse_error("var x ; x", 1, 1, "expected 'vars'");
    expect_parse_error("vars x ; x^", 1, 12, "expected an exponent at end of input");
    expect_parse_error("vars x x", 1, 8, "expected ';'");
}

TEST(Parse, FormatRoundTrip) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto I = random_proper_ideal(rng, {4, 5, 4, 0});
        const RingContext ctx(I.num_vars());
        const auto text = format_ideal(I, ctx);
        const auto back = parse_ideal(text);
        ASSERT_EQ(back.ideal, I) << text;
        ASSERT_EQ(back.context, ctx);
        ASSERT_EQ(format_ideal(back.ideal, back.context), text);
    }
    EXPECT_EQ(format_ideal(ideal(2, {mono({2, 0}), mono({1, 1})}), RingContext({"x", "y"})), "vars x, y ; x^2, x*y");
}

TEST(Cli, ConstructMotivatingExample) {
    const auto doc = run_json({"construct", "--dim-a", "1", "--depth-a", "0", "--dim-b", "2", "--depth-b", "0"});
    EXPECT_EQ(doc["engine"], "depthforge");
    EXPECT_EQ(doc["command"], "construct");
    EXPECT_EQ(doc["verdict"], "pass");
    const auto& rings = doc["rings"];
    ASSERT_EQ(rings.size(), 3u);
    EXPECT_EQ(rings[0]["computed"]["dim"], 1);
    EXPECT_EQ(rings[0]["computed"]["depth"], 0);
    EXPECT_EQ(rings[2]["computed"]["dim"], 2);
    EXPECT_EQ(rings[2]["computed"]["depth"], 0);
    EXPECT_EQ(rings[2]["ring"]["generators"], "X0^2, X0*X1, Y0^2, Y0*Y1");
    EXPECT_EQ(doc["fiber"]["dim"], 1);
    EXPECT_EQ(doc["fiber"]["depth"], 0);
    EXPECT_TRUE(doc.contains("timing_ms"));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"construct", "--dim-a", "1", "--depth-a", "0", "--dim-b", "2", "--depth-b", "0"}).code, 0);
    const auto bad = run({"construct", "--dim-a", "1", "--depth-a", "0", "--dim-b", "2", "--depth-b", "2"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("n1-d1 <= n2-d2"), std::string::npos) << bad.err;
    EXPECT_EQ(run({"invariants", "vars x ; 1"}).code, 2);
    EXPECT_EQ(run({"invariants", "vars x ; y"}).code, 2);
    EXPECT_EQ(run({"invariants", "vars x ; x", "--field-char", "4"}).code, 2);
    EXPECT_EQ(run({"invariants", "vars x ; x", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"lemma", "--dim", "1", "--depth", "2"}).code, 2);
    EXPECT_EQ(run({"lemma", "--dim", "6", "--depth", "0", "--max-degree", "3"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    const auto version = run({"--version"});
    EXPECT_EQ(version.code, 0);
    EXPECT_NE(version.out.find("0.1.0"), std::string::npos);
    EXPECT_EQ(run({"export", "--lemma", "1,0", "--target", "maple"}).code, 2);
    EXPECT_EQ(run({"export"}).code, 2);
}

TEST(Cli, IdealCommands) {
    const std::string e = "vars x, y ; x^2, x*y";
    const auto inv = run_json({"invariants", e});
    EXPECT_EQ(inv["computed"]["dim"], 1);
    EXPECT_EQ(inv["computed"]["depth"], 0);
    EXPECT_EQ(inv["computed"]["cmd"], 1);
    EXPECT_EQ(inv["computed"]["depth_zero_witness"], "x");
    EXPECT_EQ(inv["computed"]["ass_primes"], Json::parse(R"([["x"],["x","y"]])"));
    EXPECT_EQ(run_json({"invariants", "vars x, y ; x"})["computed"]["depth_zero_witness"], nullptr);
    // component generators are listed in grlex order
    EXPECT_EQ(run_json({"decompose", e})["components"], Json::parse(R"(["x","y, x^2"])"));
    EXPECT_EQ(run_json({"minprimes", e})["min_primes"], Json::parse(R"([["x"]])"));
    EXPECT_EQ(run_json({"assprimes", e})["ass_primes"], Json::parse(R"([["x"],["x","y"]])"));
    EXPECT_EQ(run_json({"hilbert", e})["hilbert"]["numerator"], Json::parse("[1,1,-1]"));
    const auto betti = run_json({"betti", e});
    EXPECT_EQ(betti["betti"]["totals"], Json::parse("[1,2,1]"));
    const auto oracle = run_json({"betti", e, "--oracle"});
    EXPECT_EQ(oracle["backend"], "koszul-complex");
    EXPECT_EQ(oracle["betti"]["entries"], betti["betti"]["entries"]);
}

TEST(Cli, ReadsStdin) {
    std::istringstream in("vars a, b ;\n a*b");
    auto* old = std::cin.rdbuf(in.rdbuf());
    const auto r = run({"minprimes", "-", "--format", "json"});
    std::cin.rdbuf(old);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out)["min_primes"], Json::parse(R"([["a"],["b"]])"));
}

TEST(Cli, TextCarriesSameValues) {
    const std::string e = "vars x, y, z ; x^2*y, y*z^3, x*z";
    for (const std::string cmd : {"invariants", "hilbert", "betti", "decompose"}) {
        const auto json = run_json({cmd, e});
        const auto text = run({cmd, e});
        ASSERT_EQ(text.code, 0);
        // Every scalar of the JSON document except the timing shows up as "key: value".
        std::function<void(const Json&)> walk = [&](const Json& j) {
            for (auto it = j.begin(); it != j.end(); ++it) {
                const auto& v = it.value();
                if (v.is_structured()) {
                    walk(v);
                    continue;
                }
                if (j.is_object() && it.key() == "timing_ms") continue;
                const std::string shown = v.is_string() ? v.get<std::string>() : v.dump();
                const std::string key = j.is_object() ? it.key() + ": " : "";
                EXPECT_NE(text.out.find(key + shown), std::string::npos) << cmd << " " << key << shown;
            }
        };
        walk(json);
    }
}

TEST(Cli, LemmaAndGrid) {
    const auto doc = run_json({"lemma", "--dim", "3", "--depth", "1", "--field-char", "3"});
    EXPECT_EQ(doc["field_characteristic"], 3);
    EXPECT_EQ(doc["computed"]["dim"], 3);
    EXPECT_EQ(doc["computed"]["depth"], 1);
    const auto grid = run_json({"grid-verify", "--max-dim", "2", "--random", "5"});
    EXPECT_EQ(grid["verdict"], "pass");
    EXPECT_EQ(grid["sweeps"].size(), 3u);
}

TEST(Cli, ConstructWithOracle) {
    const auto doc = run_json(
        {"construct", "--dim-a", "1", "--depth-a", "0", "--dim-b", "2", "--depth-b", "1", "--oracle"});
    EXPECT_EQ(doc["claims"].back()["verdict"], "pass");
    EXPECT_EQ(doc["rings"][2]["computed"]["depth"], 1);
}

TEST(Export, Macaulay2) {
    const auto r = run({"export", "vars x, y ; x^2, x*y"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("R1 = QQ[x,y];"), std::string::npos);
    EXPECT_NE(r.out.find("I1 = ideal(x^2, x*y);"), std::string::npos);
    EXPECT_NE(r.out.find("depth M1"), std::string::npos);
    EXPECT_NE(r.out.find("--   dim 1"), std::string::npos);
    EXPECT_NE(r.out.find("--   depth 0"), std::string::npos);
    EXPECT_NE(r.out.find("--   betti 1 2 1"), std::string::npos);
    const auto zero = run({"export", "--lemma", "2,2", "--field-char", "2"});
    EXPECT_NE(zero.out.find("R1 = ZZ/2[T1,T2];"), std::string::npos);
    EXPECT_NE(zero.out.find("ideal(0_R1)"), std::string::npos);
}

TEST(Export, SingularMorphism) {
    const auto r = run({"export", "--morphism", "1,0,2,0", "--target", "singular"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("LIB \"primdec.lib\";"), std::string::npos);
    EXPECT_NE(r.out.find("ring R1 = 0,(X0,X1),dp;"), std::string::npos);
    EXPECT_NE(r.out.find("ring R3 = 0,(X0,X1,Y0,Y1),dp;"), std::string::npos);
    EXPECT_NE(r.out.find("ideal I3 = X0^2, X0*X1, Y0^2, Y0*Y1;"), std::string::npos);
    EXPECT_NE(r.out.find("//   dim 2"), std::string::npos);
    EXPECT_NE(r.out.find("// ring B"), std::string::npos);
    const auto point = run({"export", "--lemma", "0,0", "--target", "singular"});
    EXPECT_NE(point.out.find("ring R1 = 0,(z),dp;"), std::string::npos);
}

TEST(Json, LargeIntegersBecomeStrings) {
    EXPECT_EQ(json_int(std::uint64_t{42}), 42);
    EXPECT_EQ(json_int(std::uint64_t{1} << 60), Json(std::to_string(std::uint64_t{1} << 60)));
    EXPECT_EQ(json_int(-(std::int64_t{1} << 60)), Json(std::to_string(-(std::int64_t{1} << 60))));
}

}  // namespace
}  // namespace depthforge
