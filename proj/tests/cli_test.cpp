#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <powmon/cli.hpp>

using namespace powmon;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const char* env_seed = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err, env_seed);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Member) {
    auto r = run({"member", "-m", "lex", "-g", "(-1,0)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "false\n");
    r = run({"member", "-m", "slope:sqrt(2)", "-g", "(1,1)"});
    EXPECT_EQ(r.out, "true\n");
}

TEST(Cli, Mul) {
    const auto r = run({"mul", "-X", "{(0,0),(1,0)}", "-Y", "{(0,0),(1,0)}"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{(0,0),(1,0),(2,0)}\n");
}

TEST(Cli, Normalize) {
    for (const char* algo : {"both", "brute", "inductive"}) {
        const auto r = run({"normalize", "-m", "lex", "-X", "{(0,0),(-1,0),(-2,0)}", "--algo", algo});
        EXPECT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(r.out, "shift=(2,0) normalized={(0,0),(1,0),(2,0)}\n");
    }
    EXPECT_EQ(run({"normalize", "-m", "lex", "-X", "{(0,0)}", "--algo", "fast"}).code, 2);
}

TEST(Cli, Transport) {
    auto r = run({"transport", "--from", "lex", "--to", "slope:sqrt(2)", "-X", "{(0,0),(0,1)}"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "shift=(0,-1) image={(0,-1),(0,0)}\n");
    r = run({"transport", "--from", "lex", "--to", "slope:sqrt(2)", "-X", "{(0,0),(-1,0)}"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("(-1,0)"), std::string::npos);
}

TEST(Cli, Factor) {
    EXPECT_EQ(run({"factor", "-m", "lex", "-g", "(1,0)"}).out, "IRREDUCIBLE\n");
    EXPECT_EQ(run({"factor", "-m", "lex", "-g", "(0,0)"}).out, "UNIT\n");
    EXPECT_EQ(run({"factor", "-m", "lex", "-g", "(-5,1)"}).out, "(1,0) + (-6,1)\n");

    const auto r = run({"factor", "-m", "slope:sqrt(2)", "-g", "(1,1)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(-2,-3) + (3,4)\n");

    const auto capped = run({"factor", "-m", "slope:sqrt(2)", "-g", "(1,1)", "--max-radius", "1"});
    EXPECT_EQ(capped.code, 1);
    EXPECT_NE(capped.err.find("exhausted"), std::string::npos);

    EXPECT_EQ(run({"factor", "-m", "lex", "-g", "(-1,0)"}).code, 2);
}

TEST(Cli, Atoms) {
    auto r = run({"atoms", "-m", "lex", "--box", "20"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find(' ')), "atoms={(1,0)}");

    r = run({"atoms", "-m", "slope:sqrt(2)", "--box", "4", "--witnesses"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find(' ')), "atoms={}");
    EXPECT_NE(r.out.find("(1,1) = "), std::string::npos);
}

TEST(Cli, VerifyAndExitCodes) {
    const std::vector<std::string> args{"verify", "--from", "lex", "--to", "slope:sqrt(2)", "--trials", "50", "--seed",
                                        "42"};
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_NE(a.out.find("failures=0"), std::string::npos);
    EXPECT_EQ(a.out, b.out);

    EXPECT_EQ(run({"verify", "--from", "lex", "--to", "lex", "--trials", "0"}).code, 2);
}

TEST(Cli, SeedFromEnvironment) {
    const std::vector<std::string> base{"verify", "--from", "lex", "--to", "slope:sqrt(2)", "--trials", "3"};
    EXPECT_EQ(cli::parse_command(base, "77").seed, 77u);
    std::vector<std::string> explicit_seed = base;
    explicit_seed.insert(explicit_seed.end(), {"--seed", "5"});
    EXPECT_EQ(cli::parse_command(explicit_seed, "77").seed, 5u);
    EXPECT_EQ(run(base, "seven").code, 2);
}

TEST(Cli, ParseErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"member", "-m", "lex"}).code, 2);
    EXPECT_EQ(run({"member", "-m", "slope:sqrt(4)", "-g", "(0,0)"}).code, 2);
    EXPECT_EQ(run({"member", "-m", "slope:1-sqrt(2)", "-g", "(0,0)"}).code, 2);
    EXPECT_EQ(run({"member", "-m", "lex", "-g", "(1,)"}).code, 2);
    EXPECT_EQ(run({"mul", "-X", "{(1,0)}", "-Y", "{(0,0)}"}).code, 2);
    const auto r = run({"member", "-m", "cone", "-g", "(0,0)"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, JsonSchema) {
    const std::vector<std::vector<std::string>> commands{
        {"member", "-m", "lex", "-g", "(1,0)", "--json"},
        {"mul", "-X", "{(0,0),(1,0)}", "-Y", "{(0,0),(0,1)}", "--json"},
        {"normalize", "-m", "slope:sqrt(2)", "-X", "{(0,0),(0,1)}", "--json"},
        {"transport", "--from", "lex", "--to", "slope:sqrt(2)", "-X", "{(0,0),(0,1)}", "--json"},
        {"factor", "-m", "slope:sqrt(2)", "-g", "(2,2)", "--json"},
        {"atoms", "-m", "lex", "--box", "3", "--json"},
        {"--json", "verify", "--from", "lex", "--to", "slope:sqrt(2)", "--trials", "5", "--seed", "1"},
    };
    for (const auto& c : commands) {
        const auto r = run(c);
        ASSERT_EQ(r.code, 0) << r.err;
        const auto doc = nlohmann::json::parse(r.out);
        ASSERT_EQ(doc.size(), 4u) << r.out;
        for (const char* key : {"command", "inputs", "result", "elapsed_ms"})
            ASSERT_TRUE(doc.contains(key)) << key << " in " << r.out;
    }
    const auto t = nlohmann::json::parse(
        run({"transport", "--from", "lex", "--to", "slope:sqrt(2)", "-X", "{(0,0),(0,1)}", "--json"}).out);
    EXPECT_EQ(t["result"]["shift"], nlohmann::json::parse("[0,-1]"));
    EXPECT_EQ(t["result"]["image"], nlohmann::json::parse("[[0,-1],[0,0]]"));
    EXPECT_EQ(subset_from_json(t["result"]["image"]), parse_subset("{(0,-1),(0,0)}"));

    const auto v = nlohmann::json::parse(
        run({"verify", "--from", "lex", "--to", "slope:sqrt(2)", "--trials", "5", "--seed", "1", "--json"}).out);
    EXPECT_EQ(v["result"]["failures"], 0);
    EXPECT_EQ(v["result"]["tallies"]["homomorphism"]["checks"], 5);
    EXPECT_TRUE(v["result"]["failure_records"].empty());
}

TEST(Cli, JsonSetsWithHugeCoordinates) {
    const FinSubset X = FinSubset::from({{0, 0}, {Integer(1) << 80, -3}});
    const auto j = subset_to_json(X);
    EXPECT_TRUE(j[1][0].is_string());
    EXPECT_EQ(subset_from_json(j), X);
    EXPECT_THROW(subset_from_json(nlohmann::json::parse("[[1,2]]")), parse_error);
}

TEST(Cli, CommandRoundTrip) {
    const std::vector<std::vector<std::string>> commands{
        {"member", "-m", " lex ", "-g", "( -1 , 0 )"},
        {"mul", "-X", "{(1,0),(0,0),(1,0)}", "-Y", "{(0,0)}", "--json"},
        {"normalize", "-m", "slope:2/4*sqrt(2)+1", "-X", "{(0,0),(0,1)}", "--algo", "brute"},
        {"transport", "--from", "lex", "--to", "slope:sqrt(3)", "-X", "{(0,0)}"},
        {"factor", "-m", "slope:sqrt(2)", "-g", "(2,2)", "--max-radius", "40"},
        {"atoms", "-m", "lex", "--box", "7", "--witnesses"},
        {"verify", "--from", "lex", "--to", "slope:sqrt(2)", "--trials", "9", "--seed", "3", "--size-bound", "4",
         "--coord-bound", "11"},
    };
    for (const auto& args : commands) {
        const cli::Command c = cli::parse_command(args);
        EXPECT_EQ(cli::parse_command(c.to_args()), c) << args[0];
    }
    EXPECT_EQ(cli::parse_command(commands[2]).monoid, "slope:1+1/2*sqrt(2)");
}
