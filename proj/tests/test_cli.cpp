#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tazeta/cli.hpp"

using namespace tazeta;
using namespace tazeta::cli;

namespace {

struct Run {
    int status = -1;
    std::string out, err;
};

template <class F>
Run run(F&& f, Format format = Format::tsv, bool quiet = true) {
    std::ostringstream out, err;
    Context ctx{out, err};
    ctx.format = format;
    ctx.quiet = quiet;
    Run r;
    try {
        r.status = f(ctx);
    } catch (const std::exception& e) {
        r.status = report_error(e, err);
    }
    r.out = out.str();
    r.err = err.str();
    return r;
}

FamilySpec family(const std::string& fam, long u) {
    SourceArgs a;
    a.family = fam;
    a.u = u;
    return resolve_source(a);
}

FamilySpec fusion(const std::string& name) {
    SourceArgs a;
    a.family = "fusion";
    a.name = name;
    return resolve_source(a);
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string temp_file(const std::string& content) {
    std::string path = ::testing::TempDir() + "tazeta_cli_test.json";
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Validate, BuiltinFamilies) {
    auto a = run([](Context& c) { return cmd_validate(family("drt", 1), c); });
    EXPECT_EQ(a.status, ok);
    EXPECT_TRUE(has(a.out, "valid\n"));
    auto b = run([](Context& c) { return cmd_validate(family("conference", 1), c); });
    EXPECT_EQ(b.status, ok);
    EXPECT_TRUE(has(b.out, "n\t5\n"));
}

TEST(Validate, BadInputs) {
    auto broken = run([](Context& c) {
        SourceArgs a;
        a.file = std::string(TAZETA_SAMPLES_DIR) + "/algebras/broken_c3.json";
        return cmd_validate(resolve_source(a), c);
    });
    EXPECT_EQ(broken.status, fail);
    EXPECT_TRUE(has(broken.out, "violation\tassociativity"));

    std::string path = temp_file("{\"rank\": 2,\n \"involution\": [0, 1],\n \"lambda\": [[[1, 0], [0, 1]], [[0, 1], [1, ]]]}");
    auto malformed = run([&](Context& c) {
        SourceArgs a;
        a.file = path;
        return cmd_validate(resolve_source(a), c);
    });
    EXPECT_EQ(malformed.status, input_error);
    EXPECT_TRUE(has(malformed.err, "line 3"));
    std::remove(path.c_str());

    auto square = run([](Context& c) { return cmd_validate(family("conference", 2), c); });
    EXPECT_EQ(square.status, input_error);
    EXPECT_TRUE(has(square.err, "perfect square"));

    auto nothing = run([](Context& c) { return cmd_validate(resolve_source(SourceArgs{}), c); });
    EXPECT_EQ(nothing.status, input_error);
}

TEST(Decompose, BadPrimes) {
    auto drt = run([](Context& c) { return cmd_decompose(family("drt", 1), c); });
    EXPECT_EQ(drt.status, ok);
    EXPECT_TRUE(has(drt.out, "index\t7\n"));
    EXPECT_TRUE(has(drt.out, "bad_primes\t7\n"));
    EXPECT_TRUE(has(run([](Context& c) { return cmd_decompose(fusion("fib"), c); }).out, "bad_primes\tnone\n"));
    EXPECT_TRUE(has(run([](Context& c) { return cmd_decompose(fusion("reps3"), c); }).out, "bad_primes\t2 3\n"));
}

TEST(Count, PrimePowerMode) {
    auto r = run([](Context& c) {
        CountArgs a;
        a.prime = BigInt(7);
        a.kmax = 3;
        return cmd_count(family("drt", 1), a, c);
    });
    EXPECT_EQ(r.status, ok);
    EXPECT_EQ(r.out, "7^0\t1\n7^1\t1\n7^2\t8\n7^3\t15\n");
}

TEST(Count, SeriesMode) {
    auto r = run([](Context& c) {
        CountArgs a;
        a.max_index = 4;
        return cmd_count(fusion("c2"), a, c);
    });
    EXPECT_EQ(r.out, "1\t1\n2\t1\n3\t2\n4\t3\n");

    std::string path = temp_file("{\"rank\": 1, \"involution\": [0], \"lambda\": [[[1]]]}");
    auto one = run([&](Context& c) {
        SourceArgs s;
        s.file = path;
        CountArgs a;
        a.max_index = 6;
        return cmd_count(resolve_source(s), a, c);
    });
    EXPECT_EQ(one.out, "1\t1\n2\t1\n3\t1\n4\t1\n5\t1\n6\t1\n");
    std::remove(path.c_str());
}

TEST(Count, ArgumentErrors) {
    auto r = run([](Context& c) { return cmd_count(fusion("fib"), CountArgs{}, c); });
    EXPECT_EQ(r.status, input_error);
    auto q = run([](Context& c) {
        CountArgs a;
        a.prime = BigInt(4);
        a.kmax = 2;
        return cmd_count(fusion("fib"), a, c);
    });
    EXPECT_EQ(q.status, input_error);
}

TEST(Count, ProgressGoesToDiagnostics) {
    auto r = run(
        [](Context& c) {
            CountArgs a;
            a.max_index = 10;
            return cmd_count(fusion("ising"), a, c);
        },
        Format::tsv, false);
    EXPECT_TRUE(has(r.err, "oracle:"));
    EXPECT_FALSE(has(r.out, "oracle"));
}

TEST(Verify, IsingAndE6) {
    for (auto name : {"ising", "e6"}) {
        auto r = run([&](Context& c) { return cmd_verify(fusion(name), 64, c); });
        EXPECT_EQ(r.status, ok) << r.out;
        EXPECT_TRUE(has(r.out, "prime\t2\t"));
        EXPECT_TRUE(has(r.out, "delta 1 - t + 2t^2\texpected 1 - t + 2t^2\tPASS"));
        EXPECT_TRUE(has(r.out, "global\tN=64\tPASS\n"));
    }
}

TEST(Verify, SmallestTournament) {
    auto r = run([](Context& c) { return cmd_verify(family("drt", 1), 100, c); });
    EXPECT_EQ(r.status, ok) << r.out;
    EXPECT_TRUE(has(r.out, "global\tN=100\tPASS\n"));
}

TEST(Verify, WrongClosedFormFails) {
    // The order-27 closed form attached to the order-3 tournament.
    FamilySpec s = family("drt", 6);
    s.algebra = drt_algebra(0);
    auto r = run([&](Context& c) { return cmd_verify(s, 27, c); });
    EXPECT_EQ(r.status, fail);
    EXPECT_TRUE(has(r.out, "mismatch\t"));
    EXPECT_TRUE(has(r.out, "FAIL\n"));
}

TEST(Zeta, InfersMissingFactors) {
    auto r = run([](Context& c) { return cmd_zeta(fusion("c2"), 8, c); });
    EXPECT_EQ(r.status, ok);
    EXPECT_TRUE(has(r.out, "# factor p=2\t(1 - t + 2t^2) / (1 - 2t + t^2)\n"));
    EXPECT_TRUE(has(r.out, "8\t5\n"));
}

TEST(Genus, CubeCaseReport) {
    auto r = run([](Context& c) {
        GenusArgs a;
        a.m = 1;
        a.symbolic = true;
        return cmd_genus(std::nullopt, a, c);
    });
    EXPECT_EQ(r.status, ok);
    std::istringstream in(r.out);
    std::string line;
    int genera = 0, complements = 0;
    while (std::getline(in, line)) {
        if (line.rfind("M(", 0) == 0) ++genera;
        if (line.rfind("complement\t", 0) == 0) ++complements;
    }
    EXPECT_EQ(genera, 8);
    EXPECT_EQ(complements, 8);
    EXPECT_TRUE(has(r.out, "complement\tM(1,0,1)\t[[p, p^2, p^2], [0, p^3, 0], [0, 0, p^3]]\n"));
    EXPECT_TRUE(has(r.out, "M(0,1,0)\tp^3\tp\t(t^3 - t^4 + pt^5) / (1 - 2t + t^2)\n"));
    EXPECT_TRUE(has(r.out, "total\t(1 - t + pt^2 + (p^2 - p)t^3 + (p^3 - p^2)t^5 + p^3t^6 - p^3t^7 + p^4t^8) / (1 - 2t + t^2)\n"));
}

TEST(Genus, SimpleCaseFromFamily) {
    auto r = run([](Context& c) {
        GenusArgs a;
        a.prime = BigInt(7);
        return cmd_genus(family("drt", 1), a, c);
    });
    EXPECT_EQ(r.status, ok);
    EXPECT_TRUE(has(r.out, "M(0,0,0)\t7\t1\t"));
    EXPECT_TRUE(has(r.out, "M(0,0,1)\t1\t6\t"));
    EXPECT_TRUE(has(r.out, "total\t(1 - t + 7t^2) / (1 - 2t + t^2)\n"));
}

TEST(Genus, UnsupportedCases) {
    auto m2 = run([](Context& c) {
        GenusArgs a;
        a.m = 2;
        a.prime = BigInt(3);
        return cmd_genus(std::nullopt, a, c);
    });
    EXPECT_EQ(m2.status, unsupported);
    EXPECT_TRUE(has(m2.err, "UnsupportedM"));
    auto good = run([](Context& c) {
        GenusArgs a;
        a.prime = BigInt(3);
        return cmd_genus(family("drt", 1), a, c);
    });
    EXPECT_EQ(good.status, unsupported);
    auto fus = run([](Context& c) { return cmd_genus(fusion("fib"), GenusArgs{}, c); });
    EXPECT_EQ(fus.status, input_error);
}

TEST(Output, Deterministic) {
    auto once = [] {
        return run([](Context& c) {
            GenusArgs a;
            a.m = 1;
            a.symbolic = true;
            return cmd_genus(std::nullopt, a, c);
        });
    };
    EXPECT_EQ(once().out, once().out);
    auto v = [] { return run([](Context& c) { return cmd_verify(fusion("reps3"), 32, c); }).out; };
    EXPECT_EQ(v(), v());
}

TEST(Output, JsonLike) {
    auto r = run([](Context& c) { return cmd_decompose(family("drt", 1), c); }, Format::json);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["index"], 7);
    EXPECT_EQ(j["bad_primes"], nlohmann::json::array({7}));
    auto g = run(
        [](Context& c) {
            GenusArgs a;
            a.m = 0;
            a.prime = BigInt(5);
            return cmd_genus(std::nullopt, a, c);
        },
        Format::json);
    auto jg = nlohmann::json::parse(g.out);
    EXPECT_EQ(jg["genera"].size(), 2u);
    EXPECT_EQ(jg["total"], "(1 - t + 5t^2) / (1 - 2t + t^2)");
    auto v = nlohmann::json::parse(run([](Context& c) { return cmd_verify(fusion("c3"), 27, c); }, Format::json).out);
    EXPECT_EQ(v["result"], "PASS");
}
