#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "twistcoh/textio.hpp"

using namespace twc;
using namespace fx;

namespace {

const char* kDual = R"(# dual numbers
algebra D
field Q
dim 2
basis 1 x
unit 1 0
mul 0 0 : 1 0
mul 0 1 : 0 1
mul 1 0 : 0 1
mul 1 1 : 0 0
end
module k over D
dim 1
action 0 :
1
action 1 :
0
end
)";

}  // namespace

TEST_CASE("builtin workspace round-trips") {
    for (auto [n, d] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {1, 2}}) {
        QExterior qe = lq(n, d);
        Workspace ws = builtin_workspace(qe.q());
        const std::string text = emit_workspace(ws);
        Workspace back = parse_text(text, "roundtrip");
        CHECK(back.algebra_order == ws.algebra_order);
        CHECK(back.module_order == ws.module_order);
        CHECK(back.morphism_order == ws.morphism_order);
        for (const auto& [name, a] : ws.algebras) {
            CHECK(back.algebra(name)->mult == a->mult);
            CHECK(back.algebra(name)->unit == a->unit);
        }
        for (const auto& [name, m] : ws.modules) {
            CHECK(back.module(name).dim == m.dim);
            CHECK(back.module(name).action == m.action);
        }
        for (const auto& [name, f] : ws.morphisms) CHECK(back.morphism(name).matrix == f.matrix);
        CHECK(back.algebra("Lq")->mult == qe.alg->mult);
        CHECK(back.morphism("nu").matrix == qe.nu.matrix);
        CHECK(emit_workspace(back) == text);
    }
}

TEST_CASE("small hand-written file") {
    Workspace ws = parse_text(kDual, "dual.txt");
    CHECK(ws.algebra("D")->dim == 2);
    CHECK(ws.module("k").dim == 1);
    CHECK(ws.algebra_or_only("")->dim == 2);
    CHECK(ws.provenance.at("module k").rfind("dual.txt:", 0) == 0);
}

TEST_CASE("prime fields and fractions") {
    std::string t = kDual;
    t.replace(t.find("field Q"), 7, "field F5");
    // over a prime field the radical is part of the input
    CHECK_THROWS_AS(parse_text(t), ParseError);
    t.replace(t.find("end"), 3, "radical 1\nend");
    CHECK(parse_text(t).algebra("D")->field == Field::prime(5));
    std::string f = kDual;
    f.replace(f.find("unit 1 0"), 8, "unit 2/2 0");
    CHECK_NOTHROW(parse_text(f));
}

TEST_CASE("errors are positioned") {
    // non-associative constants: x*y = 1 in the quantum exterior table
    AlgebraData bad = lq_data(r(2));
    bad.mult[QX][QY] = unit_vec(Q, 4, Q1);
    std::string text = "algebra L\nfield Q\ndim 4\nbasis 1 x y yx\nunit 1 0 0 0\n";
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            text += "mul " + std::to_string(i) + " " + std::to_string(j) + " :";
            for (const auto& c : bad.mult[i][j]) text += " " + c.str();
            text += "\n";
        }
    text += "end\n";
    try {
        parse_text(text);
        FAIL("expected a validation error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == "ValidationError");
        CHECK(e.cause == "NonAssociative");
        CHECK(e.entity == "L");
    }

    const std::string dangling = "module M over Nope\ndim 1\nend\n";
    try {
        parse_text(dangling, "m.txt");
        FAIL("expected a dangling reference");
    } catch (const ParseError& e) {
        CHECK(e.kind() == "DanglingReference");
        CHECK(e.line == 1);
        CHECK(e.col > 0);
        CHECK(e.source == "m.txt");
    }

    std::string syntax = kDual;
    syntax.replace(syntax.find("dim 2"), 5, "dim two");
    try {
        parse_text(syntax);
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == "SyntaxError");
        CHECK(e.line == 4);
        CHECK(e.col == 5);
    }

    // duplicate names within a kind
    Workspace ws = parse_text(kDual);
    CHECK_THROWS_AS(parse_into(ws, kDual), ParseError);
    CHECK_THROWS_AS(ws.module("missing"), Error);
}

TEST_CASE("parser fuzz") {
    const std::string seed_text = emit_workspace(builtin_workspace(r(2))) + kDual;
    const std::string alphabet = " \n:#/-0123456789abcdefxyzQF";
    std::mt19937_64 rng(12345);
    int parsed = 0, rejected = 0;
    for (int iter = 0; iter < 400; ++iter) {
        std::string t = seed_text;
        const int edits = 1 + static_cast<int>(rng() % 6);
        for (int e = 0; e < edits; ++e) {
            const size_t pos = rng() % t.size();
            switch (rng() % 4) {
                case 0: t[pos] = alphabet[rng() % alphabet.size()]; break;
                case 1: t.erase(pos, 1 + rng() % 8); break;
                case 2: t.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
                default: t.insert(pos, t.substr(rng() % t.size(), rng() % 20)); break;
            }
        }
        try {
            parse_text(t, "fuzz");
            ++parsed;
        } catch (const ParseError& e) {
            CHECK(e.line >= 0);
            ++rejected;
        } catch (const std::exception& e) {
            FAIL_CHECK("unexpected exception: " << e.what());
        }
    }
    CHECK(parsed + rejected == 400);
    CHECK(rejected > 0);
}
