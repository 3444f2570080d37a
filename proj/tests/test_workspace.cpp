#include <doctest.h>

#include "amou/sampling.hpp"
#include "amou/workspace.hpp"

using namespace amou;

TEST_CASE("complex literal formatting round-trips") {
    const Tolerance tol;
    RandomGen rng(3);
    for (int t = 0; t < 200; ++t) {
        const cplx z = rng.cnormal() * cplx(std::pow(10.0, rng.uniform_int(-8, 8)));
        const std::string s = format_complex(z);
        const Workspace ws = parse_workspace("algebra A blocks = [1]\nelement x in A level (1,1) block 1 = [[" + s + "]]");
        const cplx back = ws.elements.at("x").value.block(0)(0, 0);
        CHECK(back.real() == z.real());
        CHECK(back.imag() == z.imag());
    }
}

TEST_CASE("workspace parse and canonical print round-trip") {
    const std::string text = R"(
# fixtures
algebra A blocks = [1,2]
algebra B blocks = [2]
element p in B level (1,1) block 1 = [[1+0i, 0+0i],[0+0i, 0+0i]]
element v in A level (2,1) block 1 = [[0.5-0.25i],[1e-3+2i]]
              block 2 = [[1+0i,0+0i],[0+1i,0+0i],[0+0i,0+0i],[0+0i,2-2i]]
morphism f : A -> B mult = [[0,1]] conj 1 = [[1+0i,0+0i],[0+0i,1+0i]]
)";
    const Workspace ws = parse_workspace(text);
    CHECK(ws.algebras.at("A").block_sizes == std::vector<int>{1, 2});
    CHECK(ws.elements.at("v").value.level_rows() == 2);
    CHECK(ws.elements.at("v").value.block(1).rows() == 4);
    CHECK(ws.morphisms.at("f").spec.unital());

    const std::string printed = print_workspace(ws);
    const Workspace again = parse_workspace(printed);
    CHECK(print_workspace(again) == printed); // bit-exact canonical form
    CHECK(distance(again.elements.at("v").value, ws.elements.at("v").value) == 0.0);
}

TEST_CASE("random workspaces round-trip bit-exactly") {
    RandomGen rng(11);
    for (int t = 0; t < 10; ++t) {
        Workspace ws;
        ws.algebras["A"] = Algebra{{rng.uniform_int(1, 3)}};
        ws.algebras["B"] = Algebra{{rng.uniform_int(1, 2), rng.uniform_int(1, 2)}};
        ws.elements["x"] = WorkspaceElement{
            "A", random_element(rng, ws.algebras["A"], rng.uniform_int(1, 2), rng.uniform_int(1, 2))};
        ws.elements["y"] = WorkspaceElement{"B", random_element(rng, ws.algebras["B"], 1, 1)};
        const std::string printed = print_workspace(ws);
        const Workspace back = parse_workspace(printed);
        CHECK(print_workspace(back) == printed);
        CHECK(distance(back.elements.at("x").value, ws.elements.at("x").value) == 0.0);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_WITH_AS(parse_workspace("algebra A blocks = [0]"),
                         doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_workspace("element p in A level (1,1) block 1 = [[1+0i]]"),
                         doctest::Contains("UnknownName"), Error);
    CHECK_THROWS_WITH_AS(parse_workspace("algebra A blocks = [1]\nelement p in A level (1,1) "
                                         "block 1 = [[1+0i],[0+0i,1+0i]]"),
                         doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_workspace("widget w"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_workspace("algebra A blocks = [1]\nelement p in A level (1,1) "
                                         "block 1 = [[nonsense]]"),
                         doctest::Contains("ParseError"), Error);
    // element blocks must match the declared level
    CHECK_THROWS_WITH_AS(parse_workspace("algebra A blocks = [2]\nelement p in A level (1,1) "
                                         "block 1 = [[1+0i]]"),
                         doctest::Contains("ParseError"), Error);
}

TEST_CASE("morphism validation at parse time") {
    // multiplicities exceeding the target block are rejected
    CHECK_THROWS_WITH_AS(
        parse_workspace("algebra A blocks = [2]\nalgebra B blocks = [1]\n"
                        "morphism f : A -> B mult = [[1]] conj 1 = [[1+0i]]"),
        doctest::Contains("ParseError"), Error);
}
