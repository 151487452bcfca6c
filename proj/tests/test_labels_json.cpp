#include <doctest.h>

#include "ochar/json_io.hpp"
#include "ochar/labels.hpp"
#include "ochar/standard_chars.hpp"

using namespace ochar;

namespace {

std::shared_ptr<const RootSystem> a2() { return RootSystem::make(Type::A2); }

Weight dot0(const RootSystem& rs, const char* word) {
    return rs.dot(rs.element(*rs.element_from_word(word)), Weight::zero(rs.rank()));
}

}  // namespace

TEST_CASE("label parsing round trips") {
    auto rs = a2();
    for (const char* text : {"L(e)", "L(s)", "Delta(st)", "Nabla(sts)", "P(t)",
                             "DeltaP(beta, s)", "NablaP(alpha, ts)"}) {
        StandardLabel l = parse_label(*rs, text);
        CHECK(format_label(*rs, l) == text);
    }
    // canonical word: tst collapses to sts
    CHECK(format_label(*rs, parse_label(*rs, "L(tst)")) == "L(sts)");
    // whitespace tolerated
    CHECK(parse_label(*rs, "DeltaP( beta , s )") == parse_label(*rs, "DeltaP(beta,s)"));
}

TEST_CASE("label parse errors carry positions") {
    auto rs = a2();
    CHECK_THROWS_AS(parse_label(*rs, "Q(e)"), ParseError);
    CHECK_THROWS_AS(parse_label(*rs, "L(x)"), ParseError);
    CHECK_THROWS_AS(parse_label(*rs, "L(e"), ParseError);
    CHECK_THROWS_AS(parse_label(*rs, "L(e) junk"), ParseError);
    CHECK_THROWS_AS(parse_label(*rs, "DeltaP(gamma, s)"), ParseError);
    try {
        parse_label(*rs, "L(x)");
    } catch (const ParseError& e) {
        CHECK(e.pos == 2);
    }
}

TEST_CASE("label weights and display forms") {
    auto rs = a2();
    CHECK(label_weight(*rs, parse_label(*rs, "L(s)")) == dot0(*rs, "s"));
    CHECK(display_label(*rs, parse_label(*rs, "Delta(st)")) == "Δ(st)");
    CHECK(display_label(*rs, parse_label(*rs, "DeltaP(beta, s)")) == "Δ^{p_β}(s)");
    CHECK(display_label(*rs, parse_label(*rs, "NablaP(alpha, e)")) == "∇^{p_α}(e)");
}

TEST_CASE("characters and flags of labels") {
    auto rs = a2();
    Region reg(dot0(*rs, "sts") - rs->rho(), Weight::zero(2));

    Character viaLabel = char_of_label(rs, parse_label(*rs, "P(t)"));
    Character direct = projective_char(rs, dot0(*rs, "t"));
    CHECK(restrict(viaLabel, reg) == restrict(direct, reg));

    // flag probing: L(sts) is the antidominant Verma, L(st) the p_beta
    // parabolic Verma, L(s) has no flag presentation
    auto fsts = flag_of_label(rs, parse_label(*rs, "L(sts)"));
    REQUIRE(fsts);
    CHECK(*fsts == FreePresentation::verma(rs, dot0(*rs, "sts")));

    auto fst = flag_of_label(rs, parse_label(*rs, "L(st)"));
    REQUIRE(fst);
    CHECK(fst->parabolic().levi == std::vector<int>{1});

    auto fts = flag_of_label(rs, parse_label(*rs, "L(ts)"));
    REQUIRE(fts);
    CHECK(fts->parabolic().levi == std::vector<int>{0});

    CHECK(!flag_of_label(rs, parse_label(*rs, "L(s)")));
    CHECK(!flag_of_label(rs, parse_label(*rs, "L(e)")));

    // parabolic label whose weight is not Levi-dominant
    CHECK_THROWS_AS(char_of_label(rs, parse_label(*rs, "DeltaP(beta, t)")), Error);
}

TEST_CASE("expression parsing") {
    auto rs = a2();
    Character c1 = parse_char_expr(rs, "L(s)*L(t)");
    Character c2 = tensor(simple_char(rs, dot0(*rs, "s")), simple_char(rs, dot0(*rs, "t")));
    Region reg(dot0(*rs, "sts"), c1.ceilings());
    CHECK(restrict(c1, reg) == restrict(c2, reg));

    Character c3 = parse_char_expr(rs, "Delta(e) + 2*L(s)");
    CHECK(c3.eval(dot0(*rs, "s")) == 1 + 2);

    CHECK_THROWS_AS(parse_char_expr(rs, "3"), ParseError);
    CHECK_THROWS_AS(parse_char_expr(rs, "L(s)+"), ParseError);
    CHECK_THROWS_AS(parse_char_expr(rs, "L(s) L(t)"), ParseError);
}

TEST_CASE("weight JSON") {
    auto rs = a2();
    Weight w{-2, 1};
    CHECK(weight_json(w).dump() == "[-2,1]");
    CHECK(weight_from_json(*rs, ojson::parse("[-2,1]")) == w);
    CHECK_THROWS_AS(weight_from_json(*rs, ojson::parse("[1]")), Error);
    // -alpha has the documented coordinates
    CHECK(weight_json(-rs->simple_roots()[0]).dump() == "[-2,1]");
}

TEST_CASE("character dump schema") {
    auto rs = a2();
    Character d0 = verma_char(rs, Weight::zero(2));
    Region reg(-rs->rho(), Weight::zero(2));
    ojson j = character_dump(d0, reg);
    CHECK(j.dump() ==
          R"({"ceilings":[[0,0]],"region":{"floor":[-1,-1],"ceilings":[[0,0]]},)"
          R"("entries":[[[-2,1],1],[[-1,-1],2],[[0,0],1],[[1,-2],1]]})");
}

TEST_CASE("decomposition JSON uses orbit names") {
    auto rs = a2();
    LinkageClass block0 = LinkageClass::of(*rs, Weight::zero(2));
    Character prod = parse_char_expr(rs, "L(s)*L(t)");
    ojson j = decomposition_json(*rs, block_project(prod, block0));
    CHECK(j.dump() == R"({"block":"W·0","entries":[["st",1],["ts",1],["sts",2]]})");

    // raw coordinates outside the orbit of 0; spanning blocks is "mixed"
    DecompositionResult d = decompose(prod, dot0(*rs, "sts"));
    ojson full = decomposition_json(*rs, d);
    CHECK(full["block"] == "mixed");
    CHECK(full["entries"].size() == 4);
    CHECK(full["entries"][3][0].dump() == "[-1,-1]");  // the singular factor L(-rho)
}

TEST_CASE("flag JSON and display strings") {
    auto rs = a2();
    FreePresentation pt =
        FreePresentation::from_verma_multiset(rs, projective_flag(*rs, dot0(*rs, "t")));
    CHECK(flag_json(*rs, pt).dump() == R"({"parabolic":"none","blocks":[[[0,0]],[[1,-2]]]})");
    CHECK(flag_display(*rs, pt) == "Δ(e)+Δ(t)");

    ParabolicData pb = rs->parabolic({1});
    FreePresentation dps = FreePresentation::parabolic_verma(rs, pb, dot0(*rs, "s"));
    CHECK(flag_json(*rs, dps).dump() == R"({"parabolic":"beta","blocks":[[[-2,1],[-1,-1]]]})");
    CHECK(flag_display(*rs, dps) == "Δ^{p_β}(s)");
    CHECK(flag_display(*rs, dps, true) == "∇^{p_β}(s)");

    FreePresentation empty(rs, rs->borel(), {});
    CHECK(flag_display(*rs, empty) == "0");

    // multiplicity prefix
    std::map<Weight, Int> flag{{Weight::zero(2), 2}, {dot0(*rs, "ts"), 1}};
    FreePresentation fp = FreePresentation::from_verma_multiset(rs, flag);
    CHECK(flag_display(*rs, fp) == "2·Δ(e)+Δ(ts)");
}

TEST_CASE("decomposition display strings") {
    auto rs = a2();
    LinkageClass block0 = LinkageClass::of(*rs, Weight::zero(2));
    Character prod = parse_char_expr(rs, "L(s)*L(t)");
    CHECK(decomposition_display(*rs, block_project(prod, block0)) == "L(st)+L(ts)+2·L(sts)");

    DecompositionResult empty;
    empty.region = Region(Weight::zero(2), Weight::zero(2));
    CHECK(decomposition_display(*rs, empty) == "0");
}
