#include <doctest.h>

#include "ochar/block_decomp.hpp"
#include "ochar/standard_chars.hpp"
#include "oracles.hpp"

using namespace ochar;

namespace {

std::shared_ptr<const RootSystem> a2() { return RootSystem::make(Type::A2); }

Weight dot0(const RootSystem& rs, const char* word) {
    return rs.dot(rs.element(*rs.element_from_word(word)), Weight::zero(rs.rank()));
}

}  // namespace

TEST_CASE("decompose a simple character") {
    auto rs = a2();
    for (const char* word : {"e", "s", "ts", "sts"}) {
        Weight hw = dot0(*rs, word);
        DecompositionResult d = decompose(simple_char(rs, hw), dot0(*rs, "sts"));
        std::map<Weight, Int> expect{{hw, 1}};
        CHECK(d.entries == expect);
    }
}

TEST_CASE("decompose Delta(0): all six orbit weights once") {
    auto rs = a2();
    const Weight zero = Weight::zero(2);
    Weight sts0 = dot0(*rs, "sts");
    Character d0 = verma_char(rs, zero);

    DecompositionResult d = decompose(d0, sts0);
    REQUIRE(d.entries.size() == 6);
    for (const auto& entry : rs->dot_orbit(zero)) {
        REQUIRE(d.entries.count(entry.weight));
        CHECK(d.entries.at(entry.weight) == 1);
    }
    CHECK(d.entries == oracles::inversion_decompose(d0, sts0));
}

TEST_CASE("the reference-table tensor cell: L(s) (x) L(t)") {
    auto rs = a2();
    Weight sts0 = dot0(*rs, "sts");
    Character prod = tensor(simple_char(rs, dot0(*rs, "s")), simple_char(rs, dot0(*rs, "t")));

    LinkageClass block0 = LinkageClass::of(*rs, Weight::zero(2));
    DecompositionResult d = block_project(prod, block0);
    std::map<Weight, Int> expect{{dot0(*rs, "st"), 1}, {dot0(*rs, "ts"), 1}, {sts0, 2}};
    CHECK(d.entries == expect);

    // the full decomposition also contains the singular factor L(-rho)
    DecompositionResult full = decompose(prod, sts0);
    CHECK(full.entries.at(-rs->rho()) == 1);
    CHECK(full.entries.size() == 4);

    CHECK(comp_mult(prod, sts0) == 2);
}

TEST_CASE("block projection drops foreign and empty blocks") {
    auto rs = a2();
    LinkageClass block0 = LinkageClass::of(*rs, Weight::zero(2));

    Character ll = tensor(simple_char(rs, dot0(*rs, "s")), simple_char(rs, dot0(*rs, "s")));
    DecompositionResult d = block_project(ll, block0);
    std::map<Weight, Int> expect{{dot0(*rs, "st"), 1}};
    CHECK(d.entries == expect);

    CHECK(block_project(simple_char(rs, Weight::zero(2)), block0).entries ==
          std::map<Weight, Int>{{Weight::zero(2), 1}});

    Character zero_cell = tensor(simple_char(rs, dot0(*rs, "st")), simple_char(rs, dot0(*rs, "st")));
    CHECK(block_project(zero_cell, block0).entries.empty());
}

TEST_CASE("comp_mult basics") {
    auto rs = a2();
    CHECK(comp_mult(verma_char(rs, Weight::zero(2)), dot0(*rs, "sts")) == 1);
    CHECK(comp_mult(simple_char(rs, dot0(*rs, "s")), Weight::zero(2)) == 0);
}

TEST_CASE("greedy equals unitriangular inversion on random characters") {
    auto rs = a2();
    oracles::RandomCharacters gen(rs, 4242);
    Weight sts0 = dot0(*rs, "sts");
    for (int trial = 0; trial < 25; ++trial) {
        Character c = gen.next();
        DecompositionResult d = decompose(c, sts0);
        CHECK(d.entries == oracles::inversion_decompose(c, sts0));
    }
}

TEST_CASE("greedy order independence under tie-break flip") {
    auto rs = a2();
    oracles::RandomCharacters gen(rs, 1717);
    Weight sts0 = dot0(*rs, "sts");
    for (int trial = 0; trial < 10; ++trial) {
        Character c = gen.next();
        auto asc = detail::decompose_with_order(c, sts0, detail::TieBreak::LexAsc);
        auto desc = detail::decompose_with_order(c, sts0, detail::TieBreak::LexDesc);
        CHECK(asc.entries == desc.entries);
    }
}

TEST_CASE("decomposition is linear") {
    auto rs = a2();
    oracles::RandomCharacters gen(rs, 5151);
    Weight floor = dot0(*rs, "sts") - rs->rho();
    for (int trial = 0; trial < 10; ++trial) {
        Character x = gen.next(), y = gen.next();
        auto dx = decompose(x, floor).entries;
        auto dy = decompose(y, floor).entries;
        auto dsum = decompose(add(x, y), floor).entries;
        std::map<Weight, Int> expect = dx;
        for (const auto& [w, m] : dy) expect[w] += m;
        CHECK(dsum == expect);
    }
}

TEST_CASE("round trip: the decomposition re-evaluates to the character") {
    auto rs = a2();
    oracles::RandomCharacters gen(rs, 6161);
    Weight floor = dot0(*rs, "sts");
    for (int trial = 0; trial < 10; ++trial) {
        Character c = gen.next();
        DecompositionResult d = decompose(c, floor);
        Character rebuilt = Character::zero(rs);
        for (const auto& [w, m] : d.entries) rebuilt = add(rebuilt, scale(simple_char(rs, w), m));
        for (const auto& w : weights_in(*rs, d.region)) CHECK(rebuilt.eval(w) == c.eval(w));
    }
}

TEST_CASE("negative residuals abort") {
    auto rs = a2();
    // Delta(s.0) - L(s.0) - L(st.0) leaves -L(ts.0) + ... : not a character.
    Weight s0 = dot0(*rs, "s");
    VirtualCharacter bad = virtual_sum(
        rs, {{1, verma_char(rs, s0)},
             {-1, simple_char(rs, s0)},
             {-2, simple_char(rs, dot0(*rs, "ts"))}});
    CHECK_THROWS_AS(decompose(Character::from_virtual(bad), dot0(*rs, "sts")),
                    Error);  // NegativeResidual or NonCharacter, both are errors
}

TEST_CASE("decompose certifies nothing below the floor but everything above") {
    auto rs = a2();
    const Weight zero = Weight::zero(2);
    // floor above parts of the support: only the dominant entry is certified
    DecompositionResult d = decompose(verma_char(rs, zero), zero);
    CHECK(d.entries == std::map<Weight, Int>{{zero, 1}});
}

TEST_CASE("linkage classes") {
    auto rs = a2();
    LinkageClass block0 = LinkageClass::of(*rs, dot0(*rs, "ts"));  // any member selects the block
    CHECK(block0.antidominant_rep == dot0(*rs, "sts"));
    CHECK(block0.regular(*rs));
    CHECK(block0.contains(Weight::zero(2)));
    CHECK(!block0.contains(-rs->rho()));

    LinkageClass singular = LinkageClass::of(*rs, -rs->rho());
    CHECK(!singular.regular(*rs));
    CHECK(singular.orbit.size() == 1);
}
