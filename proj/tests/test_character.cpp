#include <doctest.h>

#include <atomic>
#include <thread>

#include "ochar/character.hpp"
#include "ochar/standard_chars.hpp"
#include "oracles.hpp"

using namespace ochar;

namespace {

std::shared_ptr<const RootSystem> a2() { return RootSystem::make(Type::A2); }

Weight alpha(const RootSystem& rs) { return rs.simple_roots()[0]; }
Weight beta(const RootSystem& rs) { return rs.simple_roots()[1]; }

}  // namespace

TEST_CASE("kostant partition counts against brute enumeration") {
    auto rs = a2();
    const Weight a = alpha(*rs), b = beta(*rs);

    CHECK(kostant(*rs, Weight::zero(2)) == 1);
    CHECK(kostant(*rs, a + b) == 2);            // (1,1,0) and (0,0,1)
    CHECK(kostant(*rs, (a + b) * 2) == 3);      // (2,2,0), (1,1,1), (0,0,2)
    CHECK(kostant(*rs, -a) == 0);
    CHECK(kostant(*rs, Weight{1, 0}) == 0);     // not in the root lattice

    for (Int x = 0; x <= 5; ++x)
        for (Int y = 0; y <= 5; ++y) {
            Weight nu = a * x + b * y;
            CHECK(kostant(*rs, nu) == oracles::brute_kostant(*rs, nu, rs->positive_roots()));
            // closed form for A2: min(x,y)+1
            CHECK(kostant(*rs, nu) == std::min(x, y) + 1);
        }

    // parabolic root set {alpha, alpha+beta}
    std::vector<Weight> proots{a, a + b};
    for (Int x = 0; x <= 4; ++x)
        for (Int y = 0; y <= 4; ++y) {
            Weight nu = a * x + b * y;
            CHECK(kostant(*rs, nu, proots) == oracles::brute_kostant(*rs, nu, proots));
        }
}

TEST_CASE("verma character evaluations") {
    auto rs = a2();
    const Weight zero = Weight::zero(2);
    Character d0 = verma_char(rs, zero);

    CHECK(d0.eval(zero) == 1);  // highest weight line
    CHECK(d0.eval(-alpha(*rs) - beta(*rs)) == 2);
    CHECK(d0.eval(alpha(*rs)) == 0);  // above the ceiling
    CHECK(d0.ceilings() == std::vector<Weight>{zero});

    // ch Nabla = ch Delta
    Character n0 = nabla_char(rs, zero);
    oracles::RandomCharacters gen(rs, 5);
    for (int i = 0; i < 100; ++i) {
        Weight mu = gen.next_weight(4);
        CHECK(n0.eval(mu) == d0.eval(mu));
    }
}

TEST_CASE("tensor unit and worked values") {
    auto rs = a2();
    const Weight zero = Weight::zero(2);
    Character d0 = verma_char(rs, zero);
    Character triv = simple_char(rs, zero);

    // L(0) is the tensor unit, pointwise on a finite region
    Character t = tensor(triv, d0);
    Region reg(-(rs->rho() * 3), zero);
    CHECK(restrict(t, reg) == restrict(d0, reg));

    // Delta(0) (x) Delta(0) at -alpha: pairs (0,-alpha), (-alpha,0)
    Character dd = tensor(d0, d0);
    CHECK(dd.eval(-alpha(*rs)) == 2);
    CHECK(dd.ceilings() == std::vector<Weight>{zero});
}

TEST_CASE("support of L(s) (x) L(s) tops out at st.0") {
    auto rs = a2();
    Weight s0 = rs->dot(rs->simple_reflection(0), Weight::zero(2));
    Character ls = simple_char(rs, s0);
    Character t = tensor(ls, ls);

    Weight st0 = -(alpha(*rs) * 2) - beta(*rs);
    CHECK(t.eval(s0 + s0) == 1);  // -2alpha, the ceiling itself
    CHECK(t.eval(st0) == 2);
    // nothing strictly above the ceiling sum
    CHECK(t.eval(s0 + s0 + beta(*rs)) == 0);
    CHECK(t.ceilings() == std::vector<Weight>{s0 + s0});
    // st.0 heads the block-0 part: the orbit weights above it all vanish
    CHECK(t.eval(Weight::zero(2)) == 0);
    CHECK(t.eval(s0) == 0);
    CHECK(t.eval(-beta(*rs)) == 0);
}

TEST_CASE("star dual is the identity on characters") {
    auto rs = a2();
    oracles::RandomCharacters gen(rs, 99);
    for (int i = 0; i < 10; ++i) {
        Character c = gen.next();
        Character d = star_dual(c);
        for (int k = 0; k < 10; ++k) {
            Weight mu = gen.next_weight(5);
            CHECK(d.eval(mu) == c.eval(mu));
        }
    }
}

TEST_CASE("add, scale and restrict") {
    auto rs = a2();
    const Weight zero = Weight::zero(2);
    const Weight a = alpha(*rs), b = beta(*rs);
    Character d0 = verma_char(rs, zero);

    CHECK_THROWS_AS(scale(d0, -1), NonCharacterError);

    Character z = Character::zero(rs);
    Region reg(-a - b, zero);
    CHECK(restrict(add(d0, z), reg) == restrict(d0, reg));

    // frozen Kostant values on the window [-alpha-beta, 0]
    std::map<Weight, Int> expect{{zero, 1}, {-a, 1}, {-b, 1}, {-a - b, 2}};
    CHECK(restrict(d0, reg) == expect);

    Character two = scale(d0, 2);
    CHECK(two.eval(-a - b) == 4);

    // tensor distributes over add on a finite region
    oracles::RandomCharacters gen(rs, 21);
    Character x = gen.next(), y = gen.next(), m = gen.next();
    Character lhs = tensor(m, add(x, y));
    Character rhs = add(tensor(m, x), tensor(m, y));
    for (int i = 0; i < 40; ++i) {
        Weight mu = gen.next_weight(4);
        CHECK(lhs.eval(mu) == rhs.eval(mu));
    }
}

TEST_CASE("tensor is commutative and associative on finite regions") {
    auto rs = a2();
    oracles::RandomCharacters gen(rs, 31);
    for (int trial = 0; trial < 5; ++trial) {
        Character x = gen.next(), y = gen.next(), z = gen.next();
        Character xy = tensor(x, y), yx = tensor(y, x);
        Character xyz = tensor(tensor(x, y), z), xzy = tensor(x, tensor(y, z));
        for (int i = 0; i < 25; ++i) {
            Weight mu = gen.next_weight(4);
            CHECK(xy.eval(mu) == yx.eval(mu));
            CHECK(xyz.eval(mu) == xzy.eval(mu));
        }
    }
}

TEST_CASE("tensor agrees with the convolution oracle") {
    auto rs = a2();
    oracles::RandomCharacters gen(rs, 41);
    for (int trial = 0; trial < 30; ++trial) {
        Character x = gen.next(), y = gen.next();
        Character t = tensor(x, y);
        Weight mu = gen.next_weight(5);
        CHECK(t.eval(mu) == oracles::brute_tensor_eval(x, y, mu));
    }
}

TEST_CASE("virtual characters surface negative values loudly") {
    auto rs = a2();
    const Weight zero = Weight::zero(2);
    VirtualCharacter v = virtual_sum(
        rs, {{1, verma_char(rs, -alpha(*rs))}, {-1, verma_char(rs, zero)}});
    CHECK(v.eval(-alpha(*rs)) == 0);  // 1 - 1
    CHECK(v.eval(zero) == -1);
    Character c = Character::from_virtual(v);
    CHECK_THROWS_AS(c.eval(zero), NonCharacterError);
}

TEST_CASE("memoized evaluation is stable under concurrent readers") {
    auto rs = a2();
    Character d0 = verma_char(rs, Weight::zero(2));
    Character prod = tensor(d0, d0);
    Region reg(-(rs->rho() * 4), Weight::zero(2));
    std::map<Weight, Int> reference = restrict(prod, reg);

    Character fresh = tensor(d0, d0);
    std::atomic<bool> mismatch{false};
    auto worker = [&] {
        for (const auto& [w, m] : reference)
            if (fresh.eval(w) != m) mismatch = true;
    };
    std::vector<std::thread> threads;
    for (int i = 0; i < 4; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    CHECK(!mismatch);
}
