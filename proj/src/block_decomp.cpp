#include "ochar/block_decomp.hpp"

#include <algorithm>

#include "ochar/standard_chars.hpp"

namespace ochar {

LinkageClass LinkageClass::of(const RootSystem& rs, const Weight& lambda) {
    LinkageClass lc;
    lc.antidominant_rep = rs.antidominant_in_orbit(lambda);
    lc.orbit = rs.dot_orbit(lc.antidominant_rep);
    return lc;
}

bool LinkageClass::contains(const Weight& w) const {
    for (const auto& entry : orbit)
        if (entry.weight == w) return true;
    return false;
}

namespace detail {

DecompositionResult decompose_with_order(const Character& c, const Weight& floor, TieBreak tb) {
    const RootSystem& rs = *c.system();
    Region region(floor, c.ceilings());

    std::vector<Weight> window = weights_in(rs, region);
    if (tb == TieBreak::LexDesc) {
        std::stable_sort(window.begin(), window.end(), [&](const Weight& a, const Weight& b) {
            Rational ha = rs.height(a), hb = rs.height(b);
            if (ha != hb) return ha > hb;
            return b < a;
        });
    }

    std::map<Weight, Int> residual;
    for (const auto& w : window) residual[w] = c.eval(w);

    DecompositionResult out;
    out.region = region;
    std::map<Weight, Character> simple_cache;

    for (const auto& w : window) {
        Int m = residual[w];
        if (m == 0) continue;
        if (m < 0)
            throw NegativeResidualError("negative residual " + std::to_string(m) + " at " +
                                        to_string(w) + "; input is not a character");
        out.entries[w] = m;
        auto it = simple_cache.find(w);
        if (it == simple_cache.end())
            it = simple_cache.emplace(w, simple_char(c.system(), w)).first;
        const Character& simple = it->second;
        for (const auto& v : window)
            if (rs.leq(v, w)) residual[v] -= m * simple.eval(v);
    }
    return out;
}

}  // namespace detail

DecompositionResult decompose(const Character& c, const Weight& floor) {
    return detail::decompose_with_order(c, floor, detail::TieBreak::LexAsc);
}

DecompositionResult block_project(const Character& c, const LinkageClass& block) {
    DecompositionResult full = decompose(c, block.antidominant_rep);
    DecompositionResult out;
    out.region = full.region;
    for (const auto& [w, m] : full.entries)
        if (block.contains(w)) out.entries[w] = m;
    return out;
}

Int comp_mult(const Character& c, const Weight& lambda) {
    DecompositionResult d = decompose(c, lambda);
    auto it = d.entries.find(lambda);
    return it == d.entries.end() ? 0 : it->second;
}

}  // namespace ochar
