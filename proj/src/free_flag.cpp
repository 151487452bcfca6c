#include "ochar/free_flag.hpp"

#include <algorithm>
#include <set>

namespace ochar {

GeneratorBlock levi_string(const RootSystem& rs, const ParabolicData& p, const Weight& top) {
    GeneratorBlock b;
    if (p.is_borel()) {
        b.weights = {top};
        return b;
    }
    int gi = p.levi[0];
    Int k = rs.pairing(top, gi);
    if (k < 0)
        throw RegroupError("weight " + to_string(top) + " is not a Levi-highest weight");
    const Weight& gamma = rs.simple_roots()[static_cast<std::size_t>(gi)];
    for (Int j = 0; j <= k; ++j) b.weights.push_back(top - gamma * j);
    return b;
}

namespace {

void validate_block(const RootSystem& rs, const ParabolicData& p, const GeneratorBlock& b) {
    if (b.weights.empty()) throw Error("empty generator block");
    if (!(b == levi_string(rs, p, b.weights.front())))
        throw Error("generator block is not the weight multiset of a Levi simple");
}

std::vector<GeneratorBlock> canonicalize(const RootSystem& rs, std::vector<GeneratorBlock> blocks) {
    std::sort(blocks.begin(), blocks.end(), [&](const GeneratorBlock& a, const GeneratorBlock& b) {
        if (a.highest() != b.highest()) return rs.weight_order_before(a.highest(), b.highest());
        return a < b;
    });
    return blocks;
}

}  // namespace

FreePresentation::FreePresentation(std::shared_ptr<const RootSystem> rs, ParabolicData parabolic,
                                   std::vector<GeneratorBlock> blocks)
    : rs_(std::move(rs)), parabolic_(std::move(parabolic)) {
    if (parabolic_.levi.size() > 1)
        throw UnsupportedError("presentations over Levi subsets of size >= 2 are not supported");
    for (const auto& b : blocks) validate_block(*rs_, parabolic_, b);
    blocks_ = canonicalize(*rs_, std::move(blocks));
}

std::map<Weight, Int> FreePresentation::generator_multiset() const {
    std::map<Weight, Int> out;
    for (const auto& b : blocks_)
        for (const auto& w : b.weights) ++out[w];
    return out;
}

std::map<Weight, Int> FreePresentation::top_multiset() const {
    std::map<Weight, Int> out;
    for (const auto& b : blocks_) ++out[b.highest()];
    return out;
}

FreePresentation FreePresentation::verma(std::shared_ptr<const RootSystem> rs, const Weight& lambda) {
    ParabolicData p = rs->borel();
    GeneratorBlock b{{lambda}};
    return FreePresentation(std::move(rs), std::move(p), {std::move(b)});
}

FreePresentation FreePresentation::parabolic_verma(std::shared_ptr<const RootSystem> rs,
                                                   const ParabolicData& p, const Weight& lambda) {
    GeneratorBlock b = levi_string(*rs, p, lambda);
    return FreePresentation(std::move(rs), p, {std::move(b)});
}

FreePresentation FreePresentation::from_verma_multiset(std::shared_ptr<const RootSystem> rs,
                                                       const std::map<Weight, Int>& flag) {
    std::vector<GeneratorBlock> blocks;
    for (const auto& [w, m] : flag)
        for (Int i = 0; i < m; ++i) blocks.push_back(GeneratorBlock{{w}});
    return FreePresentation(std::move(rs), rs->borel(), std::move(blocks));
}

Character char_of(const FreePresentation& fp) {
    const auto& rs = fp.system();
    auto table = rs->kostant_table(fp.parabolic().m_roots_pos);
    std::vector<std::pair<Int, Character>> terms;
    for (const auto& [nu, k] : fp.generator_multiset())
        terms.emplace_back(k, Character::kostant_shift(rs, nu, table));
    return Character::from_virtual(virtual_sum(rs, terms));
}

FreePresentation truncate_leq(const FreePresentation& fp, const Weight& lambda) {
    const RootSystem& rs = *fp.system();
    std::vector<GeneratorBlock> kept;
    for (const auto& b : fp.blocks()) {
        bool all_below = true;
        for (const auto& w : b.weights)
            if (!rs.leq(w, lambda)) all_below = false;
        if (all_below) kept.push_back(b);
    }
    return FreePresentation(fp.system(), fp.parabolic(), std::move(kept));
}

std::vector<GeneratorBlock> regroup_levi_blocks(const RootSystem& rs, const ParabolicData& p,
                                                std::map<Weight, Int> multiset) {
    for (const auto& [w, m] : multiset)
        if (m < 0) throw RegroupError("negative generator multiplicity at " + to_string(w));

    std::vector<GeneratorBlock> blocks;
    if (p.is_borel()) {
        for (const auto& [w, m] : multiset)
            for (Int i = 0; i < m; ++i) blocks.push_back(GeneratorBlock{{w}});
        return blocks;
    }

    // Greedy from the top: the maximal remaining weight must head a string.
    while (true) {
        const Weight* top = nullptr;
        for (const auto& [w, m] : multiset)
            if (m > 0 && (!top || rs.weight_order_before(w, *top))) top = &w;
        if (!top) break;
        GeneratorBlock b = levi_string(rs, p, *top);  // throws if not Levi-dominant
        for (const auto& w : b.weights) {
            auto it = multiset.find(w);
            if (it == multiset.end() || it->second == 0)
                throw RegroupError("string through " + to_string(b.highest()) +
                                   " is missing member " + to_string(w));
            --it->second;
        }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

FreePresentation tensor_with_free(const Character& m, const FreePresentation& fp,
                                  const Region& region) {
    const auto& rs = fp.system();
    std::map<Weight, Int> candidates;
    for (const auto& [nu, k] : fp.generator_multiset()) {
        // mu + nu in region means mu in [floor - nu, c - nu]; ceilings can
        // overlap, so dedupe the mu window before accumulating.
        std::set<Weight> mus;
        for (const auto& c : region.ceilings)
            for (const auto& mu : weights_between(*rs, region.floor - nu, c - nu)) mus.insert(mu);
        for (const auto& mu : mus) {
            Int v = m.eval(mu) * k;
            if (v != 0) candidates[mu + nu] += v;
        }
    }
    return FreePresentation(rs, fp.parabolic(), regroup_levi_blocks(*rs, fp.parabolic(), candidates));
}

}  // namespace ochar
