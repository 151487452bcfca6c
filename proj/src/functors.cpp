#include "ochar/functors.hpp"

#include "ochar/standard_chars.hpp"

namespace ochar {

namespace {

void check_block_zero_flag(const FreePresentation& fp) {
    const RootSystem& rs = *fp.system();
    LinkageClass block0 = LinkageClass::of(rs, Weight::zero(rs.rank()));
    const Weight zero = Weight::zero(rs.rank());
    for (const auto& b : fp.blocks()) {
        if (!block0.contains(b.highest()))
            throw Error("flag block top " + to_string(b.highest()) + " outside the orbit of 0");
        for (const auto& w : b.weights)
            if (!rs.leq(w, zero)) throw Error("flag generator " + to_string(w) + " not <= 0");
    }
}

}  // namespace

FunctorResult FunctorResult::from_g(DecompositionResult d) {
    FunctorResult r;
    r.kind = d.entries.empty() ? Kind::Zero : Kind::SimpleDecomposition;
    r.decomposition = std::move(d);
    return r;
}

FunctorResult FunctorResult::delta_flag(FreePresentation fp) {
    check_block_zero_flag(fp);
    FunctorResult r;
    r.kind = fp.empty() ? Kind::Zero : Kind::DeltaFlag;
    r.flag = std::move(fp);
    return r;
}

FunctorResult FunctorResult::nabla_flag(FreePresentation fp) {
    check_block_zero_flag(fp);
    FunctorResult r;
    r.kind = fp.empty() ? Kind::Zero : Kind::NablaFlag;
    r.flag = std::move(fp);
    return r;
}

DecompositionResult apply_g(const Character& m, const Character& n) {
    const RootSystem& rs = *m.system();
    LinkageClass block0 = LinkageClass::of(rs, Weight::zero(rs.rank()));
    return block_project(tensor(m, n), block0);
}

FreePresentation apply_f(const Character& m, const FreePresentation& n) {
    const auto& rs = n.system();
    const ParabolicData& p = n.parabolic();
    LinkageClass block0 = LinkageClass::of(*rs, Weight::zero(rs->rank()));

    const auto gens = n.generator_multiset();
    auto candidate_mult = [&](const Weight& w) {
        Int s = 0;
        for (const auto& [nu, k] : gens) s += k * m.eval(nu - w);
        return s;
    };

    std::vector<GeneratorBlock> blocks;
    for (const auto& entry : block0.orbit) {
        const Weight& h = entry.weight;
        Int count;
        if (p.is_borel()) {
            count = candidate_mult(h);
        } else {
            int gi = p.levi[0];
            if (rs->pairing(h, gi) < 0) continue;  // h heads no Levi string
            const Weight& gamma = rs->simple_roots()[static_cast<std::size_t>(gi)];
            count = candidate_mult(h) - candidate_mult(h + gamma);
        }
        if (count < 0)
            throw RegroupError("candidate generators do not split into Levi strings at " +
                               to_string(h) + " (is the left input an O^p object?)");
        for (Int i = 0; i < count; ++i) blocks.push_back(levi_string(*rs, p, h));
    }
    return FreePresentation(rs, p, std::move(blocks));
}

FunctorResult apply_h(const Character& m, const FreePresentation& n_as_nabla_flag) {
    return FunctorResult::nabla_flag(apply_f(m, n_as_nabla_flag));
}

bool check_dominance(const Character& m) {
    const auto& rs = m.system();
    const Weight zero = Weight::zero(rs->rank());
    LinkageClass block0 = LinkageClass::of(*rs, zero);

    DecompositionResult g_side = apply_g(verma_char(rs, zero), m);
    DecompositionResult m_side = block_project(m, block0);

    for (const auto& entry : block0.orbit) {
        auto get = [&](const DecompositionResult& d) {
            auto it = d.entries.find(entry.weight);
            return it == d.entries.end() ? Int(0) : it->second;
        };
        if (get(g_side) < get(m_side)) return false;
    }
    return true;
}

}  // namespace ochar
