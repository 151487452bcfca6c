#include "ochar/standard_chars.hpp"

namespace ochar {

Character verma_char(std::shared_ptr<const RootSystem> rs, const Weight& lambda) {
    auto table = rs->kostant_table_full();
    return Character::kostant_shift(std::move(rs), lambda, std::move(table));
}

Character nabla_char(std::shared_ptr<const RootSystem> rs, const Weight& lambda) {
    return star_dual(verma_char(std::move(rs), lambda));
}

bool is_levi_dominant(const RootSystem& rs, const ParabolicData& p, const Weight& lambda) {
    for (int i : p.levi)
        if (rs.pairing(lambda, i) < 0) return false;
    return true;
}

Character parabolic_verma_char(std::shared_ptr<const RootSystem> rs, const ParabolicData& p,
                               const Weight& lambda) {
    if (!is_levi_dominant(*rs, p, lambda))
        throw Error("parabolic Verma: " + to_string(lambda) + " is not Levi-dominant");
    std::vector<std::pair<Int, Character>> terms;
    for (int idx : p.levi_weyl) {
        const WeylElem& w = rs->element(idx);
        Int sign = (w.length % 2 == 0) ? 1 : -1;
        terms.emplace_back(sign, verma_char(rs, rs->dot(w, lambda)));
    }
    return Character::from_virtual(virtual_sum(rs, terms));
}

Character simple_char(std::shared_ptr<const RootSystem> rs, const Weight& lambda) {
    Weight anti = rs->antidominant_in_orbit(lambda);
    auto orbit = rs->dot_orbit(anti);  // reps are minimal modulo the dot stabilizer

    const WeylElem* x = nullptr;
    for (const auto& entry : orbit)
        if (entry.weight == lambda) x = &entry.rep;
    if (!x) throw Error("simple_char: weight not found in its own orbit");

    std::vector<std::pair<Int, Character>> terms;
    for (const auto& entry : orbit) {
        if (!rs->bruhat_leq(entry.rep, *x)) continue;
        Int sign = ((x->length - entry.rep.length) % 2 == 0) ? 1 : -1;
        terms.emplace_back(sign, verma_char(rs, entry.weight));
    }
    return Character::from_virtual(virtual_sum(rs, terms));
}

std::map<Weight, Int> projective_flag(const RootSystem& rs, const Weight& lambda) {
    Weight anti = rs.antidominant_in_orbit(lambda);
    auto orbit = rs.dot_orbit(anti);
    if (static_cast<int>(orbit.size()) != rs.order())
        throw Error("projective_flag: singular weight " + to_string(lambda) +
                    " (projectives outside regular blocks are out of scope)");

    const WeylElem* x = nullptr;
    for (const auto& entry : orbit)
        if (entry.weight == lambda) x = &entry.rep;
    if (!x) throw Error("projective_flag: weight not found in its own orbit");

    // BGG reciprocity with the unit-multiplicity pattern of rank <= 2:
    // (P(x.anti) : Delta(y.anti)) = 1 exactly when x <= y.
    std::map<Weight, Int> flag;
    for (const auto& entry : orbit)
        if (rs.bruhat_leq(*x, entry.rep)) flag[entry.weight] = 1;
    return flag;
}

Character projective_char(std::shared_ptr<const RootSystem> rs, const Weight& lambda) {
    std::vector<std::pair<Int, Character>> terms;
    for (const auto& [w, m] : projective_flag(*rs, lambda)) terms.emplace_back(m, verma_char(rs, w));
    return Character::from_virtual(virtual_sum(rs, terms));
}

}  // namespace ochar
