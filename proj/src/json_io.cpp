#include "ochar/json_io.hpp"

#include <algorithm>
#include <optional>

#include "ochar/labels.hpp"

namespace ochar {

ojson weight_json(const Weight& w) {
    ojson j = ojson::array();
    for (int i = 0; i < w.rank(); ++i) j.push_back(w[i]);
    return j;
}

Weight weight_from_json(const RootSystem& rs, const ojson& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != rs.rank())
        throw Error("weight JSON must be an array of " + std::to_string(rs.rank()) + " integers");
    Weight w = Weight::zero(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) w[i] = j[static_cast<std::size_t>(i)].get<Int>();
    return w;
}

ojson character_dump(const Character& c, const Region& region) {
    ojson j;
    j["ceilings"] = ojson::array();
    for (const auto& w : c.ceilings()) j["ceilings"].push_back(weight_json(w));
    j["region"]["floor"] = weight_json(region.floor);
    j["region"]["ceilings"] = ojson::array();
    for (const auto& w : region.ceilings) j["region"]["ceilings"].push_back(weight_json(w));
    j["entries"] = ojson::array();
    for (const auto& [w, m] : restrict(c, region))  // std::map: lexicographic order
        j["entries"].push_back(ojson::array({weight_json(w), m}));
    return j;
}

namespace {

/// Orbit-of-0 weights in table order (e, s, t, st, ts, sts), then everything
/// else in the canonical weight order.
std::vector<std::pair<Weight, Int>> ordered_entries(const RootSystem& rs,
                                                    const std::map<Weight, Int>& entries) {
    std::vector<std::pair<Weight, Int>> named, rest;
    for (const auto& w : rs.weyl()) {
        Weight mu = rs.dot(w, Weight::zero(rs.rank()));
        auto it = entries.find(mu);
        if (it != entries.end() && it->second != 0) named.push_back(*it);
    }
    for (const auto& [w, m] : entries) {
        if (m == 0) continue;
        if (!orbit_zero_name(rs, w)) rest.push_back({w, m});
    }
    std::sort(rest.begin(), rest.end(), [&](const auto& a, const auto& b) {
        return rs.weight_order_before(a.first, b.first);
    });
    named.insert(named.end(), rest.begin(), rest.end());
    return named;
}

}  // namespace

ojson decomposition_json(const RootSystem& rs, const DecompositionResult& d) {
    ojson j;
    Weight zero = Weight::zero(rs.rank());
    Weight anti0 = rs.antidominant_in_orbit(zero);
    // Name the block after its antidominant representative when the entries
    // lie in a single dot orbit; a raw decomposition can span several.
    std::optional<Weight> anti;
    bool single_block = true;
    for (const auto& [w, m] : d.entries) {
        Weight a = rs.antidominant_in_orbit(w);
        if (anti && !(*anti == a)) single_block = false;
        anti = a;
    }
    if (!anti) anti = rs.antidominant_in_orbit(d.region.floor);
    if (!single_block)
        j["block"] = "mixed";
    else
        j["block"] = *anti == anti0 ? std::string("W·0") : ("W·" + to_string(*anti));
    j["entries"] = ojson::array();
    for (const auto& [w, m] : ordered_entries(rs, d.entries)) {
        auto name = orbit_zero_name(rs, w);
        if (name)
            j["entries"].push_back(ojson::array({*name, m}));
        else
            j["entries"].push_back(ojson::array({weight_json(w), m}));
    }
    return j;
}

ojson flag_json(const RootSystem&, const FreePresentation& fp) {
    ojson j;
    const auto& levi = fp.parabolic().levi;
    if (levi.empty())
        j["parabolic"] = "none";
    else
        j["parabolic"] = levi[0] == 0 ? "alpha" : "beta";
    j["blocks"] = ojson::array();
    for (const auto& b : fp.blocks()) {
        ojson blk = ojson::array();
        for (const auto& w : b.weights) blk.push_back(weight_json(w));
        j["blocks"].push_back(blk);
    }
    return j;
}

namespace {

std::string weight_name(const RootSystem& rs, const Weight& w) {
    auto name = orbit_zero_name(rs, w);
    return name ? *name : to_string(w);
}

std::string joined_terms(const std::vector<std::pair<std::string, Int>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [name, m] : terms) {
        if (!out.empty()) out += "+";
        if (m != 1) out += std::to_string(m) + "·";
        out += name;
    }
    return out;
}

}  // namespace

std::string decomposition_display(const RootSystem& rs, const DecompositionResult& d) {
    std::vector<std::pair<std::string, Int>> terms;
    for (const auto& [w, m] : ordered_entries(rs, d.entries))
        terms.push_back({"L(" + weight_name(rs, w) + ")", m});
    return joined_terms(terms);
}

std::string flag_display(const RootSystem& rs, const FreePresentation& fp, bool nabla) {
    std::string sym = nabla ? "∇" : "Δ";
    std::string super;
    if (!fp.parabolic().levi.empty())
        super = std::string("^{p_") + (fp.parabolic().levi[0] == 0 ? "α" : "β") + "}";

    std::map<Weight, Int> tops = fp.top_multiset();
    std::vector<std::pair<std::string, Int>> terms;
    for (const auto& [w, m] : ordered_entries(rs, tops))
        terms.push_back({sym + super + "(" + weight_name(rs, w) + ")", m});
    return joined_terms(terms);
}

}  // namespace ochar
