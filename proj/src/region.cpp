#include "ochar/region.hpp"

#include <algorithm>
#include <set>

namespace ochar {

std::vector<Weight> weights_between(const RootSystem& rs, const Weight& lo, const Weight& hi) {
    std::vector<Weight> out;
    auto box = rs.root_coords_if_integral(hi - lo);
    if (!box) return out;
    for (int i = 0; i < rs.rank(); ++i)
        if ((*box)[static_cast<std::size_t>(i)] < 0) return out;

    const auto& simple = rs.simple_roots();
    Int nx = (*box)[0];
    Int ny = rs.rank() > 1 ? (*box)[1] : 0;
    for (Int x = 0; x <= nx; ++x)
        for (Int y = 0; y <= ny; ++y) {
            Weight w = hi - simple[0] * x;
            if (rs.rank() > 1) w = w - simple[1] * y;
            out.push_back(w);
        }
    return out;
}

std::vector<Weight> weights_in(const RootSystem& rs, const Region& region) {
    std::set<Weight> seen;
    for (const auto& c : region.ceilings)
        for (const auto& w : weights_between(rs, region.floor, c)) seen.insert(w);
    std::vector<Weight> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        return rs.weight_order_before(a, b);
    });
    return out;
}

bool region_contains(const RootSystem& rs, const Region& region, const Weight& w) {
    if (!rs.leq(region.floor, w)) return false;
    for (const auto& c : region.ceilings)
        if (rs.leq(w, c)) return true;
    return false;
}

}  // namespace ochar
