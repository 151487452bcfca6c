#pragma once

#include <vector>

#include "ochar/root_data.hpp"
#include "ochar/weights.hpp"

namespace ochar {

/// Finite evaluation window: all weights nu with floor <= nu <= c for some
/// ceiling c. Finiteness is automatic in the root lattice.
struct Region {
    Weight floor;
    std::vector<Weight> ceilings;

    Region() = default;
    Region(Weight floor_, std::vector<Weight> ceilings_)
        : floor(std::move(floor_)), ceilings(std::move(ceilings_)) {}
    Region(Weight floor_, Weight ceiling)
        : floor(std::move(floor_)), ceilings{std::move(ceiling)} {}
};

/// All weights in the region, sorted by descending height (ties broken
/// lexicographically ascending). Ceiling/floor pairs that are not
/// root-lattice comparable contribute nothing.
std::vector<Weight> weights_in(const RootSystem& rs, const Region& region);

/// All weights in the interval [lo, hi]; empty unless hi - lo is a
/// nonnegative integer root combination.
std::vector<Weight> weights_between(const RootSystem& rs, const Weight& lo, const Weight& hi);

bool region_contains(const RootSystem& rs, const Region& region, const Weight& w);

}  // namespace ochar
