#pragma once

#include <map>
#include <vector>

#include "ochar/character.hpp"
#include "ochar/region.hpp"
#include "ochar/root_data.hpp"

namespace ochar {

/// A dot orbit of the Weyl group, standing in for a central character block.
/// Orbit entries are relative to the antidominant representative, so each
/// representative is the Bruhat-minimal element of its stabilizer coset.
struct LinkageClass {
    std::vector<RootSystem::OrbitEntry> orbit;
    Weight antidominant_rep;

    static LinkageClass of(const RootSystem& rs, const Weight& lambda);
    bool contains(const Weight& w) const;
    bool regular(const RootSystem& rs) const { return static_cast<int>(orbit.size()) == rs.order(); }
};

/// Composition multiplicities certified over a region.
struct DecompositionResult {
    std::map<Weight, Int> entries;  // multiplicity of L(mu)
    Region region;
};

namespace detail {
enum class TieBreak { LexAsc, LexDesc };
DecompositionResult decompose_with_order(const Character& c, const Weight& floor, TieBreak tb);
}  // namespace detail

/// Greedy decomposition into simple characters: repeatedly take a
/// maximal-height weight with nonzero residual in the window
/// [floor, ceilings], record its multiplicity, subtract that multiple of the
/// simple character. Certified for every weight >= floor. A negative residual
/// throws NegativeResidualError instead of clamping.
DecompositionResult decompose(const Character& c, const Weight& floor);

/// Decompose above the block's antidominant representative and keep the
/// orbit weights; equals the composition multiplicities of the block
/// projection.
DecompositionResult block_project(const Character& c, const LinkageClass& block);

/// Single entry of decompose.
Int comp_mult(const Character& c, const Weight& lambda);

}  // namespace ochar
