#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ochar/character.hpp"
#include "ochar/region.hpp"
#include "ochar/root_data.hpp"

namespace ochar {

/// One free-generator block: the weight multiset of a single
/// finite-dimensional Levi simple. A single weight for the trivial Levi, an
/// sl2 string for a one-root Levi. Weights are stored top first.
struct GeneratorBlock {
    std::vector<Weight> weights;

    const Weight& highest() const { return weights.front(); }
    bool operator==(const GeneratorBlock&) const = default;
    auto operator<=>(const GeneratorBlock&) const = default;
};

/// A module presented by free-generator weight blocks over the negative
/// (parabolic) nilpotent part. Immutable value; blocks kept in a canonical
/// order. Levi subsets of size >= 2 are rejected (no table entry needs them).
class FreePresentation {
public:
    FreePresentation(std::shared_ptr<const RootSystem> rs, ParabolicData parabolic,
                     std::vector<GeneratorBlock> blocks);

    const std::shared_ptr<const RootSystem>& system() const { return rs_; }
    const ParabolicData& parabolic() const { return parabolic_; }
    const std::vector<GeneratorBlock>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }

    /// All generator weights with multiplicities, blocks flattened.
    std::map<Weight, Int> generator_multiset() const;
    /// Block highest weights with multiplicities.
    std::map<Weight, Int> top_multiset() const;

    bool operator==(const FreePresentation& o) const {
        return parabolic_ == o.parabolic_ && blocks_ == o.blocks_;
    }

    /// Verma module presentation: one generator of weight lambda over the Borel.
    static FreePresentation verma(std::shared_ptr<const RootSystem> rs, const Weight& lambda);
    /// Generalised Verma presentation: the Levi string topped at lambda.
    static FreePresentation parabolic_verma(std::shared_ptr<const RootSystem> rs,
                                            const ParabolicData& p, const Weight& lambda);
    /// Borel presentation from a Verma-flag multiset (projectives etc).
    static FreePresentation from_verma_multiset(std::shared_ptr<const RootSystem> rs,
                                                const std::map<Weight, Int>& flag);

private:
    std::shared_ptr<const RootSystem> rs_;
    ParabolicData parabolic_;
    std::vector<GeneratorBlock> blocks_;
};

/// The weight multiset of the finite-dimensional Levi simple with highest
/// weight top: {top} for the trivial Levi, the string top, top-gamma, ...,
/// top-k*gamma with k = <top, gamma^vee> for a one-root Levi.
GeneratorBlock levi_string(const RootSystem& rs, const ParabolicData& p, const Weight& top);

/// eval(mu) = sum over blocks and generators nu of kostant(nu - mu) over the
/// negated m-roots; ceilings are the maximal generator weights.
Character char_of(const FreePresentation& fp);

/// Keep exactly the blocks all of whose generator weights are <= lambda.
FreePresentation truncate_leq(const FreePresentation& fp, const Weight& lambda);

/// Split a finite generator multiset into Levi-simple blocks, greedily from
/// the top. Throws RegroupError when a remainder is not a union of strings.
std::vector<GeneratorBlock> regroup_levi_blocks(const RootSystem& rs, const ParabolicData& p,
                                                std::map<Weight, Int> multiset);

/// Generators of m (X) fp within the region: mu + nu for mu in Supp m and nu
/// a generator of fp, with multiplicity eval(m, mu) * mult(nu), regrouped
/// into Levi blocks. The full generator set is infinite, so a region is
/// required; it must contain every string it cuts into.
FreePresentation tensor_with_free(const Character& m, const FreePresentation& fp,
                                  const Region& region);

}  // namespace ochar
