#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ochar/error.hpp"
#include "ochar/kostant.hpp"
#include "ochar/region.hpp"
#include "ochar/root_data.hpp"
#include "ochar/weights.hpp"

namespace ochar {

namespace detail {

/// Expression node of a lazily evaluated formal character. Nodes are
/// immutable; the memo cache is the only mutable state and is internally
/// synchronized, so two threads evaluating the same node always observe the
/// same value.
class CharExpr {
public:
    virtual ~CharExpr() = default;

    Int eval(const Weight& mu) const;
    const std::vector<Weight>& ceilings() const { return ceilings_; }
    const std::shared_ptr<const RootSystem>& system() const { return rs_; }

protected:
    CharExpr(std::shared_ptr<const RootSystem> rs, std::vector<Weight> ceilings);
    virtual Int eval_uncached(const Weight& mu) const = 0;

    std::shared_ptr<const RootSystem> rs_;
    std::vector<Weight> ceilings_;

private:
    mutable std::mutex mutex_;
    mutable std::unordered_map<Weight, Int, WeightHash> memo_;
};

using ExprPtr = std::shared_ptr<const CharExpr>;

/// Keep only the maximal ceilings (anything dominated is redundant).
std::vector<Weight> prune_ceilings(const RootSystem& rs, std::vector<Weight> cs);

}  // namespace detail

/// Integer-valued formal character: finitely many support ceilings, finite
/// values, but possibly negative ones. Intermediate values of
/// inclusion-exclusion live here.
class VirtualCharacter {
public:
    Int eval(const Weight& mu) const { return expr_->eval(mu); }
    const std::vector<Weight>& ceilings() const { return expr_->ceilings(); }
    const std::shared_ptr<const RootSystem>& system() const { return expr_->system(); }
    const detail::ExprPtr& expr() const { return expr_; }

    explicit VirtualCharacter(detail::ExprPtr expr) : expr_(std::move(expr)) {}

private:
    detail::ExprPtr expr_;
};

/// Formal character of a weight module: every evaluation is a finite
/// nonnegative integer, and the support sits under finitely many ceilings.
/// Built from expression trees (finite map, Kostant shift, sum, tensor);
/// evaluations are memoized. A negative evaluation throws NonCharacterError.
class Character {
public:
    Int eval(const Weight& mu) const;
    const std::vector<Weight>& ceilings() const { return expr_->ceilings(); }
    const std::shared_ptr<const RootSystem>& system() const { return expr_->system(); }
    const detail::ExprPtr& expr() const { return expr_; }

    /// The zero character.
    static Character zero(std::shared_ptr<const RootSystem> rs);
    /// Character with explicitly listed multiplicities (all >= 0).
    static Character finite(std::shared_ptr<const RootSystem> rs, const std::map<Weight, Int>& entries);
    /// eval(mu) = table->count(lambda - mu), single ceiling lambda.
    static Character kostant_shift(std::shared_ptr<const RootSystem> rs, const Weight& lambda,
                                   std::shared_ptr<const KostantTable> table);
    /// Reinterpret a virtual character as genuine; negativity surfaces as
    /// NonCharacterError at evaluation time.
    static Character from_virtual(const VirtualCharacter& v) { return Character(v.expr()); }

    explicit Character(detail::ExprPtr expr) : expr_(std::move(expr)) {}

private:
    detail::ExprPtr expr_;
};

// ----- operations -----------------------------------------------------------

inline Int eval(const Character& c, const Weight& mu) { return c.eval(mu); }

/// Pointwise product rule: eval(tensor(a,b), l) = sum over mu+nu=l of
/// eval(a,mu)*eval(b,nu); the sum is finite by the ceiling conditions.
/// Ceilings of the result are the pairwise sums.
Character tensor(const Character& a, const Character& b);

/// The Chevalley dual preserves weight-space dimensions, so this is the
/// identity on characters; provided so call sites mirror the module-level
/// formulas.
Character star_dual(const Character& c);

Character add(const Character& a, const Character& b);
Character scale(const Character& c, Int k);

/// Integer linear combination of characters.
VirtualCharacter virtual_sum(std::shared_ptr<const RootSystem> rs,
                             const std::vector<std::pair<Int, Character>>& terms);

/// All nonzero multiplicities inside the region.
std::map<Weight, Int> restrict(const Character& c, const Region& region);

}  // namespace ochar
