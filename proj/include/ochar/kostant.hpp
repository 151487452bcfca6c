#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "ochar/root_data.hpp"
#include "ochar/weights.hpp"

namespace ochar {

/// Partition counts over a fixed multiset of positive roots: count(nu) is the
/// number of ways to write nu as a nonnegative integer combination.
/// Memoized recursion over a fixed root ordering; thread-safe.
class KostantTable {
public:
    KostantTable(std::shared_ptr<const RootSystem> rs, std::vector<Weight> roots);

    Int count(const Weight& nu) const;
    const std::vector<Weight>& roots() const { return roots_; }
    const RootSystem& system() const { return *rs_; }

private:
    Int count_rec(std::size_t idx, const Weight& nu) const;

    std::shared_ptr<const RootSystem> rs_;
    std::vector<Weight> roots_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::size_t, Weight>, Int> memo_;
};

/// Partition count of nu over the full set of positive roots.
Int kostant(const RootSystem& rs, const Weight& nu);
/// Partition count of nu over an explicit root list.
Int kostant(const RootSystem& rs, const Weight& nu, std::span<const Weight> roots);

}  // namespace ochar
