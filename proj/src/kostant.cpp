#include "ochar/kostant.hpp"

#include <algorithm>

namespace ochar {

KostantTable::KostantTable(std::shared_ptr<const RootSystem> rs, std::vector<Weight> roots)
    : rs_(std::move(rs)), roots_(std::move(roots)) {
    std::sort(roots_.begin(), roots_.end());
}

Int KostantTable::count(const Weight& nu) const {
    // Necessary condition: nu must be a nonnegative integer combination of
    // positive roots. This also bounds the recursion.
    if (!rs_->is_nonneg_root_combo(nu)) return 0;
    return count_rec(roots_.size(), nu);
}

Int KostantTable::count_rec(std::size_t idx, const Weight& nu) const {
    bool zero = true;
    for (int i = 0; i < nu.rank(); ++i)
        if (nu[i] != 0) zero = false;
    if (zero) return 1;
    if (idx == 0) return 0;
    if (!rs_->is_nonneg_root_combo(nu)) return 0;

    const auto key = std::make_pair(idx, nu);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    // p(nu; r_1..r_idx) = p(nu; r_1..r_{idx-1}) + p(nu - r_idx; r_1..r_idx)
    Int v = count_rec(idx - 1, nu) + count_rec(idx, nu - roots_[idx - 1]);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        memo_.emplace(key, v);
    }
    return v;
}

Int kostant(const RootSystem& rs, const Weight& nu) {
    return rs.kostant_table_full()->count(nu);
}

Int kostant(const RootSystem& rs, const Weight& nu, std::span<const Weight> roots) {
    return rs.kostant_table(std::vector<Weight>(roots.begin(), roots.end()))->count(nu);
}

}  // namespace ochar
