#include "ochar/character.hpp"

#include <algorithm>
#include <set>

namespace ochar {

namespace detail {

CharExpr::CharExpr(std::shared_ptr<const RootSystem> rs, std::vector<Weight> ceilings)
    : rs_(std::move(rs)), ceilings_(std::move(ceilings)) {}

Int CharExpr::eval(const Weight& mu) const {
    // Support condition: nothing lives above every ceiling.
    bool under = false;
    for (const auto& c : ceilings_)
        if (rs_->leq(mu, c)) under = true;
    if (!under) return 0;

    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(mu);
        if (it != memo_.end()) return it->second;
    }
    // Computed outside the lock; a concurrent duplicate computes the same
    // value, so the double insert is benign.
    Int v = eval_uncached(mu);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        memo_.emplace(mu, v);
    }
    return v;
}

std::vector<Weight> prune_ceilings(const RootSystem& rs, std::vector<Weight> cs) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    std::vector<Weight> out;
    for (const auto& c : cs) {
        bool dominated = false;
        for (const auto& d : cs)
            if (!(d == c) && rs.leq(c, d)) dominated = true;
        if (!dominated) out.push_back(c);
    }
    return out;
}

namespace {

class FiniteMapExpr final : public CharExpr {
public:
    FiniteMapExpr(std::shared_ptr<const RootSystem> rs, std::map<Weight, Int> entries)
        : CharExpr(rs, [&] {
              std::vector<Weight> cs;
              for (const auto& [w, m] : entries)
                  if (m != 0) cs.push_back(w);
              return prune_ceilings(*rs, std::move(cs));
          }()),
          entries_(std::move(entries)) {}

protected:
    Int eval_uncached(const Weight& mu) const override {
        auto it = entries_.find(mu);
        return it == entries_.end() ? 0 : it->second;
    }

private:
    std::map<Weight, Int> entries_;
};

class KostantShiftExpr final : public CharExpr {
public:
    KostantShiftExpr(std::shared_ptr<const RootSystem> rs, Weight lambda,
                     std::shared_ptr<const KostantTable> table)
        : CharExpr(rs, {lambda}), lambda_(lambda), table_(std::move(table)) {}

protected:
    Int eval_uncached(const Weight& mu) const override { return table_->count(lambda_ - mu); }

private:
    Weight lambda_;
    std::shared_ptr<const KostantTable> table_;
};

class SumExpr final : public CharExpr {
public:
    SumExpr(std::shared_ptr<const RootSystem> rs, std::vector<std::pair<Int, ExprPtr>> terms)
        : CharExpr(rs, [&] {
              std::vector<Weight> cs;
              for (const auto& [k, e] : terms)
                  if (k != 0)
                      for (const auto& c : e->ceilings()) cs.push_back(c);
              return prune_ceilings(*rs, std::move(cs));
          }()),
          terms_(std::move(terms)) {}

protected:
    Int eval_uncached(const Weight& mu) const override {
        Int v = 0;
        for (const auto& [k, e] : terms_) v += k * e->eval(mu);
        return v;
    }

private:
    std::vector<std::pair<Int, ExprPtr>> terms_;
};

class TensorExpr final : public CharExpr {
public:
    TensorExpr(std::shared_ptr<const RootSystem> rs, ExprPtr a, ExprPtr b)
        : CharExpr(rs, [&] {
              std::vector<Weight> cs;
              for (const auto& ca : a->ceilings())
                  for (const auto& cb : b->ceilings()) cs.push_back(ca + cb);
              return prune_ceilings(*rs, std::move(cs));
          }()),
          a_(std::move(a)), b_(std::move(b)) {}

protected:
    Int eval_uncached(const Weight& lambda) const override {
        // Candidate left factors: mu <= ca and lambda - mu <= cb, i.e.
        // mu in [lambda - cb, ca], over all ceiling pairs.
        std::set<Weight> candidates;
        for (const auto& ca : a_->ceilings())
            for (const auto& cb : b_->ceilings())
                for (const auto& mu : weights_between(*rs_, lambda - cb, ca)) candidates.insert(mu);
        Int v = 0;
        for (const auto& mu : candidates) {
            Int am = a_->eval(mu);
            if (am == 0) continue;
            v += am * b_->eval(lambda - mu);
        }
        return v;
    }

private:
    ExprPtr a_, b_;
};

}  // namespace
}  // namespace detail

Int Character::eval(const Weight& mu) const {
    Int v = expr_->eval(mu);
    if (v < 0)
        throw NonCharacterError("character evaluated to " + std::to_string(v) + " at " +
                                to_string(mu));
    return v;
}

Character Character::zero(std::shared_ptr<const RootSystem> rs) {
    return finite(std::move(rs), {});
}

Character Character::finite(std::shared_ptr<const RootSystem> rs, const std::map<Weight, Int>& entries) {
    for (const auto& [w, m] : entries)
        if (m < 0) throw NonCharacterError("finite character with negative entry at " + to_string(w));
    return Character(std::make_shared<detail::FiniteMapExpr>(std::move(rs), entries));
}

Character Character::kostant_shift(std::shared_ptr<const RootSystem> rs, const Weight& lambda,
                                   std::shared_ptr<const KostantTable> table) {
    return Character(std::make_shared<detail::KostantShiftExpr>(std::move(rs), lambda, std::move(table)));
}

Character tensor(const Character& a, const Character& b) {
    return Character(std::make_shared<detail::TensorExpr>(a.system(), a.expr(), b.expr()));
}

Character star_dual(const Character& c) { return c; }

Character add(const Character& a, const Character& b) {
    std::vector<std::pair<Int, detail::ExprPtr>> terms{{1, a.expr()}, {1, b.expr()}};
    return Character(std::make_shared<detail::SumExpr>(a.system(), std::move(terms)));
}

Character scale(const Character& c, Int k) {
    if (k < 0) throw NonCharacterError("scale by negative integer");
    std::vector<std::pair<Int, detail::ExprPtr>> terms{{k, c.expr()}};
    return Character(std::make_shared<detail::SumExpr>(c.system(), std::move(terms)));
}

VirtualCharacter virtual_sum(std::shared_ptr<const RootSystem> rs,
                             const std::vector<std::pair<Int, Character>>& terms) {
    std::vector<std::pair<Int, detail::ExprPtr>> ts;
    ts.reserve(terms.size());
    for (const auto& [k, c] : terms) ts.emplace_back(k, c.expr());
    return VirtualCharacter(std::make_shared<detail::SumExpr>(std::move(rs), std::move(ts)));
}

std::map<Weight, Int> restrict(const Character& c, const Region& region) {
    std::map<Weight, Int> out;
    for (const auto& w : weights_in(*c.system(), region)) {
        Int v = c.eval(w);
        if (v != 0) out[w] = v;
    }
    return out;
}

}  // namespace ochar
