#include "oracles.hpp"

#include <algorithm>
#include <set>

#include "ochar/standard_chars.hpp"

namespace ochar::oracles {

namespace {

bool rational_coords_nonneg(const RootSystem& rs, const Weight& w) {
    auto rc = rs.root_coords(w);
    for (int i = 0; i < rs.rank(); ++i)
        if (rc[static_cast<std::size_t>(i)] < Rational(0)) return false;
    return true;
}

Int brute_kostant_rec(const RootSystem& rs, const Weight& remaining,
                      const std::vector<Weight>& roots, std::size_t i) {
    bool zero = true;
    for (int k = 0; k < remaining.rank(); ++k)
        if (remaining[k] != 0) zero = false;
    if (i == roots.size()) return zero ? 1 : 0;

    Int total = 0;
    Weight rest = remaining;
    while (rational_coords_nonneg(rs, rest)) {
        total += brute_kostant_rec(rs, rest, roots, i + 1);
        rest = rest - roots[i];
    }
    return total;
}

void all_reduced_words(const RootSystem& rs, int target, int cur, std::vector<int>& word,
                       std::vector<std::vector<int>>& out) {
    const WeylElem& c = rs.element(cur);
    const WeylElem& t = rs.element(target);
    if (c.length == t.length) {
        if (cur == target) out.push_back(word);
        return;
    }
    for (int i = 0; i < rs.rank(); ++i) {
        int next = rs.product(cur, rs.simple_reflection(i).index);
        if (rs.element(next).length == c.length + 1) {
            word.push_back(i);
            all_reduced_words(rs, target, next, word, out);
            word.pop_back();
        }
    }
}

bool word_has_subword_equal(const RootSystem& rs, const std::vector<int>& word, const WeylElem& x) {
    const int n = static_cast<int>(word.size());
    const int k = x.length;
    if (k > n) return false;
    if (k == 0) return true;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        int prod = 0;
        for (int i = 0; i < k; ++i)
            prod = rs.product(prod, rs.simple_reflection(word[static_cast<std::size_t>(
                                                             pick[static_cast<std::size_t>(i)])])
                                        .index);
        if (prod == x.index) return true;
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return false;
}

}  // namespace

Int brute_kostant(const RootSystem& rs, const Weight& nu, const std::vector<Weight>& roots) {
    if (!rational_coords_nonneg(rs, nu)) return 0;
    return brute_kostant_rec(rs, nu, roots, 0);
}

bool brute_bruhat(const RootSystem& rs, const WeylElem& x, const WeylElem& y) {
    std::vector<std::vector<int>> words;
    std::vector<int> scratch;
    all_reduced_words(rs, y.index, 0, scratch, words);
    for (const auto& w : words)
        if (word_has_subword_equal(rs, w, x)) return true;
    return false;
}

std::map<Weight, Int> inversion_decompose(const Character& c, const Weight& floor) {
    const RootSystem& rs = *c.system();
    std::vector<Weight> window = weights_in(rs, Region(floor, c.ceilings()));

    std::vector<Character> simples;
    simples.reserve(window.size());
    for (const auto& w : window) simples.push_back(simple_char(c.system(), w));

    // Back substitution along the height-descending order: the coefficient
    // matrix eval(L(w_j), w_i) is unitriangular there.
    std::map<Weight, Int> entries;
    std::vector<Int> m(window.size(), 0);
    for (std::size_t i = 0; i < window.size(); ++i) {
        Int rhs = c.eval(window[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (m[j] != 0) rhs -= m[j] * simples[j].eval(window[i]);
        m[i] = rhs;
        if (m[i] != 0) entries[window[i]] = m[i];
    }
    return entries;
}

Int brute_tensor_eval(const Character& a, const Character& b, const Weight& lambda) {
    const RootSystem& rs = *a.system();
    std::map<Weight, Int> amap, bmap;
    for (const auto& ca : a.ceilings())
        for (const auto& cb : b.ceilings()) {
            for (const auto& [w, m] : restrict(a, Region(lambda - cb, ca))) amap[w] = m;
            for (const auto& [w, m] : restrict(b, Region(lambda - ca, cb))) bmap[w] = m;
        }
    Int total = 0;
    for (const auto& [mu, am] : amap)
        for (const auto& [nu, bm] : bmap)
            if (mu + nu == lambda) total += am * bm;
    return total;
}

RandomCharacters::RandomCharacters(std::shared_ptr<const RootSystem> rs, std::uint64_t seed)
    : rs_(std::move(rs)), rng_(seed) {
    const Weight zero = Weight::zero(rs_->rank());
    bool regular = static_cast<int>(rs_->dot_orbit(zero).size()) == rs_->order();
    for (const auto& w : rs_->weyl()) {
        Weight lam = rs_->dot(w, zero);
        pool_.push_back(simple_char(rs_, lam));
        pool_.push_back(verma_char(rs_, lam));
        if (regular) pool_.push_back(projective_char(rs_, lam));
        for (int gi = 0; gi < rs_->rank(); ++gi)
            if (rs_->pairing(lam, gi) >= 0)
                pool_.push_back(parabolic_verma_char(rs_, rs_->parabolic({gi}), lam));
    }
}

Character RandomCharacters::next() {
    std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
    std::uniform_int_distribution<Int> coeff(1, 2);
    std::uniform_int_distribution<int> terms(1, 3);

    Character out = scale(pool_[pick(rng_)], coeff(rng_));
    int extra = terms(rng_) - 1;
    for (int i = 0; i < extra; ++i) out = add(out, scale(pool_[pick(rng_)], coeff(rng_)));
    return out;
}

Weight RandomCharacters::next_weight(Int spread) {
    const Weight zero = Weight::zero(rs_->rank());
    auto orbit = rs_->dot_orbit(zero);
    std::uniform_int_distribution<std::size_t> pick(0, orbit.size() - 1);
    std::uniform_int_distribution<Int> step(-1, spread);
    Weight w = orbit[pick(rng_)].weight;
    for (const auto& a : rs_->simple_roots()) w = w - a * step(rng_);
    return w;
}

}  // namespace ochar::oracles
