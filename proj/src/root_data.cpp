#include "ochar/root_data.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ochar/kostant.hpp"

namespace ochar {

std::string to_string(Type t) {
    switch (t) {
        case Type::A1: return "a1";
        case Type::A1xA1: return "a1a1";
        case Type::A2: return "a2";
    }
    return "?";
}

std::optional<Type> type_from_string(std::string_view s) {
    if (s == "a1") return Type::A1;
    if (s == "a1a1") return Type::A1xA1;
    if (s == "a2") return Type::A2;
    return std::nullopt;
}

RootSystem::RootSystem(Type t) : type_(t) {
    switch (t) {
        case Type::A1:
            rank_ = 1;
            cartan_ = {{{2, 0}, {0, 0}}};
            break;
        case Type::A1xA1:
            rank_ = 2;
            cartan_ = {{{2, 0}, {0, 2}}};
            break;
        case Type::A2:
            rank_ = 2;
            cartan_ = {{{2, -1}, {-1, 2}}};
            break;
    }

    // Simple root alpha_j has fundamental coordinates given by column j of
    // the Cartan matrix.
    for (int j = 0; j < rank_; ++j) {
        Weight a = Weight::zero(rank_);
        for (int i = 0; i < rank_; ++i) a[i] = cartan_[i][j];
        simple_roots_.push_back(a);
    }

    if (rank_ == 1) {
        det_ = cartan_[0][0];
        adjugate_ = {{{1, 0}, {0, 0}}};
    } else {
        det_ = cartan_[0][0] * cartan_[1][1] - cartan_[0][1] * cartan_[1][0];
        adjugate_ = {{{cartan_[1][1], -cartan_[0][1]}, {-cartan_[1][0], cartan_[0][0]}}};
    }

    // Positive roots: the simples, plus the highest root in A2.
    positive_roots_ = simple_roots_;
    if (t == Type::A2) positive_roots_.push_back(simple_roots_[0] + simple_roots_[1]);

    rho_ = Weight::zero(rank_);
    for (int i = 0; i < rank_; ++i) rho_[i] = 1;

    build_weyl_group();
}

std::shared_ptr<const RootSystem> RootSystem::make(Type t) {
    return std::shared_ptr<const RootSystem>(new RootSystem(t));
}

std::array<Rational, 2> RootSystem::root_coords(const Weight& delta) const {
    std::array<Rational, 2> r{Rational(0), Rational(0)};
    for (int i = 0; i < rank_; ++i) {
        Int num = 0;
        for (int j = 0; j < rank_; ++j) num += adjugate_[i][j] * delta[j];
        r[static_cast<std::size_t>(i)] = Rational(num, det_);
    }
    return r;
}

std::optional<std::array<Int, 2>> RootSystem::root_coords_if_integral(const Weight& delta) const {
    std::array<Int, 2> r{0, 0};
    for (int i = 0; i < rank_; ++i) {
        Int num = 0;
        for (int j = 0; j < rank_; ++j) num += adjugate_[i][j] * delta[j];
        if (num % det_ != 0) return std::nullopt;
        r[static_cast<std::size_t>(i)] = num / det_;
    }
    return r;
}

bool RootSystem::is_nonneg_root_combo(const Weight& delta) const {
    auto rc = root_coords_if_integral(delta);
    if (!rc) return false;
    for (int i = 0; i < rank_; ++i)
        if ((*rc)[static_cast<std::size_t>(i)] < 0) return false;
    return true;
}

Rational RootSystem::height(const Weight& w) const {
    auto rc = root_coords(w);
    Rational h(0);
    for (int i = 0; i < rank_; ++i) h += rc[static_cast<std::size_t>(i)];
    return h;
}

bool RootSystem::weight_order_before(const Weight& a, const Weight& b) const {
    Rational ha = height(a), hb = height(b);
    if (ha != hb) return ha > hb;
    return a < b;
}

Weight RootSystem::act(const WeylElem& w, const Weight& lambda) const {
    Weight r = Weight::zero(rank_);
    for (int i = 0; i < rank_; ++i) {
        Int v = 0;
        for (int j = 0; j < rank_; ++j) v += w.matrix[i][j] * lambda[j];
        r[i] = v;
    }
    return r;
}

Weight RootSystem::dot(const WeylElem& w, const Weight& lambda) const {
    return act(w, lambda + rho_) - rho_;
}

void RootSystem::build_weyl_group() {
    auto identity_matrix = [&] {
        std::array<std::array<Int, 2>, 2> m{};
        for (int i = 0; i < rank_; ++i) m[i][i] = 1;
        return m;
    };
    auto reflection_matrix = [&](int i) {
        // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
        auto m = identity_matrix();
        for (int r = 0; r < rank_; ++r) m[r][i] -= simple_roots_[static_cast<std::size_t>(i)][r];
        return m;
    };
    auto mat_mul = [&](const auto& a, const auto& b) {
        std::array<std::array<Int, 2>, 2> m{};
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                for (int k = 0; k < rank_; ++k) m[i][j] += a[i][k] * b[k][j];
        return m;
    };

    std::vector<std::array<std::array<Int, 2>, 2>> gens;
    for (int i = 0; i < rank_; ++i) gens.push_back(reflection_matrix(i));

    std::map<std::array<std::array<Int, 2>, 2>, int> seen;
    WeylElem e;
    e.index = 0;
    e.length = 0;
    e.matrix = identity_matrix();
    elements_.push_back(e);
    seen[e.matrix] = 0;

    // BFS gives shortest words; generator order gives the lexicographically
    // least reduced word as canonical.
    for (std::size_t head = 0; head < elements_.size(); ++head) {
        WeylElem cur = elements_[head];
        for (int i = 0; i < rank_; ++i) {
            auto m = mat_mul(cur.matrix, gens[static_cast<std::size_t>(i)]);
            if (seen.count(m)) continue;
            WeylElem w;
            w.index = static_cast<int>(elements_.size());
            w.word = cur.word;
            w.word.push_back(i);
            w.length = cur.length + 1;
            w.matrix = m;
            seen[m] = w.index;
            elements_.push_back(w);
        }
    }

    simple_idx_.assign(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i) simple_idx_[static_cast<std::size_t>(i)] = seen.at(gens[static_cast<std::size_t>(i)]);

    const int n = order();
    product_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    inverse_.assign(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto m = mat_mul(elements_[static_cast<std::size_t>(x)].matrix, elements_[static_cast<std::size_t>(y)].matrix);
            int idx = seen.at(m);
            product_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = idx;
            if (idx == 0) inverse_[static_cast<std::size_t>(x)] = y;
        }

    longest_idx_ = 0;
    for (const auto& w : elements_)
        if (w.length > elements_[static_cast<std::size_t>(longest_idx_)].length) longest_idx_ = w.index;
}

bool RootSystem::bruhat_leq(const WeylElem& x, const WeylElem& y) const {
    if (x.length > y.length) return false;
    if (x.index == y.index) return true;
    // Enumerate subsequences of y's canonical reduced word with length l(x)
    // and test whether any multiplies to x.
    const auto& w = y.word;
    const int n = static_cast<int>(w.size());
    const int k = x.length;
    std::vector<int> pick(static_cast<std::size_t>(k));
    // iterative choose(n, k)
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    if (k == 0) return true;
    while (true) {
        int prod = 0;
        for (int i = 0; i < k; ++i)
            prod = product(prod, simple_idx_[static_cast<std::size_t>(w[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])])]);
        if (prod == x.index) return true;
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return false;
}

std::optional<int> RootSystem::element_from_word(std::string_view word) const {
    if (word == "e") return 0;
    int cur = 0;
    for (char c : word) {
        int i;
        if (c == 's')
            i = 0;
        else if (c == 't')
            i = 1;
        else
            return std::nullopt;
        if (i >= rank_) return std::nullopt;
        cur = product(cur, simple_idx_[static_cast<std::size_t>(i)]);
    }
    return cur;
}

std::string RootSystem::word_name(const WeylElem& w) const {
    if (w.word.empty()) return "e";
    std::string s;
    for (int i : w.word) s += (i == 0 ? 's' : 't');
    return s;
}

std::vector<RootSystem::OrbitEntry> RootSystem::dot_orbit(const Weight& lambda) const {
    std::map<Weight, int> best;  // weight -> index of minimal-length rep
    for (const auto& w : elements_) {
        Weight mu = dot(w, lambda);
        auto it = best.find(mu);
        if (it == best.end())
            best[mu] = w.index;
        else {
            const WeylElem& old = element(it->second);
            if (w.length < old.length) it->second = w.index;
            // minimal coset representatives are unique, so no tie can occur
        }
    }
    std::vector<OrbitEntry> out;
    out.reserve(best.size());
    for (const auto& [mu, idx] : best) out.push_back({element(idx), mu});
    std::sort(out.begin(), out.end(), [&](const OrbitEntry& a, const OrbitEntry& b) {
        return weight_order_before(a.weight, b.weight);
    });
    return out;
}

Weight RootSystem::antidominant_in_orbit(const Weight& lambda) const {
    for (const auto& w : elements_) {
        Weight mu = dot(w, lambda);
        bool anti = true;
        for (int i = 0; i < rank_; ++i)
            if (pairing(mu + rho_, i) > 0) anti = false;
        if (anti) return mu;
    }
    throw Error("no antidominant representative found; weight not integral?");
}

ParabolicData RootSystem::parabolic(std::vector<int> levi_simples) const {
    std::sort(levi_simples.begin(), levi_simples.end());
    levi_simples.erase(std::unique(levi_simples.begin(), levi_simples.end()), levi_simples.end());
    for (int i : levi_simples)
        if (i < 0 || i >= rank_) throw Error("parabolic: simple root index out of range");

    ParabolicData p;
    p.levi = levi_simples;

    std::set<Weight> levi_pos;
    // Positive roots of the Levi: nonnegative combinations of the chosen
    // simples that are roots. In rank <= 2 these are just the chosen simples,
    // plus their sum when both are chosen in A2.
    for (int i : levi_simples) levi_pos.insert(simple_roots_[static_cast<std::size_t>(i)]);
    if (type_ == Type::A2 && levi_simples.size() == 2)
        levi_pos.insert(simple_roots_[0] + simple_roots_[1]);

    for (const auto& r : positive_roots_) {
        if (!levi_pos.count(r)) {
            p.m_roots.push_back(-r);
            p.m_roots_pos.push_back(r);
        }
    }

    for (const auto& w : elements_) {
        bool in_sub = true;
        for (int i : w.word)
            if (std::find(levi_simples.begin(), levi_simples.end(), i) == levi_simples.end()) in_sub = false;
        if (in_sub) p.levi_weyl.push_back(w.index);
    }
    return p;
}

std::shared_ptr<const KostantTable> RootSystem::kostant_table(std::vector<Weight> roots) const {
    std::sort(roots.begin(), roots.end());
    std::lock_guard<std::mutex> lock(table_mutex_);
    for (const auto& [key, tab] : tables_)
        if (key == roots) return tab;
    auto tab = std::make_shared<KostantTable>(shared_from_this(), roots);
    tables_.emplace_back(roots, tab);
    return tab;
}

std::shared_ptr<const KostantTable> RootSystem::kostant_table_full() const {
    return kostant_table(positive_roots_);
}

}  // namespace ochar
