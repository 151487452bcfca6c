#pragma once

#include <array>
#include <boost/rational.hpp>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ochar/error.hpp"
#include "ochar/weights.hpp"

namespace ochar {

enum class Type { A1, A1xA1, A2 };

std::string to_string(Type t);
std::optional<Type> type_from_string(std::string_view s);

using Rational = boost::rational<Int>;

class RootSystem;

/// Weyl group element: canonical reduced word, exact integer matrix acting on
/// fundamental-weight coordinates, and length.
struct WeylElem {
    int index = 0;                        // position in the group's element list
    std::vector<int> word;                // canonical reduced word (simple reflection indices)
    int length = 0;
    std::array<std::array<Int, 2>, 2> matrix{};  // rank x rank, row-major

    bool operator==(const WeylElem& o) const { return index == o.index; }
};

/// Parabolic subalgebra data: a subset of the simple roots spans the Levi,
/// the m-roots are the negative roots outside the Levi.
struct ParabolicData {
    std::vector<int> levi;            // sorted simple-root indices
    std::vector<Weight> m_roots;      // R_- minus negative Levi roots
    std::vector<Weight> m_roots_pos;  // the same roots negated
    std::vector<int> levi_weyl;       // element indices of W_S

    bool is_borel() const { return levi.empty(); }
    bool operator==(const ParabolicData& o) const { return levi == o.levi; }
};

class KostantTable;

/// Root system, weight lattice order and Weyl group for the rank <= 2 types.
/// Immutable after construction; all caches are internally synchronized.
class RootSystem : public std::enable_shared_from_this<RootSystem> {
public:
    static std::shared_ptr<const RootSystem> make(Type t);

    Type type() const { return type_; }
    int rank() const { return rank_; }

    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    const Weight& rho() const { return rho_; }

    /// <lambda, alpha_i^vee>
    Int pairing(const Weight& lambda, int i) const { return lambda[i]; }
    /// <alpha_j, alpha_i^vee>
    Int cartan(int i, int j) const { return cartan_[i][j]; }

    // ----- dominance order -------------------------------------------------

    /// Simple-root coordinates of delta, exact rationals.
    std::array<Rational, 2> root_coords(const Weight& delta) const;
    /// Simple-root coordinates if they are integers, otherwise nullopt.
    std::optional<std::array<Int, 2>> root_coords_if_integral(const Weight& delta) const;
    /// delta in N_0 R_+
    bool is_nonneg_root_combo(const Weight& delta) const;
    /// a <= b in the dominance order (b - a a nonnegative integer root combo)
    bool leq(const Weight& a, const Weight& b) const { return is_nonneg_root_combo(b - a); }
    /// Sum of simple-root coordinates.
    Rational height(const Weight& w) const;

    /// Canonical processing order for weights: descending height, then
    /// ascending lexicographic on coordinates.
    bool weight_order_before(const Weight& a, const Weight& b) const;

    // ----- Weyl group -------------------------------------------------------

    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<WeylElem>& weyl() const { return elements_; }
    const WeylElem& identity() const { return elements_[0]; }
    const WeylElem& element(int idx) const { return elements_[static_cast<std::size_t>(idx)]; }
    const WeylElem& simple_reflection(int i) const { return element(simple_idx_[static_cast<std::size_t>(i)]); }
    const WeylElem& longest() const { return element(longest_idx_); }

    int product(int x, int y) const { return product_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
    int inverse(int x) const { return inverse_[static_cast<std::size_t>(x)]; }
    const WeylElem& product(const WeylElem& x, const WeylElem& y) const { return element(product(x.index, y.index)); }

    /// Linear action w(lambda).
    Weight act(const WeylElem& w, const Weight& lambda) const;
    /// Dot action w.lambda = w(lambda + rho) - rho.
    Weight dot(const WeylElem& w, const Weight& lambda) const;

    /// Subword criterion on the canonical reduced word of y.
    bool bruhat_leq(const WeylElem& x, const WeylElem& y) const;

    /// Parse a word over the generator names ("e", "s", "t", "st", ...).
    std::optional<int> element_from_word(std::string_view word) const;
    /// Canonical name of an element ("e" for the identity).
    std::string word_name(const WeylElem& w) const;

    // ----- dot orbits --------------------------------------------------------

    struct OrbitEntry {
        WeylElem rep;  // minimal-length representative modulo the dot stabilizer
        Weight weight;
    };

    /// All distinct w.lambda with minimal-length coset representatives,
    /// sorted by decreasing height (ties: lexicographic ascending).
    std::vector<OrbitEntry> dot_orbit(const Weight& lambda) const;

    /// The antidominant member of the dot orbit of lambda.
    Weight antidominant_in_orbit(const Weight& lambda) const;

    // ----- parabolic data ----------------------------------------------------

    ParabolicData parabolic(std::vector<int> levi_simples) const;
    ParabolicData borel() const { return parabolic({}); }

    /// Kostant table over the given positive roots (cached per root multiset).
    std::shared_ptr<const KostantTable> kostant_table(std::vector<Weight> roots) const;
    std::shared_ptr<const KostantTable> kostant_table_full() const;

private:
    explicit RootSystem(Type t);
    void build_weyl_group();

    Type type_;
    int rank_;
    std::array<std::array<Int, 2>, 2> cartan_{};
    std::array<std::array<Int, 2>, 2> adjugate_{};  // det * inverse of Cartan
    Int det_ = 1;
    std::vector<Weight> simple_roots_;
    std::vector<Weight> positive_roots_;
    Weight rho_;

    std::vector<WeylElem> elements_;
    std::vector<int> simple_idx_;
    int longest_idx_ = 0;
    std::vector<std::vector<int>> product_;
    std::vector<int> inverse_;

    mutable std::mutex table_mutex_;
    mutable std::vector<std::pair<std::vector<Weight>, std::shared_ptr<const KostantTable>>> tables_;
};

// Free-function aliases matching the operation names used throughout.
inline Weight dot_action(const RootSystem& rs, const WeylElem& w, const Weight& lambda) {
    return rs.dot(w, lambda);
}
inline bool bruhat_leq(const RootSystem& rs, const WeylElem& x, const WeylElem& y) {
    return rs.bruhat_leq(x, y);
}
inline std::vector<RootSystem::OrbitEntry> dot_orbit(const RootSystem& rs, const Weight& lambda) {
    return rs.dot_orbit(lambda);
}

}  // namespace ochar
