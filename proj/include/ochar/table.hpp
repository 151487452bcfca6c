#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ochar/functors.hpp"
#include "ochar/json_io.hpp"
#include "ochar/labels.hpp"

namespace ochar {

struct TableSpec {
    enum class Format { Markdown, Json };

    char functor = 'g';  // 'g', 'f' or 'h'
    Type type = Type::A2;
    Format format = Format::Markdown;
    std::vector<StandardLabel> rows;  // default: all simples in table order
    std::vector<StandardLabel> cols;
};

/// Committed reference data: the two multiplication tables and the simple
/// support rules. Loaded from human-readable JSON.
class GoldenCorpus {
public:
    static GoldenCorpus load(const std::string& dir, Type type);

    bool has_tables() const { return has_tables_; }
    bool has_supports() const { return has_supports_; }

    /// Multiplicities of G_{L(row)} L(col) keyed by orbit name.
    const std::map<std::string, Int>& g_cell(const std::string& row, const std::string& col) const;
    /// Module names summing to F_{L(row)} L(col).
    const std::vector<StandardLabel>& f_cell(const std::string& row, const std::string& col) const;

    struct SupportRule {
        std::string rule;   // "point", "cone", "alpha_excess_at_most", "beta_excess_at_most"
        Int bound = 0;
        bool kostant_multiplicities = false;
    };
    const SupportRule& support_rule(const std::string& word) const;

private:
    bool has_tables_ = false;
    bool has_supports_ = false;
    std::map<std::string, std::map<std::string, Int>> g_cells_;
    std::map<std::string, std::vector<StandardLabel>> f_cells_;
    std::map<std::string, SupportRule> supports_;
};

struct RenderedTable {
    std::string markdown;
    ojson json;
};

/// How a rendered cell was obtained.
enum class CellSource { Computed, CertifiedZero, Reference };

/// Compute and render one multiplication table. G cells are always computed.
/// F/H cells are computed where the column has a flag presentation and the
/// row lies in the corresponding parabolic category; remaining cells are
/// certified zero through the G-table when possible and otherwise rendered
/// from the reference corpus with a marker.
RenderedTable mult_table(const std::shared_ptr<const RootSystem>& rs, const TableSpec& spec,
                         const GoldenCorpus* golden);

/// Run a verification suite ("paper-tables"), printing one line per check.
/// Returns the number of mismatches.
int run_verify_suite(const std::shared_ptr<const RootSystem>& rs, const std::string& suite,
                     const GoldenCorpus& golden, std::ostream& out);

}  // namespace ochar
