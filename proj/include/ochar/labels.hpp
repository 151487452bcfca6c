#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ochar/character.hpp"
#include "ochar/free_flag.hpp"
#include "ochar/root_data.hpp"

namespace ochar {

/// Name of a standard module in the principal block, e.g. "L(s)",
/// "Delta(st)", "Nabla(sts)", "P(t)", "DeltaP(beta, s)". The argument word
/// names the Weyl element w; the weight is w.0.
struct StandardLabel {
    enum class Kind { Simple, Verma, Nabla, Projective, ParabolicVerma, ParabolicNabla };

    Kind kind = Kind::Simple;
    int weyl_index = 0;
    std::optional<int> levi;  // simple-root index, parabolic kinds only

    bool operator==(const StandardLabel&) const = default;
};

/// Parse a label; ParseError carries the offending position.
StandardLabel parse_label(const RootSystem& rs, std::string_view text);

/// Canonical ASCII form, e.g. "DeltaP(beta, s)".
std::string format_label(const RootSystem& rs, const StandardLabel& l);
/// Display form, e.g. "Δ^{p_β}(s)".
std::string display_label(const RootSystem& rs, const StandardLabel& l);

Weight label_weight(const RootSystem& rs, const StandardLabel& l);

Character char_of_label(const std::shared_ptr<const RootSystem>& rs, const StandardLabel& l);

/// Flag presentation of the labelled module, when it has one. Simples are
/// probed against Verma and one-root parabolic Verma presentations by
/// decomposing the candidate character.
std::optional<FreePresentation> flag_of_label(const std::shared_ptr<const RootSystem>& rs,
                                              const StandardLabel& l);

/// Orbit name of a weight in the dot orbit of 0 ("e", "s", ...), if any.
std::optional<std::string> orbit_zero_name(const RootSystem& rs, const Weight& w);

/// Character expression: labels combined with '+', '*' (tensor) and integer
/// scalar factors, e.g. "L(s)*L(t)" or "Delta(e)+2*L(s)".
Character parse_char_expr(const std::shared_ptr<const RootSystem>& rs, std::string_view text);

}  // namespace ochar
