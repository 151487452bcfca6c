#include "ochar/labels.hpp"

#include <cctype>

#include "ochar/block_decomp.hpp"
#include "ochar/standard_chars.hpp"

namespace ochar {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
    bool take(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!take(c)) throw ParseError(pos, std::string("expected ") + what);
    }
    std::string ident() {
        std::size_t start = pos;
        while (!done() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

int parse_word(const RootSystem& rs, Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    std::string w = cur.ident();
    if (w.empty()) throw ParseError(cur.pos, "expected a Weyl word");
    auto idx = rs.element_from_word(w);
    if (!idx) throw ParseError(start, "unknown Weyl word '" + w + "'");
    return *idx;
}

StandardLabel parse_label_at(const RootSystem& rs, Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    std::string kind = cur.ident();
    StandardLabel l;
    bool parabolic = false;
    if (kind == "L")
        l.kind = StandardLabel::Kind::Simple;
    else if (kind == "Delta")
        l.kind = StandardLabel::Kind::Verma;
    else if (kind == "Nabla")
        l.kind = StandardLabel::Kind::Nabla;
    else if (kind == "P")
        l.kind = StandardLabel::Kind::Projective;
    else if (kind == "DeltaP") {
        l.kind = StandardLabel::Kind::ParabolicVerma;
        parabolic = true;
    } else if (kind == "NablaP") {
        l.kind = StandardLabel::Kind::ParabolicNabla;
        parabolic = true;
    } else
        throw ParseError(start, "unknown label kind '" + kind + "'");

    cur.skip_ws();
    cur.expect('(', "'('");
    if (parabolic) {
        cur.skip_ws();
        std::size_t lp = cur.pos;
        std::string levi = cur.ident();
        if (levi == "alpha")
            l.levi = 0;
        else if (levi == "beta")
            l.levi = 1;
        else
            throw ParseError(lp, "expected Levi root 'alpha' or 'beta'");
        if (*l.levi >= rs.rank()) throw ParseError(lp, "Levi root outside this type");
        cur.skip_ws();
        cur.expect(',', "','");
    }
    l.weyl_index = parse_word(rs, cur);
    cur.skip_ws();
    cur.expect(')', "')'");
    return l;
}

}  // namespace

StandardLabel parse_label(const RootSystem& rs, std::string_view text) {
    Cursor cur{text};
    StandardLabel l = parse_label_at(rs, cur);
    cur.skip_ws();
    if (!cur.done()) throw ParseError(cur.pos, "trailing input after label");
    return l;
}

std::string format_label(const RootSystem& rs, const StandardLabel& l) {
    std::string word = rs.word_name(rs.element(l.weyl_index));
    switch (l.kind) {
        case StandardLabel::Kind::Simple: return "L(" + word + ")";
        case StandardLabel::Kind::Verma: return "Delta(" + word + ")";
        case StandardLabel::Kind::Nabla: return "Nabla(" + word + ")";
        case StandardLabel::Kind::Projective: return "P(" + word + ")";
        case StandardLabel::Kind::ParabolicVerma:
            return "DeltaP(" + std::string(*l.levi == 0 ? "alpha" : "beta") + ", " + word + ")";
        case StandardLabel::Kind::ParabolicNabla:
            return "NablaP(" + std::string(*l.levi == 0 ? "alpha" : "beta") + ", " + word + ")";
    }
    return "?";
}

std::string display_label(const RootSystem& rs, const StandardLabel& l) {
    std::string word = rs.word_name(rs.element(l.weyl_index));
    switch (l.kind) {
        case StandardLabel::Kind::Simple: return "L(" + word + ")";
        case StandardLabel::Kind::Verma: return "Δ(" + word + ")";
        case StandardLabel::Kind::Nabla: return "∇(" + word + ")";
        case StandardLabel::Kind::Projective: return "P(" + word + ")";
        case StandardLabel::Kind::ParabolicVerma:
            return "Δ^{p_" + std::string(*l.levi == 0 ? "α" : "β") + "}(" + word + ")";
        case StandardLabel::Kind::ParabolicNabla:
            return "∇^{p_" + std::string(*l.levi == 0 ? "α" : "β") + "}(" + word + ")";
    }
    return "?";
}

Weight label_weight(const RootSystem& rs, const StandardLabel& l) {
    return rs.dot(rs.element(l.weyl_index), Weight::zero(rs.rank()));
}

Character char_of_label(const std::shared_ptr<const RootSystem>& rs, const StandardLabel& l) {
    Weight w = label_weight(*rs, l);
    switch (l.kind) {
        case StandardLabel::Kind::Simple: return simple_char(rs, w);
        case StandardLabel::Kind::Verma: return verma_char(rs, w);
        case StandardLabel::Kind::Nabla: return nabla_char(rs, w);
        case StandardLabel::Kind::Projective: return projective_char(rs, w);
        case StandardLabel::Kind::ParabolicVerma:
        case StandardLabel::Kind::ParabolicNabla:
            return parabolic_verma_char(rs, rs->parabolic({*l.levi}), w);
    }
    throw Error("unreachable label kind");
}

std::optional<FreePresentation> flag_of_label(const std::shared_ptr<const RootSystem>& rs,
                                              const StandardLabel& l) {
    Weight w = label_weight(*rs, l);
    switch (l.kind) {
        case StandardLabel::Kind::Verma:
        case StandardLabel::Kind::Nabla:
            return FreePresentation::verma(rs, w);
        case StandardLabel::Kind::Projective:
            return FreePresentation::from_verma_multiset(rs, projective_flag(*rs, w));
        case StandardLabel::Kind::ParabolicVerma:
        case StandardLabel::Kind::ParabolicNabla:
            return FreePresentation::parabolic_verma(rs, rs->parabolic({*l.levi}), w);
        case StandardLabel::Kind::Simple: {
            // A simple is flag-presentable when it coincides with a (parabolic)
            // Verma module; probe the candidates by decomposing their characters.
            Weight anti = rs->antidominant_in_orbit(w);
            if (w == anti) return FreePresentation::verma(rs, w);
            for (int gi = 0; gi < rs->rank(); ++gi) {
                if (rs->pairing(w, gi) < 0) continue;
                ParabolicData p = rs->parabolic({gi});
                Character c = parabolic_verma_char(rs, p, w);
                DecompositionResult d = decompose(c, anti);
                std::map<Weight, Int> want{{w, 1}};
                if (d.entries == want) return FreePresentation::parabolic_verma(rs, p, w);
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<std::string> orbit_zero_name(const RootSystem& rs, const Weight& w) {
    for (const auto& entry : rs.dot_orbit(Weight::zero(rs.rank())))
        if (entry.weight == w) return rs.word_name(entry.rep);
    return std::nullopt;
}

namespace {

Character parse_expr(const std::shared_ptr<const RootSystem>& rs, Cursor& cur);

struct Value {
    std::optional<Int> num;
    std::optional<Character> chr;
};

Value parse_factor(const std::shared_ptr<const RootSystem>& rs, Cursor& cur) {
    cur.skip_ws();
    if (cur.take('(')) {
        Character c = parse_expr(rs, cur);
        cur.skip_ws();
        cur.expect(')', "')'");
        return {std::nullopt, c};
    }
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            v = v * 10 + (cur.peek() - '0');
            ++cur.pos;
        }
        return {v, std::nullopt};
    }
    StandardLabel l = parse_label_at(*rs, cur);
    return {std::nullopt, char_of_label(rs, l)};
}

Value mul_values(const Value& a, const Value& b, std::size_t pos) {
    if (a.chr && b.chr) return {std::nullopt, tensor(*a.chr, *b.chr)};
    if (a.num && b.chr) return {std::nullopt, scale(*b.chr, *a.num)};
    if (a.chr && b.num) return {std::nullopt, scale(*a.chr, *b.num)};
    if (a.num && b.num) return {*a.num * *b.num, std::nullopt};
    throw ParseError(pos, "invalid '*' operands");
}

Character parse_expr(const std::shared_ptr<const RootSystem>& rs, Cursor& cur) {
    auto parse_term = [&]() -> Value {
        Value v = parse_factor(rs, cur);
        cur.skip_ws();
        while (cur.peek() == '*') {
            std::size_t pos = cur.pos;
            ++cur.pos;
            Value w = parse_factor(rs, cur);
            v = mul_values(v, w, pos);
            cur.skip_ws();
        }
        return v;
    };

    std::size_t start = cur.pos;
    Value v = parse_term();
    cur.skip_ws();
    while (cur.peek() == '+') {
        std::size_t pos = cur.pos;
        ++cur.pos;
        Value w = parse_term();
        if (!v.chr || !w.chr) throw ParseError(pos, "'+' needs character operands");
        v.chr = add(*v.chr, *w.chr);
        cur.skip_ws();
    }
    if (!v.chr) throw ParseError(start, "expression is a bare scalar");
    return *v.chr;
}

}  // namespace

Character parse_char_expr(const std::shared_ptr<const RootSystem>& rs, std::string_view text) {
    Cursor cur{text};
    Character c = parse_expr(rs, cur);
    cur.skip_ws();
    if (!cur.done()) throw ParseError(cur.pos, "trailing input after expression");
    return c;
}

}  // namespace ochar
