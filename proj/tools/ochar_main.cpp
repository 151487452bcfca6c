#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "ochar/json_io.hpp"
#include "ochar/standard_chars.hpp"
#include "ochar/table.hpp"

namespace {

using namespace ochar;

std::shared_ptr<const RootSystem> system_for(const std::string& type_name) {
    auto t = type_from_string(type_name);
    if (!t) throw Error("unknown type '" + type_name + "'");
    return RootSystem::make(*t);
}

Weight parse_block_weight(const RootSystem& rs, const std::string& text) {
    if (text == "0") return Weight::zero(rs.rank());
    Weight w = Weight::zero(rs.rank());
    std::size_t pos = 0;
    for (int i = 0; i < rs.rank(); ++i) {
        if (i > 0) {
            if (pos >= text.size() || text[pos] != ',') throw Error("block weight: expected ','");
            ++pos;
        }
        std::size_t used = 0;
        w[i] = std::stoll(text.substr(pos), &used);
        pos += used;
    }
    if (pos != text.size()) throw Error("block weight: trailing input");
    return w;
}

int cmd_char(const std::string& type_name, const std::string& label_text, Int height,
             std::ostream& out) {
    auto rs = system_for(type_name);
    StandardLabel label = parse_label(*rs, label_text);
    Character c = char_of_label(rs, label);

    // Box region below the highest ceiling: height steps of every simple root.
    Weight top = c.ceilings().front();
    for (const auto& w : c.ceilings())
        if (!rs->weight_order_before(top, w) && !(top == w)) top = w;
    Weight floor = top;
    for (const auto& a : rs->simple_roots()) floor = floor - a * height;
    Region region(floor, c.ceilings());

    out << character_dump(c, region).dump(2) << "\n";
    return 0;
}

int cmd_decompose(const std::string& type_name, const std::string& expr_text,
                  const std::string& block_text, std::ostream& out) {
    auto rs = system_for(type_name);
    Character c = parse_char_expr(rs, expr_text);
    Weight block_weight = parse_block_weight(*rs, block_text);
    LinkageClass block = LinkageClass::of(*rs, block_weight);
    DecompositionResult d = block_project(c, block);
    out << decomposition_json(*rs, d).dump(2) << "\n";
    return 0;
}

int cmd_table(const std::string& type_name, const std::string& functor, const std::string& format,
              const std::string& golden_dir, std::ostream& out) {
    auto rs = system_for(type_name);
    TableSpec spec;
    spec.functor = functor[0];
    spec.type = rs->type();
    spec.format = format == "json" ? TableSpec::Format::Json : TableSpec::Format::Markdown;

    GoldenCorpus golden = GoldenCorpus::load(golden_dir, rs->type());
    RenderedTable table = mult_table(rs, spec, &golden);
    if (spec.format == TableSpec::Format::Json)
        out << table.json.dump(2) << "\n";
    else
        out << table.markdown;
    return 0;
}

int cmd_verify(const std::string& type_name, const std::string& suite,
               const std::string& golden_dir, std::ostream& out) {
    auto rs = system_for(type_name);
    GoldenCorpus golden = GoldenCorpus::load(golden_dir, rs->type());
    int failures = run_verify_suite(rs, suite, golden, out);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact character combinatorics for blocks of category O in rank <= 2"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string type_name = "a2";
    std::string golden_dir = OCHAR_DEFAULT_DATA_DIR;
    app.add_option("--type", type_name, "root system type")->check(CLI::IsMember({"a1", "a1a1", "a2"}));
    app.add_option("--golden-dir", golden_dir, "directory with reference tables");

    auto* char_cmd = app.add_subcommand("char", "dump a standard character on a finite region");
    std::string char_label;
    Int region_height = 8;
    char_cmd->add_option("label", char_label, "module label, e.g. L(sts)")->required();
    char_cmd->add_option("--region-height", region_height, "box depth below the highest weight");

    auto* dec_cmd = app.add_subcommand("decompose", "composition multiplicities in one block");
    std::string dec_expr, block_text = "0";
    dec_cmd->add_option("expr", dec_expr, "character expression, e.g. L(s)*L(t)")->required();
    dec_cmd->add_option("--block", block_text, "weight coordinates of the block (default 0)");

    auto* tab_cmd = app.add_subcommand("table", "render a multiplication table");
    std::string functor = "g", format = "md";
    tab_cmd->add_option("--functor", functor, "g, f or h")->check(CLI::IsMember({"g", "f", "h"}));
    tab_cmd->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));

    auto* ver_cmd = app.add_subcommand("verify", "run a verification suite against reference data");
    std::string suite = "paper-tables";
    ver_cmd->add_option("suite", suite, "suite name (paper-tables)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(char_cmd))
            return cmd_char(type_name, char_label, region_height, std::cout);
        if (app.got_subcommand(dec_cmd))
            return cmd_decompose(type_name, dec_expr, block_text, std::cout);
        if (app.got_subcommand(tab_cmd))
            return cmd_table(type_name, functor, format, golden_dir, std::cout);
        if (app.got_subcommand(ver_cmd))
            return cmd_verify(type_name, suite, golden_dir, std::cout);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
