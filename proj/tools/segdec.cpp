// segdec: decode Bengali numerals onto the 10-segment display, audit the
// bundled tables and expressions, minimize segment functions, compile and
// simulate gate netlists, render glyphs, and size LED resistors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "segdec/segdec.hpp"

using nlohmann::json;
using namespace segdec;

namespace {

enum exit_code : int {
    exit_ok = 0,
    exit_domain = 1,   // bad digit, bad expression, bad electrical spec
    exit_findings = 2, // verification found discrepancies
    exit_usage = 64,
};

bool machine = false;

void emit_record(json const& j) { std::cout << j.dump() << '\n'; }

// Accepts one Western (0-9) or Bengali (U+09E6..U+09EF) digit starting at
// text[i]; advances i past it.
int take_digit(std::string const& text, std::size_t& i)
{
    unsigned char c0 = static_cast<unsigned char>(text[i]);
    if (c0 >= '0' && c0 <= '9') {
        ++i;
        return c0 - '0';
    }
    if (c0 == 0xE0 && i + 2 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0xA7) {
        unsigned char c2 = static_cast<unsigned char>(text[i + 2]);
        if (c2 >= 0xA6 && c2 <= 0xAF) {
            i += 3;
            return c2 - 0xA6;
        }
    }
    throw domain_error("not a digit: " + text.substr(i));
}

int parse_digit(std::string const& text)
{
    if (text.empty())
        throw domain_error("empty digit");
    std::size_t i = 0;
    int d = take_digit(text, i);
    if (i != text.size())
        throw domain_error("expected a single digit: " + text);
    return d;
}

std::vector<int> parse_digit_string(std::string const& text)
{
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size())
        out.push_back(take_digit(text, i));
    if (out.empty())
        throw domain_error("empty digit string");
    return out;
}

// Decimal 0..15 (netlist inputs go beyond the numerals) or one Bengali digit.
int parse_input_value(std::string const& text)
{
    if (!text.empty() && static_cast<unsigned char>(text[0]) >= 0x80)
        return parse_digit(text);
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        static_cast<void>(input4(v)); // range check
        return v;
    } catch (domain_error const&) {
        throw;
    } catch (std::exception const&) {
        throw domain_error("not an input value (0..15): " + text);
    }
}

display_mode parse_mode(std::string const& text)
{
    if (text == "bengali")
        return display_mode::bengali;
    if (text == "english")
        return display_mode::english;
    throw domain_error("unknown mode: " + text + " (expected bengali or english)");
}

segment_id parse_segment(std::string const& text)
{
    if (text.size() != 1)
        throw domain_error("segment must be a single letter a..j");
    return segment_from_label(text[0]);
}

void write_output(std::string const& path, std::string const& content)
{
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw domain_error("cannot open output file: " + path);
    out << content;
}

std::string format_number(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// ---- subcommand bodies -------------------------------------------------

int run_decode(std::string const& digit_text, std::string const& mode_text)
{
    int digit = parse_digit(digit_text);
    display_mode mode = parse_mode(mode_text);
    segment_set set = decode(digit, mode);
    if (machine) {
        json segs = json::array();
        for (segment_id s : all_segments())
            if (set.contains(s))
                segs.push_back(std::string(1, label(s)));
        emit_record({{"digit", digit},
                     {"mode", to_string(mode)},
                     {"segments", segs},
                     {"pattern", set.to_pattern()}});
    } else {
        std::cout << set.to_set_notation() << ' ' << set.to_pattern() << '\n';
    }
    return exit_ok;
}

int run_verify_tables()
{
    auto found = cross_check_tables();
    if (machine) {
        for (auto const& d : found)
            emit_record({{"table", std::string(to_string(d.table))},
                         {"digit", d.digit},
                         {"segment", std::string(1, label(d.segment))},
                         {"expected", d.expected ? 1 : 0},
                         {"found", d.found ? 1 : 0}});
    } else {
        for (auto const& d : found)
            std::cout << d.describe() << '\n';
        std::cout << found.size() << (found.size() == 1 ? " discrepancy" : " discrepancies")
                  << " found\n";
    }
    return found.empty() ? exit_ok : exit_findings;
}

int run_verify_expressions()
{
    truth_table table = bengali_truth_table();
    auto exprs = paper_expressions();
    bool all_equivalent = true;
    for (segment_id s : all_segments()) {
        equivalence_report r = check_equivalence(exprs[ordinal(s)], s, table);
        if (machine) {
            json rec = {{"segment", std::string(1, label(s))},
                        {"status", r.equivalent() ? "equivalent" : "mismatch"}};
            if (!r.equivalent()) {
                json ms = json::array();
                for (auto const& m : r.mismatches)
                    ms.push_back({{"input", m.input.value()},
                                  {"expression", m.expr_value ? 1 : 0},
                                  {"table", m.table_value ? 1 : 0}});
                rec["mismatches"] = ms;
            }
            emit_record(rec);
        } else if (r.equivalent()) {
            std::cout << "segment " << label(s) << ": equivalent\n";
        } else {
            for (auto const& m : r.mismatches)
                std::cout << "segment " << label(s) << ": mismatch at input " << m.input.value()
                          << " (expression " << m.expr_value << ", table " << m.table_value
                          << ")\n";
        }
        all_equivalent = all_equivalent && r.equivalent();
    }
    return all_equivalent ? exit_ok : exit_findings;
}

int run_minimize(std::string const& segment_text, bool no_dontcare)
{
    std::vector<segment_id> targets;
    if (segment_text.empty())
        for (segment_id s : all_segments())
            targets.push_back(s);
    else
        targets.push_back(parse_segment(segment_text));

    for (segment_id s : targets) {
        minimize_spec spec{minterm_mask(s),
                           no_dontcare ? std::uint16_t(0) : decoder_dc_mask};
        sop_expr expr = minimize(spec);
        int literals = 0;
        for (cube c : expr.cubes)
            literals += c.literal_count();
        if (machine)
            emit_record({{"segment", std::string(1, label(s))},
                         {"expression", print_sop(expr)},
                         {"cubes", expr.cubes.size()},
                         {"literals", literals}});
        else
            std::cout << label(s) << " = " << print_sop(expr) << '\n';
    }
    return exit_ok;
}

netlist published_netlist(std::string const& segment_text)
{
    auto exprs = paper_expressions();
    if (!segment_text.empty()) {
        segment_id s = parse_segment(segment_text);
        return compile_sop(exprs[ordinal(s)], std::string(1, label(s)));
    }
    std::vector<std::pair<std::string, sop_expr>> named;
    for (segment_id s : all_segments())
        named.emplace_back(std::string(1, label(s)), exprs[ordinal(s)]);
    return compile_decoder(named);
}

int run_netlist(std::string const& segment_text, std::string const& out_path)
{
    write_output(out_path, emit(published_netlist(segment_text)));
    return exit_ok;
}

int run_simulate(std::string const& file, std::string const& digit_text)
{
    std::string text;
    if (file.empty() || file == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(file, std::ios::binary);
        if (!in)
            throw domain_error("cannot open netlist file: " + file);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    netlist nl = parse_netlist(text);

    std::vector<int> inputs;
    if (digit_text.empty())
        for (int v = 0; v < 16; ++v)
            inputs.push_back(v);
    else
        inputs.push_back(parse_input_value(digit_text));

    for (int v : inputs) {
        auto out = simulate(nl, input4(v));
        if (machine) {
            json outputs = json::object();
            for (auto const& [name, bit] : out)
                outputs[name] = bit ? 1 : 0;
            emit_record({{"input", v}, {"outputs", outputs}});
        } else {
            std::cout << "input " << v << ':';
            for (auto const& [name, bit] : out)
                std::cout << ' ' << name << '=' << (bit ? 1 : 0);
            std::cout << '\n';
        }
    }
    return exit_ok;
}

int run_power(std::string const& mode_text, double supply, double vf, double amps)
{
    display_mode mode = parse_mode(mode_text);
    led_spec spec(supply, vf, amps);
    power_summary t = power_table(mode, spec);
    for (auto const& r : t.digits) {
        if (machine)
            emit_record({{"digit", r.digit},
                         {"lit_count", r.lit_count},
                         {"total_current_a", r.total_current},
                         {"total_led_power_w", r.total_led_power}});
        else
            std::cout << "digit " << r.digit << ": " << r.lit_count << " segments, "
                      << format_number(r.total_current * 1e3) << " mA, "
                      << format_number(r.total_led_power * 1e3) << " mW\n";
    }
    if (machine)
        emit_record({{"min_current_a", t.min_current},
                     {"max_current_a", t.max_current},
                     {"max_min_ratio", t.max_min_ratio}});
    else
        std::cout << "current range " << format_number(t.min_current * 1e3) << ".."
                  << format_number(t.max_current * 1e3) << " mA (ratio "
                  << format_number(t.max_min_ratio) << ")\n";
    return exit_ok;
}

int run_resistor(double supply, double vf, double amps, bool e12)
{
    led_spec spec(supply, vf, amps);
    double exact = resistor_value(spec);
    double shown = e12 ? e12_resistor(exact) : exact;
    if (machine) {
        json rec = {{"ohms", shown}};
        if (e12)
            rec["exact_ohms"] = exact;
        emit_record(rec);
    } else {
        std::cout << format_number(shown) << " ohm\n";
    }
    return exit_ok;
}

int run_render(std::string const& digit_text, std::string const& mode_text, bool svg,
               std::string const& out_path)
{
    display_mode mode = parse_mode(mode_text);
    std::vector<segment_set> patterns;
    for (int d : parse_digit_string(digit_text))
        patterns.push_back(decode(d, mode));

    std::string doc = svg ? render_svg(patterns) : render_text_row(patterns) + "\n";
    write_output(out_path, doc);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"10-segment Bengali numeral display toolkit"};
    app.require_subcommand(1);

    std::string format = "plain";
    app.add_option("--format", format, "output format: plain or machine")
        ->check(CLI::IsMember({"plain", "machine"}));

    std::string digit, mode = "bengali", segment, out_path, netlist_file, input_value;
    double supply = 5.0, vf = 2.0, amps = 0.020;
    bool no_dontcare = false, e12 = false, want_svg = false, want_text = false;

    auto* decode_cmd = app.add_subcommand("decode", "lit segments for one digit");
    decode_cmd->add_option("--digit", digit, "digit 0-9 (Western or Bengali numeral)")
        ->required();
    decode_cmd->add_option("--mode", mode, "bengali or english");

    auto* render_cmd = app.add_subcommand("render", "draw digits as text art or SVG");
    render_cmd->add_option("--digit", digit, "digit string, e.g. 507 or ৫০৭")
        ->required();
    render_cmd->add_option("--mode", mode, "bengali or english");
    auto* svg_flag = render_cmd->add_flag("--svg", want_svg, "emit an SVG document");
    render_cmd->add_flag("--text", want_text, "emit text art (default)")->excludes(svg_flag);
    render_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    auto* verify_tables_cmd =
        app.add_subcommand("verify-tables", "audit the bundled digit tables against the decoder");

    auto* verify_expressions_cmd = app.add_subcommand(
        "verify-expressions", "check the bundled segment expressions against the decoder");

    auto* minimize_cmd = app.add_subcommand("minimize", "re-derive minimal segment expressions");
    minimize_cmd->add_option("--segment", segment, "one segment a..j (default: all)");
    minimize_cmd->add_flag("--no-dontcare", no_dontcare,
                           "treat inputs 10..15 as off instead of don't-care");

    auto* netlist_cmd = app.add_subcommand("netlist", "compile bundled expressions to gates");
    netlist_cmd->add_option("--segment", segment, "one segment a..j (default: full decoder)");
    netlist_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    auto* simulate_cmd = app.add_subcommand("simulate", "evaluate a netlist read from stdin");
    simulate_cmd->add_option("file", netlist_file, "netlist file (default: stdin)");
    simulate_cmd->add_option("--digit", input_value, "input value 0..15 (default: all 16)");

    auto* power_cmd = app.add_subcommand("power", "per-digit current and LED power");
    power_cmd->add_option("--mode", mode, "bengali or english");
    power_cmd->add_option("--supply", supply, "supply voltage");
    power_cmd->add_option("--vf", vf, "LED forward voltage");
    power_cmd->add_option("--if", amps, "LED forward current in amperes");

    auto* resistor_cmd = app.add_subcommand("resistor", "size the series resistor");
    resistor_cmd->add_option("--supply", supply, "supply voltage")->required();
    resistor_cmd->add_option("--vf", vf, "LED forward voltage");
    resistor_cmd->add_option("--if", amps, "LED forward current in amperes");
    resistor_cmd->add_flag("--e12", e12, "round up to the nearest E12 value");

    // Let `--format` (and only parent options) appear after the subcommand.
    for (auto* sub : {decode_cmd, render_cmd, verify_tables_cmd, verify_expressions_cmd,
                      minimize_cmd, netlist_cmd, simulate_cmd, power_cmd, resistor_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e); // help text on stdout, exit 0
    } catch (CLI::ParseError const& e) {
        std::cerr << e.what() << "\nRun with --help for usage.\n";
        return exit_usage;
    }

    machine = format == "machine";

    try {
        if (decode_cmd->parsed())
            return run_decode(digit, mode);
        if (render_cmd->parsed())
            return run_render(digit, mode, want_svg, out_path);
        if (verify_tables_cmd->parsed())
            return run_verify_tables();
        if (verify_expressions_cmd->parsed())
            return run_verify_expressions();
        if (minimize_cmd->parsed())
            return run_minimize(segment, no_dontcare);
        if (netlist_cmd->parsed())
            return run_netlist(segment, out_path);
        if (simulate_cmd->parsed())
            return run_simulate(netlist_file, input_value);
        if (power_cmd->parsed())
            return run_power(mode, supply, vf, amps);
        if (resistor_cmd->parsed())
            return run_resistor(supply, vf, amps, e12);
    } catch (error const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_usage;
}
