#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "segdec/errors.hpp"
#include "segdec/sop.hpp"

namespace segdec {

inline constexpr std::string_view netlist_header = "segdec-netlist v1";

enum class gate_kind : std::uint8_t { inv, and2, and3, or2, or3 };

inline constexpr std::array<gate_kind, 5> all_gate_kinds = {
    gate_kind::inv, gate_kind::and2, gate_kind::and3, gate_kind::or2, gate_kind::or3};

constexpr std::string_view to_string(gate_kind k)
{
    switch (k) {
    case gate_kind::inv: return "INV";
    case gate_kind::and2: return "AND2";
    case gate_kind::and3: return "AND3";
    case gate_kind::or2: return "OR2";
    case gate_kind::or3: return "OR3";
    }
    return "?";
}

constexpr int arity(gate_kind k)
{
    switch (k) {
    case gate_kind::inv: return 1;
    case gate_kind::and2:
    case gate_kind::or2: return 2;
    case gate_kind::and3:
    case gate_kind::or3: return 3;
    }
    return 0;
}

struct gate {
    std::string output;
    gate_kind kind;
    std::vector<std::string> inputs;

    bool operator==(gate const&) const = default;
};

/// Acyclic gate network over the four primary inputs w,x,y,z. Gates are
/// stored in topological order; outputs are (name, net) pairs sorted by
/// name.
struct netlist {
    static constexpr std::array<std::string_view, 4> input_names = {"w", "x", "y", "z"};

    std::vector<gate> gates;
    std::vector<std::pair<std::string, std::string>> outputs;

    bool operator==(netlist const&) const = default;
};

/// Gate census of a netlist.
struct gate_stats {
    std::array<int, 5> by_kind{};
    int total = 0;

    constexpr int operator[](gate_kind k) const { return by_kind[static_cast<int>(k)]; }
    constexpr bool operator==(gate_stats const&) const = default;
};

inline gate_stats stats(netlist const& nl)
{
    gate_stats s;
    for (gate const& g : nl.gates) {
        ++s.by_kind[static_cast<int>(g.kind)];
        ++s.total;
    }
    return s;
}

namespace detail {

// Builds a netlist from SOP expressions. Inverters are created once per
// variable (nets nw,nx,ny,nz) and shared by every output; AND/OR trees are
// chains biased to 3-input gates, left-associated, so emission is
// byte-stable.
class netlist_builder {
public:
    netlist take() { return std::move(nl_); }

    void add_output(std::string const& name, sop_expr const& expr)
    {
        for (auto const& [existing, net] : nl_.outputs)
            if (existing == name)
                throw compile_error("duplicate output name: " + name);
        nl_.outputs.emplace_back(name, expr_net(expr));
        std::sort(nl_.outputs.begin(), nl_.outputs.end());
    }

private:
    std::string literal_net(int var, polarity p)
    {
        std::string base(1, var_names[var]);
        if (p == polarity::positive)
            return base;
        if (!inverter_made_[var]) {
            nl_.gates.push_back({"n" + base, gate_kind::inv, {base}});
            inverter_made_[var] = true;
        }
        return "n" + base;
    }

    std::string fresh_net() { return "t" + std::to_string(next_net_++); }

    // Chain of 2/3-input gates over `operands`, widest gates first.
    std::string chain(std::vector<std::string> operands, gate_kind two, gate_kind three)
    {
        std::string acc = operands[0];
        std::size_t used = 1;
        while (used < operands.size()) {
            std::size_t left = operands.size() - used;
            std::string net = fresh_net();
            if (left >= 2) {
                nl_.gates.push_back({net, three, {acc, operands[used], operands[used + 1]}});
                used += 2;
            } else {
                nl_.gates.push_back({net, two, {acc, operands[used]}});
                used += 1;
            }
            acc = net;
        }
        return acc;
    }

    std::string cube_net(cube c)
    {
        std::vector<std::string> literals;
        for (int v = 0; v < var_count; ++v) {
            polarity p = c.at(v);
            if (p != polarity::absent)
                literals.push_back(literal_net(v, p));
        }
        if (literals.size() == 1)
            return literals[0];
        return chain(std::move(literals), gate_kind::and2, gate_kind::and3);
    }

    std::string expr_net(sop_expr const& expr)
    {
        std::vector<cube> cubes = normalize(expr).cubes;
        if (cubes.empty())
            throw compile_error("constant-0 expression has no gate realization");
        for (cube c : cubes)
            if (c.is_tautology())
                throw compile_error("constant-1 expression has no gate realization");
        std::sort(cubes.begin(), cubes.end());

        std::vector<std::string> nets;
        for (cube c : cubes)
            nets.push_back(cube_net(c));
        if (nets.size() == 1)
            return nets[0];
        return chain(std::move(nets), gate_kind::or2, gate_kind::or3);
    }

    netlist nl_;
    std::array<bool, var_count> inverter_made_{};
    int next_net_ = 1;
};

} // namespace detail

/// Compiles one SOP expression to gates. Products become AND3/AND2 chains,
/// the sum an OR3/OR2 chain; single literals and single cubes introduce no
/// gate. Constant expressions are rejected.
inline netlist compile_sop(sop_expr const& expr, std::string const& output_name)
{
    detail::netlist_builder b;
    b.add_output(output_name, expr);
    return b.take();
}

/// Compiles several named expressions into one netlist with shared
/// inverters (at most one INV per variable) and per-output AND/OR logic.
/// Outputs are processed in name order.
inline netlist compile_decoder(std::vector<std::pair<std::string, sop_expr>> exprs)
{
    std::sort(exprs.begin(), exprs.end(),
              [](auto const& a, auto const& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < exprs.size(); ++i)
        if (exprs[i].first == exprs[i - 1].first)
            throw compile_error("duplicate output name: " + exprs[i].first);

    detail::netlist_builder b;
    for (auto const& [name, expr] : exprs)
        b.add_output(name, expr);
    return b.take();
}

/// Evaluates every gate in topological order; returns each output's bit.
inline std::map<std::string, bool> simulate(netlist const& nl, input4 in)
{
    std::map<std::string, bool> value = {
        {"w", in.w()}, {"x", in.x()}, {"y", in.y()}, {"z", in.z()}};

    for (gate const& g : nl.gates) {
        std::array<bool, 3> bit{};
        for (std::size_t i = 0; i < g.inputs.size() && i < bit.size(); ++i) {
            auto it = value.find(g.inputs[i]);
            if (it == value.end())
                throw domain_error("gate input references undefined net: " + g.inputs[i]);
            bit[i] = it->second;
        }
        bool v = false;
        switch (g.kind) {
        case gate_kind::inv: v = !bit[0]; break;
        case gate_kind::and2: v = bit[0] && bit[1]; break;
        case gate_kind::and3: v = bit[0] && bit[1] && bit[2]; break;
        case gate_kind::or2: v = bit[0] || bit[1]; break;
        case gate_kind::or3: v = bit[0] || bit[1] || bit[2]; break;
        }
        value[g.output] = v;
    }

    std::map<std::string, bool> out;
    for (auto const& [name, net] : nl.outputs) {
        auto it = value.find(net);
        if (it == value.end())
            throw domain_error("output references undefined net: " + net);
        out[name] = it->second;
    }
    return out;
}

/// Canonical text form. One line per input, gate and output; fields
/// separated by single spaces; every line ends with a line feed.
inline std::string emit(netlist const& nl)
{
    std::string out(netlist_header);
    out += '\n';
    for (std::string_view in : netlist::input_names) {
        out += "input ";
        out += in;
        out += '\n';
    }
    for (gate const& g : nl.gates) {
        out += "gate ";
        out += g.output;
        out += ' ';
        out += to_string(g.kind);
        for (std::string const& in : g.inputs) {
            out += ' ';
            out += in;
        }
        out += '\n';
    }
    for (auto const& [name, net] : nl.outputs) {
        out += "output ";
        out += name;
        out += ' ';
        out += net;
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::vector<std::string> split_fields(std::string_view line, std::size_t line_no)
{
    if (line.empty())
        throw format_error("empty line", line_no);
    if (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')
        throw format_error("trailing whitespace", line_no);
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ' ') {
            if (i == start)
                throw format_error("fields must be separated by single spaces", line_no);
            fields.emplace_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return fields;
}

} // namespace detail

/// Parses the canonical text form; inverse of emit. Reports the offending
/// line on malformed input, unknown gate kinds, undefined nets or arity
/// mismatches.
inline netlist parse_netlist(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] == '\n') {
            lines.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    if (start != text.size())
        throw format_error("missing final line feed", lines.size() + 1);

    if (lines.empty() || lines[0] != netlist_header)
        throw format_error(std::string("expected header \"") + std::string(netlist_header) + "\"", 1);

    netlist nl;
    std::set<std::string> defined;
    std::size_t ln = 1;

    for (std::string_view expected : netlist::input_names) {
        ++ln;
        if (ln > lines.size())
            throw format_error("missing input line", ln);
        auto fields = detail::split_fields(lines[ln - 1], ln);
        if (fields.size() != 2 || fields[0] != "input" || fields[1] != expected)
            throw format_error(std::string("expected \"input ") + std::string(expected) + "\"", ln);
        defined.insert(fields[1]);
    }

    bool in_outputs = false;
    std::string last_output;
    for (ln = 6; ln <= lines.size(); ++ln) {
        auto fields = detail::split_fields(lines[ln - 1], ln);
        if (fields[0] == "gate") {
            if (in_outputs)
                throw format_error("gate line after output section", ln);
            if (fields.size() < 3)
                throw format_error("gate line needs a net and a kind", ln);

            gate g;
            g.output = fields[1];
            bool known = false;
            for (gate_kind k : all_gate_kinds)
                if (to_string(k) == fields[2]) {
                    g.kind = k;
                    known = true;
                }
            if (!known)
                throw format_error("unknown gate kind: " + fields[2], ln);
            if (static_cast<int>(fields.size()) - 3 != arity(g.kind))
                throw format_error("arity mismatch for " + fields[2] + ": expected " +
                                       std::to_string(arity(g.kind)) + " inputs",
                                   ln);
            if (defined.count(g.output))
                throw format_error("net defined twice: " + g.output, ln);
            for (std::size_t i = 3; i < fields.size(); ++i) {
                if (!defined.count(fields[i]))
                    throw format_error("undefined net reference: " + fields[i], ln);
                g.inputs.push_back(fields[i]);
            }
            defined.insert(g.output);
            nl.gates.push_back(std::move(g));
        } else if (fields[0] == "output") {
            if (fields.size() != 3)
                throw format_error("output line needs a name and a net", ln);
            if (in_outputs && fields[1] <= last_output)
                throw format_error("output names must be strictly ascending", ln);
            if (!defined.count(fields[2]))
                throw format_error("undefined net reference: " + fields[2], ln);
            in_outputs = true;
            last_output = fields[1];
            nl.outputs.emplace_back(fields[1], fields[2]);
        } else {
            throw format_error("unknown directive: " + fields[0], ln);
        }
    }
    return nl;
}

} // namespace segdec
