#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segdec/errors.hpp"
#include "segdec/glyphs.hpp"
#include "segdec/segments.hpp"

namespace segdec {

inline constexpr int var_count = 4;
inline constexpr std::array<char, var_count> var_names = {'w', 'x', 'y', 'z'};

enum class polarity : std::uint8_t { absent, positive, negative };

/// Product term over w,x,y,z. Stored as care/value nibbles sharing the
/// input4 bit layout (bit 3 = w .. bit 0 = z): a literal is present where
/// the care bit is set, complemented where the value bit is clear.
/// care == 0 is the explicit tautology cube.
class cube {
public:
    constexpr cube() = default;

    static constexpr cube tautology() { return cube{}; }

    /// Cube covering exactly one input value (the full 4-literal product).
    static constexpr cube minterm(input4 in)
    {
        cube c;
        c.care_ = 0xF;
        c.value_ = static_cast<std::uint8_t>(in.value());
        return c;
    }

    static constexpr cube from_masks(std::uint8_t care, std::uint8_t value)
    {
        cube c;
        c.care_ = care & 0xF;
        c.value_ = static_cast<std::uint8_t>(value & c.care_);
        return c;
    }

    constexpr std::uint8_t care() const { return care_; }
    constexpr std::uint8_t value() const { return value_; }

    constexpr polarity at(int var) const
    {
        std::uint8_t b = var_bit(var);
        if (!(care_ & b)) return polarity::absent;
        return (value_ & b) ? polarity::positive : polarity::negative;
    }

    constexpr void set(int var, polarity p)
    {
        std::uint8_t b = var_bit(var);
        care_ &= static_cast<std::uint8_t>(~b);
        value_ &= static_cast<std::uint8_t>(~b);
        if (p != polarity::absent) {
            care_ |= b;
            if (p == polarity::positive) value_ |= b;
        }
    }

    constexpr int literal_count() const
    {
        int n = 0;
        for (std::uint8_t m = care_; m; m &= static_cast<std::uint8_t>(m - 1))
            ++n;
        return n;
    }

    constexpr bool is_tautology() const { return care_ == 0; }

    constexpr bool covers(input4 in) const
    {
        return (static_cast<std::uint8_t>(in.value()) & care_) == value_;
    }

    /// 16-bit mask of all input values this cube covers.
    constexpr std::uint16_t coverage() const
    {
        std::uint16_t out = 0;
        for (int m = 0; m < 16; ++m)
            if ((m & care_) == value_)
                out |= std::uint16_t(1u << m);
        return out;
    }

    /// True if this cube covers everything `other` covers.
    constexpr bool contains(cube other) const
    {
        return (other.care_ & care_) == care_ && ((value_ ^ other.value_) & care_) == 0;
    }

    constexpr bool operator==(cube const&) const = default;

    /// Canonical order: variables compared w,x,y,z with positive literal
    /// before negative before absent. Total, so ties never depend on
    /// construction history.
    constexpr bool operator<(cube other) const { return sort_key() < other.sort_key(); }

    std::string to_string() const
    {
        if (is_tautology()) return "1";
        std::string out;
        for (int v = 0; v < var_count; ++v) {
            polarity p = at(v);
            if (p == polarity::absent) continue;
            out += var_names[v];
            if (p == polarity::negative) out += '\'';
        }
        return out;
    }

private:
    static constexpr std::uint8_t var_bit(int var) { return std::uint8_t(1u << (3 - var)); }

    constexpr int sort_key() const
    {
        int key = 0;
        for (int v = 0; v < var_count; ++v) {
            int rank = at(v) == polarity::positive ? 0 : at(v) == polarity::negative ? 1 : 2;
            key = key * 3 + rank;
        }
        return key;
    }

    std::uint8_t care_ = 0;
    std::uint8_t value_ = 0;
};

/// Sum of products: OR over cubes. An empty cube list is constant 0.
/// The label is reporting metadata and excluded from equality.
struct sop_expr {
    std::vector<cube> cubes;
    std::optional<segment_id> label;

    bool operator==(sop_expr const& o) const { return cubes == o.cubes; }
};

constexpr bool eval_cube(cube c, input4 in) { return c.covers(in); }

inline bool eval_sop(sop_expr const& expr, input4 in)
{
    for (cube c : expr.cubes)
        if (c.covers(in))
            return true;
    return false;
}

/// 16-bit mask of inputs where the expression is 1.
inline std::uint16_t sop_coverage(sop_expr const& expr)
{
    std::uint16_t out = 0;
    for (cube c : expr.cubes)
        out |= c.coverage();
    return out;
}

/// Removes duplicate cubes, keeping first occurrences; term order is
/// otherwise preserved.
inline sop_expr normalize(sop_expr const& expr)
{
    sop_expr out;
    out.label = expr.label;
    for (cube c : expr.cubes) {
        bool seen = false;
        for (cube k : out.cubes)
            if (k == c) { seen = true; break; }
        if (!seen)
            out.cubes.push_back(c);
    }
    return out;
}

/// Parses SOP text: literals w,x,y,z with postfix ' for complement, '+'
/// between terms, optional whitespace. "0" and "1" denote the constants.
inline sop_expr parse_sop(std::string_view text)
{
    sop_expr out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };

    skip_ws();
    if (pos < text.size() && text[pos] == '0') {
        std::size_t after = pos + 1;
        while (after < text.size() && (text[after] == ' ' || text[after] == '\t'))
            ++after;
        if (after == text.size())
            return out; // constant 0
        throw parse_error("'0' must stand alone", pos);
    }

    bool expect_term = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) {
            if (expect_term)
                throw parse_error("empty term", pos);
            break;
        }
        if (expect_term) {
            std::size_t term_start = pos;
            if (text[pos] == '1') {
                out.cubes.push_back(cube::tautology());
                ++pos;
            } else {
                cube c;
                bool any = false;
                while (pos < text.size()) {
                    char ch = text[pos];
                    if (ch == '+' || ch == ' ' || ch == '\t')
                        break;
                    int var = -1;
                    for (int v = 0; v < var_count; ++v)
                        if (var_names[v] == ch) var = v;
                    if (var < 0) {
                        if (ch == '\'')
                            throw parse_error("dangling apostrophe", pos);
                        throw parse_error(std::string("unknown variable '") + ch + "'", pos);
                    }
                    ++pos;
                    polarity p = polarity::positive;
                    if (pos < text.size() && text[pos] == '\'') {
                        p = polarity::negative;
                        ++pos;
                    }
                    if (c.at(var) != polarity::absent && c.at(var) != p)
                        throw parse_error(std::string("contradictory literal '") + var_names[var] + "'",
                                          pos - 1);
                    c.set(var, p);
                    any = true;
                }
                if (!any)
                    throw parse_error("empty term", term_start);
                out.cubes.push_back(c);
            }
            expect_term = false;
        } else {
            if (text[pos] != '+')
                throw parse_error("expected '+' between terms", pos);
            ++pos;
            expect_term = true;
        }
    }
    return out;
}

/// Inverse of parse_sop. Duplicate cubes are dropped (normalization);
/// term order is preserved. Constant 0 prints "0", a tautology cube "1".
inline std::string print_sop(sop_expr const& expr)
{
    sop_expr n = normalize(expr);
    if (n.cubes.empty())
        return "0";
    std::string out;
    for (cube c : n.cubes) {
        if (!out.empty())
            out += " + ";
        out += c.to_string();
    }
    return out;
}

namespace detail {

// Minimized per-segment expressions as published, verbatim. Two of them
// (c and g) do not match the decoder truth table; check_equivalence and
// the verify-expressions command surface exactly those cells.
inline constexpr std::array<std::string_view, segment_count> published_expressions = {
    "w'y' + wz + xyz + x'yz'",       // a
    "x + yz + w'y'z'",               // b
    "w + y' + xyz",                  // c
    "w'x' + z' + xy'",               // d
    "z' + x' + y'",                  // e
    "x + y'z' + yz",                 // f
    "w + xy'z' + x'y'z + x'yz'",     // g
    "x'y + x'z",                     // h
    "yz' + xy'z + wy'z'",            // i
    "x'z + y'z + xyz'",              // j
};

} // namespace detail

/// The published expression text for one segment, verbatim.
constexpr std::string_view paper_expression_text(segment_id s)
{
    return detail::published_expressions[ordinal(s)];
}

/// All ten published segment expressions, parsed and labeled, indexed by
/// segment ordinal.
inline std::array<sop_expr, segment_count> paper_expressions()
{
    std::array<sop_expr, segment_count> out;
    for (segment_id s : all_segments()) {
        out[ordinal(s)] = parse_sop(detail::published_expressions[ordinal(s)]);
        out[ordinal(s)].label = s;
    }
    return out;
}

struct equivalence_report {
    enum class status_kind { equivalent, mismatch };

    struct mismatch_entry {
        input4 input;
        bool expr_value;
        bool table_value;

        bool operator==(mismatch_entry const&) const = default;
    };

    status_kind status = status_kind::equivalent;
    std::vector<mismatch_entry> mismatches;

    bool equivalent() const { return status == status_kind::equivalent; }
};

/// Evaluates the expression on every defined, non-don't-care input and
/// reports each disagreement with the table's bit for the segment.
inline equivalence_report check_equivalence(sop_expr const& expr, segment_id segment,
                                            truth_table const& table)
{
    table.validate();
    equivalence_report report;
    for (int m = 0; m < 10; ++m) {
        if (table.is_dont_care(m))
            continue;
        input4 in(m);
        bool ev = eval_sop(expr, in);
        bool tv = table.rows[m].contains(segment);
        if (ev != tv)
            report.mismatches.push_back({in, ev, tv});
    }
    report.status = report.mismatches.empty() ? equivalence_report::status_kind::equivalent
                                              : equivalence_report::status_kind::mismatch;
    return report;
}

} // namespace segdec
