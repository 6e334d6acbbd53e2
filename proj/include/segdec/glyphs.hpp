#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "segdec/errors.hpp"
#include "segdec/segments.hpp"

namespace segdec {

/// Digit -> lit-segment map for the ten defined inputs, plus the set of
/// unconstrained inputs (a 16-bit mask over input values).
struct truth_table {
    std::array<segment_set, 10> rows{};
    std::uint16_t dont_care_mask = 0xFC00; // inputs 10..15

    constexpr bool is_dont_care(int value) const
    {
        return (dont_care_mask & (1u << value)) != 0;
    }

    constexpr void validate() const
    {
        if (dont_care_mask & 0x03FF)
            throw domain_error("don't-care set overlaps the defined rows 0..9");
    }
};

namespace detail {

// Decoder truth table for the Bengali numerals, one pattern per digit in
// a..j column order.
inline constexpr std::array<std::string_view, 10> bengali_patterns = {
    "1111110000", // 0
    "1011101101", // 1
    "1001101110", // 2
    "0101110101", // 3
    "1111111000", // 4
    "1101110011", // 5
    "0101110011", // 6
    "1110011000", // 7
    "0011111010", // 8
    "1010101101", // 9
};

// Standard seven-segment patterns over a..g (6 and 9 drawn with tails);
// h, i, j stay dark in English mode.
inline constexpr std::array<std::string_view, 10> english_patterns = {
    "1111110000", // 0
    "0110000000", // 1
    "1101101000", // 2
    "1111001000", // 3
    "0110011000", // 4
    "1011011000", // 5
    "1011111000", // 6
    "1110000000", // 7
    "1111111000", // 8
    "1111011000", // 9
};

inline constexpr std::array<segment_set, 10> make_rows(std::array<std::string_view, 10> const& pats)
{
    std::array<segment_set, 10> rows{};
    for (int d = 0; d < 10; ++d)
        rows[d] = segment_set::from_pattern(pats[d]);
    return rows;
}

inline constexpr std::array<segment_set, 10> bengali_rows = make_rows(bengali_patterns);
inline constexpr std::array<segment_set, 10> english_rows = make_rows(english_patterns);

// The published combination-vector table, kept exactly as printed. Digit 8
// omits segment i there; cross_check_tables reports that cell.
inline constexpr std::array<std::string_view, 10> combination_vectors_as_printed = {
    "abcdef",  // 0
    "acdeghj", // 1
    "adeghi",  // 2
    "bdefhj",  // 3
    "abcdefg", // 4
    "abdefij", // 5
    "bdefij",  // 6
    "abcfg",   // 7
    "cdefg",   // 8  (i missing in print)
    "aceghj",  // 9
};

// The published per-segment minterm lists, kept as printed, one 10-bit
// digit mask per segment a..j.
inline constexpr std::array<std::uint16_t, segment_count> minterm_lists_as_printed = {
    0x02B7, // a: 0,1,2,4,5,7,9
    0x00F9, // b: 0,3,4,5,6,7
    0x0393, // c: 0,1,4,7,8,9
    0x017F, // d: 0,1,2,3,4,5,6,8
    0x037F, // e: 0,1,2,3,4,5,6,8,9
    0x01F9, // f: 0,3,4,5,6,7,8
    0x0396, // g: 1,2,4,7,8,9
    0x020E, // h: 1,2,3,9
    0x0164, // i: 2,5,6,8
    0x026A, // j: 1,3,5,6,9
};

} // namespace detail

/// The authoritative Bengali decoder table (don't-cares 10..15).
constexpr truth_table bengali_truth_table()
{
    return truth_table{detail::bengali_rows};
}

constexpr truth_table english_truth_table()
{
    return truth_table{detail::english_rows};
}

/// Lit segments for a decimal digit. Throws domain_error outside 0..9
/// (an invalid BCD code for this decoder).
constexpr segment_set decode(int digit, display_mode mode)
{
    if (digit < 0 || digit > 9)
        throw domain_error("digit out of range 0..9: " + std::to_string(digit));
    return mode == display_mode::bengali ? detail::bengali_rows[digit]
                                         : detail::english_rows[digit];
}

/// Lit segments of the Bengali digit in label order a..j.
inline std::vector<segment_id> combination_vector(int digit)
{
    segment_set set = decode(digit, display_mode::bengali);
    std::vector<segment_id> out;
    for (segment_id s : all_segments())
        if (set.contains(s))
            out.push_back(s);
    return out;
}

/// Digits 0..9 on which the segment is lit in Bengali mode, ascending.
inline std::vector<int> minterm_list(segment_id segment)
{
    std::vector<int> out;
    for (int d = 0; d < 10; ++d)
        if (decode(d, display_mode::bengali).contains(segment))
            out.push_back(d);
    return out;
}

/// Same set as minterm_list, as a 16-bit minterm mask.
constexpr std::uint16_t minterm_mask(segment_id segment)
{
    std::uint16_t mask = 0;
    for (int d = 0; d < 10; ++d)
        if (detail::bengali_rows[d].contains(segment))
            mask |= std::uint16_t(1u << d);
    return mask;
}

/// Which embedded reference table a discrepancy was found in.
enum class source_table { combination_vectors, minterm_lists };

constexpr std::string_view to_string(source_table t)
{
    return t == source_table::combination_vectors ? "combination-vectors" : "minterm-lists";
}

/// One cell where a derived table disagrees with the decoder truth table.
/// `expected` is the truth-table bit, `found` the bit as printed.
struct discrepancy {
    source_table table;
    int digit;
    segment_id segment;
    bool expected;
    bool found;

    bool operator==(discrepancy const&) const = default;

    std::string describe() const
    {
        return std::string(to_string(table)) + ": digit " + std::to_string(digit) +
               ", segment " + label(segment) + ": expected " + (expected ? '1' : '0') +
               ", found " + (found ? '1' : '0');
    }
};

/// Audits the combination-vector and minterm tables, as printed, against
/// the decoder truth table. The truth table wins every disagreement.
inline std::vector<discrepancy> cross_check_tables()
{
    std::vector<discrepancy> out;
    for (int d = 0; d < 10; ++d) {
        segment_set truth = decode(d, display_mode::bengali);
        segment_set printed = segment_set::from_labels(detail::combination_vectors_as_printed[d]);
        for (segment_id s : all_segments())
            if (truth.contains(s) != printed.contains(s))
                out.push_back({source_table::combination_vectors, d, s, truth.contains(s),
                               printed.contains(s)});
    }
    for (segment_id s : all_segments()) {
        std::uint16_t printed = detail::minterm_lists_as_printed[ordinal(s)];
        for (int d = 0; d < 10; ++d) {
            bool truth = decode(d, display_mode::bengali).contains(s);
            bool listed = (printed & (1u << d)) != 0;
            if (truth != listed)
                out.push_back({source_table::minterm_lists, d, s, truth, listed});
        }
    }
    return out;
}

} // namespace segdec
