#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "segdec/errors.hpp"

namespace segdec {

inline constexpr int segment_count = 10;

/// One of the ten display segments, labeled a..j.
enum class segment_id : std::uint8_t { a, b, c, d, e, f, g, h, i, j };

constexpr int ordinal(segment_id s) { return static_cast<int>(s); }

constexpr char label(segment_id s) { return static_cast<char>('a' + ordinal(s)); }

constexpr std::array<segment_id, segment_count> all_segments()
{
    return {segment_id::a, segment_id::b, segment_id::c, segment_id::d, segment_id::e,
            segment_id::f, segment_id::g, segment_id::h, segment_id::i, segment_id::j};
}

constexpr segment_id segment_from_label(char c)
{
    if (c < 'a' || c > 'j')
        throw domain_error(std::string("not a segment label: ") + c);
    return static_cast<segment_id>(c - 'a');
}

enum class display_mode { bengali, english };

constexpr std::string_view to_string(display_mode m)
{
    return m == display_mode::bengali ? "bengali" : "english";
}

/// Set of lit segments, stored as a 10-bit mask (bit 0 = a, bit 9 = j).
class segment_set {
public:
    constexpr segment_set() = default;

    constexpr explicit segment_set(std::uint16_t mask) : mask_(mask)
    {
        if (mask & ~all_mask)
            throw domain_error("segment mask has bits outside a..j");
    }

    constexpr segment_set(std::initializer_list<segment_id> segs)
    {
        for (segment_id s : segs)
            mask_ |= bit(s);
    }

    /// Builds a set from a label string such as "abdef".
    static constexpr segment_set from_labels(std::string_view labels)
    {
        segment_set out;
        for (char c : labels)
            out.insert(segment_from_label(c));
        return out;
    }

    /// Parses the 10-character 0/1 string in a..j order, e.g. "1111110000".
    static constexpr segment_set from_pattern(std::string_view pattern)
    {
        if (pattern.size() != segment_count)
            throw domain_error("pattern must be exactly 10 characters");
        segment_set out;
        for (int i = 0; i < segment_count; ++i) {
            if (pattern[i] == '1')
                out.mask_ |= std::uint16_t(1u << i);
            else if (pattern[i] != '0')
                throw domain_error("pattern may contain only 0 and 1");
        }
        return out;
    }

    constexpr bool contains(segment_id s) const { return (mask_ & bit(s)) != 0; }
    constexpr void insert(segment_id s) { mask_ |= bit(s); }
    constexpr void erase(segment_id s) { mask_ &= static_cast<std::uint16_t>(~bit(s)); }
    constexpr std::uint16_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }

    constexpr int size() const
    {
        int n = 0;
        for (std::uint16_t m = mask_; m; m &= static_cast<std::uint16_t>(m - 1))
            ++n;
        return n;
    }

    constexpr segment_set operator&(segment_set o) const { return raw(mask_ & o.mask_); }
    constexpr segment_set operator|(segment_set o) const { return raw(mask_ | o.mask_); }
    constexpr bool operator==(segment_set const&) const = default;

    /// a..j order, '1' for lit: the wire-format pattern string.
    std::string to_pattern() const
    {
        std::string out(segment_count, '0');
        for (int i = 0; i < segment_count; ++i)
            if (mask_ & (1u << i))
                out[i] = '1';
        return out;
    }

    /// Compact set notation, e.g. "{a,b,c,d,e,f}".
    std::string to_set_notation() const
    {
        std::string out = "{";
        for (segment_id s : all_segments()) {
            if (!contains(s)) continue;
            if (out.size() > 1) out += ',';
            out += label(s);
        }
        out += '}';
        return out;
    }

private:
    static constexpr std::uint16_t all_mask = 0x3FF;
    static constexpr std::uint16_t bit(segment_id s) { return std::uint16_t(1u << ordinal(s)); }
    static constexpr segment_set raw(int mask)
    {
        segment_set s;
        s.mask_ = static_cast<std::uint16_t>(mask);
        return s;
    }

    std::uint16_t mask_ = 0;
};

/// 4-bit decoder input; w is the most significant bit, value = 8w+4x+2y+z.
class input4 {
public:
    constexpr input4() = default;

    constexpr explicit input4(int value) : value_(static_cast<std::uint8_t>(value))
    {
        if (value < 0 || value > 15)
            throw domain_error("input value must be in 0..15: " + std::to_string(value));
    }

    constexpr input4(bool w, bool x, bool y, bool z)
        : value_(static_cast<std::uint8_t>(8 * w + 4 * x + 2 * y + z))
    {
    }

    constexpr int value() const { return value_; }
    constexpr bool w() const { return (value_ & 8) != 0; }
    constexpr bool x() const { return (value_ & 4) != 0; }
    constexpr bool y() const { return (value_ & 2) != 0; }
    constexpr bool z() const { return (value_ & 1) != 0; }

    constexpr bool operator==(input4 const&) const = default;

private:
    std::uint8_t value_ = 0;
};

} // namespace segdec
