#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <string_view>
#include <vector>

#include "segdec/glyphs.hpp"

using namespace segdec;

namespace {

// Decoder reference rows, transcribed independently of the library's table
// (lit-segment labels per digit).
constexpr std::array<std::string_view, 10> bengali_reference = {
    "abcdef", "acdeghj", "adeghi", "bdefhj", "abcdefg",
    "abdefij", "bdefij", "abcfg", "cdefgi", "aceghj",
};

} // namespace

TEST_CASE("decode matches the Bengali reference row for every digit")
{
    for (int d = 0; d < 10; ++d)
        CHECK(decode(d, display_mode::bengali) == segment_set::from_labels(bengali_reference[d]));
}

TEST_CASE("decode examples")
{
    CHECK(decode(0, display_mode::bengali) ==
          segment_set{segment_id::a, segment_id::b, segment_id::c, segment_id::d, segment_id::e,
                      segment_id::f});
    CHECK(decode(8, display_mode::bengali) ==
          segment_set{segment_id::c, segment_id::d, segment_id::e, segment_id::f, segment_id::g,
                      segment_id::i});
    CHECK(decode(1, display_mode::english) == segment_set{segment_id::b, segment_id::c});
    CHECK_THROWS_AS(decode(10, display_mode::bengali), domain_error);
    CHECK_THROWS_AS(decode(-1, display_mode::bengali), domain_error);
    CHECK_THROWS_AS(decode(10, display_mode::english), domain_error);
}

TEST_CASE("English mode never lights h, i or j and matches Bengali for 0")
{
    segment_set hij{segment_id::h, segment_id::i, segment_id::j};
    for (int d = 0; d < 10; ++d)
        CHECK((decode(d, display_mode::english) & hij).empty());
    CHECK(decode(0, display_mode::english) == decode(0, display_mode::bengali));
}

TEST_CASE("combination_vector is the sorted lit-segment list")
{
    CHECK(combination_vector(7) == std::vector<segment_id>{segment_id::a, segment_id::b,
                                                           segment_id::c, segment_id::f,
                                                           segment_id::g});
    CHECK(combination_vector(5) == std::vector<segment_id>{segment_id::a, segment_id::b,
                                                           segment_id::d, segment_id::e,
                                                           segment_id::f, segment_id::i,
                                                           segment_id::j});
    // Digit 8 includes i even though the printed combination-vector table
    // omits it; the decoder row wins.
    CHECK(combination_vector(8) == std::vector<segment_id>{segment_id::c, segment_id::d,
                                                           segment_id::e, segment_id::f,
                                                           segment_id::g, segment_id::i});
    CHECK_THROWS_AS(combination_vector(10), domain_error);

    for (int d = 0; d < 10; ++d) {
        auto vec = combination_vector(d);
        CHECK(std::is_sorted(vec.begin(), vec.end()));
        segment_set roundtrip;
        for (segment_id s : vec)
            roundtrip.insert(s);
        CHECK(roundtrip == decode(d, display_mode::bengali));
    }
}

TEST_CASE("minterm_list examples and decode consistency")
{
    CHECK(minterm_list(segment_id::a) == std::vector<int>{0, 1, 2, 4, 5, 7, 9});
    CHECK(minterm_list(segment_id::h) == std::vector<int>{1, 2, 3, 9});
    CHECK(minterm_list(segment_id::i) == std::vector<int>{2, 5, 6, 8});

    for (segment_id s : all_segments())
        for (int d = 0; d < 10; ++d) {
            auto list = minterm_list(s);
            bool listed = std::find(list.begin(), list.end(), d) != list.end();
            CHECK(listed == decode(d, display_mode::bengali).contains(s));
            CHECK(((minterm_mask(s) >> d) & 1) == (listed ? 1 : 0));
        }
}

TEST_CASE("cross_check_tables finds exactly the digit-8 combination-vector slip")
{
    auto found = cross_check_tables();
    REQUIRE(found.size() == 1);
    CHECK(found[0] == discrepancy{source_table::combination_vectors, 8, segment_id::i, true, false});
    for (auto const& d : found)
        CHECK(d.table != source_table::minterm_lists);
}

TEST_CASE("segment set serialization")
{
    CHECK(decode(0, display_mode::bengali).to_pattern() == "1111110000");
    CHECK(decode(3, display_mode::bengali).to_pattern() == "0101110101");
    CHECK(decode(3, display_mode::bengali).to_set_notation() == "{b,d,e,f,h,j}");
    CHECK(segment_set{}.to_set_notation() == "{}");
    CHECK(segment_set{}.to_pattern() == "0000000000");

    SECTION("pattern round-trips for every mask")
    {
        for (int mask = 0; mask < 1024; ++mask) {
            segment_set s{static_cast<std::uint16_t>(mask)};
            CHECK(segment_set::from_pattern(s.to_pattern()) == s);
        }
    }
    SECTION("bad patterns are rejected")
    {
        CHECK_THROWS_AS(segment_set::from_pattern("111111000"), domain_error);
        CHECK_THROWS_AS(segment_set::from_pattern("11111100002"), domain_error);
        CHECK_THROWS_AS(segment_set::from_pattern("1111110002"), domain_error);
    }
}

TEST_CASE("input4 bit layout")
{
    input4 five(5);
    CHECK((!five.w() && five.x() && !five.y() && five.z()));
    for (int v = 0; v < 16; ++v) {
        input4 in(v);
        CHECK(8 * in.w() + 4 * in.x() + 2 * in.y() + in.z() == v);
        CHECK(input4(in.w(), in.x(), in.y(), in.z()) == in);
    }
    CHECK_THROWS_AS(input4(16), domain_error);
    CHECK_THROWS_AS(input4(-1), domain_error);
}

TEST_CASE("truth table don't-care validation")
{
    truth_table t = bengali_truth_table();
    CHECK(t.dont_care_mask == 0xFC00);
    CHECK_NOTHROW(t.validate());
    for (int v = 10; v < 16; ++v)
        CHECK(t.is_dont_care(v));
    for (int v = 0; v < 10; ++v)
        CHECK_FALSE(t.is_dont_care(v));

    t.dont_care_mask = 0xFC01; // overlaps row 0
    CHECK_THROWS_AS(t.validate(), domain_error);
}
