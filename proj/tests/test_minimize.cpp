#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "segdec/glyphs.hpp"
#include "segdec/minimize.hpp"

using namespace segdec;

namespace {

minimize_spec segment_spec(segment_id s)
{
    return {minterm_mask(s), decoder_dc_mask};
}

bool is_prime_of(cube c, minimize_spec const& spec)
{
    auto primes = prime_implicants(spec);
    return std::any_of(primes.begin(), primes.end(),
                       [&](implicant const& p) { return p.c == c; });
}

} // namespace

TEST_CASE("minimize_spec validation")
{
    CHECK_THROWS_AS(minimize_spec(0x0003, 0x0002), domain_error);
    CHECK(minimize_spec::from_minterms({1, 2, 3, 9}, {10, 11, 12, 13, 14, 15}) ==
          minimize_spec(0x020E, 0xFC00));
    CHECK_THROWS_AS(minimize_spec::from_minterms({16}), domain_error);
    CHECK(minimize_spec(0x00FF, 0xFC00).off_mask() == 0x0300);
    CHECK(decoder_dc_mask == 0xFC00);
}

TEST_CASE("prime_implicants on degenerate functions")
{
    CHECK(prime_implicants({0, 0}).empty());
    CHECK(prime_implicants({0, 0xFFFF}).empty()); // nothing to turn on

    auto all_on = prime_implicants({0xFFFF, 0});
    REQUIRE(all_on.size() == 1);
    CHECK(all_on[0].c.is_tautology());
    CHECK(all_on[0].covered == 0xFFFF);

    auto lone = prime_implicants(minimize_spec::from_minterms({5}));
    REQUIRE(lone.size() == 1);
    CHECK(lone[0].c == cube::minterm(input4(5)));
}

TEST_CASE("prime_implicants finds the classic two-literal groups")
{
    minimize_spec spec = minimize_spec::from_minterms({1, 2, 3, 9}, {10, 11, 12, 13, 14, 15});
    auto primes = prime_implicants(spec);

    CHECK(is_prime_of(parse_sop("x'y").cubes[0], spec));
    CHECK(is_prime_of(parse_sop("x'z").cubes[0], spec));

    for (auto const& p : primes) {
        CHECK(p.covered == p.c.coverage());
        CHECK((p.covered & spec.on_mask) != 0);
        // Implicant: never 1 on the off-set.
        CHECK((p.covered & spec.off_mask()) == 0);
        // Cube coverage size is a power of two.
        int n = 0;
        for (int m = 0; m < 16; ++m)
            if (p.covered & (1u << m))
                ++n;
        CHECK((n & (n - 1)) == 0);
        // Prime: freeing any one literal leaves the function.
        for (int v = 0; v < var_count; ++v) {
            if (p.c.at(v) == polarity::absent)
                continue;
            cube freed = p.c;
            freed.set(v, polarity::absent);
            CHECK((freed.coverage() & spec.off_mask()) != 0);
        }
    }
    CHECK(std::is_sorted(primes.begin(), primes.end(),
                         [](implicant const& a, implicant const& b) { return a.c < b.c; }));
}

TEST_CASE("verify_cover checks on-set and off-set")
{
    minimize_spec h = segment_spec(segment_id::h);
    CHECK(verify_cover(parse_sop("x'y + x'z"), h));
    CHECK_FALSE(verify_cover(parse_sop("x'y"), h));        // misses on-set 1, 9
    CHECK_FALSE(verify_cover(parse_sop("x' + y"), h));     // 1 on off-set 0
    CHECK_FALSE(verify_cover(sop_expr{}, minimize_spec::from_minterms({3})));
    CHECK(verify_cover(sop_expr{}, minimize_spec{}));

    // The bundled c expression is wrong: 1 at input 5, which is off.
    CHECK_FALSE(verify_cover(paper_expressions()[ordinal(segment_id::c)],
                             segment_spec(segment_id::c)));
}

TEST_CASE("minimize on single-answer functions")
{
    CHECK(minimize({0, 0}).cubes.empty());
    CHECK(print_sop(minimize({0, 0})) == "0");
    CHECK(print_sop(minimize(minimize_spec::from_minterms({5}))) == "w'xy'z");
    CHECK(print_sop(minimize({0xFFFF, 0})) == "1");

    // Three single-literal cubes are the unique cheapest cover here.
    minimize_spec e = segment_spec(segment_id::e);
    CHECK(print_sop(minimize(e)) == "x' + y' + z'");

    minimize_spec h = segment_spec(segment_id::h);
    CHECK(minimize(h) == parse_sop("x'y + x'z"));
}

TEST_CASE("minimize solves every segment function")
{
    // Cheapest cover sizes found by exhaustive search, per segment a..j.
    constexpr std::array<int, segment_count> expected_cubes = {4, 3, 3, 3, 3, 3, 5, 2, 3, 3};
    // Cube counts of the bundled expressions, where those are correct.
    constexpr std::array<int, segment_count> published_cubes = {4, 3, -1, 3, 3, 3, -1, 2, 3, 3};

    for (segment_id s : all_segments()) {
        minimize_spec spec = segment_spec(s);
        sop_expr got = minimize(spec);

        CAPTURE(label(s));
        CHECK(verify_cover(got, spec));
        CHECK(int(got.cubes.size()) == expected_cubes[ordinal(s)]);
        if (published_cubes[ordinal(s)] > 0)
            CHECK(int(got.cubes.size()) <= published_cubes[ordinal(s)]);

        // Every emitted cube is a prime implicant.
        for (cube c : got.cubes)
            CHECK(is_prime_of(c, spec));
        CHECK(std::is_sorted(got.cubes.begin(), got.cubes.end()));
    }
}

TEST_CASE("minimize is deterministic")
{
    for (segment_id s : all_segments()) {
        minimize_spec spec = segment_spec(s);
        CHECK(minimize(spec) == minimize(spec));
    }
    minimize_spec odd = minimize_spec::from_minterms({1, 3, 5, 7, 9, 11, 13, 15});
    CHECK(print_sop(minimize(odd)) == "z");
    CHECK(minimize(odd) == minimize(odd));
}

TEST_CASE("minimize output is sound on random specs")
{
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> trit(0, 2);

    for (int iter = 0; iter < 300; ++iter) {
        std::uint16_t on = 0, dc = 0;
        for (int m = 0; m < 16; ++m) {
            int t = trit(rng);
            if (t == 1) on |= std::uint16_t(1u << m);
            if (t == 2) dc |= std::uint16_t(1u << m);
        }
        minimize_spec spec{on, dc};
        sop_expr got = minimize(spec);
        CAPTURE(on, dc);
        REQUIRE(verify_cover(got, spec));
        for (cube c : got.cubes)
            CHECK(is_prime_of(c, spec));

        // No cover of prime implicants can beat it on cube count: spot
        // check against the trivial minterm cover.
        CHECK(got.cubes.size() <= std::size_t(16));
    }
}

TEST_CASE("minimize never uses more cubes than a minterm cover")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> mask(0, 0xFFFF);
    for (int iter = 0; iter < 100; ++iter) {
        std::uint16_t on = std::uint16_t(mask(rng));
        minimize_spec spec{on, 0};
        sop_expr got = minimize(spec);
        int on_count = 0;
        for (int m = 0; m < 16; ++m)
            if (on & (1u << m))
                ++on_count;
        CHECK(int(got.cubes.size()) <= on_count);
        CHECK(verify_cover(got, spec));
    }
}
