#pragma once

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "segdec/errors.hpp"
#include "segdec/sop.hpp"

namespace segdec {

/// Minimization target: on-set and don't-care set as 16-bit minterm masks.
struct minimize_spec {
    std::uint16_t on_mask = 0;
    std::uint16_t dc_mask = 0;

    constexpr minimize_spec() = default;

    constexpr minimize_spec(std::uint16_t on, std::uint16_t dc) : on_mask(on), dc_mask(dc)
    {
        if (on_mask & dc_mask)
            throw domain_error("on-set and don't-care set overlap");
    }

    static constexpr minimize_spec from_minterms(std::initializer_list<int> on,
                                                 std::initializer_list<int> dc = {})
    {
        std::uint16_t on_m = 0, dc_m = 0;
        for (int m : on)
            on_m |= std::uint16_t(1u << input4(m).value());
        for (int m : dc)
            dc_m |= std::uint16_t(1u << input4(m).value());
        return {on_m, dc_m};
    }

    constexpr std::uint16_t off_mask() const
    {
        return static_cast<std::uint16_t>(~(on_mask | dc_mask));
    }

    constexpr bool operator==(minimize_spec const&) const = default;
};

/// Don't-care mask for the ten-numeral decoder: inputs 10..15.
inline constexpr std::uint16_t decoder_dc_mask = 0xFC00;

/// A cube together with the exact set of inputs it covers.
struct implicant {
    cube c;
    std::uint16_t covered = 0;

    static constexpr implicant of(cube c) { return {c, c.coverage()}; }

    constexpr bool operator==(implicant const&) const = default;
};

namespace detail {

// One Quine-McCluskey merge pass: cubes differing in exactly one cared
// bit combine into the cube with that bit freed.
inline std::vector<cube> qm_merge(std::vector<cube> const& level, std::vector<bool>& merged)
{
    std::vector<cube> next;
    merged.assign(level.size(), false);
    for (std::size_t i = 0; i < level.size(); ++i) {
        for (std::size_t j = i + 1; j < level.size(); ++j) {
            if (level[i].care() != level[j].care())
                continue;
            std::uint8_t diff = level[i].value() ^ level[j].value();
            if (diff == 0 || (diff & (diff - 1)) != 0)
                continue;
            merged[i] = merged[j] = true;
            cube combined = cube::from_masks(level[i].care() & ~diff, level[i].value());
            if (std::find(next.begin(), next.end(), combined) == next.end())
                next.push_back(combined);
        }
    }
    return next;
}

} // namespace detail

/// All prime implicants of on ∪ dc that cover at least one on-set input,
/// in canonical cube order.
inline std::vector<implicant> prime_implicants(minimize_spec const& spec)
{
    std::uint16_t lit = spec.on_mask | spec.dc_mask;
    std::vector<cube> level;
    for (int m = 0; m < 16; ++m)
        if (lit & (1u << m))
            level.push_back(cube::minterm(input4(m)));

    std::vector<cube> primes;
    while (!level.empty()) {
        std::vector<bool> merged;
        std::vector<cube> next = detail::qm_merge(level, merged);
        for (std::size_t i = 0; i < level.size(); ++i)
            if (!merged[i])
                primes.push_back(level[i]);
        level = std::move(next);
    }

    std::vector<implicant> out;
    for (cube c : primes)
        if (c.coverage() & spec.on_mask)
            out.push_back(implicant::of(c));
    std::sort(out.begin(), out.end(), [](implicant const& a, implicant const& b) { return a.c < b.c; });
    return out;
}

/// 1 iff the expression is 1 on every on-set input and 0 on every off-set
/// input (don't-cares are unconstrained).
inline bool verify_cover(sop_expr const& expr, minimize_spec const& spec)
{
    std::uint16_t cov = sop_coverage(expr);
    return (cov & spec.on_mask) == spec.on_mask && (cov & spec.off_mask()) == 0;
}

namespace detail {

// Petrick candidate: a set of prime indices. 96 bits is comfortably more
// than the number of cubes over four variables.
using prime_selection = std::bitset<96>;

inline void absorb(std::vector<prime_selection>& sums)
{
    std::vector<prime_selection> kept;
    for (auto const& s : sums) {
        bool absorbed = false;
        for (auto const& k : kept)
            if ((k & s) == k) { absorbed = true; break; }
        if (absorbed)
            continue;
        std::erase_if(kept, [&](prime_selection const& k) { return (s & k) == s && k != s; });
        kept.push_back(s);
    }
    sums = std::move(kept);
}

} // namespace detail

/// Exact two-level minimization: Quine-McCluskey prime generation plus a
/// Petrick product-of-sums expansion over the covering constraints.
/// Cost order: fewest cubes, then fewest literals, then canonical cube
/// order, so identical specs always yield the identical expression.
inline sop_expr minimize(minimize_spec const& spec)
{
    if (spec.on_mask == 0)
        return {}; // constant 0

    std::vector<implicant> primes = prime_implicants(spec);

    // Product of sums: one clause per on-set minterm.
    std::vector<detail::prime_selection> clauses;
    for (int m = 0; m < 16; ++m) {
        if (!(spec.on_mask & (1u << m)))
            continue;
        detail::prime_selection clause;
        for (std::size_t p = 0; p < primes.size(); ++p)
            if (primes[p].covered & (1u << m))
                clause.set(p);
        if (std::find(clauses.begin(), clauses.end(), clause) == clauses.end())
            clauses.push_back(clause);
    }
    std::sort(clauses.begin(), clauses.end(),
              [](auto const& a, auto const& b) { return a.count() < b.count(); });

    // Expand the product, absorbing dominated selections as we go.
    std::vector<detail::prime_selection> sums = {detail::prime_selection{}};
    for (auto const& clause : clauses) {
        std::vector<detail::prime_selection> next;
        for (auto const& partial : sums)
            for (std::size_t p = 0; p < primes.size(); ++p)
                if (clause.test(p)) {
                    detail::prime_selection grown = partial;
                    grown.set(p);
                    next.push_back(grown);
                }
        detail::absorb(next);
        sums.swap(next);
    }

    auto cubes_of = [&](detail::prime_selection const& sel) {
        std::vector<cube> cubes;
        for (std::size_t p = 0; p < primes.size(); ++p)
            if (sel.test(p))
                cubes.push_back(primes[p].c);
        std::sort(cubes.begin(), cubes.end());
        return cubes;
    };
    auto literal_total = [](std::vector<cube> const& cubes) {
        int n = 0;
        for (cube c : cubes)
            n += c.literal_count();
        return n;
    };

    std::vector<cube> best;
    int best_lits = 0;
    bool have_best = false;
    for (auto const& sel : sums) {
        std::vector<cube> cand = cubes_of(sel);
        int lits = literal_total(cand);
        bool better = !have_best || cand.size() < best.size() ||
                      (cand.size() == best.size() && lits < best_lits) ||
                      (cand.size() == best.size() && lits == best_lits &&
                       std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end()));
        if (better) {
            best = std::move(cand);
            best_lits = lits;
            have_best = true;
        }
    }

    sop_expr out;
    out.cubes = std::move(best);
    return out;
}

} // namespace segdec
