#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "segdec/errors.hpp"
#include "segdec/segments.hpp"

namespace segdec {

struct line2d {
    double x1, y1, x2, y2;

    constexpr bool operator==(line2d const&) const = default;
};

inline double length(line2d const& l) { return std::hypot(l.x2 - l.x1, l.y2 - l.y1); }

/// Straight-line placement of the ten segments in a 1.0 x 2.0 glyph box
/// (origin top-left, y grows downward), plus the stroke thickness in box
/// units. Valid geometries have ten equal-length, interior-disjoint lines.
struct segment_geometry {
    std::array<line2d, segment_count> lines;
    double stroke_thickness = 0.08;

    constexpr line2d const& line(segment_id s) const { return lines[ordinal(s)]; }
};

/// a..g sit at the classic seven-segment positions; h, i, j are the
/// diagonals (upper half, lower-left, lower-right), each of unit length
/// like every other segment.
constexpr segment_geometry default_geometry()
{
    return segment_geometry{{{
        {0.0, 0.0, 1.0, 0.0}, // a: top
        {1.0, 0.0, 1.0, 1.0}, // b: top-right
        {1.0, 1.0, 1.0, 2.0}, // c: bottom-right
        {0.0, 2.0, 1.0, 2.0}, // d: bottom
        {0.0, 1.0, 0.0, 2.0}, // e: bottom-left
        {0.0, 0.0, 0.0, 1.0}, // f: top-left
        {0.0, 1.0, 1.0, 1.0}, // g: middle
        {1.0, 0.0, 0.4, 0.8}, // h: upper diagonal, from the a-b corner
        {0.0, 1.0, 0.6, 1.8}, // i: lower diagonal, from the e-f-g junction
        {1.0, 2.0, 0.4, 1.2}, // j: lower diagonal, from the c-d corner
    }}};
}

namespace detail {

constexpr double orient(double ox, double oy, double ax, double ay, double bx, double by)
{
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

// True if the two closed segments share a point interior to both: a proper
// crossing or a collinear overlap of positive length. Touching endpoints
// (including T junctions) is fine.
inline bool interiors_intersect(line2d const& p, line2d const& q)
{
    constexpr double eps = 1e-12;
    double d1 = orient(p.x1, p.y1, p.x2, p.y2, q.x1, q.y1);
    double d2 = orient(p.x1, p.y1, p.x2, p.y2, q.x2, q.y2);
    double d3 = orient(q.x1, q.y1, q.x2, q.y2, p.x1, p.y1);
    double d4 = orient(q.x1, q.y1, q.x2, q.y2, p.x2, p.y2);

    if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
        ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
        return true; // proper crossing

    if (std::abs(d1) <= eps && std::abs(d2) <= eps) {
        // Collinear: overlap of positive length means shared interior.
        bool major_x = std::abs(p.x2 - p.x1) >= std::abs(p.y2 - p.y1);
        auto key = [major_x](double x, double y) { return major_x ? x : y; };
        double plo = std::min(key(p.x1, p.y1), key(p.x2, p.y2));
        double phi = std::max(key(p.x1, p.y1), key(p.x2, p.y2));
        double qlo = std::min(key(q.x1, q.y1), key(q.x2, q.y2));
        double qhi = std::max(key(q.x1, q.y1), key(q.x2, q.y2));
        if (std::min(phi, qhi) - std::max(plo, qlo) > eps)
            return true;
    }
    return false;
}

} // namespace detail

/// Checks the geometry invariants: equal segment lengths (within 1e-9) and
/// pairwise interior-disjoint lines. Throws domain_error naming the first
/// violation.
inline void validate_geometry(segment_geometry const& geom)
{
    double ref = length(geom.lines[0]);
    if (ref <= 0.0)
        throw domain_error("segment a has zero length");
    for (segment_id s : all_segments()) {
        double len = length(geom.line(s));
        if (std::abs(len - ref) > 1e-9)
            throw domain_error(std::string("segment ") + label(s) + " length differs: " +
                               std::to_string(len) + " vs " + std::to_string(ref));
    }
    for (int i = 0; i < segment_count; ++i)
        for (int j = i + 1; j < segment_count; ++j)
            if (detail::interiors_intersect(geom.lines[i], geom.lines[j]))
                throw domain_error(std::string("segments ") + char('a' + i) + " and " +
                                   char('a' + j) + " overlap");
}

struct render_options {
    int glyph_height = 12;  // text rows per glyph / SVG pixel height
    int spacing = 2;        // columns (text) or pixels (SVG) between glyphs
    bool show_ghost = false; // draw unlit segments faintly
    std::string lit_color = "#111111";
    std::string ghost_color = "#cccccc";
};

namespace detail {

// Character for a stroke direction; y grows downward.
inline char stroke_char(line2d const& l)
{
    double dx = l.x2 - l.x1;
    double dy = l.y2 - l.y1;
    if (std::abs(dy) < 1e-9) return '-';
    if (std::abs(dx) < 1e-9) return '|';
    return dx * dy > 0 ? '\\' : '/';
}

inline void raster_line(std::vector<std::string>& grid, line2d const& l, char ch)
{
    int rows = static_cast<int>(grid.size());
    int cols = static_cast<int>(grid[0].size());
    int samples = 4 * std::max(rows, cols);
    for (int s = 0; s <= samples; ++s) {
        double t = static_cast<double>(s) / samples;
        double x = l.x1 + t * (l.x2 - l.x1);
        double y = l.y1 + t * (l.y2 - l.y1);
        int col = std::min(cols - 1, std::max(0, static_cast<int>(x * cols)));
        int row = std::min(rows - 1, std::max(0, static_cast<int>(y / 2.0 * rows)));
        grid[row][col] = ch;
    }
}

// Untrimmed character grid for one glyph: glyph_height rows and columns
// (terminal cells are roughly twice as tall as wide, so a square grid
// shows the 1:2 glyph box at its true aspect).
inline std::vector<std::string> raster_glyph(segment_set pattern, render_options const& opts,
                                             segment_geometry const& geom)
{
    if (opts.glyph_height < 8)
        throw domain_error("text rendering needs a glyph height of at least 8");
    std::vector<std::string> grid(opts.glyph_height, std::string(opts.glyph_height, ' '));
    if (opts.show_ghost)
        for (segment_id s : all_segments())
            if (!pattern.contains(s))
                raster_line(grid, geom.line(s), '.');
    for (segment_id s : all_segments())
        if (pattern.contains(s))
            raster_line(grid, geom.line(s), stroke_char(geom.line(s)));
    return grid;
}

inline std::string join_trimmed(std::vector<std::string> const& grid)
{
    std::string out;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        std::string row = grid[r];
        while (!row.empty() && row.back() == ' ')
            row.pop_back();
        if (r) out += '\n';
        out += row;
    }
    return out;
}

inline std::string fmt_num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace detail

/// Text art for one glyph: a glyph_height-row grid, rows separated by a
/// line feed, trailing spaces trimmed. Lit segments are drawn with -, |,
/// / and \ runs; with show_ghost, unlit segments appear as dots.
inline std::string render_text(segment_set pattern, render_options const& opts = {},
                               segment_geometry const& geom = default_geometry())
{
    return detail::join_trimmed(detail::raster_glyph(pattern, opts, geom));
}

/// Several glyphs side by side, separated by `spacing` blank columns.
inline std::string render_text_row(std::span<segment_set const> patterns,
                                   render_options const& opts = {},
                                   segment_geometry const& geom = default_geometry())
{
    if (patterns.empty())
        return "";
    std::vector<std::vector<std::string>> glyphs;
    for (segment_set p : patterns)
        glyphs.push_back(detail::raster_glyph(p, opts, geom));
    std::vector<std::string> grid(opts.glyph_height);
    for (std::size_t g = 0; g < glyphs.size(); ++g)
        for (int r = 0; r < opts.glyph_height; ++r) {
            if (g) grid[r] += std::string(std::max(0, opts.spacing), ' ');
            grid[r] += glyphs[g][r];
        }
    return detail::join_trimmed(grid);
}

/// SVG document with one group per pattern and one line element per lit
/// segment (plus faint lines for unlit segments when show_ghost is set).
/// Output bytes are a pure function of the arguments.
inline std::string render_svg(std::span<segment_set const> patterns,
                              render_options const& opts = {},
                              segment_geometry const& geom = default_geometry())
{
    double scale = opts.glyph_height / 2.0;
    double width = patterns.empty()
                       ? 0.0
                       : static_cast<double>(patterns.size()) * scale +
                             static_cast<double>(patterns.size() - 1) * opts.spacing;
    double height = opts.glyph_height;

    using detail::fmt_num;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt_num(width) + " " +
           fmt_num(height) + "\" width=\"" + fmt_num(width) + "\" height=\"" + fmt_num(height) +
           "\">\n";

    auto emit_line = [&](line2d const& l, double xoff, std::string const& color) {
        out += "<line x1=\"" + fmt_num(xoff + l.x1 * scale) + "\" y1=\"" + fmt_num(l.y1 * scale) +
               "\" x2=\"" + fmt_num(xoff + l.x2 * scale) + "\" y2=\"" + fmt_num(l.y2 * scale) +
               "\" stroke=\"" + color + "\" stroke-width=\"" +
               fmt_num(geom.stroke_thickness * scale) + "\" stroke-linecap=\"round\"/>\n";
    };

    for (std::size_t g = 0; g < patterns.size(); ++g) {
        double xoff = static_cast<double>(g) * (scale + opts.spacing);
        out += "<g>\n";
        if (opts.show_ghost)
            for (segment_id s : all_segments())
                if (!patterns[g].contains(s))
                    emit_line(geom.line(s), xoff, opts.ghost_color);
        for (segment_id s : all_segments())
            if (patterns[g].contains(s))
                emit_line(geom.line(s), xoff, opts.lit_color);
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace segdec
