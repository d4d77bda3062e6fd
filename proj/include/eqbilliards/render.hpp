// SVG figures of folded orbits and their unfoldings.

#pragma once

#include "eqbilliards/billiard.hpp"
#include "eqbilliards/rhombic.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace eqbilliards::svg {

struct Style {
    std::string stroke = "none";
    double stroke_width = 0.0;
    std::string fill = "none";
    double fill_opacity = 1.0;
};

struct Polygon {
    std::vector<CartesianPoint> points;
};

/// Closed polylines are written with their first point repeated at the end.
struct Polyline {
    std::vector<CartesianPoint> points;
    bool closed = false;
};

struct Line {
    CartesianPoint from;
    CartesianPoint to;
};

struct Circle {
    CartesianPoint center;
    double radius = 0.0;
};

using Shape = std::variant<Polygon, Polyline, Line, Circle>;

struct Element {
    Shape shape;
    Style style;
    /// Written as the SVG class attribute.
    std::string role;
};

class Document {
public:
    /// Pixels per triangle side in the written width/height.
    explicit Document(double scale = 200.0) : scale_(scale) {}

    void add(Shape shape, Style style, std::string role);

    const std::vector<Element>& elements() const { return elements_; }
    std::size_t count(std::string_view role) const;
    std::vector<const Element*> with_role(std::string_view role) const;

    /// Bounding box of all shapes grown by 5% per side, in SVG user units
    /// (y pointing down).
    struct ViewBox {
        double x, y, width, height;
    };
    ViewBox view_box() const;

    /// SVG 1.1 text. Coordinates use six decimals, y flipped.
    std::string serialize() const;

private:
    double scale_;
    std::vector<Element> elements_;
};

}  // namespace eqbilliards::svg

namespace eqbilliards {

/// Defaults give black outlines, a red orbit and pale blue tiles.
struct RenderOptions {
    double scale = 200.0;
    std::string outline_color = "#000000";
    double outline_width = 0.008;
    std::string orbit_color = "#c0392b";
    double orbit_width = 0.006;
    std::string grid_color = "#9e9e9e";
    double grid_width = 0.003;
    std::string tile_color = "#aed6f1";
    double tile_opacity = 0.6;
    std::string segment_color = "#1a5276";
    double segment_width = 0.008;
    double marker_radius = 0.012;
    bool mark_points = true;
};

/// Triangle outline and the closed bounce polyline, one vertex per bounce.
/// Throws std::invalid_argument for a path that is not closed.
svg::Document render_folded(const BouncePath& path, const RenderOptions& options = {});

/// Simulates c from its default offset over one full period and renders it.
svg::Document render_folded(const OrbitClass& c, const RenderOptions& options = {});

/// A rhombic tile of the unfolding: the unit cell with lower-left corner
/// (i - b, j) in rhombic coordinates.
struct TileCell {
    std::int64_t i;
    std::int64_t j;

    friend auto operator<=>(const TileCell&, const TileCell&) = default;
};

/// Tiles crossed by the unfolding (0,0) -> (x,y): each pairs the two
/// tessellation triangles on either side of a left-leaning crossing.
std::vector<TileCell> unfolding_tiles(const TriangleConfig& cfg, const OrbitClass& c);

/// Tessellation patch around the unfolding with the crossed tiles shaded,
/// the segment and its tessellation crossings.
svg::Document render_unfolded(const OrbitClass& c, const RenderOptions& options = {});

}  // namespace eqbilliards
