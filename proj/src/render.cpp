#include "eqbilliards/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqbilliards::svg {

namespace {

std::string num(double v) {
    if (!std::isfinite(v)) {
        throw std::domain_error("non-finite SVG coordinate");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);  // no "-0.000000"
    std::string s(buf);
    return s == "-0.000000" ? "0.000000" : s;
}

std::string points_attr(const std::vector<CartesianPoint>& pts, bool close) {
    std::string out;
    auto emit = [&out](const CartesianPoint& p) {
        if (!out.empty()) out += ' ';
        out += num(p.x) + "," + num(-p.y);
    };
    for (const auto& p : pts) emit(p);
    if (close && !pts.empty()) emit(pts.front());
    return out;
}

std::string style_attrs(const Style& s, const std::string& role) {
    std::string out;
    if (!role.empty()) out += " class=\"" + role + "\"";
    out += " fill=\"" + s.fill + "\"";
    if (s.fill != "none" && s.fill_opacity < 1.0) out += " fill-opacity=\"" + num(s.fill_opacity) + "\"";
    out += " stroke=\"" + s.stroke + "\"";
    if (s.stroke != "none") out += " stroke-width=\"" + num(s.stroke_width) + "\"";
    return out;
}

template <typename F>
void for_each_point(const Shape& shape, F&& f) {
    std::visit(
        [&f](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Polygon> || std::is_same_v<T, Polyline>) {
                for (const auto& p : s.points) f(p, 0.0);
            } else if constexpr (std::is_same_v<T, Line>) {
                f(s.from, 0.0);
                f(s.to, 0.0);
            } else {
                f(s.center, s.radius);
            }
        },
        shape);
}

}  // namespace

void Document::add(Shape shape, Style style, std::string role) {
    for_each_point(shape, [](const CartesianPoint& p, double) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::domain_error("non-finite SVG coordinate");
        }
    });
    elements_.push_back({std::move(shape), std::move(style), std::move(role)});
}

std::size_t Document::count(std::string_view role) const {
    return static_cast<std::size_t>(std::count_if(
        elements_.begin(), elements_.end(), [role](const Element& e) { return e.role == role; }));
}

std::vector<const Element*> Document::with_role(std::string_view role) const {
    std::vector<const Element*> out;
    for (const auto& e : elements_) {
        if (e.role == role) out.push_back(&e);
    }
    return out;
}

Document::ViewBox Document::view_box() const {
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
    double hi_x = -lo_x, hi_y = -lo_x;
    for (const auto& e : elements_) {
        for_each_point(e.shape, [&](const CartesianPoint& p, double r) {
            lo_x = std::min(lo_x, p.x - r);
            hi_x = std::max(hi_x, p.x + r);
            lo_y = std::min(lo_y, -p.y - r);
            hi_y = std::max(hi_y, -p.y + r);
        });
    }
    if (elements_.empty()) {
        return {0.0, 0.0, 1.0, 1.0};
    }
    const double w = std::max(hi_x - lo_x, 1e-9);
    const double h = std::max(hi_y - lo_y, 1e-9);
    return {lo_x - 0.05 * w, lo_y - 0.05 * h, 1.1 * w, 1.1 * h};
}

std::string Document::serialize() const {
    const ViewBox vb = view_box();
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""
        << " width=\"" << num(vb.width * scale_) << "\" height=\"" << num(vb.height * scale_) << "\""
        << " viewBox=\"" << num(vb.x) << " " << num(vb.y) << " " << num(vb.width) << " "
        << num(vb.height) << "\">\n";
    for (const auto& e : elements_) {
        const std::string attrs = style_attrs(e.style, e.role);
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, Polygon>) {
                    out << "  <polygon points=\"" << points_attr(s.points, false) << "\"" << attrs << "/>\n";
                } else if constexpr (std::is_same_v<T, Polyline>) {
                    out << "  <polyline points=\"" << points_attr(s.points, s.closed) << "\"" << attrs
                        << " stroke-linejoin=\"round\"/>\n";
                } else if constexpr (std::is_same_v<T, Line>) {
                    out << "  <line x1=\"" << num(s.from.x) << "\" y1=\"" << num(-s.from.y) << "\" x2=\""
                        << num(s.to.x) << "\" y2=\"" << num(-s.to.y) << "\"" << attrs << "/>\n";
                } else {
                    out << "  <circle cx=\"" << num(s.center.x) << "\" cy=\"" << num(-s.center.y)
                        << "\" r=\"" << num(s.radius) << "\"" << attrs << "/>\n";
                }
            },
            e.shape);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace eqbilliards::svg

namespace eqbilliards {

namespace {

svg::Style stroke_style(const std::string& color, double width) {
    return {color, width, "none", 1.0};
}

svg::Style fill_style(const std::string& color, double opacity = 1.0) {
    return {"none", 0.0, color, opacity};
}

// Cartesian corners of the unit cell (i - b, j) split along its left-leaning
// diagonal.
std::array<std::vector<CartesianPoint>, 2> cell_triangles(const Rational& b, std::int64_t i,
                                                          std::int64_t j) {
    const auto corner = [&b, i, j](std::int64_t di, std::int64_t dj) {
        return to_cartesian(RhombicPoint{Rational(i + di) - b, Rational(j + dj)});
    };
    return {std::vector<CartesianPoint>{corner(0, 0), corner(1, 0), corner(0, 1)},
            std::vector<CartesianPoint>{corner(1, 0), corner(1, 1), corner(0, 1)}};
}

}  // namespace

svg::Document render_folded(const BouncePath& path, const RenderOptions& options) {
    if (!path.closed) {
        throw std::invalid_argument("render_folded needs a closed path");
    }
    const TriangleConfig cfg(path.offset, MidpointPolicy::Allow);
    svg::Document doc(options.scale);
    doc.add(svg::Polygon{{to_cartesian(cfg.vertex_b()), to_cartesian(cfg.vertex_c()),
                          to_cartesian(cfg.vertex_a())}},
            stroke_style(options.outline_color, options.outline_width), "triangle");

    svg::Polyline orbit{{}, true};
    for (const Bounce& b : path.bounces) orbit.points.push_back(to_cartesian(b.point));
    if (options.mark_points) {
        for (const auto& p : orbit.points) {
            doc.add(svg::Circle{p, options.marker_radius}, fill_style(options.orbit_color), "bounce");
        }
    }
    doc.add(std::move(orbit), stroke_style(options.orbit_color, options.orbit_width), "orbit");
    return doc;
}

svg::Document render_folded(const OrbitClass& c, const RenderOptions& options) {
    const TriangleConfig cfg(default_offset(c));
    const auto n = static_cast<std::size_t>(period(c));
    return render_folded(simulate(cfg, class_start(c), {.max_bounces = n, .stop_on_return = false}),
                         options);
}

std::vector<TileCell> unfolding_tiles(const TriangleConfig& cfg, const OrbitClass& c) {
    const RhombicVector seg{c.x(), c.y()};
    std::set<TileCell> cells;
    for (const Crossing& crossing : segment_crossings(cfg, c)) {
        if (crossing.line.family != LineFamily::Left) continue;
        const RhombicPoint p = RhombicPoint{0, 0} + crossing.t * seg;
        cells.insert({static_cast<std::int64_t>((p.x + cfg.offset()).floor()),
                      static_cast<std::int64_t>(p.y.floor())});
    }
    return {cells.begin(), cells.end()};
}

svg::Document render_unfolded(const OrbitClass& c, const RenderOptions& options) {
    const TriangleConfig cfg(default_offset(c));
    const Rational& b = cfg.offset();
    const auto tiles = unfolding_tiles(cfg, c);
    const auto crossings = segment_crossings(cfg, c);

    std::int64_t i_lo = 0, i_hi = 0, j_lo = 0, j_hi = 0;
    for (const auto& t : tiles) {
        i_lo = std::min(i_lo, t.i);
        i_hi = std::max(i_hi, t.i);
        j_lo = std::min(j_lo, t.j);
        j_hi = std::max(j_hi, t.j);
    }

    svg::Document doc(options.scale);
    for (const auto& t : tiles) {
        const auto tri = cell_triangles(b, t.i, t.j);
        std::vector<CartesianPoint> rhombus{tri[0][0], tri[0][1], tri[1][1], tri[0][2]};
        doc.add(svg::Polygon{std::move(rhombus)}, fill_style(options.tile_color, options.tile_opacity),
                "tile");
    }
    for (std::int64_t j = j_lo; j <= j_hi; ++j) {
        for (std::int64_t i = i_lo - 1; i <= i_hi + 1; ++i) {
            for (auto& tri : cell_triangles(b, i, j)) {
                doc.add(svg::Polygon{std::move(tri)}, stroke_style(options.grid_color, options.grid_width),
                        "grid");
            }
        }
    }
    doc.add(svg::Polygon{{to_cartesian(cfg.vertex_b()), to_cartesian(cfg.vertex_c()),
                          to_cartesian(cfg.vertex_a())}},
            stroke_style(options.outline_color, options.outline_width), "triangle");
    doc.add(svg::Line{to_cartesian(RhombicPoint{0, 0}), to_cartesian(RhombicPoint{c.x(), c.y()})},
            stroke_style(options.segment_color, options.segment_width), "segment");
    if (options.mark_points) {
        const RhombicVector seg{c.x(), c.y()};
        for (const Crossing& crossing : crossings) {
            doc.add(svg::Circle{to_cartesian(RhombicPoint{0, 0} + crossing.t * seg), options.marker_radius},
                    fill_style(options.segment_color), "crossing");
        }
    }
    return doc;
}

}  // namespace eqbilliards
