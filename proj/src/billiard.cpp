#include "eqbilliards/billiard.hpp"

#include <algorithm>

namespace eqbilliards {

namespace {

int side_count_containing(const TriangleConfig& cfg, const RhombicPoint& p, int* last) {
    int count = 0;
    for (int s = 0; s < 3; ++s) {
        if (cfg.side_line(s).contains(p)) {
            ++count;
            if (last) *last = s;
        }
    }
    return count;
}

// Sign of (level - offset) on the triangle's interior side of each side line.
int interior_sign(int side) { return side == 2 ? -1 : 1; }

std::string point_str(const RhombicPoint& p) {
    return "(" + p.x.str() + ", " + p.y.str() + ")";
}

void fill_closure(BouncePath& path) {
    for (std::size_t i = 1; i <= path.bounces.size(); ++i) {
        if (path.state_after(i) == path.start) {
            path.first_return = i;
            break;
        }
    }
    path.closed = !path.bounces.empty() && path.state_after(path.bounces.size()) == path.start;
}

}  // namespace

VertexHit::VertexHit(RhombicPoint point, std::size_t bounce_index)
    : std::runtime_error("trajectory hits a vertex at " + point_str(point) + " (bounce " +
                         std::to_string(bounce_index) + ")"),
      point_(std::move(point)),
      bounce_index_(bounce_index) {}

TriangleConfig::TriangleConfig(Rational b, MidpointPolicy policy) : b_(std::move(b)) {
    if (b_.sign() <= 0 || b_ >= Rational(1)) {
        throw std::invalid_argument("offset b must lie strictly between 0 and 1, got " + b_.str());
    }
    if (policy == MidpointPolicy::Reject && b_ == Rational(1, 2)) {
        throw std::invalid_argument("offset b = 1/2 places O at the midpoint of BC");
    }
}

GridLine TriangleConfig::side_line(int label) const {
    switch (label) {
        case 0: return {LineFamily::Horizontal, 0};
        case 1: return {LineFamily::Right, -b_};
        case 2: return {LineFamily::Left, 1 - b_};
        default: throw std::out_of_range("side label must be 0, 1 or 2");
    }
}

bool TriangleConfig::contains(const RhombicPoint& p) const {
    for (int s = 0; s < 3; ++s) {
        const GridLine line = side_line(s);
        if (interior_sign(s) * (line.level(p) - line.offset).sign() < 0) return false;
    }
    return true;
}

bool TriangleConfig::is_vertex(const RhombicPoint& p) const {
    return side_count_containing(*this, p, nullptr) >= 2;
}

std::optional<int> TriangleConfig::side_of(const RhombicPoint& p) const {
    if (!contains(p)) return std::nullopt;
    int side = -1;
    if (side_count_containing(*this, p, &side) != 1) return std::nullopt;
    return side;
}

RhombicVector normalize_direction(const RhombicVector& v) {
    if (v.is_zero()) {
        throw std::invalid_argument("direction must be nonzero");
    }
    const BigInt den = boost::multiprecision::lcm(v.dx.denominator(), v.dy.denominator());
    BigInt a = v.dx.numerator() * (den / v.dx.denominator());
    BigInt b = v.dy.numerator() * (den / v.dy.denominator());
    const BigInt g = boost::multiprecision::gcd(abs(a), abs(b));
    return {Rational(a / g, BigInt(1)), Rational(b / g, BigInt(1))};
}

BallState BouncePath::state_after(std::size_t count) const {
    if (count == 0) return start;
    const Bounce& last = bounces.at(count - 1);
    return {last.point, last.dir_after};
}

Rational default_offset(const OrbitClass& c) { return Rational(1, 2 * c.y() + 1); }

Rational alternate_offset(const OrbitClass& c) { return Rational(1, 2 * c.y() + 3); }

std::set<Rational> singular_offsets(const OrbitClass& c) {
    std::set<Rational> out;
    // The unfolding meets y = j at x = j x / y; a vertex sits there when that
    // equals m - b for an integer m.
    for (std::int64_t j = 1; j < c.y(); ++j) {
        Rational b = (-Rational(j * c.x(), c.y())).frac();
        if (!b.is_zero()) out.insert(std::move(b));
    }
    return out;
}

BallState class_start(const OrbitClass& c) {
    return {RhombicPoint{0, 0}, normalize_direction(RhombicVector{c.x(), c.y()})};
}

BouncePath simulate(const TriangleConfig& cfg, const BallState& start,
                    const SimulateOptions& options) {
    if (start.dir.is_zero()) {
        throw NotOnBoundary("start direction is zero");
    }
    const auto side = cfg.side_of(start.pos);
    if (!side) {
        throw NotOnBoundary("start " + point_str(start.pos) + " is not inside a side");
    }
    if (interior_sign(*side) * family_form(cfg.side_line(*side).family, start.dir).sign() <= 0) {
        throw NotOnBoundary("start direction does not point into the triangle");
    }

    BouncePath path;
    path.offset = cfg.offset();
    path.start = {start.pos, normalize_direction(start.dir)};

    const std::size_t cap = std::min(options.max_bounces, kHardBounceCap);
    RhombicPoint pos = path.start.pos;
    RhombicVector dir = path.start.dir;
    while (path.bounces.size() < cap) {
        std::optional<Rational> best;
        int hit_side = -1;
        bool tie = false;
        for (int s = 0; s < 3; ++s) {
            const GridLine line = cfg.side_line(s);
            const Rational rate = family_form(line.family, dir);
            if (rate.is_zero()) continue;
            Rational t = (line.offset - line.level(pos)) / rate;
            if (t.sign() <= 0) continue;
            if (!best || t < *best) {
                best = std::move(t);
                hit_side = s;
                tie = false;
            } else if (t == *best) {
                tie = true;
            }
        }
        if (!best) {
            throw NotOnBoundary("ray leaves the triangle without meeting a side");
        }
        RhombicPoint hit = pos + (*best) * dir;
        if (tie) {
            throw VertexHit(std::move(hit), path.bounces.size() + 1);
        }
        const LineFamily family = cfg.side_line(hit_side).family;
        ExactAngle incidence = ExactAngle::between(dir, family_direction(family));
        dir = normalize_direction(reflect_direction(family, dir));
        pos = hit;
        path.bounces.push_back({std::move(hit), hit_side, std::move(incidence), dir});

        if (!path.first_return && pos == path.start.pos && dir == path.start.dir) {
            path.first_return = path.bounces.size();
            if (options.stop_on_return) break;
        }
    }
    path.closed = !path.bounces.empty() && path.state_after(path.bounces.size()) == path.start;
    return path;
}

std::vector<Crossing> segment_crossings(const TriangleConfig& cfg, const OrbitClass& c) {
    const RhombicVector seg{c.x(), c.y()};
    std::vector<Crossing> out;
    for (LineFamily family : kLineFamilies) {
        const Rational rate = family_form(family, seg);
        if (rate.is_zero()) continue;
        // Horizontal lines sit at integers, the other two families at m - b.
        const Rational shift = family == LineFamily::Horizontal ? Rational(0) : -cfg.offset();
        const std::int64_t lines = static_cast<std::int64_t>(rate.floor()) + 1;
        for (std::int64_t m = 0; m <= lines; ++m) {
            Rational level = Rational(m) + shift;
            if (level.sign() <= 0 || level > rate) continue;
            out.push_back({level / rate, GridLine{family, level}});
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].t == out[i - 1].t) {
            throw VertexHit(RhombicPoint{0, 0} + out[i].t * seg, i);
        }
    }
    return out;
}

BouncePath fold_segment(const TriangleConfig& cfg, const OrbitClass& c) {
    const RhombicVector seg{c.x(), c.y()};
    BouncePath path;
    path.offset = cfg.offset();
    path.start = class_start(c);

    // Maps the tessellation triangle currently holding the segment back onto
    // the base triangle.
    Isometry fold = Isometry::identity();
    for (const Crossing& crossing : segment_crossings(cfg, c)) {
        RhombicPoint point = fold.apply(RhombicPoint{0, 0} + crossing.t * seg);
        const auto side = cfg.side_of(point);
        if (!side) {
            throw VertexHit(std::move(point), path.bounces.size() + 1);
        }
        const RhombicVector incoming = fold.apply(seg);
        const LineFamily family = cfg.side_line(*side).family;
        ExactAngle incidence = ExactAngle::between(incoming, family_direction(family));
        fold = fold.compose(Isometry::reflection(crossing.line));
        path.bounces.push_back(
            {std::move(point), *side, std::move(incidence), normalize_direction(fold.apply(seg))});
    }
    fill_closure(path);
    return path;
}

RhombicPoint unfold(const BouncePath& path) {
    const TriangleConfig cfg(path.offset, MidpointPolicy::Allow);
    const RhombicPoint& origin = path.start.pos;
    const RhombicVector& heading = path.start.dir;

    Isometry unfolding = Isometry::identity();
    RhombicPoint end = origin;
    Rational last_t = 0;
    for (std::size_t i = 0; i < path.bounces.size(); ++i) {
        const Bounce& bounce = path.bounces[i];
        end = unfolding.apply(bounce.point);
        const RhombicVector offset = end - origin;
        if (!cross(offset, heading).is_zero()) {
            throw CollinearityViolation("unfolded bounce " + std::to_string(i + 1) +
                                        " leaves the launch line");
        }
        const Rational t = dot(offset, heading) / norm_squared(heading);
        if (t <= last_t) {
            throw CollinearityViolation("unfolded bounce " + std::to_string(i + 1) +
                                        " does not advance along the launch line");
        }
        last_t = t;
        unfolding = unfolding.compose(Isometry::reflection(cfg.side_line(bounce.side)));
    }
    return {end.x - origin.x, end.y - origin.y};
}

BouncePath simulate_fagnano(std::int64_t k) {
    if (k < 1) {
        throw std::invalid_argument("Fagnano iterate index k must be >= 1");
    }
    const TriangleConfig cfg(Rational(1, 3));
    const BallState start{RhombicPoint{Rational(1, 2) - cfg.offset(), 0}, RhombicVector{0, 1}};
    return simulate(cfg, start,
                    {.max_bounces = static_cast<std::size_t>(3 * (2 * k - 1)),
                     .stop_on_return = false});
}

std::vector<int> bounce_labels(const BouncePath& path) {
    if (!path.closed || !path.first_return) {
        throw std::invalid_argument("bounce labels need a closed path");
    }
    std::vector<int> labels;
    labels.reserve(*path.first_return);
    for (std::size_t i = 0; i < *path.first_return; ++i) {
        labels.push_back(path.bounces[i].side);
    }
    return labels;
}

std::vector<ExactAngle> distinct_angles(const BouncePath& path) {
    std::vector<ExactAngle> out;
    for (const Bounce& b : path.bounces) out.push_back(b.incidence);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerificationReport verify_class(const OrbitClass& c, const VerifyOptions& options) {
    const Rational b = options.offset.value_or(default_offset(c));
    const TriangleConfig cfg(b, MidpointPolicy::Allow);
    const std::int64_t expected = period(c);
    const Decomposition dec = iterate_decomposition(c);
    const std::size_t cap = options.max_bounces.value_or(static_cast<std::size_t>(2 * expected + 8));

    BouncePath path = simulate(cfg, class_start(c),
                               {.max_bounces = std::min<std::size_t>(cap, expected),
                                .stop_on_return = false});

    VerificationReport report{c, b, expected, dec.d, std::move(path), {}, {}, {}, {}};
    const BouncePath& p = report.path;
    auto check = [&report](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    check("closure", p.closed && p.bounce_count() == static_cast<std::size_t>(expected),
          std::to_string(p.bounce_count()) + " bounces, expected " + std::to_string(expected));

    const std::size_t fundamental = static_cast<std::size_t>(expected / dec.d);
    check("fundamental_period", p.first_return == fundamental,
          "first return at " + (p.first_return ? std::to_string(*p.first_return) : "none") +
              ", expected " + std::to_string(fundamental));

    report.angles = distinct_angles(p);
    const auto expected_angles = angle_profile(c).distinct();
    check("angle_profile", report.angles == expected_angles,
          std::to_string(report.angles.size()) + " distinct angles");
    check("at_most_three_angles", report.angles.size() <= 3,
          std::to_string(report.angles.size()) + " distinct angles");
    const auto in_range = std::count_if(report.angles.begin(), report.angles.end(),
                                        [](const ExactAngle& a) { return a.in_representation_range(); });
    check("one_angle_in_30_60", in_range == 1, std::to_string(in_range) + " in [30,60]");

    if (p.closed) {
        report.labels = bounce_labels(p);
    }
    try {
        report.unfolded_end = unfold(p);
        check("unfolding", report.unfolded_end == RhombicPoint{c.x(), c.y()},
              "ends at " + point_str(report.unfolded_end));
    } catch (const CollinearityViolation& e) {
        check("unfolding", false, e.what());
    }
    return report;
}

}  // namespace eqbilliards
