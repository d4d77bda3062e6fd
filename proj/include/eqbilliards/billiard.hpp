// Exact-arithmetic billiard simulation on the equilateral triangle.
//
// The triangle is embedded in rhombic coordinates with its base on y = 0
// and the launch point O at the origin:
//
//   B = (-b, 0)   C = (1 - b, 0)   A = (-b, 1)
//
// Sides carry fixed labels: 0 is BC (y = 0), 1 is AB (x = -b) and 2 is
// AC (x + y = 1 - b). The tessellation generated by reflecting the
// triangle has lines y = j, x = m - b and x + y = m - b for integers j, m.
//
// Positions are exact rationals and directions coprime integer pairs, so
// closure is detected by plain equality.

#pragma once

#include "eqbilliards/angle.hpp"
#include "eqbilliards/orbits.hpp"
#include "eqbilliards/rhombic.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqbilliards {

/// The trajectory reached a corner of the triangle.
class VertexHit : public std::runtime_error {
public:
    VertexHit(RhombicPoint point, std::size_t bounce_index);

    const RhombicPoint& point() const { return point_; }
    std::size_t bounce_index() const { return bounce_index_; }

private:
    RhombicPoint point_;
    std::size_t bounce_index_;
};

class NotOnBoundary : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CollinearityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class MidpointPolicy { Reject, Allow };

class TriangleConfig {
public:
    /// Requires 0 < b < 1. b = 1/2 puts O at the midpoint of BC and is
    /// rejected unless the policy allows it.
    explicit TriangleConfig(Rational b, MidpointPolicy policy = MidpointPolicy::Reject);

    const Rational& offset() const { return b_; }

    RhombicPoint vertex_a() const { return {-b_, 1}; }
    RhombicPoint vertex_b() const { return {-b_, 0}; }
    RhombicPoint vertex_c() const { return {1 - b_, 0}; }

    /// The line carrying side 0, 1 or 2.
    GridLine side_line(int label) const;

    /// Label of the side containing p; nullopt if p is on no side or is a
    /// corner.
    std::optional<int> side_of(const RhombicPoint& p) const;

    bool is_vertex(const RhombicPoint& p) const;

    bool contains(const RhombicPoint& p) const;

private:
    Rational b_;
};

struct BallState {
    RhombicPoint pos;
    RhombicVector dir;

    friend bool operator==(const BallState&, const BallState&) = default;
};

/// Scales a nonzero rational direction to the coprime integer pair with the
/// same orientation.
RhombicVector normalize_direction(const RhombicVector& v);

struct Bounce {
    RhombicPoint point;
    int side;
    ExactAngle incidence;
    RhombicVector dir_after;
};

struct BouncePath {
    Rational offset;
    BallState start;
    std::vector<Bounce> bounces;
    /// The state after the last bounce equals `start`.
    bool closed = false;
    /// Bounce count at which the state first returned to `start`.
    std::optional<std::size_t> first_return;

    std::size_t bounce_count() const { return bounces.size(); }
    BallState state_after(std::size_t count) const;
};

inline constexpr std::size_t kHardBounceCap = 1'000'000;

struct SimulateOptions {
    std::size_t max_bounces = kHardBounceCap;
    /// Stop at the first return to the start state. When false the ball is
    /// traced for exactly max_bounces bounces.
    bool stop_on_return = true;
};

/// b = 1/(2y + 1); never singular for c.
Rational default_offset(const OrbitClass& c);

/// A second nonsingular offset, 1/(2y + 3).
Rational alternate_offset(const OrbitClass& c);

/// Offsets b in (0, 1) for which the unfolding (0,0) -> (x,y) passes through
/// a tessellation vertex.
std::set<Rational> singular_offsets(const OrbitClass& c);

/// Launch state from O in the direction of the class's lattice point.
BallState class_start(const OrbitClass& c);

/// Throws NotOnBoundary if `start` is not on exactly one side pointing
/// inward, VertexHit if the ball reaches a corner.
BouncePath simulate(const TriangleConfig& cfg, const BallState& start,
                    const SimulateOptions& options = {});

/// A tessellation line crossed by the unfolding, at parameter t in (0, 1].
struct Crossing {
    Rational t;
    GridLine line;
};

/// Crossings of the segment (0,0) -> (x,y) with the tessellation, sorted by
/// t. Throws VertexHit if two lines are crossed at the same point.
std::vector<Crossing> segment_crossings(const TriangleConfig& cfg, const OrbitClass& c);

/// Folds the unfolding (0,0) -> (x,y) back into the triangle. The result
/// matches simulate(cfg, class_start(c)) traced for period(c) bounces.
BouncePath fold_segment(const TriangleConfig& cfg, const OrbitClass& c);

/// Reflects each segment of the path across the sides struck so far so that
/// they line up, checks they form one straight directed segment from the
/// start, and returns its endpoint relative to the start.
RhombicPoint unfold(const BouncePath& path);

/// gamma^(2k-1): launched from the midpoint of BC at 60 degrees with
/// b = 1/3, traced for 3(2k-1) bounces.
BouncePath simulate_fagnano(std::int64_t k);

/// Side labels over one fundamental period. Requires a closed path.
std::vector<int> bounce_labels(const BouncePath& path);

/// Distinct incidence angles along the path, ascending.
std::vector<ExactAngle> distinct_angles(const BouncePath& path);

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerificationReport {
    OrbitClass orbit;
    Rational offset;
    std::int64_t expected_period;
    std::int64_t iterate_d;
    BouncePath path;
    std::vector<ExactAngle> angles;
    std::vector<int> labels;
    RhombicPoint unfolded_end;
    std::vector<Check> checks;

    bool passed() const;
};

struct VerifyOptions {
    std::optional<Rational> offset;
    std::optional<std::size_t> max_bounces;
};

/// Traces the class from O and checks period, closure, primitive period,
/// the incidence-angle law and the unfolding endpoint. Simulation errors
/// (VertexHit for a singular offset) propagate.
VerificationReport verify_class(const OrbitClass& c, const VerifyOptions& options = {});

}  // namespace eqbilliards
