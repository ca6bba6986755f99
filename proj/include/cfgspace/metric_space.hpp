#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfgspace/cfg_ring.hpp"

namespace cfgspace {

/// Point of A^n: a tuple of ring elements over one ring.
class Point {
public:
    Point(RingSpec spec, std::vector<RingElem> coords);

    static Point zero(const RingSpec& spec, int n);
    /// Convenience for n = 1.
    static Point of(const RingElem& x) { return Point(x.spec(), {x}); }

    const RingSpec& spec() const { return spec_; }
    int n() const { return static_cast<int>(coords_.size()); }
    const std::vector<RingElem>& coords() const { return coords_; }
    const RingElem& coord(int i) const { return coords_.at(static_cast<std::size_t>(i)); }

    std::string str() const;

    friend Point operator+(const Point& x, const Point& y);
    friend Point operator-(const Point& x, const Point& y);

    friend bool operator==(const Point& x, const Point& y) {
        return x.spec_ == y.spec_ && x.coords_ == y.coords_;
    }
    friend bool operator!=(const Point& x, const Point& y) { return !(x == y); }
    friend bool operator<(const Point& x, const Point& y);

private:
    RingSpec spec_;
    std::vector<RingElem> coords_;
};

/// The modular metric on A^n: the join over coordinates of e(x_i - y_i).
/// Distances take values in B(A) = 2^Omega.
BoolElem dist(const Point& x, const Point& y);

/// Componentwise masking of a whole point: coordinate-wise scalar_act.
Point scalar_act(const BoolElem& a, const Point& x);

/// A pointed CFG-space: the convex closure of {base} U generators inside
/// A^n, or the distinguished empty space. Membership, referentials and the
/// isometry invariants are computed by the span module.
class PointedSpace {
public:
    PointedSpace(Point base, std::vector<Point> generators);

    static PointedSpace empty_space(const RingSpec& spec, int n);
    /// A^n itself: base 0 and the grid of constant-tuple products, which
    /// generates the whole module under convex closure.
    static PointedSpace ambient(const RingSpec& spec, int n);

    bool is_empty() const { return !base_.has_value(); }
    const Point& base() const;
    const std::vector<Point>& generators() const;
    const RingSpec& spec() const { return spec_; }
    int n() const { return n_; }

    /// base and generators in one list; members are exactly the convex
    /// combinations of these.
    std::vector<Point> points() const;

private:
    PointedSpace(RingSpec spec, int n) : spec_(spec), n_(n) {}

    RingSpec spec_;
    int n_;
    std::optional<Point> base_;
    std::vector<Point> generators_;
};

/// |x| = d(base, x).
BoolElem norm(const PointedSpace& space, const Point& x);

/// The convex combination sum a_i x_i for a complete disjoint coefficient
/// family; the unique point r with a_i . d(r, x_i) = 0 for all i.
Point convex_combination(const std::vector<Point>& points, const Partition& coeffs);

/// a . x relative to the base point: a x + (complement a) base.
Point act(const PointedSpace& space, const BoolElem& a, const Point& x);

/// x * y = (complement d(x, y)) . x, relative to the base point.
Point star(const PointedSpace& space, const Point& x, const Point& y);

/// x and y are orthogonal when x * y is the base point, equivalently when
/// d(x, y) = |x| \/ |y|. Both characterizations are computed and must agree.
bool is_orthogonal(const PointedSpace& space, const Point& x, const Point& y);

} // namespace cfgspace
