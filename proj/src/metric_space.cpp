#include "cfgspace/metric_space.hpp"

#include <sstream>

namespace cfgspace {

namespace {

void require_same_frame(const Point& x, const Point& y) {
    if (x.spec() != y.spec())
        throw DimensionError("points over different rings: " + x.spec().str() + " vs " +
                             y.spec().str());
    if (x.n() != y.n())
        throw DimensionError("points of different ambient dimension: " + std::to_string(x.n()) +
                             " vs " + std::to_string(y.n()));
}

} // namespace

Point::Point(RingSpec spec, std::vector<RingElem> coords) : spec_(spec), coords_(std::move(coords)) {
    if (coords_.empty()) throw DimensionError("a point needs at least one coordinate");
    for (const RingElem& c : coords_)
        if (c.spec() != spec_) throw DimensionError("point coordinates over different rings");
}

Point Point::zero(const RingSpec& spec, int n) {
    if (n < 1) throw DimensionError("ambient dimension must be positive");
    return Point(spec, std::vector<RingElem>(static_cast<std::size_t>(n), RingElem::zero(spec)));
}

std::string Point::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i].str();
    }
    os << ']';
    return os.str();
}

Point operator+(const Point& x, const Point& y) {
    require_same_frame(x, y);
    std::vector<RingElem> out;
    out.reserve(x.coords_.size());
    for (std::size_t i = 0; i < x.coords_.size(); ++i) out.push_back(x.coords_[i] + y.coords_[i]);
    return Point(x.spec_, std::move(out));
}

Point operator-(const Point& x, const Point& y) {
    require_same_frame(x, y);
    std::vector<RingElem> out;
    out.reserve(x.coords_.size());
    for (std::size_t i = 0; i < x.coords_.size(); ++i) out.push_back(x.coords_[i] - y.coords_[i]);
    return Point(x.spec_, std::move(out));
}

bool operator<(const Point& x, const Point& y) {
    if (x.spec_ != y.spec_) return x.spec_.p != y.spec_.p ? x.spec_.p < y.spec_.p
                                                          : x.spec_.omega < y.spec_.omega;
    return x.coords_ < y.coords_;
}

BoolElem dist(const Point& x, const Point& y) {
    require_same_frame(x, y);
    BoolElem d = BoolElem::zero(x.spec().omega);
    for (int i = 0; i < x.n(); ++i) d = join(d, idempotent_of(x.coord(i) - y.coord(i)));
    return d;
}

Point scalar_act(const BoolElem& a, const Point& x) {
    std::vector<RingElem> out;
    out.reserve(x.coords().size());
    for (const RingElem& c : x.coords()) out.push_back(scalar_act(a, c));
    return Point(x.spec(), std::move(out));
}

PointedSpace::PointedSpace(Point base, std::vector<Point> generators)
    : spec_(base.spec()), n_(base.n()), base_(std::move(base)), generators_(std::move(generators)) {
    for (const Point& g : generators_) {
        if (g.spec() != spec_ || g.n() != n_)
            throw DimensionError("generator does not match the base point's ambient");
    }
}

PointedSpace PointedSpace::empty_space(const RingSpec& spec, int n) {
    if (n < 1) throw DimensionError("ambient dimension must be positive");
    return PointedSpace(spec, n);
}

PointedSpace PointedSpace::ambient(const RingSpec& spec, int n) {
    if (n < 1) throw DimensionError("ambient dimension must be positive");
    std::vector<Point> gens;
    std::vector<int> consts(static_cast<std::size_t>(n), 0);
    while (true) {
        // next tuple over {0..p-1}^n, lexicographic
        int i = 0;
        for (; i < n; ++i) {
            if (++consts[static_cast<std::size_t>(i)] < spec.p) break;
            consts[static_cast<std::size_t>(i)] = 0;
        }
        if (i == n) break;
        std::vector<RingElem> coords;
        coords.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            coords.push_back(RingElem::constant(spec, consts[static_cast<std::size_t>(k)]));
        gens.emplace_back(spec, std::move(coords));
    }
    return PointedSpace(Point::zero(spec, n), std::move(gens));
}

const Point& PointedSpace::base() const {
    if (is_empty()) throw EmptySpaceError("the empty space has no base point");
    return *base_;
}

const std::vector<Point>& PointedSpace::generators() const {
    if (is_empty()) throw EmptySpaceError("the empty space has no generators");
    return generators_;
}

std::vector<Point> PointedSpace::points() const {
    std::vector<Point> out;
    out.reserve(generators_.size() + 1);
    out.push_back(base());
    out.insert(out.end(), generators_.begin(), generators_.end());
    return out;
}

BoolElem norm(const PointedSpace& space, const Point& x) { return dist(space.base(), x); }

Point convex_combination(const std::vector<Point>& points, const Partition& coeffs) {
    if (!coeffs.is_complete())
        throw PartitionError("convex combinations need a complete coefficient family");
    if (points.size() != coeffs.size())
        throw PartitionError("coefficient count does not match point count");
    if (points.empty()) throw PartitionError("convex combination of no points");
    Point acc = scalar_act(coeffs[0], points[0]);
    for (std::size_t i = 1; i < points.size(); ++i)
        acc = acc + scalar_act(coeffs[i], points[i]);
    return acc;
}

Point act(const PointedSpace& space, const BoolElem& a, const Point& x) {
    return convex_combination({x, space.base()}, Partition::complete({a, a.complement()}));
}

Point star(const PointedSpace& space, const Point& x, const Point& y) {
    return act(space, dist(x, y).complement(), x);
}

bool is_orthogonal(const PointedSpace& space, const Point& x, const Point& y) {
    const bool by_star = star(space, x, y) == space.base();
    const bool by_norms = dist(x, y) == join(norm(space, x), norm(space, y));
    if (by_star != by_norms)
        throw InternalCheckError("star and norm characterizations of orthogonality disagree");
    return by_star;
}

} // namespace cfgspace
