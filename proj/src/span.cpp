#include "cfgspace/span.hpp"

#include <algorithm>
#include <cstddef>

namespace cfgspace {

namespace {

void require_same_ambient(const PointedSpace& a, const PointedSpace& b) {
    if (a.spec() != b.spec() || a.n() != b.n())
        throw DimensionError("spaces over different ambients");
}

/// Advances idx to the next m-subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t m = idx.size();
    std::size_t i = m;
    while (i > 0) {
        --i;
        if (idx[i] + (m - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<BoolElem> Base::norms() const {
    std::vector<BoolElem> out;
    out.reserve(ref.elements.size());
    for (const Point& x : ref.elements) out.push_back(norm(ref.space, x));
    return out;
}

InvariantSeq InvariantSeq::of_empty_space() {
    InvariantSeq seq;
    seq.empty_space_ = true;
    return seq;
}

InvariantSeq InvariantSeq::of(std::vector<BoolElem> alphas) {
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i].is_zero()) throw InternalCheckError("zero entry in an invariant sequence");
        if (i > 0 && !leq(alphas[i], alphas[i - 1]))
            throw InternalCheckError("invariant sequence is not decreasing");
    }
    InvariantSeq seq;
    seq.alphas_ = std::move(alphas);
    return seq;
}

Partition Coordinates::as_partition() const {
    std::vector<BoolElem> parts;
    parts.reserve(coeffs.size() + 1);
    parts.push_back(residual);
    parts.insert(parts.end(), coeffs.begin(), coeffs.end());
    return Partition::complete(std::move(parts));
}

Referential extend_referential(const std::vector<Point>& orthogonal_prefix,
                               const PointedSpace& space, CancelToken cancel) {
    if (space.is_empty()) throw EmptySpaceError("cannot orthogonalize the empty space");
    const Point& base = space.base();

    std::vector<Point> elems = orthogonal_prefix;
    elems.insert(elems.end(), space.generators().begin(), space.generators().end());

    // Masking x_j by d(x_i, x_j) makes (i, j) orthogonal and shrinks B x_j,
    // which cannot break any pair that is orthogonal already. Scanning the
    // pairs once in lexicographic order therefore visits, at every step, the
    // first pair that is still non-orthogonal, and each replacement strictly
    // decreases the number of non-orthogonal pairs.
    for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
        cancel.poll();
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            if (is_orthogonal(space, elems[i], elems[j])) continue;
            elems[j] = act(space, dist(elems[i], elems[j]), elems[j]);
            if (!is_orthogonal(space, elems[i], elems[j]))
                throw InternalCheckError("masking did not orthogonalize the pair");
        }
    }
    for (std::size_t i = 0; i + 1 < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (!is_orthogonal(space, elems[i], elems[j]))
                throw InternalCheckError("orthogonalization left a non-orthogonal pair");

    std::vector<Point> kept;
    kept.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] == base) {
            if (i < orthogonal_prefix.size())
                throw InternalCheckError("an orthogonal prefix element collapsed to the base");
            continue;
        }
        kept.push_back(elems[i]);
    }
    return Referential{std::move(kept), space};
}

Referential orthogonalize(const PointedSpace& space, CancelToken cancel) {
    return extend_referential({}, space, cancel);
}

Coordinates coordinates(const Referential& ref, const Point& x) {
    const int omega = ref.space.spec().omega;
    std::vector<BoolElem> coeffs;
    coeffs.reserve(ref.elements.size());
    BoolElem used = BoolElem::zero(omega);
    for (const Point& e : ref.elements) {
        BoolElem a = norm(ref.space, e) * dist(x, e).complement();
        used = join(used, a);
        coeffs.push_back(std::move(a));
    }
    return Coordinates{std::move(coeffs), used.complement()};
}

Point reconstruct(const Referential& ref, const Coordinates& coords) {
    std::vector<Point> pts;
    pts.reserve(ref.elements.size() + 1);
    pts.push_back(ref.space.base());
    pts.insert(pts.end(), ref.elements.begin(), ref.elements.end());
    return convex_combination(pts, coords.as_partition());
}

bool contains(const PointedSpace& space, const Point& x) {
    if (space.is_empty()) return false;
    if (space.spec() != x.spec() || space.n() != x.n())
        throw DimensionError("point does not live in the space's ambient");
    const Referential ref = orthogonalize(space);
    return reconstruct(ref, coordinates(ref, x)) == x;
}

bool spaces_equal(const PointedSpace& a, const PointedSpace& b) {
    require_same_ambient(a, b);
    if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();
    for (const Point& p : a.points())
        if (!contains(b, p)) return false;
    for (const Point& p : b.points())
        if (!contains(a, p)) return false;
    return true;
}

PointedSpace repointed(const PointedSpace& space, const Point& new_base) {
    if (!contains(space, new_base))
        throw MembershipError("new base point is not a member of the space");
    std::vector<Point> gens;
    gens.reserve(space.generators().size() + 1);
    gens.push_back(space.base());
    gens.insert(gens.end(), space.generators().begin(), space.generators().end());
    return PointedSpace(new_base, std::move(gens));
}

Point weierstrass_argmax(const PointedSpace& space,
                         const std::function<BoolElem(const Point&)>& f) {
    if (space.is_empty()) throw EmptySpaceError("no maximum over the empty space");
    Point u = space.base();
    for (const Point& x : space.generators()) {
        const BoolElem fu = f(u);
        u = convex_combination({u, x}, Partition::complete({fu, fu.complement()}));
    }
    return u;
}

Base build_base(const PointedSpace& space, CancelToken cancel) {
    if (space.is_empty()) throw EmptySpaceError("the empty space has no base");
    std::vector<Point> chosen;
    const std::size_t max_rounds = space.generators().size() + 1;
    for (std::size_t round = 0; round <= max_rounds; ++round) {
        cancel.poll();
        const Referential ext = extend_referential(chosen, space, cancel);
        const PointedSpace perp(
            space.base(),
            std::vector<Point>(ext.elements.begin() + static_cast<std::ptrdiff_t>(chosen.size()),
                               ext.elements.end()));
        const Point next = weierstrass_argmax(perp, [&](const Point& p) { return norm(space, p); });
        if (norm(space, next).is_zero()) return Base{Referential{std::move(chosen), space}};
        chosen.push_back(next);
    }
    throw InternalCheckError("base construction did not terminate");
}

InvariantSeq alpha_invariants(const PointedSpace& space) {
    if (space.is_empty()) return InvariantSeq::of_empty_space();
    return InvariantSeq::of(build_base(space).norms());
}

InvariantSeq alpha_invariants_by_definition(const PointedSpace& space, CancelToken cancel) {
    if (space.is_empty()) return InvariantSeq::of_empty_space();

    std::vector<Point> pts;
    for (const Point& p : space.points())
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);

    const int omega = space.spec().omega;
    std::vector<BoolElem> alphas;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        cancel.poll();
        BoolElem alpha = BoolElem::zero(omega);
        std::vector<std::size_t> idx(k + 1);
        for (std::size_t i = 0; i <= k; ++i) idx[i] = i;
        do {
            BoolElem prod = BoolElem::one(omega);
            for (std::size_t i = 0; i <= k && !prod.is_zero(); ++i)
                for (std::size_t j = i + 1; j <= k && !prod.is_zero(); ++j)
                    prod = prod * dist(pts[idx[i]], pts[idx[j]]);
            alpha = join(alpha, prod);
        } while (!alpha.is_one() && next_subset(idx, pts.size()));
        if (alpha.is_zero()) break;
        alphas.push_back(alpha);
    }
    return InvariantSeq::of(std::move(alphas));
}

PointedSpace orthogonal_complement(const PointedSpace& U, const PointedSpace& X) {
    require_same_ambient(U, X);
    if (U.is_empty() || X.is_empty())
        throw EmptySpaceError("orthogonal complement needs pointed spaces");
    if (U.base() != X.base()) throw PointingError("subspace and ambient have different base points");
    for (const Point& g : U.generators())
        if (!contains(X, g)) throw ContainmentError("subspace generator outside the ambient space");

    const Referential ref_u = orthogonalize(U);
    const Referential ref_x = extend_referential(ref_u.elements, X);
    std::vector<Point> tail(
        ref_x.elements.begin() + static_cast<std::ptrdiff_t>(ref_u.elements.size()),
        ref_x.elements.end());
    return PointedSpace(X.base(), std::move(tail));
}

IsometryResult classify_isometric(const PointedSpace& X, const PointedSpace& Y) {
    if (X.spec().omega != Y.spec().omega)
        throw DimensionError("spaces over different Boolean rings");
    if (alpha_invariants(X) != alpha_invariants(Y)) return IsometryResult{false, std::nullopt};
    if (X.is_empty()) return IsometryResult{true, std::nullopt};

    const Base bx = build_base(X);
    const Base by = build_base(Y);
    if (bx.elements().size() != by.elements().size())
        throw InternalCheckError("equal invariants but bases of different length");

    std::vector<std::pair<Point, Point>> mapping;
    mapping.reserve(bx.elements().size() + 1);
    mapping.emplace_back(X.base(), Y.base());
    for (std::size_t i = 0; i < bx.elements().size(); ++i)
        mapping.emplace_back(bx.elements()[i], by.elements()[i]);
    return IsometryResult{true, std::move(mapping)};
}

} // namespace cfgspace
