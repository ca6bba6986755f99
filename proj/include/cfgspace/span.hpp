#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cfgspace/cancellation.hpp"
#include "cfgspace/metric_space.hpp"

namespace cfgspace {

/// An orthogonal generating system of a pointed space: pairwise orthogonal
/// points, none equal to the base, whose convex closure together with the
/// base is the whole space.
struct Referential {
    std::vector<Point> elements;
    PointedSpace space;
};

/// A referential whose element norms decrease: |x_1| >= |x_2| >= ... in the
/// lattice order of B. Its norms are the alpha invariants of the space.
struct Base {
    Referential ref;

    const std::vector<Point>& elements() const { return ref.elements; }
    std::vector<BoolElem> norms() const;
};

/// The decreasing sequence alpha_1 >= alpha_2 >= ... of nonzero invariants
/// classifying a space up to isometry. The empty space carries a
/// distinguished marker that equals only itself.
class InvariantSeq {
public:
    static InvariantSeq of_empty_space();
    static InvariantSeq of(std::vector<BoolElem> alphas);

    bool is_empty_space() const { return empty_space_; }
    const std::vector<BoolElem>& alphas() const { return alphas_; }

    friend bool operator==(const InvariantSeq& a, const InvariantSeq& b) {
        return a.empty_space_ == b.empty_space_ && a.alphas_ == b.alphas_;
    }
    friend bool operator!=(const InvariantSeq& a, const InvariantSeq& b) { return !(a == b); }

private:
    InvariantSeq() = default;
    bool empty_space_ = false;
    std::vector<BoolElem> alphas_;
};

/// Coordinates of a point with respect to a referential: one coefficient per
/// element plus the residual coefficient carried by the base point. The
/// coefficients are always pairwise disjoint.
struct Coordinates {
    std::vector<BoolElem> coeffs;
    BoolElem residual;

    /// [residual, coeffs...] as a complete partition.
    Partition as_partition() const;
};

/// Builds a referential by the masking induction: while an ordered pair
/// (i, j), i < j, fails to be orthogonal, x_j is replaced by
/// d(x_i, x_j) . x_j, which shrinks B x_j and never breaks pairs that are
/// already orthogonal. Pairs are scanned lexicographically; elements equal
/// to the base are dropped at the end. Each replacement strictly decreases
/// the number of non-orthogonal pairs (asserted).
Referential orthogonalize(const PointedSpace& space, CancelToken cancel = {});

/// Same induction started after an already-orthogonal prefix, which is
/// preserved untouched. Returns the referential and the number of surviving
/// prefix elements.
Referential extend_referential(const std::vector<Point>& orthogonal_prefix,
                               const PointedSpace& space, CancelToken cancel = {});

/// Closed-form coordinates a_i = |x_i| . complement(d(x, x_i)). For members
/// these are the unique tuple with disjoint coefficients, a_i <= |x_i| and
/// sum a_i x_i = x; for non-members the reconstruction differs from x.
Coordinates coordinates(const Referential& ref, const Point& x);

/// sum a_i x_i + residual . base.
Point reconstruct(const Referential& ref, const Coordinates& coords);

/// Exact membership test: coordinates followed by reconstruction.
bool contains(const PointedSpace& space, const Point& x);

/// Member-set equality of two spaces over the same ambient.
bool spaces_equal(const PointedSpace& a, const PointedSpace& b);

/// The same member set pointed at a different member.
PointedSpace repointed(const PointedSpace& space, const Point& new_base);

/// A member u maximizing a contractive map f : X -> B, with
/// f(u) = join of f over {base} U generators = max f(X). Built by folding
/// u <- f(u) u + complement(f(u)) x over the generators in list order.
Point weierstrass_argmax(const PointedSpace& space,
                         const std::function<BoolElem(const Point&)>& f);

/// Greedy base construction: repeatedly take a norm-maximal element of the
/// orthogonal complement of what was already chosen, stopping at norm 0.
Base build_base(const PointedSpace& space, CancelToken cancel = {});

/// Norms of a base, trimmed of nothing (they are all nonzero); the empty
/// space gets the distinguished marker.
InvariantSeq alpha_invariants(const PointedSpace& space);

/// The same sequence from the definition: alpha_k is the join over all
/// (k+1)-subsets {u_0..u_k} of {base} U generators of the product of the
/// pairwise distances d(u_i, u_j).
InvariantSeq alpha_invariants_by_definition(const PointedSpace& space, CancelToken cancel = {});

/// U-perp within X: the tail of a referential of X extending one of U.
/// Every member of the result is orthogonal to every member of U, and the
/// convex closure of U together with the result is X.
PointedSpace orthogonal_complement(const PointedSpace& U, const PointedSpace& X);

/// Result of an isometry classification. When the invariant sequences
/// match, `mapping` holds base-to-base point pairs (base of X to base of Y
/// first); their unique contractive extension is an isometry of the spaces.
struct IsometryResult {
    bool isometric;
    std::optional<std::vector<std::pair<Point, Point>>> mapping;
};

/// Two spaces over the same B are isometric iff their invariant sequences
/// coincide; in that case a base-to-base mapping is constructed.
IsometryResult classify_isometric(const PointedSpace& X, const PointedSpace& Y);

} // namespace cfgspace
