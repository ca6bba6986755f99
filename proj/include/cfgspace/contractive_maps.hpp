#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cfgspace/span.hpp"

namespace cfgspace {

/// Operations a codomain must support: B itself (BoolElem values, distance
/// a + b, pointed at any element) or a point module A^m.
template <class V>
struct CodomainOps {
    static BoolElem distance(const V& a, const V& b);
    /// Convex combination of [base_image, images...] with the coefficients
    /// [residual, coeffs...].
    static V combine(const V& base_image, const std::vector<V>& images, const Coordinates& coords);
};

template <>
struct CodomainOps<Point> {
    static BoolElem distance(const Point& a, const Point& b) { return dist(a, b); }
    static Point combine(const Point& base_image, const std::vector<Point>& images,
                         const Coordinates& coords);
};

template <>
struct CodomainOps<BoolElem> {
    static BoolElem distance(const BoolElem& a, const BoolElem& b) { return a + b; }
    static BoolElem combine(const BoolElem& base_image, const std::vector<BoolElem>& images,
                            const Coordinates& coords);
};

/// A contractive map stored by its values on a referential of the domain.
/// The stored data determines a unique contractive map on the whole space;
/// `evaluate` computes it via coordinates.
template <class V>
struct RefMapT {
    Referential domain;
    V base_image;
    std::vector<V> images;
};

using RefMap = RefMapT<Point>;
using BoolRefMap = RefMapT<BoolElem>;

/// The norm condition |f(x_i)| <= |x_i|, which is necessary and sufficient
/// for candidate referential images to extend to a contractive map.
template <class V>
bool check_extensible(const Referential& domain, const V& base_image,
                      const std::vector<V>& images);

/// Validating constructor; throws ContractivityError when the norm
/// condition fails.
template <class V>
RefMapT<V> make_refmap(Referential domain, V base_image, std::vector<V> images);

/// Value of the unique contractive extension at a member of the domain.
template <class V>
V evaluate(const RefMapT<V>& f, const Point& x);

/// g after f, stored on f's domain.
template <class V>
RefMapT<V> compose(const RefMapT<V>& outer, const RefMap& inner);

/// A map given pointwise on an enumerated domain.
using PointMapTable = std::vector<std::pair<Point, Point>>;

/// True iff d(f(x), f(y)) <= d(x, y) for every pair of table entries. On
/// success the table is also cross-checked to preserve the binary convex
/// combinations that land inside its domain; a failure there is an internal
/// inconsistency, not a property of the input.
bool is_contractive_table(const PointMapTable& table);

/// Restriction of a contractive table to a referential of the space. The
/// table must cover the base and the referential (and is checked to agree
/// with the resulting extension on every entry).
RefMap refmap_from_table(const PointedSpace& space, const PointMapTable& table);

/// The unique contractive map extending f on U and g on the orthogonal
/// complement of U, both pointed at the same base with the same base image.
template <class V>
RefMapT<V> orthogonal_sum(const RefMapT<V>& f, const RefMapT<V>& g, const PointedSpace& X);

/// f^{-1}(target) as a pointed space, possibly empty. A root is found by
/// maximizing complement(d(f(.), target)); the solution set is the convex
/// closure of the masked generators around that root.
PointedSpace zero_set(const PointedSpace& X, const std::function<Point(const Point&)>& f,
                      const Point& target);
PointedSpace zero_set(const PointedSpace& X, const std::function<BoolElem(const Point&)>& f,
                      const BoolElem& target);
PointedSpace zero_set(const PointedSpace& X, const RefMap& f, const Point& target);
PointedSpace zero_set(const PointedSpace& X, const BoolRefMap& f, const BoolElem& target);

/// A contractive map X -> B whose zero set is exactly the subspace Y.
/// Y must be non-empty: a single-point X admits only the constant-0 map to
/// B, which cannot have an empty zero set.
BoolRefMap kernel_map(const PointedSpace& Y, const PointedSpace& X);

/// Y and Z intersect in the zero set of the join of their kernel maps.
PointedSpace intersect_subspaces(const PointedSpace& Y, const PointedSpace& Z,
                                 const PointedSpace& X);

/// {x in X : f(x) in Z} for Z a subspace of Y, via the composition of Z's
/// kernel map with f.
PointedSpace preimage_subspace(const PointedSpace& X,
                               const std::function<Point(const Point&)>& f,
                               const PointedSpace& Y, const PointedSpace& Z);
PointedSpace preimage_subspace(const PointedSpace& X, const RefMap& f, const PointedSpace& Y,
                               const PointedSpace& Z);

} // namespace cfgspace
