#include "cfgspace/contractive_maps.hpp"

#include <algorithm>
#include <map>

namespace cfgspace {

Point CodomainOps<Point>::combine(const Point& base_image, const std::vector<Point>& images,
                                  const Coordinates& coords) {
    std::vector<Point> pts;
    pts.reserve(images.size() + 1);
    pts.push_back(base_image);
    pts.insert(pts.end(), images.begin(), images.end());
    return convex_combination(pts, coords.as_partition());
}

BoolElem CodomainOps<BoolElem>::combine(const BoolElem& base_image,
                                        const std::vector<BoolElem>& images,
                                        const Coordinates& coords) {
    BoolElem acc = coords.residual * base_image;
    for (std::size_t i = 0; i < images.size(); ++i) acc = acc + coords.coeffs[i] * images[i];
    return acc;
}

template <class V>
bool check_extensible(const Referential& domain, const V& base_image,
                      const std::vector<V>& images) {
    if (images.size() != domain.elements.size())
        throw DimensionError("image count does not match the referential");
    for (std::size_t i = 0; i < images.size(); ++i) {
        const BoolElem image_norm = CodomainOps<V>::distance(base_image, images[i]);
        if (!leq(image_norm, norm(domain.space, domain.elements[i]))) return false;
    }
    return true;
}

template <class V>
RefMapT<V> make_refmap(Referential domain, V base_image, std::vector<V> images) {
    if (!check_extensible(domain, base_image, images))
        throw ContractivityError("referential images violate the norm condition");
    return RefMapT<V>{std::move(domain), std::move(base_image), std::move(images)};
}

template <class V>
V evaluate(const RefMapT<V>& f, const Point& x) {
    const Coordinates coords = coordinates(f.domain, x);
    if (reconstruct(f.domain, coords) != x)
        throw MembershipError("point is not a member of the map's domain");
    return CodomainOps<V>::combine(f.base_image, f.images, coords);
}

template <class V>
RefMapT<V> compose(const RefMapT<V>& outer, const RefMap& inner) {
    std::vector<V> images;
    images.reserve(inner.images.size());
    for (const Point& y : inner.images) images.push_back(evaluate(outer, y));
    return make_refmap(inner.domain, evaluate(outer, inner.base_image), std::move(images));
}

bool is_contractive_table(const PointMapTable& table) {
    std::map<Point, Point> fn;
    for (const auto& [x, fx] : table) {
        const auto [it, inserted] = fn.emplace(x, fx);
        if (!inserted && it->second != fx)
            throw TotalityError("table maps " + x.str() + " to two different images");
    }
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i + 1; j < table.size(); ++j)
            if (!leq(dist(table[i].second, table[j].second), dist(table[i].first, table[j].first)))
                return false;

    // A contractive map must carry z = a x + (comp a) y to the matching
    // combination of images whenever all three points are in the domain.
    const int omega = table.empty() ? 0 : table.front().first.spec().omega;
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = 0; j < table.size(); ++j) {
            for (std::uint32_t bits = 0; bits < (1u << omega); ++bits) {
                const Partition part = Partition::complete(
                    {BoolElem(bits, omega), BoolElem(bits, omega).complement()});
                const Point z = convex_combination({table[i].first, table[j].first}, part);
                const auto it = fn.find(z);
                if (it == fn.end()) continue;
                const Point fz = convex_combination({table[i].second, table[j].second}, part);
                if (it->second != fz)
                    throw InternalCheckError(
                        "pairwise-contractive table fails to preserve a convex combination");
            }
        }
    }
    return true;
}

RefMap refmap_from_table(const PointedSpace& space, const PointMapTable& table) {
    if (!is_contractive_table(table)) throw ContractivityError("table is not contractive");
    std::map<Point, Point> fn(table.begin(), table.end());
    const auto image_of = [&](const Point& x) -> const Point& {
        const auto it = fn.find(x);
        if (it == fn.end()) throw TotalityError("table does not cover " + x.str());
        return it->second;
    };

    const Referential ref = orthogonalize(space);
    std::vector<Point> images;
    images.reserve(ref.elements.size());
    for (const Point& e : ref.elements) images.push_back(image_of(e));
    RefMap f = make_refmap(ref, image_of(space.base()), std::move(images));

    for (const auto& [x, fx] : table) {
        if (reconstruct(f.domain, coordinates(f.domain, x)) != x)
            throw MembershipError("table entry " + x.str() + " is outside the space");
        if (evaluate(f, x) != fx)
            throw InternalCheckError("contractive table disagrees with its extension");
    }
    return f;
}

template <class V>
RefMapT<V> orthogonal_sum(const RefMapT<V>& f, const RefMapT<V>& g, const PointedSpace& X) {
    if (f.domain.space.base() != X.base() || g.domain.space.base() != X.base())
        throw PointingError("summands must be pointed at the ambient base point");
    if (!(f.base_image == g.base_image))
        throw PointingError("summands have different base images");
    for (const Point& a : f.domain.elements)
        for (const Point& b : g.domain.elements)
            if (!is_orthogonal(X, a, b))
                throw ContainmentError("summand domains are not orthogonal");

    std::vector<Point> elems = f.domain.elements;
    elems.insert(elems.end(), g.domain.elements.begin(), g.domain.elements.end());
    std::vector<V> images = f.images;
    images.insert(images.end(), g.images.begin(), g.images.end());
    return make_refmap(Referential{std::move(elems), X}, f.base_image, std::move(images));
}

namespace {

template <class V>
PointedSpace zero_set_impl(const PointedSpace& X, const std::function<V(const Point&)>& f,
                           const V& target) {
    if (X.is_empty()) return X;
    const auto defect = [&](const Point& x) { return CodomainOps<V>::distance(f(x), target); };

    const Point root = weierstrass_argmax(X, [&](const Point& x) { return defect(x).complement(); });
    if (!defect(root).is_zero()) return PointedSpace::empty_space(X.spec(), X.n());

    const PointedSpace at_root = repointed(X, root);
    std::vector<Point> gens;
    gens.reserve(at_root.generators().size());
    for (const Point& x : at_root.generators())
        gens.push_back(act(at_root, defect(x).complement(), x));
    return PointedSpace(root, std::move(gens));
}

} // namespace

PointedSpace zero_set(const PointedSpace& X, const std::function<Point(const Point&)>& f,
                      const Point& target) {
    return zero_set_impl<Point>(X, f, target);
}

PointedSpace zero_set(const PointedSpace& X, const std::function<BoolElem(const Point&)>& f,
                      const BoolElem& target) {
    return zero_set_impl<BoolElem>(X, f, target);
}

PointedSpace zero_set(const PointedSpace& X, const RefMap& f, const Point& target) {
    return zero_set_impl<Point>(X, [&](const Point& x) { return evaluate(f, x); }, target);
}

PointedSpace zero_set(const PointedSpace& X, const BoolRefMap& f, const BoolElem& target) {
    return zero_set_impl<BoolElem>(X, [&](const Point& x) { return evaluate(f, x); }, target);
}

BoolRefMap kernel_map(const PointedSpace& Y, const PointedSpace& X) {
    if (Y.is_empty())
        throw EmptySpaceError("no contractive map to B has an empty zero set in general");
    if (X.is_empty()) throw EmptySpaceError("ambient space is empty");
    if (Y.spec() != X.spec() || Y.n() != X.n())
        throw DimensionError("subspace and ambient over different ambients");
    for (const Point& p : Y.points())
        if (!contains(X, p)) throw ContainmentError("subspace is not contained in the ambient");

    // Referential of Y extended to one of X, both pointed at Y's base.
    const PointedSpace X_at = repointed(X, Y.base());
    const Referential ref_y = orthogonalize(Y);
    const Referential ref_x = extend_referential(ref_y.elements, X_at);

    const int omega = X.spec().omega;
    std::vector<BoolElem> images;
    images.reserve(ref_x.elements.size());
    for (std::size_t i = 0; i < ref_x.elements.size(); ++i)
        images.push_back(i < ref_y.elements.size() ? BoolElem::zero(omega)
                                                   : norm(X_at, ref_x.elements[i]));
    return make_refmap(ref_x, BoolElem::zero(omega), std::move(images));
}

PointedSpace intersect_subspaces(const PointedSpace& Y, const PointedSpace& Z,
                                 const PointedSpace& X) {
    if (Y.spec() != X.spec() || Z.spec() != X.spec() || Y.n() != X.n() || Z.n() != X.n())
        throw DimensionError("subspaces and ambient over different ambients");
    if (Y.is_empty() || Z.is_empty()) return PointedSpace::empty_space(X.spec(), X.n());

    const BoolRefMap fy = kernel_map(Y, X);
    const BoolRefMap fz = kernel_map(Z, X);
    const auto joined = [&](const Point& x) { return join(evaluate(fy, x), evaluate(fz, x)); };
    return zero_set_impl<BoolElem>(X, joined, BoolElem::zero(X.spec().omega));
}

PointedSpace preimage_subspace(const PointedSpace& X,
                               const std::function<Point(const Point&)>& f,
                               const PointedSpace& Y, const PointedSpace& Z) {
    if (Z.is_empty()) return PointedSpace::empty_space(X.spec(), X.n());
    const BoolRefMap g = kernel_map(Z, Y);
    const auto composed = [&](const Point& x) { return evaluate(g, f(x)); };
    return zero_set_impl<BoolElem>(X, composed, BoolElem::zero(X.spec().omega));
}

PointedSpace preimage_subspace(const PointedSpace& X, const RefMap& f, const PointedSpace& Y,
                               const PointedSpace& Z) {
    return preimage_subspace(X, [&](const Point& x) { return evaluate(f, x); }, Y, Z);
}

template bool check_extensible<Point>(const Referential&, const Point&,
                                      const std::vector<Point>&);
template bool check_extensible<BoolElem>(const Referential&, const BoolElem&,
                                         const std::vector<BoolElem>&);
template RefMapT<Point> make_refmap<Point>(Referential, Point, std::vector<Point>);
template RefMapT<BoolElem> make_refmap<BoolElem>(Referential, BoolElem, std::vector<BoolElem>);
template Point evaluate<Point>(const RefMapT<Point>&, const Point&);
template BoolElem evaluate<BoolElem>(const RefMapT<BoolElem>&, const Point&);
template RefMapT<Point> compose<Point>(const RefMapT<Point>&, const RefMap&);
template RefMapT<BoolElem> compose<BoolElem>(const RefMapT<BoolElem>&, const RefMap&);
template RefMapT<Point> orthogonal_sum<Point>(const RefMapT<Point>&, const RefMapT<Point>&,
                                              const PointedSpace&);
template RefMapT<BoolElem> orthogonal_sum<BoolElem>(const RefMapT<BoolElem>&,
                                                    const RefMapT<BoolElem>&,
                                                    const PointedSpace&);

} // namespace cfgspace
