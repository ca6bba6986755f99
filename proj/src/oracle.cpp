#include "cfgspace/oracle.hpp"

#include <algorithm>
#include <set>

namespace cfgspace {

namespace {

std::size_t checked_power(std::size_t base, int exp, std::size_t cap) {
    std::size_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > cap / base)
            throw LimitError("enumeration universe exceeds the configured cap");
        out *= base;
    }
    return out;
}

} // namespace

std::vector<BoolElem> enumerate_bool(int omega, const OracleLimits& limits) {
    if (omega > limits.max_omega_enum)
        throw LimitError("atom set too large to enumerate B");
    const std::size_t size = checked_power(2, omega, limits.max_universe);
    std::vector<BoolElem> out;
    out.reserve(size);
    for (std::uint32_t bits = 0; bits < size; ++bits) out.emplace_back(bits, omega);
    return out;
}

std::vector<RingElem> enumerate_ring(const RingSpec& spec, const OracleLimits& limits) {
    const std::size_t size =
        checked_power(static_cast<std::size_t>(spec.p), spec.omega, limits.max_universe);
    std::vector<RingElem> out;
    out.reserve(size);
    std::vector<int> comps(static_cast<std::size_t>(spec.omega), 0);
    while (true) {
        out.emplace_back(spec, comps);
        int i = spec.omega;
        while (i-- > 0) {
            if (++comps[static_cast<std::size_t>(i)] < spec.p) break;
            comps[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

std::vector<Point> enumerate_points(const RingSpec& spec, int n, const OracleLimits& limits) {
    if (n < 1) throw DimensionError("ambient dimension must be positive");
    checked_power(static_cast<std::size_t>(spec.p), spec.omega * n, limits.max_universe);
    const std::vector<RingElem> ring = enumerate_ring(spec, limits);

    std::vector<Point> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<RingElem> coords;
        coords.reserve(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < idx.size(); ++i) coords.push_back(ring[idx[i]]);
        out.emplace_back(spec, std::move(coords));
        int i = n;
        while (i-- > 0) {
            if (++idx[static_cast<std::size_t>(i)] < ring.size()) break;
            idx[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

std::vector<Point> enumerate_members(const PointedSpace& space, const OracleLimits& limits) {
    if (space.is_empty()) return {};

    // Route 1: membership test against every ambient point.
    std::vector<Point> by_contains;
    for (const Point& x : enumerate_points(space.spec(), space.n(), limits))
        if (contains(space, x)) by_contains.push_back(x);

    // Route 2: close {base} U generators under binary convex combinations.
    // Every n-ary combination decomposes into binary ones, so the fixpoint
    // is the whole convex closure.
    const std::vector<BoolElem> coeffs = enumerate_bool(space.spec().omega, limits);
    std::set<Point> closure;
    for (const Point& p : space.points()) closure.insert(p);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Point> snapshot(closure.begin(), closure.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i) {
            for (std::size_t j = i; j < snapshot.size(); ++j) {
                for (const BoolElem& a : coeffs) {
                    const Point z = convex_combination(
                        {snapshot[i], snapshot[j]},
                        Partition::complete({a, a.complement()}));
                    if (closure.insert(z).second) grew = true;
                }
            }
        }
    }

    if (by_contains.size() != closure.size() ||
        !std::equal(by_contains.begin(), by_contains.end(), closure.begin())) {
        std::string detail;
        for (const Point& p : closure)
            if (!std::binary_search(by_contains.begin(), by_contains.end(), p))
                detail = "closure point " + p.str() + " rejected by the membership test";
        for (const Point& p : by_contains)
            if (closure.find(p) == closure.end())
                detail = "member " + p.str() + " unreachable by combination closure";
        throw InternalCheckError("membership routes disagree: " + detail);
    }
    return by_contains;
}

int Sampler::uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

BoolElem Sampler::bool_elem(int omega) {
    std::uniform_int_distribution<std::uint32_t> dist_bits(0, (1u << omega) - 1u);
    return BoolElem(dist_bits(rng_), omega);
}

RingElem Sampler::ring_elem(const RingSpec& spec) {
    std::vector<int> comps(static_cast<std::size_t>(spec.omega));
    for (int& c : comps) c = uniform(0, spec.p - 1);
    return RingElem(spec, std::move(comps));
}

Point Sampler::point(const RingSpec& spec, int n) {
    std::vector<RingElem> coords;
    coords.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) coords.push_back(ring_elem(spec));
    return Point(spec, std::move(coords));
}

Partition Sampler::partition(int omega, std::size_t parts) {
    if (parts == 0) throw PartitionError("cannot split 1 into zero parts");
    std::vector<std::uint32_t> bits(parts, 0);
    for (int atom = 0; atom < omega; ++atom)
        bits[static_cast<std::size_t>(uniform(0, static_cast<int>(parts) - 1))] |= 1u << atom;
    std::vector<BoolElem> out;
    out.reserve(parts);
    for (std::uint32_t b : bits) out.emplace_back(b, omega);
    return Partition::complete(std::move(out));
}

PointedSpace Sampler::space(const RingSpec& spec, int n, int max_gens) {
    const int count = uniform(0, max_gens);
    std::vector<Point> gens;
    gens.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) gens.push_back(point(spec, n));
    return PointedSpace(point(spec, n), std::move(gens));
}

Polynomial Sampler::polynomial(const RingSpec& spec, int n, int max_terms) {
    std::vector<std::pair<std::vector<int>, RingElem>> terms;
    const int count = uniform(0, max_terms);
    for (int t = 0; t < count; ++t) {
        std::vector<int> exp(static_cast<std::size_t>(n));
        for (int& e : exp) e = uniform(0, spec.p - 1);
        terms.emplace_back(std::move(exp), ring_elem(spec));
    }
    return Polynomial::from_terms(spec, n, terms);
}

RefMap Sampler::contractive_map(const PointedSpace& X, int m) {
    Referential ref = orthogonalize(X);
    const Point base_image = point(X.spec(), m);
    std::vector<Point> images;
    images.reserve(ref.elements.size());
    for (const Point& e : ref.elements) {
        // Mask a random point down to the norm of the referential element.
        const BoolElem a = norm(X, e);
        images.push_back(convex_combination({point(X.spec(), m), base_image},
                                            Partition::complete({a, a.complement()})));
    }
    return make_refmap(std::move(ref), base_image, std::move(images));
}

bool OracleReport::all_pass() const {
    for (const OracleCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace cfgspace
