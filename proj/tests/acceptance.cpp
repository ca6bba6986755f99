// Acceptance suite: every release criterion, exact checks only, one
// PASS/FAIL line per criterion. Exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cfgspace/cli.hpp"

using namespace cfgspace;

namespace {

std::uint64_t kSeed = 0xC0FFEE;

struct Outcome {
    bool pass;
    std::string detail;
};

Point pt1(const RingSpec& spec, std::vector<int> comps) {
    return Point::of(RingElem(spec, std::move(comps)));
}

std::vector<Point> members_of(const PointedSpace& space) { return enumerate_members(space); }

// ---------------------------------------------------------------- criterion 1

Outcome metric_axioms_exhaustive() {
    const RingSpec spec(3, 2);
    std::size_t triples = 0;
    for (const int n : {1, 2}) {
        const auto pts = enumerate_points(spec, n);
        for (const Point& x : pts)
            for (const Point& y : pts) {
                if (dist(x, y).is_zero() != (x == y)) return {false, "identity axiom"};
                if (dist(x, y) != dist(y, x)) return {false, "symmetry axiom"};
                for (const Point& z : pts) {
                    const BoolElem dxy = dist(x, y);
                    const BoolElem dyz = dist(y, z);
                    const BoolElem dxz = dist(x, z);
                    const bool f3 = leq(dxz, join(dxy, dyz));
                    const bool f3p = leq(dxz * dyz.complement(), dxy);
                    const bool f3pp = leq(dxz + dist(z, y), dxy);
                    if (!f3 || f3 != f3p || f3 != f3pp)
                        return {false, "triangle forms disagree at " + x.str() + y.str() + z.str()};
                    ++triples;
                }
            }
    }
    return {true, std::to_string(triples) + " triples"};
}

// ---------------------------------------------------------------- criterion 2

Outcome boolean_alpha2() {
    for (int omega = 1; omega <= 6; ++omega) {
        const RingSpec spec(2, omega);
        const auto ring = enumerate_ring(spec);
        for (const RingElem& x : ring)
            for (const RingElem& y : ring) {
                const BoolElem dxy = idempotent_of(x - y);
                for (const RingElem& z : ring)
                    if (!(dxy * idempotent_of(y - z) * idempotent_of(x - z)).is_zero())
                        return {false, "triple identity fails at omega " + std::to_string(omega)};
            }

        std::vector<Point> gens;
        for (const RingElem& x : ring)
            if (!x.is_zero()) gens.push_back(Point::of(x));
        const PointedSpace B(Point::of(RingElem::zero(spec)), gens);
        const InvariantSeq alphas = alpha_invariants(B);
        if (alphas.alphas() != std::vector<BoolElem>{BoolElem::one(omega)})
            return {false, "alpha(B) != [1] at omega " + std::to_string(omega)};
        if (alphas != alpha_invariants_by_definition(B))
            return {false, "alpha routes disagree at omega " + std::to_string(omega)};
    }
    return {true, "omega 1..6"};
}

// ---------------------------------------------------------------- criterion 3

Outcome e_polynomial_interpolation() {
    for (const RingSpec spec : {RingSpec(2, 1), RingSpec(3, 1), RingSpec(5, 1), RingSpec(2, 2),
                                RingSpec(3, 2)}) {
        RingTable table;
        for (const RingElem& x : enumerate_ring(spec))
            table.emplace_back(x, embed(idempotent_of(x), spec));
        if (interp_unary(table) != e_polynomial(spec))
            return {false, "interp of e-table is not X^(p-1) over " + spec.str()};
    }
    return {true, "p in {2,3,5}"};
}

// ---------------------------------------------------------------- criterion 4

std::vector<std::vector<std::size_t>> contractive_tables(const std::vector<Point>& domain,
                                                         const std::vector<RingElem>& values) {
    const std::size_t D = domain.size();
    const std::size_t V = values.size();
    std::vector<std::vector<std::uint32_t>> ddom(D, std::vector<std::uint32_t>(D));
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) ddom[i][j] = dist(domain[i], domain[j]).bits();
    std::vector<std::vector<std::uint32_t>> dval(V, std::vector<std::uint32_t>(V));
    for (std::size_t a = 0; a < V; ++a)
        for (std::size_t b = 0; b < V; ++b)
            dval[a][b] = idempotent_of(values[a] - values[b]).bits();

    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> assign(D, 0);
    const std::function<void(std::size_t)> recurse = [&](std::size_t i) {
        if (i == D) {
            out.push_back(assign);
            return;
        }
        for (std::size_t v = 0; v < V; ++v) {
            bool ok = true;
            for (std::size_t j = 0; ok && j < i; ++j)
                ok = (dval[v][assign[j]] & ~ddom[i][j]) == 0;
            if (!ok) continue;
            assign[i] = v;
            recurse(i + 1);
        }
    };
    recurse(0);
    return out;
}

Outcome contractive_iff_polynomial() {
    {
        const auto z3_start = std::chrono::steady_clock::now();
        const RingSpec z3(3, 1);
        const auto ring = enumerate_ring(z3);
        std::size_t count = 0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    const RingTable table{{ring[0], ring[static_cast<std::size_t>(a)]},
                                          {ring[1], ring[static_cast<std::size_t>(b)]},
                                          {ring[2], ring[static_cast<std::size_t>(c)]}};
                    for (const auto& p : table)
                        for (const auto& q : table)
                            if (!leq(idempotent_of(p.second - q.second),
                                     idempotent_of(p.first - q.first)))
                                return {false, "a Z3 table is not contractive"};
                    const Polynomial g = interp_unary(table);
                    for (const auto& [x, fx] : table)
                        if (g.eval(Point::of(x)) != fx) return {false, "Z3 reproduction failed"};
                    ++count;
                }
        if (count != 27) return {false, "Z3 census != 27"};
        const auto z3_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - z3_start)
                               .count();
        if (z3_ms >= 1000) return {false, "Z3 phase exceeded its 1 s budget"};
    }

    const RingSpec spec(3, 2);
    const auto domain = enumerate_points(spec, 1);
    const auto values = enumerate_ring(spec);
    const auto tables = contractive_tables(domain, values);
    if (tables.size() != 729)
        return {false, "GF(3)^2 census is " + std::to_string(tables.size()) + ", want 729"};

    Sampler sampler(kSeed);
    for (int s = 0; s < 100; ++s) {
        const auto& t = tables[static_cast<std::size_t>(
            sampler.uniform(0, static_cast<int>(tables.size()) - 1))];
        PointMapTable table;
        for (std::size_t i = 0; i < domain.size(); ++i)
            table.emplace_back(domain[i], Point::of(values[t[i]]));
        const auto polys = interp_multi(table);
        for (const auto& [x, fx] : table)
            if (polys[0].eval(x) != fx.coord(0)) return {false, "GF(3)^2 reproduction failed"};
    }
    return {true, "27 + 729 maps, 100 sampled interpolations"};
}

// ---------------------------------------------------------------- criterion 5

Outcome variety_census() {
    const RingSpec spec(3, 2);
    const auto pts = enumerate_points(spec, 1);

    std::set<std::vector<Point>> subspace_sets;
    subspace_sets.insert(std::vector<Point>{}); // the empty variety
    for (unsigned mask = 1; mask < 512; ++mask) {
        std::vector<Point> subset;
        for (unsigned b = 0; b < 9; ++b)
            if (mask & (1u << b)) subset.push_back(pts[b]);
        const PointedSpace S(subset.front(), {subset.begin() + 1, subset.end()});
        subspace_sets.insert(members_of(S));
    }
    if (subspace_sets.size() != 50)
        return {false, "subspace census is " + std::to_string(subspace_sets.size()) + ", want 50"};

    // zero loci of defining polynomials obtained from contractive maps to B
    const auto coeffs = enumerate_bool(2);
    std::set<std::vector<Point>> loci;
    std::vector<std::size_t> odo(pts.size(), 0);
    while (true) {
        bool contractive = true;
        for (std::size_t i = 0; contractive && i < pts.size(); ++i)
            for (std::size_t j = i + 1; contractive && j < pts.size(); ++j)
                contractive = leq(coeffs[odo[i]] + coeffs[odo[j]], dist(pts[i], pts[j]));
        if (contractive) {
            RingTable embedded;
            for (std::size_t i = 0; i < pts.size(); ++i)
                embedded.emplace_back(pts[i].coord(0), embed(coeffs[odo[i]], spec));
            const Polynomial g = interp_unary(embedded);
            std::vector<Point> locus;
            for (const Point& x : pts)
                if (g.eval(x).is_zero()) locus.push_back(x);
            loci.insert(locus);
        }
        std::size_t i = pts.size();
        while (i-- > 0) {
            if (++odo[i] < coeffs.size()) break;
            odo[i] = 0;
        }
        if (i >= pts.size()) break;
    }
    if (loci != subspace_sets)
        return {false, "zero-locus census (" + std::to_string(loci.size()) +
                           ") differs from the subspace census"};
    return {true, "50 member sets = 50 zero loci"};
}

// ---------------------------------------------------------------- criterion 6

Outcome invariant_agreement() {
    const RingSpec spec(3, 2);
    Sampler sampler(kSeed + 6);
    for (int s = 0; s < 200; ++s) {
        const PointedSpace X = sampler.space(spec, sampler.uniform(1, 2), 4);
        if (alpha_invariants(X) != alpha_invariants_by_definition(X))
            return {false, "disagreement on space " + to_json(X).dump()};
    }
    return {true, "200 spaces"};
}

// ---------------------------------------------------------------- criterion 7

Outcome classification_soundness() {
    const RingSpec spec(3, 2);
    Sampler sampler(kSeed + 7);
    std::vector<PointedSpace> spaces;
    std::vector<std::vector<Point>> members;
    while (spaces.size() < 50) {
        const PointedSpace X = sampler.space(spec, sampler.uniform(1, 2), 3);
        const auto m = members_of(X);
        if (m.size() > 6) continue;
        spaces.push_back(X);
        members.push_back(m);
    }

    std::size_t isometric_pairs = 0;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        for (std::size_t j = i; j < spaces.size(); ++j) {
            const IsometryResult res = classify_isometric(spaces[i], spaces[j]);
            if (res.isometric) {
                ++isometric_pairs;
                const auto& mp = *res.mapping;
                std::vector<Point> elems;
                std::vector<Point> images;
                for (std::size_t k = 1; k < mp.size(); ++k) {
                    elems.push_back(mp[k].first);
                    images.push_back(mp[k].second);
                }
                const RefMap f =
                    make_refmap(Referential{elems, spaces[i]}, mp[0].second, images);
                std::vector<Point> image_list;
                for (const Point& x : members[i]) image_list.push_back(evaluate(f, x));
                for (std::size_t a = 0; a < image_list.size(); ++a)
                    for (std::size_t b = a + 1; b < image_list.size(); ++b)
                        if (dist(image_list[a], image_list[b]) !=
                            dist(members[i][a], members[i][b]))
                            return {false, "constructed map is not distance-preserving"};
                std::vector<Point> sorted_images = image_list;
                std::sort(sorted_images.begin(), sorted_images.end());
                if (sorted_images != members[j])
                    return {false, "constructed map is not a bijection"};
            } else {
                if (members[i].size() != members[j].size()) continue;
                std::vector<std::size_t> perm(members[j].size());
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    bool preserving = true;
                    for (std::size_t a = 0; preserving && a < perm.size(); ++a)
                        for (std::size_t b = a + 1; preserving && b < perm.size(); ++b)
                            preserving = dist(members[j][perm[a]], members[j][perm[b]]) ==
                                         dist(members[i][a], members[i][b]);
                    if (preserving)
                        return {false, "bijection found despite different invariants"};
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
    return {true, "1275 pairs, " + std::to_string(isometric_pairs) + " isometric"};
}

// ---------------------------------------------------------------- criterion 8

Outcome solution_sets() {
    Sampler sampler(kSeed + 8);
    const std::vector<RingSpec> rings{RingSpec(2, 1), RingSpec(2, 2), RingSpec(3, 1),
                                      RingSpec(3, 2), RingSpec(5, 1)};
    for (int s = 0; s < 100; ++s) {
        const RingSpec spec = rings[static_cast<std::size_t>(
            sampler.uniform(0, static_cast<int>(rings.size()) - 1))];
        const int n = sampler.uniform(1, 2);
        const PointedSpace X = sampler.space(spec, n, 4);
        const int m = sampler.uniform(1, 2);
        const RefMap f = sampler.contractive_map(X, m);
        const auto members = members_of(X);
        Point target = sampler.point(spec, m);
        if (sampler.uniform(0, 1) == 0)
            target = evaluate(f, members[static_cast<std::size_t>(sampler.uniform(
                                     0, static_cast<int>(members.size()) - 1))]);
        std::vector<Point> expect;
        for (const Point& x : members)
            if (evaluate(f, x) == target) expect.push_back(x);
        if (members_of(zero_set(X, f, target)) != expect)
            return {false, "zero set mismatch on " + to_json(X).dump()};
    }

    const RingSpec z3(3, 1);
    const PointedSpace Z3(pt1(z3, {0}), {pt1(z3, {1}), pt1(z3, {2})});
    const auto quadric = [&](const Point& x) {
        return Point::of(x.coord(0) * x.coord(0) - x.coord(0));
    };
    if (members_of(zero_set(Z3, quadric, pt1(z3, {0}))) !=
        std::vector<Point>{pt1(z3, {0}), pt1(z3, {1})})
        return {false, "variety of x^2 - x over Z3 is not {0,1}"};
    return {true, "100 random maps + the quadric instance"};
}

// ---------------------------------------------------------------- criterion 9

Outcome variety_roundtrip() {
    const RingSpec z3(3, 1);
    const auto pts3 = enumerate_points(z3, 1);
    for (unsigned mask = 1; mask < 8; ++mask) {
        std::vector<Point> subset;
        for (unsigned b = 0; b < 3; ++b)
            if (mask & (1u << b)) subset.push_back(pts3[b]);
        const PointedSpace U(subset.front(), {subset.begin() + 1, subset.end()});
        const DefiningPoly dp = polys_from_space(U);
        if (members_of(space_from_polys({dp.poly}, z3, 1)) != members_of(U))
            return {false, "round-trip failed on a Z3 subset"};
    }

    const RingSpec spec(3, 2);
    Sampler sampler(kSeed + 9);
    for (int s = 0; s < 100; ++s) {
        const PointedSpace U = sampler.space(spec, 1, 3);
        const DefiningPoly dp = polys_from_space(U);
        if (members_of(space_from_polys({dp.poly}, spec, 1)) != members_of(U))
            return {false, "round-trip failed on " + to_json(U).dump()};
    }
    return {true, "7 Z3 subspaces + 100 random GF(3)^2 subspaces"};
}

// --------------------------------------------------------------- criterion 10

Outcome convexity_preservation() {
    Sampler sampler(kSeed + 10);
    const std::vector<RingSpec> rings{RingSpec(2, 2), RingSpec(3, 1), RingSpec(3, 2),
                                      RingSpec(5, 1)};
    for (int s = 0; s < 500; ++s) {
        const RingSpec spec = rings[static_cast<std::size_t>(
            sampler.uniform(0, static_cast<int>(rings.size()) - 1))];
        const int n = sampler.uniform(1, 2);
        const Polynomial f = sampler.polynomial(spec, n, 4);
        const int k = sampler.uniform(1, 4);
        std::vector<Point> chosen;
        for (int c = 0; c < k; ++c) chosen.push_back(sampler.point(spec, n));
        const Partition part = sampler.partition(spec.omega, chosen.size());
        RingElem expect = RingElem::zero(spec);
        for (std::size_t c = 0; c < chosen.size(); ++c)
            expect = expect + scalar_act(part[c], f.eval(chosen[c]));
        if (f.eval(convex_combination(chosen, part)) != expect)
            return {false, "combination not preserved by " + to_json(f).dump()};
    }
    return {true, "500 instances"};
}

// --------------------------------------------------------------- criterion 11

Outcome base_order_independence() {
    const RingSpec spec(3, 2);
    Sampler sampler(kSeed + 11);
    for (int s = 0; s < 20; ++s) {
        const PointedSpace X = sampler.space(spec, sampler.uniform(1, 2), 5);
        const InvariantSeq expect = alpha_invariants(X);
        std::vector<Point> gens = X.generators();
        for (int shuffle = 0; shuffle < 100; ++shuffle) {
            std::shuffle(gens.begin(), gens.end(), sampler.rng());
            if (alpha_invariants(PointedSpace(X.base(), gens)) != expect)
                return {false, "invariants changed on " + to_json(X).dump()};
        }
    }
    return {true, "20 spaces x 100 shuffles"};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        long budget_ms; // 0 = no stated bound
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "metric axioms and triangle forms, exhaustive", 10000, metric_axioms_exhaustive},
        {2, "alpha_2 of Boolean rings vanishes", 10000, boolean_alpha2},
        {3, "interpolation of the idempotent table is X^(p-1)", 0, e_polynomial_interpolation},
        {4, "contractive maps = polynomial maps, with census", 60000, contractive_iff_polynomial},
        {5, "variety census over GF(3)^2 is 50", 60000, variety_census},
        {6, "invariant sequences agree with the ideal definition", 0, invariant_agreement},
        {7, "classification is sound and complete on samples", 0, classification_soundness},
        {8, "solution sets match filtered enumeration", 0, solution_sets},
        {9, "defining polynomials round-trip member sets", 0, variety_roundtrip},
        {10, "polynomials preserve convex combinations", 0, convexity_preservation},
        {11, "invariants are generator-order independent", 0, base_order_independence},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (outcome.pass && c.budget_ms > 0 && ms > c.budget_ms)
            outcome = {false, outcome.detail + "; exceeded the " +
                                  std::to_string(c.budget_ms) + " ms budget"};
        std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name
                  << " [" << outcome.detail << "] (" << ms << " ms)" << std::endl;
        all = all && outcome.pass;
    }
    std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT")
              << std::endl;
    return all ? 0 : 1;
}
