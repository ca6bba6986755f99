#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "cfgspace/oracle.hpp"
#include "cfgspace/serialization.hpp"

namespace cfgspace {

namespace {

OracleCheck guarded(const std::string& name, const std::function<OracleCheck()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return OracleCheck{name, 0, false, std::string("check aborted: ") + e.what()};
    }
}

std::string triple_str(const Point& x, const Point& y, const Point& z) {
    return json{{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}}.dump();
}

std::vector<Point> sorted_members(const PointedSpace& space, const OracleLimits& limits) {
    return enumerate_members(space, limits);
}

OracleCheck check_metric_axioms(const RingSpec& spec, int n, const OracleLimits& limits,
                                Sampler& sampler, CancelToken cancel) {
    OracleCheck c{"metric_axioms_and_triangle_forms", 0, true, ""};
    const std::vector<Point> pts = enumerate_points(spec, n, limits);
    const std::size_t P = pts.size();

    const auto test = [&](const Point& x, const Point& y, const Point& z) {
        const BoolElem dxy = dist(x, y);
        const BoolElem dyz = dist(y, z);
        const BoolElem dxz = dist(x, z);
        if (dxy.is_zero() != (x == y)) return false;
        if (dxy != dist(y, x)) return false;
        if (!leq(dxz, join(dxy, dyz))) return false;                 // form 3
        if (!leq(dxz * dyz.complement(), dxy)) return false;         // form 3'
        if (!leq(dxz + dist(z, y), dxy)) return false;               // form 3''
        return true;
    };

    const bool exhaustive = P <= 100 && P * P * P <= limits.max_universe;
    if (exhaustive) {
        c.universe = P * P * P;
        for (const Point& x : pts) {
            cancel.poll();
            for (const Point& y : pts)
                for (const Point& z : pts)
                    if (!test(x, y, z)) {
                        c.pass = false;
                        c.counterexample = triple_str(x, y, z);
                        return c;
                    }
        }
    } else {
        c.universe = limits.samples * 1000;
        for (std::size_t s = 0; s < c.universe; ++s) {
            const Point& x = pts[static_cast<std::size_t>(sampler.uniform(0, static_cast<int>(P) - 1))];
            const Point& y = pts[static_cast<std::size_t>(sampler.uniform(0, static_cast<int>(P) - 1))];
            const Point& z = pts[static_cast<std::size_t>(sampler.uniform(0, static_cast<int>(P) - 1))];
            if (!test(x, y, z)) {
                c.pass = false;
                c.counterexample = triple_str(x, y, z);
                return c;
            }
        }
    }
    return c;
}

OracleCheck check_convex_props(const RingSpec& spec, int n, const OracleLimits& limits,
                               Sampler& sampler, CancelToken cancel) {
    OracleCheck c{"convex_combination_properties", limits.samples, true, ""};
    const std::vector<Point> pts = enumerate_points(spec, n, limits);
    for (std::size_t s = 0; s < limits.samples; ++s) {
        cancel.poll();
        const int k = sampler.uniform(1, 4);
        std::vector<Point> chosen;
        for (int i = 0; i < k; ++i)
            chosen.push_back(pts[static_cast<std::size_t>(
                sampler.uniform(0, static_cast<int>(pts.size()) - 1))]);
        const Partition part = sampler.partition(spec.omega, chosen.size());
        const Point r = convex_combination(chosen, part);

        const auto is_combination = [&](const Point& y) {
            for (std::size_t i = 0; i < chosen.size(); ++i)
                if (!(part[i] * dist(y, chosen[i])).is_zero()) return false;
            return true;
        };
        std::size_t matches = 0;
        bool r_found = false;
        for (const Point& y : pts) {
            if (!is_combination(y)) continue;
            ++matches;
            r_found = r_found || y == r;
        }
        bool distance_ok = true;
        for (const Point& y : pts) {
            BoolElem expect = BoolElem::zero(spec.omega);
            for (std::size_t i = 0; i < chosen.size(); ++i)
                expect = expect + part[i] * dist(chosen[i], y);
            if (dist(r, y) != expect) {
                distance_ok = false;
                break;
            }
        }
        if (matches != 1 || !r_found || !distance_ok) {
            c.pass = false;
            c.counterexample =
                json{{"points", to_json(PointedSpace(chosen[0], {chosen.begin() + 1, chosen.end()}))},
                     {"matches", matches}}
                    .dump();
            return c;
        }
    }
    return c;
}

OracleCheck check_coordinates(const RingSpec& spec, int n, const OracleLimits& limits,
                              Sampler& sampler, CancelToken cancel) {
    const std::size_t space_samples = std::min<std::size_t>(limits.samples, 10);
    OracleCheck c{"coordinates_closed_form_vs_search", space_samples, true, ""};
    const std::vector<BoolElem> bools = enumerate_bool(spec.omega, limits);
    for (std::size_t s = 0; s < space_samples; ++s) {
        cancel.poll();
        const PointedSpace X = sampler.space(spec, n, 4);
        const Referential ref = orthogonalize(X);
        const std::size_t r = ref.elements.size();
        const std::vector<Point> members = sorted_members(X, limits);

        for (const Point& x : members) {
            const Coordinates closed = coordinates(ref, x);
            std::size_t matches = 0;
            bool closed_matched = false;

            std::vector<std::size_t> odo(r, 0);
            while (true) {
                std::vector<BoolElem> tuple;
                tuple.reserve(r);
                for (std::size_t i = 0; i < r; ++i) tuple.push_back(bools[odo[i]]);
                bool ok = is_partition(tuple, false);
                for (std::size_t i = 0; ok && i < r; ++i)
                    ok = leq(tuple[i], norm(X, ref.elements[i]));
                if (ok) {
                    BoolElem used = BoolElem::zero(spec.omega);
                    for (const BoolElem& t : tuple) used = join(used, t);
                    std::vector<BoolElem> parts;
                    parts.push_back(used.complement());
                    parts.insert(parts.end(), tuple.begin(), tuple.end());
                    std::vector<Point> combo_pts;
                    combo_pts.push_back(X.base());
                    combo_pts.insert(combo_pts.end(), ref.elements.begin(), ref.elements.end());
                    if (convex_combination(combo_pts, Partition::complete(parts)) == x) {
                        ++matches;
                        closed_matched = closed_matched || tuple == closed.coeffs;
                    }
                }
                std::size_t i = r;
                while (i-- > 0) {
                    if (++odo[i] < bools.size()) break;
                    odo[i] = 0;
                }
                if (i >= r) break; // wrapped past the first digit
            }
            if (matches != 1 || !closed_matched) {
                c.pass = false;
                c.counterexample =
                    json{{"space", to_json(X)}, {"x", to_json(x)}, {"matches", matches}}.dump();
                return c;
            }
        }
    }
    return c;
}

OracleCheck check_alpha(const RingSpec& spec, int n, const OracleLimits& limits, Sampler& sampler,
                        CancelToken cancel) {
    OracleCheck c{"alpha_by_base_vs_definition", limits.samples, true, ""};
    for (std::size_t s = 0; s < limits.samples; ++s) {
        cancel.poll();
        const PointedSpace X = sampler.space(spec, n, 5);
        const InvariantSeq by_base = alpha_invariants(X);
        if (by_base != alpha_invariants_by_definition(X)) {
            c.pass = false;
            c.counterexample = json{{"space", to_json(X)}}.dump();
            return c;
        }
        // invariants must survive a generator shuffle
        std::vector<Point> gens = X.generators();
        std::shuffle(gens.begin(), gens.end(), sampler.rng());
        if (alpha_invariants(PointedSpace(X.base(), gens)) != by_base) {
            c.pass = false;
            c.counterexample = json{{"space", to_json(X)}, {"kind", "shuffle"}}.dump();
            return c;
        }
    }
    return c;
}

/// Enumerates all contractive tables A^n -> A by backtracking with exact
/// pruning; complete search, so the leaf count is the exact census.
std::vector<std::vector<std::size_t>> enumerate_contractive_tables(
    const std::vector<Point>& domain, const std::vector<RingElem>& values, CancelToken cancel) {
    const std::size_t D = domain.size();
    const std::size_t V = values.size();
    std::vector<std::vector<std::uint32_t>> ddom(D, std::vector<std::uint32_t>(D));
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) ddom[i][j] = dist(domain[i], domain[j]).bits();
    std::vector<std::vector<std::uint32_t>> dval(V, std::vector<std::uint32_t>(V));
    for (std::size_t a = 0; a < V; ++a)
        for (std::size_t b = 0; b < V; ++b)
            dval[a][b] = idempotent_of(values[a] - values[b]).bits();

    std::vector<std::vector<std::size_t>> tables;
    std::vector<std::size_t> assign(D, 0);
    std::vector<std::size_t> stack_pos{0};
    const std::function<void(std::size_t)> recurse = [&](std::size_t i) {
        if (i == D) {
            tables.push_back(assign);
            return;
        }
        if (i <= 1) cancel.poll();
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
    return tables;
}

OracleCheck check_census(const RingSpec& spec, int n, const OracleLimits& limits,
                         Sampler& sampler, CancelToken cancel) {
    OracleCheck c{"contractive_census_equals_polynomial_count", 0, true, ""};
    // #contractive maps A^n -> A = #functions acting per atom
    //                            = (p^(p^n))^omega = #reduced polynomials.
    double expected = 1.0;
    double per_atom = 1.0;
    for (int i = 0; i < n; ++i) per_atom *= spec.p; // p^n
    for (int i = 0; i < static_cast<int>(per_atom); ++i) expected *= spec.p;
    double total = 1.0;
    for (int w = 0; w < spec.omega; ++w) total *= expected;
    if (total > static_cast<double>(limits.max_universe)) {
        c.name += "_skipped";
        c.counterexample = "census larger than the enumeration cap";
        return c;
    }
    const std::size_t expected_count = static_cast<std::size_t>(total);
    c.universe = expected_count;

    const std::vector<Point> domain = enumerate_points(spec, n, limits);
    const std::vector<RingElem> values = enumerate_ring(spec, limits);
    const auto tables = enumerate_contractive_tables(domain, values, cancel);
    if (tables.size() != expected_count) {
        c.pass = false;
        c.counterexample = json{{"expected", expected_count}, {"found", tables.size()}}.dump();
        return c;
    }

    // contractive => polynomial: interpolation reproduces sampled tables
    const std::size_t reps = std::min<std::size_t>(limits.samples, tables.size());
    for (std::size_t s = 0; s < reps; ++s) {
        const auto& t = tables[static_cast<std::size_t>(
            sampler.uniform(0, static_cast<int>(tables.size()) - 1))];
        if (n == 1) {
            RingTable rt;
            for (std::size_t i = 0; i < domain.size(); ++i)
                rt.emplace_back(domain[i].coord(0), values[t[i]]);
            const Polynomial g = interp_unary(rt);
            for (const auto& [x, fx] : rt)
                if (g.eval(Point::of(x)) != fx) {
                    c.pass = false;
                    c.counterexample = json{{"poly", to_json(g)}, {"x", to_json(x)}}.dump();
                    return c;
                }
        } else {
            PointMapTable pt;
            for (std::size_t i = 0; i < domain.size(); ++i)
                pt.emplace_back(domain[i], Point::of(values[t[i]]));
            interp_multi(pt); // self-verifying against the table
        }
    }

    // polynomial => contractive on sampled random polynomials
    for (std::size_t s = 0; s < limits.samples; ++s) {
        const Polynomial f = sampler.polynomial(spec, n, 4);
        for (std::size_t i = 0; i < domain.size(); ++i)
            for (std::size_t j = i + 1; j < domain.size(); ++j)
                if (!leq(idempotent_of(f.eval(domain[i]) - f.eval(domain[j])),
                         dist(domain[i], domain[j]))) {
                    c.pass = false;
                    c.counterexample = json{{"poly", to_json(f)},
                                            {"x", to_json(domain[i])},
                                            {"y", to_json(domain[j])}}
                                           .dump();
                    return c;
                }
    }
    return c;
}

OracleCheck check_zero_set(const RingSpec& spec, int n, const OracleLimits& limits,
                           Sampler& sampler, CancelToken cancel) {
    OracleCheck c{"zero_set_vs_filtered_enumeration", limits.samples, true, ""};
    for (std::size_t s = 0; s < limits.samples; ++s) {
        cancel.poll();
        const PointedSpace X = sampler.space(spec, n, 4);
        const int m = sampler.uniform(1, 2);
        const RefMap f = sampler.contractive_map(X, m);
        const std::vector<Point> members = sorted_members(X, limits);

        Point target = sampler.point(spec, m);
        if (sampler.uniform(0, 1) == 0) {
            const Point& member = members[static_cast<std::size_t>(
                sampler.uniform(0, static_cast<int>(members.size()) - 1))];
            target = evaluate(f, member);
        }

        std::vector<Point> expect;
        for (const Point& x : members)
            if (evaluate(f, x) == target) expect.push_back(x);
        const std::vector<Point> got = sorted_members(zero_set(X, f, target), limits);
        if (got != expect) {
            c.pass = false;
            c.counterexample =
                json{{"space", to_json(X)}, {"map", to_json(f)}, {"target", to_json(target)}}
                    .dump();
            return c;
        }
    }
    return c;
}

OracleCheck check_roundtrip(const RingSpec& spec, int n, const OracleLimits& limits,
                            Sampler& sampler, CancelToken cancel) {
    OracleCheck c{"variety_roundtrip", limits.samples + 1, true, ""};
    for (std::size_t s = 0; s < limits.samples; ++s) {
        cancel.poll();
        const PointedSpace U = sampler.space(spec, n, 3);
        const DefiningPoly dp = polys_from_space(U);
        const PointedSpace V = space_from_polys({dp.poly}, spec, n);
        if (sorted_members(U, limits) != sorted_members(V, limits)) {
            c.pass = false;
            c.counterexample = json{{"space", to_json(U)}, {"poly", to_json(dp.poly)}}.dump();
            return c;
        }
    }
    const DefiningPoly one = polys_from_space(PointedSpace::empty_space(spec, n));
    if (!one.from_empty || !space_from_polys({one.poly}, spec, n).is_empty()) {
        c.pass = false;
        c.counterexample = "empty space did not round-trip through the constant 1";
    }
    return c;
}

OracleCheck check_isometry(const RingSpec& spec, int n, const OracleLimits& limits,
                           Sampler& sampler, CancelToken cancel) {
    const std::size_t count = std::min<std::size_t>(limits.samples, 12);
    OracleCheck c{"isometry_classification", count * (count + 1) / 2, true, ""};
    std::vector<PointedSpace> spaces;
    std::vector<std::vector<Point>> members;
    for (std::size_t s = 0; s < count; ++s) {
        spaces.push_back(sampler.space(spec, n, 3));
        members.push_back(sorted_members(spaces.back(), limits));
    }

    for (std::size_t i = 0; i < spaces.size(); ++i) {
        cancel.poll();
        for (std::size_t j = i; j < spaces.size(); ++j) {
            const IsometryResult res = classify_isometric(spaces[i], spaces[j]);
            const auto fail = [&](const std::string& kind) {
                c.pass = false;
                c.counterexample = json{{"X", to_json(spaces[i])},
                                        {"Y", to_json(spaces[j])},
                                        {"kind", kind}}
                                       .dump();
            };
            if (res.isometric) {
                // the constructed base map must be a distance-preserving bijection
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
                for (std::size_t a = 0; a < members[i].size(); ++a)
                    for (std::size_t b = a + 1; b < members[i].size(); ++b)
                        if (dist(image_list[a], image_list[b]) !=
                            dist(members[i][a], members[i][b])) {
                            fail("map does not preserve distances");
                            return c;
                        }
                std::vector<Point> sorted_image = image_list;
                std::sort(sorted_image.begin(), sorted_image.end());
                if (sorted_image != members[j]) {
                    fail("map is not a bijection onto the target");
                    return c;
                }
            } else {
                if (members[i].size() != members[j].size()) continue;
                if (members[i].size() > 7) continue;
                std::vector<std::size_t> perm(members[j].size());
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    bool preserving = true;
                    for (std::size_t a = 0; preserving && a < perm.size(); ++a)
                        for (std::size_t b = a + 1; preserving && b < perm.size(); ++b)
                            preserving = dist(members[j][perm[a]], members[j][perm[b]]) ==
                                         dist(members[i][a], members[i][b]);
                    if (preserving) {
                        fail("distance-preserving bijection despite different invariants");
                        return c;
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
    return c;
}

OracleCheck check_kernel_intersect(const RingSpec& spec, int n, const OracleLimits& limits,
                                   Sampler& sampler, CancelToken cancel) {
    OracleCheck c{"kernel_and_intersection", limits.samples, true, ""};
    const PointedSpace ambient = PointedSpace::ambient(spec, n);
    for (std::size_t s = 0; s < limits.samples; ++s) {
        cancel.poll();
        const PointedSpace Y = sampler.space(spec, n, 3);
        const PointedSpace Z = sampler.space(spec, n, 3);
        const BoolRefMap k = kernel_map(Y, ambient);
        const std::vector<Point> ker =
            sorted_members(zero_set(ambient, k, BoolElem::zero(spec.omega)), limits);
        if (ker != sorted_members(Y, limits)) {
            c.pass = false;
            c.counterexample = json{{"Y", to_json(Y)}, {"kind", "kernel"}}.dump();
            return c;
        }
        const std::vector<Point> my = sorted_members(Y, limits);
        const std::vector<Point> mz = sorted_members(Z, limits);
        std::vector<Point> expect;
        std::set_intersection(my.begin(), my.end(), mz.begin(), mz.end(),
                              std::back_inserter(expect));
        if (sorted_members(intersect_subspaces(Y, Z, ambient), limits) != expect) {
            c.pass = false;
            c.counterexample =
                json{{"Y", to_json(Y)}, {"Z", to_json(Z)}, {"kind", "intersection"}}.dump();
            return c;
        }
    }
    return c;
}

OracleCheck check_convexity_preservation(const RingSpec& spec, int n, const OracleLimits& limits,
                                         Sampler& sampler, CancelToken cancel) {
    OracleCheck c{"polynomials_preserve_combinations", limits.samples, true, ""};
    for (std::size_t s = 0; s < limits.samples; ++s) {
        cancel.poll();
        const Polynomial f = sampler.polynomial(spec, n, 4);
        const int k = sampler.uniform(1, 4);
        std::vector<Point> chosen;
        for (int i = 0; i < k; ++i) chosen.push_back(sampler.point(spec, n));
        const Partition part = sampler.partition(spec.omega, chosen.size());

        RingElem expect = RingElem::zero(spec);
        for (std::size_t i = 0; i < chosen.size(); ++i)
            expect = expect + scalar_act(part[i], f.eval(chosen[i]));
        if (f.eval(convex_combination(chosen, part)) != expect) {
            c.pass = false;
            c.counterexample = json{{"poly", to_json(f)}}.dump();
            return c;
        }
    }
    return c;
}

} // namespace

OracleReport run_theorem_suite(const RingSpec& spec, int n, const OracleLimits& limits,
                               std::uint64_t seed, CancelToken cancel) {
    OracleReport report;
    Sampler sampler(seed);
    const auto add = [&](const std::string& name,
                         OracleCheck (*fn)(const RingSpec&, int, const OracleLimits&, Sampler&,
                                           CancelToken)) {
        report.checks.push_back(
            guarded(name, [&] { return fn(spec, n, limits, sampler, cancel); }));
    };
    add("metric_axioms_and_triangle_forms", check_metric_axioms);
    add("convex_combination_properties", check_convex_props);
    add("coordinates_closed_form_vs_search", check_coordinates);
    add("alpha_by_base_vs_definition", check_alpha);
    add("contractive_census_equals_polynomial_count", check_census);
    add("zero_set_vs_filtered_enumeration", check_zero_set);
    add("variety_roundtrip", check_roundtrip);
    add("isometry_classification", check_isometry);
    add("kernel_and_intersection", check_kernel_intersect);
    add("polynomials_preserve_combinations", check_convexity_preservation);
    return report;
}

} // namespace cfgspace
