#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cfgspace/polynomials.hpp"

namespace cfgspace {

/// Caps on brute-force enumeration.
struct OracleLimits {
    std::size_t max_universe = 1'000'000;
    int max_omega_enum = 16;
    /// Sample count for randomized checks.
    std::size_t samples = 30;
};

/// All 2^omega Boolean elements, ordered by bit pattern.
std::vector<BoolElem> enumerate_bool(int omega, const OracleLimits& limits = {});

/// All p^omega ring elements, lexicographic by component tuple.
std::vector<RingElem> enumerate_ring(const RingSpec& spec, const OracleLimits& limits = {});

/// All p^(omega n) points of A^n, lexicographic.
std::vector<Point> enumerate_points(const RingSpec& spec, int n,
                                    const OracleLimits& limits = {});

/// Member list of a space, computed two independent ways (membership test
/// per ambient point, and closure of {base} U generators under binary
/// convex combinations) which must agree. Sorted ascending.
std::vector<Point> enumerate_members(const PointedSpace& space,
                                     const OracleLimits& limits = {});

/// Seeded generator of random algebra values for property checks.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi);
    BoolElem bool_elem(int omega);
    RingElem ring_elem(const RingSpec& spec);
    Point point(const RingSpec& spec, int n);
    /// A complete partition of 1 into `parts` (possibly zero) coefficients.
    Partition partition(int omega, std::size_t parts);
    PointedSpace space(const RingSpec& spec, int n, int max_gens);
    Polynomial polynomial(const RingSpec& spec, int n, int max_terms);
    /// A random contractive map on X into A^m, as a referential map with
    /// images masked down to the required norms.
    RefMap contractive_map(const PointedSpace& X, int m);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

struct OracleCheck {
    std::string name;
    std::size_t universe = 0;
    bool pass = false;
    std::string counterexample;
};

struct OracleReport {
    std::vector<OracleCheck> checks;

    bool all_pass() const;
};

/// Runs the whole brute-force check list over A^n for one ring: metric
/// axioms and the equivalent triangle forms, convex combination properties,
/// closed-form coordinates against exhaustive coefficient search, invariant
/// sequences by base against the ideal definition, the contractive map
/// census against the polynomial function count, solution sets against
/// filtered enumeration, variety round-trips, and isometry constructions.
/// Failures become report entries carrying a replayable counterexample.
OracleReport run_theorem_suite(const RingSpec& spec, int n, const OracleLimits& limits,
                               std::uint64_t seed, CancelToken cancel = {});

} // namespace cfgspace
