#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cfgspace/contractive_maps.hpp"

namespace cfgspace {

/// Graded lexicographic order on exponent tuples.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Multivariate polynomial over A = GF(p)^Omega in canonical reduced form:
/// every exponent is below p (reduction by x^p = x) and zero coefficients
/// are absent. Reduced forms represent functions A^n -> A bijectively, so
/// data equality is function equality.
class Polynomial {
public:
    using TermMap = std::map<std::vector<int>, RingElem, GradedLexLess>;

    /// The zero polynomial.
    Polynomial(RingSpec spec, int n_vars);

    static Polynomial constant(const RingSpec& spec, int n_vars, const RingElem& c);
    static Polynomial variable(const RingSpec& spec, int n_vars, int var);
    /// Builds from arbitrary exponent tuples (any size >= 0 entries),
    /// reducing exponents and merging terms.
    static Polynomial from_terms(const RingSpec& spec, int n_vars,
                                 const std::vector<std::pair<std::vector<int>, RingElem>>& terms);

    const RingSpec& spec() const { return spec_; }
    int n_vars() const { return n_vars_; }
    const TermMap& monomials() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    RingElem eval(const Point& x) const;

    Polynomial pow(int e) const;
    Polynomial scaled(const RingElem& c) const;

    std::string str() const;

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        return f.spec_ == g.spec_ && f.n_vars_ == g.n_vars_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

private:
    RingSpec spec_;
    int n_vars_;
    TermMap terms_;
};

/// Folds an exponent into {0} U {1..p-1} using x^p = x.
int reduce_exponent(int e, int p);

/// X^(p-1) in one variable; evaluates to e(x) everywhere.
Polynomial e_polynomial(const RingSpec& spec);

/// A map A -> A given by a full value table.
using RingTable = std::vector<std::pair<RingElem, RingElem>>;

/// Lagrange-style interpolation of a contractive table on A through the
/// referential of nonzero constants: the result is the unique reduced
/// polynomial agreeing with the table everywhere.
Polynomial interp_unary(const RingTable& table);

/// Componentwise interpolation of a contractive table A^n -> A^m. Returns
/// one reduced polynomial per output component.
std::vector<Polynomial> interp_multi(const PointMapTable& table);

/// Interpolation from values only, for callers that already know f is
/// contractive (it is evaluated at 0 and a referential of A^n only).
std::vector<Polynomial> interpolate_contractive(const RingSpec& spec, int n, int m,
                                                const std::function<Point(const Point&)>& f);

/// The common zero locus of a polynomial list as a pointed subspace of
/// A^n (possibly empty). An empty list yields all of A^n.
PointedSpace space_from_polys(const std::vector<Polynomial>& polys, const RingSpec& spec, int n);

struct DefiningPoly {
    Polynomial poly;
    /// Set when the input space was empty and the constant 1 was returned.
    bool from_empty;
};

/// A single polynomial whose zero locus is exactly the given subspace of
/// A^n, via its kernel map into B. The empty space gets the constant 1.
DefiningPoly polys_from_space(const PointedSpace& U);

} // namespace cfgspace
