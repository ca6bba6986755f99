#include "cfgspace/polynomials.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cfgspace {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

int reduce_exponent(int e, int p) {
    if (e < 0) throw DimensionError("negative exponent");
    if (e < p) return e;
    return (e - 1) % (p - 1) + 1;
}

Polynomial::Polynomial(RingSpec spec, int n_vars) : spec_(spec), n_vars_(n_vars) {
    if (n_vars < 1) throw DimensionError("polynomials need at least one variable");
}

Polynomial Polynomial::constant(const RingSpec& spec, int n_vars, const RingElem& c) {
    return from_terms(spec, n_vars, {{std::vector<int>(static_cast<std::size_t>(n_vars), 0), c}});
}

Polynomial Polynomial::variable(const RingSpec& spec, int n_vars, int var) {
    if (var < 0 || var >= n_vars) throw DimensionError("variable index out of range");
    std::vector<int> exp(static_cast<std::size_t>(n_vars), 0);
    exp[static_cast<std::size_t>(var)] = 1;
    return from_terms(spec, n_vars, {{std::move(exp), RingElem::one(spec)}});
}

Polynomial Polynomial::from_terms(
    const RingSpec& spec, int n_vars,
    const std::vector<std::pair<std::vector<int>, RingElem>>& terms) {
    Polynomial out(spec, n_vars);
    for (const auto& [exp, coeff] : terms) {
        if (exp.size() != static_cast<std::size_t>(n_vars))
            throw DimensionError("exponent tuple does not match the variable count");
        if (coeff.spec() != spec) throw DimensionError("coefficient over a different ring");
        std::vector<int> red(exp.size());
        for (std::size_t i = 0; i < exp.size(); ++i) red[i] = reduce_exponent(exp[i], spec.p);
        const auto it = out.terms_.find(red);
        if (it == out.terms_.end()) {
            if (!coeff.is_zero()) out.terms_.emplace(std::move(red), coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [exp, coeff] : terms_)
        d = std::max(d, std::accumulate(exp.begin(), exp.end(), 0));
    return d;
}

RingElem Polynomial::eval(const Point& x) const {
    if (x.spec() != spec_) throw DimensionError("point over a different ring");
    if (x.n() != n_vars_) throw DimensionError("point dimension does not match variable count");
    RingElem acc = RingElem::zero(spec_);
    for (const auto& [exp, coeff] : terms_) {
        RingElem term = coeff;
        for (int v = 0; v < n_vars_; ++v) {
            const int e = exp[static_cast<std::size_t>(v)];
            if (e > 0) term = term * x.coord(v).pow(e);
        }
        acc = acc + term;
    }
    return acc;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw DimensionError("negative exponent");
    Polynomial acc = constant(spec_, n_vars_, RingElem::one(spec_));
    for (int k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

Polynomial Polynomial::scaled(const RingElem& c) const {
    std::vector<std::pair<std::vector<int>, RingElem>> terms;
    terms.reserve(terms_.size());
    for (const auto& [exp, coeff] : terms_) terms.emplace_back(exp, coeff * c);
    return from_terms(spec_, n_vars_, terms);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        os << it->second.str();
        for (int v = 0; v < n_vars_; ++v) {
            const int e = it->first[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            os << "*X" << v;
            if (e > 1) os << '^' << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

void require_same_shape(const Polynomial& f, const Polynomial& g) {
    if (f.spec() != g.spec()) throw DimensionError("polynomials over different rings");
    if (f.n_vars() != g.n_vars()) throw DimensionError("polynomials in different variable counts");
}

std::vector<std::pair<std::vector<int>, RingElem>> terms_of(const Polynomial& f) {
    return {f.monomials().begin(), f.monomials().end()};
}

} // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    require_same_shape(f, g);
    auto terms = terms_of(f);
    for (const auto& [exp, coeff] : g.monomials()) terms.emplace_back(exp, coeff);
    return Polynomial::from_terms(f.spec(), f.n_vars(), terms);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    require_same_shape(f, g);
    auto terms = terms_of(f);
    for (const auto& [exp, coeff] : g.monomials()) terms.emplace_back(exp, -coeff);
    return Polynomial::from_terms(f.spec(), f.n_vars(), terms);
}

Polynomial Polynomial::operator-() const {
    return Polynomial(spec_, n_vars_) - *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_shape(f, g);
    std::vector<std::pair<std::vector<int>, RingElem>> terms;
    terms.reserve(f.monomials().size() * g.monomials().size());
    for (const auto& [ea, ca] : f.monomials()) {
        for (const auto& [eb, cb] : g.monomials()) {
            std::vector<int> exp(ea.size());
            for (std::size_t i = 0; i < exp.size(); ++i) exp[i] = ea[i] + eb[i];
            terms.emplace_back(std::move(exp), ca * cb);
        }
    }
    return Polynomial::from_terms(f.spec(), f.n_vars(), terms);
}

Polynomial e_polynomial(const RingSpec& spec) {
    return Polynomial::variable(spec, 1, 0).pow(spec.p - 1);
}

namespace {

/// u \/ v = u + v - uv for polynomials taking idempotent values.
Polynomial idempotent_join(const Polynomial& u, const Polynomial& v) { return u + v - u * v; }

/// The polynomial x -> e(x_v - c) = (X_v - c)^(p-1).
Polynomial shifted_e_poly(const RingSpec& spec, int n_vars, int var, const RingElem& c) {
    const Polynomial x = Polynomial::variable(spec, n_vars, var);
    return (x - Polynomial::constant(spec, n_vars, c)).pow(spec.p - 1);
}

/// The polynomial x -> d(x, v) over A^n.
Polynomial dist_poly(const RingSpec& spec, int n_vars, const Point& v) {
    Polynomial d(spec, n_vars);
    for (int i = 0; i < n_vars; ++i)
        d = idempotent_join(d, shifted_e_poly(spec, n_vars, i, v.coord(i)));
    return d;
}

std::size_t checked_universe(const RingSpec& spec, int n) {
    double size = 1.0;
    for (int i = 0; i < spec.omega * n; ++i) size *= spec.p;
    if (size > 1e6) throw LimitError("interpolation table universe exceeds the cap");
    return static_cast<std::size_t>(size);
}

} // namespace

Polynomial interp_unary(const RingTable& table) {
    if (table.empty()) throw TotalityError("empty interpolation table");
    const RingSpec spec = table.front().first.spec();
    const std::size_t universe = checked_universe(spec, 1);

    std::map<RingElem, RingElem> fn;
    for (const auto& [x, fx] : table) {
        if (x.spec() != spec || fx.spec() != spec)
            throw DimensionError("table entries over different rings");
        const auto [it, inserted] = fn.emplace(x, fx);
        if (!inserted && it->second != fx)
            throw TotalityError("table maps " + x.str() + " to two different images");
    }
    if (fn.size() != universe) throw TotalityError("table does not cover the whole ring");
    for (auto i = fn.begin(); i != fn.end(); ++i)
        for (auto j = std::next(i); j != fn.end(); ++j)
            if (!leq(idempotent_of(i->second - j->second), idempotent_of(i->first - j->first)))
                throw ContractivityError("table is not contractive");

    const RingElem f0 = fn.at(RingElem::zero(spec));
    const PointedSpace A(Point::of(RingElem::zero(spec)), [&] {
        std::vector<Point> gens;
        for (const RingElem& c : canonical_generators(spec)) gens.push_back(Point::of(c));
        return gens;
    }());
    const Referential ref = orthogonalize(A);

    const Polynomial X = Polynomial::variable(spec, 1, 0);
    Polynomial g(spec, 1);
    for (std::size_t i = 0; i < ref.elements.size(); ++i) {
        const RingElem xi = ref.elements[i].coord(0);
        // g_i(x) = x * prod_{j != i} (x - x_j): zero on the rest of the
        // referential and on 0, a unit multiple of e(x_i) at x_i.
        Polynomial gi = X;
        for (std::size_t j = 0; j < ref.elements.size(); ++j) {
            if (j == i) continue;
            gi = gi * (X - Polynomial::constant(spec, 1, ref.elements[j].coord(0)));
        }
        const RingElem gi_at_xi = gi.eval(ref.elements[i]);
        const RingElem unit = gi_at_xi + embed(idempotent_of(xi).complement(), spec);
        if (unit * embed(idempotent_of(xi), spec) != gi_at_xi)
            throw InternalCheckError("unit correction does not match g_i(x_i)");
        g = g + gi.scaled(unit_inverse(unit) * (fn.at(xi) - f0));
    }
    return g + Polynomial::constant(spec, 1, f0);
}

std::vector<Polynomial> interpolate_contractive(const RingSpec& spec, int n, int m,
                                                const std::function<Point(const Point&)>& f) {
    if (n < 1 || m < 1) throw DimensionError("interpolation needs positive dimensions");
    const PointedSpace ambient = PointedSpace::ambient(spec, n);
    const Referential ref = orthogonalize(ambient);

    const Point f0 = f(ambient.base());
    if (f0.n() != m) throw DimensionError("image dimension does not match m");

    // |x| as a polynomial map A^n -> A.
    Polynomial norm_poly(spec, n);
    for (int v = 0; v < n; ++v)
        norm_poly = idempotent_join(norm_poly, shifted_e_poly(spec, n, v, RingElem::zero(spec)));

    std::vector<Polynomial> components(static_cast<std::size_t>(m), Polynomial(spec, n));
    for (std::size_t i = 0; i < ref.elements.size(); ++i) {
        // G_i(x) = |x| * prod_{j != i} d(x, x_j)
        Polynomial Gi = norm_poly;
        for (std::size_t j = 0; j < ref.elements.size(); ++j) {
            if (j == i) continue;
            Gi = Gi * dist_poly(spec, n, ref.elements[j]);
        }
        const Point fi = f(ref.elements[i]) - f0;
        for (int l = 0; l < m; ++l)
            components[static_cast<std::size_t>(l)] =
                components[static_cast<std::size_t>(l)] + Gi.scaled(fi.coord(l));
    }
    for (int l = 0; l < m; ++l)
        components[static_cast<std::size_t>(l)] =
            components[static_cast<std::size_t>(l)] + Polynomial::constant(spec, n, f0.coord(l));
    return components;
}

std::vector<Polynomial> interp_multi(const PointMapTable& table) {
    if (table.empty()) throw TotalityError("empty interpolation table");
    const RingSpec spec = table.front().first.spec();
    const int n = table.front().first.n();
    const int m = table.front().second.n();
    const std::size_t universe = checked_universe(spec, n);

    std::map<Point, Point> fn;
    for (const auto& [x, fx] : table) {
        if (x.spec() != spec || x.n() != n || fx.spec() != spec || fx.n() != m)
            throw DimensionError("inconsistent table entry shapes");
        const auto [it, inserted] = fn.emplace(x, fx);
        if (!inserted && it->second != fx)
            throw TotalityError("table maps " + x.str() + " to two different images");
    }
    if (fn.size() != universe) throw TotalityError("table does not cover A^n");
    if (!is_contractive_table(table)) throw ContractivityError("table is not contractive");

    const auto polys = interpolate_contractive(
        spec, n, m, [&](const Point& x) { return fn.at(x); });

    for (const auto& [x, fx] : fn)
        for (int l = 0; l < m; ++l)
            if (polys[static_cast<std::size_t>(l)].eval(x) != fx.coord(l))
                throw InternalCheckError("interpolation disagrees with the table");
    return polys;
}

PointedSpace space_from_polys(const std::vector<Polynomial>& polys, const RingSpec& spec, int n) {
    const PointedSpace ambient = PointedSpace::ambient(spec, n);
    PointedSpace variety = ambient;
    const Point zero_target = Point::of(RingElem::zero(spec));
    for (const Polynomial& poly : polys) {
        if (poly.spec() != spec || poly.n_vars() != n)
            throw DimensionError("polynomial does not match the declared ambient");
        const PointedSpace locus = zero_set(
            ambient, [&](const Point& x) { return Point::of(poly.eval(x)); }, zero_target);
        variety = intersect_subspaces(variety, locus, ambient);
        if (variety.is_empty()) break;
    }
    return variety;
}

DefiningPoly polys_from_space(const PointedSpace& U) {
    const RingSpec spec = U.spec();
    if (U.is_empty())
        return DefiningPoly{
            Polynomial::constant(spec, U.n(), RingElem::one(spec)), /*from_empty=*/true};

    const PointedSpace ambient = PointedSpace::ambient(spec, U.n());
    const BoolRefMap kernel = kernel_map(U, ambient);
    const auto g = [&](const Point& x) { return Point::of(embed(evaluate(kernel, x), spec)); };
    return DefiningPoly{interpolate_contractive(spec, U.n(), 1, g)[0], /*from_empty=*/false};
}

} // namespace cfgspace
