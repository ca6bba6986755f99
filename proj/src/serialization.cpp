#include "cfgspace/serialization.hpp"

namespace cfgspace {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing key \"") + key + '"');
    return *it;
}

int int_at(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

} // namespace

json to_json(const BoolElem& a) {
    json out = json::array();
    for (int i = 0; i < a.omega_size(); ++i) out.push_back(a.test(i) ? 1 : 0);
    return out;
}

json to_json(const RingSpec& spec) { return json{{"p", spec.p}, {"omega", spec.omega}}; }

json to_json(const RingElem& x) {
    json out = json::array();
    for (int c : x.components()) out.push_back(c);
    return out;
}

json to_json(const Point& x) {
    json out = json::array();
    for (const RingElem& c : x.coords()) out.push_back(to_json(c));
    return out;
}

json to_json(const PointedSpace& space) {
    if (space.is_empty()) return json{{"empty", true}, {"n", space.n()}};
    json gens = json::array();
    for (const Point& g : space.generators()) gens.push_back(to_json(g));
    return json{{"base", to_json(space.base())}, {"generators", std::move(gens)}};
}

json to_json(const InvariantSeq& seq) {
    if (seq.is_empty_space()) return json{{"empty", true}};
    json out = json::array();
    for (const BoolElem& a : seq.alphas()) out.push_back(to_json(a));
    return out;
}

json to_json(const Polynomial& poly) {
    json monomials = json::array();
    for (const auto& [exp, coeff] : poly.monomials()) {
        json e = json::array();
        for (int v : exp) e.push_back(v);
        monomials.push_back(json{{"exp", std::move(e)}, {"coeff", to_json(coeff)}});
    }
    return json{{"n", poly.n_vars()}, {"monomials", std::move(monomials)}};
}

json to_json(const RefMap& f) {
    json pairs = json::array();
    for (std::size_t i = 0; i < f.domain.elements.size(); ++i)
        pairs.push_back(json::array({to_json(f.domain.elements[i]), to_json(f.images[i])}));
    return json{{"base", to_json(f.domain.space.base())},
                {"base_image", to_json(f.base_image)},
                {"pairs", std::move(pairs)}};
}

json to_json(const OracleCheck& check) {
    json out{{"name", check.name}, {"universe", check.universe}, {"pass", check.pass}};
    if (!check.counterexample.empty()) out["counterexample"] = check.counterexample;
    return out;
}

json to_json(const OracleReport& report) {
    json checks = json::array();
    for (const OracleCheck& c : report.checks) checks.push_back(to_json(c));
    return json{{"pass", report.all_pass()}, {"checks", std::move(checks)}};
}

BoolElem bool_elem_from_json(const json& j, int omega, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of 0/1");
    if (static_cast<int>(j.size()) != omega)
        fail(path, "expected " + std::to_string(omega) + " atom flags");
    std::uint32_t bits = 0;
    for (int i = 0; i < omega; ++i) {
        const int v = int_at(j[static_cast<std::size_t>(i)], path + "/" + std::to_string(i));
        if (v != 0 && v != 1) fail(path + "/" + std::to_string(i), "atom flag must be 0 or 1");
        if (v) bits |= 1u << i;
    }
    return BoolElem(bits, omega);
}

RingSpec ring_spec_from_json(const json& j, const std::string& path) {
    const int p = int_at(member(j, "p", path), path + "/p");
    const int omega = int_at(member(j, "omega", path), path + "/omega");
    try {
        return RingSpec(p, omega);
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

RingElem ring_elem_from_json(const json& j, const RingSpec& spec, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of residues");
    if (static_cast<int>(j.size()) != spec.omega)
        fail(path, "expected " + std::to_string(spec.omega) + " residues");
    std::vector<int> comps;
    comps.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const int c = int_at(j[i], path + "/" + std::to_string(i));
        if (c < 0 || c >= spec.p)
            fail(path + "/" + std::to_string(i),
                 "residue out of range for modulus " + std::to_string(spec.p));
        comps.push_back(c);
    }
    return RingElem(spec, std::move(comps));
}

Point point_from_json(const json& j, const RingSpec& spec, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of ring elements");
    std::vector<RingElem> coords;
    coords.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        coords.push_back(ring_elem_from_json(j[i], spec, path + "/" + std::to_string(i)));
    return Point(spec, std::move(coords));
}

PointedSpace space_from_json(const json& j, const RingSpec& spec, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a space object");
    if (j.contains("empty")) {
        if (!j["empty"].is_boolean() || !j["empty"].get<bool>())
            fail(path + "/empty", "\"empty\" must be true when present");
        const int n = int_at(member(j, "n", path), path + "/n");
        if (n < 1) fail(path + "/n", "ambient dimension must be positive");
        return PointedSpace::empty_space(spec, n);
    }
    Point base = point_from_json(member(j, "base", path), spec, path + "/base");
    const json& gens_json = member(j, "generators", path);
    if (!gens_json.is_array()) fail(path + "/generators", "expected an array of points");
    std::vector<Point> gens;
    gens.reserve(gens_json.size());
    for (std::size_t i = 0; i < gens_json.size(); ++i) {
        gens.push_back(
            point_from_json(gens_json[i], spec, path + "/generators/" + std::to_string(i)));
        if (gens.back().n() != base.n())
            fail(path + "/generators/" + std::to_string(i),
                 "generator dimension does not match the base point");
    }
    return PointedSpace(std::move(base), std::move(gens));
}

Polynomial polynomial_from_json(const json& j, const RingSpec& spec, const std::string& path) {
    const int n = int_at(member(j, "n", path), path + "/n");
    if (n < 1) fail(path + "/n", "variable count must be positive");
    const json& monomials = member(j, "monomials", path);
    if (!monomials.is_array()) fail(path + "/monomials", "expected an array of monomials");
    std::vector<std::pair<std::vector<int>, RingElem>> terms;
    terms.reserve(monomials.size());
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        const std::string mpath = path + "/monomials/" + std::to_string(i);
        const json& exp_json = member(monomials[i], "exp", mpath);
        if (!exp_json.is_array() || static_cast<int>(exp_json.size()) != n)
            fail(mpath + "/exp", "expected " + std::to_string(n) + " exponents");
        std::vector<int> exp;
        exp.reserve(exp_json.size());
        for (std::size_t k = 0; k < exp_json.size(); ++k) {
            const int e = int_at(exp_json[k], mpath + "/exp/" + std::to_string(k));
            if (e < 0) fail(mpath + "/exp/" + std::to_string(k), "exponents must be non-negative");
            exp.push_back(e);
        }
        terms.emplace_back(std::move(exp),
                           ring_elem_from_json(member(monomials[i], "coeff", mpath), spec,
                                               mpath + "/coeff"));
    }
    return Polynomial::from_terms(spec, n, terms);
}

RefMap refmap_from_json(const json& j, const RingSpec& spec, const std::string& path) {
    Point base = point_from_json(member(j, "base", path), spec, path + "/base");
    Point base_image = point_from_json(member(j, "base_image", path), spec, path + "/base_image");
    const json& pairs = member(j, "pairs", path);
    if (!pairs.is_array()) fail(path + "/pairs", "expected an array of [element, image] pairs");
    std::vector<Point> elements;
    std::vector<Point> images;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const std::string ppath = path + "/pairs/" + std::to_string(i);
        if (!pairs[i].is_array() || pairs[i].size() != 2)
            fail(ppath, "expected an [element, image] pair");
        elements.push_back(point_from_json(pairs[i][0], spec, ppath + "/0"));
        images.push_back(point_from_json(pairs[i][1], spec, ppath + "/1"));
    }

    PointedSpace domain_space(base, elements);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] == base) fail(path + "/pairs", "referential elements must differ from the base");
        for (std::size_t k = i + 1; k < elements.size(); ++k)
            if (!is_orthogonal(domain_space, elements[i], elements[k]))
                fail(path + "/pairs", "domain elements are not pairwise orthogonal");
    }
    try {
        return make_refmap(Referential{std::move(elements), std::move(domain_space)},
                           std::move(base_image), std::move(images));
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

} // namespace cfgspace
