#include "cfgspace/cli.hpp"

#include <map>

namespace cfgspace {

namespace {

RingSpec job_ring(const json& input) {
    if (!input.is_object()) throw ParseError("/: job file must be a JSON object");
    if (!input.contains("ring")) throw ParseError("/: missing \"ring\"");
    return ring_spec_from_json(input["ring"], "/ring");
}

OracleLimits job_limits(const json* input, const CliOptions& options) {
    OracleLimits limits;
    limits.max_universe = options.limit;
    if (input != nullptr && input->contains("samples")) {
        const json& s = (*input)["samples"];
        if (!s.is_number_unsigned()) throw ParseError("/samples: expected a non-negative integer");
        limits.samples = s.get<std::size_t>();
    }
    return limits;
}

json members_json(const PointedSpace& space, const OracleLimits& limits) {
    json out = json::array();
    for (const Point& x : enumerate_members(space, limits)) out.push_back(to_json(x));
    return out;
}

} // namespace

json cmd_classify(const json& input, const CliOptions& options) {
    (void)options;
    const RingSpec ring = job_ring(input);
    if (!input.contains("spaces") || !input["spaces"].is_object())
        throw ParseError("/spaces: expected an object of named spaces");
    std::map<std::string, PointedSpace> spaces;
    for (const auto& [name, space_json] : input["spaces"].items())
        spaces.emplace(name, space_from_json(space_json, ring, "/spaces/" + name));
    if (spaces.empty() || spaces.size() > 2)
        throw ParseError("/spaces: classify takes one or two named spaces");

    json alphas = json::object();
    for (const auto& [name, space] : spaces) alphas[name] = to_json(alpha_invariants(space));
    json out{{"alphas", std::move(alphas)}};

    if (spaces.size() == 2) {
        const auto first = spaces.begin();
        const auto second = std::next(first);
        const IsometryResult res = classify_isometric(first->second, second->second);
        out["isometric"] = res.isometric;
        if (res.mapping.has_value()) {
            json mapping = json::array();
            for (const auto& [from, to] : *res.mapping)
                mapping.push_back(json::array({to_json(from), to_json(to)}));
            out["mapping"] = std::move(mapping);
        }
    }
    return out;
}

json cmd_solve(const json& input, const CliOptions& options) {
    const RingSpec ring = job_ring(input);
    if (!input.contains("polynomials") || !input["polynomials"].is_array() ||
        input["polynomials"].empty())
        throw ParseError("/polynomials: expected a non-empty array");
    std::vector<Polynomial> polys;
    for (std::size_t i = 0; i < input["polynomials"].size(); ++i)
        polys.push_back(polynomial_from_json(input["polynomials"][i], ring,
                                             "/polynomials/" + std::to_string(i)));
    const int n = polys.front().n_vars();
    for (const Polynomial& p : polys)
        if (p.n_vars() != n) throw ParseError("/polynomials: mixed variable counts");

    const PointedSpace variety = space_from_polys(polys, ring, n);
    json out{{"variety", to_json(variety)}};

    const OracleLimits limits = job_limits(&input, options);
    double universe = 1.0;
    for (int i = 0; i < ring.omega * n; ++i) universe *= ring.p;
    if (universe <= static_cast<double>(limits.max_universe)) {
        out["members"] = members_json(variety, limits);
        out["member_count"] = out["members"].size();
    }
    return out;
}

json cmd_interpolate(const json& input, const CliOptions& options) {
    (void)options;
    const RingSpec ring = job_ring(input);
    if (!input.contains("table") || !input["table"].is_array() || input["table"].empty())
        throw ParseError("/table: expected a non-empty array of [point, image] pairs");

    PointMapTable table;
    for (std::size_t i = 0; i < input["table"].size(); ++i) {
        const std::string path = "/table/" + std::to_string(i);
        const json& pair = input["table"][i];
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError(path + ": expected a [point, image] pair");
        table.emplace_back(point_from_json(pair[0], ring, path + "/0"),
                           point_from_json(pair[1], ring, path + "/1"));
    }

    std::vector<Polynomial> polys;
    if (table.front().first.n() == 1 && table.front().second.n() == 1) {
        RingTable rt;
        for (const auto& [x, fx] : table) {
            if (x.n() != 1 || fx.n() != 1) throw ParseError("/table: mixed dimensions");
            rt.emplace_back(x.coord(0), fx.coord(0));
        }
        polys.push_back(interp_unary(rt));
    } else {
        polys = interp_multi(table);
    }

    json out{{"polynomials", json::array()}};
    for (const Polynomial& p : polys) out["polynomials"].push_back(to_json(p));
    return out;
}

json cmd_orthogonalize(const json& input, const CliOptions& options) {
    (void)options;
    const RingSpec ring = job_ring(input);
    if (!input.contains("space")) throw ParseError("/space: missing");
    const PointedSpace space = space_from_json(input["space"], ring, "/space");
    const Referential ref = orthogonalize(space);
    json elements = json::array();
    for (const Point& x : ref.elements) elements.push_back(to_json(x));
    return json{{"referential", std::move(elements)}};
}

json cmd_base(const json& input, const CliOptions& options) {
    (void)options;
    const RingSpec ring = job_ring(input);
    if (!input.contains("space")) throw ParseError("/space: missing");
    const PointedSpace space = space_from_json(input["space"], ring, "/space");
    const Base base = build_base(space);
    json elements = json::array();
    json norms = json::array();
    for (const Point& x : base.elements()) elements.push_back(to_json(x));
    for (const BoolElem& a : base.norms()) norms.push_back(to_json(a));
    return json{{"base", std::move(elements)},
                {"norms", std::move(norms)},
                {"alphas", to_json(alpha_invariants(space))}};
}

json cmd_verify(const std::optional<json>& input, const CliOptions& options) {
    json runs = json::array();
    bool pass = true;

    const auto run_one = [&](const RingSpec& ring, int n, const OracleLimits& limits) {
        const OracleReport report = run_theorem_suite(ring, n, limits, options.seed);
        pass = pass && report.all_pass();
        runs.push_back(json{{"ring", to_json(ring)}, {"n", n}, {"report", to_json(report)}});
    };

    if (input.has_value()) {
        const RingSpec ring = job_ring(*input);
        int n = 1;
        if (input->contains("n")) {
            if (!(*input)["n"].is_number_integer() || (*input)["n"].get<int>() < 1)
                throw ParseError("/n: expected a positive integer");
            n = (*input)["n"].get<int>();
        }
        run_one(ring, n, job_limits(&*input, options));
    } else {
        const OracleLimits limits = job_limits(nullptr, options);
        for (const int p : {2, 3, 5})
            for (const int omega : {1, 2})
                for (const int n : {1, 2}) run_one(RingSpec(p, omega), n, limits);
    }
    return json{{"pass", pass}, {"runs", std::move(runs)}};
}

json run_command(const std::string& command, const std::optional<json>& input,
                 const CliOptions& options) {
    if (command == "verify") return cmd_verify(input, options);
    if (!input.has_value()) throw ParseError("/: this command needs --input");
    if (command == "classify") return cmd_classify(*input, options);
    if (command == "solve") return cmd_solve(*input, options);
    if (command == "interpolate") return cmd_interpolate(*input, options);
    if (command == "orthogonalize") return cmd_orthogonalize(*input, options);
    if (command == "base") return cmd_base(*input, options);
    throw ParseError("unknown command: " + command);
}

} // namespace cfgspace
