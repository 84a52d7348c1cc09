#include "mcx/json_io.hpp"

#include <sstream>

namespace mcx::io {
namespace {

template <typename T>
const json& expect(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail(ErrorCode::Parse, std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace

json bigint_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return v.str();
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    fail(ErrorCode::Parse, "expected an integer or a decimal string");
}

json graph_to_json(const Multigraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
    return json{{"vertices", g.vertices()}, {"edges", edges}};
}

Multigraph graph_from_json(const json& j) {
    std::vector<std::string> vertices;
    for (const auto& v : expect<json>(j, "vertices")) {
        if (!v.is_string()) fail(ErrorCode::Parse, "vertex labels must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<EdgeRecord> edges;
    for (const auto& e : expect<json>(j, "edges")) {
        edges.push_back(EdgeRecord{expect<json>(e, "id").get<std::string>(),
                                   expect<json>(e, "u").get<std::string>(),
                                   expect<json>(e, "v").get<std::string>()});
    }
    return Multigraph::build(std::move(vertices), std::move(edges));
}

json complex_to_json(const SimplicialComplex& k) {
    json facets = json::array();
    for (const auto& f : k.facets()) facets.push_back(f);
    return json{{"ground", k.ground()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
    std::vector<std::string> ground;
    for (const auto& t : expect<json>(j, "ground")) ground.push_back(t.get<std::string>());
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : expect<json>(j, "facets"))
        facets.push_back(f.get<std::vector<std::string>>());
    return SimplicialComplex::from_facets(std::move(ground), facets);
}

json homology_to_json(const HomologyProfile& h, long long euler) {
    json betti = json::object();
    for (const auto& [d, b] : h.betti) betti[std::to_string(d)] = b;
    json torsion = json::object();
    for (const auto& [d, factors] : h.torsion) {
        json list = json::array();
        for (const auto& f : factors) list.push_back(bigint_to_json(f));
        torsion[std::to_string(d)] = list;
    }
    return json{{"betti", betti}, {"torsion", torsion}, {"euler", euler}};
}

json homology_to_json(const HomologyProfile& h) {
    return homology_to_json(h, h.reduced_euler());
}

json homotopy_to_json(const HomotopyClass& c) {
    json spheres = json::object();
    for (const auto& [d, count] : c.spheres()) spheres[std::to_string(d)] = bigint_to_json(count);
    return json{{"contractible", c.is_contractible()}, {"spheres", spheres}};
}

HomotopyClass homotopy_from_json(const json& j) {
    std::map<int, BigInt> spheres;
    for (const auto& [key, value] : expect<json>(j, "spheres").items())
        spheres[std::stoi(key)] = bigint_from_json(value);
    bool contractible = expect<json>(j, "contractible").get<bool>();
    if (contractible && !spheres.empty())
        fail(ErrorCode::Parse, "contractible homotopy class with sphere entries");
    return HomotopyClass::wedge_of(std::move(spheres));
}

json rule_instance_to_json(const RuleInstance& r) {
    json witness = json::object();
    if (!r.e.empty()) witness["e"] = r.e;
    if (!r.h.empty()) witness["h"] = r.h;
    if (!r.x.empty()) witness["x"] = r.x;
    if (!r.path.empty()) witness["path"] = r.path;
    return json{{"rule", rule_name(r.rule)}, {"witness", witness}};
}

RuleInstance rule_instance_from_json(const json& j) {
    auto rule = rule_from_name(expect<json>(j, "rule").get<std::string>());
    if (!rule) fail(ErrorCode::Parse, "unknown rule name");
    RuleInstance r{.rule = *rule};
    const json& witness = expect<json>(j, "witness");
    if (witness.contains("e")) r.e = witness.at("e").get<std::string>();
    if (witness.contains("h")) r.h = witness.at("h").get<std::string>();
    if (witness.contains("x")) r.x = witness.at("x").get<std::string>();
    if (witness.contains("path")) r.path = witness.at("path").get<std::vector<std::string>>();
    return r;
}

json certificate_to_json(const TraceNode& node) {
    json j = rule_instance_to_json(node.rule);
    j["graph_key"] = node.graph_key;
    j["graph"] = graph_to_json(node.graph);
    j["combinator"] = combinator_name(node.combinator);
    j["class"] = homotopy_to_json(node.cls);
    if (node.combinator == Combinator::Leaf) {
        j["leaf"] = homotopy_to_json(*node.leaf);
    } else {
        j["shifts"] = node.shifts;
        json children = json::array();
        for (const auto& child : node.children) children.push_back(certificate_to_json(*child));
        j["children"] = children;
    }
    return j;
}

CertPtr certificate_from_json(const json& j) {
    auto node = std::make_shared<TraceNode>();
    node->rule = rule_instance_from_json(j);
    node->graph_key = expect<json>(j, "graph_key").get<std::string>();
    node->graph = graph_from_json(expect<json>(j, "graph"));
    auto comb = combinator_from_name(expect<json>(j, "combinator").get<std::string>());
    if (!comb) fail(ErrorCode::Parse, "unknown combinator name");
    node->combinator = *comb;
    node->cls = homotopy_from_json(expect<json>(j, "class"));
    if (node->combinator == Combinator::Leaf) {
        node->leaf = homotopy_from_json(expect<json>(j, "leaf"));
    } else {
        node->shifts = expect<json>(j, "shifts").get<std::vector<int>>();
        for (const auto& child : expect<json>(j, "children"))
            node->children.push_back(certificate_from_json(child));
    }
    return node;
}

json tiling_spec_to_json(const tilings::TilingSpec& spec) {
    using tilings::Family;
    json j{{"family", tilings::family_name(spec.family)}};
    switch (spec.family) {
        case Family::Triangular:
        case Family::Pentagonal:
        case Family::PentagonalPendant:
            j["t"] = spec.t;
            break;
        case Family::Extended:
            j["s"] = spec.s;
            j["k"] = spec.k;
            j["l"] = spec.l;
            if (!spec.offsets.empty()) j["offsets"] = spec.offsets;
            break;
        case Family::Path:
        case Family::Cycle:
            j["n"] = spec.n;
            break;
    }
    return j;
}

tilings::TilingSpec tiling_spec_from_json(const json& j) {
    using tilings::Family;
    auto family = tilings::family_from_name(expect<json>(j, "family").get<std::string>());
    if (!family) fail(ErrorCode::Parse, "unknown family name");
    tilings::TilingSpec spec;
    spec.family = *family;
    switch (*family) {
        case Family::Triangular:
        case Family::Pentagonal:
        case Family::PentagonalPendant:
            spec.t = expect<json>(j, "t").get<int>();
            break;
        case Family::Extended:
            spec.s = expect<json>(j, "s").get<std::vector<int>>();
            spec.k = expect<json>(j, "k").get<int>();
            spec.l = expect<json>(j, "l").get<int>();
            if (j.contains("offsets")) spec.offsets = j.at("offsets").get<std::vector<int>>();
            break;
        case Family::Path:
        case Family::Cycle:
            spec.n = expect<json>(j, "n").get<int>();
            break;
    }
    return spec;
}

json sphere_table_rows(const formulas::SphereCountTable& table) {
    json rows = json::array();
    for (int t = 2; t <= table.t_max; ++t) {
        json spheres = json::object();
        for (const auto& [d, c] : table.row(t)) spheres[std::to_string(d)] = bigint_to_json(c);
        rows.push_back({{"t", t}, {"spheres", spheres}});
    }
    return rows;
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::Parse, "invalid JSON");
    return j;
}

} // namespace mcx::io
