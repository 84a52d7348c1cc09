#pragma once

#include <string>

#include <json.hpp>

#include "mcx/complex.hpp"
#include "mcx/formulas.hpp"
#include "mcx/homology.hpp"
#include "mcx/multigraph.hpp"
#include "mcx/reduction.hpp"
#include "mcx/sphere_calculus.hpp"
#include "mcx/tilings.hpp"

namespace mcx::io {

using nlohmann::json;

// Graph JSON: {"vertices":["a0",...],"edges":[{"id":"e1","u":"a0","v":"a1"},...]},
// vertices and edges sorted lexicographically.
json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const json& j);

// Complex JSON: {"ground":[...],"facets":[[...],...]}; consumers re-close downward.
json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

// Report JSON: {"betti":{"1":5},"torsion":{},"euler":-5}.
json homology_to_json(const HomologyProfile& h, long long euler);
json homology_to_json(const HomologyProfile& h);

// {"contractible":false,"spheres":{"1":2,"3":1}}.
json homotopy_to_json(const HomotopyClass& c);
HomotopyClass homotopy_from_json(const json& j);

// Nested certificate: {"graph_key":...,"rule":...,"witness":...,
// "combinator":...,"shifts":[...],"children":[...]} plus the graph itself
// so verification can re-check witnesses.
json certificate_to_json(const TraceNode& node);
CertPtr certificate_from_json(const json& j);

json rule_instance_to_json(const RuleInstance& r);
RuleInstance rule_instance_from_json(const json& j);

json tiling_spec_to_json(const tilings::TilingSpec& spec);
tilings::TilingSpec tiling_spec_from_json(const json& j);

json sphere_table_rows(const formulas::SphereCountTable& table);

// BigInt encoding: plain number while it fits in 64 bits, decimal string beyond.
json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

std::string dump(const json& j, int indent = -1);
json parse(const std::string& text); // throws Error(Parse) on bad input

} // namespace mcx::io
