#include "mcx/report.hpp"

#include <sstream>

#include "mcx/complex.hpp"
#include "mcx/formulas.hpp"
#include "mcx/homology.hpp"
#include "mcx/json_io.hpp"

namespace mcx {
namespace {

using nlohmann::json;
using tilings::Family;

std::optional<HomotopyClass> formula_class(const tilings::TilingSpec& spec) {
    switch (spec.family) {
        case Family::Triangular: return formulas::triangle_homotopy(spec.t);
        case Family::Pentagonal: return formulas::pentagon_homotopy(spec.t);
        case Family::PentagonalPendant: return formulas::pendant_pentagon_homotopy(spec.t);
        default: return std::nullopt; // no closed form for the other families
    }
}

bool class_matches_profile(const HomotopyClass& cls, const HomologyProfile& profile) {
    if (!profile.torsion_free()) return false;
    std::map<int, BigInt> betti;
    for (const auto& [d, b] : profile.betti) betti[d] = b;
    return cls.betti_shadow() == betti;
}

} // namespace

ChannelSelection channels_from_csv(const std::string& csv) {
    ChannelSelection sel{false, false, false};
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "homology")
            sel.homology = true;
        else if (item == "engine")
            sel.engine = true;
        else if (item == "formula")
            sel.formula = true;
        else if (!item.empty())
            fail(ErrorCode::InvalidArgument, "unknown channel '" + item + "'");
    }
    if (!sel.homology && !sel.engine && !sel.formula)
        fail(ErrorCode::InvalidArgument, "no channels selected");
    return sel;
}

RunReport run_verification(const tilings::TilingSpec& spec, const ChannelSelection& channels,
                           std::size_t budget, Strategy engine_strategy,
                           std::optional<long long> seed) {
    json body;
    body["spec"] = io::tiling_spec_to_json(spec);
    if (seed) body["seed"] = *seed;

    Multigraph g = tilings::generate(spec);

    std::optional<HomologyProfile> homology_result;
    std::optional<HomotopyClass> engine_result;
    std::optional<HomotopyClass> formula_result;
    json ch = json::object();

    if (channels.homology) {
        json c;
        try {
            SimplicialComplex k = SimplicialComplex::matching_complex(g);
            HomologyProfile profile = reduced_homology(k);
            homology_result = profile;
            c = io::homology_to_json(profile, euler_characteristic(k));
            c["available"] = true;
            c["label"] = "homology-consistent";
            if (auto consistent = wedge_profile(profile))
                c["class"] = consistent->to_text();
        } catch (const Error& e) {
            c = {{"available", false}, {"reason", e.what()}};
        }
        ch["homology"] = c;
    }

    if (channels.engine) {
        json c;
        try {
            ReduceOutcome outcome = reduce(g, engine_strategy, budget);
            if (const Reduced* r = std::get_if<Reduced>(&outcome)) {
                bool verified = verify_certificate(*r->trace);
                engine_result = r->cls;
                c["available"] = true;
                c["class"] = r->cls.to_text();
                c["class_json"] = io::homotopy_to_json(r->cls);
                c["certificate_verified"] = verified;
                c["nodes"] = r->nodes;
                c["label"] = verified ? "certified-by-trace" : "unverified-trace";
            } else {
                const Partial& p = std::get<Partial>(outcome);
                c["available"] = false;
                c["reason"] = p.budget_exhausted ? "budget exhausted" : "no applicable rule";
                c["stuck_graph"] = io::graph_to_json(p.stuck);
                c["nodes"] = p.nodes;
            }
        } catch (const Error& e) {
            c = {{"available", false}, {"reason", e.what()}};
        }
        ch["engine"] = c;
    }

    if (channels.formula) {
        json c;
        if (auto cls = formula_class(spec)) {
            formula_result = *cls;
            c["available"] = true;
            c["class"] = cls->to_text();
            c["class_json"] = io::homotopy_to_json(*cls);
            c["label"] = "formula";
        } else {
            c = {{"available", false}, {"reason", "no closed form for this family"}};
        }
        ch["formula"] = c;
    }

    body["channels"] = ch;

    json agreement = json::object();
    bool all = true;
    if (homology_result && engine_result) {
        bool ok = class_matches_profile(*engine_result, *homology_result);
        agreement["homology~engine"] = ok;
        all = all && ok;
    }
    if (homology_result && formula_result) {
        bool ok = class_matches_profile(*formula_result, *homology_result);
        agreement["homology~formula"] = ok;
        all = all && ok;
    }
    if (engine_result && formula_result) {
        bool ok = *engine_result == *formula_result;
        agreement["engine~formula"] = ok;
        all = all && ok;
    }
    agreement["all"] = all;
    body["agreement"] = agreement;

    return RunReport{std::move(body), all};
}

} // namespace mcx
