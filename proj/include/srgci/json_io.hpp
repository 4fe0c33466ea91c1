// JSON ingestion of complexes and ideals, and serialization of reports.
#pragma once

#include <json.hpp>
#include <string>

#include "classify.hpp"
#include "cohomology.hpp"
#include "complex.hpp"
#include "monomial.hpp"
#include "resolution.hpp"

namespace srgci {

using nlohmann::json;

// {"n": int, "facets": [[int,...],...]}
inline SimplicialComplex parse_complex(const json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Face> facets;
        for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
        return SimplicialComplex::create(n, facets);
    } catch (const json::exception& e) {
        throw Error(errc::parse_error, e.what());
    }
}

// {"n": int, "generators": [[e1,...,en],...]}
inline MonomialIdeal parse_ideal(const json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Exponents> gens;
        for (const auto& g : j.at("generators")) gens.push_back(g.get<std::vector<int>>());
        return MonomialIdeal(n, std::move(gens));
    } catch (const json::exception& e) {
        throw Error(errc::parse_error, e.what());
    }
}

inline json complex_to_json(const SimplicialComplex& c) {
    return json{{"n", c.vertex_count()}, {"facets", c.facets()}};
}

inline json ideal_to_json(const MonomialIdeal& i) {
    return json{{"n", i.variable_count()}, {"generators", i.generators()}};
}

inline json to_json(const GciReport& r) {
    json j{{"verdict", r.verdict},
           {"preconditions",
            {{"core_equals_delta", r.core_equals_delta},
             {"is_pure", r.is_pure},
             {"is_complete_intersection", r.is_ci}}}};
    if (r.is_ci) {
        j["short_circuit"] = "complete intersection";
        return j;
    }
    j["conditions"] = {{"pure", r.cond_pure},
                       {"cu_exists", r.cond_cu},
                       {"linked", r.cond_linked},
                       {"path4", r.cond_path4}};
    json cu = json::array();
    for (const auto& [u, c] : r.cu_assignments) cu.push_back({{"U", u}, {"C", c}});
    j["cu_assignments"] = cu;
    if (r.failing_u) j["witness"]["failing_U"] = *r.failing_u;
    if (r.unlinked_pair) j["witness"]["unlinked_pair"] = {r.unlinked_pair->first, r.unlinked_pair->second};
    if (!r.offending_path.empty()) j["witness"]["offending_path"] = r.offending_path;
    return j;
}

inline json to_json(const LinearPowersReport& r) {
    json j{{"verdict", r.verdict},
           {"conditions",
            {{"pure_flag", r.cond_pure_flag},
             {"skeleton_chordal", r.cond_chordal},
             {"linked", r.cond_linked},
             {"path4", r.cond_path4}}}};
    if (!r.chordless_cycle.empty()) j["witness"]["chordless_cycle"] = r.chordless_cycle;
    if (r.unlinked_pair) j["witness"]["unlinked_pair"] = {r.unlinked_pair->first, r.unlinked_pair->second};
    if (!r.offending_path.empty()) j["witness"]["offending_path"] = r.offending_path;
    return j;
}

inline json to_json(const StructureVerdict& v) {
    json j{{"verdict", v.verdict}};
    if (v.decomposition) {
        const auto& d = *v.decomposition;
        j["kind"] = decomposition_kind_name(d.kind);
        switch (d.kind) {
            case DecompositionKind::Points:
                j["components"] = d.points;
                break;
            case DecompositionKind::PathUnion:
                j["components"] = d.paths;
                break;
            case DecompositionKind::FacetPairUnion: {
                json comps = json::array();
                for (const auto& p : d.pairs) {
                    if (p.type1)
                        comps.push_back({{"type", 1}, {"F", p.f}, {"G", p.g}});
                    else
                        comps.push_back({{"type", 2}, {"H", p.f}});
                }
                j["components"] = comps;
                break;
            }
        }
    } else {
        j["failure_witness"] = v.failure_witness;
    }
    return j;
}

inline json to_json(const BettiTable& t) {
    json entries = json::array();
    for (const auto& e : t.entries)
        entries.push_back({{"i", e.i}, {"degree", e.degree}, {"rank", e.rank}});
    json totals = json::array();
    for (const auto& [key, rank] : t.total)
        totals.push_back({{"i", key.first}, {"total_degree", key.second}, {"rank", rank}});
    return json{{"betti", entries}, {"totals", totals}};
}

inline json to_json(const FlcReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"i", v.i}, {"a", v.a}, {"dim", v.dim}});
    return json{{"verdict", r.verdict}, {"violations", violations}};
}

inline json to_json(const MinimalMultiplicityReport& r) {
    return json{{"verdict", r.verdict},
                {"routes",
                 {{"formula", r.formula_route},
                  {"structural", r.structural_route},
                  {"matroidal", r.matroidal_route}}},
                {"multiplicity", r.e},
                {"cohomology_lengths", r.lengths}};
}

inline FieldSpec parse_field(const std::string& s) {
    if (s == "rational") return FieldSpec::rational();
    try {
        return FieldSpec::prime(std::stoi(s));
    } catch (const std::exception&) {
        throw Error(errc::parse_error, "field must be 'rational' or a prime modulus");
    }
}

}  // namespace srgci
