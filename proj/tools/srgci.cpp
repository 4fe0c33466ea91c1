// srgci: classify Stanley-Reisner ideals and verify with algebraic oracles.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "srgci/classify.hpp"
#include "srgci/cohomology.hpp"
#include "srgci/crossval.hpp"
#include "srgci/json_io.hpp"
#include "srgci/resolution.hpp"

using namespace srgci;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::parse_error, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(errc::parse_error, e.what());
    }
}

// Accepts either a complex file ("facets") or an ideal file ("generators").
MonomialIdeal load_ideal(const std::string& path) {
    json j = load_json(path);
    if (j.contains("facets")) return stanley_reisner_ideal(parse_complex(j));
    return parse_ideal(j);
}

SimplicialComplex load_complex(const std::string& path) {
    json j = load_json(path);
    if (j.contains("generators")) return complex_of(parse_ideal(j));
    return parse_complex(j);
}

// Krull dimension of S/I: dimension of the radical's complex plus one.
int krull_dim(const MonomialIdeal& ideal) {
    return complex_of(radical(ideal)).dimension() + 1;
}

int emit(const json& report, bool verdict, const std::string& summary) {
    std::cout << report.dump(2) << "\n";
    std::cerr << summary << "\n";
    return verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stanley-Reisner gCI classifier and oracle harness"};
    app.require_subcommand(1);

    std::string input_path, field_str = "32003", path4_str = "simple";
    int power_arg = 1, max_n = 4, max_power = 2, samples = 0;
    std::uint64_t seed = 1;
    bool exhaustive = false;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* opt = cmd->add_option("--input", input_path, "input JSON file");
        if (needs_input) opt->required();
        cmd->add_option("--field", field_str, "coefficient field: prime modulus or 'rational'");
        return cmd;
    };

    auto* c_classify = add_common(app.add_subcommand("classify", "structure theorem"), true);
    auto* c_gci = add_common(app.add_subcommand("check-gci", "gCI criterion"), true);
    auto* c_lin = add_common(app.add_subcommand("linear-powers", "linear powers criterion"), true);
    auto* c_betti = add_common(app.add_subcommand("betti", "multigraded Betti table"), true);
    auto* c_coh = add_common(app.add_subcommand("cohomology", "graded local cohomology at 0"), true);
    auto* c_flc = add_common(app.add_subcommand("flc", "finite local cohomology scan"), true);
    auto* c_cv = add_common(app.add_subcommand("crossval", "checker/oracle cross-validation"), false);

    for (auto* cmd : {c_betti, c_coh, c_flc})
        cmd->add_option("--power", power_arg, "replace the ideal by its power");
    for (auto* cmd : {c_gci, c_lin, c_cv})
        cmd->add_option("--path4-mode", path4_str, "simple|walk");
    c_cv->add_option("--max-n", max_n, "vertex bound for enumeration");
    c_cv->add_option("--max-power", max_power, "largest power fed to the oracles");
    c_cv->add_option("--samples", samples, "sample count for the sweeps");
    c_cv->add_option("--seed", seed, "random seed for sampling");
    c_cv->add_flag("--exhaustive", exhaustive, "exhaustive enumeration up to --max-n");

    CLI11_PARSE(app, argc, argv);

    try {
        FieldSpec field = parse_field(field_str);
        PathMode mode = path4_str == "walk" ? PathMode::WalkDistinctEdges : PathMode::SimpleVertices;

        if (c_classify->parsed()) {
            auto v = classify_structure(load_complex(input_path));
            return emit(to_json(v), v.verdict,
                        v.verdict ? std::string("structure: ") +
                                        decomposition_kind_name(v.decomposition->kind)
                                  : "outside the structure theorem: " + v.failure_witness);
        }
        if (c_gci->parsed()) {
            auto r = check_gci(load_complex(input_path), mode);
            return emit(to_json(r), r.verdict, r.verdict ? "gCI: yes" : "gCI: no");
        }
        if (c_lin->parsed()) {
            auto r = check_linear_powers(load_complex(input_path), mode);
            return emit(to_json(r), r.verdict,
                        r.verdict ? "all powers linear: yes" : "all powers linear: no");
        }
        if (c_betti->parsed()) {
            MonomialIdeal ideal = srgci::power(load_ideal(input_path), power_arg);
            BettiTable t = graded_betti(ideal, field);
            json j = to_json(t);
            bool linear = true;
            int delta = ideal.uniform_degree();
            if (delta >= 0) {
                for (const auto& e : t.entries)
                    if (total_degree(e.degree) != delta + e.i) linear = false;
                j["linear"] = linear;
            }
            return emit(j, true, "betti entries: " + std::to_string(t.entries.size()));
        }
        if (c_coh->parsed()) {
            MonomialIdeal ideal = srgci::power(load_ideal(input_path), power_arg);
            int d = krull_dim(ideal);
            json dims = json::array();
            for (int i = 0; i < d; ++i) {
                SignedDegree zero(ideal.variable_count(), 0);
                dims.push_back({{"i", i}, {"dim", takayama_dim(ideal, i, zero, field)}});
            }
            return emit(json{{"krull_dim", d}, {"at_zero", dims}}, true,
                        "graded local cohomology at degree 0");
        }
        if (c_flc->parsed()) {
            MonomialIdeal ideal = load_ideal(input_path);
            auto r = is_flc_power(ideal, power_arg, krull_dim(ideal), field);
            return emit(to_json(r), r.verdict, r.verdict ? "FLC: yes" : "FLC: no");
        }
        if (c_cv->parsed()) {
            CrossvalConfig cfg;
            cfg.max_n = max_n;
            cfg.max_power = max_power;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.exhaustive = exhaustive;
            cfg.path4_mode = mode;
            cfg.field = field;
            if (cfg.max_n > 8) throw Error(errc::vertex_out_of_range, "--max-n capped at 8");

            json report;
            int discrepancy_files = 0;
            if (!input_path.empty()) {
                // re-check a single reproducer
                SimplicialComplex c = load_complex(input_path);
                bool structure = classify_structure(c).verdict;
                bool linp = check_linear_powers(c, mode).verdict;
                bool gcic = check_gci(c, mode).verdict && is_chordal(one_skeleton_graph(c)).chordal;
                bool oracle = oracle_linear_and_flc(c, cfg.max_power, field);
                bool agree = structure == linp && structure == gcic && structure == oracle;
                report = {{"instance", complex_to_json(c)},
                          {"structure", structure},
                          {"linear_powers", linp},
                          {"gci_and_chordal", gcic},
                          {"oracle", oracle},
                          {"agree", agree}};
                return emit(report, agree, agree ? "reproducer agrees" : "reproducer disagrees");
            }
            auto main_sum = main_equivalence_crossval(cfg);
            json main_disc = json::array();
            for (const auto& rec : main_sum.discrepancies) {
                json inst = {{"instance", complex_to_json(rec.complex)},
                             {"structure", rec.structure_v},
                             {"linear_powers", rec.linear_powers_v},
                             {"gci_and_chordal", rec.gci_and_chordal_v},
                             {"oracle", rec.oracle_v},
                             {"field_artifact", rec.field_artifact}};
                std::string path =
                    "crossval_discrepancy_" + std::to_string(discrepancy_files++) + ".json";
                std::ofstream(path) << complex_to_json(rec.complex).dump(2) << "\n";
                inst["reproducer"] = path;
                main_disc.push_back(std::move(inst));
            }
            report["main_equivalence"] = {{"instances", main_sum.instances},
                                          {"discrepancies", main_disc}};

            auto fsum = froberg_sweep(std::min(cfg.max_n, 5), 6, cfg.samples, cfg.seed, field);
            json fdisc = json::array();
            for (const auto& rec : fsum.discrepancies) {
                json edges = json::array();
                for (auto [i, j] : rec.graph.edges()) edges.push_back({i, j});
                fdisc.push_back({{"n", rec.graph.vertex_count()},
                                 {"edges", edges},
                                 {"complement_chordal", rec.complement_chordal},
                                 {"linear", rec.linear}});
            }
            report["froberg"] = {{"instances", fsum.instances}, {"discrepancies", fdisc}};

            auto hsum = hhz_sweep(cfg.samples, cfg.samples / 6, 6, cfg.seed, field);
            json hdisc = json::array();
            for (const auto& rec : hsum.discrepancies) {
                std::string path =
                    "crossval_discrepancy_" + std::to_string(discrepancy_files++) + ".json";
                std::ofstream(path) << ideal_to_json(rec.ideal).dump(2) << "\n";
                hdisc.push_back({{"ideal", ideal_to_json(rec.ideal)},
                                 {"linear_by_power", rec.linear_by_power},
                                 {"reproducer", path}});
            }
            report["hhz"] = {{"instances", hsum.instances}, {"discrepancies", hdisc}};

            bool clean = main_disc.empty() && fdisc.empty() && hdisc.empty();
            return emit(report, clean,
                        clean ? "cross-validation clean"
                              : "cross-validation found discrepancies; reproducers written");
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
