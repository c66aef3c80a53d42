#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "atlas/claims.hpp"
#include "atlas/jordan.hpp"
#include "atlas/projection.hpp"
#include "atlas/svgfig.hpp"
#include "atlas/titslie.hpp"

using namespace atlas;
using nlohmann::json;

namespace {

json root_to_json(const RootVector& r) {
    json coords = json::array();
    for (const auto& c : r.coords) coords.push_back(c.to_string());
    return coords;
}

json system_to_json(const RootSystem& rs) {
    json out;
    out["name"] = algebra_to_string(rs.name());
    out["rank"] = rs.rank();
    json roots = json::array();
    for (const auto& r : rs.roots()) roots.push_back(root_to_json(r));
    out["roots"] = roots;
    return out;
}

json tagged_to_json(AlgebraName name, int rank,
                    const std::vector<std::pair<std::string, const std::vector<RootVector>*>>& parts) {
    json out;
    out["name"] = algebra_to_string(name);
    out["rank"] = rank;
    json roots = json::array();
    for (const auto& [tag, vecs] : parts)
        for (const auto& r : *vecs) {
            json entry;
            entry["coords"] = root_to_json(r);
            entry["tag"] = tag;
            roots.push_back(entry);
        }
    out["roots"] = roots;
    return out;
}

int cmd_roots(const std::string& name, bool as_json, bool count_only) {
    RootSystem rs = generate_roots(algebra_from_string(name));
    if (count_only) {
        std::cout << rs.size() << "\n";
    } else if (as_json) {
        std::cout << system_to_json(rs).dump(2) << "\n";
    } else {
        std::cout << algebra_to_string(rs.name()) << ": " << rs.size() << " roots, rank " << rs.rank() << "\n";
        for (const auto& r : rs.roots()) std::cout << "  " << r.to_string() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& name) {
    RootSystem rs = generate_roots(algebra_from_string(name));
    ValidationReport report = validate_root_system(rs);
    if (report.ok()) {
        std::cout << algebra_to_string(rs.name()) << ": " << rs.size()
                  << " roots, all root-system axioms hold (exhaustive pair checks)\n";
        return 0;
    }
    std::cout << algebra_to_string(rs.name()) << ": " << report.violations.size() << " violations\n";
    for (const auto& v : report.violations) std::cout << "  " << v << "\n";
    return 1;
}

int cmd_decompose(const std::string& name, bool nested, bool as_json) {
    AlgebraName algebra = algebra_from_string(name);
    if (nested) {
        NestedDecomposition nd = nested_decomposition(algebra);
        if (as_json) {
            std::vector<std::pair<std::string, const std::vector<RootVector>*>> parts;
            for (const auto& leaf : nd.leaves) parts.emplace_back(leaf.label, &leaf.roots);
            std::cout << tagged_to_json(algebra, 8, parts).dump(2) << "\n";
        } else {
            for (const auto& leaf : nd.leaves)
                std::cout << leaf.label << ": " << leaf.roots.size() << " roots\n";
        }
        return 0;
    }
    Decomposition d = decompose(algebra);
    if (as_json) {
        std::vector<std::pair<std::string, const std::vector<RootVector>*>> parts;
        for (const auto& part : d.parts) parts.emplace_back(part_tag_to_string(part.tag, part.axis), &part.roots);
        std::cout << tagged_to_json(algebra, generate_roots(algebra).rank(), parts).dump(2) << "\n";
    } else {
        for (const auto& part : d.parts) {
            std::cout << part_tag_to_string(part.tag, part.axis) << ": " << part.roots.size() << " roots\n";
            for (const auto& r : part.roots) std::cout << "  " << r.to_string() << "\n";
        }
    }
    return 0;
}

int cmd_planes(const std::string& name) {
    AlgebraName algebra = algebra_from_string(name);
    PlaneSet planes = build_planes(algebra);
    Decomposition d = decompose(algebra);
    for (const auto& [label, plane] : planes.planes) {
        std::cout << label << ": dim " << plane.dimension() << (plane.is_linear() ? " (linear)" : " (affine)");
        if (!plane.is_linear()) std::cout << ", offset " << plane.offset().to_string();
        std::cout << "\n";
    }
    for (const auto& [label, v] : planes.vectors) std::cout << label << " = " << v.to_string() << "\n";
    // containment summary for the highest-weight set
    std::string target = planes.planes.front().first.rfind("Pi0", 0) == 0 && algebra == AlgebraName::f4
                             ? "Pi+"
                             : "Sigma+";
    if (algebra == AlgebraName::f4) target = "Pi+";
    size_t inside = 0;
    for (const auto& r : d.highest_weight().roots)
        if (planes.plane(target).contains(r)) ++inside;
    std::cout << "h.w. roots inside " << target << ": " << inside << "/" << d.highest_weight().roots.size() << "\n";
    return 0;
}

int cmd_table3() {
    auto rows = table3_quantum_numbers();
    for (const auto& row : rows) {
        std::cout << "Pi(1)" << row.plane1_index << "  Pi(2)" << row.plane2_index << "  root "
                  << row.root.to_string() << "  (s,t) = (" << row.s.to_string() << ", " << row.t.to_string()
                  << ")  (s',t') = (" << row.s_prime.to_string() << ", " << row.t_prime.to_string() << ")\n";
    }
    return 0;
}

int cmd_embed(const std::string& target) {
    EtaTarget which;
    if (target == "a5-in-e6")
        which = EtaTarget::a5_in_e6;
    else if (target == "d6-in-e7")
        which = EtaTarget::d6_in_e7;
    else
        throw CLI::ValidationError("embed target must be a5-in-e6 or d6-in-e7");
    EtaEmbedding emb = eta_embedding(which);
    std::cout << (which == EtaTarget::a5_in_e6 ? "a5 inside e6" : "d6 inside e7") << ": " << emb.images.size()
              << " image roots, all inside the ambient system\n";
    for (size_t i = 0; i < emb.eta.size(); ++i)
        std::cout << "  eta" << i + 1 << (which == EtaTarget::a5_in_e6 ? " (potential) = " : " = ")
                  << emb.eta[i].to_string() << "\n";
    std::string type = classify_cartan(cartan_integers(emb.images));
    std::cout << "Cartan type of the image set: " << type << "\n";
    return 0;
}

int cmd_label(bool as_json) {
    auto labels = label_particles();
    if (as_json) {
        std::vector<std::pair<std::string, std::vector<RootVector>>> classes;
        std::map<std::string, std::vector<RootVector>> by_tag;
        for (const auto& l : labels) {
            std::string tag = particle_kind_to_string(l.kind);
            if (l.index) tag += "(" + std::to_string(l.index) + ")";
            by_tag[tag].push_back(l.root);
        }
        std::vector<std::pair<std::string, const std::vector<RootVector>*>> parts;
        for (const auto& [tag, roots] : by_tag) parts.emplace_back(tag, &roots);
        std::cout << tagged_to_json(AlgebraName::e8, 8, parts).dump(2) << "\n";
    } else {
        std::map<std::string, size_t> counts;
        for (const auto& l : labels) {
            std::string tag = particle_kind_to_string(l.kind);
            if (l.index) tag += "(" + std::to_string(l.index) + ")";
            counts[tag]++;
        }
        for (const auto& [tag, count] : counts) std::cout << tag << ": " << count << "\n";
        std::cout << "total: " << labels.size() << " (particle = highest-weight side; antiparticles negate)\n";
    }
    return 0;
}

int cmd_octonion_check(uint64_t seed) {
    ClaimOptions options;
    options.seed = seed;
    ClaimReport report = run_all("C10", options);
    const ReportEntry& entry = report.entries.front();
    std::cout << "octonion suite: " << (entry.pass ? "pass" : "FAIL") << " (" << entry.witness << ")\n";
    std::cout << "rho+ as a Zorn block:\n" << to_zorn(HurwitzElement::rho(1)).to_string() << "\n";
    std::cout << "eps1+ as a Zorn block:\n" << to_zorn(HurwitzElement::epsilon(1, 1)).to_string() << "\n";
    return entry.pass ? 0 : 1;
}

int cmd_jordan_check(int n, uint64_t seed) {
    JordanAlgebra j(n);
    JordanDerivationAlgebra der(j);
    ClaimOptions options;
    options.seed = seed;
    std::cout << "J3^" << n << ": dim " << j.dim() << ", Der dim " << der.dim() << ", str0 dim "
              << reduced_structure_dim(j, der) << "\n";
    ClaimReport report = run_all("C12", options);
    std::cout << "axiom suite (all n): " << (report.all_pass() ? "pass" : "FAIL") << " ("
              << report.entries.front().witness << ")\n";
    return report.all_pass() ? 0 : 1;
}

int cmd_tkk(int n, uint64_t seed) {
    TkkAlgebra tkk(n);
    Grading g = grading_decompose(tkk.algebra(), tkk.grading_element());
    std::cout << "tkk(" << n << "): dim " << tkk.algebra().dim() << ", grading parts";
    for (const auto& [w, members] : g.parts) std::cout << " [" << w << "]: " << members.size();
    std::cout << "\n";
    JacobiReport jr = n == 1 ? jacobi_check(tkk.algebra(), JacobiMode::exhaustive)
                             : jacobi_check(tkk.algebra(), JacobiMode::sampled, 500, seed);
    std::cout << "Jacobi (" << (n == 1 ? "exhaustive" : "sampled") << "): " << (jr.ok() ? "pass" : "FAIL") << " over "
              << jr.triples_checked << " triples\n";
    return jr.ok() ? 0 : 1;
}

int cmd_tits(int h, int n, bool as_json, uint64_t seed, size_t samples, const std::string& mode) {
    TitsAlgebra entry(h, n);
    if (as_json) {
        json out = json::array();
        for (const auto& c : entry.algebra().nonzero_constants()) {
            json item;
            item["i"] = c.i;
            item["j"] = c.j;
            item["k"] = c.k;
            item["c"] = c.c.to_string();
            out.push_back(item);
        }
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "tits(" << h << "," << n << "): dim " << entry.algebra().dim() << " = Der(H) " << entry.der_h_dim()
              << " + H0xJ0 " << entry.h0_dim() * entry.j0_dim() << " + Der(J) " << entry.der_j_dim() << "\n";
    JacobiReport jr = (entry.algebra().dim() <= 35 || mode == "exhaustive")
                          ? jacobi_check(entry.algebra(), JacobiMode::exhaustive)
                          : jacobi_check(entry.algebra(), JacobiMode::sampled, samples, seed);
    std::cout << "Jacobi: " << (jr.ok() ? "pass" : "FAIL") << " over " << jr.triples_checked << " triples\n";
    return jr.ok() ? 0 : 1;
}

int cmd_magic_square(const std::string& verify_mode, uint64_t seed, size_t samples) {
    MagicSquareReport report = magic_square();
    std::printf("%8s |", "H \\ J");
    for (int n : {1, 2, 4, 8}) std::printf(" %12s", ("J3^" + std::to_string(n)).c_str());
    std::printf("\n");
    const char* row_names[4] = {"R", "C", "Q", "O"};
    for (int r = 0; r < 4; ++r) {
        std::printf("%8s |", row_names[r]);
        for (int c = 0; c < 4; ++c) {
            const auto& cell = report.grid[r][c];
            std::string text = cell.type + " " + std::to_string(cell.dim) + "/" + std::to_string(cell.rank);
            std::printf(" %12s", text.c_str());
        }
        std::printf("\n");
    }
    std::cout << "dimension symmetry: " << (report.dimension_symmetric ? "yes" : "NO") << "\n";
    int status = report.dimension_symmetric ? 0 : 1;
    if (!verify_mode.empty()) {
        static const int hs[4] = {1, 2, 4, 8};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                TitsAlgebra entry(hs[r], hs[c]);
                JacobiReport jr = (verify_mode == "exhaustive" || entry.algebra().dim() <= 35)
                                      ? jacobi_check(entry.algebra(), JacobiMode::exhaustive)
                                      : jacobi_check(entry.algebra(), JacobiMode::sampled, samples, seed);
                if (!jr.ok()) {
                    std::cout << "Jacobi FAILS at (" << hs[r] << "," << hs[c] << ")\n";
                    status = 1;
                }
            }
        if (status == 0) std::cout << "Jacobi: pass on all sixteen entries (" << verify_mode << ")\n";
    }
    return status;
}

int cmd_run_all(const std::string& filter, const ClaimOptions& options, bool as_json) {
    ClaimReport report = run_all(filter, options);
    if (as_json) {
        json out = json::array();
        for (const auto& e : report.entries) {
            json item;
            item["id"] = e.id;
            item["anchor"] = e.anchor;
            item["pass"] = e.pass;
            item["witness"] = e.witness;
            out.push_back(item);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& e : report.entries)
            std::printf("%-18s %-4s %7.2fs  %s\n", e.id.c_str(), e.pass ? "pass" : "FAIL", e.seconds,
                        e.witness.c_str());
    }
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computational atlas of the exceptional Lie algebras"};
    app.require_subcommand(1);

    uint64_t seed = 20240001;
    size_t samples = 2000;
    std::string mode = "sampled";
    app.add_option("--seed", seed, "seed for every sampled check");
    app.add_option("--samples", samples, "sample count for sampled checks");
    app.add_option("--mode", mode, "exhaustive|sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));

    std::string name, target, svg_path, filter, perturb, verify_mode;
    bool as_json = false, count_only = false, nested = false;
    int jordan_n = 8, tits_h = 8, tits_j = 8;

    auto* roots = app.add_subcommand("roots", "list the roots of an exceptional algebra");
    roots->add_option("name", name)->required();
    roots->add_flag("--json", as_json);
    roots->add_flag("--count", count_only);

    auto* verify = app.add_subcommand("verify", "run the root-system axioms exhaustively");
    verify->add_option("name", name)->required();

    auto* dec = app.add_subcommand("decompose", "partition the roots into a2 + g0 + three Jordan pairs");
    dec->add_option("name", name)->required();
    dec->add_flag("--nested", nested);
    dec->add_flag("--json", as_json);

    auto* planes = app.add_subcommand("planes", "the named planes and axis vectors of the geometry");
    planes->add_option("name", name)->required();

    app.add_subcommand("table3", "quantum numbers of the nine highest-weight roots of e6");

    auto* embed = app.add_subcommand("embed", "eta-basis subsystem embeddings");
    embed->add_option("target", target, "a5-in-e6 | d6-in-e7")->required();

    auto* label = app.add_subcommand("label-e8", "quark/lepton labeling of the 240 roots");
    label->add_flag("--json", as_json);

    auto* figure = app.add_subcommand("figure", "projection figure as SVG");
    figure->add_option("name", name, "g2|f4|e6|e7|e8|c3")->required();
    figure->add_option("--svg", svg_path, "output path")->required();

    app.add_subcommand("octonion-check", "Zorn model property suite");

    auto* jordan = app.add_subcommand("jordan-check", "Jordan axiom suite and dimension report");
    jordan->add_option("n", jordan_n, "1|2|4|8")->required();

    auto* tkk = app.add_subcommand("tkk", "three-graded algebra J + str(J) + Jbar");
    tkk->add_option("n", jordan_n, "1|2|4|8")->required();

    auto* tits = app.add_subcommand("tits", "the Tits construction for one square entry");
    tits->add_option("H", tits_h, "1|2|4|8")->required();
    tits->add_option("J", tits_j, "1|2|4|8")->required();
    tits->add_flag("--json", as_json);

    auto* ms = app.add_subcommand("magic-square", "all sixteen entries with dims and ranks");
    ms->add_option("--verify", verify_mode, "exhaustive|sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));

    auto* runall = app.add_subcommand("run-all", "run every claim and report pass/fail");
    runall->add_option("filter", filter, "claim id prefix, e.g. C03");
    runall->add_flag("--json", as_json);
    runall->add_option("--perturb", perturb, "negative-control fixture: root|structconst")
        ->check(CLI::IsMember({"root", "structconst"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (roots->parsed()) return cmd_roots(name, as_json, count_only);
        if (verify->parsed()) return cmd_verify(name);
        if (dec->parsed()) return cmd_decompose(name, nested, as_json);
        if (planes->parsed()) return cmd_planes(name);
        if (app.get_subcommand("table3")->parsed()) return cmd_table3();
        if (embed->parsed()) return cmd_embed(target);
        if (label->parsed()) return cmd_label(as_json);
        if (figure->parsed()) {
            emit_figure(name, svg_path);
            std::cout << "wrote " << svg_path << "\n";
            return 0;
        }
        if (app.get_subcommand("octonion-check")->parsed()) return cmd_octonion_check(seed);
        if (jordan->parsed()) return cmd_jordan_check(jordan_n, seed);
        if (tkk->parsed()) return cmd_tkk(jordan_n, seed);
        if (tits->parsed()) return cmd_tits(tits_h, tits_j, as_json, seed, samples, mode);
        if (ms->parsed()) return cmd_magic_square(verify_mode, seed, samples);
        if (runall->parsed()) {
            ClaimOptions options;
            options.seed = seed;
            options.samples = samples;
            options.exhaustive_jacobi_large = mode == "exhaustive";
            options.perturbation = perturb;
            return cmd_run_all(filter, options, as_json);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
