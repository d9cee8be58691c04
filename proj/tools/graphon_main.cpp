// graphon: command-line toolkit for step-graphon computation, W-random
// sampling, class recognition, string-representation geometry, and the
// experiment harness.

#include <CLI11.hpp>

#include "graphlim/experiments.hpp"
#include "graphlim/geometry.hpp"
#include "graphlim/io.hpp"
#include "graphlim/recognizers.hpp"
#include "graphlim/sampling.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace graphlim;

namespace {

void emit_report(const ExperimentReport& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.to_csv();
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open " + out_path);
        f << report.to_csv();
        std::cout << "wrote " << out_path << "\n";
    }
}

// crude bar-chart rendering of the observed.* rows; human output only
void report_svg(const ExperimentReport& report, const std::string& path) {
    std::vector<std::pair<std::string, double>> bars;
    for (const auto& row : report.rows)
        if (row.statistic.rfind("observed.", 0) == 0) bars.push_back({row.statistic, std::stod(row.value)});
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    const double width = std::max<size_t>(bars.size(), 1) * 22.0 + 40;
    f << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='260'>\n";
    double maxv = 1e-12;
    for (auto& [k, v] : bars) maxv = std::max(maxv, v);
    for (size_t i = 0; i < bars.size(); ++i) {
        double h = 200.0 * bars[i].second / maxv;
        f << "<rect x='" << 20 + 22 * i << "' y='" << 220 - h
          << "' width='18' height='" << h << "' fill='#4477aa'><title>" << bars[i].first << " = "
          << bars[i].second << "</title></rect>\n";
    }
    f << "</svg>\n";
    std::cout << "wrote " << path << "\n";
}

std::map<std::string, std::string> load_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    if (path.empty()) return kv;
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config " + path);
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("config line without '=': " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

void print_evidence(const ClassEvidence& ev) {
    switch (ev.verdict) {
    case Verdict::member: std::cout << "verdict: member\n"; break;
    case Verdict::non_member: std::cout << "verdict: non-member\n"; break;
    case Verdict::unknown: std::cout << "verdict: unknown\n"; break;
    }
    std::cout << "method: " << ev.method << "\n";
    if (ev.partition) {
        std::cout << "certificate: clique covering with " << ev.partition->parts.size() << " parts\n";
        write_partition(std::cout, *ev.partition);
    }
    if (ev.orientation) {
        std::cout << "certificate: transitive orientation (" << ev.orientation->size() << " arcs)\n";
        for (auto [u, v] : *ev.orientation) std::cout << u << " -> " << v << "\n";
    }
    if (ev.forbidden_embedding) {
        std::cout << "certificate: induced " << ev.forbidden_name << " on vertices";
        for (int v : *ev.forbidden_embedding) std::cout << " " << v;
        std::cout << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-limit toolkit: step graphons, W-random graphs, class recognizers, "
                 "string-representation geometry, experiment probes"};
    app.require_subcommand(1);

    std::string graphon_path, graphon2_path, graph_path, rep_path, cover_path, out_path, svg_path,
        blocks_path, class_name, config_path, ensemble_name = "labeled";
    int n = 0, trials = 1, max_size = 3, n_max = 6, census_t = 2, census_s = 0, k_param = 4;
    long long trials_ll = 1000;
    uint64_t seed = 1;
    double bin_width = 0.05;
    std::string a_str = "1/2", b_str = "1/2";
    std::string cx = "0", cy = "0", radius = "100";
    bool outer = false;

    auto* c_entropy = app.add_subcommand("entropy", "entropy of a step graphon");
    c_entropy->add_option("--graphon", graphon_path)->required();

    auto* c_density = app.add_subcommand("density", "exact edge density of a step graphon");
    c_density->add_option("--graphon", graphon_path)->required();

    auto* c_tind = app.add_subcommand("tind", "induced density of a graph in a graphon");
    c_tind->add_option("--graphon", graphon_path)->required();
    c_tind->add_option("--graph", graph_path)->required();
    long long mc_trials = 0;
    c_tind->add_option("--mc", mc_trials, "Monte Carlo trials (0 = exact)");
    c_tind->add_option("--seed", seed);

    auto* c_fp = app.add_subcommand("fingerprint", "induced-density fingerprint");
    c_fp->add_option("--graphon", graphon_path)->required();
    c_fp->add_option("--max-size", max_size);

    auto* c_cut = app.add_subcommand("cutdist", "cut-distance bounds between two graphons");
    c_cut->add_option("--graphon", graphon_path)->required();
    c_cut->add_option("--graphon2", graphon2_path)->required();
    c_cut->add_option("--max-size", max_size);

    auto* c_sample = app.add_subcommand("sample", "sample a W-random graph");
    c_sample->add_option("--graphon", graphon_path)->required();
    c_sample->add_option("--n", n)->required();
    c_sample->add_option("--seed", seed);
    c_sample->add_option("--out", out_path);
    c_sample->add_option("--blocks-out", blocks_path);

    auto* c_constr = app.add_subcommand("constructible", "exact W-constructibility check");
    c_constr->add_option("--graph", graph_path)->required();
    c_constr->add_option("--graphon", graphon_path)->required();

    auto* c_classify = app.add_subcommand("classify", "graph-class evidence");
    c_classify->add_option("--graph", graph_path)->required();
    c_classify->add_option("--class", class_name, "string|outerstring|incomparability|comparability|twoclique")
        ->required();

    auto* c_probe = app.add_subcommand("probe", "experiment probes");
    c_probe->require_subcommand(1);
    auto add_common = [&](CLI::App* p) {
        p->add_option("--config", config_path, "key=value file; flags override");
        p->add_option("--out", out_path);
        p->add_option("--svg", svg_path);
        p->add_option("--seed", seed);
    };
    auto* p_density = c_probe->add_subcommand("density", "edge-density probe");
    add_common(p_density);
    p_density->add_option("--graphon", graphon_path);
    p_density->add_option("--n", n);
    p_density->add_option("--trials", trials);
    auto* p_degrees = c_probe->add_subcommand("degrees", "normalized-degree probe");
    add_common(p_degrees);
    p_degrees->add_option("--graphon", graphon_path);
    p_degrees->add_option("--n", n);
    p_degrees->add_option("--trials", trials);
    p_degrees->add_option("--bin-width", bin_width);
    auto* p_speed = c_probe->add_subcommand("speed", "labeled class census");
    add_common(p_speed);
    p_speed->add_option("--class", class_name, "incomparability|twoclique|cts");
    p_speed->add_option("--n-max", n_max);
    p_speed->add_option("--t", census_t);
    p_speed->add_option("--s", census_s);
    auto* p_twoclique = c_probe->add_subcommand("twoclique", "two-clique limit probe");
    add_common(p_twoclique);
    p_twoclique->add_option("--n", n);
    p_twoclique->add_option("--trials", trials_ll);
    p_twoclique->add_option("--ensemble", ensemble_name, "labeled|unlabeled");
    auto* p_equiv = c_probe->add_subcommand("equiv", "equivalence probe for W^k_a vs W^k_b");
    add_common(p_equiv);
    p_equiv->add_option("--k", k_param);
    p_equiv->add_option("--a", a_str);
    p_equiv->add_option("--b", b_str);
    p_equiv->add_option("--max-size", max_size);

    auto* c_igraph = app.add_subcommand("igraph", "intersection graph of a representation");
    c_igraph->add_option("--rep", rep_path)->required();
    c_igraph->add_option("--out", out_path);

    auto* c_pos = app.add_subcommand("checkpos", "general-position audit of a representation");
    c_pos->add_option("--rep", rep_path)->required();

    auto* c_norm = app.add_subcommand("normalize", "normalize a representation to simple curves");
    c_norm->add_option("--rep", rep_path)->required();
    c_norm->add_option("--out", out_path)->required();
    c_norm->add_option("--seed", seed);
    c_norm->add_flag("--outer", outer, "boundary-anchored variant (requires a disk)");
    c_norm->add_option("--svg", svg_path);

    auto* c_outer = app.add_subcommand("outerstring", "build an outer-string representation from a cover");
    c_outer->add_option("--graph", graph_path)->required();
    c_outer->add_option("--cover", cover_path)->required();
    c_outer->add_option("--out", out_path)->required();
    c_outer->add_option("--cx", cx);
    c_outer->add_option("--cy", cy);
    c_outer->add_option("--radius", radius);
    c_outer->add_option("--svg", svg_path);

    auto* c_k5 = app.add_subcommand("k5report", "crossing report of the extracted K_5 drawing");
    c_k5->add_option("--rep", rep_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_entropy) {
            std::cout << format_double(entropy(read_graphon_file(graphon_path))) << "\n";
        } else if (*c_density) {
            Rat d = edge_density(read_graphon_file(graphon_path));
            std::cout << d.str() << " = " << format_double(d.to_double()) << "\n";
        } else if (*c_tind) {
            StepGraphon w = read_graphon_file(graphon_path);
            Graph g = read_graph_file(graph_path);
            if (mc_trials > 0) {
                auto est = t_ind_mc(g, w, mc_trials, seed);
                std::cout << format_double(est.mean) << " +- " << format_double(est.std_error) << "\n";
            } else {
                Rat t = t_ind_exact(g, w);
                std::cout << t.str() << " = " << format_double(t.to_double()) << "\n";
            }
        } else if (*c_fp) {
            auto fp = density_fingerprint(read_graphon_file(graphon_path), max_size);
            for (const auto& e : fp.entries)
                std::cout << e.key << " x" << e.labeled_count << " " << e.value.str() << "\n";
        } else if (*c_cut) {
            auto [lo, hi] = cut_distance_bounds(read_graphon_file(graphon_path),
                                                read_graphon_file(graphon2_path), max_size);
            std::cout << "lower " << format_double(lo) << "\nupper " << format_double(hi) << "\n";
        } else if (*c_sample) {
            auto s = sample_w_random(read_graphon_file(graphon_path), n, seed);
            if (out_path.empty()) {
                write_graph(std::cout, s.graph);
            } else {
                write_graph_file(out_path, s.graph);
                std::cout << "wrote " << out_path << "\n";
            }
            if (!blocks_path.empty()) {
                std::ofstream f(blocks_path);
                f << s.blocks.size() << "\n";
                for (int b : s.blocks) f << b << "\n";
                std::cout << "wrote " << blocks_path << "\n";
            }
        } else if (*c_constr) {
            StepGraphon w = read_graphon_file(graphon_path);
            Graph g = read_graph_file(graph_path);
            auto a = is_constructible(g, w);
            if (a) {
                std::cout << "constructible\n";
                for (size_t v = 0; v < a->size(); ++v)
                    std::cout << v << " -> block " << (*a)[v] << "\n";
                std::cout << "psi = " << psi_of_assignment(g, w, *a).str() << "\n";
            } else {
                std::cout << "not constructible\n";
            }
        } else if (*c_classify) {
            Graph g = read_graph_file(graph_path);
            ClassEvidence ev;
            if (class_name == "string") ev = classify_string(g);
            else if (class_name == "outerstring") ev = classify_outerstring(g);
            else if (class_name == "incomparability") ev = is_incomparability(g);
            else if (class_name == "comparability") ev = is_comparability(g);
            else if (class_name == "twoclique") ev = is_two_clique(g);
            else throw std::runtime_error("unknown class: " + class_name);
            print_evidence(ev);
        } else if (*c_probe) {
            auto cfg = load_config(config_path);
            auto cfg_get = [&](const std::string& key, const std::string& fallback) {
                auto it = cfg.find(key);
                return it == cfg.end() ? fallback : it->second;
            };
            // config supplies defaults; explicit flags already hold their values,
            // so only fill the ones left at defaults
            ExperimentReport report;
            if (*p_density || *p_degrees) {
                CLI::App* sub = *p_density ? static_cast<CLI::App*>(p_density) : p_degrees;
                if (sub->count("--graphon") == 0) graphon_path = cfg_get("graphon", graphon_path);
                if (sub->count("--n") == 0) n = std::stoi(cfg_get("n", std::to_string(n)));
                if (sub->count("--trials") == 0) trials = std::stoi(cfg_get("trials", std::to_string(trials)));
                if (sub->count("--seed") == 0) seed = std::stoull(cfg_get("seed", std::to_string(seed)));
                StepGraphon w = read_graphon_file(graphon_path);
                report = *p_density ? run_density_probe(w, n, trials, seed)
                                    : run_degree_probe(w, n, trials, seed, bin_width);
            } else if (*p_speed) {
                if (p_speed->count("--class") == 0) class_name = cfg_get("class", class_name);
                if (p_speed->count("--n-max") == 0) n_max = std::stoi(cfg_get("n_max", std::to_string(n_max)));
                CensusClass cls;
                if (class_name == "incomparability") cls = CensusClass::incomparability;
                else if (class_name == "twoclique") cls = CensusClass::twoclique;
                else if (class_name == "cts") cls = CensusClass::cts;
                else
                    throw std::runtime_error(
                        "census supports incomparability|twoclique|cts only (string and "
                        "outer-string have no exact recognizer)");
                report = run_speed_census(cls, n_max, census_t, census_s);
            } else if (*p_twoclique) {
                Ensemble ens = ensemble_name == "unlabeled" ? Ensemble::unlabeled : Ensemble::labeled;
                report = run_twoclique_limit_probe(n, trials_ll, seed, ens);
            } else {
                report = run_equivalence_probe(k_param, Rat::from_string(a_str), Rat::from_string(b_str),
                                               max_size);
            }
            emit_report(report, out_path);
            if (!svg_path.empty()) report_svg(report, svg_path);
        } else if (*c_igraph) {
            Graph g = intersection_graph(read_representation_file(rep_path));
            if (out_path.empty()) write_graph(std::cout, g);
            else {
                write_graph_file(out_path, g);
                std::cout << "wrote " << out_path << "\n";
            }
        } else if (*c_pos) {
            auto r = check_general_position(read_representation_file(rep_path));
            std::cout << "intersection_points " << r.intersection_points << "\n"
                      << "triple_points " << r.triple_points << "\n"
                      << "improper_crossings " << r.improper_crossings << "\n"
                      << "coincident_direction_pairs " << r.coincident_direction_pairs << "\n"
                      << "infinite_intersection_pairs " << r.infinite_intersection_pairs << "\n"
                      << (r.pass ? "PASS" : "FAIL") << "\n";
        } else if (*c_norm) {
            Representation rep = read_representation_file(rep_path);
            Representation out = outer ? normalize_outer(rep, seed) : normalize(rep, seed);
            write_representation_file(out_path, out);
            std::cout << "wrote " << out_path << "\n";
            if (!svg_path.empty()) {
                write_svg(out, svg_path);
                std::cout << "wrote " << svg_path << "\n";
            }
        } else if (*c_outer) {
            Graph g = read_graph_file(graph_path);
            VertexPartition cover = read_partition_file(cover_path);
            Disk disk{Point{BigRat::from_string(cx), BigRat::from_string(cy)},
                      BigRat::from_string(radius)};
            Representation rep = build_outerstring_from_cover(g, cover, disk);
            write_representation_file(out_path, rep);
            std::cout << "wrote " << out_path << "\n";
            if (!svg_path.empty()) {
                write_svg(rep, svg_path);
                std::cout << "wrote " << svg_path << "\n";
            }
        } else if (*c_k5) {
            auto r = derive_k5_drawing(read_representation_file(rep_path));
            std::cout << "independent_crossing_pairs " << r.independent_crossing_pairs << "\n";
            for (const auto& e : r.crossing_pairs)
                std::cout << "{" << e.edge1[0] << "," << e.edge1[1] << "} x {" << e.edge2[0] << ","
                          << e.edge2[1] << "} crossings " << e.crossings << " parity " << e.parity
                          << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
