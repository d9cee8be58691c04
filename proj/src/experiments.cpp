#include "graphlim/experiments.hpp"
#include "graphlim/recognizers.hpp"
#include "graphlim/sampling.hpp"
#include "graphlim/stats.hpp"
#include "graphlim/subgraph.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace graphlim {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void ExperimentReport::add(const std::string& stat, double value) {
    rows.push_back({stat, format_double(value), std::nullopt});
}
void ExperimentReport::add(const std::string& stat, double value, double std_error) {
    rows.push_back({stat, format_double(value), format_double(std_error)});
}
void ExperimentReport::add_exact(const std::string& stat, const std::string& value) {
    rows.push_back({stat, value, std::nullopt});
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream os;
    os << "statistic,value,std_error\n";
    for (const auto& [k, v] : params) os << "param." << k << "," << v << ",\n";
    for (const auto& r : rows)
        os << r.statistic << "," << r.value << "," << (r.std_error ? *r.std_error : "") << "\n";
    return os.str();
}

namespace {

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

ExperimentReport make_report(std::string name,
                             std::vector<std::pair<std::string, std::string>> params) {
    ExperimentReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.timestamp_ms = now_ms();
    return r;
}

} // namespace

ExperimentReport run_density_probe(const StepGraphon& w, int n, int trials, uint64_t seed) {
    if (n < 2 || trials < 1) throw std::invalid_argument("density probe needs n >= 2, trials >= 1");
    auto report = make_report("density_probe", {{"n", std::to_string(n)},
                                                {"trials", std::to_string(trials)},
                                                {"seed", std::to_string(seed)}});
    const Rat ref = edge_density(w);
    report.add_exact("conjectured_ref.edge_density", ref.str());
    report.add("conjectured_ref.edge_density.value", ref.to_double());

    CounterRng rng(seed);
    std::vector<double> densities;
    const double pairs = 0.5 * n * (n - 1.0);
    for (int t = 0; t < trials; ++t) {
        auto s = sample_w_random(w, n, rng.derive(static_cast<uint64_t>(t)));
        densities.push_back(static_cast<double>(s.graph.edge_count()) / pairs);
    }
    auto ms = mean_stderr(densities);
    report.add("observed.edge_density.mean", ms.mean, ms.std_error);
    return report;
}

ExperimentReport run_degree_probe(const StepGraphon& w, int n, int trials, uint64_t seed,
                                  double bin_width) {
    if (bin_width <= 0 || bin_width >= 1)
        throw std::invalid_argument("degree probe needs bin width in (0,1)");
    if (n < 2 || trials < 1) throw std::invalid_argument("degree probe needs n >= 2, trials >= 1");
    auto report = make_report("degree_probe", {{"n", std::to_string(n)},
                                               {"trials", std::to_string(trials)},
                                               {"seed", std::to_string(seed)},
                                               {"bin_width", format_double(bin_width)}});

    // degree atoms: block row integrals with their total measures
    std::map<Rat, Rat> atom_mass; // location -> mass  (Rat has operator<)
    for (int b = 0; b < w.blocks(); ++b) {
        Rat row(0);
        for (int j = 0; j < w.blocks(); ++j) row += w.measure(j) * w.value(b, j);
        atom_mass[row] += w.measure(b);
    }

    CounterRng rng(seed);
    std::vector<double> degs;
    degs.reserve(static_cast<size_t>(n) * static_cast<size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        auto s = sample_w_random(w, n, rng.derive(static_cast<uint64_t>(t)));
        for (int v = 0; v < n; ++v)
            degs.push_back(static_cast<double>(s.graph.degree(v)) / static_cast<double>(n));
    }

    int idx = 0;
    for (const auto& [loc, mass] : atom_mass) {
        const double c = loc.to_double();
        long long inside = 0;
        for (double d : degs)
            if (std::fabs(d - c) <= bin_width) ++inside;
        const std::string tag = "atom." + std::to_string(idx);
        report.add_exact("conjectured_ref." + tag + ".location", loc.str());
        report.add("conjectured_ref." + tag + ".mass", mass.to_double());
        report.add("observed." + tag + ".mass_in_window",
                   static_cast<double>(inside) / static_cast<double>(degs.size()));
        ++idx;
    }
    return report;
}

ExperimentReport run_speed_census(CensusClass cls, int n_max, int t, int s) {
    if (n_max < 1 || n_max > 7) throw std::invalid_argument("census envelope is 1 <= n_max <= 7");
    std::string cname;
    switch (cls) {
    case CensusClass::incomparability: cname = "incomparability"; break;
    case CensusClass::twoclique: cname = "twoclique"; break;
    case CensusClass::cts:
        if (s < 0 || t < s) throw std::invalid_argument("census C(t,s) needs 0 <= s <= t");
        cname = "C(" + std::to_string(t) + "," + std::to_string(s) + ")";
        break;
    }
    auto report = make_report("speed_census", {{"class", cname}, {"n_max", std::to_string(n_max)}});

    for (int n = 1; n <= n_max; ++n) {
        const int pairs = n * (n - 1) / 2;
        long long count = 0;
        for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (1ull << bit)) g.add_edge(u, v);
            bool member = false;
            switch (cls) {
            case CensusClass::incomparability:
                member = is_incomparability(g).verdict == Verdict::member;
                break;
            case CensusClass::twoclique:
                member = is_two_clique(g).verdict == Verdict::member;
                break;
            case CensusClass::cts:
                member = membership_cts(g, t, s).has_value();
                break;
            }
            if (member) ++count;
        }
        report.add("count.n=" + std::to_string(n), static_cast<double>(count));
        if (pairs > 0)
            report.add("exponent.n=" + std::to_string(n),
                       std::log2(static_cast<double>(count)) / static_cast<double>(pairs));
    }
    return report;
}

ExperimentReport run_twoclique_limit_probe(int n, long long trials, uint64_t seed, Ensemble ens) {
    if (n < 2 || trials < 1)
        throw std::invalid_argument("twoclique probe needs n >= 2, trials >= 1");
    auto report = make_report("twoclique_limit_probe",
                              {{"n", std::to_string(n)},
                               {"trials", std::to_string(trials)},
                               {"seed", std::to_string(seed)},
                               {"ensemble", ens == Ensemble::labeled ? "labeled" : "unlabeled"}});

    const int bins = 20; // histogram on [0, 1/2]
    std::vector<long long> hist(static_cast<size_t>(bins) + 1, 0);
    double sum = 0;
    for (long long t = 0; t < trials; ++t) {
        int small_side;
        if (ens == Ensemble::labeled) {
            // uniform subset S; the unordered pair {S, S^c} is the graph
            int size = 0;
            for (int v = 0; v < n; ++v)
                if (CounterRng::at(seed, 7, static_cast<uint64_t>(t) * static_cast<uint64_t>(n) +
                                                static_cast<uint64_t>(v)) &
                    1ull)
                    ++size;
            small_side = std::min(size, n - size);
        } else {
            // uniform over the size classes {k, n-k}
            small_side = static_cast<int>(CounterRng::at(seed, 8, static_cast<uint64_t>(t)) %
                                          static_cast<uint64_t>(n / 2 + 1));
        }
        const double frac = static_cast<double>(small_side) / static_cast<double>(n);
        sum += frac;
        int b = static_cast<int>(frac * 2 * bins);
        if (b > bins) b = bins;
        ++hist[static_cast<size_t>(b)];
    }
    report.add("observed.mean_min_fraction", sum / static_cast<double>(trials));
    for (int b = 0; b <= bins; ++b)
        report.add("observed.hist.bin." + std::to_string(b),
                   static_cast<double>(hist[static_cast<size_t>(b)]) / static_cast<double>(trials));
    // both candidate limits, asserted by neither ensemble
    report.add("candidate.point_mass_at_half.mean_min_fraction", 0.5);
    report.add("candidate.uniform_on_0_half.mean_min_fraction", 0.25);
    return report;
}

ExperimentReport run_equivalence_probe(int k, const Rat& a, const Rat& b, int m) {
    auto report = make_report("equivalence_probe", {{"k", std::to_string(k)},
                                                    {"a", a.str()},
                                                    {"b", b.str()},
                                                    {"m", std::to_string(m)}});
    StepGraphon wa = make_wka(k, a);
    StepGraphon wb = make_wka(k, b);
    report.add_exact("edge_density.a", edge_density(wa).str());
    report.add_exact("edge_density.b", edge_density(wb).str());

    const bool fp_equal = density_fingerprint(wa, m) == density_fingerprint(wb, m);
    auto [lower, upper] = cut_distance_bounds(wa, wb, m);
    report.add("fingerprints_equal", fp_equal ? 1.0 : 0.0);
    report.add("cut_distance.lower", lower);
    report.add("cut_distance.upper", upper);
    report.add("verdict.equivalent_evidence", (fp_equal && upper == 0.0) ? 1.0 : 0.0);
    return report;
}

} // namespace graphlim
