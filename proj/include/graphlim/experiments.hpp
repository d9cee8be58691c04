#ifndef GRAPHLIM_EXPERIMENTS_HPP
#define GRAPHLIM_EXPERIMENTS_HPP

#include "graphlim/graphon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace graphlim {

/// Tabular experiment record.  Rows are a pure function of the parameter
/// record; the wall-clock timestamp stays in memory and is never written,
/// so emitted reports are byte-reproducible.
struct ExperimentReport {
    struct Row {
        std::string statistic;
        std::string value;                 // locale-independent formatting
        std::optional<std::string> std_error;
    };

    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Row> rows;
    long long timestamp_ms = 0; // in-memory only

    void add(const std::string& stat, double value);
    void add(const std::string& stat, double value, double std_error);
    void add_exact(const std::string& stat, const std::string& value);

    /// CSV schema: header "statistic,value,std_error", parameter rows
    /// ("param.<name>") first, then result rows.
    std::string to_csv() const;
};

std::string format_double(double v);

/// Edge-density probe: trials of G(n, w), observed mean and standard error
/// against the exact edge density as the conjectured reference.
ExperimentReport run_density_probe(const StepGraphon& w, int n, int trials, uint64_t seed);

/// Normalized-degree histogram with the graphon's degree atoms (block row
/// integrals) as conjectured references; mass measured in a +-bin_width
/// window around each atom.
ExperimentReport run_degree_probe(const StepGraphon& w, int n, int trials, uint64_t seed,
                                  double bin_width);

enum class CensusClass { incomparability, twoclique, cts };

/// Labeled counts of the class per order up to n_max (<= 7), with the
/// normalized exponent log2(count)/C(n,2).  The recognizers module is the
/// membership oracle.
ExperimentReport run_speed_census(CensusClass cls, int n_max, int t = 0, int s = 0);

enum class Ensemble { labeled, unlabeled };

/// Min-part-fraction statistics of uniform two-clique graphs under either
/// ensemble, reported against both candidate limits (point mass at 1/2 and
/// uniform on (0,1/2)) without asserting either pairing.
ExperimentReport run_twoclique_limit_probe(int n, long long trials, uint64_t seed, Ensemble ens);

/// Fingerprint comparison of W^k_a and W^k_b plus cut-distance bounds;
/// "equivalent evidence" only when fingerprints agree exactly and the
/// overlay upper bound is zero.
ExperimentReport run_equivalence_probe(int k, const Rat& a, const Rat& b, int m);

} // namespace graphlim

#endif
