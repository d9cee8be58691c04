#ifndef GRAPHLIM_GRAPHON_HPP
#define GRAPHLIM_GRAPHON_HPP

#include "graphlim/graph.hpp"
#include "graphlim/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace graphlim {

/// Step graphon: positive rational block measures summing to exactly 1 and
/// a symmetric matrix of rational values in [0,1].  The diagonal entry of
/// a block is also the value of W on the diagonal inside that block.
class StepGraphon {
public:
    StepGraphon(std::vector<Rat> measures, std::vector<std::vector<Rat>> values);

    int blocks() const { return static_cast<int>(measures_.size()); }
    const Rat& measure(int i) const { return measures_[static_cast<size_t>(i)]; }
    const Rat& value(int i, int j) const { return values_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const std::vector<Rat>& measures() const { return measures_; }

    /// Cumulative measure boundaries c_0 = 0 < c_1 < ... < c_k = 1.
    std::vector<Rat> boundaries() const;

    /// Block containing x in [0,1] (blocks are half-open, last block
    /// closed at 1).
    int block_of(const Rat& x) const;

    bool operator==(const StepGraphon& o) const {
        return measures_ == o.measures_ && values_ == o.values_;
    }

private:
    std::vector<Rat> measures_;
    std::vector<std::vector<Rat>> values_;
};

/// W^k_a: the split-block member of R_k.  a in [0,1]; a in {0,1} collapses
/// the split so that W^k_0 = W^k_1 = W*_{k,k}.
StepGraphon make_wka(int k, const Rat& a);

/// W*_{k,s}: k equal blocks, diagonal 1 on the first s and 0 on the rest,
/// 1/2 everywhere else.
StepGraphon make_wstar(int k, int s);

/// Constant graphon of value c.
StepGraphon make_constant(const Rat& c);

/// Integral of the binary entropy of the values; h(0) = h(1) = 0.
double entropy(const StepGraphon& w);

/// Exact integral of W.
Rat edge_density(const StepGraphon& w);

/// Exact induced-subgraph density of g in w: the sum over block
/// assignments of measure products times edge/non-edge value products.
/// Refuses when k^n exceeds the enumeration budget; use the Monte Carlo
/// estimator beyond it.
Rat t_ind_exact(const Graph& g, const StepGraphon& w);

struct McEstimate {
    double mean = 0;
    double std_error = 0;
    long long trials = 0;
};

/// Monte Carlo estimate of t_ind over i.i.d. uniform points; reproducible
/// per seed (SplitMix64 counter streams).
McEstimate t_ind_mc(const Graph& g, const StepGraphon& w, long long trials, uint64_t seed);

/// Membership in R_k: block boundaries refine the k equal intervals,
/// within-group values lie in {0,1} and cross-group values equal 1/2.
bool is_in_rk(const StepGraphon& w, int k);

/// The constant-1/2 graphon (R_infinity), regardless of block structure.
bool is_r_infinity(const StepGraphon& w);

/// Partition of the given blocks into disjoint-clique parts under the
/// "value 1" relation, or nullopt when reflexivity or transitivity fails.
/// The restriction must be 0/1-valued.
std::optional<std::vector<std::vector<int>>>
disjoint_clique_parts(const StepGraphon& w, const std::vector<int>& group_blocks);

/// Exact induced density of every isomorphism class of graphs on
/// 1..max_size vertices.  Two graphons with different fingerprints
/// represent different graph limits; equal fingerprints are evidence of
/// equivalence, never a decision.
struct DensityFingerprint {
    struct Entry {
        std::string key;          // canonical class key "n:edge-bits"
        long long labeled_count;  // number of labeled graphs in the class
        Rat value;
    };
    int max_size = 0;
    std::vector<Entry> entries;  // sorted by key

    bool operator==(const DensityFingerprint& o) const {
        if (max_size != o.max_size || entries.size() != o.entries.size()) return false;
        for (size_t i = 0; i < entries.size(); ++i)
            if (entries[i].key != o.entries[i].key || entries[i].value != o.entries[i].value)
                return false;
        return true;
    }
};

DensityFingerprint density_fingerprint(const StepGraphon& w, int max_size);

/// (lower, upper) bounds on the cut distance between the two graphons.
/// Lower: max_F |t_ind(F,w1) - t_ind(F,w2)| / (4 |V(F)|^2) over classes of
/// size <= max_size; valid by the induced-density counting lemma, whose
/// Lipschitz constant C(|V(F)|,2) is below 4|V(F)|^2.  Upper: minimum cut
/// norm of the difference over block overlays of the common refinement
/// (identity plus all measure-preserving atom permutations up to a
/// documented enumeration cap, with an L1 fallback beyond it).
std::pair<double, double>
cut_distance_bounds(const StepGraphon& w1, const StepGraphon& w2, int max_size);

/// Enumeration of isomorphism classes on n labeled vertices; shared by the
/// fingerprint machinery and the census harness.  Returns (canonical key,
/// representative graph, labeled count) triples sorted by key.
struct IsoClass {
    std::string key;
    Graph representative;
    long long labeled_count;
};
std::vector<IsoClass> isomorphism_classes(int n);

/// Canonical key of a labeled graph (minimum edge bitmask over all vertex
/// permutations); exact for n <= 8.
std::string canonical_key(const Graph& g);

} // namespace graphlim

#endif
