#ifndef GRAPHLIM_SAMPLING_HPP
#define GRAPHLIM_SAMPLING_HPP

#include "graphlim/graph.hpp"
#include "graphlim/graphon.hpp"
#include "graphlim/rng.hpp"

#include <optional>
#include <vector>

namespace graphlim {

/// Block assignment standing in for a witnessing vector: step graphons are
/// constant on blocks, so a point choice is exactly a block choice.
using WitnessAssignment = std::vector<int>;

struct SampleResult {
    Graph graph;
    WitnessAssignment blocks; // generating block of each vertex
};

/// W-random graph G(n, W): latent uniform points pick blocks, then each
/// edge is an independent exact Bernoulli coin with the block-pair value.
/// Deterministic per seed.
SampleResult sample_w_random(const StepGraphon& w, int n, uint64_t seed);

/// Exact psi(x_1..x_n): product of W at edge pairs and 1-W at non-edge
/// pairs.  Points must lie in [0,1]; coincident points use the diagonal
/// block value.
Rat psi(const Graph& g, const StepGraphon& w, const std::vector<Rat>& points);

/// psi evaluated on a block assignment.
Rat psi_of_assignment(const Graph& g, const StepGraphon& w, const WitnessAssignment& a);

/// A representative interior point of each block (midpoints).
std::vector<Rat> block_representatives(const StepGraphon& w);

/// Exact W-constructibility for step graphons: backtracking over block
/// assignments (descending-degree order, first-failure pruning,
/// interchangeable-block symmetry reduction).  Worst case k^n nodes; the
/// node budget turns runaway searches into an explicit refusal.
std::optional<WitnessAssignment>
is_constructible(const Graph& g, const StepGraphon& w, long long node_budget = 200000000);

enum class WitnessClaim { cl00, cl1, cl111, cl2, clr1 };

struct StandardWitness {
    Graph graph;                 // the obstruction graph
    WitnessAssignment assignment;
};

/// The standard witnessing assignments used against graphons violating the
/// structural claims: cl00 (two 0-diagonal groups -> B_{r+1}), cl1
/// (0-diagonal point -> G_{r+1}), cl111 (transitivity failure -> G_{r+1}),
/// cl2 (three clique parts in a group -> G_{r+1}), clr1 (two split groups
/// -> H_{r+1}, or B_3 when r = 2).  Requires w in R_r exhibiting the
/// claim's violating configuration; rejects otherwise, naming what is
/// missing.  The returned assignment always has psi > 0.
StandardWitness standard_witness(WitnessClaim claim, int r, const StepGraphon& w);

} // namespace graphlim

#endif
