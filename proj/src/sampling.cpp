#include "graphlim/sampling.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace graphlim {

SampleResult sample_w_random(const StepGraphon& w, int n, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative sample size");
    auto boundaries = w.boundaries();

    SampleResult r{Graph(n), WitnessAssignment(static_cast<size_t>(n))};
    for (int v = 0; v < n; ++v)
        r.blocks[static_cast<size_t>(v)] = sample_block(boundaries, CounterRng::at(seed, 1, static_cast<uint64_t>(v)));

    uint64_t pair_index = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++pair_index) {
            const Rat& p = w.value(r.blocks[static_cast<size_t>(u)], r.blocks[static_cast<size_t>(v)]);
            if (bernoulli_exact(p, CounterRng::at(seed, 2, pair_index))) r.graph.add_edge(u, v);
        }
    }
    return r;
}

Rat psi(const Graph& g, const StepGraphon& w, const std::vector<Rat>& points) {
    if (static_cast<int>(points.size()) != g.n())
        throw std::invalid_argument("psi needs one point per vertex");
    WitnessAssignment blocks;
    blocks.reserve(points.size());
    for (const auto& x : points) blocks.push_back(w.block_of(x)); // validates range
    return psi_of_assignment(g, w, blocks);
}

Rat psi_of_assignment(const Graph& g, const StepGraphon& w, const WitnessAssignment& a) {
    if (static_cast<int>(a.size()) != g.n())
        throw std::invalid_argument("assignment size mismatch");
    Rat prod(1);
    for (int u = 0; u < g.n() && !prod.is_zero(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            const Rat& val = w.value(a[static_cast<size_t>(u)], a[static_cast<size_t>(v)]);
            prod *= g.has_edge(u, v) ? val : Rat(1) - val;
            if (prod.is_zero()) break;
        }
    }
    return prod;
}

std::vector<Rat> block_representatives(const StepGraphon& w) {
    auto b = w.boundaries();
    std::vector<Rat> reps;
    for (int i = 0; i < w.blocks(); ++i)
        reps.push_back((b[static_cast<size_t>(i)] + b[static_cast<size_t>(i) + 1]) / Rat(2));
    return reps;
}

namespace {

// blocks that may be swapped without changing the value matrix are
// interchangeable for constructibility
std::vector<int> block_symmetry_classes(const StepGraphon& w) {
    const int k = w.blocks();
    std::vector<int> cls(static_cast<size_t>(k), -1);
    int next = 0;
    for (int b = 0; b < k; ++b) {
        if (cls[static_cast<size_t>(b)] != -1) continue;
        cls[static_cast<size_t>(b)] = next;
        for (int c = b + 1; c < k; ++c) {
            if (cls[static_cast<size_t>(c)] != -1) continue;
            if (w.value(b, b) != w.value(c, c)) continue;
            bool same = true;
            for (int x = 0; x < k && same; ++x) {
                if (x == b || x == c) continue;
                same = w.value(b, x) == w.value(c, x);
            }
            if (same) cls[static_cast<size_t>(c)] = next;
        }
        ++next;
    }
    return cls;
}

} // namespace

std::optional<WitnessAssignment>
is_constructible(const Graph& g, const StepGraphon& w, long long node_budget) {
    const int n = g.n();
    const int k = w.blocks();
    if (n == 0) return WitnessAssignment{};

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> sym = block_symmetry_classes(w);
    std::vector<int> use(static_cast<size_t>(k), 0); // vertices currently on each block

    WitnessAssignment assign(static_cast<size_t>(n), -1);
    long long nodes = 0;

    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (depth == n) return true;
        if (++nodes > node_budget)
            throw std::domain_error("is_constructible node budget exhausted (envelope exceeded)");
        int v = order[static_cast<size_t>(depth)];
        for (int b = 0; b < k; ++b) {
            // interchangeable blocks: among the currently unused blocks of a
            // symmetry class, only the lowest-index one is tried
            if (use[static_cast<size_t>(b)] == 0) {
                bool skip = false;
                for (int b2 = 0; b2 < b && !skip; ++b2)
                    skip = sym[static_cast<size_t>(b2)] == sym[static_cast<size_t>(b)] &&
                           use[static_cast<size_t>(b2)] == 0;
                if (skip) continue;
            }

            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int u = order[static_cast<size_t>(d)];
                const Rat& val = w.value(assign[static_cast<size_t>(u)], b);
                if (g.has_edge(u, v)) {
                    if (val.is_zero()) ok = false;
                } else {
                    if (val.is_one()) ok = false;
                }
            }
            if (!ok) continue;

            assign[static_cast<size_t>(v)] = b;
            ++use[static_cast<size_t>(b)];
            if (rec(depth + 1)) return true;
            --use[static_cast<size_t>(b)];
            assign[static_cast<size_t>(v)] = -1;
        }
        return false;
    };

    if (rec(0)) return assign;
    return std::nullopt;
}

namespace {

// group index of every block when w is in R_r, or empty
std::vector<int> rk_groups(const StepGraphon& w, int r) {
    if (!is_in_rk(w, r)) return {};
    auto bounds = w.boundaries();
    std::vector<int> group(static_cast<size_t>(w.blocks()), -1);
    for (int b = 0; b < w.blocks(); ++b)
        for (int g = 1; g <= r; ++g)
            if (bounds[static_cast<size_t>(b)] >= Rat(g - 1, r) && bounds[static_cast<size_t>(b) + 1] <= Rat(g, r)) {
                group[static_cast<size_t>(b)] = g - 1;
                break;
            }
    return group;
}

// one diagonal-1 block per group, -1 where none exists
std::vector<int> diag_one_block_per_group(const StepGraphon& w, const std::vector<int>& group, int r) {
    std::vector<int> pick(static_cast<size_t>(r), -1);
    for (int b = 0; b < w.blocks(); ++b)
        if (w.value(b, b).is_one() && pick[static_cast<size_t>(group[static_cast<size_t>(b)])] == -1)
            pick[static_cast<size_t>(group[static_cast<size_t>(b)])] = b;
    return pick;
}

std::vector<int> blocks_of_group(const std::vector<int>& group, int g) {
    std::vector<int> out;
    for (size_t b = 0; b < group.size(); ++b)
        if (group[b] == g) out.push_back(static_cast<int>(b));
    return out;
}

[[noreturn]] void missing(const std::string& what) {
    throw std::invalid_argument("standard_witness: the graphon lacks the violating configuration: " + what);
}

} // namespace

StandardWitness standard_witness(WitnessClaim claim, int r, const StepGraphon& w) {
    if (r < 2) throw std::invalid_argument("standard_witness needs r >= 2");
    std::vector<int> group = rk_groups(w, r);
    if (group.empty()) throw std::invalid_argument("standard_witness: graphon is not in R_" + std::to_string(r));
    const int k = r + 1;

    auto singleton = [&](int i) { return special_singleton_index(k, i); };
    auto pair_idx = [&](int i, int j) { return special_pair_index(k, std::min(i, j), std::max(i, j)); };
    // subset {a,b} with a == b denotes the singleton {a}
    auto subset_vertex = [&](int a, int b) { return a == b ? singleton(a) : pair_idx(a, b); };

    StandardWitness out;

    switch (claim) {
    case WitnessClaim::cl00: {
        // two groups each containing a 0-diagonal block
        int g1 = -1, g2 = -1, b1 = -1, b2 = -1;
        for (int b = 0; b < w.blocks(); ++b) {
            if (!w.value(b, b).is_zero()) continue;
            int g = group[static_cast<size_t>(b)];
            if (g1 == -1) {
                g1 = g;
                b1 = b;
            } else if (g != g1 && g2 == -1) {
                g2 = g;
                b2 = b;
            }
        }
        if (g2 == -1) missing("two distinct groups with 0-diagonal blocks");
        out.graph = make_special_graph(SpecialKind::B, k);
        out.assignment.assign(static_cast<size_t>(out.graph.n()), b2);
        for (int i = 1; i <= k; ++i) out.assignment[static_cast<size_t>(singleton(i))] = b1;
        break;
    }
    case WitnessClaim::cl1: {
        int g0 = -1, z = -1;
        for (int b = 0; b < w.blocks(); ++b)
            if (w.value(b, b).is_zero()) {
                g0 = group[static_cast<size_t>(b)];
                z = b;
                break;
            }
        if (z == -1) missing("a group with a 0-diagonal block");
        auto ones = diag_one_block_per_group(w, group, r);
        std::vector<int> others;
        for (int g = 0; g < r; ++g) {
            if (g == g0) continue;
            if (ones[static_cast<size_t>(g)] == -1) missing("a 1-diagonal block in every other group");
            others.push_back(ones[static_cast<size_t>(g)]);
        }
        out.graph = make_special_graph(SpecialKind::G, k);
        out.assignment.assign(static_cast<size_t>(out.graph.n()), -1);
        // V_1 = {1,2,3} -> z;  V_2 = pairs of [3] -> first other group;
        // V_l = {{l+1, j}} -> subsequent groups
        for (int i = 1; i <= 3; ++i) out.assignment[static_cast<size_t>(singleton(i))] = z;
        out.assignment[static_cast<size_t>(pair_idx(1, 2))] = others[0];
        out.assignment[static_cast<size_t>(pair_idx(1, 3))] = others[0];
        out.assignment[static_cast<size_t>(pair_idx(2, 3))] = others[0];
        for (int l = 3; l <= r; ++l)
            for (int j = 1; j <= l + 1; ++j)
                out.assignment[static_cast<size_t>(subset_vertex(j, l + 1))] = others[static_cast<size_t>(l) - 2];
        break;
    }
    case WitnessClaim::cl111: {
        // three blocks in one group with 1,1 along a chain but 0 across
        int bx = -1, by = -1, bz = -1, g0 = -1;
        for (int g = 0; g < r && bx == -1; ++g) {
            auto blocks = blocks_of_group(group, g);
            for (int a : blocks)
                for (int b : blocks)
                    for (int c : blocks)
                        if (w.value(a, b).is_one() && w.value(b, c).is_one() && w.value(a, c).is_zero()) {
                            bx = a;
                            by = b;
                            bz = c;
                            g0 = g;
                            goto found111;
                        }
        found111:;
        }
        if (bx == -1) missing("a group whose value-1 relation violates transitivity");
        auto ones = diag_one_block_per_group(w, group, r);
        std::vector<int> others;
        for (int g = 0; g < r; ++g) {
            if (g == g0) continue;
            if (ones[static_cast<size_t>(g)] == -1) missing("a 1-diagonal block in every other group");
            others.push_back(ones[static_cast<size_t>(g)]);
        }
        out.graph = make_special_graph(SpecialKind::G, k);
        out.assignment.assign(static_cast<size_t>(out.graph.n()), -1);
        // U_1 = {1, 2, {1,2}} induces P_3: pair adjacent to both singletons
        out.assignment[static_cast<size_t>(singleton(1))] = bx;
        out.assignment[static_cast<size_t>(singleton(2))] = bz;
        out.assignment[static_cast<size_t>(pair_idx(1, 2))] = by;
        for (int l = 2; l <= r; ++l)
            for (int j = 1; j <= l + 1; ++j)
                out.assignment[static_cast<size_t>(subset_vertex(j, l + 1))] = others[static_cast<size_t>(l) - 2];
        break;
    }
    case WitnessClaim::cl2: {
        int g0 = -1;
        std::vector<int> reps;
        for (int g = 0; g < r; ++g) {
            auto parts = disjoint_clique_parts(w, blocks_of_group(group, g));
            if (parts && parts->size() >= 3) {
                g0 = g;
                reps = {(*parts)[0][0], (*parts)[1][0], (*parts)[2][0]};
                break;
            }
        }
        if (g0 == -1) missing("a group with at least three disjoint-clique parts");
        auto ones = diag_one_block_per_group(w, group, r);
        std::vector<int> others;
        for (int g = 0; g < r; ++g) {
            if (g == g0) continue;
            if (ones[static_cast<size_t>(g)] == -1) missing("a 1-diagonal block in every other group");
            others.push_back(ones[static_cast<size_t>(g)]);
        }
        out.graph = make_special_graph(SpecialKind::G, k);
        out.assignment.assign(static_cast<size_t>(out.graph.n()), -1);
        for (int i = 1; i <= 3; ++i) out.assignment[static_cast<size_t>(singleton(i))] = reps[static_cast<size_t>(i) - 1];
        out.assignment[static_cast<size_t>(pair_idx(1, 2))] = others[0];
        out.assignment[static_cast<size_t>(pair_idx(1, 3))] = others[0];
        out.assignment[static_cast<size_t>(pair_idx(2, 3))] = others[0];
        for (int l = 3; l <= r; ++l)
            for (int j = 1; j <= l + 1; ++j)
                out.assignment[static_cast<size_t>(subset_vertex(j, l + 1))] = others[static_cast<size_t>(l) - 2];
        break;
    }
    case WitnessClaim::clr1: {
        // two groups each split into at least two disjoint-clique parts
        int ga = -1, gb = -1;
        int a1 = -1, a2 = -1, b1 = -1, b2 = -1;
        for (int g = 0; g < r; ++g) {
            auto parts = disjoint_clique_parts(w, blocks_of_group(group, g));
            if (!parts || parts->size() < 2) continue;
            if (ga == -1) {
                ga = g;
                a1 = (*parts)[0][0];
                a2 = (*parts)[1][0];
            } else {
                gb = g;
                b1 = (*parts)[0][0];
                b2 = (*parts)[1][0];
                break;
            }
        }
        if (gb == -1) missing("two groups each with at least two disjoint-clique parts");

        if (r == 2) {
            out.graph = make_special_graph(SpecialKind::B, 3);
        } else {
            out.graph = make_special_graph(SpecialKind::H, k);
        }
        out.assignment.assign(static_cast<size_t>(out.graph.n()), -1);
        // X'_1 = {1, {1,3}} -> a1;  X''_1 = {{2,3}} -> a2;
        // X'_2 = {2, {1,2}} -> b1;  X''_2 = {3} -> b2
        out.assignment[static_cast<size_t>(singleton(1))] = a1;
        out.assignment[static_cast<size_t>(pair_idx(1, 3))] = a1;
        out.assignment[static_cast<size_t>(pair_idx(2, 3))] = a2;
        out.assignment[static_cast<size_t>(singleton(2))] = b1;
        out.assignment[static_cast<size_t>(pair_idx(1, 2))] = b1;
        out.assignment[static_cast<size_t>(singleton(3))] = b2;
        if (r >= 3) {
            auto ones = diag_one_block_per_group(w, group, r);
            std::vector<int> others;
            for (int g = 0; g < r; ++g) {
                if (g == ga || g == gb) continue;
                if (ones[static_cast<size_t>(g)] == -1) missing("a 1-diagonal block in every remaining group");
                others.push_back(ones[static_cast<size_t>(g)]);
            }
            for (int l = 3; l <= r; ++l)
                for (int j = 1; j <= l + 1; ++j)
                    out.assignment[static_cast<size_t>(subset_vertex(j, l + 1))] = others[static_cast<size_t>(l) - 3];
        }
        break;
    }
    }

    for (int b : out.assignment)
        if (b < 0) throw std::logic_error("standard_witness produced an incomplete assignment");
    if (psi_of_assignment(out.graph, w, out.assignment).is_zero())
        throw std::logic_error("standard_witness produced an assignment with psi = 0");
    return out;
}

} // namespace graphlim
