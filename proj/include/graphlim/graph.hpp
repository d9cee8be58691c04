#ifndef GRAPHLIM_GRAPH_HPP
#define GRAPHLIM_GRAPH_HPP

#include <cstdint>
#include <vector>
#include <string>
#include <stdexcept>
#include <utility>

namespace graphlim {

/// Finite simple graph on vertices {0,...,n-1} with a symmetric adjacency
/// matrix stored as bit rows.  No self-loops.
class Graph {
public:
    Graph() : n_(0), stride_(0) {}
    explicit Graph(int n) : n_(n), stride_((n + 63) / 64), bits_(static_cast<size_t>(n) * stride_, 0) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int n() const { return n_; }

    void add_edge(int u, int v) {
        check_pair(u, v);
        bits_[static_cast<size_t>(u) * stride_ + v / 64] |= (1ull << (v % 64));
        bits_[static_cast<size_t>(v) * stride_ + u / 64] |= (1ull << (u % 64));
    }
    void remove_edge(int u, int v) {
        check_pair(u, v);
        bits_[static_cast<size_t>(u) * stride_ + v / 64] &= ~(1ull << (v % 64));
        bits_[static_cast<size_t>(v) * stride_ + u / 64] &= ~(1ull << (u % 64));
    }
    bool has_edge(int u, int v) const {
        if (u == v) return false;
        return (bits_[static_cast<size_t>(u) * stride_ + v / 64] >> (v % 64)) & 1ull;
    }

    int degree(int u) const {
        int d = 0;
        for (int w = 0; w < stride_; ++w)
            d += __builtin_popcountll(bits_[static_cast<size_t>(u) * stride_ + w]);
        return d;
    }

    long long edge_count() const {
        long long total = 0;
        for (int u = 0; u < n_; ++u) total += degree(u);
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has_edge(u, v)) e.emplace_back(u, v);
        return e;
    }

    std::vector<int> neighbors(int u) const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (has_edge(u, v)) out.push_back(v);
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
    }
    int n_;
    int stride_;
    std::vector<uint64_t> bits_;
};

/// Partition of {0,...,n-1} into disjoint parts whose union covers all
/// vertices.  Parts may be empty (they become isolated quotient vertices).
struct VertexPartition {
    int n = 0;
    std::vector<std::vector<int>> parts;

    /// Throws if parts overlap, miss a vertex, or index out of range.
    void validate() const;

    static VertexPartition singletons(int n) {
        VertexPartition p;
        p.n = n;
        p.parts.resize(n);
        for (int i = 0; i < n; ++i) p.parts[i] = {i};
        return p;
    }
};

enum class SpecialKind { G, B, H };
enum class BasicKind { complete, cycle, path, complete_minus_edge, prism, empty };

/// The intersection-pattern graphs G_k, B_k, H_k on the size-1 and size-2
/// subsets of [k].  Canonical vertex order: singletons {1},...,{k} first,
/// then pairs in lexicographic order {1,2},{1,3},...,{k-1,k}.
Graph make_special_graph(SpecialKind kind, int k);

/// Index of the vertex for singleton {i} (1-based i) in the canonical order.
int special_singleton_index(int k, int i);
/// Index of the vertex for pair {i,j} (1-based, i < j).
int special_pair_index(int k, int i, int j);

/// Named small graphs.  complete_minus_edge removes the edge {0,1};
/// prism is the triangles {0,2,4},{1,3,5} joined by the matching
/// {0,3},{1,4},{2,5} (the complement of the canonical C_6).
Graph make_basic(BasicKind kind, int n);

Graph complement(const Graph& g);

/// One vertex per part, edge iff the original graph has a cross-part edge.
Graph quotient(const Graph& g, const VertexPartition& p);

/// True iff the subgraph induced by `part` is a clique.
bool is_clique(const Graph& g, const std::vector<int>& part);

/// True iff every quotient edge of g/p is also an edge of h under the
/// identity labeling (parts of p index vertices of h).
bool quotient_subgraph_of(const Graph& g, const VertexPartition& p, const Graph& h);

} // namespace graphlim

#endif
