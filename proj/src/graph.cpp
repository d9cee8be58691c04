#include "graphlim/graph.hpp"

#include <algorithm>

namespace graphlim {

void VertexPartition::validate() const {
    std::vector<int> seen(n, 0);
    for (const auto& part : parts) {
        for (int v : part) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
            if (seen[v]++) throw std::invalid_argument("partition parts overlap");
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw std::invalid_argument("partition does not cover all vertices");
}

int special_singleton_index(int, int i) { return i - 1; }

int special_pair_index(int k, int i, int j) {
    // pairs {1,2},{1,3},...,{1,k},{2,3},... after the k singletons
    int offset = 0;
    for (int a = 1; a < i; ++a) offset += k - a;
    return k + offset + (j - i - 1);
}

Graph make_special_graph(SpecialKind kind, int k) {
    if (k < 3) throw std::invalid_argument("special graphs need k >= 3");
    if (kind == SpecialKind::H && k < 4) throw std::invalid_argument("H_k needs k >= 4");

    const int n = k + k * (k - 1) / 2;
    // vertex -> subset of [k] as bitmask
    std::vector<uint32_t> subset(n);
    for (int i = 1; i <= k; ++i) subset[special_singleton_index(k, i)] = 1u << i;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            subset[special_pair_index(k, i, j)] = (1u << i) | (1u << j);

    auto max_elem = [](uint32_t mask) {
        int m = 0;
        for (int b = 1; b < 32; ++b)
            if (mask & (1u << b)) m = b;
        return m;
    };

    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if ((subset[u] & subset[v]) == 0) continue;
            bool upair = __builtin_popcount(subset[u]) == 2;
            bool vpair = __builtin_popcount(subset[v]) == 2;
            switch (kind) {
            case SpecialKind::G:
                g.add_edge(u, v);
                break;
            case SpecialKind::B:
                if (!(upair && vpair)) g.add_edge(u, v);
                break;
            case SpecialKind::H:
                if (upair && vpair) {
                    if (std::max(max_elem(subset[u]), max_elem(subset[v])) >= 4) g.add_edge(u, v);
                } else {
                    g.add_edge(u, v);
                }
                break;
            }
        }
    }
    return g;
}

Graph make_basic(BasicKind kind, int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    switch (kind) {
    case BasicKind::empty:
        return Graph(n);
    case BasicKind::complete: {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    case BasicKind::complete_minus_edge: {
        if (n < 2) throw std::invalid_argument("complete_minus_edge needs n >= 2");
        Graph g = make_basic(BasicKind::complete, n);
        g.remove_edge(0, 1);
        return g;
    }
    case BasicKind::cycle: {
        if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
        Graph g(n);
        for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
        return g;
    }
    case BasicKind::path: {
        Graph g(n);
        for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
        return g;
    }
    case BasicKind::prism: {
        if (n != 6) throw std::invalid_argument("prism is fixed at n = 6");
        Graph g(6);
        g.add_edge(0, 2);
        g.add_edge(2, 4);
        g.add_edge(4, 0);
        g.add_edge(1, 3);
        g.add_edge(3, 5);
        g.add_edge(5, 1);
        g.add_edge(0, 3);
        g.add_edge(1, 4);
        g.add_edge(2, 5);
        return g;
    }
    }
    throw std::invalid_argument("unknown basic graph kind");
}

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph quotient(const Graph& g, const VertexPartition& p) {
    if (p.n != g.n()) throw std::invalid_argument("partition size mismatch");
    p.validate();
    const int k = static_cast<int>(p.parts.size());
    Graph q(k);
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            bool cross = false;
            for (int u : p.parts[a]) {
                for (int v : p.parts[b]) {
                    if (g.has_edge(u, v)) {
                        cross = true;
                        break;
                    }
                }
                if (cross) break;
            }
            if (cross) q.add_edge(a, b);
        }
    }
    return q;
}

bool is_clique(const Graph& g, const std::vector<int>& part) {
    for (size_t i = 0; i < part.size(); ++i)
        for (size_t j = i + 1; j < part.size(); ++j)
            if (!g.has_edge(part[i], part[j])) return false;
    return true;
}

bool quotient_subgraph_of(const Graph& g, const VertexPartition& p, const Graph& h) {
    Graph q = quotient(g, p);
    if (q.n() != h.n()) return false;
    for (auto [u, v] : q.edges())
        if (!h.has_edge(u, v)) return false;
    return true;
}

} // namespace graphlim
