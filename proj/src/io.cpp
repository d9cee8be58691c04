#include "graphlim/io.hpp"

#include <fstream>
#include <sstream>

namespace graphlim {

namespace {

std::runtime_error parse_error(const std::string& what) {
    return std::runtime_error("parse error: " + what);
}

template <typename T> T open_and(const std::string& path, T (*fn)(std::istream&)) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return fn(f);
}

} // namespace

Graph read_graph(std::istream& is) {
    int n;
    long long m;
    if (!(is >> n >> m)) throw parse_error("graph header 'n m'");
    if (n < 0 || m < 0) throw parse_error("negative graph header");
    Graph g(n);
    for (long long e = 0; e < m; ++e) {
        int u, v;
        if (!(is >> u >> v)) throw parse_error("graph edge line");
        g.add_edge(u, v);
    }
    return g;
}

void write_graph(std::ostream& os, const Graph& g) {
    auto edges = g.edges();
    os << g.n() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) os << u << " " << v << "\n";
}

StepGraphon read_graphon(std::istream& is) {
    int k;
    if (!(is >> k)) throw parse_error("graphon block count");
    if (k <= 0) throw parse_error("graphon needs a positive block count");
    auto next_rat = [&]() {
        std::string tok;
        if (!(is >> tok)) throw parse_error("graphon rational token");
        return Rat::from_string(tok);
    };
    std::vector<Rat> meas;
    for (int i = 0; i < k; ++i) meas.push_back(next_rat());
    std::vector<std::vector<Rat>> val(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) val[static_cast<size_t>(i)][static_cast<size_t>(j)] = next_rat();
    return StepGraphon(std::move(meas), std::move(val));
}

void write_graphon(std::ostream& os, const StepGraphon& w) {
    os << w.blocks() << "\n";
    for (int i = 0; i < w.blocks(); ++i) os << (i ? " " : "") << w.measure(i).str();
    os << "\n";
    for (int i = 0; i < w.blocks(); ++i) {
        for (int j = 0; j < w.blocks(); ++j) os << (j ? " " : "") << w.value(i, j).str();
        os << "\n";
    }
}

VertexPartition read_partition(std::istream& is) {
    int n, p;
    if (!(is >> n >> p)) throw parse_error("partition header 'n p'");
    std::string rest;
    std::getline(is, rest);
    VertexPartition vp;
    vp.n = n;
    vp.parts.resize(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) {
        std::string line;
        if (!std::getline(is, line)) throw parse_error("partition part line");
        std::istringstream ls(line);
        int v;
        while (ls >> v) vp.parts[static_cast<size_t>(i)].push_back(v);
    }
    vp.validate();
    return vp;
}

void write_partition(std::ostream& os, const VertexPartition& p) {
    os << p.n << " " << p.parts.size() << "\n";
    for (const auto& part : p.parts) {
        for (size_t i = 0; i < part.size(); ++i) os << (i ? " " : "") << part[i];
        os << "\n";
    }
}

Representation read_representation(std::istream& is) {
    int n;
    if (!(is >> n)) throw parse_error("representation vertex count");
    Representation rep;
    rep.n = n;
    rep.sets.resize(static_cast<size_t>(n));

    std::string tok;
    if (!(is >> tok)) {
        if (n == 0) return rep;
        throw parse_error("representation record");
    }
    if (tok == "disk") {
        std::string cx, cy, r;
        if (!(is >> cx >> cy >> r)) throw parse_error("disk line");
        rep.disk = Disk{Point{BigRat::from_string(cx), BigRat::from_string(cy)},
                        BigRat::from_string(r)};
        if (n == 0) return rep;
        if (!(is >> tok)) throw parse_error("representation record");
    }

    for (int rec = 0; rec < n; ++rec) {
        if (rec > 0 && !(is >> tok)) throw parse_error("representation record");
        int v = std::stoi(tok);
        int c;
        if (!(is >> c)) throw parse_error("piece count");
        if (v < 0 || v >= n) throw parse_error("vertex id out of range");
        for (int pc = 0; pc < c; ++pc) {
            std::string kind;
            int m;
            if (!(is >> kind >> m)) throw parse_error("piece header");
            Polyline pl;
            pl.closed = kind == "closed";
            if (!pl.closed && kind != "open") throw parse_error("piece kind must be open|closed");
            for (int i = 0; i < m; ++i) {
                std::string x, y;
                if (!(is >> x >> y)) throw parse_error("point");
                pl.pts.push_back(Point{BigRat::from_string(x), BigRat::from_string(y)});
            }
            rep.sets[static_cast<size_t>(v)].push_back(std::move(pl));
        }
    }
    rep.validate();
    return rep;
}

void write_representation(std::ostream& os, const Representation& rep) {
    os << rep.n << "\n";
    if (rep.disk)
        os << "disk " << rep.disk->center.x.str() << " " << rep.disk->center.y.str() << " "
           << rep.disk->radius.str() << "\n";
    for (int v = 0; v < rep.n; ++v) {
        os << v << " " << rep.sets[static_cast<size_t>(v)].size() << "\n";
        for (const auto& pl : rep.sets[static_cast<size_t>(v)]) {
            os << (pl.closed ? "closed" : "open") << " " << pl.pts.size();
            for (const auto& p : pl.pts) os << " " << p.x.str() << " " << p.y.str();
            os << "\n";
        }
    }
}

Graph read_graph_file(const std::string& path) { return open_and(path, read_graph); }
StepGraphon read_graphon_file(const std::string& path) { return open_and(path, read_graphon); }
VertexPartition read_partition_file(const std::string& path) { return open_and(path, read_partition); }
Representation read_representation_file(const std::string& path) {
    return open_and(path, read_representation);
}

namespace {
template <typename T, typename F> void write_to(const std::string& path, const T& obj, F fn) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    fn(f, obj);
}
} // namespace

void write_graph_file(const std::string& path, const Graph& g) {
    write_to(path, g, [](std::ostream& os, const Graph& x) { write_graph(os, x); });
}
void write_graphon_file(const std::string& path, const StepGraphon& w) {
    write_to(path, w, [](std::ostream& os, const StepGraphon& x) { write_graphon(os, x); });
}
void write_partition_file(const std::string& path, const VertexPartition& p) {
    write_to(path, p, [](std::ostream& os, const VertexPartition& x) { write_partition(os, x); });
}
void write_representation_file(const std::string& path, const Representation& rep) {
    write_to(path, rep, [](std::ostream& os, const Representation& x) { write_representation(os, x); });
}

} // namespace graphlim
