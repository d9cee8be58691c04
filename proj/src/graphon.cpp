#include "graphlim/graphon.hpp"
#include "graphlim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace graphlim {

StepGraphon::StepGraphon(std::vector<Rat> measures, std::vector<std::vector<Rat>> values)
    : measures_(std::move(measures)), values_(std::move(values)) {
    if (measures_.empty()) throw std::invalid_argument("step graphon needs at least one block");
    Rat total(0);
    for (const auto& p : measures_) {
        if (p.sign() <= 0) throw std::invalid_argument("block measures must be positive");
        total += p;
    }
    if (!total.is_one()) throw std::invalid_argument("block measures must sum to exactly 1");
    if (values_.size() != measures_.size())
        throw std::invalid_argument("value matrix size mismatch");
    for (size_t i = 0; i < values_.size(); ++i) {
        if (values_[i].size() != measures_.size())
            throw std::invalid_argument("value matrix size mismatch");
        for (size_t j = 0; j < values_[i].size(); ++j) {
            const Rat& v = values_[i][j];
            if (v.sign() < 0 || v > Rat(1))
                throw std::invalid_argument("graphon values must lie in [0,1]");
            if (values_[i][j] != values_[j][i])
                throw std::invalid_argument("value matrix must be symmetric");
        }
    }
}

std::vector<Rat> StepGraphon::boundaries() const {
    std::vector<Rat> b;
    b.reserve(measures_.size() + 1);
    b.push_back(Rat(0));
    Rat acc(0);
    for (const auto& p : measures_) {
        acc += p;
        b.push_back(acc);
    }
    return b;
}

int StepGraphon::block_of(const Rat& x) const {
    if (x.sign() < 0 || x > Rat(1)) throw std::invalid_argument("point outside [0,1]");
    Rat acc(0);
    for (int i = 0; i < blocks(); ++i) {
        acc += measures_[static_cast<size_t>(i)];
        if (x < acc) return i;
    }
    return blocks() - 1; // x == 1 belongs to the last block
}

StepGraphon make_wka(int k, const Rat& a) {
    if (k < 1) throw std::invalid_argument("W^k_a needs k >= 1");
    if (a.sign() < 0 || a > Rat(1)) throw std::invalid_argument("W^k_a needs a in [0,1]");

    const Rat half(1, 2);
    if (a.is_zero() || a.is_one()) return make_wstar(k, k);

    // blocks: [0, a/k), [a/k, 1/k), then k-1 blocks of measure 1/k
    const int nb = k + 1;
    std::vector<Rat> meas;
    meas.push_back(a / Rat(k));
    meas.push_back((Rat(1) - a) / Rat(k));
    for (int i = 1; i < k; ++i) meas.push_back(Rat(1, k));

    std::vector<std::vector<Rat>> val(static_cast<size_t>(nb), std::vector<Rat>(static_cast<size_t>(nb), half));
    val[0][0] = Rat(1);
    val[1][1] = Rat(1);
    val[0][1] = val[1][0] = Rat(0);
    for (int i = 2; i < nb; ++i) val[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat(1);
    return StepGraphon(std::move(meas), std::move(val));
}

StepGraphon make_wstar(int k, int s) {
    if (k < 1) throw std::invalid_argument("W*_{k,s} needs k >= 1");
    if (s < 0 || s > k) throw std::invalid_argument("W*_{k,s} needs 0 <= s <= k");
    std::vector<Rat> meas(static_cast<size_t>(k), Rat(1, k));
    std::vector<std::vector<Rat>> val(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k), Rat(1, 2)));
    for (int i = 0; i < k; ++i)
        val[static_cast<size_t>(i)][static_cast<size_t>(i)] = (i < s) ? Rat(1) : Rat(0);
    return StepGraphon(std::move(meas), std::move(val));
}

StepGraphon make_constant(const Rat& c) {
    return StepGraphon({Rat(1)}, {{c}});
}

double entropy(const StepGraphon& w) {
    auto h = [](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    };
    double total = 0;
    for (int i = 0; i < w.blocks(); ++i)
        for (int j = 0; j < w.blocks(); ++j)
            total += w.measure(i).to_double() * w.measure(j).to_double() * h(w.value(i, j).to_double());
    return total;
}

Rat edge_density(const StepGraphon& w) {
    Rat total(0);
    for (int i = 0; i < w.blocks(); ++i)
        for (int j = 0; j < w.blocks(); ++j)
            total += w.measure(i) * w.measure(j) * w.value(i, j);
    return total;
}

Rat t_ind_exact(const Graph& g, const StepGraphon& w) {
    const int n = g.n();
    const int k = w.blocks();
    if (n == 0) return Rat(1);

    double budget = 1;
    for (int i = 0; i < n; ++i) {
        budget *= k;
        if (budget > 1.1e7)
            throw std::domain_error(
                "t_ind_exact envelope exceeded (k^n too large); use t_ind_mc instead");
    }

    std::vector<int> assign(static_cast<size_t>(n), 0);
    Rat total(0);
    // depth-first over block assignments with partial products and
    // zero-factor pruning
    std::function<void(int, const Rat&)> rec = [&](int v, const Rat& partial) {
        if (v == n) {
            total += partial;
            return;
        }
        for (int b = 0; b < k; ++b) {
            Rat f = partial * w.measure(b);
            for (int u = 0; u < v && !f.is_zero(); ++u) {
                const Rat& val = w.value(assign[static_cast<size_t>(u)], b);
                f *= g.has_edge(u, v) ? val : Rat(1) - val;
            }
            if (f.is_zero()) continue;
            assign[static_cast<size_t>(v)] = b;
            rec(v + 1, f);
        }
    };
    rec(0, Rat(1));
    return total;
}

McEstimate t_ind_mc(const Graph& g, const StepGraphon& w, long long trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("t_ind_mc needs trials >= 1");
    const int n = g.n();
    const int k = w.blocks();

    // block selection by exact comparison of the uniform 64-bit draw
    // against the rational cumulative boundaries
    auto boundaries = w.boundaries();
    std::vector<double> val(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            val[static_cast<size_t>(i) * k + j] = w.value(i, j).to_double();

    CounterRng rng(seed);
    double sum = 0, sumsq = 0;
    std::vector<int> blk(static_cast<size_t>(n));
    for (long long t = 0; t < trials; ++t) {
        uint64_t trial_seed = rng.derive(static_cast<uint64_t>(t));
        for (int v = 0; v < n; ++v)
            blk[static_cast<size_t>(v)] = sample_block(boundaries, CounterRng::at(trial_seed, 1, static_cast<uint64_t>(v)));
        double psi = 1;
        for (int u = 0; u < n && psi != 0; ++u) {
            for (int v = u + 1; v < n; ++v) {
                double x = val[static_cast<size_t>(blk[static_cast<size_t>(u)]) * k + blk[static_cast<size_t>(v)]];
                psi *= g.has_edge(u, v) ? x : 1.0 - x;
            }
        }
        sum += psi;
        sumsq += psi * psi;
    }
    McEstimate e;
    e.trials = trials;
    e.mean = sum / static_cast<double>(trials);
    if (trials > 1) {
        double var = (sumsq - sum * sum / static_cast<double>(trials)) / static_cast<double>(trials - 1);
        if (var < 0) var = 0;
        e.std_error = std::sqrt(var / static_cast<double>(trials));
    }
    return e;
}

bool is_in_rk(const StepGraphon& w, int k) {
    if (k < 1) throw std::invalid_argument("R_k needs k >= 1");
    auto bounds = w.boundaries();
    // every group boundary j/k must be an existing block boundary
    std::vector<int> group(static_cast<size_t>(w.blocks()), -1);
    for (int b = 0; b < w.blocks(); ++b) {
        const Rat& lo = bounds[static_cast<size_t>(b)];
        const Rat& hi = bounds[static_cast<size_t>(b) + 1];
        for (int g = 1; g <= k; ++g) {
            if (lo >= Rat(g - 1, k) && hi <= Rat(g, k)) {
                group[static_cast<size_t>(b)] = g - 1;
                break;
            }
        }
        if (group[static_cast<size_t>(b)] == -1) return false; // block straddles a group boundary
    }
    const Rat half(1, 2);
    for (int i = 0; i < w.blocks(); ++i) {
        for (int j = 0; j < w.blocks(); ++j) {
            const Rat& v = w.value(i, j);
            if (group[static_cast<size_t>(i)] == group[static_cast<size_t>(j)]) {
                if (!v.is_zero() && !v.is_one()) return false;
            } else {
                if (v != half) return false;
            }
        }
    }
    return true;
}

bool is_r_infinity(const StepGraphon& w) {
    const Rat half(1, 2);
    for (int i = 0; i < w.blocks(); ++i)
        for (int j = 0; j < w.blocks(); ++j)
            if (w.value(i, j) != half) return false;
    return true;
}

std::optional<std::vector<std::vector<int>>>
disjoint_clique_parts(const StepGraphon& w, const std::vector<int>& group_blocks) {
    for (int b : group_blocks)
        if (b < 0 || b >= w.blocks()) throw std::invalid_argument("block index out of range");
    for (int a : group_blocks)
        for (int b : group_blocks) {
            const Rat& v = w.value(a, b);
            if (!v.is_zero() && !v.is_one())
                throw std::invalid_argument("disjoint_clique_parts needs a 0/1-valued restriction");
        }

    auto one = [&](int a, int b) { return w.value(a, b).is_one(); };
    // reflexivity
    for (int a : group_blocks)
        if (!one(a, a)) return std::nullopt;
    // transitivity (symmetry holds by graphon symmetry)
    for (int a : group_blocks)
        for (int b : group_blocks)
            for (int c : group_blocks)
                if (one(a, b) && one(b, c) && !one(a, c)) return std::nullopt;

    std::vector<std::vector<int>> parts;
    std::vector<char> assigned(group_blocks.size(), 0);
    for (size_t i = 0; i < group_blocks.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<int> part{group_blocks[i]};
        assigned[i] = 1;
        for (size_t j = i + 1; j < group_blocks.size(); ++j) {
            if (!assigned[j] && one(group_blocks[i], group_blocks[j])) {
                part.push_back(group_blocks[j]);
                assigned[j] = 1;
            }
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

std::string canonical_key(const Graph& g) {
    const int n = g.n();
    if (n > 8) throw std::invalid_argument("canonical_key is exact only for n <= 8");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~0ull;
    do {
        uint64_t mask = 0;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (g.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]))
                    mask |= (1ull << bit);
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::ostringstream os;
    os << n << ":" << best;
    return os.str();
}

std::vector<IsoClass> isomorphism_classes(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("isomorphism_classes supports 0 <= n <= 6");
    const int pairs = n * (n - 1) / 2;
    std::map<std::string, IsoClass> classes;
    for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask & (1ull << bit)) g.add_edge(u, v);
        std::string key = canonical_key(g);
        auto it = classes.find(key);
        if (it == classes.end())
            classes.emplace(key, IsoClass{key, g, 1});
        else
            ++it->second.labeled_count;
    }
    std::vector<IsoClass> out;
    out.reserve(classes.size());
    for (auto& [k, v] : classes) out.push_back(std::move(v));
    return out;
}

DensityFingerprint density_fingerprint(const StepGraphon& w, int max_size) {
    if (max_size < 1 || max_size > 5)
        throw std::invalid_argument("density_fingerprint envelope is 1 <= m <= 5");
    DensityFingerprint fp;
    fp.max_size = max_size;
    for (int n = 1; n <= max_size; ++n) {
        for (const auto& cls : isomorphism_classes(n)) {
            DensityFingerprint::Entry e;
            e.key = cls.key;
            e.labeled_count = cls.labeled_count;
            e.value = t_ind_exact(cls.representative, w);
            fp.entries.push_back(std::move(e));
        }
    }
    return fp;
}

namespace {

// refine both graphons onto the union of their boundary points
struct Refinement {
    std::vector<Rat> measures;
    std::vector<std::vector<Rat>> v1, v2;
};

Refinement refine_pair(const StepGraphon& w1, const StepGraphon& w2) {
    auto b1 = w1.boundaries();
    auto b2 = w2.boundaries();
    std::vector<Rat> all;
    all.insert(all.end(), b1.begin(), b1.end());
    all.insert(all.end(), b2.begin(), b2.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    Refinement r;
    const size_t atoms = all.size() - 1;
    std::vector<int> in1(atoms), in2(atoms);
    for (size_t a = 0; a < atoms; ++a) {
        r.measures.push_back(all[a + 1] - all[a]);
        // the atom's midpoint identifies the containing block in each graphon
        Rat mid = (all[a] + all[a + 1]) / Rat(2);
        in1[a] = w1.block_of(mid);
        in2[a] = w2.block_of(mid);
    }
    r.v1.assign(atoms, std::vector<Rat>(atoms));
    r.v2.assign(atoms, std::vector<Rat>(atoms));
    for (size_t a = 0; a < atoms; ++a)
        for (size_t b = 0; b < atoms; ++b) {
            r.v1[a][b] = w1.value(in1[a], in1[b]);
            r.v2[a][b] = w2.value(in2[a], in2[b]);
        }
    return r;
}

// exact cut norm of the signed step function D over atoms with measures mu:
// max over S,T of |sum_{S x T} mu_i mu_j D_ij|, attained on atom unions
Rat step_cut_norm(const std::vector<Rat>& mu, const std::vector<std::vector<Rat>>& d) {
    const size_t r = mu.size();
    Rat best(0);
    for (uint64_t s = 0; s < (1ull << r); ++s) {
        std::vector<Rat> col(r, Rat(0));
        for (size_t i = 0; i < r; ++i) {
            if (!(s & (1ull << i))) continue;
            for (size_t j = 0; j < r; ++j) col[j] += mu[i] * mu[j] * d[i][j];
        }
        Rat pos(0), neg(0);
        for (size_t j = 0; j < r; ++j) {
            if (col[j].sign() > 0) pos += col[j];
            else neg -= col[j];
        }
        best = std::max(best, std::max(pos, neg));
    }
    return best;
}

} // namespace

std::pair<double, double>
cut_distance_bounds(const StepGraphon& w1, const StepGraphon& w2, int max_size) {
    if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");

    double lower = 0;
    const int m = std::min(max_size, 5);
    for (int n = 2; n <= m; ++n) {
        for (const auto& cls : isomorphism_classes(n)) {
            Rat d = t_ind_exact(cls.representative, w1) - t_ind_exact(cls.representative, w2);
            double cand = std::abs(d.to_double()) / (4.0 * n * n);
            lower = std::max(lower, cand);
        }
    }

    Refinement r = refine_pair(w1, w2);
    const size_t atoms = r.measures.size();

    double upper;
    if (atoms > 14) {
        // enumeration would be too large: fall back to the L1 bound, which
        // dominates the cut norm of the identity overlay
        Rat l1(0);
        for (size_t i = 0; i < atoms; ++i)
            for (size_t j = 0; j < atoms; ++j) {
                Rat d = r.v1[i][j] - r.v2[i][j];
                if (d.sign() < 0) d = -d;
                l1 += r.measures[i] * r.measures[j] * d;
            }
        upper = l1.to_double();
    } else {
        // group atoms of equal measure; only within-group permutations are
        // measure preserving
        std::vector<size_t> order(atoms);
        std::iota(order.begin(), order.end(), 0);

        // count the permutations first; cap the enumeration
        long long perm_count = 1;
        {
            std::vector<Rat> sorted_mu = r.measures;
            std::sort(sorted_mu.begin(), sorted_mu.end());
            long long run = 1;
            for (size_t i = 1; i <= sorted_mu.size(); ++i) {
                if (i < sorted_mu.size() && sorted_mu[i] == sorted_mu[i - 1]) {
                    ++run;
                } else {
                    for (long long f = 2; f <= run; ++f) {
                        perm_count *= f;
                        if (perm_count > 40320) break;
                    }
                    run = 1;
                }
                if (perm_count > 40320) break;
            }
        }

        Rat best(0);
        bool first = true;
        auto eval = [&](const std::vector<size_t>& sigma) {
            std::vector<std::vector<Rat>> d(atoms, std::vector<Rat>(atoms));
            for (size_t i = 0; i < atoms; ++i)
                for (size_t j = 0; j < atoms; ++j)
                    d[i][j] = r.v1[i][j] - r.v2[sigma[i]][sigma[j]];
            Rat norm = step_cut_norm(r.measures, d);
            if (first || norm < best) {
                best = norm;
                first = false;
            }
        };

        std::vector<size_t> identity(atoms);
        std::iota(identity.begin(), identity.end(), 0);
        eval(identity);

        if (perm_count <= 40320 && !best.is_zero()) {
            // enumerate all measure-preserving permutations
            std::vector<size_t> sigma(atoms, atoms);
            std::vector<char> used(atoms, 0);
            std::function<void(size_t)> rec = [&](size_t i) {
                if (best.is_zero()) return;
                if (i == atoms) {
                    eval(sigma);
                    return;
                }
                for (size_t t = 0; t < atoms; ++t) {
                    if (used[t] || r.measures[i] != r.measures[t]) continue;
                    used[t] = 1;
                    sigma[i] = t;
                    rec(i + 1);
                    used[t] = 0;
                }
            };
            rec(0);
        }
        upper = best.to_double();
    }

    if (upper < lower) upper = lower; // guard against float rounding at 0
    return {lower, upper};
}

} // namespace graphlim
