#ifndef GRAPHLIM_RECOGNIZERS_HPP
#define GRAPHLIM_RECOGNIZERS_HPP

#include "graphlim/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace graphlim {

enum class Verdict { member, non_member, unknown };

/// Verdict plus whatever certificate backs it.  String and outer-string
/// recognition is NP-hard, so member comes only from a verified clique
/// covering, non-member only from a verified forbidden induced subgraph
/// (or an exhausted exact search), and everything else stays unknown.
struct ClassEvidence {
    Verdict verdict = Verdict::unknown;
    std::string method;

    std::optional<VertexPartition> partition;                      // covering / two cliques
    std::optional<std::vector<std::pair<int, int>>> orientation;   // transitive orientation
    std::optional<std::vector<int>> forbidden_embedding;           // forbidden induced subgraph
    std::string forbidden_name;
};

/// Disjoint union of at most two cliques.  Non-member certificates are an
/// induced P_3 or an induced empty triple.
ClassEvidence is_two_clique(const Graph& g);

/// Transitive-orientation search with edge forcing; exact for <= 12
/// vertices, unknown beyond.
ClassEvidence is_comparability(const Graph& g);

/// Incomparability = comparability of the complement.
ClassEvidence is_incomparability(const Graph& g);

enum class CoverTarget { planar_quotient, outerplanar_quotient, max_parts };

/// Search for a clique covering whose quotient satisfies the target
/// (planar, outerplanar, or at most `max_parts` parts).  Exhaustive for
/// <= 12 vertices; seeded greedy restarts beyond (unknown on failure).
/// An optional hint partition is tried first.
ClassEvidence find_clique_cover_with(const Graph& g, CoverTarget target, int max_parts = 0,
                                     const std::optional<VertexPartition>& hint = std::nullopt);

/// String-graph evidence: member via planar clique covering, non-member
/// via induced G_5/B_5/H_5.
ClassEvidence classify_string(const Graph& g);

/// Outer-string evidence: member via outerplanar clique covering,
/// non-member via induced G_4/B_4/H_4.
ClassEvidence classify_outerstring(const Graph& g);

/// Independent certificate audits (used internally before verdicts are
/// returned, and by tests).
bool audit_clique_cover(const Graph& g, const VertexPartition& p, CoverTarget target, int max_parts);
bool audit_transitive_orientation(const Graph& g, const std::vector<std::pair<int, int>>& orient);

/// Brute force over all 2^m orientations; test oracle for small graphs.
bool comparability_brute_force(const Graph& g);

} // namespace graphlim

#endif
