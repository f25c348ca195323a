#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ogp/molecule.hpp"

namespace ogp {

// Bipartite graph M_n(U): low vertices of dim <= n, high vertices the maximal
// elements of dim > n.
struct MaxdGraph {
    int n = 0;
    std::vector<int> vertices;  // poset indices
    std::vector<bool> high;
    std::vector<std::pair<int, int>> edges;  // local vertex indices
    std::vector<std::vector<int>> adjacency() const;
    int local(int x) const;
};

MaxdGraph maxd(const Poset& p, const Bits& u, int n);

// Shortest path in the graph between two poset elements (as poset indices).
std::optional<std::vector<int>> maxd_path(const MaxdGraph& g, int from, int to);
// A cycle of the graph as poset indices, if any.
std::optional<std::vector<int>> maxd_cycle(const MaxdGraph& g);

// -1 when u has a single maximal element or its maximal elements are pairwise disjoint.
int frame_dimension(const Poset& p, const Bits& u);

struct KOrder {
    int k = 0;
    std::vector<int> sequence;  // poset indices
    std::vector<std::string> ids(const Poset& p) const;
};

// Lexicographically least k-order (by id), or nothing if M_k(u) has a cycle.
std::optional<KOrder> k_order(const Poset& p, const Bits& u, int k);
bool is_k_order(const Poset& p, const Bits& u, const KOrder& order);

std::vector<Molecule> frame_decomposition(const Molecule& u, int k, const KOrder& order);

struct FrameAcyclicity {
    bool acyclic = true;
    int checked = 0;
    bool truncated = false;
    std::vector<std::string> offending;  // element ids of a failing molecule
    std::vector<std::string> cycle;
};

FrameAcyclicity frame_acyclic(const PosetPtr& p, int budget = 10000);
FrameAcyclicity frame_acyclic(const std::vector<ClosedSubset>& molecules);

struct LoopFreeness {
    bool acyclic = false;
    bool total = false;
    std::vector<int> linear;  // topological order of H_o(u); the order itself when total
    // reach[i] has bit j set iff element i precedes or equals element j (poset indices)
    std::vector<Bits> reach;
    bool precedes(int x, int y) const { return reach[x].test(y); }
};

LoopFreeness totally_loop_free(const Poset& p, const Bits& u);

KOrder normal_1_order(const Poset& p, const Bits& u);
inline KOrder normal_1_order(const Molecule& u) { return normal_1_order(u.poset(), u.members()); }

// U = U+ #1 U- with the output of U+ and the input of U- equal to i.
std::pair<Molecule, Molecule> slice_decomposition(const Molecule& u, const ClosedSubset& i);

struct SimSubstitution {
    bool hypotheses_ok = false;
    std::string hypothesis_error;
    bool holds = false;
    // when it fails: a path in the Maxd graph of U[<V>/V] joining two maximal elements of W
    // through elements outside W
    std::vector<std::string> witness_path;
    std::string detail;
};

SimSubstitution check_sim_substitution(const Molecule& u, const ClosedSubset& v, const ClosedSubset& w);

}  // namespace ogp
