#include "ogp/order.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ogp {

std::vector<std::vector<int>> MaxdGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (auto [a, b] : edges) adj[a].push_back(b);
    return adj;
}

int MaxdGraph::local(int x) const {
    auto it = std::find(vertices.begin(), vertices.end(), x);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

MaxdGraph maxd(const Poset& p, const Bits& u, int n) {
    MaxdGraph g;
    g.n = n;
    std::vector<int> local(p.size(), -1);
    for (int x : elements_of(u)) {
        if (p.dim(x) <= n) {
            local[x] = static_cast<int>(g.vertices.size());
            g.vertices.push_back(x);
            g.high.push_back(false);
        }
    }
    for (int x : maximal(p, u)) {
        if (p.dim(x) > n) {
            local[x] = static_cast<int>(g.vertices.size());
            g.vertices.push_back(x);
            g.high.push_back(true);
        }
    }
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        if (!g.high[i]) continue;
        int x = g.vertices[i];
        Bits cx = atom_of(p, x);
        Bits lower = boundary(p, cx, n - 1);
        Bits in = boundary(p, cx, n, Sign::Minus) - lower;
        Bits out = boundary(p, cx, n, Sign::Plus) - lower;
        for (int y : elements_of(in)) g.edges.emplace_back(local[y], static_cast<int>(i));
        for (int y : elements_of(out)) g.edges.emplace_back(static_cast<int>(i), local[y]);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

std::vector<int> bfs_path(const std::vector<std::vector<int>>& adj, int from, int to) {
    std::vector<int> prev(adj.size(), -2);
    std::deque<int> queue{from};
    prev[from] = -1;
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int b : adj[a]) {
            if (b == to && a != to) {
                std::vector<int> path{b};
                for (int c = a; c != -1; c = prev[c]) path.push_back(c);
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (prev[b] == -2) {
                prev[b] = a;
                queue.push_back(b);
            }
        }
    }
    return {};
}

}  // namespace

std::optional<std::vector<int>> maxd_path(const MaxdGraph& g, int from, int to) {
    int a = g.local(from), b = g.local(to);
    if (a < 0 || b < 0) return std::nullopt;
    auto path = bfs_path(g.adjacency(), a, b);
    if (path.empty()) return std::nullopt;
    for (int& v : path) v = g.vertices[v];
    return path;
}

std::optional<std::vector<int>> maxd_cycle(const MaxdGraph& g) {
    auto adj = g.adjacency();
    if (!has_cycle(adj)) return std::nullopt;
    std::optional<std::vector<int>> best;
    for (size_t v = 0; v < adj.size(); ++v) {
        auto path = bfs_path(adj, static_cast<int>(v), static_cast<int>(v));
        if (!path.empty() && (!best || path.size() < best->size())) {
            for (int& w : path) w = g.vertices[w];
            best = path;
        }
    }
    return best;
}

int frame_dimension(const Poset& p, const Bits& u) {
    if (u.none()) throw std::invalid_argument("frame dimension of the empty set");
    auto tops = maximal(p, u);
    std::vector<Bits> cls;
    for (int x : tops) cls.push_back(atom_of(p, x));
    int d = -1;
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i + 1; j < cls.size(); ++j) d = std::max(d, dim_of(p, cls[i] & cls[j]));
    return d;
}

std::vector<std::string> KOrder::ids(const Poset& p) const {
    std::vector<std::string> out;
    for (int x : sequence) out.push_back(p.id(x));
    return out;
}

namespace {

// reach[i][j]: path from high i to high j in the Maxd graph; nullopt on a cycle.
std::optional<std::vector<std::vector<bool>>> high_reach(const MaxdGraph& g, std::vector<int>& highs) {
    auto adj = g.adjacency();
    if (has_cycle(adj)) return std::nullopt;
    highs.clear();
    for (size_t i = 0; i < g.vertices.size(); ++i)
        if (g.high[i]) highs.push_back(static_cast<int>(i));
    std::vector<std::vector<bool>> reach(highs.size(), std::vector<bool>(highs.size(), false));
    for (size_t a = 0; a < highs.size(); ++a) {
        std::vector<bool> seen(adj.size(), false);
        std::vector<int> stack{highs[a]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) { seen[w] = true; stack.push_back(w); }
        }
        for (size_t b = 0; b < highs.size(); ++b) reach[a][b] = seen[highs[b]];
    }
    return reach;
}

}  // namespace

std::optional<KOrder> k_order(const Poset& p, const Bits& u, int k) {
    auto g = maxd(p, u, k);
    std::vector<int> highs;
    auto reach = high_reach(g, highs);
    if (!reach) return std::nullopt;
    KOrder out;
    out.k = k;
    std::vector<bool> done(highs.size(), false);
    for (size_t step = 0; step < highs.size(); ++step) {
        int best = -1;
        for (size_t b = 0; b < highs.size(); ++b) {
            if (done[b]) continue;
            bool ready = true;
            for (size_t a = 0; a < highs.size(); ++a)
                if (!done[a] && a != b && (*reach)[a][b]) { ready = false; break; }
            if (!ready) continue;
            if (best < 0 || p.id(g.vertices[highs[b]]) < p.id(g.vertices[highs[best]])) best = static_cast<int>(b);
        }
        done[best] = true;
        out.sequence.push_back(g.vertices[highs[best]]);
    }
    return out;
}

bool is_k_order(const Poset& p, const Bits& u, const KOrder& order) {
    auto g = maxd(p, u, order.k);
    std::vector<int> highs;
    auto reach = high_reach(g, highs);
    if (!reach || highs.size() != order.sequence.size()) return false;
    std::vector<int> pos(highs.size(), -1);
    for (size_t i = 0; i < order.sequence.size(); ++i) {
        int l = g.local(order.sequence[i]);
        auto it = std::find(highs.begin(), highs.end(), l);
        if (it == highs.end()) return false;
        size_t h = it - highs.begin();
        if (pos[h] >= 0) return false;
        pos[h] = static_cast<int>(i);
    }
    for (size_t a = 0; a < highs.size(); ++a)
        for (size_t b = 0; b < highs.size(); ++b)
            if (a != b && (*reach)[a][b] && pos[a] > pos[b]) return false;
    return true;
}

std::vector<Molecule> frame_decomposition(const Molecule& u, int k, const KOrder& order) {
    const Poset& p = u.poset();
    if (!is_k_order(p, u.members(), order)) throw MoleculeError("frame_decomposition: not a k-order");
    std::vector<Molecule> out;
    Bits rest = u.members();
    const auto& seq = order.sequence;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i + 1 == seq.size()) {
            out.push_back(as_molecule({u.subset.parent, rest}));
            break;
        }
        Bits head = atom_of(p, seq[i]) | boundary(p, rest, k, Sign::Minus);
        Bits tail = boundary(p, rest, k, Sign::Plus);
        for (size_t j = i + 1; j < seq.size(); ++j) tail |= atom_of(p, seq[j]);
        Bits meet = head & tail;
        if ((head | tail) != rest || meet != boundary(p, head, k, Sign::Plus) ||
            meet != boundary(p, tail, k, Sign::Minus))
            throw MoleculeError("frame_decomposition: split " + std::to_string(i + 1) + " fails");
        out.push_back(as_molecule({u.subset.parent, head}));
        rest = tail;
    }
    return out;
}

FrameAcyclicity frame_acyclic(const std::vector<ClosedSubset>& molecules) {
    FrameAcyclicity out;
    for (const auto& m : molecules) {
        ++out.checked;
        const Poset& p = *m.parent;
        int k = frame_dimension(p, m.members);
        if (k < 0) continue;
        auto g = maxd(p, m.members, k);
        if (auto cyc = maxd_cycle(g)) {
            out.acyclic = false;
            out.offending = m.ids();
            for (int x : *cyc) out.cycle.push_back(p.id(x));
            return out;
        }
    }
    return out;
}

FrameAcyclicity frame_acyclic(const PosetPtr& p, int budget) {
    auto en = enumerate_molecules(p, budget);
    std::vector<ClosedSubset> subs;
    for (const auto& m : en.molecules) subs.push_back(m.subset);
    auto out = frame_acyclic(subs);
    out.truncated = en.truncated;
    return out;
}

LoopFreeness totally_loop_free(const Poset& p, const Bits& u) {
    LoopFreeness out;
    auto g = oriented_hasse(p, u);
    auto elems = elements_of(u);
    auto adj = g.adjacency();
    std::vector<int> indeg(adj.size(), 0);
    for (const auto& a : adj)
        for (int b : a) ++indeg[b];
    // Kahn, least element index first
    std::vector<int> order;
    std::vector<int> ready;
    for (size_t v = 0; v < adj.size(); ++v)
        if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
    while (!ready.empty()) {
        auto it = std::min_element(ready.begin(), ready.end());
        int v = *it;
        ready.erase(it);
        order.push_back(v);
        for (int w : adj[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    out.acyclic = order.size() == adj.size();
    if (!out.acyclic) return out;
    out.reach.assign(p.size(), p.empty());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = elems[*it];
        out.reach[x].set(x);
        for (int w : adj[*it]) out.reach[x] |= out.reach[elems[w]];
    }
    for (int v : order) out.linear.push_back(elems[v]);
    out.total = true;
    for (size_t i = 0; i + 1 < out.linear.size() && out.total; ++i)
        if (!out.reach[out.linear[i]].test(out.linear[i + 1])) out.total = false;
    return out;
}

KOrder normal_1_order(const Poset& p, const Bits& u) {
    if (dim_of(p, u) != 2) throw std::invalid_argument("normal 1-order needs a 2-dimensional molecule");
    auto lf = totally_loop_free(p, u);
    if (!lf.acyclic) throw MoleculeError("normal 1-order: oriented Hasse graph has a cycle");
    KOrder out;
    out.k = 1;
    for (int x : lf.linear)
        if (p.dim(x) == 2) out.sequence.push_back(x);
    for (size_t i = 0; i + 1 < out.sequence.size(); ++i)
        if (!lf.precedes(out.sequence[i], out.sequence[i + 1]))
            throw MoleculeError("normal 1-order: 2-cells are not totally ordered");
    return out;
}

std::pair<Molecule, Molecule> slice_decomposition(const Molecule& u, const ClosedSubset& i) {
    const Poset& p = u.poset();
    if (u.dim() > 2) throw std::invalid_argument("slice decomposition needs dim <= 2");
    if ((i.members - u.members()).any() || i.dim() != 1)
        throw MoleculeError("slice decomposition: I must be a 1-molecule inside U");
    if (boundary(p, i.members, 0, Sign::Minus) != boundary(p, u.members(), 0, Sign::Minus) ||
        boundary(p, i.members, 0, Sign::Plus) != boundary(p, u.members(), 0, Sign::Plus))
        throw MoleculeError("slice decomposition: I does not span the 0-boundary of U");
    // 2-cells from which I is reachable through 1- and 2-dimensional elements lie below I
    auto elems = elements_of(u.members());
    std::vector<std::vector<int>> adj(p.size());
    for (int y : elems) {
        if (p.dim(y) == 0) continue;
        for (const auto& c : p.faces(y)) {
            if (p.dim(c.target) == 0) continue;
            if (c.sign == Sign::Plus) adj[y].push_back(c.target);
            else adj[c.target].push_back(y);
        }
    }
    Bits below = p.empty(), above = p.empty();
    for (int x : elems) {
        if (p.dim(x) != 2) continue;
        std::vector<bool> seen(p.size(), false);
        std::vector<int> stack{x};
        bool hit = false;
        while (!stack.empty() && !hit) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (i.members.test(w)) { hit = true; break; }
                if (!seen[w]) { seen[w] = true; stack.push_back(w); }
            }
        }
        (hit ? below : above).set(x);
    }
    Bits lo = closure(p, below) | i.members, hi = closure(p, above) | i.members;
    Bits meet = lo & hi;
    if ((lo | hi) != u.members() || meet != i.members || boundary(p, lo, 1, Sign::Plus) != i.members ||
        boundary(p, hi, 1, Sign::Minus) != i.members)
        throw MoleculeError("slice decomposition: no decomposition relative to I");
    return {as_molecule({u.subset.parent, lo}), as_molecule({u.subset.parent, hi})};
}

namespace {

// Shortest path in the Maxd graph between maximal elements of w that visits a vertex outside w.
std::vector<std::string> escaping_path(const Poset& p, const Bits& u, const Bits& w, int k) {
    auto g = maxd(p, u, k);
    auto adj = g.adjacency();
    for (auto& a : adj)
        std::sort(a.begin(), a.end(), [&](int x, int y) { return p.id(g.vertices[x]) < p.id(g.vertices[y]); });
    std::vector<int> starts;
    for (size_t v = 0; v < g.vertices.size(); ++v)
        if (g.high[v] && w.test(g.vertices[v])) starts.push_back(static_cast<int>(v));
    std::sort(starts.begin(), starts.end(),
              [&](int x, int y) { return p.id(g.vertices[x]) < p.id(g.vertices[y]); });
    std::vector<std::string> best;
    for (int s : starts) {
        // state = vertex * 2 + (left w yet)
        std::vector<int> prev(adj.size() * 2, -2);
        std::deque<int> queue{s * 2};
        prev[s * 2] = -1;
        int goal = -1;
        while (!queue.empty() && goal < 0) {
            int st = queue.front();
            queue.pop_front();
            int v = st / 2;
            bool out = st % 2;
            for (int nb : adj[v]) {
                bool inw = w.test(g.vertices[nb]);
                int ns = nb * 2 + (out || !inw);
                if (prev[ns] != -2) continue;
                prev[ns] = st;
                if (out && inw && g.high[nb]) { goal = ns; break; }
                queue.push_back(ns);
            }
        }
        if (goal < 0) continue;
        std::vector<std::string> path;
        for (int st = goal; st != -1; st = prev[st]) path.push_back(p.id(g.vertices[st / 2]));
        std::reverse(path.begin(), path.end());
        if (best.empty() || path.size() < best.size()) best = path;
    }
    return best;
}

ClosedSubset transport(const ClosedSubset& w, const PosetPtr& target, bool& complete) {
    Bits b = target->empty();
    complete = true;
    for (int x : elements_of(w.members)) {
        auto y = target->find(w.parent->id(x));
        if (y) b.set(*y);
        else complete = false;
    }
    return {target, b};
}

}  // namespace

SimSubstitution check_sim_substitution(const Molecule& u, const ClosedSubset& v, const ClosedSubset& w) {
    SimSubstitution out;
    const Poset& p = u.poset();
    int n = u.dim();
    auto fail_hyp = [&](const std::string& why) {
        out.hypothesis_error = why;
        return out;
    };
    for (const auto* s : {&v, &w}) {
        if (s->parent != u.subset.parent || (s->members - u.members()).any())
            return fail_hyp("V and W must be closed subsets of U");
        if (s->dim() != n) return fail_hyp("V and W must have the dimension of U");
        if (recognize(*s).status != Recognition::Molecule) return fail_hyp("V or W is not a molecule");
        if (!spherical(*s)) return fail_hyp("V or W does not have spherical boundary");
    }
    Bits dv = boundary(p, v.members, n - 1), dw = boundary(p, w.members, n - 1);
    if (((v.members & w.members) - (dv | dw)).any()) return fail_hyp("V and W overlap outside their boundaries");

    auto one_way = [&](const ClosedSubset& a, const ClosedSubset& b, const std::string& na,
                       const std::string& nb, std::vector<std::string>& path, std::string& detail) {
        Molecule ua;
        try {
            ua = substitute(u, a, compos_named(a, "⟨" + na + "⟩").subset, "");
        } catch (const MoleculeError& e) {
            detail = std::string("first substitution failed: ") + e.what();
            return false;
        }
        bool complete = false;
        ClosedSubset bb = transport(b, ua.subset.parent, complete);
        if (!complete) {
            detail = nb + " does not survive the substitution of " + na;
            return false;
        }
        try {
            substitute(ua, bb, compos_named(bb, "⟨" + nb + "⟩").subset, "");
        } catch (const MoleculeError& e) {
            path = escaping_path(ua.poset(), ua.members(), bb.members, n - 1);
            detail = nb + " is not a submolecule of U[⟨" + na + "⟩/" + na + "]: " + e.what();
            return false;
        }
        return true;
    };
    out.hypotheses_ok = true;
    std::vector<std::string> path1, path2;
    std::string d1, d2;
    bool first = one_way(v, w, "V", "W", path1, d1);
    bool second = one_way(w, v, "W", "V", path2, d2);
    out.holds = first && second;
    if (!first) {
        out.witness_path = path1;
        out.detail = d1;
    } else if (!second) {
        out.witness_path = path2;
        out.detail = d2;
    }
    return out;
}

}  // namespace ogp
