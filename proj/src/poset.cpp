#include "ogp/poset.hpp"

#include <algorithm>
#include <queue>

namespace ogp {

Poset Poset::make(std::string name, const std::vector<ElementSpec>& elements) {
    Poset p;
    p.name_ = std::move(name);
    for (const auto& e : elements) {
        if (e.dim < 0)
            throw StructuralError("element '" + e.id + "': negative dimension");
        if (!p.index_.emplace(e.id, static_cast<int>(p.ids_.size())).second)
            throw StructuralError("duplicate element id '" + e.id + "'");
        p.ids_.push_back(e.id);
        p.dims_.push_back(e.dim);
    }
    p.down_.resize(p.ids_.size());
    p.up_.resize(p.ids_.size());
    for (int y = 0; y < p.size(); ++y) {
        const auto& e = elements[y];
        for (const auto& [tid, s] : e.covers) {
            auto it = p.index_.find(tid);
            if (it == p.index_.end())
                throw StructuralError("element '" + e.id + "': cover target '" + tid + "' does not exist");
            int x = it->second;
            if (p.dims_[x] != e.dim - 1)
                throw StructuralError("element '" + e.id + "': covers '" + tid + "' of dimension " +
                                      std::to_string(p.dims_[x]) + ", expected " + std::to_string(e.dim - 1));
            for (const auto& c : p.down_[y])
                if (c.target == x)
                    throw StructuralError("element '" + e.id + "': repeated cover of '" + tid + "'");
            p.down_[y].push_back({x, s});
            p.up_[x].push_back({y, s});
        }
        if (e.dim > 0 && e.covers.empty())
            throw StructuralError("element '" + e.id + "': dimension " + std::to_string(e.dim) +
                                  " but covers nothing");
    }
    // grading by dims already forbids cycles, the rank strictly drops along covers
    return p;
}

std::optional<int> Poset::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Poset::at(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::out_of_range("unknown element id '" + id + "'");
    return it->second;
}

int Poset::dim() const {
    int d = -1;
    for (int x : dims_) d = std::max(d, x);
    return d;
}

std::optional<Sign> Poset::orientation(int y, int x) const {
    for (const auto& c : down_[y])
        if (c.target == x) return c.sign;
    return std::nullopt;
}

Bits Poset::bits(const std::vector<int>& xs) const {
    Bits b = empty();
    for (int x : xs) b.set(x);
    return b;
}

std::vector<ElementSpec> Poset::specs() const {
    std::vector<ElementSpec> out;
    out.reserve(ids_.size());
    for (int x = 0; x < size(); ++x) {
        ElementSpec e{ids_[x], dims_[x], {}};
        for (const auto& c : down_[x]) e.covers.emplace_back(ids_[c.target], c.sign);
        out.push_back(std::move(e));
    }
    return out;
}

int ClosedSubset::dim() const { return dim_of(*parent, members); }

std::vector<std::string> ClosedSubset::ids() const {
    std::vector<std::string> out;
    for (int x : elements_of(members)) out.push_back(parent->id(x));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> elements_of(const Bits& b) {
    std::vector<int> out;
    out.reserve(b.count());
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
    return out;
}

int dim_of(const Poset& p, const Bits& u) {
    int d = -1;
    for (auto i = u.find_first(); i != Bits::npos; i = u.find_next(i)) d = std::max(d, p.dim(static_cast<int>(i)));
    return d;
}

Bits closure(const Poset& p, const Bits& u) {
    Bits out = u;
    std::vector<int> stack = elements_of(u);
    while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        for (const auto& c : p.faces(y)) {
            if (!out.test(c.target)) {
                out.set(c.target);
                stack.push_back(c.target);
            }
        }
    }
    return out;
}

ClosedSubset closure(PosetPtr p, const std::vector<std::string>& ids) {
    Bits b = p->empty();
    for (const auto& s : ids) b.set(p->at(s));
    Bits c = closure(*p, b);
    return {std::move(p), std::move(c)};
}

std::vector<int> maximal(const Poset& p, const Bits& u) {
    std::vector<int> out;
    for (int x : elements_of(u)) {
        bool top = true;
        for (const auto& c : p.cofaces(x))
            if (u.test(c.target)) { top = false; break; }
        if (top) out.push_back(x);
    }
    return out;
}

Bits source_set(const Poset& p, const Bits& u, int n, Sign a) {
    Bits out = p.empty();
    for (int x : elements_of(u)) {
        if (p.dim(x) != n) continue;
        bool ok = true;
        for (const auto& c : p.cofaces(x))
            if (u.test(c.target) && c.sign != a) { ok = false; break; }
        if (ok) out.set(x);
    }
    return out;
}

Bits boundary(const Poset& p, const Bits& u, int n, Sign a) {
    if (n < 0) return p.empty();
    Bits seed = source_set(p, u, n, a);
    for (int x : maximal(p, u))
        if (p.dim(x) <= n) seed.set(x);
    return closure(p, seed);
}

Bits boundary(const Poset& p, const Bits& u, int n) {
    return boundary(p, u, n, Sign::Minus) | boundary(p, u, n, Sign::Plus);
}

ClosedSubset boundary(const ClosedSubset& u, int n, std::optional<Sign> a) {
    Bits b = a ? boundary(*u.parent, u.members, n, *a) : boundary(*u.parent, u.members, n);
    return {u.parent, std::move(b)};
}

std::vector<std::vector<int>> Digraph::adjacency() const {
    std::vector<std::vector<int>> adj(labels.size());
    for (auto [a, b] : edges) adj[a].push_back(b);
    return adj;
}

Digraph oriented_hasse(const Poset& p, const Bits& u) {
    Digraph g;
    std::vector<int> local(p.size(), -1);
    for (int x : elements_of(u)) {
        local[x] = static_cast<int>(g.labels.size());
        g.labels.push_back(p.id(x));
    }
    for (int y : elements_of(u)) {
        for (const auto& c : p.faces(y)) {
            if (c.sign == Sign::Plus)
                g.edges.emplace_back(local[y], local[c.target]);
            else
                g.edges.emplace_back(local[c.target], local[y]);
        }
    }
    return g;
}

bool has_cycle(const std::vector<std::vector<int>>& adj) {
    std::vector<int> indeg(adj.size(), 0);
    for (const auto& out : adj)
        for (int v : out) ++indeg[v];
    std::vector<int> ready;
    for (size_t v = 0; v < adj.size(); ++v)
        if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
    size_t seen = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++seen;
        for (int w : adj[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return seen != adj.size();
}

Poset dual(const Poset& p, const std::set<int>& dims) {
    auto specs = p.specs();
    for (auto& e : specs) {
        if (!dims.empty() && !dims.count(e.dim)) continue;
        for (auto& c : e.covers) c.second = -c.second;
    }
    return Poset::make(p.name(), specs);
}

Poset restrict(const Poset& p, const Bits& u) {
    std::vector<ElementSpec> specs;
    for (int x : elements_of(u)) {
        ElementSpec e{p.id(x), p.dim(x), {}};
        for (const auto& c : p.faces(x))
            if (u.test(c.target)) e.covers.emplace_back(p.id(c.target), c.sign);
        specs.push_back(std::move(e));
    }
    return Poset::make(p.name(), specs);
}

}  // namespace ogp
