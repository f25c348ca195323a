#pragma once
// Shared helpers for the tests: independent oracles and random molecule programs.

#include <functional>
#include <map>
#include <random>

#include "ogp/fixtures.hpp"
#include "ogp/order.hpp"
#include "ogp/products.hpp"

namespace testsupport {

using namespace ogp;

inline PosetPtr share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

// Boundary straight from the definition, without going through the library.
inline Bits naive_closure(const Poset& p, Bits u) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < p.size(); ++x)
            if (u.test(x))
                for (const auto& c : p.faces(x))
                    if (!u.test(c.target)) {
                        u.set(c.target);
                        grew = true;
                    }
    }
    return u;
}

inline Bits naive_boundary(const Poset& p, const Bits& u, int n, Sign a) {
    Bits seed(p.size());
    if (n < 0) return seed;
    for (int x = 0; x < p.size(); ++x) {
        if (!u.test(x)) continue;
        bool maximal = true;
        for (const auto& c : p.cofaces(x))
            if (u.test(c.target)) maximal = false;
        if (p.dim(x) == n) {
            // in the source set: no coface of dim n+1 in u with the opposite sign
            bool in = true;
            for (const auto& c : p.cofaces(x))
                if (u.test(c.target) && c.sign == -a) in = false;
            if (in) seed.set(x);
        }
        if (maximal && p.dim(x) < n) seed.set(x);
    }
    return naive_closure(p, seed);
}

inline int naive_dim(const Poset& p, const Bits& u) {
    int d = -1;
    for (int x = 0; x < p.size(); ++x)
        if (u.test(x)) d = std::max(d, p.dim(x));
    return d;
}

// All closed subsets (only for small posets).
inline std::vector<Bits> closed_subsets(const Poset& p) {
    std::vector<Bits> out;
    int n = p.size();
    // grow by adding elements in dimension order, keeping only closed sets
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p.dim(a) < p.dim(b); });
    std::function<void(size_t, Bits&)> rec = [&](size_t i, Bits& cur) {
        if (i == order.size()) {
            if (cur.any()) out.push_back(cur);
            return;
        }
        rec(i + 1, cur);
        int x = order[i];
        bool ok = true;
        for (const auto& c : p.faces(x))
            if (!cur.test(c.target)) ok = false;
        if (ok) {
            cur.set(x);
            rec(i + 1, cur);
            cur.reset(x);
        }
    };
    Bits cur(n);
    rec(0, cur);
    return out;
}

// Molecules by the inductive definition, by exhaustive search over splittings.
class BruteMolecules {
public:
    explicit BruteMolecules(const Poset& p) : p_(p), closed_(closed_subsets(p)) {}

    bool is_molecule(const Bits& u) {
        auto it = memo_.find(u);
        if (it != memo_.end()) return it->second;
        bool res = false;
        int top = 0, d = naive_dim(p_, u);
        for (int x = 0; x < p_.size(); ++x)
            if (u.test(x) && naive_closure(p_, single(x)) == u) ++top;
        if (top == 1) {
            res = true;
        } else {
            for (const auto& a : closed_) {
                if (res) break;
                if (!a.is_subset_of(u) || a == u) continue;
                for (const auto& b : closed_) {
                    if (!b.is_subset_of(u) || b == u || (a | b) != u) continue;
                    Bits both = a & b;
                    for (int k = 0; k < d && !res; ++k)
                        if (naive_boundary(p_, a, k, Sign::Plus) == both && naive_boundary(p_, b, k, Sign::Minus) == both &&
                            is_molecule(a) && is_molecule(b))
                            res = true;
                    if (res) break;
                }
            }
        }
        memo_[u] = res;
        return res;
    }
    const std::vector<Bits>& closed() const { return closed_; }

private:
    Bits single(int x) const {
        Bits b(p_.size());
        b.set(x);
        return b;
    }
    const Poset& p_;
    std::vector<Bits> closed_;
    std::map<Bits, bool> memo_;
};

// Checks a certificate tree against the definition; returns an empty string when valid.
inline std::string check_certificate(const Poset& p, const CertPtr& c, const Bits& u) {
    if (!c) return "missing certificate";
    if (c->members != u) return "certificate members differ";
    if (c->kind == Certificate::Kind::Atom) {
        if (c->atom < 0 || !u.test(c->atom)) return "atom outside the set";
        if (naive_closure(p, [&] { Bits b(p.size()); b.set(c->atom); return b; }()) != u) return "atom is not greatest";
        return "";
    }
    if (!c->left || !c->right) return "paste without children";
    const Bits &a = c->left->members, &b = c->right->members;
    if ((a | b) != u || a == u || b == u) return "paste does not split properly";
    Bits both = a & b;
    if (naive_boundary(p, a, c->k, Sign::Plus) != both || naive_boundary(p, b, c->k, Sign::Minus) != both)
        return "paste boundary mismatch at k=" + std::to_string(c->k);
    auto l = check_certificate(p, c->left, a);
    return l.empty() ? check_certificate(p, c->right, b) : l;
}

// Random molecule programs: atoms, pastings and new cells on top of boundaries.
class MoleculeGen {
public:
    explicit MoleculeGen(unsigned seed) : rng_(seed) {}

    Molecule random_2molecule(int max_cells = 4) {
        // start from a chain and paste whiskered 2-cells onto its output
        int len = pick(1, 3);
        Molecule m = interval_chain(len);
        int cells = pick(1, max_cells);
        for (int i = 0; i < cells; ++i) {
            int n = length_of_output(m);
            int a = pick(1, std::min(2, n));
            int start = pick(0, n - a);
            int b = pick(1, 2);
            Molecule w = arrow_atom(a, b);
            if (start > 0) w = paste(interval_chain(start), w, 0);
            if (start + a < n) w = paste(w, interval_chain(n - start - a), 0);
            m = m.dim() < 2 ? w : paste(m, w, 1);
            if (m.size() > 40) break;
        }
        if (pick(0, 3) == 0) {
            Molecule other = random_2molecule_small();
            if (m.size() + other.size() <= 40) m = paste(m, other, 0);
        }
        return m;
    }

    // dim <= 3, at most max_size elements
    Molecule random_molecule(int max_size = 40) {
        for (int attempt = 0;; ++attempt) {
            try {
                Molecule m = random_program();
                if (m.size() <= max_size) return m;
            } catch (const MoleculeError&) {
            }
        }
    }

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::mt19937& rng() { return rng_; }

private:
    Molecule random_2molecule_small() {
        int a = pick(1, 2), b = pick(1, 2);
        return arrow_atom(a, b);
    }

    static int length_of_output(const Molecule& m) {
        const Poset& p = m.poset();
        Bits out = boundary(p, m.members(), 1, Sign::Plus);
        int c = 0;
        for (int x : elements_of(out))
            if (p.dim(x) == 1) ++c;
        return c;
    }

    // a 3-cell from a 2-molecule to its composite (or back)
    Molecule three_atom(const Molecule& m) {
        Molecule c = compos(m);
        return pick(0, 1) ? cell_to(m, c) : cell_to(c, m);
    }

    Molecule top_on_output(const Molecule& m) {
        int k = m.dim() - 1;
        ClosedSubset out{m.subset.parent, boundary(m.poset(), m.members(), k, Sign::Plus)};
        Molecule b = as_molecule(out);
        Molecule c = compos(out);
        return paste(m, cell_to(b.subset, c.subset), k);
    }

    Molecule random_program() {
        switch (pick(0, 5)) {
        case 0: return random_2molecule();
        case 1: return three_atom(random_2molecule(2));
        case 2: {
            Molecule a = three_atom(random_2molecule(2));
            return top_on_output(a);
        }
        case 3: {
            Molecule a = three_atom(random_2molecule(2));
            return paste(a, pick(0, 1) ? globe_molecule(1) : arrow_atom(1, pick(1, 2)), 0);
        }
        case 4: {
            Molecule a = random_2molecule(3);
            return top_on_output(a);
        }
        default: {
            // whisker a 3-atom along a 1-boundary with a matching 2-atom
            Molecule a = three_atom(arrow_atom(pick(1, 2), 1));
            Molecule b = arrow_atom(1, pick(1, 2));
            return paste(a, b, 1);
        }
        }
    }

    std::mt19937 rng_;
};

}  // namespace testsupport
