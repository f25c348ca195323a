#include "ogp/molecule.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ogp/order.hpp"

namespace ogp {

CertPtr Certificate::make_atom(const Bits& members, int top) {
    auto c = std::make_shared<Certificate>();
    c->kind = Kind::Atom;
    c->atom = top;
    c->members = members;
    return c;
}

CertPtr Certificate::make_paste(int k, CertPtr l, CertPtr r) {
    auto c = std::make_shared<Certificate>();
    c->kind = Kind::Paste;
    c->k = k;
    c->members = l->members | r->members;
    c->left = std::move(l);
    c->right = std::move(r);
    return c;
}

CertPtr remap(const CertPtr& c, const std::vector<int>& to, int new_size) {
    if (!c) return nullptr;
    auto out = std::make_shared<Certificate>();
    out->kind = c->kind;
    out->k = c->k;
    out->atom = c->atom >= 0 ? to[c->atom] : -1;
    out->members = Bits(new_size);
    for (int x : elements_of(c->members)) out->members.set(to[x]);
    out->left = remap(c->left, to, new_size);
    out->right = remap(c->right, to, new_size);
    return out;
}

const char* to_string(Recognition r) {
    switch (r) {
    case Recognition::Molecule: return "molecule";
    case Recognition::NotMolecule: return "not-molecule";
    case Recognition::Unknown: return "unknown";
    }
    return "?";
}

Molecule atom_molecule(Poset p) {
    auto ptr = std::make_shared<const Poset>(std::move(p));
    Bits all = ptr->all();
    auto tops = maximal(*ptr, all);
    if (tops.size() != 1) throw MoleculeError("poset '" + ptr->name() + "' is not an atom");
    auto cert = Certificate::make_atom(all, tops[0]);
    return {{ptr, all}, cert};
}

Poset globe(int n) {
    if (n < 0) throw std::invalid_argument("globe dimension must be non-negative");
    std::vector<ElementSpec> specs;
    auto name = [](int k, Sign a) { return std::to_string(k) + sign_char(a); };
    for (int k = 0; k < n; ++k) {
        for (Sign a : {Sign::Minus, Sign::Plus}) {
            ElementSpec e{name(k, a), k, {}};
            if (k > 0) {
                e.covers.emplace_back(name(k - 1, Sign::Minus), Sign::Minus);
                e.covers.emplace_back(name(k - 1, Sign::Plus), Sign::Plus);
            }
            specs.push_back(e);
        }
    }
    ElementSpec top{std::to_string(n), n, {}};
    if (n > 0) {
        top.covers.emplace_back(name(n - 1, Sign::Minus), Sign::Minus);
        top.covers.emplace_back(name(n - 1, Sign::Plus), Sign::Plus);
    }
    specs.push_back(top);
    return Poset::make("O" + std::to_string(n), specs);
}

Molecule globe_molecule(int n) { return atom_molecule(globe(n)); }

Molecule interval_chain(int n) {
    if (n < 1) throw std::invalid_argument("interval chain length must be positive");
    Molecule m = globe_molecule(1);
    for (int i = 1; i < n; ++i) m = paste(m, globe_molecule(1), 0);
    std::const_pointer_cast<Poset>(m.subset.parent)->set_name("I" + std::to_string(n));
    return m;
}

Molecule arrow_atom(int n, int m) {
    Molecule a = cell_to(interval_chain(n), interval_chain(m));
    std::const_pointer_cast<Poset>(a.subset.parent)
        ->set_name("U" + std::to_string(n) + "," + std::to_string(m));
    return a;
}

bool spherical(const Poset& p, const Bits& u) {
    int n = dim_of(p, u);
    for (int k = 0; k < n; ++k) {
        Bits both = boundary(p, u, k, Sign::Plus) & boundary(p, u, k, Sign::Minus);
        if (both != boundary(p, u, k - 1)) return false;
    }
    return true;
}

namespace {

// Refines (dim, signed degree) colours across both subsets until stable.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const Poset& p, const Bits& u, const Poset& q,
                                                             const Bits& v) {
    std::vector<int> cu(p.size(), -1), cv(q.size(), -1);
    std::map<std::vector<long>, int> dict;
    auto initial = [&](const Poset& r, const Bits& s, int x) {
        std::vector<long> sig{r.dim(x), 0, 0, 0, 0};
        for (const auto& c : r.faces(x))
            if (s.test(c.target)) ++sig[c.sign == Sign::Plus ? 1 : 2];
        for (const auto& c : r.cofaces(x))
            if (s.test(c.target)) ++sig[c.sign == Sign::Plus ? 3 : 4];
        return sig;
    };
    for (int x : elements_of(u)) cu[x] = dict.emplace(initial(p, u, x), dict.size()).first->second;
    for (int x : elements_of(v)) cv[x] = dict.emplace(initial(q, v, x), dict.size()).first->second;
    size_t classes = dict.size();
    for (int round = 0; round < p.size() + 1; ++round) {
        std::map<std::vector<long>, int> next;
        auto sig = [&](const Poset& r, const Bits& s, const std::vector<int>& col, int x) {
            std::vector<long> out{col[x]};
            std::vector<long> nb;
            for (const auto& c : r.faces(x))
                if (s.test(c.target)) nb.push_back((c.sign == Sign::Plus ? 0L : 1L) * 1000000L + col[c.target]);
            for (const auto& c : r.cofaces(x))
                if (s.test(c.target)) nb.push_back((c.sign == Sign::Plus ? 2L : 3L) * 1000000L + col[c.target]);
            std::sort(nb.begin(), nb.end());
            out.insert(out.end(), nb.begin(), nb.end());
            return out;
        };
        std::vector<int> nu(p.size(), -1), nv(q.size(), -1);
        for (int x : elements_of(u)) nu[x] = next.emplace(sig(p, u, cu, x), next.size()).first->second;
        for (int x : elements_of(v)) nv[x] = next.emplace(sig(q, v, cv, x), next.size()).first->second;
        cu.swap(nu);
        cv.swap(nv);
        if (next.size() == classes) break;
        classes = next.size();
    }
    return {cu, cv};
}

}  // namespace

std::vector<std::vector<int>> find_isomorphisms(const Poset& p, const Bits& u, const Poset& q, const Bits& v,
                                                int limit) {
    std::vector<std::vector<int>> found;
    if (u.count() != v.count()) return found;
    auto [cu, cv] = refine_colours(p, u, q, v);
    std::map<int, int> hist;
    for (int x : elements_of(u)) ++hist[cu[x]];
    for (int x : elements_of(v)) --hist[cv[x]];
    for (auto [c, n] : hist)
        if (n != 0) return found;

    // breadth-first order over the Hasse diagram, each element anchored to an earlier neighbour
    std::vector<int> order, anchor;
    std::vector<bool> placed(p.size(), false);
    auto elems = elements_of(u);
    while (order.size() < elems.size()) {
        int start = -1;
        for (int x : elems)
            if (!placed[x]) { start = x; break; }
        // prefer a rare colour to start a component
        std::map<int, int> count;
        for (int x : elems)
            if (!placed[x]) ++count[cu[x]];
        for (int x : elems)
            if (!placed[x] && count[cu[x]] < count[cu[start]]) start = x;
        placed[start] = true;
        size_t head = order.size();
        order.push_back(start);
        anchor.push_back(-1);
        while (head < order.size()) {
            int x = order[head++];
            auto visit = [&](int y) {
                if (u.test(y) && !placed[y]) {
                    placed[y] = true;
                    order.push_back(y);
                    anchor.push_back(x);
                }
            };
            for (const auto& c : p.faces(x)) visit(c.target);
            for (const auto& c : p.cofaces(x)) visit(c.target);
        }
    }

    std::vector<int> f(p.size(), -1);
    std::vector<bool> used(q.size(), false);
    auto consistent = [&](int a, int b) {
        if (cu[a] != cv[b]) return false;
        for (const auto& c : p.faces(a)) {
            if (!u.test(c.target) || f[c.target] < 0) continue;
            auto s = q.orientation(b, f[c.target]);
            if (!s || *s != c.sign) return false;
        }
        for (const auto& c : p.cofaces(a)) {
            if (!u.test(c.target) || f[c.target] < 0) continue;
            auto s = q.orientation(f[c.target], b);
            if (!s || *s != c.sign) return false;
        }
        return true;
    };
    std::function<void(size_t)> search = [&](size_t i) {
        if (static_cast<int>(found.size()) >= limit) return;
        if (i == order.size()) {
            found.push_back(f);
            return;
        }
        int a = order[i];
        std::vector<int> cands;
        if (anchor[i] >= 0) {
            int fb = f[anchor[i]];
            for (const auto& c : q.faces(fb)) cands.push_back(c.target);
            for (const auto& c : q.cofaces(fb)) cands.push_back(c.target);
        } else {
            cands = elements_of(v);
        }
        for (int b : cands) {
            if (!v.test(b) || used[b] || !consistent(a, b)) continue;
            f[a] = b;
            used[b] = true;
            search(i + 1);
            used[b] = false;
            f[a] = -1;
            if (static_cast<int>(found.size()) >= limit) return;
        }
    };
    search(0);
    return found;
}

std::optional<Isomorphism> unique_iso(const ClosedSubset& u, const ClosedSubset& v) {
    auto isos = find_isomorphisms(*u.parent, u.members, *v.parent, v.members, 2);
    if (isos.empty()) return std::nullopt;
    if (isos.size() > 1) throw std::logic_error("isomorphism is not unique");
    Isomorphism iso;
    iso.forward = isos[0];
    for (int x : elements_of(u.members)) iso.by_id[u.parent->id(x)] = v.parent->id(iso.forward[x]);
    return iso;
}

namespace {

std::string stratum_mismatch(const Poset& p, const Bits& u, const Poset& q, const Bits& v) {
    int d = std::max(dim_of(p, u), dim_of(q, v));
    for (int k = 0; k <= d; ++k) {
        int a = 0, b = 0;
        for (int x : elements_of(u)) a += p.dim(x) == k;
        for (int x : elements_of(v)) b += q.dim(x) == k;
        if (a != b)
            return "dimension " + std::to_string(k) + " has " + std::to_string(a) + " vs " + std::to_string(b) +
                   " elements";
    }
    return "dimension-" + std::to_string(d < 0 ? 0 : d) + " stratum has no matching orientation";
}

std::vector<int> one_iso(const Poset& p, const Bits& u, const Poset& q, const Bits& v, const std::string& what) {
    auto isos = find_isomorphisms(p, u, q, v, 1);
    if (isos.empty()) throw MoleculeError(what + ": boundaries do not match (" + stratum_mismatch(p, u, q, v) + ")");
    return isos[0];
}

CertPtr cert_of(const Molecule& m) {
    if (m.cert) return m.cert;
    auto r = recognize(m.subset);
    if (r.status != Recognition::Molecule) throw MoleculeError("input is not a recognized molecule");
    return r.molecule->cert;
}

}  // namespace

Molecule paste(const Molecule& u1, const Molecule& u2, int k) {
    const Poset& p = u1.poset();
    const Poset& q = u2.poset();
    int d1 = u1.dim(), d2 = u2.dim();
    if (k < 0 || k >= std::min(d1, d2))
        throw MoleculeError("paste along k=" + std::to_string(k) + " is degenerate for dimensions " +
                            std::to_string(d1) + " and " + std::to_string(d2));
    Bits out1 = boundary(p, u1.members(), k, Sign::Plus);
    Bits in2 = boundary(q, u2.members(), k, Sign::Minus);
    auto iso = one_iso(q, in2, p, out1, "paste");

    std::vector<std::string> id1(p.size()), id2(q.size());
    for (int x : elements_of(u1.members())) id1[x] = "left/" + p.id(x);
    for (int y : elements_of(u2.members())) id2[y] = in2.test(y) ? id1[iso[y]] : "right/" + q.id(y);

    std::vector<ElementSpec> specs;
    for (int x : elements_of(u1.members())) {
        ElementSpec e{id1[x], p.dim(x), {}};
        for (const auto& c : p.faces(x)) e.covers.emplace_back(id1[c.target], c.sign);
        specs.push_back(std::move(e));
    }
    for (int y : elements_of(u2.members())) {
        if (in2.test(y)) continue;
        ElementSpec e{id2[y], q.dim(y), {}};
        for (const auto& c : q.faces(y)) e.covers.emplace_back(id2[c.target], c.sign);
        specs.push_back(std::move(e));
    }
    auto out = std::make_shared<Poset>(
        Poset::make("(" + p.name() + " #" + std::to_string(k) + " " + q.name() + ")", specs));
    std::vector<int> map1(p.size(), -1), map2(q.size(), -1);
    for (int x : elements_of(u1.members())) map1[x] = out->at(id1[x]);
    for (int y : elements_of(u2.members())) map2[y] = out->at(id2[y]);
    auto cert = Certificate::make_paste(k, remap(cert_of(u1), map1, out->size()),
                                        remap(cert_of(u2), map2, out->size()));
    Bits all = out->all();
    return {{out, all}, cert};
}

namespace {

Molecule cell_to_impl(const ClosedSubset& u, const ClosedSubset& v, const std::string& top_id) {
    const Poset& p = *u.parent;
    const Poset& q = *v.parent;
    int n = u.dim();
    if (n < 0 || n != v.dim())
        throw MoleculeError("cell_to needs molecules of equal dimension, got " + std::to_string(n) + " and " +
                            std::to_string(v.dim()));
    if (!spherical(u)) throw MoleculeError("cell_to: input molecule does not have spherical boundary");
    if (!spherical(v)) throw MoleculeError("cell_to: output molecule does not have spherical boundary");

    std::vector<int> glue(q.size(), -1);
    if (n > 0) {
        Bits vm = boundary(q, v.members, n - 1, Sign::Minus), vp = boundary(q, v.members, n - 1, Sign::Plus);
        Bits um = boundary(p, u.members, n - 1, Sign::Minus), up = boundary(p, u.members, n - 1, Sign::Plus);
        auto fm = one_iso(q, vm, p, um, "cell_to (input boundary)");
        auto fp = one_iso(q, vp, p, up, "cell_to (output boundary)");
        for (int y : elements_of(vm | vp)) {
            if (vm.test(y) && vp.test(y) && fm[y] != fp[y])
                throw MoleculeError("cell_to: boundary isomorphisms disagree");
            glue[y] = vm.test(y) ? fm[y] : fp[y];
        }
    }
    std::vector<std::string> idu(p.size()), idv(q.size());
    for (int x : elements_of(u.members)) idu[x] = "left/" + p.id(x);
    for (int y : elements_of(v.members)) idv[y] = glue[y] >= 0 ? idu[glue[y]] : "right/" + q.id(y);

    std::vector<ElementSpec> specs;
    ElementSpec top{top_id, n + 1, {}};
    for (int x : elements_of(u.members)) {
        ElementSpec e{idu[x], p.dim(x), {}};
        for (const auto& c : p.faces(x)) e.covers.emplace_back(idu[c.target], c.sign);
        specs.push_back(std::move(e));
        if (p.dim(x) == n) top.covers.emplace_back(idu[x], Sign::Minus);
    }
    for (int y : elements_of(v.members)) {
        if (glue[y] >= 0) continue;
        ElementSpec e{idv[y], q.dim(y), {}};
        for (const auto& c : q.faces(y)) e.covers.emplace_back(idv[c.target], c.sign);
        specs.push_back(std::move(e));
        if (q.dim(y) == n) top.covers.emplace_back(idv[y], Sign::Plus);
    }
    specs.push_back(top);
    Poset out = Poset::make("(" + p.name() + " => " + q.name() + ")", specs);
    return atom_molecule(std::move(out));
}

}  // namespace

Molecule cell_to(const ClosedSubset& u, const ClosedSubset& v) { return cell_to_impl(u, v, "top"); }

Molecule compos(const ClosedSubset& u) { return compos_named(u, "top"); }

Molecule compos_named(const ClosedSubset& u, const std::string& top_id) {
    if (!spherical(u)) throw MoleculeError("compos: molecule does not have spherical boundary");
    int n = u.dim();
    if (n <= 0) throw MoleculeError("compos: needs a molecule of positive dimension");
    return cell_to_impl(boundary(u, n - 1, Sign::Minus), boundary(u, n - 1, Sign::Plus), top_id);
}

Molecule substitute(const Molecule& u, const ClosedSubset& v, const ClosedSubset& w, const std::string& prefix) {
    const Poset& p = u.poset();
    const Poset& q = *w.parent;
    if (v.parent != u.subset.parent) throw MoleculeError("substitute: V must live in the same poset as U");
    if ((v.members - u.members()).any()) throw MoleculeError("substitute: V is not contained in U");
    int n = u.dim();
    if (v.dim() != n || w.dim() != n)
        throw MoleculeError("substitute: V and W must have the dimension of U (" + std::to_string(n) + ")");
    if (!spherical(v)) throw MoleculeError("substitute: V does not have spherical boundary");
    if (!spherical(w)) throw MoleculeError("substitute: W does not have spherical boundary");

    Bits vm = boundary(p, v.members, n - 1, Sign::Minus), vp = boundary(p, v.members, n - 1, Sign::Plus);
    Bits wm = boundary(q, w.members, n - 1, Sign::Minus), wp = boundary(q, w.members, n - 1, Sign::Plus);
    auto fm = one_iso(q, wm, p, vm, "substitute (input boundary)");
    auto fp = one_iso(q, wp, p, vp, "substitute (output boundary)");
    std::vector<int> glue(q.size(), -1);
    for (int y : elements_of(wm | wp)) {
        if (wm.test(y) && wp.test(y) && fm[y] != fp[y])
            throw MoleculeError("substitute: boundary isomorphisms disagree");
        glue[y] = wm.test(y) ? fm[y] : fp[y];
    }

    Bits interior = v.members - (vm | vp);
    Bits kept = u.members() - interior;
    if (closure(p, kept) != kept) throw MoleculeError("substitute: U \\ (V \\ dV) is not closed; V is not a submolecule");

    std::vector<std::string> idw(q.size());
    std::set<std::string> taken;
    for (int x : elements_of(kept)) taken.insert(p.id(x));
    for (int y : elements_of(w.members)) {
        if (glue[y] >= 0) {
            idw[y] = p.id(glue[y]);
        } else {
            idw[y] = prefix + q.id(y);
            if (taken.count(idw[y])) throw MoleculeError("substitute: new id '" + idw[y] + "' collides with U");
        }
    }
    std::vector<ElementSpec> specs;
    for (int x : elements_of(kept)) {
        ElementSpec e{p.id(x), p.dim(x), {}};
        for (const auto& c : p.faces(x)) e.covers.emplace_back(p.id(c.target), c.sign);
        specs.push_back(std::move(e));
    }
    for (int y : elements_of(w.members)) {
        if (glue[y] >= 0) continue;
        ElementSpec e{idw[y], q.dim(y), {}};
        for (const auto& c : q.faces(y)) e.covers.emplace_back(idw[c.target], c.sign);
        specs.push_back(std::move(e));
    }
    auto out = std::make_shared<const Poset>(Poset::make(p.name() + "[sub]", specs));
    ClosedSubset whole{out, out->all()};
    auto r = recognize(whole);
    if (r.status == Recognition::NotMolecule)
        throw MoleculeError("substitute: result is not a molecule; V was not a submolecule of U");
    for (Sign a : {Sign::Minus, Sign::Plus}) {
        if (n == 0) break;
        auto bu = boundary(p, u.members(), n - 1, a);
        auto br = boundary(*out, whole.members, n - 1, a);
        if (find_isomorphisms(p, bu, *out, br, 1).empty())
            throw MoleculeError("substitute: boundary of the result differs from the boundary of U");
    }
    if (r.status == Recognition::Molecule) return *r.molecule;
    return {whole, nullptr};
}

namespace {

struct Recognizer {
    const Poset& p;
    std::map<Bits, std::pair<Recognition, CertPtr>> memo;

    std::pair<Recognition, CertPtr> run(const Bits& u) {
        auto it = memo.find(u);
        if (it != memo.end()) return it->second;
        auto r = solve(u);
        memo.emplace(u, r);
        return r;
    }

    std::pair<Recognition, CertPtr> solve(const Bits& u) {
        if (u.none()) return {Recognition::NotMolecule, nullptr};
        auto tops = maximal(p, u);
        if (tops.size() == 1) return {Recognition::Molecule, Certificate::make_atom(u, tops[0])};
        int d = dim_of(p, u);
        int fr = frame_dimension(p, u);
        if (fr < 0) return {Recognition::NotMolecule, nullptr};
        bool unknown = d >= 4;
        for (int k = fr; k < d; ++k) {
            auto ord = k_order(p, u, k);
            if (!ord) continue;
            const auto& seq = ord->sequence;
            Bits in = boundary(p, u, k, Sign::Minus), out = boundary(p, u, k, Sign::Plus);
            for (size_t i = 1; i < seq.size(); ++i) {
                Bits a = p.empty(), b = p.empty();
                for (size_t j = 0; j < seq.size(); ++j) (j < i ? a : b).set(seq[j]);
                Bits u1 = closure(p, a) | in, u2 = closure(p, b) | out;
                if ((u1 | u2) != u || u1 == u || u2 == u) continue;
                Bits meet = u1 & u2;
                if (meet != boundary(p, u1, k, Sign::Plus) || meet != boundary(p, u2, k, Sign::Minus)) continue;
                auto r1 = run(u1);
                if (r1.first != Recognition::Molecule) {
                    unknown |= r1.first == Recognition::Unknown;
                    continue;
                }
                auto r2 = run(u2);
                if (r2.first != Recognition::Molecule) {
                    unknown |= r2.first == Recognition::Unknown;
                    continue;
                }
                return {Recognition::Molecule, Certificate::make_paste(k, r1.second, r2.second)};
            }
        }
        return {unknown ? Recognition::Unknown : Recognition::NotMolecule, nullptr};
    }
};

}  // namespace

RecognizeResult recognize(const ClosedSubset& u) {
    Recognizer rec{*u.parent, {}};
    if (closure(*u.parent, u.members) != u.members) return {Recognition::NotMolecule, std::nullopt};
    auto [status, cert] = rec.run(u.members);
    RecognizeResult out;
    out.status = status;
    if (status == Recognition::Molecule) out.molecule = Molecule{u, cert};
    return out;
}

Molecule as_molecule(const ClosedSubset& u) {
    auto r = recognize(u);
    if (r.status != Recognition::Molecule)
        throw MoleculeError(std::string("closed subset is not a recognized molecule (") + to_string(r.status) + ")");
    return *r.molecule;
}

Enumeration enumerate_molecules(const PosetPtr& p, int max_count) {
    Enumeration out;
    std::map<Bits, size_t> seen;
    std::vector<CertPtr> certs;
    std::vector<int> dims;
    std::vector<std::vector<std::pair<Bits, Bits>>> bounds;  // per k: (in, out)
    auto add = [&](const Bits& b, CertPtr c) {
        if (seen.count(b)) return;
        if (static_cast<int>(certs.size()) >= max_count) {
            out.truncated = true;
            return;
        }
        seen.emplace(b, certs.size());
        certs.push_back(std::move(c));
        int d = dim_of(*p, b);
        dims.push_back(d);
        std::vector<std::pair<Bits, Bits>> bs;
        for (int k = 0; k < d; ++k)
            bs.emplace_back(boundary(*p, b, k, Sign::Minus), boundary(*p, b, k, Sign::Plus));
        bounds.push_back(std::move(bs));
    };
    for (int x = 0; x < p->size(); ++x) add(atom_of(*p, x), Certificate::make_atom(atom_of(*p, x), x));
    for (size_t i = 0; i < certs.size() && !out.truncated; ++i) {
        for (size_t j = 0; j <= i && !out.truncated; ++j) {
            for (int dir = 0; dir < 2; ++dir) {
                size_t a = dir ? j : i, b = dir ? i : j;
                int kmax = std::min(dims[a], dims[b]);
                for (int k = 0; k < kmax; ++k) {
                    const Bits& A = certs[a]->members;
                    const Bits& B = certs[b]->members;
                    Bits meet = A & B;
                    if (meet != bounds[a][k].second || meet != bounds[b][k].first) continue;
                    Bits un = A | B;
                    if (un == A || un == B) continue;
                    add(un, Certificate::make_paste(k, certs[a], certs[b]));
                }
            }
        }
    }
    std::vector<size_t> idx(certs.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (size_t i : idx) out.molecules.push_back({{p, certs[i]->members}, certs[i]});
    return out;
}

}  // namespace ogp
