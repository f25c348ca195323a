#include "ogp/graycat.hpp"

#include <algorithm>
#include <stdexcept>

namespace ogp {

bool Step::operator==(const Step& o) const {
    if (kind != o.kind || !(source == o.source) || !(target == o.target)) return false;
    if (kind == Kind::Interchange)
        return position == o.position && inverse == o.inverse && lesser == o.lesser && greater == o.greater;
    return atom == o.atom && context == o.context;
}

std::string Step::str() const {
    if (kind == Kind::Apply) return "c[" + atom + "]";
    return std::string(inverse ? "χ⁻¹[" : "χ[") + lesser + "," + greater + "]";
}

std::string GrayExpr3::str() const {
    if (steps.empty()) return "id";
    std::string out;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) out += " ; ";
        out += steps[i].str();
    }
    return out;
}

TwoCellNF make_nf(const Poset& p, const Bits& support, const std::vector<int>& order) {
    TwoCellNF nf;
    for (int x : elements_of(support)) nf.support.push_back(p.id(x));
    std::sort(nf.support.begin(), nf.support.end());
    for (int x : order) nf.order.push_back(p.id(x));
    return nf;
}

TwoCellNF nf_source(const GrayExpr3& e) { return e.steps.empty() ? e.source : e.steps.front().source; }
TwoCellNF nf_target(const GrayExpr3& e) { return e.steps.empty() ? e.target : e.steps.back().target; }

GrayExpr3 cancel_inverses(const GrayExpr3& e) {
    GrayExpr3 out;
    out.source = e.source;
    out.target = e.target;
    for (const auto& s : e.steps) {
        if (!out.steps.empty()) {
            const Step& t = out.steps.back();
            if (t.kind == Step::Kind::Interchange && s.kind == Step::Kind::Interchange && t.position == s.position &&
                t.lesser == s.lesser && t.greater == s.greater && t.inverse != s.inverse && t.source == s.target) {
                out.steps.pop_back();
                continue;
            }
        }
        out.steps.push_back(s);
    }
    return out;
}

GrayExpr3 compose(const GrayExpr3& a, const GrayExpr3& b) {
    if (!(a.target == b.source))
        throw std::invalid_argument("compose: target of the first expression is not the source of the second");
    GrayExpr3 out = a;
    out.target = b.target;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

namespace {

Step inverted(const Step& s) {
    Step r = s;
    std::swap(r.source, r.target);
    r.inverse = !s.inverse;
    return r;
}

}  // namespace

GrayExpr3 invert_interchanges(const GrayExpr3& e) {
    GrayExpr3 out;
    out.source = e.target;
    out.target = e.source;
    for (auto it = e.steps.rbegin(); it != e.steps.rend(); ++it) {
        if (it->kind != Step::Kind::Interchange) throw std::invalid_argument("only interchangers can be inverted");
        out.steps.push_back(inverted(*it));
    }
    return out;
}

GrayContext::GrayContext(PosetPtr ambient) : ambient_(std::move(ambient)) {
    if (!ambient_) throw std::invalid_argument("GrayContext needs a complex");
}

Bits GrayContext::support_bits(const TwoCellNF& nf) const {
    Bits b = ambient_->empty();
    for (const auto& id : nf.support) {
        auto x = ambient_->find(id);
        if (!x) throw std::invalid_argument("unknown element '" + id + "'");
        b.set(*x);
    }
    return b;
}

const LoopFreeness& GrayContext::total_order(const Bits& support) {
    auto it = orders_.find(support);
    if (it != orders_.end()) return it->second;
    auto lf = totally_loop_free(*ambient_, support);
    if (!lf.acyclic) throw MoleculeError("support has a cycle in its oriented Hasse graph");
    return orders_.emplace(support, std::move(lf)).first->second;
}

TwoCellNF GrayContext::normal(const Bits& support) {
    std::vector<int> seq;
    if (dim_of(*ambient_, support) == 2) seq = normal_1_order(*ambient_, support).sequence;
    return make_nf(*ambient_, support, seq);
}

bool GrayContext::is_one_order(const Bits& support, const std::vector<std::string>& order) {
    KOrder k;
    k.k = 1;
    for (const auto& id : order) {
        auto x = ambient_->find(id);
        if (!x) return false;
        k.sequence.push_back(*x);
    }
    if (dim_of(*ambient_, support) < 2) return order.empty();
    return is_k_order(*ambient_, support, k);
}

int GrayContext::inversion_weight(const TwoCellNF& nf) {
    const auto& lf = total_order(support_bits(nf));
    std::vector<int> xs;
    for (const auto& id : nf.order) xs.push_back(*ambient_->find(id));
    int w = 0;
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (lf.precedes(xs[j], xs[i])) ++w;
    return w;
}

std::vector<Step> GrayContext::path_to_normal(const Bits& support, const std::vector<std::string>& from) {
    const auto& lf = total_order(support);
    std::vector<int> pos(ambient_->size(), -1);
    for (size_t i = 0; i < lf.linear.size(); ++i) pos[lf.linear[i]] = static_cast<int>(i);
    std::vector<int> cur;
    for (const auto& id : from) cur.push_back(*ambient_->find(id));
    std::vector<Step> out;
    while (true) {
        int best = -1;
        for (size_t i = 0; i + 1 < cur.size(); ++i)
            if (pos[cur[i + 1]] < pos[cur[i]] && (best < 0 || pos[cur[i]] > pos[cur[best]])) best = static_cast<int>(i);
        if (best < 0) break;
        Step s;
        s.kind = Step::Kind::Interchange;
        s.source = make_nf(*ambient_, support, cur);
        s.position = best;
        s.inverse = true;
        s.lesser = ambient_->id(cur[best + 1]);
        s.greater = ambient_->id(cur[best]);
        std::swap(cur[best], cur[best + 1]);
        s.target = make_nf(*ambient_, support, cur);
        out.push_back(std::move(s));
    }
    return out;
}

GrayExpr3 GrayContext::interchanger_path(const Bits& support, const std::vector<std::string>& from,
                                         const std::vector<std::string>& to) {
    if (!is_one_order(support, from) || !is_one_order(support, to))
        throw std::invalid_argument("interchanger path: endpoints must be 1-orders of the support");
    GrayExpr3 e;
    std::vector<int> dummy;
    e.source = make_nf(*ambient_, support, dummy);
    e.source.order = from;
    e.target = e.source;
    e.target.order = to;
    e.steps = path_to_normal(support, from);
    auto back = path_to_normal(support, to);
    for (auto it = back.rbegin(); it != back.rend(); ++it) e.steps.push_back(inverted(*it));
    return cancel_inverses(e);
}

Molecule GrayContext::collapse(const Bits& support, int atom) {
    const Poset& p = *ambient_;
    Bits in = boundary(p, atom_of(p, atom), 2, Sign::Minus);
    Molecule host = as_molecule({ambient_, support});
    ClosedSubset v{ambient_, in};
    Molecule w = compos_named(v, collapsed_id(p.id(atom)));
    return substitute(host, v, w.subset, "");
}

std::vector<std::string> GrayContext::default_context(const Bits& support, int atom) {
    Molecule c = collapse(support, atom);
    const Poset& q = c.poset();
    auto g = maxd(q, c.members(), 1);
    auto lf = totally_loop_free(q, c.members());
    std::vector<int> pos(q.size(), 0);
    for (size_t i = 0; i < lf.linear.size(); ++i) pos[lf.linear[i]] = static_cast<int>(i);
    int collapsed = *q.find(collapsed_id(ambient_->id(atom)));
    int nv = static_cast<int>(g.vertices.size());
    std::vector<int> indeg(nv, 0);
    auto adj = g.adjacency();
    for (const auto& [a, b] : g.edges) ++indeg[b];
    std::vector<bool> done(nv, false);
    std::vector<std::string> out;
    // rank: low vertices first, then cells by the total order, the collapsed cell last
    auto rank = [&](int v) -> std::pair<int, int> {
        int x = g.vertices[v];
        if (!g.high[v]) return {0, pos[x]};
        return {x == collapsed ? 2 : 1, pos[x]};
    };
    for (int step = 0; step < nv; ++step) {
        int pick = -1;
        for (int v = 0; v < nv; ++v)
            if (!done[v] && indeg[v] == 0 && (pick < 0 || rank(v) < rank(pick))) pick = v;
        if (pick < 0) throw MoleculeError("context has a cycle in its Maxd graph");
        done[pick] = true;
        if (g.high[pick] && q.dim(g.vertices[pick]) == 2) out.push_back(q.id(g.vertices[pick]));
        for (int w : adj[pick]) --indeg[w];
    }
    return out;
}

GrayExpr3 GrayContext::interpret_atom(const Bits& support, int atom,
                                      const std::optional<std::vector<std::string>>& context) {
    const Poset& p = *ambient_;
    if (p.dim(atom) != 3) throw std::invalid_argument("interpret: '" + p.id(atom) + "' is not 3-dimensional");
    Bits cx = atom_of(p, atom);
    Bits in = boundary(p, cx, 2, Sign::Minus), out = boundary(p, cx, 2, Sign::Plus);
    if ((in - support).any())
        throw MoleculeError("interpret: input boundary of '" + p.id(atom) + "' is not in the support");
    Bits edge = boundary(p, cx, 1);
    Bits after = (support - (in - edge)) | out;

    std::vector<std::string> ctx = context ? *context : default_context(support, atom);
    std::string hole = collapsed_id(p.id(atom));
    auto fill = [&](const Bits& b) {
        std::vector<std::string> o;
        for (const auto& id : ctx) {
            if (id == hole) {
                if (dim_of(p, b) == 2)
                    for (int y : normal_1_order(p, b).sequence) o.push_back(p.id(y));
            } else {
                o.push_back(id);
            }
        }
        return o;
    };
    if (std::count(ctx.begin(), ctx.end(), hole) != 1)
        throw std::invalid_argument("context order must contain " + hole + " exactly once");
    auto xm = fill(in), xp = fill(out);
    if (!is_one_order(support, xm) || !is_one_order(after, xp))
        throw std::invalid_argument("context order is not a 1-order of the collapsed boundary");

    GrayExpr3 e = interchanger_path(support, normal(support).order, xm);
    Step app;
    app.kind = Step::Kind::Apply;
    app.source = e.target;
    app.target = make_nf(p, after, {});
    app.target.order = xp;
    app.atom = p.id(atom);
    app.context = ctx;
    GrayExpr3 tail = interchanger_path(after, xp, normal(after).order);
    e.steps.push_back(app);
    e.steps.insert(e.steps.end(), tail.steps.begin(), tail.steps.end());
    e.target = tail.target;
    return cancel_inverses(e);
}

namespace {

int top_atom(const Molecule& v) {
    int atom = -1;
    for (int x : maximal(v.poset(), v.members()))
        if (v.poset().dim(x) == 3) {
            if (atom >= 0) throw std::invalid_argument("expected exactly one 3-dimensional element");
            atom = x;
        }
    if (atom < 0) throw std::invalid_argument("expected exactly one 3-dimensional element");
    return atom;
}

}  // namespace

GrayExpr3 interpret_atom_in_context(GrayContext& ctx, const Molecule& v,
                                    const std::optional<std::vector<std::string>>& context) {
    if (v.subset.parent != ctx.ptr()) throw std::invalid_argument("molecule is not in the context's complex");
    int atom = top_atom(v);
    return ctx.interpret_atom(boundary(ctx.poset(), v.members(), 2, Sign::Minus), atom, context);
}

GrayExpr3 interpret(GrayContext& ctx, const Molecule& u, const std::optional<KOrder>& order) {
    if (u.subset.parent != ctx.ptr()) throw std::invalid_argument("molecule is not in the context's complex");
    const Poset& p = ctx.poset();
    if (u.dim() == 2) {
        GrayExpr3 e;
        e.source = e.target = ctx.normal(u.members());
        return e;
    }
    if (u.dim() != 3) throw std::invalid_argument("interpret: molecule must have dimension 3");
    KOrder ord;
    if (order) {
        ord = *order;
    } else {
        auto k = k_order(p, u.members(), 2);
        if (!k) throw MoleculeError("interpret: no 2-order");
        ord = *k;
    }
    auto parts = frame_decomposition(u, 2, ord);
    GrayExpr3 total;
    for (size_t i = 0; i < parts.size(); ++i) {
        auto piece = ctx.interpret_atom(boundary(p, parts[i].members(), 2, Sign::Minus), ord.sequence[i]);
        total = i == 0 ? piece : compose(total, piece);
    }
    return cancel_inverses(total);
}

GrayExpr3 expr_normalize(GrayContext& ctx, const GrayExpr3& e) {
    const Poset& p = ctx.poset();
    TwoCellNF src = nf_source(e), tgt = nf_target(e);
    std::vector<int> apps;
    for (const auto& s : e.steps)
        if (s.kind == Step::Kind::Apply) apps.push_back(*p.find(s.atom));
    int n = static_cast<int>(apps.size());
    std::vector<Bits> in_int(n), out_int(n);
    for (int i = 0; i < n; ++i) {
        Bits cx = atom_of(p, apps[i]);
        Bits edge = boundary(p, cx, 1);
        in_int[i] = boundary(p, cx, 2, Sign::Minus) - edge;
        out_int[i] = boundary(p, cx, 2, Sign::Plus) - edge;
    }
    std::vector<std::vector<int>> preds(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((out_int[i] & in_int[j]).any() || (out_int[j] & in_int[i]).any()) preds[j].push_back(i);

    Bits s0 = ctx.support_bits(src);
    Bits cur = s0;
    std::vector<bool> placed(n, false);
    std::vector<int> sequence;
    for (int round = 0; round < n; ++round) {
        auto nf = ctx.normal(cur);
        auto key = [&](int i) {
            int best = static_cast<int>(nf.order.size());
            for (size_t k = 0; k < nf.order.size(); ++k)
                if (in_int[i].test(*p.find(nf.order[k]))) best = std::min(best, static_cast<int>(k));
            return std::make_pair(best, i);
        };
        int pick = -1;
        for (int i = 0; i < n; ++i) {
            if (placed[i]) continue;
            bool ready = std::all_of(preds[i].begin(), preds[i].end(), [&](int q) { return placed[q]; });
            if (ready && (pick < 0 || key(i) < key(pick))) pick = i;
        }
        placed[pick] = true;
        sequence.push_back(pick);
        cur = (cur - in_int[pick]) | boundary(p, atom_of(p, apps[pick]), 2, Sign::Plus);
    }

    GrayExpr3 out = ctx.interchanger_path(s0, src.order, ctx.normal(s0).order);
    cur = s0;
    for (int i : sequence) {
        auto piece = ctx.interpret_atom(cur, apps[i]);
        out = compose(out, piece);
        cur = ctx.support_bits(piece.target);
    }
    if (!(ctx.support_bits(tgt) == cur)) throw std::invalid_argument("expression does not end at its stated target");
    out = compose(out, ctx.interchanger_path(cur, ctx.normal(cur).order, tgt.order));
    return cancel_inverses(out);
}

bool expr_equal(GrayContext& ctx, const GrayExpr3& a, const GrayExpr3& b) {
    if (!(nf_source(a) == nf_source(b)) || !(nf_target(a) == nf_target(b))) return false;
    return expr_normalize(ctx, a).steps == expr_normalize(ctx, b).steps;
}

Equation interpret_4atom(GrayContext& ctx, int atom) {
    const Poset& p = ctx.poset();
    if (p.dim(atom) != 4) throw std::invalid_argument("interpret_4atom: '" + p.id(atom) + "' is not 4-dimensional");
    Bits cx = atom_of(p, atom);
    Equation eq;
    eq.lhs = interpret(ctx, as_molecule({ctx.ptr(), boundary(p, cx, 3, Sign::Minus)}));
    eq.rhs = interpret(ctx, as_molecule({ctx.ptr(), boundary(p, cx, 3, Sign::Plus)}));
    return eq;
}

}  // namespace ogp
