#include "ogp/theories.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ogp/fixtures.hpp"
#include "ogp/validate.hpp"

namespace ogp {

const Generator* Presentation::find(const std::string& g) const {
    for (const auto& x : generators)
        if (x.name == g) return &x;
    return nullptr;
}

bool Presentation::has_relation(const std::string& r) const {
    return std::any_of(relations.begin(), relations.end(), [&](const Relation& x) { return x.name == r; });
}

namespace {

const std::string& sep() { return kDefaultSeparator; }

Word tensor_word(const Word& w, const std::string& c, bool left) {
    Word out;
    for (const auto& a : w) out.push_back(left ? a + sep() + c : c + sep() + a);
    return out;
}

// Copy of a cell with every sort x replaced by x (x) c (left) or c (x) x (right),
// and generator g by g (x) c or c (x) g.
Layered2Cell tensor_cell(const Layered2Cell& e, const std::string& c, bool left) {
    auto name = [&](const std::string& x) { return left ? x + sep() + c : c + sep() + x; };
    Layered2Cell r;
    r.source = tensor_word(e.source, c, left);
    for (const auto& s : e.slices) {
        Slice t;
        t.pre = tensor_word(s.pre, c, left);
        t.post = tensor_word(s.post, c, left);
        t.op = s.op;
        if (s.op.kind == OpRef::Kind::Gen) {
            t.op.gen = name(s.op.gen);
        } else {
            t.op.a = name(s.op.a);
            t.op.b = name(s.op.b);
        }
        r.slices.push_back(std::move(t));
    }
    return r;
}

Word concat(const std::vector<Word>& ws) {
    Word out;
    for (const auto& w : ws) out.insert(out.end(), w.begin(), w.end());
    return out;
}

void append(Layered2Cell& e, const Layered2Cell& f) { e.slices.insert(e.slices.end(), f.slices.begin(), f.slices.end()); }

// Applies gen to each block in turn, left to right; blocks[k] becomes outs[k].
void apply_blockwise(Layered2Cell& e, const std::vector<Word>& blocks, const std::vector<Word>& outs,
                     const std::vector<std::string>& gens) {
    for (size_t k = 0; k < blocks.size(); ++k) {
        Slice s;
        for (size_t l = 0; l < k; ++l) s.pre.insert(s.pre.end(), outs[l].begin(), outs[l].end());
        for (size_t l = k + 1; l < blocks.size(); ++l) s.post.insert(s.post.end(), blocks[l].begin(), blocks[l].end());
        s.op = OpRef::generator(gens[k]);
        e.slices.push_back(std::move(s));
    }
}

std::vector<std::vector<std::string>> grid(const Word& rows, const Word& cols) {
    std::vector<std::vector<std::string>> g;
    for (const auto& a : rows) {
        g.emplace_back();
        for (const auto& c : cols) g.back().push_back(a + sep() + c);
    }
    return g;
}

}  // namespace

Presentation tensor_pros(const Presentation& t, const Presentation& s) {
    Presentation r;
    r.name = t.name + sep() + s.name;
    r.braided = true;
    for (const auto& a : t.sorts)
        for (const auto& c : s.sorts) r.sorts.push_back(a + sep() + c);
    for (const auto& g : t.generators)
        for (const auto& c : s.sorts)
            r.generators.push_back({g.name + sep() + c, tensor_word(g.in, c, true), tensor_word(g.out, c, true)});
    for (const auto& a : t.sorts)
        for (const auto& g : s.generators)
            r.generators.push_back({a + sep() + g.name, tensor_word(g.in, a, false), tensor_word(g.out, a, false)});
    for (const auto& rel : t.relations)
        for (const auto& c : s.sorts)
            r.relations.push_back({rel.name + sep() + c, tensor_cell(rel.lhs, c, true), tensor_cell(rel.rhs, c, true)});
    for (const auto& a : t.sorts)
        for (const auto& rel : s.relations)
            r.relations.push_back({a + sep() + rel.name, tensor_cell(rel.lhs, a, false), tensor_cell(rel.rhs, a, false)});

    for (const auto& phi : t.generators)
        for (const auto& psi : s.generators) {
            const Word &as = phi.in, &bs = phi.out, &cs = psi.in, &ds = psi.out;
            int n = static_cast<int>(as.size()), m = static_cast<int>(bs.size());
            int p = static_cast<int>(cs.size()), q = static_cast<int>(ds.size());
            auto blocks = [&](const Word& rows, const Word& cols, bool row_major) {
                std::vector<Word> out;
                if (row_major) {
                    for (const auto& a : rows) out.push_back(tensor_word(cols, a, false));
                } else {
                    for (const auto& c : cols) out.push_back(tensor_word(rows, c, true));
                }
                return out;
            };
            Relation rel;
            rel.name = phi.name + sep() + psi.name;
            Word src = concat(blocks(as, cs, true));

            // (a_i (x) psi)_i ; sigma ; (phi (x) d_l)_l ; sigma*
            rel.lhs.source = src;
            {
                std::vector<std::string> gens;
                for (const auto& a : as) gens.push_back(a + sep() + psi.name);
                apply_blockwise(rel.lhs, blocks(as, cs, true), blocks(as, ds, true), gens);
                append(rel.lhs, block_sigma(n, q, grid(as, ds)).sigma);
                gens.clear();
                for (const auto& d : ds) gens.push_back(phi.name + sep() + d);
                apply_blockwise(rel.lhs, blocks(as, ds, false), blocks(bs, ds, false), gens);
                append(rel.lhs, block_sigma(m, q, grid(bs, ds)).sigma_star);
            }
            // sigma ; (phi (x) c_k)_k ; sigma* ; (b_j (x) psi)_j
            rel.rhs.source = src;
            {
                append(rel.rhs, block_sigma(n, p, grid(as, cs)).sigma);
                std::vector<std::string> gens;
                for (const auto& c : cs) gens.push_back(phi.name + sep() + c);
                apply_blockwise(rel.rhs, blocks(as, cs, false), blocks(bs, cs, false), gens);
                append(rel.rhs, block_sigma(m, p, grid(bs, cs)).sigma_star);
                gens.clear();
                for (const auto& b : bs) gens.push_back(b + sep() + psi.name);
                apply_blockwise(rel.rhs, blocks(bs, cs, true), blocks(bs, ds, true), gens);
            }
            r.relations.push_back(std::move(rel));
        }
    return r;
}

Presentation prop_quotient(const Presentation& p,
                           const std::optional<std::pair<Presentation, Presentation>>& tensor_of_props) {
    Presentation r = p;
    r.braided = true;
    r.symmetric = true;
    auto add = [&](Relation rel) {
        if (!r.has_relation(rel.name)) r.relations.push_back(std::move(rel));
    };
    for (const auto& a : p.sorts)
        for (const auto& b : p.sorts) {
            Relation rel;
            rel.name = "σ=σ*[" + a + "," + b + "]";
            rel.lhs = {{a, b}, {{{}, OpRef::braid(a, b), {}}}};
            rel.rhs = {{a, b}, {{{}, OpRef::braid_inv(b, a), {}}}};
            add(std::move(rel));
        }
    if (tensor_of_props) {
        const auto& [t, s] = *tensor_of_props;
        auto braid_gen = [&](const std::string& name, const std::string& x, const std::string& y) {
            if (!r.find(name)) r.generators.push_back({name, {x, y}, {y, x}});
            Relation rel;
            rel.name = name;
            rel.lhs = {{x, y}, {{{}, OpRef::generator(name), {}}}};
            rel.rhs = {{x, y}, {{{}, OpRef::braid(x, y), {}}}};
            add(std::move(rel));
        };
        for (const auto& a : t.sorts)
            for (const auto& b : t.sorts)
                for (const auto& c : s.sorts)
                    braid_gen("σ[" + a + "," + b + "]" + sep() + c, a + sep() + c, b + sep() + c);
        for (const auto& a : t.sorts)
            for (const auto& c : s.sorts)
                for (const auto& d : s.sorts)
                    braid_gen(a + sep() + "σ[" + c + "," + d + "]", a + sep() + c, a + sep() + d);
    }
    return r;
}

namespace {

std::string co_name(const std::string& g) {
    static const std::map<std::string, std::string> names = {{"μ", "δ"}, {"η", "ε"}, {"δ", "μ"}, {"ε", "η"}};
    auto it = names.find(g);
    if (it != names.end()) return it->second;
    if (g.rfind("co", 0) == 0) return g.substr(2);
    return "co" + g;
}

Layered2Cell co_cell(const Layered2Cell& e, const Presentation& p) {
    Layered2Cell r;
    r.source = target(e, &p);
    for (auto it = e.slices.rbegin(); it != e.slices.rend(); ++it) {
        if (it->op.kind != OpRef::Kind::Gen) throw TheoryError("co-dual of braided cells is not supported");
        r.slices.push_back({it->pre, OpRef::generator(co_name(it->op.gen)), it->post});
    }
    return r;
}

}  // namespace

Presentation co_dual(const Presentation& p) {
    Presentation r;
    r.name = co_name(p.name);
    r.sorts = p.sorts;
    for (const auto& g : p.generators) r.generators.push_back({co_name(g.name), g.out, g.in});
    for (const auto& rel : p.relations) r.relations.push_back({co_name(rel.name), co_cell(rel.lhs, p), co_cell(rel.rhs, p)});
    return r;
}

Inventory DiagComplexPresentation::inventory() const {
    Inventory inv;
    for (const auto& c : cells) inv[c.dim].push_back(c.name);
    return inv;
}

const GeneratingCell* DiagComplexPresentation::find(const std::string& n) const {
    for (const auto& c : cells)
        if (c.name == n) return &c;
    return nullptr;
}

LabelledComplex labelled_restrict(const LabelledComplex& x, const Bits& u) {
    LabelledComplex r;
    r.shape = std::make_shared<const Poset>(restrict(*x.shape, u));
    for (int e : elements_of(u)) r.labels[x.shape->id(e)] = x.label(e);
    return r;
}

LabelledComplex labelled_boundary(const LabelledComplex& x, int n, Sign a) {
    return labelled_restrict(x, boundary(*x.shape, x.shape->all(), n, a));
}

int count_labelled(const LabelledComplex& x, int d) {
    int c = 0;
    for (int e = 0; e < x.shape->size(); ++e)
        if (x.shape->dim(e) == d && x.label(e) != kBasepoint) ++c;
    return c;
}

DiagComplexPresentation presentation_of_smash(const DiagComplexPresentation& x, const DiagComplexPresentation& y,
                                              int validate_dim_limit) {
    DiagComplexPresentation r;
    r.name = x.name + "∧" + y.name;
    LabelledComplex pt;
    pt.shape = std::make_shared<const Poset>(globe(0));
    pt.labels["0"] = kBasepoint;
    r.cells.push_back({kBasepoint, 0, pt});
    for (const auto& a : x.cells) {
        if (a.name == kBasepoint) continue;
        for (const auto& b : y.cells) {
            if (b.name == kBasepoint) continue;
            LabelledComplex prod = smash_collapse(gray_labelled(a.cell, b.cell));
            int d = a.dim + b.dim;
            if (d <= validate_dim_limit) {
                auto rep = validate_complex(prod.shape);
                if (rep.overall == Status::Fail)
                    throw TheoryError("shape of " + a.name + sep() + b.name + " fails validation: " + rep.first_failure);
            }
            r.cells.push_back({a.name + sep() + b.name, d, std::move(prod)});
        }
    }
    std::stable_sort(r.cells.begin(), r.cells.end(),
                     [](const GeneratingCell& p, const GeneratingCell& q) { return p.dim < q.dim; });
    return r;
}

namespace {

Slice gen(Word pre, const std::string& g, Word post) { return {std::move(pre), OpRef::generator(g), std::move(post)}; }

Presentation mon() {
    Presentation p;
    p.name = "Mon";
    p.sorts = {"1"};
    p.generators = {{"μ", {"1", "1"}, {"1"}}, {"η", {}, {"1"}}};
    p.relations.push_back({"α", {{"1", "1", "1"}, {gen({}, "μ", {"1"}), gen({}, "μ", {})}},
                           {{"1", "1", "1"}, {gen({"1"}, "μ", {}), gen({}, "μ", {})}}});
    p.relations.push_back({"λ", {{"1"}, {gen({}, "η", {"1"}), gen({}, "μ", {})}}, {{"1"}, {}}});
    p.relations.push_back({"ρ", {{"1"}, {gen({"1"}, "η", {}), gen({}, "μ", {})}}, {{"1"}, {}}});
    return p;
}

// Written out by hand; the tests compare it with tensor_pros(Mon, coMon).
Presentation bialg_expected() {
    const std::string X = "1⊗1";
    Presentation p;
    p.name = "Mon⊗coMon";
    p.braided = true;
    p.sorts = {X};
    p.generators = {{"μ⊗1", {X, X}, {X}}, {"η⊗1", {}, {X}}, {"1⊗δ", {X}, {X, X}}, {"1⊗ε", {X}, {}}};
    auto& R = p.relations;
    R.push_back({"α⊗1", {{X, X, X}, {gen({}, "μ⊗1", {X}), gen({}, "μ⊗1", {})}},
                 {{X, X, X}, {gen({X}, "μ⊗1", {}), gen({}, "μ⊗1", {})}}});
    R.push_back({"λ⊗1", {{X}, {gen({}, "η⊗1", {X}), gen({}, "μ⊗1", {})}}, {{X}, {}}});
    R.push_back({"ρ⊗1", {{X}, {gen({X}, "η⊗1", {}), gen({}, "μ⊗1", {})}}, {{X}, {}}});
    R.push_back({"1⊗coα", {{X}, {gen({}, "1⊗δ", {}), gen({}, "1⊗δ", {X})}},
                 {{X}, {gen({}, "1⊗δ", {}), gen({X}, "1⊗δ", {})}}});
    R.push_back({"1⊗coλ", {{X}, {gen({}, "1⊗δ", {}), gen({}, "1⊗ε", {X})}}, {{X}, {}}});
    R.push_back({"1⊗coρ", {{X}, {gen({}, "1⊗δ", {}), gen({X}, "1⊗ε", {})}}, {{X}, {}}});
    // the braiding sits on the left side of the bialgebra law
    R.push_back({"μ⊗δ",
                 {{X, X},
                  {gen({}, "1⊗δ", {X}), gen({X, X}, "1⊗δ", {}), {{X}, OpRef::braid(X, X), {X}},
                   gen({}, "μ⊗1", {X, X}), gen({X}, "μ⊗1", {})}},
                 {{X, X}, {gen({}, "μ⊗1", {}), gen({}, "1⊗δ", {})}}});
    R.push_back({"μ⊗ε", {{X, X}, {gen({}, "1⊗ε", {X}), gen({}, "1⊗ε", {})}},
                 {{X, X}, {gen({}, "μ⊗1", {}), gen({}, "1⊗ε", {})}}});
    R.push_back({"η⊗δ", {{}, {gen({}, "η⊗1", {}), gen({X}, "η⊗1", {})}},
                 {{}, {gen({}, "η⊗1", {}), gen({}, "1⊗δ", {})}}});
    R.push_back({"η⊗ε", {{}, {}}, {{}, {gen({}, "η⊗1", {}), gen({}, "1⊗ε", {})}}});
    return p;
}

LabelledComplex labelled(Poset p, std::map<std::string, std::string> labels) {
    LabelledComplex c;
    c.shape = std::make_shared<const Poset>(std::move(p));
    c.labels = std::move(labels);
    for (int x = 0; x < c.shape->size(); ++x)
        if (!c.labels.count(c.shape->id(x))) throw std::logic_error("unlabelled element " + c.shape->id(x));
    return c;
}

DiagComplexPresentation mon_complex() {
    const std::string B = kBasepoint;
    DiagComplexPresentation d;
    d.name = "MonComplex";
    d.cells.push_back({B, 0, labelled(globe(0), {{"0", B}})});
    d.cells.push_back({"1", 1, labelled(globe(1), {{"0-", B}, {"0+", B}, {"1", "1"}})});
    d.cells.push_back({"μ", 2,
                       labelled(build_cells("μ", {{"v0", 0, {}, {}}, {"v1", 0, {}, {}}, {"v2", 0, {}, {}},
                                                  {"i1", 1, {"v0"}, {"v1"}}, {"i2", 1, {"v1"}, {"v2"}},
                                                  {"o", 1, {"v0"}, {"v2"}}, {"μ", 2, {"i1", "i2"}, {"o"}}}),
                                {{"v0", B}, {"v1", B}, {"v2", B}, {"i1", "1"}, {"i2", "1"}, {"o", "1"}, {"μ", "μ"}})});
    // the input wire of the unit is degenerate
    d.cells.push_back({"η", 2, labelled(globe(2), {{"0-", B}, {"0+", B}, {"1-", B}, {"1+", "1"}, {"2", "η"}})});
    d.cells.push_back(
        {"α", 3,
         labelled(build_cells("α", {{"v0", 0, {}, {}}, {"v1", 0, {}, {}}, {"v2", 0, {}, {}}, {"v3", 0, {}, {}},
                                    {"e1", 1, {"v0"}, {"v1"}}, {"e2", 1, {"v1"}, {"v2"}}, {"e3", 1, {"v2"}, {"v3"}},
                                    {"f", 1, {"v0"}, {"v2"}}, {"g", 1, {"v1"}, {"v3"}}, {"o", 1, {"v0"}, {"v3"}},
                                    {"m1", 2, {"e1", "e2"}, {"f"}}, {"m2", 2, {"f", "e3"}, {"o"}},
                                    {"m3", 2, {"e2", "e3"}, {"g"}}, {"m4", 2, {"e1", "g"}, {"o"}},
                                    {"α", 3, {"m1", "m2"}, {"m3", "m4"}}}),
                  {{"v0", B}, {"v1", B}, {"v2", B}, {"v3", B}, {"e1", "1"}, {"e2", "1"}, {"e3", "1"}, {"f", "1"},
                   {"g", "1"}, {"o", "1"}, {"m1", "μ"}, {"m2", "μ"}, {"m3", "μ"}, {"m4", "μ"}, {"α", "α"}})});
    // unit laws: the output 2-cell is a degenerate copy of the wire
    d.cells.push_back(
        {"λ", 3,
         labelled(build_cells("λ", {{"v0", 0, {}, {}}, {"v1", 0, {}, {}}, {"v2", 0, {}, {}},
                                    {"d", 1, {"v0"}, {"v1"}}, {"e1", 1, {"v0"}, {"v1"}}, {"e2", 1, {"v1"}, {"v2"}},
                                    {"o", 1, {"v0"}, {"v2"}}, {"h", 2, {"d"}, {"e1"}}, {"m", 2, {"e1", "e2"}, {"o"}},
                                    {"u", 2, {"d", "e2"}, {"o"}}, {"λ", 3, {"h", "m"}, {"u"}}}),
                  {{"v0", B}, {"v1", B}, {"v2", B}, {"d", B}, {"e1", "1"}, {"e2", "1"}, {"o", "1"}, {"h", "η"},
                   {"m", "μ"}, {"u", "1"}, {"λ", "λ"}})});
    d.cells.push_back(
        {"ρ", 3,
         labelled(build_cells("ρ", {{"v0", 0, {}, {}}, {"v1", 0, {}, {}}, {"v2", 0, {}, {}},
                                    {"e1", 1, {"v0"}, {"v1"}}, {"d", 1, {"v1"}, {"v2"}}, {"e2", 1, {"v1"}, {"v2"}},
                                    {"o", 1, {"v0"}, {"v2"}}, {"h", 2, {"d"}, {"e2"}}, {"m", 2, {"e1", "e2"}, {"o"}},
                                    {"u", 2, {"e1", "d"}, {"o"}}, {"ρ", 3, {"h", "m"}, {"u"}}}),
                  {{"v0", B}, {"v1", B}, {"v2", B}, {"d", B}, {"e1", "1"}, {"e2", "1"}, {"o", "1"}, {"h", "η"},
                   {"m", "μ"}, {"u", "1"}, {"ρ", "ρ"}})});
    return d;
}

DiagComplexPresentation comon_complex() {
    DiagComplexPresentation m = mon_complex(), d;
    d.name = "coMonComplex";
    for (const auto& c : m.cells) {
        GeneratingCell g{c.name == kBasepoint || c.name == "1" ? c.name : co_name(c.name), c.dim, {}};
        g.cell.shape = std::make_shared<const Poset>(dual(*c.cell.shape, {2}));
        for (const auto& [id, l] : c.cell.labels)
            g.cell.labels[id] = l == kBasepoint || l == "1" ? l : co_name(l);
        d.cells.push_back(std::move(g));
    }
    return d;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"N", "Mon", "coMon", "MonComplex", "coMonComplex", "BialgExpected"}; }

Presentation builtin_pro(const std::string& name) {
    if (name == "N") {
        Presentation p;
        p.name = "N";
        p.sorts = {"1"};
        return p;
    }
    if (name == "Mon") return mon();
    if (name == "coMon") return co_dual(mon());
    if (name == "BialgExpected") return bialg_expected();
    throw TheoryError("unknown presentation '" + name + "'");
}

DiagComplexPresentation builtin_complex(const std::string& name) {
    if (name == "MonComplex") return mon_complex();
    if (name == "coMonComplex") return comon_complex();
    throw TheoryError("unknown diagrammatic complex '" + name + "'");
}

std::variant<Presentation, DiagComplexPresentation> builtin(const std::string& name) {
    if (name == "MonComplex" || name == "coMonComplex") return builtin_complex(name);
    return builtin_pro(name);
}

}  // namespace ogp
