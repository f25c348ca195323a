#include "ogp/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ogp {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

json complex_to_json(const Poset& p) {
    std::vector<int> order(p.size());
    for (int i = 0; i < p.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return p.id(a) < p.id(b); });
    json els = json::array();
    for (int x : order) {
        std::vector<std::pair<std::string, char>> cs;
        for (const auto& c : p.faces(x)) cs.emplace_back(p.id(c.target), sign_char(c.sign));
        std::sort(cs.begin(), cs.end());
        json covers = json::array();
        for (const auto& [id, s] : cs) covers.push_back({{"id", id}, {"sign", std::string(1, s)}});
        els.push_back({{"id", p.id(x)}, {"dim", p.dim(x)}, {"covers", covers}});
    }
    return {{"name", p.name()}, {"elements", els}};
}

Poset complex_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("complex: expected an object");
    if (!j.contains("elements") || !j["elements"].is_array()) throw ParseError("complex: missing 'elements' array");
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("complex: 'name' must be a string");
        name = j["name"].get<std::string>();
    }
    std::vector<ElementSpec> specs;
    size_t i = 0;
    for (const auto& e : j["elements"]) {
        std::string where = "elements[" + std::to_string(i++) + "]";
        if (!e.is_object() || !e.contains("id") || !e["id"].is_string())
            throw ParseError(where + ": missing string 'id'");
        if (!e.contains("dim") || !e["dim"].is_number_integer()) throw ParseError(where + ": missing integer 'dim'");
        ElementSpec s{e["id"].get<std::string>(), e["dim"].get<int>(), {}};
        where += " (" + s.id + ")";
        if (e.contains("covers")) {
            if (!e["covers"].is_array()) throw ParseError(where + ": 'covers' must be an array");
            for (const auto& c : e["covers"]) {
                if (!c.is_object() || !c.contains("id") || !c["id"].is_string() || !c.contains("sign") ||
                    !c["sign"].is_string())
                    throw ParseError(where + ": cover needs string 'id' and 'sign'");
                std::string sg = c["sign"].get<std::string>();
                if (sg != "+" && sg != "-") throw ParseError(where + ": sign must be \"+\" or \"-\"");
                s.covers.emplace_back(c["id"].get<std::string>(), sg == "+" ? Sign::Plus : Sign::Minus);
            }
        }
        specs.push_back(std::move(s));
    }
    try {
        return Poset::make(name, specs);
    } catch (const StructuralError& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_complex(const Poset& p) { return complex_to_json(p).dump(2) + "\n"; }

Poset parse_complex_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return complex_from_json(j);
}

Poset parse_complex(const std::string& path) { return parse_complex_text(read_file(path)); }

json labelled_to_json(const LabelledComplex& x) {
    json j = complex_to_json(*x.shape);
    json labels = json::object();
    for (const auto& [id, l] : x.labels) labels[id] = l;
    j["labels"] = labels;
    return j;
}

LabelledComplex labelled_from_json(const json& j) {
    LabelledComplex x;
    x.shape = std::make_shared<const Poset>(complex_from_json(j));
    if (j.contains("labels")) {
        if (!j["labels"].is_object()) throw ParseError("'labels' must be an object");
        for (const auto& [id, l] : j["labels"].items()) {
            if (!l.is_string()) throw ParseError("label of '" + id + "' must be a string");
            if (!x.shape->find(id)) throw ParseError("label for unknown element '" + id + "'");
            x.labels[id] = l.get<std::string>();
        }
    }
    // unlabelled elements are labelled by their ids
    for (int e = 0; e < x.shape->size(); ++e) x.labels.emplace(x.shape->id(e), x.shape->id(e));
    return x;
}

json certificate_to_json(const Poset& p, const CertPtr& c) {
    if (!c) return nullptr;
    if (c->kind == Certificate::Kind::Atom) return {{"atom", p.id(c->atom)}};
    return {{"paste", {{"k", c->k}, {"left", certificate_to_json(p, c->left)}, {"right", certificate_to_json(p, c->right)}}}};
}

json report_to_json(const ValidationReport& r) {
    json els = json::array();
    for (const auto& e : r.elements)
        els.push_back({{"id", e.id},
                       {"dim", e.dim},
                       {"spherical", to_string(e.spherical)},
                       {"input_molecule", to_string(e.input_molecule)},
                       {"output_molecule", to_string(e.output_molecule)},
                       {"globular", to_string(e.globular)}});
    json j = {{"overall", to_string(r.overall)}, {"elements", els}};
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    return j;
}

json slice_to_json(const Slice& s) {
    json op;
    switch (s.op.kind) {
    case OpRef::Kind::Gen: op = {{"gen", s.op.gen}}; break;
    case OpRef::Kind::Braid: op = {{"braid", {s.op.a, s.op.b}}}; break;
    case OpRef::Kind::BraidInv: op = {{"braidInv", {s.op.a, s.op.b}}}; break;
    }
    return {{"pre", s.pre}, {"op", op}, {"post", s.post}};
}

json cell_to_json(const Layered2Cell& e) {
    json a = json::array();
    for (const auto& s : e.slices) a.push_back(slice_to_json(s));
    return a;
}

json presentation_to_json(const Presentation& p) {
    json gens = json::array();
    for (const auto& g : p.generators) gens.push_back({{"name", g.name}, {"in", g.in}, {"out", g.out}});
    json rels = json::array();
    for (const auto& r : p.relations)
        rels.push_back({{"name", r.name}, {"source", r.lhs.source}, {"lhs", cell_to_json(r.lhs)}, {"rhs", cell_to_json(r.rhs)}});
    return {{"name", p.name},
            {"sorts", p.sorts},
            {"generators", gens},
            {"relations", rels},
            {"flags", {{"braided", p.braided}, {"symmetric", p.symmetric}}}};
}

namespace {

Word word_of(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of sorts");
    Word w;
    for (const auto& x : j) {
        if (!x.is_string()) throw ParseError(where + ": sorts must be strings");
        w.push_back(x.get<std::string>());
    }
    return w;
}

Layered2Cell cell_of(const json& j, const Word& source, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a list of slices");
    Layered2Cell e;
    e.source = source;
    for (const auto& s : j) {
        if (!s.is_object() || !s.contains("op")) throw ParseError(where + ": slice needs 'op'");
        Slice sl;
        sl.pre = s.contains("pre") ? word_of(s["pre"], where) : Word{};
        sl.post = s.contains("post") ? word_of(s["post"], where) : Word{};
        const json& op = s["op"];
        if (op.contains("gen") && op["gen"].is_string()) {
            sl.op = OpRef::generator(op["gen"].get<std::string>());
        } else if (op.contains("braid") || op.contains("braidInv")) {
            bool inv = op.contains("braidInv");
            Word ab = word_of(op[inv ? "braidInv" : "braid"], where);
            if (ab.size() != 2) throw ParseError(where + ": braid needs two sorts");
            sl.op = inv ? OpRef::braid_inv(ab[0], ab[1]) : OpRef::braid(ab[0], ab[1]);
        } else {
            throw ParseError(where + ": unknown op");
        }
        e.slices.push_back(std::move(sl));
    }
    return e;
}

}  // namespace

Presentation presentation_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("presentation: expected an object");
    Presentation p;
    if (j.contains("name") && j["name"].is_string()) p.name = j["name"].get<std::string>();
    if (!j.contains("sorts")) throw ParseError("presentation: missing 'sorts'");
    p.sorts = word_of(j["sorts"], "sorts");
    if (j.contains("generators")) {
        for (const auto& g : j["generators"]) {
            if (!g.contains("name") || !g["name"].is_string()) throw ParseError("generator needs a name");
            std::string n = g["name"].get<std::string>();
            p.generators.push_back({n, word_of(g.value("in", json::array()), n), word_of(g.value("out", json::array()), n)});
        }
    }
    if (j.contains("flags")) {
        p.braided = j["flags"].value("braided", false);
        p.symmetric = j["flags"].value("symmetric", false);
    }
    if (j.contains("relations")) {
        size_t i = 0;
        for (const auto& r : j["relations"]) {
            std::string n = r.contains("name") ? r["name"].get<std::string>() : "r" + std::to_string(i);
            ++i;
            if (!r.contains("lhs") || !r.contains("rhs")) throw ParseError("relation " + n + " needs lhs and rhs");
            Relation rel;
            rel.name = n;
            Word src;
            if (r.contains("source")) {
                src = word_of(r["source"], n);
            } else {
                // source is the input of the first slice of either side
                auto first = [&](const json& side) -> std::optional<Word> {
                    if (side.empty()) return std::nullopt;
                    Layered2Cell one = cell_of(json::array({side[0]}), {}, n);
                    const Slice& s = one.slices[0];
                    Word in;
                    if (s.op.kind == OpRef::Kind::Gen) {
                        const Generator* g = p.find(s.op.gen);
                        if (!g) throw ParseError("relation " + n + ": unknown generator " + s.op.gen);
                        in = g->in;
                    } else if (s.op.kind == OpRef::Kind::Braid) {
                        in = {s.op.a, s.op.b};
                    } else {
                        in = {s.op.b, s.op.a};
                    }
                    Word w = s.pre;
                    w.insert(w.end(), in.begin(), in.end());
                    w.insert(w.end(), s.post.begin(), s.post.end());
                    return w;
                };
                auto a = first(r["lhs"]);
                auto b = a ? a : first(r["rhs"]);
                if (!b) throw ParseError("relation " + n + ": cannot infer the source word");
                src = *b;
            }
            rel.lhs = cell_of(r["lhs"], src, n);
            rel.rhs = cell_of(r["rhs"], src, n);
            try {
                if (target(rel.lhs, &p) != target(rel.rhs, &p))
                    throw ParseError("relation " + n + ": sides are not parallel");
            } catch (const TheoryError& e) {
                throw ParseError("relation " + n + ": " + e.what());
            }
            p.relations.push_back(std::move(rel));
        }
    }
    return p;
}

json inventory_to_json(const Inventory& inv) {
    json j = json::object();
    for (const auto& [d, names] : inv) j[std::to_string(d)] = {{"count", names.size()}, {"cells", names}};
    return j;
}

json diag_complex_to_json(const DiagComplexPresentation& d) {
    json cells = json::array();
    for (const auto& c : d.cells) {
        json cj = labelled_to_json(c.cell);
        cells.push_back({{"name", c.name}, {"dim", c.dim}, {"shape", cj}});
    }
    return {{"name", d.name}, {"cells", cells}};
}

DiagComplexPresentation diag_complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        throw ParseError("diagrammatic complex: missing 'cells' array");
    DiagComplexPresentation d;
    if (j.contains("name") && j["name"].is_string()) d.name = j["name"].get<std::string>();
    for (const auto& c : j["cells"]) {
        if (!c.contains("name") || !c["name"].is_string() || !c.contains("shape"))
            throw ParseError("diagrammatic complex: cell needs 'name' and 'shape'");
        GeneratingCell g;
        g.name = c["name"].get<std::string>();
        g.cell = labelled_from_json(c["shape"]);
        g.dim = c.contains("dim") ? c["dim"].get<int>() : g.cell.shape->dim();
        if (g.dim != g.cell.shape->dim()) throw ParseError("cell " + g.name + ": dim does not match its shape");
        d.cells.push_back(std::move(g));
    }
    return d;
}

namespace {

json nf_to_json(const TwoCellNF& nf) { return {{"support", nf.support}, {"order", nf.order}}; }

}  // namespace

json expr_to_json(const GrayExpr3& e) {
    json steps = json::array();
    for (const auto& s : e.steps) {
        if (s.kind == Step::Kind::Interchange)
            steps.push_back({{"interchange",
                              {{"cells", {s.lesser, s.greater}},
                               {"inverse", s.inverse},
                               {"position", s.position},
                               {"from", s.source.order},
                               {"to", s.target.order}}}});
        else
            steps.push_back({{"apply", {{"atom", s.atom}, {"context", s.context}, {"from", s.source.order},
                                        {"to", s.target.order}}}});
    }
    return {{"text", e.str()}, {"source", nf_to_json(nf_source(e))}, {"target", nf_to_json(nf_target(e))}, {"steps", steps}};
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::vector<int> sorted_by_id(const Poset& p, const Bits& u) {
    auto xs = elements_of(u);
    std::sort(xs.begin(), xs.end(), [&](int a, int b) { return p.id(a) < p.id(b); });
    return xs;
}

}  // namespace

std::string export_dot(const Poset& p) { return export_dot(p, p.all()); }

std::string export_dot(const Poset& p, const Bits& u) {
    std::ostringstream o;
    o << "digraph " << quote(p.name()) << " {\n  rankdir=BT;\n";
    std::map<int, std::vector<int>> ranks;
    for (int x : sorted_by_id(p, u)) ranks[p.dim(x)].push_back(x);
    for (const auto& [d, xs] : ranks) {
        o << "  { rank=same;";
        for (int x : xs) o << " " << quote(p.id(x)) << ";";
        o << " }\n";
    }
    // H_o: + covers point up, - covers point down
    std::vector<std::string> edges;
    for (int y : sorted_by_id(p, u))
        for (const auto& c : p.faces(y)) {
            if (!u.test(c.target)) continue;
            if (c.sign == Sign::Plus)
                edges.push_back("  " + quote(p.id(y)) + " -> " + quote(p.id(c.target)) + " [label=\"+\"];");
            else
                edges.push_back("  " + quote(p.id(c.target)) + " -> " + quote(p.id(y)) + " [label=\"-\", style=dashed];");
        }
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) o << e << "\n";
    o << "}\n";
    return o.str();
}

std::string export_maxd_dot(const Poset& p, const MaxdGraph& g) {
    std::ostringstream o;
    o << "digraph " << quote("Maxd" + std::to_string(g.n) + "(" + p.name() + ")") << " {\n";
    std::vector<size_t> idx(g.vertices.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return p.id(g.vertices[a]) < p.id(g.vertices[b]); });
    for (size_t i : idx)
        o << "  " << quote(p.id(g.vertices[i])) << " [shape=" << (g.high[i] ? "box" : "ellipse") << "];\n";
    std::vector<std::string> edges;
    for (const auto& [a, b] : g.edges)
        edges.push_back("  " + quote(p.id(g.vertices[a])) + " -> " + quote(p.id(g.vertices[b])) + ";");
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) o << e << "\n";
    o << "}\n";
    return o.str();
}

namespace {

// 1-cells of a 1-dimensional set in path order.
std::vector<int> path_order(const Poset& p, const std::vector<int>& edges) {
    std::map<int, int> by_source;
    std::set<int> targets;
    auto end = [&](int e, Sign s) {
        for (const auto& c : p.faces(e))
            if (c.sign == s) return c.target;
        return -1;
    };
    for (int e : edges) {
        by_source[end(e, Sign::Minus)] = e;
        targets.insert(end(e, Sign::Plus));
    }
    std::vector<int> out;
    int start = -1;
    for (int e : edges)
        if (!targets.count(end(e, Sign::Minus))) start = e;
    for (int e = start; e >= 0 && out.size() < edges.size();) {
        out.push_back(e);
        auto it = by_source.find(end(e, Sign::Plus));
        e = it == by_source.end() ? -1 : it->second;
    }
    if (out.size() != edges.size()) return edges;
    return out;
}

std::vector<int> cells_of_dim(const Poset& p, const Bits& u, int d) {
    std::vector<int> out;
    for (int x : elements_of(u))
        if (p.dim(x) == d) out.push_back(x);
    return out;
}

}  // namespace

std::string export_svg_2diagram(const LabelledComplex& x) {
    const Poset& p = *x.shape;
    Bits all = p.all();
    int d = p.dim();
    if (d > 2) throw std::invalid_argument("svg export needs dimension <= 2");
    const int dx = 60, dy = 70, margin = 40;
    std::vector<int> layers;
    std::vector<int> wires;
    if (d == 2) {
        layers = normal_1_order(p, all).sequence;
        wires = path_order(p, cells_of_dim(p, boundary(p, all, 1, Sign::Minus), 1));
    } else if (d == 1) {
        wires = path_order(p, cells_of_dim(p, all, 1));
    }
    // points[w] = polyline of wire w
    std::map<int, std::vector<std::pair<int, int>>> points;
    std::vector<std::string> nodes;
    size_t widest = std::max<size_t>(wires.size(), 1);
    auto place = [&](int y) {
        for (size_t i = 0; i < wires.size(); ++i) points[wires[i]].emplace_back(margin + static_cast<int>(i) * dx, y);
    };
    int y = margin;
    place(y);
    for (int c : layers) {
        y += dy;
        Bits cx = atom_of(p, c);
        auto ins = path_order(p, cells_of_dim(p, boundary(p, cx, 1, Sign::Minus), 1));
        auto outs = path_order(p, cells_of_dim(p, boundary(p, cx, 1, Sign::Plus), 1));
        auto it = std::search(wires.begin(), wires.end(), ins.begin(), ins.end());
        size_t at = it == wires.end() ? wires.size() : static_cast<size_t>(it - wires.begin());
        int nx = margin + static_cast<int>(at) * dx + static_cast<int>(std::max<size_t>(ins.size(), 1) - 1) * dx / 2;
        int ny = y - dy / 2;
        for (int w : ins) points[w].emplace_back(nx, ny);
        std::vector<int> next(wires.begin(), wires.begin() + std::min(at, wires.size()));
        next.insert(next.end(), outs.begin(), outs.end());
        if (at + ins.size() <= wires.size()) next.insert(next.end(), wires.begin() + at + ins.size(), wires.end());
        for (int w : outs) points[w].emplace_back(nx, ny);
        for (size_t i = 0; i < next.size(); ++i)
            if (std::find(ins.begin(), ins.end(), next[i]) == ins.end() && std::find(outs.begin(), outs.end(), next[i]) == outs.end())
                points[next[i]].emplace_back(margin + static_cast<int>(i) * dx, ny);
        wires = next;
        widest = std::max(widest, wires.size());
        if (x.label(c) != kBasepoint) nodes.push_back("<circle cx=\"" + std::to_string(nx) + "\" cy=\"" + std::to_string(ny) +
                                                      "\" r=\"12\" fill=\"white\" stroke=\"black\"/><text x=\"" +
                                                      std::to_string(nx) + "\" y=\"" + std::to_string(ny + 4) +
                                                      "\" text-anchor=\"middle\" font-size=\"11\">" + xml(x.label(c)) +
                                                      "</text>");
    }
    y += dy / 2;
    place(y);
    int width = 2 * margin + static_cast<int>(widest - 1) * dx, height = y + margin;
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    for (const auto& [w, pts] : points) {
        o << "<polyline fill=\"none\" stroke=\"black\"";
        if (x.label(w) == kBasepoint) o << " stroke-dasharray=\"4,3\"";
        o << " points=\"";
        for (size_t i = 0; i < pts.size(); ++i) o << (i ? " " : "") << pts[i].first << "," << pts[i].second;
        o << "\"><title>" << xml(p.id(w) + ": " + x.label(w)) << "</title></polyline>\n";
    }
    for (const auto& n : nodes) o << n << "\n";
    if (d == 0) o << "<circle cx=\"" << margin << "\" cy=\"" << margin << "\" r=\"3\"/>\n";
    o << "</svg>\n";
    return o.str();
}

std::string export_svg_2diagram(const Poset& p) {
    LabelledComplex x;
    x.shape = std::make_shared<const Poset>(p);
    for (int e = 0; e < p.size(); ++e) x.labels[p.id(e)] = p.id(e);
    return export_svg_2diagram(x);
}

}  // namespace ogp
