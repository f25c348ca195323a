// ogp: command-line driver.
// Exit codes: 0 success, 1 semantic failure, 2 usage or parse error.

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "ogp/fixtures.hpp"
#include "ogp/io.hpp"

using namespace ogp;
namespace fs = std::filesystem;

namespace {

struct SemanticFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": invalid JSON: " + e.what());
    }
}

// A path to a complex JSON file, or the name of a shipped fixture.
LabelledComplex load_complex(const std::string& arg) {
    if (fs::exists(arg)) return labelled_from_json(load_json(arg));
    Poset p;
    try {
        p = fixture(arg);
    } catch (const std::invalid_argument&) {
        throw ParseError("'" + arg + "' is neither a file nor a fixture name");
    }
    LabelledComplex x;
    x.shape = std::make_shared<const Poset>(std::move(p));
    for (int e = 0; e < x.shape->size(); ++e) x.labels[x.shape->id(e)] = x.shape->id(e);
    return x;
}

bool has_labels(const std::string& arg) { return fs::exists(arg) && load_json(arg).contains("labels"); }

Presentation load_presentation(const std::string& arg) {
    if (fs::exists(arg)) return presentation_from_json(load_json(arg));
    try {
        return builtin_pro(arg);
    } catch (const TheoryError&) {
        throw ParseError("'" + arg + "' is neither a file nor a built-in presentation");
    }
}

std::optional<DiagComplexPresentation> load_diag_complex(const std::string& arg) {
    if (fs::exists(arg)) {
        json j = load_json(arg);
        if (j.contains("cells")) return diag_complex_from_json(j);
        return std::nullopt;
    }
    if (arg == "MonComplex" || arg == "coMonComplex") return builtin_complex(arg);
    return std::nullopt;
}

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t pos = s.find(',', start);
        std::string part = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        if (!part.empty()) out.push_back(part);
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

ClosedSubset subset_of(const PosetPtr& p, const std::string& ids) {
    if (ids.empty()) return {p, p->all()};
    auto v = split_ids(ids);
    for (const auto& id : v)
        if (!p->find(id)) throw ParseError("unknown element '" + id + "'");
    return closure(p, v);
}

Molecule molecule_of(const PosetPtr& p, const std::string& ids) {
    auto rec = recognize(subset_of(p, ids));
    if (rec.status != Recognition::Molecule)
        throw SemanticFailure(std::string("not recognized as a molecule (") + to_string(rec.status) + ")");
    return *rec.molecule;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ogp: oriented graded posets, molecules, Gray products and presented theories"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    std::string in1, in2, ids, sign = "both", format = "json", out_dir = "fixtures", order, sep = kDefaultSeparator,
                                        cell;
    int dim = -1, k = 0;
    bool as_json = false, check = false, prop = false, cert = false, list = false, dot = false;

    auto* validate = app.add_subcommand("validate", "Check that every atom of a complex is a regular cell");
    validate->add_option("input", in1, "Complex JSON file or fixture name")->required();
    validate->add_flag("--json", as_json, "Full per-element report as JSON");

    auto* bnd = app.add_subcommand("boundary", "Boundary of a closed subset");
    bnd->add_option("input", in1, "Complex JSON file or fixture name")->required();
    bnd->add_option("-n,--dim", dim, "Boundary dimension (default: dim - 1)");
    bnd->add_option("--sign", sign, "-, + or both")->check(CLI::IsMember({"-", "+", "both"}));
    bnd->add_option("--ids", ids, "Comma-separated generators of the subset (default: everything)");

    auto* paste_cmd = app.add_subcommand("paste", "Paste two molecules along a k-boundary");
    paste_cmd->add_option("left", in1)->required();
    paste_cmd->add_option("right", in2)->required();
    paste_cmd->add_option("-k", k, "Pasting dimension")->required();
    paste_cmd->add_flag("--cert", cert, "Print the construction certificate instead");

    auto* atom_cmd = app.add_subcommand("atom", "Atom with the given molecules as input and output boundary");
    atom_cmd->add_option("input", in1)->required();
    atom_cmd->add_option("output", in2)->required();

    auto* compos_cmd = app.add_subcommand("compos", "Atom with the same boundary as a molecule");
    compos_cmd->add_option("input", in1)->required();

    auto* gray = app.add_subcommand("gray", "Gray product of two complexes");
    gray->add_option("left", in1)->required();
    gray->add_option("right", in2)->required();
    gray->add_flag("--check", check, "Validate the product");
    gray->add_option("--sep", sep, "Separator in product ids");

    auto* smash = app.add_subcommand("smash", "Smash product of labelled complexes or diagrammatic complexes");
    smash->add_option("left", in1)->required();
    smash->add_option("right", in2)->required();
    smash->add_option("--cell", cell, "Print the shape of one generating cell of the smash presentation");

    auto* tensor = app.add_subcommand("tensor", "Tensor product of two presented pros");
    tensor->add_option("left", in1, "Presentation JSON or built-in name")->required();
    tensor->add_option("right", in2)->required();
    tensor->add_flag("--prop", prop, "Quotient to a symmetric presentation");

    auto* interp = app.add_subcommand("interpret", "Interpret a 3-molecule in the free Gray-category");
    interp->add_option("input", in1)->required();
    interp->add_option("--order", order, "Comma-separated 2-order of the 3-cells");
    interp->add_option("--ids", ids, "Comma-separated generators of the molecule (default: everything)");
    interp->add_flag("--json", as_json, "Step list as JSON");

    auto* maxd_cmd = app.add_subcommand("maxd", "Maxd graph of a closed subset");
    maxd_cmd->add_option("input", in1)->required();
    maxd_cmd->add_option("-n,--dim", dim, "Graph dimension (default: frame dimension)");
    maxd_cmd->add_option("--ids", ids, "Comma-separated generators of the subset");
    maxd_cmd->add_flag("--dot", dot, "DOT output");

    auto* exp = app.add_subcommand("export", "Render a complex");
    exp->add_option("input", in1)->required();
    exp->add_option("--format", format, "json, dot or svg")->check(CLI::IsMember({"json", "dot", "svg"}));

    auto* fix = app.add_subcommand("fixtures", "Write the shipped fixtures as JSON");
    fix->add_option("--out", out_dir, "Output directory");
    fix->add_flag("--list", list, "Only list the fixture names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate) {
            auto x = load_complex(in1);
            auto rep = validate_complex(x.shape);
            if (as_json) {
                emit(report_to_json(rep));
            } else {
                std::cout << x.shape->name() << ": " << to_string(rep.overall);
                if (!rep.first_failure.empty()) std::cout << " (" << rep.first_failure << ")";
                std::cout << "\n";
            }
            return rep.overall == Status::Fail ? 1 : 0;
        }
        if (*bnd) {
            auto x = load_complex(in1);
            auto u = subset_of(x.shape, ids);
            int n = dim >= 0 ? dim : u.dim() - 1;
            Bits b = sign == "both" ? boundary(*x.shape, u.members, n)
                                    : boundary(*x.shape, u.members, n, sign == "+" ? Sign::Plus : Sign::Minus);
            emit(labelled_to_json(labelled_restrict(x, b)));
            return 0;
        }
        if (*paste_cmd || *atom_cmd) {
            auto a = load_complex(in1), b = load_complex(in2);
            Molecule m1 = molecule_of(a.shape, ""), m2 = molecule_of(b.shape, "");
            Molecule r = *paste_cmd ? paste(m1, m2, k) : cell_to(m1, m2);
            if (cert) emit(certificate_to_json(r.poset(), r.cert));
            else emit(complex_to_json(r.poset()));
            return 0;
        }
        if (*compos_cmd) {
            auto a = load_complex(in1);
            emit(complex_to_json(compos(molecule_of(a.shape, "")).poset()));
            return 0;
        }
        if (*gray) {
            auto a = load_complex(in1), b = load_complex(in2);
            if (has_labels(in1) || has_labels(in2)) {
                auto prod = gray_labelled(a, b, sep);
                if (check && validate_complex(prod.shape).overall == Status::Fail)
                    throw SemanticFailure("product failed validation");
                emit(labelled_to_json(prod));
            } else {
                emit(complex_to_json(gray_product(*a.shape, *b.shape, sep, check)));
            }
            return 0;
        }
        if (*smash) {
            auto dx = load_diag_complex(in1), dy = load_diag_complex(in2);
            if (dx && dy) {
                auto pres = presentation_of_smash(*dx, *dy);
                if (!cell.empty()) {
                    auto* c = pres.find(cell);
                    if (!c) throw ParseError("no generating cell named '" + cell + "'");
                    emit(labelled_to_json(c->cell));
                } else {
                    emit({{"name", pres.name}, {"inventory", inventory_to_json(pres.inventory())}});
                }
                return 0;
            }
            if (dx || dy) throw ParseError("smash: give two diagrammatic complexes or two labelled complexes");
            emit(labelled_to_json(smash_collapse(gray_labelled(load_complex(in1), load_complex(in2)))));
            return 0;
        }
        if (*tensor) {
            auto t = tensor_pros(load_presentation(in1), load_presentation(in2));
            if (prop) t = prop_quotient(t);
            emit(presentation_to_json(t));
            return 0;
        }
        if (*interp) {
            auto x = load_complex(in1);
            Molecule u = molecule_of(x.shape, ids);
            GrayContext ctx(x.shape);
            std::optional<KOrder> ord;
            if (!order.empty()) {
                KOrder o;
                o.k = 2;
                for (const auto& id : split_ids(order)) {
                    auto e = x.shape->find(id);
                    if (!e) throw ParseError("unknown element '" + id + "'");
                    o.sequence.push_back(*e);
                }
                if (!is_k_order(*x.shape, u.members(), o)) throw SemanticFailure("not a 2-order of the molecule");
                ord = o;
            }
            auto e = interpret(ctx, u, ord);
            if (as_json) emit(expr_to_json(e));
            else std::cout << e.str() << "\n";
            return 0;
        }
        if (*maxd_cmd) {
            auto x = load_complex(in1);
            auto u = subset_of(x.shape, ids);
            int n = dim >= 0 ? dim : std::max(frame_dimension(*x.shape, u.members), 0);
            auto g = maxd(*x.shape, u.members, n);
            if (dot) {
                std::cout << export_maxd_dot(*x.shape, g);
            } else {
                json vs = json::array(), es = json::array();
                for (size_t i = 0; i < g.vertices.size(); ++i)
                    vs.push_back({{"id", x.shape->id(g.vertices[i])}, {"high", static_cast<bool>(g.high[i])}});
                for (const auto& [a, b] : g.edges)
                    es.push_back({x.shape->id(g.vertices[a]), x.shape->id(g.vertices[b])});
                json j = {{"n", n}, {"vertices", vs}, {"edges", es}};
                if (auto c = maxd_cycle(g)) {
                    json cyc = json::array();
                    for (int v : *c) cyc.push_back(x.shape->id(v));
                    j["cycle"] = cyc;
                }
                emit(j);
            }
            return 0;
        }
        if (*exp) {
            auto x = load_complex(in1);
            if (format == "dot") std::cout << export_dot(*x.shape);
            else if (format == "svg") std::cout << export_svg_2diagram(x);
            else emit(has_labels(in1) ? labelled_to_json(x) : complex_to_json(*x.shape));
            return 0;
        }
        if (*fix) {
            if (list) {
                for (const auto& f : fixture_list()) std::cout << f.name << "\t" << f.comment << "\n";
                return 0;
            }
            fs::create_directories(out_dir);
            for (const auto& f : fixture_list()) {
                json j = complex_to_json(fixture(f.name));
                j["comment"] = f.comment;
                std::string file = f.name;
                std::replace(file.begin(), file.end(), ',', '_');
                write_file((fs::path(out_dir) / (file + ".json")).string(), j.dump(2) + "\n");
            }
            for (const auto& n : builtin_names()) {
                json j;
                if (n == "MonComplex" || n == "coMonComplex") j = diag_complex_to_json(builtin_complex(n));
                else j = presentation_to_json(builtin_pro(n));
                write_file((fs::path(out_dir) / (n + ".json")).string(), j.dump(2) + "\n");
            }
            std::cout << "wrote fixtures to " << out_dir << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SemanticFailure& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
