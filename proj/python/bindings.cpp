// Python module: thin JSON-in/JSON-out wrappers around the library.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ogp/fixtures.hpp"
#include "ogp/io.hpp"

namespace py = pybind11;
using namespace ogp;

namespace {

// JSON text of a complex, or a fixture name
PosetPtr complex_arg(const std::string& s) {
    if (!s.empty() && s.front() == '{') return std::make_shared<const Poset>(parse_complex_text(s));
    try {
        return std::make_shared<const Poset>(fixture(s));
    } catch (const std::invalid_argument&) {
        throw ParseError("'" + s + "' is neither complex JSON nor a fixture name");
    }
}

Presentation pro_arg(const std::string& s) {
    if (!s.empty() && s.front() == '{') return presentation_from_json(json::parse(s));
    return builtin_pro(s);
}

DiagComplexPresentation diag_arg(const std::string& s) {
    if (!s.empty() && s.front() == '{') return diag_complex_from_json(json::parse(s));
    return builtin_complex(s);
}

ClosedSubset subset(const PosetPtr& p, const std::vector<std::string>& ids) {
    if (ids.empty()) return {p, p->all()};
    for (const auto& id : ids)
        if (!p->find(id)) throw ParseError("unknown element '" + id + "'");
    return closure(p, ids);
}

Molecule molecule(const PosetPtr& p, const std::vector<std::string>& ids) { return as_molecule(subset(p, ids)); }

std::string dump(const json& j) { return j.dump(); }

PyObject* parse_exc = nullptr;

}  // namespace

PYBIND11_MODULE(_ogp, m) {
    m.doc() = "oriented graded posets, molecules, Gray products and presented theories";

    parse_exc = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError).ptr();
    py::register_exception<MoleculeError>(m, "MoleculeError", PyExc_RuntimeError);
    py::register_exception<TheoryError>(m, "TheoryError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const StructuralError& e) {
            PyErr_SetString(parse_exc, e.what());
        } catch (const json::exception& e) {
            PyErr_SetString(parse_exc, e.what());
        }
    });

    m.def("fixture_names", [] {
        std::vector<std::string> out;
        for (const auto& f : fixture_list()) out.push_back(f.name);
        return out;
    });
    m.def("fixture", [](const std::string& name) { return serialize_complex(*complex_arg(name)); });

    m.def("validate", [](const std::string& c) { return dump(report_to_json(validate_complex(complex_arg(c)))); });

    m.def(
        "boundary",
        [](const std::string& c, int n, const std::string& sign, const std::vector<std::string>& ids) {
            auto p = complex_arg(c);
            auto u = subset(p, ids);
            std::optional<Sign> a;
            if (sign == "-") a = Sign::Minus;
            else if (sign == "+") a = Sign::Plus;
            else if (sign != "both") throw ParseError("sign must be -, + or both");
            if (n < 0) n = u.dim() - 1;
            return boundary(u, n, a).ids();
        },
        py::arg("complex"), py::arg("n") = -1, py::arg("sign") = "both", py::arg("ids") = std::vector<std::string>{});

    m.def(
        "recognize",
        [](const std::string& c, const std::vector<std::string>& ids) {
            auto p = complex_arg(c);
            auto r = recognize(subset(p, ids));
            json j;
            j["status"] = to_string(r.status);
            if (r.molecule) j["certificate"] = certificate_to_json(*p, r.molecule->cert);
            return dump(j);
        },
        py::arg("complex"), py::arg("ids") = std::vector<std::string>{});

    m.def(
        "paste",
        [](const std::string& a, const std::string& b, int k) {
            return serialize_complex(paste(molecule(complex_arg(a), {}), molecule(complex_arg(b), {}), k).poset());
        },
        py::arg("left"), py::arg("right"), py::arg("k"));
    m.def("atom", [](const std::string& a, const std::string& b) {
        return serialize_complex(cell_to(molecule(complex_arg(a), {}), molecule(complex_arg(b), {})).poset());
    });
    m.def("compos", [](const std::string& a) { return serialize_complex(compos(molecule(complex_arg(a), {})).poset()); });

    m.def("gray", [](const std::string& a, const std::string& b) {
        return serialize_complex(gray_product(*complex_arg(a), *complex_arg(b)));
    });

    m.def(
        "interpret",
        [](const std::string& c, const std::vector<std::string>& order) {
            auto p = complex_arg(c);
            GrayContext ctx(p);
            Molecule u = molecule(p, {});
            std::optional<KOrder> ko;
            if (!order.empty()) {
                ko = KOrder{2, {}};
                for (const auto& id : order) ko->sequence.push_back(p->at(id));
            }
            return dump(expr_to_json(interpret(ctx, u, ko)));
        },
        py::arg("complex"), py::arg("order") = std::vector<std::string>{});

    m.def(
        "maxd_dot",
        [](const std::string& c, int n) {
            auto p = complex_arg(c);
            if (n < 0) n = frame_dimension(*p, p->all());
            return export_maxd_dot(*p, maxd(*p, p->all(), n));
        },
        py::arg("complex"), py::arg("n") = -1);

    m.def("export_dot", [](const std::string& c) { return export_dot(*complex_arg(c)); });
    m.def("export_svg", [](const std::string& c) { return export_svg_2diagram(*complex_arg(c)); });

    m.def(
        "tensor",
        [](const std::string& a, const std::string& b, bool prop) {
            auto t = tensor_pros(pro_arg(a), pro_arg(b));
            if (prop) t = prop_quotient(t);
            return dump(presentation_to_json(t));
        },
        py::arg("left"), py::arg("right"), py::arg("prop") = false);

    m.def("smash", [](const std::string& a, const std::string& b) {
        return dump(diag_complex_to_json(presentation_of_smash(diag_arg(a), diag_arg(b))));
    });

    m.def("perm_decompose", [](const std::vector<int>& images) { return perm_decompose(make_permutation(images)); });
    m.def("inversion_count", [](const std::vector<int>& images) { return inversion_count(make_permutation(images)); });
}
