#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ogp/io.hpp"
#include "support.hpp"

using namespace ogp;
using namespace testsupport;

TEST_CASE("complex JSON round trip is canonical") {
    for (const auto& f : fixture_list()) {
        Poset p = fixture(f.name);
        std::string s = serialize_complex(p);
        Poset q = parse_complex_text(s);
        CHECK(serialize_complex(q) == s);
    }
    // element and cover order in the input do not matter
    std::string messy = R"({"name":"O1","elements":[{"id":"1","dim":1,"covers":[{"id":"0+","sign":"+"},{"id":"0-","sign":"-"}]},
        {"id":"0+","dim":0,"covers":[]},{"id":"0-","dim":0}]})";
    CHECK(serialize_complex(parse_complex_text(messy)) == serialize_complex(globe(1)));
}

TEST_CASE("parse errors name the element") {
    try {
        parse_complex_text(R"({"elements":[{"id":"e","dim":1,"covers":[{"id":"v","sign":"-"}]}]})");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("e") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_complex_text("{"), ParseError);
    CHECK_THROWS_AS(parse_complex_text(R"({"elements":[{"id":"v"}]})"), ParseError);
    CHECK_THROWS_AS(parse_complex_text(R"({"elements":[{"id":"v","dim":0,"covers":[{"id":"v","sign":"x"}]}]})"),
                    ParseError);
}

TEST_CASE("presentation JSON round trip") {
    for (const auto& name : {"N", "Mon", "coMon", "BialgExpected"}) {
        auto p = builtin_pro(name);
        auto j = presentation_to_json(p);
        auto q = presentation_from_json(j);
        CHECK(q == p);
        CHECK(presentation_to_json(q).dump() == j.dump());
    }
    auto t = prop_quotient(tensor_pros(builtin_pro("Mon"), builtin_pro("Mon")));
    CHECK(presentation_from_json(presentation_to_json(t)) == t);
}

TEST_CASE("labelled and diagrammatic complexes round trip") {
    auto mc = builtin_complex("MonComplex");
    auto j = diag_complex_to_json(mc);
    auto back = diag_complex_from_json(j);
    CHECK(diag_complex_to_json(back).dump() == j.dump());
    CHECK(back.inventory() == mc.inventory());
}

TEST_CASE("certificates serialize as trees") {
    Molecule m = interval_chain(2);
    auto j = certificate_to_json(m.poset(), m.cert);
    CHECK(j["paste"]["k"] == 0);
    CHECK(j["paste"]["left"].contains("atom"));
}

TEST_CASE("DOT export") {
    std::string d = export_dot(globe(2));
    int nodes = 0, edges = 0;
    for (size_t pos = 0; (pos = d.find("->", pos)) != std::string::npos; ++pos) ++edges;
    for (const char* id : {"\"0-\"", "\"0+\"", "\"1-\"", "\"1+\"", "\"2\""}) nodes += d.find(id) != std::string::npos;
    CHECK(nodes == 5);
    CHECK(edges == 6);
    Poset empty = Poset::make("empty", {});
    CHECK(export_dot(empty).find("->") == std::string::npos);
    auto p = fix_power();
    CHECK(export_maxd_dot(p, maxd(p, p.all(), 2)).find("shape=box") != std::string::npos);
}

TEST_CASE("SVG export") {
    std::string one = export_svg_2diagram(globe(1));
    CHECK(one.find("<polyline") != std::string::npos);
    CHECK(one.find("<circle") == std::string::npos);
    std::string mu = export_svg_2diagram(arrow_atom(2, 1).poset());
    size_t lines = 0;
    for (size_t pos = 0; (pos = mu.find("<polyline", pos)) != std::string::npos; ++pos) ++lines;
    CHECK(lines == 3);
    CHECK(mu.find("<circle") != std::string::npos);
    // collapsed cells: dashed wires, no node
    LabelledComplex o1;
    o1.shape = share(globe(1));
    o1.labels = {{"0-", "•"}, {"0+", "•"}, {"1", "a"}};
    LabelledComplex pt;
    pt.shape = share(globe(1));
    pt.labels = {{"0-", "•"}, {"0+", "•"}, {"1", "•"}};
    auto sq = smash_collapse(gray_labelled(o1, pt));
    std::string s = export_svg_2diagram(sq);
    CHECK(s.find("stroke-dasharray") != std::string::npos);
    CHECK(s.find("<circle") == std::string::npos);
    CHECK_THROWS(export_svg_2diagram(globe(3)));
}

TEST_CASE("expression JSON") {
    auto p = share(fix_frob());
    GrayContext ctx(p);
    auto e = interpret(ctx, as_molecule({p, p->all()}));
    auto j = expr_to_json(e);
    CHECK(j["text"] == e.str());
    CHECK(j["steps"].size() == 4);
    CHECK(j["steps"][2]["apply"]["atom"] == "φ");
}
