#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ogp/graycat.hpp"
#include "support.hpp"

using namespace ogp;
using namespace testsupport;

namespace {

using Ids = std::vector<std::string>;

struct Frob {
    PosetPtr p = share(fix_frob());
    Molecule u = as_molecule({p, p->all()});
    GrayContext ctx{p};
    Bits in = boundary(*p, p->all(), 2, Sign::Minus);
    Bits out = boundary(*p, p->all(), 2, Sign::Plus);
    KOrder order(const char* a, const char* b) const { return KOrder{2, {p->at(a), p->at(b)}}; }
};

}  // namespace

TEST_CASE("interchanger paths") {
    Frob f;
    auto e = f.ctx.interchanger_path(f.in, {"x", "z", "w", "y"}, {"x", "y", "z", "w"});
    CHECK(e.str() == "χ[w,y] ; χ[z,y]");
    CHECK(nf_source(e).order == Ids{"x", "z", "w", "y"});
    CHECK(nf_target(e).order == Ids{"x", "y", "z", "w"});
    // weight counts inversions against the normal order
    CHECK(f.ctx.inversion_weight(nf_source(e)) == 0);
    CHECK(f.ctx.inversion_weight(nf_target(e)) == 2);
    auto back = f.ctx.interchanger_path(f.in, {"x", "y", "z", "w"}, {"x", "z", "w", "y"});
    CHECK(back.str() == "χ⁻¹[z,y] ; χ⁻¹[w,y]");
    CHECK(cancel_inverses(compose(e, back)).steps.empty());
    CHECK(f.ctx.interchanger_path(f.in, {"x", "z", "w", "y"}, {"x", "z", "w", "y"}).steps.empty());
    // y before x is not a 1-order: x feeds h into y
    CHECK_THROWS(f.ctx.interchanger_path(f.in, {"y", "x", "z", "w"}, {"x", "z", "w", "y"}));
}

TEST_CASE("default context order collapses the input of the atom last") {
    Frob f;
    CHECK(f.ctx.default_context(f.in, f.p->at("φ")) == Ids{"x", "y", "⟨φ⟩"});
    Bits mid = (f.in - (boundary(*f.p, atom_of(*f.p, f.p->at("φ")), 2, Sign::Minus) -
                        boundary(*f.p, atom_of(*f.p, f.p->at("φ")), 1))) |
               boundary(*f.p, atom_of(*f.p, f.p->at("φ")), 2, Sign::Plus);
    CHECK(f.ctx.default_context(mid, f.p->at("ψ")) == Ids{"⟨ψ⟩", "z'", "w'"});
}

TEST_CASE("interpretation of a single atom in context") {
    Frob f;
    auto parts = frame_decomposition(f.u, 2, f.order("φ", "ψ"));
    auto e = interpret_atom_in_context(f.ctx, parts[0], Ids{"x", "y", "⟨φ⟩"});
    CHECK(e.str() == "χ[w,y] ; χ[z,y] ; c[φ] ; χ⁻¹[z',y] ; χ⁻¹[w',y]");
    CHECK(nf_source(e).order == Ids{"x", "z", "w", "y"});
    CHECK(nf_target(e).order == Ids{"x", "z'", "w'", "y"});
    // the other context order needs no interchangers before the application
    auto e2 = interpret_atom_in_context(f.ctx, parts[0], Ids{"x", "⟨φ⟩", "y"});
    CHECK(e2.str() == "c[φ]");
    CHECK(expr_equal(f.ctx, e, e2));
    CHECK_THROWS(interpret_atom_in_context(f.ctx, parts[0], Ids{"⟨φ⟩", "x", "y"}));
}

TEST_CASE("FROB interpretation") {
    Frob f;
    auto e = interpret(f.ctx, f.u, f.order("φ", "ψ"));
    CHECK(e.str() == "χ[w,y] ; χ[z,y] ; c[φ] ; c[ψ]");
    CHECK(nf_source(e).order == Ids{"x", "z", "w", "y"});
    CHECK(nf_target(e).order == Ids{"x'", "y'", "z'", "w'"});
    auto e2 = interpret(f.ctx, f.u, f.order("ψ", "φ"));
    CHECK(expr_equal(f.ctx, e, e2));
    // the default 2-order is the first one
    CHECK(interpret(f.ctx, f.u) == e);
}

TEST_CASE("normalization keeps dependent applications in order and is idempotent") {
    Frob f;
    auto e = interpret(f.ctx, f.u, f.order("ψ", "φ"));
    auto n = expr_normalize(f.ctx, e);
    CHECK(expr_normalize(f.ctx, n) == n);
    CHECK(nf_source(n) == nf_source(e));
    CHECK(nf_target(n) == nf_target(e));
    // an interchanger composite is not equal to the identity
    auto path = f.ctx.interchanger_path(f.in, {"x", "z", "w", "y"}, {"x", "y", "z", "w"});
    GrayExpr3 id;
    id.source = id.target = f.ctx.normal(f.in);
    CHECK_FALSE(expr_equal(f.ctx, path, id));
}

TEST_CASE("interpretation of the POWER molecule") {
    auto p = share(fix_power());
    Molecule u = as_molecule({p, p->all()});
    GrayContext ctx(p);
    auto e = interpret(ctx, u);
    int apps = 0;
    for (const auto& s : e.steps) apps += s.kind == Step::Kind::Apply;
    CHECK(apps == 4);
    CHECK(nf_source(e) == ctx.normal(boundary(*p, p->all(), 2, Sign::Minus)));
    CHECK(nf_target(e) == ctx.normal(boundary(*p, p->all(), 2, Sign::Plus)));
}
