#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace ogp;
using namespace testsupport;

namespace {

Bits ids_to_bits(const Poset& p, std::initializer_list<const char*> ids) {
    Bits b = p.empty();
    for (auto id : ids) b.set(p.at(id));
    return b;
}

}  // namespace

TEST_CASE("poset construction rejects malformed encodings") {
    CHECK_THROWS_AS(Poset::make("x", {{"a", 0, {}}, {"a", 0, {}}}), StructuralError);
    CHECK_THROWS_AS(Poset::make("x", {{"e", 1, {{"nope", Sign::Minus}}}}), StructuralError);
    // grading: a 2-cell covering a 0-cell
    CHECK_THROWS_AS(Poset::make("x", {{"v", 0, {}}, {"f", 2, {{"v", Sign::Minus}}}}), StructuralError);
    CHECK_THROWS_AS(Poset::make("x", {{"v", 0, {}}, {"e", 1, {{"v", Sign::Minus}, {"v", Sign::Plus}}}}),
                    StructuralError);
    CHECK_THROWS_AS(Poset::make("x", {{"v", -1, {}}}), StructuralError);
    CHECK_THROWS_AS(Poset::make("x", {{"e", 1, {}}}), StructuralError);
}

TEST_CASE("globe boundaries by hand") {
    Poset o2 = globe(2);
    CHECK(o2.size() == 5);
    Bits all = o2.all();
    CHECK(boundary(o2, all, 1, Sign::Minus) == ids_to_bits(o2, {"1-", "0-", "0+"}));
    CHECK(boundary(o2, all, 1, Sign::Plus) == ids_to_bits(o2, {"1+", "0-", "0+"}));
    CHECK(boundary(o2, all, 0, Sign::Minus) == ids_to_bits(o2, {"0-"}));
    CHECK(boundary(o2, all, 0, Sign::Plus) == ids_to_bits(o2, {"0+"}));
    CHECK(boundary(o2, all, -1, Sign::Plus).none());
    // at or above the dimension the boundary is everything
    CHECK(boundary(o2, all, 2, Sign::Minus) == all);
    CHECK(boundary(o2, all, 1) == ids_to_bits(o2, {"1-", "1+", "0-", "0+"}));
}

TEST_CASE("library boundary agrees with the definition on all closed subsets") {
    for (const char* name : {"O3", "U2,1", "U2,2", "I3", "FROB"}) {
        Poset p = fixture(name);
        auto subsets = closed_subsets(p);
        if (subsets.size() > 4000) subsets.resize(4000);
        for (const auto& u : subsets)
            for (int n = -1; n <= naive_dim(p, u); ++n)
                for (Sign a : {Sign::Minus, Sign::Plus}) REQUIRE(boundary(p, u, n, a) == naive_boundary(p, u, n, a));
    }
}

TEST_CASE("dual flips the chosen dimensions") {
    Poset o1 = globe(1);
    Poset d = dual(o1);
    CHECK(d.orientation(d.at("1"), d.at("0-")) == Sign::Plus);
    Poset o2 = globe(2);
    Poset d2 = dual(o2, {2});
    CHECK(d2.orientation(d2.at("2"), d2.at("1-")) == Sign::Plus);
    CHECK(d2.orientation(d2.at("1-"), d2.at("0-")) == Sign::Minus);
}

TEST_CASE("oriented Hasse diagram of O2") {
    Poset o2 = globe(2);
    auto h = oriented_hasse(o2);
    CHECK(h.edges.size() == 6);
    CHECK_FALSE(has_cycle(h.adjacency()));
}

TEST_CASE("element counts of builders") {
    CHECK(globe_molecule(0).size() == 1);
    CHECK(globe_molecule(4).size() == 9);
    for (int n = 1; n <= 5; ++n) CHECK(interval_chain(n).size() == 2 * n + 1);
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) CHECK(arrow_atom(n, m).size() == 2 * n + 2 * m + 1);
    CHECK(arrow_atom(3, 2).size() == 11);
}

TEST_CASE("paste counts and boundary mismatch") {
    Molecule a = arrow_atom(2, 1), b = arrow_atom(1, 2);
    Molecule m = paste(a, b, 1);
    // |u1| + |u2| - |output 1-boundary of u1|
    CHECK(m.size() == 7 + 7 - 3);
    CHECK(m.dim() == 2);
    CHECK(check_certificate(m.poset(), m.cert, m.members()).empty());
    CHECK_THROWS_AS(paste(a, a, 1), MoleculeError);
    CHECK_THROWS_AS(paste(a, b, 2), std::exception);
    Molecule h = paste(a, a, 0);
    CHECK(h.size() == 13);
}

TEST_CASE("cell_to and compos") {
    Molecule c = cell_to(interval_chain(2), interval_chain(2));
    CHECK(c.size() == 9);
    CHECK(c.cert->kind == Certificate::Kind::Atom);
    Molecule m = paste(arrow_atom(2, 1), arrow_atom(1, 2), 1);
    Molecule k = compos(m);
    CHECK(k.size() == 9);
    CHECK(unique_iso(k, arrow_atom(2, 2)).has_value());
    CHECK_THROWS_AS(cell_to(interval_chain(2), globe_molecule(2)), MoleculeError);
}

TEST_CASE("recognize agrees with the brute-force definition") {
    for (const char* name : {"O2", "U2,1", "I3", "U2,2"}) {
        auto p = share(fixture(name));
        BruteMolecules brute(*p);
        for (const auto& u : brute.closed()) {
            auto r = recognize({p, u});
            bool expect = brute.is_molecule(u);
            REQUIRE(r.status != Recognition::Unknown);
            CHECK(expect == (r.status == Recognition::Molecule));
            if (r.molecule) CHECK(check_certificate(*p, r.molecule->cert, u).empty());
        }
    }
    // a pasted complex has more interesting subsets
    Molecule m = paste(arrow_atom(2, 1), arrow_atom(1, 2), 1);
    BruteMolecules brute(m.poset());
    for (const auto& u : brute.closed()) {
        auto r = recognize({m.subset.parent, u});
        CHECK(brute.is_molecule(u) == (r.status == Recognition::Molecule));
    }
}

TEST_CASE("recognize recovers the certificate of I2") {
    Molecule i2 = interval_chain(2);
    auto r = recognize({i2.subset.parent, i2.members()});
    REQUIRE(r.molecule);
    CHECK(r.molecule->cert->kind == Certificate::Kind::Paste);
    CHECK(r.molecule->cert->k == 0);
}

TEST_CASE("spherical boundary") {
    CHECK(spherical(paste(arrow_atom(2, 1), arrow_atom(1, 2), 1).subset));
    // horizontal composites meet in the middle vertex
    CHECK_FALSE(spherical(paste(arrow_atom(1, 1), arrow_atom(1, 1), 0).subset));
    CHECK_FALSE(spherical(paste(globe_molecule(2), globe_molecule(1), 0).subset));
    CHECK(spherical(interval_chain(3).subset));
}

TEST_CASE("substitution keeps host ids") {
    Molecule m = paste(arrow_atom(2, 1), arrow_atom(1, 2), 1);
    Molecule k = compos(m);
    Molecule big = paste(m, globe_molecule(2), 0);
    ClosedSubset v{big.subset.parent, big.members()};
    // substitute the left part by its composite
    Bits left = big.poset().empty();
    for (int x = 0; x < big.poset().size(); ++x)
        if (big.poset().id(x).rfind("left/", 0) == 0) left.set(x);
    left = closure(big.poset(), left);
    Molecule s = substitute(big, {big.subset.parent, left}, k.subset);
    CHECK(s.size() == big.size() - m.size() + k.size());
    CHECK(s.poset().find("right/2").has_value());
}

TEST_CASE("enumerate molecules in small complexes") {
    CHECK(enumerate_molecules(share(globe(2))).molecules.size() == 5);
    CHECK(enumerate_molecules(interval_chain(2).subset.parent).molecules.size() == 6);
}
