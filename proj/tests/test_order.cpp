#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace ogp;
using namespace testsupport;

namespace {

std::vector<std::string> ids(const Poset& p, const std::vector<int>& xs) {
    std::vector<std::string> out;
    for (int x : xs) out.push_back(p.id(x));
    return out;
}

// Reachability in a Maxd graph, by plain DFS.
bool reaches(const MaxdGraph& g, int from, int to) {
    auto adj = g.adjacency();
    std::vector<bool> seen(g.vertices.size(), false);
    std::vector<int> stack{g.local(from)};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (seen[v]) continue;
        seen[v] = true;
        for (int w : adj[v]) stack.push_back(w);
    }
    return seen[g.local(to)];
}

}  // namespace

TEST_CASE("normal 1-orders of the FROB boundaries") {
    auto p = share(fix_frob());
    Bits all = p->all();
    auto in = normal_1_order(*p, boundary(*p, all, 2, Sign::Minus));
    auto out = normal_1_order(*p, boundary(*p, all, 2, Sign::Plus));
    CHECK(ids(*p, in.sequence) == std::vector<std::string>{"x", "z", "w", "y"});
    CHECK(ids(*p, out.sequence) == std::vector<std::string>{"x'", "y'", "z'", "w'"});
}

TEST_CASE("frame dimension and decomposition of FROB") {
    auto p = share(fix_frob());
    Molecule u = as_molecule({p, p->all()});
    CHECK(frame_dimension(*p, p->all()) == 1);
    auto ko = k_order(*p, p->all(), 2);
    REQUIRE(ko);
    CHECK(ko->ids(*p) == std::vector<std::string>{"φ", "ψ"});
    auto parts = frame_decomposition(u, 2, *ko);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].members().test(p->at("φ")));
    CHECK(parts[1].members().test(p->at("ψ")));
    // consecutive pieces meet in a 2-boundary
    CHECK((parts[0].members() & parts[1].members()) == boundary(*p, parts[0].members(), 2, Sign::Plus));
    // both orders of the two 3-cells are 2-orders
    CHECK(is_k_order(*p, p->all(), KOrder{2, {p->at("ψ"), p->at("φ")}}));
}

TEST_CASE("frame dimension of a single atom and of disjoint cells") {
    Poset o2 = globe(2);
    CHECK(frame_dimension(o2, o2.all()) == -1);
    Molecule h = paste(arrow_atom(1, 1), arrow_atom(1, 1), 0);
    CHECK(frame_dimension(h.poset(), h.members()) == 0);
    Molecule v = paste(arrow_atom(2, 1), arrow_atom(1, 2), 1);
    CHECK(frame_dimension(v.poset(), v.members()) == 1);
}

TEST_CASE("Maxd graphs have the expected vertex sets") {
    Molecule v = paste(arrow_atom(2, 1), arrow_atom(1, 2), 1);
    auto g = maxd(v.poset(), v.members(), 1);
    int high = 0;
    for (bool h : g.high) high += h;
    CHECK(high == 2);
    CHECK(g.vertices.size() == 2 + 4 + 5);  // two 2-cells, 4 vertices (each side has a middle one), 5 edges
    CHECK_FALSE(maxd_cycle(g));
    // the lower cell reaches the upper one through the shared edge
    int lower = v.poset().at("left/top"), upper = v.poset().at("right/top");
    CHECK(reaches(g, lower, upper));
    CHECK_FALSE(reaches(g, upper, lower));
}

TEST_CASE("loop-freeness and Maxd paths on random 2-molecules") {
    MoleculeGen gen(7);
    for (int i = 0; i < 40; ++i) {
        Molecule m = gen.random_2molecule();
        const Poset& p = m.poset();
        auto lf = totally_loop_free(p, m.members());
        REQUIRE(lf.acyclic);
        CHECK(lf.total);
        auto top = maximal(p, m.members());
        for (int n = 0; n <= 1; ++n) {
            auto g = maxd(p, m.members(), n);
            for (int x : top)
                for (int y : top)
                    if (x != y && g.local(x) >= 0 && g.local(y) >= 0 && reaches(g, x, y)) CHECK(lf.precedes(x, y));
        }
    }
}

TEST_CASE("slice decomposition of a vertical composite") {
    Molecule v = paste(arrow_atom(2, 1), arrow_atom(1, 2), 1);
    const Poset& p = v.poset();
    Bits mid = boundary(p, atom_of(p, p.at("left/top")), 1, Sign::Plus);
    auto [lower, upper] = slice_decomposition(v, {v.subset.parent, mid});
    CHECK(lower.members() == atom_of(p, p.at("left/top")));
    CHECK(upper.members() == atom_of(p, p.at("right/top")));
    // an independent decomposition with the same interface is the same one
    CHECK((lower.members() | upper.members()) == v.members());
    CHECK((lower.members() & upper.members()) == mid);
}

TEST_CASE("frame acyclicity holds on small validated complexes") {
    for (const char* name : {"O3", "U2,2", "I3", "FROB", "POWER"}) {
        auto r = frame_acyclic(share(fixture(name)), 3000);
        CHECK_MESSAGE(r.acyclic, name);
    }
}

TEST_CASE("simultaneous substitution counterexample") {
    auto p = share(fix_power());
    Molecule u = as_molecule({p, p->all()});
    auto r = check_sim_substitution(u, closure(p, {"λ", "τ"}), closure(p, {"ρ", "β"}));
    CHECK(r.hypotheses_ok);
    CHECK_FALSE(r.holds);
    CHECK(r.witness_path == std::vector<std::string>{"ρ", "y", "⟨V⟩", "x", "β"});
}

TEST_CASE("simultaneous substitution of disjoint 3-cells holds in FROB") {
    auto p = share(fix_frob());
    Molecule u = as_molecule({p, p->all()});
    auto r = check_sim_substitution(u, closure(p, {"φ"}), closure(p, {"ψ"}));
    CHECK(r.hypotheses_ok);
    CHECK(r.holds);
}
