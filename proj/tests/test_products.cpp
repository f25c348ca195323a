#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ogp/theories.hpp"
#include "ogp/validate.hpp"
#include "support.hpp"

using namespace ogp;
using namespace testsupport;

TEST_CASE("O1 x O1 is a square with the twisted boundary") {
    Poset o1 = globe(1);
    auto sq = share(gray_product(o1, o1));
    CHECK(sq->size() == 9);
    CHECK(sq->dim() == 2);
    Bits all = sq->all();
    Bits in = boundary(*sq, all, 1, Sign::Minus), out = boundary(*sq, all, 1, Sign::Plus);
    CHECK(in == closure(sq, {"0-⊗1", "1⊗0+"}).members);
    CHECK(out == closure(sq, {"1⊗0-", "0+⊗1"}).members);
    // input runs through the corner 0-/0+, output through 0+/0-
    auto k0 = k_order(*sq, in, 0);
    REQUIRE(k0);
    CHECK(k0->ids(*sq) == std::vector<std::string>{"0-⊗1", "1⊗0+"});
    CHECK(validate_complex(sq).overall == Status::Pass);
}

TEST_CASE("products of small atoms are regular and have additive dimension") {
    std::vector<Poset> fs = {globe(0), globe(1), globe(2), arrow_atom(2, 1).poset(), interval_chain(2).poset()};
    for (const auto& p : fs)
        for (const auto& q : fs) {
            auto pq = share(gray_product(p, q));
            CHECK(pq->size() == p.size() * q.size());
            CHECK(pq->dim() == p.dim() + q.dim());
            CHECK(validate_complex(pq).overall == Status::Pass);
            CHECK_NOTHROW(gray_projections(*pq, p, q));
            CHECK(recognize({pq, pq->all()}).status == Recognition::Molecule);
        }
}

TEST_CASE("product with a point is the identity up to ids") {
    Poset u = arrow_atom(2, 1).poset();
    auto a = share(gray_product(globe(0), u)), b = share(u);
    CHECK(unique_iso(ClosedSubset{a, a->all()}, ClosedSubset{b, b->all()}).has_value());
}

TEST_CASE("smash collapse and generator inventory") {
    LabelledComplex o1;
    o1.shape = share(globe(1));
    o1.labels = {{"0-", "•"}, {"0+", "•"}, {"1", "a"}};
    auto sq = smash_collapse(gray_labelled(o1, o1));
    int collapsed = 0;
    for (const auto& [id, l] : sq.labels) collapsed += l == "•";
    CHECK(collapsed == 8);
    CHECK(sq.labels.at("1⊗1") == "a⊗a");
    CHECK(has_basepoint_coordinate("•⊗μ"));
    CHECK_FALSE(has_basepoint_coordinate("1⊗μ"));

    Inventory a{{0, {"•"}}, {1, {"1"}}, {2, {"μ", "η"}}};
    Inventory b{{0, {"•"}}, {1, {"x", "y"}}, {3, {"t"}}};
    auto s = smash_generators(a, b);
    // convolution of the non-basepoint counts, plus the basepoint
    std::map<int, int> expect{{0, 1}};
    for (const auto& [da, xa] : a)
        for (const auto& [db, xb] : b) {
            int na = da == 0 ? 0 : static_cast<int>(xa.size()), nb = db == 0 ? 0 : static_cast<int>(xb.size());
            if (na * nb) expect[da + db] += na * nb;
        }
    std::map<int, int> got;
    for (const auto& [d, v] : s) got[d] = static_cast<int>(v.size());
    CHECK(got == expect);
}
