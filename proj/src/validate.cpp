#include "ogp/validate.hpp"

#include <algorithm>

namespace ogp {

const char* to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unknown: return "unknown";
    case Status::NotApplicable: return "n/a";
    }
    return "?";
}

namespace {

Status from_recognition(Recognition r) {
    switch (r) {
    case Recognition::Molecule: return Status::Pass;
    case Recognition::NotMolecule: return Status::Fail;
    default: return Status::Unknown;
    }
}

}  // namespace

ValidationReport validate_complex(const PosetPtr& pp) {
    const Poset& p = *pp;
    ValidationReport rep;
    std::vector<int> order(p.size());
    for (int i = 0; i < p.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return p.id(a) < p.id(b); });
    bool unknown = false;
    for (int x : order) {
        ElementReport e;
        e.id = p.id(x);
        e.dim = p.dim(x);
        int n = e.dim;
        if (n >= 1) {
            Bits cx = atom_of(p, x);
            e.spherical = spherical(p, cx) ? Status::Pass : Status::Fail;
            Bits in = boundary(p, cx, n - 1, Sign::Minus), out = boundary(p, cx, n - 1, Sign::Plus);
            e.input_molecule = from_recognition(recognize({pp, in}).status);
            e.output_molecule = from_recognition(recognize({pp, out}).status);
            if (n >= 2) {
                e.globular = Status::Pass;
                for (Sign a : {Sign::Minus, Sign::Plus}) {
                    Bits want = boundary(p, cx, n - 2, a);
                    if (boundary(p, in, n - 2, a) != want || boundary(p, out, n - 2, a) != want)
                        e.globular = Status::Fail;
                }
            }
            const std::pair<const char*, Status> checks[] = {{"spherical boundary", e.spherical},
                                                             {"input boundary is a molecule", e.input_molecule},
                                                             {"output boundary is a molecule", e.output_molecule},
                                                             {"globularity", e.globular}};
            for (const auto& [what, st] : checks) {
                if (st == Status::Fail && rep.first_failure.empty()) rep.first_failure = e.id + ": " + what;
                if (st == Status::Unknown) unknown = true;
            }
        }
        rep.elements.push_back(e);
    }
    if (!rep.first_failure.empty()) rep.overall = Status::Fail;
    else if (unknown) rep.overall = Status::Unknown;
    return rep;
}

}  // namespace ogp
