#include "ogp/fixtures.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace ogp {

Poset build_cells(const std::string& name, const std::vector<CellRow>& rows) {
    std::vector<ElementSpec> specs;
    for (const auto& r : rows) {
        ElementSpec e{r.id, r.dim, {}};
        for (const auto& x : r.in) e.covers.emplace_back(x, Sign::Minus);
        for (const auto& x : r.out) e.covers.emplace_back(x, Sign::Plus);
        specs.push_back(std::move(e));
    }
    return Poset::make(name, specs);
}

Poset fix_frob() {
    return build_cells("FROB", {
        {"L", 0, {}, {}}, {"P", 0, {}, {}}, {"Q", 0, {}, {}},
        {"S", 0, {}, {}}, {"T", 0, {}, {}}, {"R", 0, {}, {}},
        {"a", 1, {"L"}, {"P"}}, {"p", 1, {"L"}, {"Q"}}, {"m", 1, {"P"}, {"S"}},
        {"b", 1, {"P"}, {"T"}}, {"c", 1, {"Q"}, {"T"}}, {"g", 1, {"P"}, {"Q"}},
        {"h", 1, {"T"}, {"S"}}, {"d", 1, {"S"}, {"R"}}, {"e", 1, {"T"}, {"R"}},
        {"k", 1, {"L"}, {"T"}}, {"j", 1, {"P"}, {"R"}},
        {"z", 2, {"b"}, {"g", "c"}},
        {"w", 2, {"a", "g"}, {"p"}},
        {"x", 2, {"m"}, {"b", "h"}},
        {"y", 2, {"h", "d"}, {"e"}},
        {"z'", 2, {"a", "b"}, {"k"}},
        {"w'", 2, {"k"}, {"p", "c"}},
        {"x'", 2, {"m", "d"}, {"j"}},
        {"y'", 2, {"j"}, {"b", "e"}},
        {"φ", 3, {"z", "w"}, {"z'", "w'"}},
        {"ψ", 3, {"x", "y"}, {"x'", "y'"}},
    });
}

Poset fix_power() {
    std::vector<CellRow> rows = {{"L", 0, {}, {}}, {"M", 0, {}, {}}, {"R", 0, {}, {}},
                                 {"a", 1, {"L"}, {"R"}}, {"z", 1, {"L"}, {"R"}}};
    for (int i = 1; i <= 4; ++i) {
        rows.push_back({"e" + std::to_string(i), 1, {"L"}, {"M"}});
        rows.push_back({"f" + std::to_string(i), 1, {"M"}, {"R"}});
    }
    std::vector<CellRow> more = {
        {"b0", 2, {"a"}, {"e1", "f1"}},
        {"l0", 2, {"e1"}, {"e2"}},
        {"r0", 2, {"f1"}, {"f2"}},
        {"t0", 2, {"e2", "f2"}, {"z"}},
        {"x", 2, {"e1"}, {"e3"}},
        {"l1", 2, {"e3"}, {"e2"}},
        {"r1", 2, {"f1"}, {"f3"}},
        {"y", 2, {"f3"}, {"f2"}},
        {"b1", 2, {"a"}, {"e3", "f4"}},
        {"r2", 2, {"f4"}, {"f3"}},
        {"l2", 2, {"e3"}, {"e4"}},
        {"t1", 2, {"e4", "f3"}, {"z"}},
        {"λ", 3, {"l0"}, {"x", "l1"}},
        {"ρ", 3, {"r0"}, {"r1", "y"}},
        {"β", 3, {"b0", "x", "r1"}, {"b1", "r2"}},
        {"τ", 3, {"t0", "l1", "y"}, {"l2", "t1"}},
    };
    rows.insert(rows.end(), more.begin(), more.end());
    return build_cells("POWER", rows);
}

std::vector<FixtureInfo> fixture_list() {
    std::vector<FixtureInfo> out;
    for (int n = 0; n <= 4; ++n) out.push_back({"O" + std::to_string(n), "globe of dimension " + std::to_string(n)});
    for (int n = 1; n <= 5; ++n)
        out.push_back({"I" + std::to_string(n), "chain of " + std::to_string(n) + " composable arrows"});
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            out.push_back({"U" + std::to_string(n) + "," + std::to_string(m),
                           "2-cell from a chain of " + std::to_string(n) + " arrows to a chain of " +
                               std::to_string(m)});
        }
    out.push_back({"FROB", "two 3-cells phi, psi rewriting overlapping pairs of 2-cells in a pasting diagram with "
                           "inputs a m d and outputs p c e"});
    out.push_back({"POWER", "3-molecule where substituting lambda u tau and rho u beta at once creates a cycle"});
    return out;
}

Poset fixture(const std::string& name) {
    std::smatch mt;
    if (std::regex_match(name, mt, std::regex("O([0-9])")) && std::stoi(mt[1]) <= 4) return globe(std::stoi(mt[1]));
    if (std::regex_match(name, mt, std::regex("I([1-9])"))) {
        int n = std::stoi(mt[1]);
        if (n <= 5) return interval_chain(n).poset();
    }
    if (std::regex_match(name, mt, std::regex("U([0-9]),([0-9])"))) {
        int n = std::stoi(mt[1]), m = std::stoi(mt[2]);
        if (n >= 1 && m >= 1 && n <= 3 && m <= 3) return arrow_atom(n, m).poset();
    }
    if (name == "FROB") return fix_frob();
    if (name == "POWER") return fix_power();
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace ogp
