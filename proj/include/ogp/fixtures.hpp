#pragma once

#include <string>
#include <vector>

#include "ogp/molecule.hpp"

namespace ogp {

// One row of a cell table: inputs become - covers, outputs + covers.
struct CellRow {
    std::string id;
    int dim = 0;
    std::vector<std::string> in, out;
};

Poset build_cells(const std::string& name, const std::vector<CellRow>& rows);

// Two 3-cells phi, psi pasted along a shared 2-dimensional interface.
Poset fix_frob();
// 3-molecule on which the simultaneous substitution of lambda u tau and rho u beta fails.
Poset fix_power();

struct FixtureInfo {
    std::string name;
    std::string comment;
};

// Names accepted by fixture(): O0..O4, I1..I5, U<n>,<m> (1 <= n, m <= 3), FROB, POWER.
std::vector<FixtureInfo> fixture_list();
Poset fixture(const std::string& name);

}  // namespace ogp
