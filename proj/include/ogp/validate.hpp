#pragma once

#include <string>
#include <vector>

#include "ogp/molecule.hpp"

namespace ogp {

enum class Status { Pass, Fail, Unknown, NotApplicable };

const char* to_string(Status s);

struct ElementReport {
    std::string id;
    int dim = 0;
    Status spherical = Status::NotApplicable;
    Status input_molecule = Status::NotApplicable;
    Status output_molecule = Status::NotApplicable;
    Status globular = Status::NotApplicable;
};

struct ValidationReport {
    Status overall = Status::Pass;
    std::vector<ElementReport> elements;
    // first failing element and check, empty on success
    std::string first_failure;
};

// Regularity of every atom: spherical boundary, molecule boundaries, globularity.
ValidationReport validate_complex(const PosetPtr& p);

}  // namespace ogp
