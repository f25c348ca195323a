#pragma once

#include <string>

#include "json.hpp"

#include "ogp/graycat.hpp"
#include "ogp/theories.hpp"
#include "ogp/validate.hpp"

namespace ogp {

using json = nlohmann::ordered_json;

// Malformed input (bad JSON or schema violation).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json complex_to_json(const Poset& p);
Poset complex_from_json(const json& j);
std::string serialize_complex(const Poset& p);
Poset parse_complex_text(const std::string& text);
Poset parse_complex(const std::string& path);

json labelled_to_json(const LabelledComplex& x);
LabelledComplex labelled_from_json(const json& j);

json certificate_to_json(const Poset& p, const CertPtr& c);
json report_to_json(const ValidationReport& r);

json slice_to_json(const Slice& s);
json cell_to_json(const Layered2Cell& e);
json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);
json inventory_to_json(const Inventory& inv);
json diag_complex_to_json(const DiagComplexPresentation& d);
DiagComplexPresentation diag_complex_from_json(const json& j);

json expr_to_json(const GrayExpr3& e);

// Oriented Hasse diagram, one rank per dimension; edges point as in H_o.
std::string export_dot(const Poset& p);
std::string export_dot(const Poset& p, const Bits& u);
std::string export_maxd_dot(const Poset& p, const MaxdGraph& g);

// Layered string diagram of a complex of dimension <= 2; labels "•" draw dashed wires
// and nodeless cells.
std::string export_svg_2diagram(const LabelledComplex& x);
std::string export_svg_2diagram(const Poset& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ogp
