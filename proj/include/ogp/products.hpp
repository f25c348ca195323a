#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ogp/poset.hpp"

namespace ogp {

inline const std::string kBasepoint = "•";
inline const std::string kDefaultSeparator = "⊗";

// Gray product. Element (x, y) gets id x + sep + y and index x * |Q| + y.
// With check set, the result is run through validate_complex.
Poset gray_product(const Poset& p, const Poset& q, const std::string& sep = kDefaultSeparator,
                   bool check = false);

struct Projections {
    std::vector<int> left;   // product index -> index in p
    std::vector<int> right;  // product index -> index in q
};

// Coordinate maps; throws std::logic_error if a map fails to preserve boundaries.
Projections gray_projections(const Poset& pq, const Poset& p, const Poset& q, bool verify = true);

// Shape plus a label per element. A label is a generator name, "•", or a
// pair label joined by the separator. A generator label whose generator has
// lower dimension than its element marks a degenerate cell.
struct LabelledComplex {
    PosetPtr shape;
    std::map<std::string, std::string> labels;
    const std::string& label(int x) const { return labels.at(shape->id(x)); }
};

LabelledComplex gray_labelled(const LabelledComplex& x, const LabelledComplex& y,
                              const std::string& sep = kDefaultSeparator);

// True if some sep-separated component of the label is "•".
bool has_basepoint_coordinate(const std::string& label, const std::string& sep = kDefaultSeparator);

LabelledComplex smash_collapse(const LabelledComplex& x,
                               const std::function<bool(const std::string&)>& basepoint_fibers);
LabelledComplex smash_collapse(const LabelledComplex& x, const std::string& sep = kDefaultSeparator);

// Generator names by dimension; "•" in dimension 0 is the basepoint.
using Inventory = std::map<int, std::vector<std::string>>;

Inventory smash_generators(const Inventory& gx, const Inventory& gy, const std::string& sep = kDefaultSeparator);

}  // namespace ogp
