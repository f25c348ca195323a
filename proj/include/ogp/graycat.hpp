#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogp/order.hpp"

namespace ogp {

// A 2-cell of the free Gray-category on a complex: a 2-molecule (by element
// ids) with a 1-order on its 2-dimensional elements.
struct TwoCellNF {
    std::vector<std::string> support;  // sorted element ids
    std::vector<std::string> order;
    bool operator==(const TwoCellNF& o) const { return support == o.support && order == o.order; }
};

struct Step {
    enum class Kind { Interchange, Apply };
    Kind kind = Kind::Interchange;
    TwoCellNF source, target;
    // interchange of the adjacent cells at position, position + 1; lesser is the
    // earlier of the two in the total order of the support
    int position = -1;
    bool inverse = false;
    std::string lesser, greater;
    // generator application
    std::string atom;
    std::vector<std::string> context;

    bool operator==(const Step& o) const;
    std::string str() const;
};

struct GrayExpr3 {
    TwoCellNF source, target;
    std::vector<Step> steps;

    std::string str() const;
    bool operator==(const GrayExpr3& o) const { return source == o.source && target == o.target && steps == o.steps; }
};

// Ambient complex of dimension <= 3 with caches for the total orders of supports.
class GrayContext {
public:
    explicit GrayContext(PosetPtr ambient);

    const Poset& poset() const { return *ambient_; }
    const PosetPtr& ptr() const { return ambient_; }

    Bits support_bits(const TwoCellNF& nf) const;
    TwoCellNF normal(const Bits& support);
    const LoopFreeness& total_order(const Bits& support);
    bool is_one_order(const Bits& support, const std::vector<std::string>& order);

    int inversion_weight(const TwoCellNF& nf);
    GrayExpr3 interchanger_path(const Bits& support, const std::vector<std::string>& from,
                                const std::vector<std::string>& to);

    // Interpretation of the single 3-dimensional element atom applied to the
    // 2-molecule support (which must contain its input boundary).
    GrayExpr3 interpret_atom(const Bits& support, int atom,
                             const std::optional<std::vector<std::string>>& context = std::nullopt);
    // Default 1-order on support[<input of atom>/input of atom].
    std::vector<std::string> default_context(const Bits& support, int atom);
    static std::string collapsed_id(const std::string& atom) { return "⟨" + atom + "⟩"; }

private:
    std::vector<Step> path_to_normal(const Bits& support, const std::vector<std::string>& from);
    Molecule collapse(const Bits& support, int atom);

    PosetPtr ambient_;
    std::map<Bits, LoopFreeness> orders_;
};

TwoCellNF make_nf(const Poset& p, const Bits& support, const std::vector<int>& order);

// Removes adjacent pairs of mutually inverse interchangers.
GrayExpr3 cancel_inverses(const GrayExpr3& e);
GrayExpr3 compose(const GrayExpr3& a, const GrayExpr3& b);
GrayExpr3 invert_interchanges(const GrayExpr3& e);

TwoCellNF nf_source(const GrayExpr3& e);
TwoCellNF nf_target(const GrayExpr3& e);

GrayExpr3 interpret_atom_in_context(GrayContext& ctx, const Molecule& v,
                                    const std::optional<std::vector<std::string>>& context = std::nullopt);
// Interpretation of a 3-molecule along the frame decomposition for the given 2-order.
GrayExpr3 interpret(GrayContext& ctx, const Molecule& u, const std::optional<KOrder>& order = std::nullopt);

GrayExpr3 expr_normalize(GrayContext& ctx, const GrayExpr3& e);
bool expr_equal(GrayContext& ctx, const GrayExpr3& a, const GrayExpr3& b);

// The two sides of the equation contributed by a 4-atom; never solved.
struct Equation {
    GrayExpr3 lhs, rhs;
};
Equation interpret_4atom(GrayContext& ctx, int atom);

}  // namespace ogp
