#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ogp/products.hpp"

namespace ogp {

class TheoryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// images[i] = s(i + 1), values in 1..n
struct Permutation {
    std::vector<int> images;

    int n() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images.at(i - 1); }
    static Permutation identity(int n);
    Permutation inverse() const;
    bool operator==(const Permutation& o) const { return images == o.images; }
};

Permutation make_permutation(std::vector<int> images);  // throws unless a bijection on 1..n
int inversion_count(const Permutation& s);
// Positions k of the transpositions (k k+1), leftmost applied first.
std::vector<int> perm_decompose(const Permutation& s);
Permutation perm_recompose(int n, const std::vector<int>& ks);

using Word = std::vector<std::string>;

struct OpRef {
    enum class Kind { Gen, Braid, BraidInv };
    Kind kind = Kind::Gen;
    std::string gen;
    std::string a, b;  // Braid(a,b): (a,b) => (b,a); BraidInv(a,b): (b,a) => (a,b)

    static OpRef generator(std::string g) { return {Kind::Gen, std::move(g), {}, {}}; }
    static OpRef braid(std::string a, std::string b) { return {Kind::Braid, {}, std::move(a), std::move(b)}; }
    static OpRef braid_inv(std::string a, std::string b) { return {Kind::BraidInv, {}, std::move(a), std::move(b)}; }
    bool operator==(const OpRef& o) const { return kind == o.kind && gen == o.gen && a == o.a && b == o.b; }
};

struct Slice {
    Word pre;
    OpRef op;
    Word post;
    bool operator==(const Slice& o) const { return pre == o.pre && op == o.op && post == o.post; }
};

struct Layered2Cell {
    Word source;
    std::vector<Slice> slices;
    bool operator==(const Layered2Cell& o) const { return source == o.source && slices == o.slices; }
};

struct Generator {
    std::string name;
    Word in, out;
    bool operator==(const Generator& o) const { return name == o.name && in == o.in && out == o.out; }
};

struct Relation {
    std::string name;
    Layered2Cell lhs, rhs;
    bool operator==(const Relation& o) const { return name == o.name && lhs == o.lhs && rhs == o.rhs; }
};

struct Presentation {
    std::string name;
    std::vector<std::string> sorts;
    std::vector<Generator> generators;
    std::vector<Relation> relations;
    bool braided = false;
    bool symmetric = false;

    const Generator* find(const std::string& g) const;
    bool has_relation(const std::string& r) const;
    bool operator==(const Presentation& o) const {
        return sorts == o.sorts && generators == o.generators && relations == o.relations &&
               braided == o.braided && symmetric == o.symmetric;
    }
};

// Target word; throws TheoryError if slices do not chain. Generator slices need a presentation.
Word target(const Layered2Cell& e, const Presentation* p = nullptr);
int count_ops(const Layered2Cell& e, OpRef::Kind kind);
// Reverses the slice list and swaps Braid and BraidInv; braid-only cells.
Layered2Cell invert_braids(const Layered2Cell& e);

// sigma: w => w permuted by s (out[s(i)] = w[i]); sigma_star has the same type.
Layered2Cell sigma_expr(const Permutation& s, const Word& w);
Layered2Cell sigma_star_expr(const Permutation& s, const Word& w);
Permutation wire_permutation(const Layered2Cell& e);

struct BlockSigma {
    Layered2Cell sigma;       // ((a_ij)_j)_i => ((a_ij)_i)_j
    Layered2Cell sigma_star;  // its inverse
};
BlockSigma block_sigma(int n, int m, const std::vector<std::vector<std::string>>& sorts);

Presentation tensor_pros(const Presentation& t, const Presentation& s);
Presentation prop_quotient(const Presentation& p,
                           const std::optional<std::pair<Presentation, Presentation>>& tensor_of_props = std::nullopt);
Presentation co_dual(const Presentation& p);

struct GeneratingCell {
    std::string name;
    int dim = 0;
    LabelledComplex cell;
};

struct DiagComplexPresentation {
    std::string name;
    std::vector<GeneratingCell> cells;

    Inventory inventory() const;
    const GeneratingCell* find(const std::string& name) const;
};

// Restriction of a labelled complex to a closed subset (e.g. a boundary).
LabelledComplex labelled_restrict(const LabelledComplex& x, const Bits& u);
LabelledComplex labelled_boundary(const LabelledComplex& x, int n, Sign a);
// Elements of dimension d whose label is not the basepoint.
int count_labelled(const LabelledComplex& x, int d);

// validate_dim_limit: product shapes of dimension above it are not run through validate_complex.
DiagComplexPresentation presentation_of_smash(const DiagComplexPresentation& x, const DiagComplexPresentation& y,
                                              int validate_dim_limit = 4);

Presentation builtin_pro(const std::string& name);
DiagComplexPresentation builtin_complex(const std::string& name);
std::variant<Presentation, DiagComplexPresentation> builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace ogp
