#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ogp {

enum class Sign : int8_t { Minus = -1, Plus = 1 };

inline Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// Structural violations of the encoding (dangling ids, grading, cycles).
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Cover {
    int target;
    Sign sign;
};

// Raw element as it appears in the JSON format.
struct ElementSpec {
    std::string id;
    int dim = 0;
    std::vector<std::pair<std::string, Sign>> covers;
};

using Bits = boost::dynamic_bitset<>;

// Finite oriented graded poset, stored as its signed Hasse diagram.
// Elements are indexed 0..size()-1; ids are opaque strings.
class Poset {
public:
    Poset() = default;

    // Builds and checks grading, dangling ids, duplicate edges and acyclicity.
    static Poset make(std::string name, const std::vector<ElementSpec>& elements);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    int size() const { return static_cast<int>(ids_.size()); }
    int dim(int x) const { return dims_[x]; }
    const std::string& id(int x) const { return ids_[x]; }
    const std::vector<Cover>& faces(int x) const { return down_[x]; }
    const std::vector<Cover>& cofaces(int x) const { return up_[x]; }
    std::optional<int> find(const std::string& id) const;
    int at(const std::string& id) const;
    int dim() const;
    // Sign of the cover y -> x, if y covers x.
    std::optional<Sign> orientation(int y, int x) const;

    Bits empty() const { return Bits(ids_.size()); }
    Bits all() const { Bits b(ids_.size()); b.set(); return b; }
    Bits bits(const std::vector<int>& xs) const;

    std::vector<ElementSpec> specs() const;

private:
    std::string name_;
    std::vector<std::string> ids_;
    std::vector<int> dims_;
    std::vector<std::vector<Cover>> down_;
    std::vector<std::vector<Cover>> up_;
    std::unordered_map<std::string, int> index_;
};

using PosetPtr = std::shared_ptr<const Poset>;

// A downward closed subset of a shared poset.
struct ClosedSubset {
    PosetPtr parent;
    Bits members;

    int dim() const;
    int count() const { return static_cast<int>(members.count()); }
    bool contains(int x) const { return members.test(x); }
    std::vector<std::string> ids() const;
    bool operator==(const ClosedSubset& o) const { return parent == o.parent && members == o.members; }
};

std::vector<int> elements_of(const Bits& b);
int dim_of(const Poset& p, const Bits& u);

Bits closure(const Poset& p, const Bits& u);
ClosedSubset closure(PosetPtr p, const std::vector<std::string>& ids);

// Elements of u that are maximal in u.
std::vector<int> maximal(const Poset& p, const Bits& u);

// The n-dimensional elements of u all of whose covers in u have sign a.
Bits source_set(const Poset& p, const Bits& u, int n, Sign a);
Bits boundary(const Poset& p, const Bits& u, int n, Sign a);
Bits boundary(const Poset& p, const Bits& u, int n);
// Boundary of u at dim(u)-1.
inline Bits boundary(const Poset& p, const Bits& u, Sign a) { return boundary(p, u, dim_of(p, u) - 1, a); }
inline Bits atom_of(const Poset& p, int x) { Bits b = p.empty(); b.set(x); return closure(p, b); }

ClosedSubset boundary(const ClosedSubset& u, int n, std::optional<Sign> a);

struct Digraph {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency() const;
};

// Hasse diagram with the edges labelled - reversed, restricted to u.
Digraph oriented_hasse(const Poset& p, const Bits& u);
inline Digraph oriented_hasse(const Poset& p) { return oriented_hasse(p, p.all()); }

bool has_cycle(const std::vector<std::vector<int>>& adj);

// Flips covers y -> x with dim(y) in dims; all covers when dims is empty.
Poset dual(const Poset& p, const std::set<int>& dims = {});

// Copy of the subset u as a standalone poset (ids kept).
Poset restrict(const Poset& p, const Bits& u);

}  // namespace ogp
