#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ogp/poset.hpp"

namespace ogp {

// Failure of a construction precondition (non-spherical input, boundary mismatch,
// failed verification).
class MoleculeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

// Construction tree: an atom, or a pasting of two sub-molecules along a k-boundary.
struct Certificate {
    enum class Kind { Atom, Paste };
    Kind kind = Kind::Atom;
    int atom = -1;
    int k = -1;
    Bits members;
    CertPtr left, right;

    static CertPtr make_atom(const Bits& members, int top);
    static CertPtr make_paste(int k, CertPtr l, CertPtr r);
};

CertPtr remap(const CertPtr& c, const std::vector<int>& to, int new_size);

struct Molecule {
    ClosedSubset subset;
    CertPtr cert;

    const Poset& poset() const { return *subset.parent; }
    const Bits& members() const { return subset.members; }
    int dim() const { return subset.dim(); }
    int size() const { return subset.count(); }
};

// Wraps a standalone poset that is known to be an atom.
Molecule atom_molecule(Poset p);

Poset globe(int n);
Molecule globe_molecule(int n);
Molecule interval_chain(int n);
// U_{n,m}: the atom I_n => I_m.
Molecule arrow_atom(int n, int m);

Molecule paste(const Molecule& u1, const Molecule& u2, int k);
Molecule cell_to(const ClosedSubset& u, const ClosedSubset& v);
inline Molecule cell_to(const Molecule& u, const Molecule& v) { return cell_to(u.subset, v.subset); }
Molecule compos(const ClosedSubset& u);
inline Molecule compos(const Molecule& u) { return compos(u.subset); }
// As compos, with a chosen id for the new greatest element.
Molecule compos_named(const ClosedSubset& u, const std::string& top_id);

bool spherical(const Poset& p, const Bits& u);
inline bool spherical(const ClosedSubset& u) { return spherical(*u.parent, u.members); }

struct Isomorphism {
    // forward[x] for x in the source subset, -1 elsewhere
    std::vector<int> forward;
    std::map<std::string, std::string> by_id;
};

// All isomorphisms (up to limit) between two closed subsets, preserving dims and signed covers.
std::vector<std::vector<int>> find_isomorphisms(const Poset& p, const Bits& u, const Poset& q, const Bits& v,
                                                int limit);
// Throws std::logic_error if a second distinct isomorphism is found.
std::optional<Isomorphism> unique_iso(const ClosedSubset& u, const ClosedSubset& v);
inline std::optional<Isomorphism> unique_iso(const Molecule& u, const Molecule& v) {
    return unique_iso(u.subset, v.subset);
}

// U[W/V]. New interior elements get ids prefix + id.
Molecule substitute(const Molecule& u, const ClosedSubset& v, const ClosedSubset& w,
                    const std::string& prefix = "sub/");

enum class Recognition { Molecule, NotMolecule, Unknown };

struct RecognizeResult {
    Recognition status = Recognition::NotMolecule;
    std::optional<Molecule> molecule;
};

RecognizeResult recognize(const ClosedSubset& u);
// Throws MoleculeError unless u is recognized.
Molecule as_molecule(const ClosedSubset& u);

struct Enumeration {
    std::vector<Molecule> molecules;
    bool truncated = false;
};

Enumeration enumerate_molecules(const PosetPtr& p, int max_count = 10000);

const char* to_string(Recognition r);

}  // namespace ogp
