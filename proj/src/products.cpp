#include "ogp/products.hpp"

#include <stdexcept>

#include "ogp/validate.hpp"

namespace ogp {

Poset gray_product(const Poset& p, const Poset& q, const std::string& sep, bool check) {
    std::vector<ElementSpec> specs;
    specs.reserve(static_cast<size_t>(p.size()) * q.size());
    auto pid = [&](int x, int y) { return p.id(x) + sep + q.id(y); };
    for (int x = 0; x < p.size(); ++x) {
        for (int y = 0; y < q.size(); ++y) {
            ElementSpec e{pid(x, y), p.dim(x) + q.dim(y), {}};
            for (const auto& c : p.faces(x)) e.covers.emplace_back(pid(c.target, y), c.sign);
            Sign twist = p.dim(x) % 2 == 0 ? Sign::Plus : Sign::Minus;
            for (const auto& c : q.faces(y)) {
                Sign s = twist == Sign::Plus ? c.sign : -c.sign;
                e.covers.emplace_back(pid(x, c.target), s);
            }
            specs.push_back(std::move(e));
        }
    }
    Poset out = Poset::make(p.name() + sep + q.name(), specs);
    if (check) {
        auto ptr = std::make_shared<const Poset>(out);
        auto rep = validate_complex(ptr);
        if (rep.overall == Status::Fail)
            throw std::logic_error("gray product failed validation: " + rep.first_failure);
    }
    return out;
}

Projections gray_projections(const Poset& pq, const Poset& p, const Poset& q, bool verify) {
    if (pq.size() != p.size() * q.size()) throw std::invalid_argument("not a product of the given factors");
    Projections pr;
    for (int z = 0; z < pq.size(); ++z) {
        pr.left.push_back(z / q.size());
        pr.right.push_back(z % q.size());
    }
    if (!verify) return pr;
    auto image = [&](const Bits& b, const std::vector<int>& f, const Poset& target) {
        Bits out = target.empty();
        for (int z : elements_of(b)) out.set(f[z]);
        return out;
    };
    for (int z = 0; z < pq.size(); ++z) {
        Bits cz = atom_of(pq, z);
        for (int side = 0; side < 2; ++side) {
            const auto& f = side == 0 ? pr.left : pr.right;
            const Poset& t = side == 0 ? p : q;
            Bits cx = atom_of(t, f[z]);
            if (image(cz, f, t) != cx) throw std::logic_error("projection does not map closures onto closures");
            for (int n = 0; n < pq.dim(z); ++n)
                for (Sign a : {Sign::Minus, Sign::Plus})
                    if (image(boundary(pq, cz, n, a), f, t) != boundary(t, cx, n, a))
                        throw std::logic_error("projection does not preserve the boundary of " + pq.id(z));
        }
    }
    return pr;
}

LabelledComplex gray_labelled(const LabelledComplex& x, const LabelledComplex& y, const std::string& sep) {
    LabelledComplex out;
    out.shape = std::make_shared<const Poset>(gray_product(*x.shape, *y.shape, sep));
    for (int a = 0; a < x.shape->size(); ++a)
        for (int b = 0; b < y.shape->size(); ++b)
            out.labels[x.shape->id(a) + sep + y.shape->id(b)] = x.label(a) + sep + y.label(b);
    return out;
}

bool has_basepoint_coordinate(const std::string& label, const std::string& sep) {
    size_t start = 0;
    while (true) {
        size_t pos = label.find(sep, start);
        std::string part = label.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        if (part == kBasepoint) return true;
        if (pos == std::string::npos) return false;
        start = pos + sep.size();
    }
}

LabelledComplex smash_collapse(const LabelledComplex& x,
                               const std::function<bool(const std::string&)>& basepoint_fibers) {
    LabelledComplex out = x;
    for (auto& [id, label] : out.labels)
        if (basepoint_fibers(label)) label = kBasepoint;
    return out;
}

LabelledComplex smash_collapse(const LabelledComplex& x, const std::string& sep) {
    return smash_collapse(x, [&](const std::string& l) { return has_basepoint_coordinate(l, sep); });
}

Inventory smash_generators(const Inventory& gx, const Inventory& gy, const std::string& sep) {
    Inventory out;
    out[0].push_back(kBasepoint);
    for (const auto& [dx, xs] : gx)
        for (const auto& x : xs) {
            if (x == kBasepoint) continue;
            for (const auto& [dy, ys] : gy)
                for (const auto& y : ys) {
                    if (y == kBasepoint) continue;
                    out[dx + dy].push_back(x + sep + y);
                }
        }
    return out;
}

}  // namespace ogp
