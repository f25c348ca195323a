#include <algorithm>

#include "ogp/theories.hpp"

namespace ogp {

Permutation Permutation::identity(int n) {
    Permutation s;
    for (int i = 1; i <= n; ++i) s.images.push_back(i);
    return s;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images.assign(images.size(), 0);
    for (int i = 0; i < n(); ++i) r.images[images[i] - 1] = i + 1;
    return r;
}

Permutation make_permutation(std::vector<int> images) {
    std::vector<bool> seen(images.size() + 1, false);
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()) || seen[v])
            throw TheoryError("not a permutation of 1.." + std::to_string(images.size()));
        seen[v] = true;
    }
    return Permutation{std::move(images)};
}

int inversion_count(const Permutation& s) {
    int c = 0;
    for (int i = 0; i < s.n(); ++i)
        for (int j = i + 1; j < s.n(); ++j)
            if (s.images[j] < s.images[i]) ++c;
    return c;
}

std::vector<int> perm_decompose(const Permutation& s) {
    // s^(i+1)(x) = s^(i)((k k+1)(x)), k least with s^(i)(k+1) < s^(i)(k)
    std::vector<int> cur = s.images, out;
    while (true) {
        int k = -1;
        for (size_t i = 0; i + 1 < cur.size(); ++i)
            if (cur[i + 1] < cur[i]) {
                k = static_cast<int>(i);
                break;
            }
        if (k < 0) return out;
        std::swap(cur[k], cur[k + 1]);
        out.push_back(k + 1);
    }
}

Permutation perm_recompose(int n, const std::vector<int>& ks) {
    // s = t_p o ... o t_1: each transposition acts on values
    Permutation s = Permutation::identity(n);
    for (int k : ks) {
        if (k < 1 || k >= n) throw TheoryError("transposition position out of range");
        for (int& v : s.images) {
            if (v == k) v = k + 1;
            else if (v == k + 1) v = k;
        }
    }
    return s;
}

namespace {

Word splice(const Word& pre, const Word& mid, const Word& post) {
    Word w = pre;
    w.insert(w.end(), mid.begin(), mid.end());
    w.insert(w.end(), post.begin(), post.end());
    return w;
}

}  // namespace

Word target(const Layered2Cell& e, const Presentation* p) {
    Word cur = e.source;
    for (size_t i = 0; i < e.slices.size(); ++i) {
        const Slice& s = e.slices[i];
        Word in, out;
        switch (s.op.kind) {
        case OpRef::Kind::Gen: {
            const Generator* g = p ? p->find(s.op.gen) : nullptr;
            if (!g) throw TheoryError("unknown generator '" + s.op.gen + "'");
            in = g->in;
            out = g->out;
            break;
        }
        case OpRef::Kind::Braid:
            in = {s.op.a, s.op.b};
            out = {s.op.b, s.op.a};
            break;
        case OpRef::Kind::BraidInv:
            in = {s.op.b, s.op.a};
            out = {s.op.a, s.op.b};
            break;
        }
        if (splice(s.pre, in, s.post) != cur)
            throw TheoryError("slice " + std::to_string(i) + " does not match the current word");
        cur = splice(s.pre, out, s.post);
    }
    return cur;
}

int count_ops(const Layered2Cell& e, OpRef::Kind kind) {
    return static_cast<int>(std::count_if(e.slices.begin(), e.slices.end(),
                                          [&](const Slice& s) { return s.op.kind == kind; }));
}

Layered2Cell invert_braids(const Layered2Cell& e) {
    Layered2Cell r;
    r.source = target(e);
    for (auto it = e.slices.rbegin(); it != e.slices.rend(); ++it) {
        Slice s = *it;
        if (s.op.kind == OpRef::Kind::Gen) throw TheoryError("cannot invert a generator slice");
        s.op.kind = s.op.kind == OpRef::Kind::Braid ? OpRef::Kind::BraidInv : OpRef::Kind::Braid;
        r.slices.push_back(std::move(s));
    }
    return r;
}

Layered2Cell sigma_expr(const Permutation& s, const Word& w) {
    if (static_cast<int>(w.size()) != s.n()) throw TheoryError("word length does not match the permutation");
    Layered2Cell e;
    e.source = w;
    Word cur = w;
    for (int k : perm_decompose(s)) {
        Slice sl;
        sl.pre.assign(cur.begin(), cur.begin() + (k - 1));
        sl.op = OpRef::braid(cur[k - 1], cur[k]);
        sl.post.assign(cur.begin() + (k + 1), cur.end());
        e.slices.push_back(std::move(sl));
        std::swap(cur[k - 1], cur[k]);
    }
    return e;
}

Layered2Cell sigma_star_expr(const Permutation& s, const Word& w) {
    if (static_cast<int>(w.size()) != s.n()) throw TheoryError("word length does not match the permutation");
    Word sw(w.size());
    for (int i = 0; i < s.n(); ++i) sw[s.images[i] - 1] = w[i];
    return invert_braids(sigma_expr(s.inverse(), sw));
}

Permutation wire_permutation(const Layered2Cell& e) {
    // wire[j] = starting position of the wire currently at position j
    int n = static_cast<int>(e.source.size());
    std::vector<int> wire(n);
    for (int i = 0; i < n; ++i) wire[i] = i;
    for (const auto& s : e.slices) {
        if (s.op.kind == OpRef::Kind::Gen) throw TheoryError("wire_permutation: generator slice present");
        size_t k = s.pre.size();
        if (k + 2 + s.post.size() != static_cast<size_t>(n)) throw TheoryError("wire_permutation: malformed slice");
        std::swap(wire[k], wire[k + 1]);
    }
    Permutation p;
    p.images.assign(n, 0);
    for (int j = 0; j < n; ++j) p.images[wire[j]] = j + 1;
    return p;
}

BlockSigma block_sigma(int n, int m, const std::vector<std::vector<std::string>>& sorts) {
    if (n < 0 || m < 0 || static_cast<int>(sorts.size()) != n) throw TheoryError("block_sigma: size mismatch");
    Word w;
    for (const auto& row : sorts) {
        if (static_cast<int>(row.size()) != m) throw TheoryError("block_sigma: size mismatch");
        w.insert(w.end(), row.begin(), row.end());
    }
    // position (i, j) of the i-major word goes to position (j, i) of the j-major word
    Permutation pi;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) pi.images.push_back(j * n + i + 1);
    BlockSigma b;
    b.sigma = sigma_expr(pi, w);
    b.sigma_star = invert_braids(b.sigma);
    return b;
}

}  // namespace ogp
