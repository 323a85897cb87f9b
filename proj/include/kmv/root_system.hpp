#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kmv/multipoly.hpp"

namespace kmv {

// One Chevalley-style basis element of sl(n): f[i,j] = E(j,i), h[i] =
// E(i,i) - E(i+1,i+1), e[i,j] = E(i,j), with 1 <= i < j <= n.
struct Gen {
    char kind = 'e'; // 'f', 'h', 'e'
    int i = 0;
    int j = 0; // 0 for 'h'
};

// Element of sl(n): sparse map from generator id to coefficient.
using GElem = std::map<int, MultiPoly>;

// Weight in fundamental coordinates (entries may be symbolic).
using Weight = std::vector<MultiPoly>;

// sl(n) with its elementary-matrix structure constants, the invariant form
// normalized by (theta|theta) = 2 (the defining-trace form), and the PBW
// generator order: f-block < h-block < e-block, roots by height then lex.
class RootSystem {
public:
    explicit RootSystem(int n) : n_(n) {
        if (n < 2) throw UsageError("RootSystem: need n >= 2");
        for (int h = 1; h < n; ++h)
            for (int i = 1; i + h <= n; ++i) pos_roots_.push_back({i, i + h});
        for (auto [i, j] : pos_roots_) gens_.push_back({'f', i, j});
        for (int i = 1; i < n; ++i) gens_.push_back({'h', i, 0});
        for (auto [i, j] : pos_roots_) gens_.push_back({'e', i, j});
        build_tables();
    }

    int n() const { return n_; }
    int rank() const { return n_ - 1; }
    int num_gens() const { return static_cast<int>(gens_.size()); }
    const Gen& gen(int id) const { return gens_[static_cast<std::size_t>(id)]; }
    const std::vector<std::pair<int, int>>& pos_roots() const { return pos_roots_; }

    int gen_id(char kind, int i, int j = 0) const {
        for (int id = 0; id < num_gens(); ++id) {
            const Gen& g = gens_[static_cast<std::size_t>(id)];
            if (g.kind == kind && g.i == i && g.j == j) return id;
        }
        throw UsageError("RootSystem: no such generator " + std::string(1, kind) + "[" +
                         std::to_string(i) + "," + std::to_string(j) + "]");
    }
    int h_id(int i) const { return gen_id('h', i); }
    int simple_e(int i) const { return gen_id('e', i, i + 1); }
    int simple_f(int i) const { return gen_id('f', i, i + 1); }
    int theta_e() const { return gen_id('e', 1, n_); }
    int theta_f() const { return gen_id('f', 1, n_); }

    // [a, b] expanded over the basis. Structure constants are integers.
    const std::vector<std::pair<int, Rational>>& bracket(int a, int b) const {
        return brackets_[static_cast<std::size_t>(a * num_gens() + b)];
    }

    // Normalized invariant form (x|y) = tr(xy) in the defining representation.
    const Rational& form(int a, int b) const {
        return form_[static_cast<std::size_t>(a * num_gens() + b)];
    }

    // Fundamental coordinates of the generator's weight under ad(h).
    const std::vector<int>& gen_weight(int id) const {
        return weights_[static_cast<std::size_t>(id)];
    }

    const std::vector<std::vector<Rational>>& cartan_inv() const { return cartan_inv_; }

    std::string gen_str(int id) const {
        const Gen& g = gen(id);
        if (g.kind == 'h') return "h[" + std::to_string(g.i) + "]";
        return std::string(1, g.kind) + "[" + std::to_string(g.i) + "," + std::to_string(g.j) +
               "]";
    }

private:
    using SparseMat = std::map<std::pair<int, int>, Rational>;

    SparseMat gen_matrix(const Gen& g) const {
        SparseMat m;
        if (g.kind == 'e') m[{g.i, g.j}] = Rational(1);
        else if (g.kind == 'f') m[{g.j, g.i}] = Rational(1);
        else {
            m[{g.i, g.i}] = Rational(1);
            m[{g.i + 1, g.i + 1}] = Rational(-1);
        }
        return m;
    }
    static SparseMat mul(const SparseMat& a, const SparseMat& b) {
        SparseMat out;
        for (const auto& [rc, v] : a)
            for (const auto& [rc2, w] : b)
                if (rc.second == rc2.first) {
                    Rational& slot = out[{rc.first, rc2.second}];
                    slot += v * w;
                    if (slot.is_zero()) out.erase({rc.first, rc2.second});
                }
        return out;
    }

    // Express a traceless matrix over the basis; diagonal part goes to the
    // h's via partial sums.
    std::vector<std::pair<int, Rational>> decompose(const SparseMat& m) const {
        std::vector<std::pair<int, Rational>> out;
        std::vector<Rational> diag(static_cast<std::size_t>(n_) + 1, Rational(0));
        for (const auto& [rc, v] : m) {
            if (v.is_zero()) continue;
            auto [r, c] = rc;
            if (r == c) diag[static_cast<std::size_t>(r)] = v;
            else out.push_back({r < c ? gen_id('e', r, c) : gen_id('f', c, r), v});
        }
        Rational acc(0);
        for (int i = 1; i < n_; ++i) {
            acc += diag[static_cast<std::size_t>(i)];
            if (!acc.is_zero()) out.push_back({h_id(i), acc});
        }
        return out;
    }

    void build_tables() {
        int m = num_gens();
        std::vector<SparseMat> mats;
        mats.reserve(static_cast<std::size_t>(m));
        for (int id = 0; id < m; ++id) mats.push_back(gen_matrix(gens_[static_cast<std::size_t>(id)]));

        brackets_.resize(static_cast<std::size_t>(m * m));
        form_.resize(static_cast<std::size_t>(m * m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                SparseMat ab = mul(mats[static_cast<std::size_t>(a)], mats[static_cast<std::size_t>(b)]);
                SparseMat ba = mul(mats[static_cast<std::size_t>(b)], mats[static_cast<std::size_t>(a)]);
                Rational tr(0);
                for (const auto& [rc, v] : ab)
                    if (rc.first == rc.second) tr += v;
                form_[static_cast<std::size_t>(a * m + b)] = tr;
                for (const auto& [rc, v] : ba) {
                    Rational& slot = ab[rc];
                    slot -= v;
                    if (slot.is_zero()) ab.erase(rc);
                }
                brackets_[static_cast<std::size_t>(a * m + b)] = decompose(ab);
            }

        weights_.resize(static_cast<std::size_t>(m));
        for (int id = 0; id < m; ++id) {
            const Gen& g = gens_[static_cast<std::size_t>(id)];
            std::vector<int> w(static_cast<std::size_t>(rank()), 0);
            if (g.kind != 'h') {
                int sgn = g.kind == 'e' ? 1 : -1;
                for (int t = 1; t < n_; ++t) {
                    int v = (g.i == t) - (g.i == t + 1) - (g.j == t) + (g.j == t + 1);
                    w[static_cast<std::size_t>(t - 1)] = sgn * v;
                }
            }
            weights_[static_cast<std::size_t>(id)] = w;
        }

        cartan_inv_.assign(static_cast<std::size_t>(rank()),
                           std::vector<Rational>(static_cast<std::size_t>(rank())));
        for (int i = 1; i < n_; ++i)
            for (int j = 1; j < n_; ++j)
                cartan_inv_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    rat(std::min(i, j) * (n_ - std::max(i, j)), n_);
    }

    int n_;
    std::vector<std::pair<int, int>> pos_roots_;
    std::vector<Gen> gens_;
    std::vector<std::vector<std::pair<int, Rational>>> brackets_;
    std::vector<Rational> form_;
    std::vector<std::vector<int>> weights_;
    std::vector<std::vector<Rational>> cartan_inv_;
};

inline GElem gelem(int id, MultiPoly c = MultiPoly(Rational(1))) {
    GElem g;
    if (!c.is_zero()) g[id] = std::move(c);
    return g;
}

inline GElem operator+(const GElem& a, const GElem& b) {
    GElem out = a;
    for (const auto& [id, c] : b) {
        auto it = out.find(id);
        if (it == out.end()) out[id] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

inline GElem operator*(const MultiPoly& s, const GElem& a) {
    GElem out;
    for (const auto& [id, c] : a) {
        MultiPoly p = s * c;
        if (!p.is_zero()) out[id] = p;
    }
    return out;
}

inline GElem bracket(const RootSystem& rs, const GElem& a, const GElem& b) {
    GElem out;
    for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b)
            for (const auto& [ig, s] : rs.bracket(ia, ib)) out = out + gelem(ig, ca * cb * s);
    return out;
}

inline MultiPoly inv_form(const RootSystem& rs, const GElem& a, const GElem& b) {
    MultiPoly out;
    for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b) out += ca * cb * rs.form(ia, ib);
    return out;
}

// ---- weights ----

inline Weight weight_of_ints(const std::vector<int>& v) {
    Weight w;
    for (int x : v) w.push_back(MultiPoly(Rational(x)));
    return w;
}

inline Weight weight_zero(const RootSystem& rs) {
    return Weight(static_cast<std::size_t>(rs.rank()), MultiPoly());
}

inline Weight rho(const RootSystem& rs) {
    return Weight(static_cast<std::size_t>(rs.rank()), MultiPoly(Rational(1)));
}

inline Weight operator+(const Weight& a, const Weight& b) {
    Weight out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

inline Weight operator-(const Weight& a, const Weight& b) {
    Weight out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

inline Weight operator*(const MultiPoly& s, const Weight& a) {
    Weight out = a;
    for (auto& c : out) c = s * c;
    return out;
}

inline bool weight_eq(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

// (a|b) via the inverse Cartan matrix: (omega_i|omega_j) = C^{-1}_ij.
inline MultiPoly weight_form(const RootSystem& rs, const Weight& a, const Weight& b) {
    if (static_cast<int>(a.size()) != rs.rank() || static_cast<int>(b.size()) != rs.rank())
        throw UsageError("weight_form: rank mismatch");
    MultiPoly out;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out += a[i] * b[j] * rs.cartan_inv()[i][j];
    return out;
}

// Delta_k(lambda) = (lambda | lambda + 2 rho) / (2 (k + n)). Errors at the
// critical level k = -n.
inline MultiPoly conformal_weight(const RootSystem& rs, const Weight& lambda,
                                  const Rational& k) {
    Rational denom = (k + Rational(rs.n())) * Rational(2);
    if (denom.is_zero()) throw EvalError("conformal_weight: critical level");
    Weight shifted = lambda + MultiPoly(Rational(2)) * rho(rs);
    return weight_form(rs, lambda, shifted) * (Rational(1) / denom);
}

// Diagram involution lift for sl(4): sigma(E(i,j)) = (-1)^(i-j+1) E(5-j,5-i),
// sigma(h_i) = h_{4-i}. Order 2; fixes the middle node.
inline std::pair<int, Rational> sigma_gen(const RootSystem& rs, int id) {
    if (rs.n() != 4) throw UsageError("sigma: defined for sl(4) only");
    const Gen& g = rs.gen(id);
    if (g.kind == 'h') return {rs.h_id(4 - g.i), Rational(1)};
    // e[i,j] = E(i,j), f[i,j] = E(j,i); both map by the same matrix rule.
    int r = g.kind == 'e' ? g.i : g.j;
    int c = g.kind == 'e' ? g.j : g.i;
    int r2 = 5 - c, c2 = 5 - r;
    Rational sign = ((r - c + 1) % 2 == 0) ? Rational(1) : Rational(-1);
    int id2 = r2 < c2 ? rs.gen_id('e', r2, c2) : rs.gen_id('f', c2, r2);
    return {id2, sign};
}

inline Weight sigma_weight(const RootSystem& rs, const Weight& w) {
    if (rs.n() != 4) throw UsageError("sigma: defined for sl(4) only");
    return Weight{w[2], w[1], w[0]};
}

} // namespace kmv
