#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "multipoly.hpp"
#include "root_system.hpp"

namespace kmv {

// Finite-dimensional representation combinatorics for type A, everything in
// fundamental coordinates (integer vectors; dominant means all entries >= 0).
using Labels = std::vector<int>;

namespace rep {

inline int rank_of(const Labels& la) { return static_cast<int>(la.size()); }

// (a|b) = a^T C^{-1} b with C^{-1}_{ij} = min(i,j) (r+1-max(i,j)) / (r+1).
inline Rational labels_form(const Labels& a, const Labels& b) {
    int r = rank_of(a);
    Rational out(0);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            out += Rational(a[static_cast<std::size_t>(i - 1)]) *
                   Rational(b[static_cast<std::size_t>(j - 1)]) *
                   Rational(BigInt(std::min(i, j) * (r + 1 - std::max(i, j))), BigInt(r + 1));
    return out;
}

inline bool is_dominant(const Labels& la) {
    return std::all_of(la.begin(), la.end(), [](int x) { return x >= 0; });
}

// dim V(la) = prod_{1<=i<=j<=r} (la_i + ... + la_j + j - i + 1) / (j - i + 1).
inline Rational weyl_dim(const Labels& la) {
    int r = rank_of(la);
    Rational out(1);
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j) {
            int s = j - i + 1;
            for (int t = i; t <= j; ++t) s += la[static_cast<std::size_t>(t - 1)];
            out *= Rational(BigInt(s), BigInt(j - i + 1));
        }
    return out;
}

// Positive roots in fundamental coordinates (columns of the Cartan matrix,
// summed over intervals).
inline std::vector<Labels> positive_roots(int r) {
    auto cartan = [&](int i, int j) { return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0); };
    std::vector<Labels> out;
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j) {
            Labels a(static_cast<std::size_t>(r), 0);
            for (int t = 1; t <= r; ++t)
                for (int s = i; s <= j; ++s) a[static_cast<std::size_t>(t - 1)] += cartan(t, s);
            out.push_back(std::move(a));
        }
    return out;
}

// Partition-style coordinates: p_i - p_{i+1} = la_i with p_{r+1} = 0. The
// symmetric group on the r+1 entries is the Weyl group.
inline std::vector<int> to_partition(const Labels& la) {
    int r = rank_of(la);
    std::vector<int> p(static_cast<std::size_t>(r + 1), 0);
    for (int i = r - 1; i >= 0; --i)
        p[static_cast<std::size_t>(i)] =
            p[static_cast<std::size_t>(i + 1)] + la[static_cast<std::size_t>(i)];
    return p;
}
inline Labels from_partition(const std::vector<int>& p) {
    Labels la(p.size() - 1, 0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) la[i] = p[i] - p[i + 1];
    return la;
}
inline Labels dominant_conjugate(const Labels& la) {
    std::vector<int> p = to_partition(la);
    std::sort(p.begin(), p.end(), std::greater<int>());
    return from_partition(p);
}

// Freudenthal recursion over dominant weights, processed by increasing
// depth below la. Non-dominant weights carry the multiplicity of their
// dominant conjugate.
inline std::map<Labels, long> dominant_weight_multiplicities(const Labels& la) {
    if (!is_dominant(la)) throw UsageError("dominant_weight_multiplicities: dominant input");
    int r = rank_of(la);
    auto posroots = positive_roots(r);
    Labels rho(static_cast<std::size_t>(r), 1);
    auto plus = [&](const Labels& a, const Labels& b, int scale = 1) {
        Labels out = a;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale * b[i];
        return out;
    };

    // Candidates: la minus nonnegative root-lattice combinations, dominant
    // only, keyed by depth (the coefficient sum).
    std::map<int, std::vector<Labels>> by_depth;
    {
        // depth bound: (la - mu | rho) growth is linear in the coefficients,
        // and each simple root has (alpha_i | rho) = 1, so depth is at most
        // (la - w0 la | rho) <= 2 (la | rho). Enumerate by breadth instead.
        std::map<Labels, int> seen;
        std::vector<std::pair<Labels, int>> frontier{{la, 0}};
        seen[la] = 0;
        auto cartan_col = [&](int i) {
            Labels a(static_cast<std::size_t>(r), 0);
            for (int t = 1; t <= r; ++t)
                a[static_cast<std::size_t>(t - 1)] =
                    t == i ? 2 : (std::abs(t - i) == 1 ? -1 : 0);
            return a;
        };
        std::vector<Labels> simple;
        for (int i = 1; i <= r; ++i) simple.push_back(cartan_col(i));
        while (!frontier.empty()) {
            auto [w, d] = frontier.back();
            frontier.pop_back();
            for (const auto& al : simple) {
                Labels nxt = plus(w, al, -1);
                // Stay inside the hull: the dominant conjugate must still be
                // reachable, which for our purposes is "depth of conjugate
                // below la is a nonnegative root combination".
                Labels conj = dominant_conjugate(nxt);
                Labels diff = plus(la, conj, -1);
                // root coordinates of diff = C^{-1} diff must be nonnegative
                bool inside = true;
                Rational depth_sum(0);
                for (int t = 1; t <= r; ++t) {
                    Rational ct(0);
                    for (int s = 1; s <= r; ++s)
                        ct += Rational(BigInt(std::min(t, s) * (r + 1 - std::max(t, s))),
                                       BigInt(r + 1)) *
                              Rational(diff[static_cast<std::size_t>(s - 1)]);
                    if (!ct.is_nonneg_integer()) inside = false;
                    depth_sum += ct;
                }
                if (!inside) continue;
                if (seen.count(nxt)) continue;
                seen[nxt] = d + 1;
                frontier.push_back({nxt, d + 1});
            }
        }
        for (const auto& [w, d] : seen)
            if (is_dominant(w)) by_depth[d].push_back(w);
    }

    std::map<Labels, long> mult;
    Rational la_norm = labels_form(plus(la, rho), plus(la, rho));
    for (const auto& [d, ws] : by_depth)
        for (const auto& mu : ws) {
            if (mu == la) {
                mult[mu] = 1;
                continue;
            }
            Rational rhs(0);
            for (const auto& al : posroots) {
                for (int t = 1;; ++t) {
                    Labels up = plus(mu, al, t);
                    // saturation: the alpha-string through mu has no gaps, so
                    // the first miss ends the string
                    auto it = mult.find(dominant_conjugate(up));
                    if (it == mult.end()) break;
                    rhs += Rational(it->second) * labels_form(up, al);
                }
            }
            Rational denom = la_norm - labels_form(plus(mu, rho), plus(mu, rho));
            // strictly positive for dominant mu strictly below la
            if (denom.sign() <= 0) throw EvalError("dominant_weight_multiplicities: denominator");
            Rational m = Rational(2) * rhs / denom;
            if (!m.is_integer() || m.sign() <= 0)
                throw EvalError("dominant_weight_multiplicities: bad multiplicity");
            mult[mu] = static_cast<long>(m.num().convert_to<long long>());
        }
    return mult;
}

// Full character: dominant multiplicities spread over Weyl orbits.
inline std::map<Labels, long> full_character(const Labels& la) {
    std::map<Labels, long> out;
    for (const auto& [mu, m] : dominant_weight_multiplicities(la)) {
        std::vector<int> p = to_partition(mu);
        std::sort(p.begin(), p.end());
        do {
            out[from_partition(p)] = m;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

inline Rational character_dim(const std::map<Labels, long>& ch) {
    Rational out(0);
    for (const auto& [w, m] : ch) out += Rational(m);
    return out;
}

// Racah-style tensor decomposition: every weight mu of V(a) contributes its
// reflected-dominant shift of b, with the determinant sign.
inline std::map<Labels, long> tensor_decompose(const Labels& a, const Labels& b) {
    int r = rank_of(a);
    auto cartan = [&](int i, int j) { return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0); };
    std::map<Labels, long> out;
    for (const auto& [mu, m] : full_character(a)) {
        Labels xi(static_cast<std::size_t>(r), 0);
        for (int i = 0; i < r; ++i)
            xi[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)] +
                                              b[static_cast<std::size_t>(i)] + 1;
        long sign = 1;
        bool dead = false;
        for (int guard = 0; guard < 10000; ++guard) {
            int neg = -1;
            for (int i = 0; i < r; ++i) {
                if (xi[static_cast<std::size_t>(i)] == 0) {
                    dead = true;
                    break;
                }
                if (xi[static_cast<std::size_t>(i)] < 0 && neg < 0) neg = i;
            }
            if (dead || neg < 0) break;
            int v = xi[static_cast<std::size_t>(neg)];
            for (int j = 0; j < r; ++j)
                xi[static_cast<std::size_t>(j)] -= v * cartan(neg + 1, j + 1);
            sign = -sign;
        }
        if (dead) continue;
        Labels nu(static_cast<std::size_t>(r), 0);
        for (int i = 0; i < r; ++i) nu[static_cast<std::size_t>(i)] = xi[static_cast<std::size_t>(i)] - 1;
        auto it = out.find(nu);
        long cur = (it == out.end() ? 0 : it->second) + sign * m;
        if (cur == 0) {
            if (it != out.end()) out.erase(it);
        } else out[nu] = cur;
    }
    for (const auto& [nu, m] : out)
        if (m < 0) throw EvalError("tensor_decompose: negative multiplicity");
    return out;
}

// Independent route: multiply full characters and peel highest weights.
inline std::map<Labels, long> decompose_by_characters(const Labels& a, const Labels& b) {
    int r = rank_of(a);
    std::map<Labels, long> prod;
    {
        auto ca = full_character(a);
        auto cb = full_character(b);
        for (const auto& [wa, ma] : ca)
            for (const auto& [wb, mb] : cb) {
                Labels w(static_cast<std::size_t>(r), 0);
                for (int i = 0; i < r; ++i)
                    w[static_cast<std::size_t>(i)] =
                        wa[static_cast<std::size_t>(i)] + wb[static_cast<std::size_t>(i)];
                prod[w] += ma * mb;
            }
    }
    Labels rho(static_cast<std::size_t>(r), 1);
    std::map<Labels, long> out;
    while (!prod.empty()) {
        // maximize (w | rho); the maximizer in a Weyl-symmetric character
        // with positive multiplicities is dominant and a highest weight.
        auto best = prod.begin();
        Rational best_h = labels_form(best->first, rho);
        for (auto it = std::next(prod.begin()); it != prod.end(); ++it) {
            Rational h = labels_form(it->first, rho);
            if (h > best_h) {
                best = it;
                best_h = h;
            }
        }
        Labels top = best->first;
        long m = best->second;
        if (!is_dominant(top) || m < 0)
            throw EvalError("decompose_by_characters: peel failed");
        out[top] += m;
        for (const auto& [w, mm] : full_character(top)) {
            auto it = prod.find(w);
            if (it == prod.end() || it->second < m * mm)
                throw EvalError("decompose_by_characters: inconsistent character");
            it->second -= m * mm;
            if (it->second == 0) prod.erase(it);
        }
    }
    return out;
}

} // namespace rep

// Conformal-weight gap between a module and a candidate submodule top,
// symbolic in whatever the weights carry.
inline MultiPoly singular_degree(const RootSystem& rs, const Weight& mu, const Weight& nu,
                                 const Rational& k) {
    return conformal_weight(rs, nu, k) - conformal_weight(rs, mu, k);
}

} // namespace kmv
