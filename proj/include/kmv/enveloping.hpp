#pragma once

#include <deque>
#include <sstream>
#include <string>
#include <vector>

#include "kmv/parse.hpp"
#include "kmv/root_system.hpp"

namespace kmv {

// PBW monomial in U(g): generator ids sorted nondecreasing in the
// RootSystem's block order (f < h < e, roots by height then lex).
using UMonomial = std::vector<int>;

// U(g) element: canonical-form PBW monomials with polynomial coefficients.
using UElement = std::map<UMonomial, MultiPoly>;

inline void u_add(UElement& out, const UMonomial& m, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto it = out.find(m);
    if (it == out.end()) out[m] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

inline UElement operator+(const UElement& a, const UElement& b) {
    UElement out = a;
    for (const auto& [m, c] : b) u_add(out, m, c);
    return out;
}

inline UElement operator-(const UElement& a, const UElement& b) {
    UElement out = a;
    for (const auto& [m, c] : b) u_add(out, m, -c);
    return out;
}

inline UElement operator*(const MultiPoly& s, const UElement& a) {
    UElement out;
    for (const auto& [m, c] : a) u_add(out, m, s * c);
    return out;
}

// Straighten one word into PBW canonical form: repeatedly rewrite an
// out-of-order adjacent pair xy -> yx + [x,y]. Terminates because each step
// either shortens the word or reduces its inversion count.
inline void u_straighten(const RootSystem& rs, UMonomial word, MultiPoly coeff, UElement& out) {
    std::deque<std::pair<UMonomial, MultiPoly>> work;
    work.push_back({std::move(word), std::move(coeff)});
    while (!work.empty()) {
        auto [w, c] = std::move(work.front());
        work.pop_front();
        std::size_t bad = w.size();
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                bad = i;
                break;
            }
        if (bad == w.size()) {
            u_add(out, w, c);
            continue;
        }
        UMonomial swapped = w;
        std::swap(swapped[bad], swapped[bad + 1]);
        for (const auto& [g, s] : rs.bracket(w[bad], w[bad + 1])) {
            UMonomial shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(bad));
            shorter.push_back(g);
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(bad) + 2, w.end());
            work.push_back({std::move(shorter), c * s});
        }
        work.push_back({std::move(swapped), std::move(c)});
    }
}

inline UElement u_mul(const RootSystem& rs, const UElement& a, const UElement& b) {
    UElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            UMonomial w = ma;
            w.insert(w.end(), mb.begin(), mb.end());
            u_straighten(rs, std::move(w), ca * cb, out);
        }
    return out;
}

inline UElement u_one() { return UElement{{UMonomial{}, MultiPoly(Rational(1))}}; }

inline UElement u_gen(int id, MultiPoly c = MultiPoly(Rational(1))) {
    UElement out;
    u_add(out, UMonomial{id}, c);
    return out;
}

inline UElement u_from_gelem(const GElem& x) {
    UElement out;
    for (const auto& [id, c] : x) u_add(out, UMonomial{id}, c);
    return out;
}

// Adjoint action x_L u = x u - u x, extended over GElem coefficients.
inline UElement ad_act(const RootSystem& rs, const GElem& x, const UElement& u) {
    UElement ux = u_from_gelem(x);
    return u_mul(rs, ux, u) - u_mul(rs, u, ux);
}

// Weight of a PBW monomial in fundamental coordinates.
inline std::vector<int> u_mono_weight(const RootSystem& rs, const UMonomial& m) {
    std::vector<int> w(static_cast<std::size_t>(rs.rank()), 0);
    for (int id : m) {
        const auto& gw = rs.gen_weight(id);
        for (std::size_t t = 0; t < w.size(); ++t) w[t] += gw[t];
    }
    return w;
}

// Weight of a homogeneous element; throws if terms mix weights.
inline std::vector<int> u_weight(const RootSystem& rs, const UElement& u) {
    if (u.empty()) throw UsageError("u_weight: zero element has no weight");
    std::vector<int> w = u_mono_weight(rs, u.begin()->first);
    for (const auto& [m, c] : u)
        if (u_mono_weight(rs, m) != w) throw UsageError("u_weight: element not homogeneous");
    return w;
}

inline std::string u_str(const RootSystem& rs, const UElement& u) {
    if (u.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : u) {
        os << (first ? "" : "  +  ") << "(" << c.str() << ")";
        for (int id : m) os << " " << rs.gen_str(id);
        first = false;
    }
    return os.str();
}

// ---- adjoint submodule generation ----

// Weight-graded exact row echelon over UElements with constant coefficients.
class AdBasis {
public:
    // Returns true if v was independent and got inserted.
    bool insert(const RootSystem& rs, UElement v) {
        if (v.empty()) return false;
        auto w = u_weight(rs, v);
        auto& bucket = buckets_[w];
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& b : bucket) {
                const auto& lead = b.rbegin()->first;
                auto it = v.find(lead);
                if (it == v.end()) continue;
                MultiPoly factor = it->second;
                for (const auto& [m, c] : b) u_add(v, m, -(factor * c));
                changed = true;
                if (v.empty()) return false;
            }
        }
        MultiPoly inv{Rational(1) / v.rbegin()->second.constant_value()};
        v = inv * v;
        bucket.push_back(std::move(v));
        return true;
    }

    int dim() const {
        int d = 0;
        for (const auto& [w, b] : buckets_) d += static_cast<int>(b.size());
        return d;
    }
    const std::map<std::vector<int>, std::vector<UElement>>& buckets() const { return buckets_; }

private:
    std::map<std::vector<int>, std::vector<UElement>> buckets_;
};

// Closure of the seed under ad of the simple raising and lowering
// generators. Seeds must be numeric (constant coefficients). Throws if the
// dimension exceeds the cap.
inline AdBasis generate_ad_submodule(const RootSystem& rs, const UElement& seed, int cap = 512) {
    for (const auto& [m, c] : seed)
        if (!c.is_constant())
            throw UsageError("generate_ad_submodule: symbolic seed rejected");
    AdBasis basis;
    std::deque<UElement> frontier;
    if (basis.insert(rs, seed)) frontier.push_back(seed);
    std::vector<GElem> ops;
    for (int i = 1; i <= rs.rank(); ++i) {
        ops.push_back(gelem(rs.simple_e(i)));
        ops.push_back(gelem(rs.simple_f(i)));
    }
    while (!frontier.empty()) {
        UElement v = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& x : ops) {
            UElement img = ad_act(rs, x, v);
            if (basis.insert(rs, img)) {
                if (basis.dim() > cap)
                    throw EvalError("generate_ad_submodule: dimension cap exceeded");
                frontier.push_back(std::move(img));
            }
        }
    }
    return basis;
}

inline std::vector<UElement> zero_weight_subspace(const RootSystem& rs, const AdBasis& basis) {
    std::vector<int> zero(static_cast<std::size_t>(rs.rank()), 0);
    auto it = basis.buckets().find(zero);
    if (it == basis.buckets().end()) return {};
    return it->second;
}

// Harish-Chandra projection onto U(h) = S(h) along n- U(g) + U(g) n+.
// In PBW order a monomial survives iff it is a pure h-word; h_i is renamed
// to the commuting symbol H_i. Input coefficients must be numeric.
inline MultiPoly hc_project(const RootSystem& rs, const UElement& u, const VarSetPtr& hvars) {
    if (static_cast<int>(hvars->size()) != rs.rank())
        throw UsageError("hc_project: variable set must match rank");
    MultiPoly out;
    for (const auto& [m, c] : u) {
        bool pure_h = true;
        Expo e(hvars->size(), 0);
        for (int id : m) {
            const Gen& g = rs.gen(id);
            if (g.kind != 'h') {
                pure_h = false;
                break;
            }
            e[static_cast<std::size_t>(g.i - 1)] += 1;
        }
        if (pure_h) out += MultiPoly::monomial(hvars, e, c.constant_value());
    }
    return out;
}

// Evaluate a polynomial in H_1..H_rank at a weight (fundamental coords).
inline MultiPoly hc_eval(const MultiPoly& p, const Weight& mu) {
    if (!p.vars()) return p;
    std::map<std::string, MultiPoly> assign;
    for (std::size_t i = 0; i < mu.size(); ++i)
        assign["H" + std::to_string(i + 1)] = mu[i];
    return p.eval(assign);
}

// Parse a U(g) element from golden term lines (one term per line; modes are
// not allowed here).
inline UElement u_parse_lines(const RootSystem& rs, const std::vector<std::string>& lines,
                              const VarSetPtr& vars = nullptr) {
    UElement out;
    for (const auto& line : lines) {
        ParsedTerm t = parse_term_line(line, vars);
        UElement term{{UMonomial{}, t.coeff}};
        for (const auto& f : t.factors) {
            if (f.mode) throw UsageError("u_parse_lines: modes not allowed in U(g) data");
            int id = rs.gen_id(f.kind, f.i, f.j);
            for (int p = 0; p < f.power; ++p) term = u_mul(rs, term, u_gen(id));
        }
        out = out + term;
    }
    return out;
}

} // namespace kmv
