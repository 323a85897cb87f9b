#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "enveloping.hpp"
#include "multipoly.hpp"
#include "parse.hpp"
#include "root_system.hpp"

namespace kmv {

// Element of the Weyl algebra A_n on variables x_1..x_n, kept normal-ordered:
// every term is x^a d^b with all x's to the left of all d's. Coefficients are
// exact rationals.
class WeylElement {
public:
    using Key = std::pair<Expo, Expo>; // (x exponents, d exponents)

    explicit WeylElement(int nvars) : n_(nvars) {}

    static WeylElement monomial(int nvars, Expo xs, Expo ds, const Rational& c) {
        WeylElement w(nvars);
        w.add(std::move(xs), std::move(ds), c);
        return w;
    }
    static WeylElement constant(int nvars, const Rational& c) {
        return monomial(nvars, Expo(static_cast<std::size_t>(nvars), 0),
                        Expo(static_cast<std::size_t>(nvars), 0), c);
    }

    int nvars() const { return n_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Expo xs, Expo ds, const Rational& c) {
        if (c.is_zero()) return;
        Key key{std::move(xs), std::move(ds)};
        auto it = terms_.find(key);
        if (it == terms_.end()) terms_[std::move(key)] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend WeylElement operator+(const WeylElement& a, const WeylElement& b) {
        if (a.n_ != b.n_) throw UsageError("WeylElement: variable count mismatch");
        WeylElement out = a;
        for (const auto& [key, c] : b.terms_) out.add(key.first, key.second, c);
        return out;
    }
    friend WeylElement operator-(const WeylElement& a, const WeylElement& b) {
        if (a.n_ != b.n_) throw UsageError("WeylElement: variable count mismatch");
        WeylElement out = a;
        for (const auto& [key, c] : b.terms_) out.add(key.first, key.second, -c);
        return out;
    }
    friend WeylElement operator*(const Rational& s, const WeylElement& a) {
        WeylElement out(a.n_);
        if (s.is_zero()) return out;
        for (const auto& [key, c] : a.terms_) out.terms_[key] = s * c;
        return out;
    }
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (int i = 0; i < n_; ++i)
                for (int rep = 0; rep < key.first[static_cast<std::size_t>(i)]; ++rep)
                    os << " x" << i + 1;
            for (int i = 0; i < n_; ++i)
                for (int rep = 0; rep < key.second[static_cast<std::size_t>(i)]; ++rep)
                    os << " d" << i + 1;
        }
        return os.str();
    }

private:
    int n_ = 0;
    std::map<Key, Rational> terms_;
};

// Product with re-normal-ordering. Per variable,
//   d^q x^r = sum_m binom(q,m) binom(r,m) m! x^(r-m) d^(q-m),
// applied independently in each variable since distinct variables commute.
inline WeylElement w_mul(const WeylElement& a, const WeylElement& b) {
    if (a.nvars() != b.nvars()) throw UsageError("w_mul: variable count mismatch");
    int n = a.nvars();
    auto binom = [](int t, int m) {
        Rational out(1);
        for (int i = 0; i < m; ++i) out *= Rational(t - i, BigInt(i + 1));
        return out;
    };
    WeylElement out(n);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const Expo& p = ka.first;
            const Expo& q = ka.second;
            const Expo& r = kb.first;
            const Expo& s = kb.second;
            // Odometer over contraction counts m_i <= min(q_i, r_i).
            Expo m(static_cast<std::size_t>(n), 0);
            for (;;) {
                Rational coeff = ca * cb;
                Expo xs(static_cast<std::size_t>(n), 0), ds(static_cast<std::size_t>(n), 0);
                for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
                    int mi = m[i];
                    Rational fact(1);
                    for (int t = 2; t <= mi; ++t) fact *= Rational(t);
                    coeff *= binom(q[i], mi) * binom(r[i], mi) * fact;
                    xs[i] = p[i] + r[i] - mi;
                    ds[i] = q[i] + s[i] - mi;
                }
                out.add(std::move(xs), std::move(ds), coeff);
                std::size_t pos = 0;
                while (pos < static_cast<std::size_t>(n)) {
                    if (m[pos] < std::min(q[pos], r[pos])) {
                        ++m[pos];
                        break;
                    }
                    m[pos] = 0;
                    ++pos;
                }
                if (pos == static_cast<std::size_t>(n)) break;
            }
        }
    return out;
}

inline WeylElement w_mul(const WeylElement& a, const WeylElement& b, const WeylElement& c) {
    return w_mul(w_mul(a, b), c);
}

// ---- the first-order realization ----

// e[i,j] -> x_i d_j, f[i,j] -> x_j d_i, h[i] -> x_i d_i - x_{i+1} d_{i+1}.
inline WeylElement phi_gen(const RootSystem& rs, int id) {
    int n = rs.n();
    const Gen& g = rs.gen(id);
    auto unit = [&](int xi, int di) {
        Expo xs(static_cast<std::size_t>(n), 0), ds(static_cast<std::size_t>(n), 0);
        xs[static_cast<std::size_t>(xi - 1)] = 1;
        ds[static_cast<std::size_t>(di - 1)] = 1;
        return WeylElement::monomial(n, std::move(xs), std::move(ds), Rational(1));
    };
    if (g.kind == 'e') return unit(g.i, g.j);
    if (g.kind == 'f') return unit(g.j, g.i);
    return unit(g.i, g.i) - unit(g.i + 1, g.i + 1);
}

// Multiplicative extension to ordered monomials. Only constant coefficients
// make sense here (the target has no auxiliary indeterminates).
inline WeylElement phi(const RootSystem& rs, const UElement& u) {
    WeylElement out(rs.n());
    for (const auto& [mono, c] : u) {
        if (!c.is_constant()) throw UsageError("phi: nonconstant coefficient");
        WeylElement t = WeylElement::constant(rs.n(), c.constant_value());
        for (int id : mono) t = w_mul(t, phi_gen(rs, id));
        out = out + t;
    }
    return out;
}

// Checks [phi(a), phi(b)] = phi([a,b]) over every ordered basis pair.
inline bool phi_is_lie_hom(const RootSystem& rs) {
    std::vector<WeylElement> img;
    img.reserve(static_cast<std::size_t>(rs.num_gens()));
    for (int id = 0; id < rs.num_gens(); ++id) img.push_back(phi_gen(rs, id));
    for (int a = 0; a < rs.num_gens(); ++a)
        for (int b = 0; b < rs.num_gens(); ++b) {
            WeylElement lhs = w_mul(img[static_cast<std::size_t>(a)],
                                    img[static_cast<std::size_t>(b)]) -
                              w_mul(img[static_cast<std::size_t>(b)],
                                    img[static_cast<std::size_t>(a)]);
            WeylElement rhs(rs.n());
            for (const auto& [g, s] : rs.bracket(a, b))
                rhs = rhs + s * img[static_cast<std::size_t>(g)];
            if (!(lhs == rhs)) return false;
        }
    return true;
}

// ---- literals and word images for the defining-relation table ----

// Image of a product word written in generator syntax, e.g.
// "f[2,4] e[2,4]^2 e[1,3]". Factors multiply left to right.
inline WeylElement w_image(const RootSystem& rs, const std::string& word) {
    ParsedTerm t = parse_term_line(word, nullptr);
    WeylElement out = WeylElement::constant(rs.n(), t.coeff.constant_value());
    for (const auto& f : t.factors) {
        if (f.mode) throw UsageError("w_image: modes not allowed");
        int id = rs.gen_id(f.kind, f.i, f.j);
        for (int p = 0; p < f.power; ++p) out = w_mul(out, phi_gen(rs, id));
    }
    return out;
}

// Literal Weyl-algebra sums: "2 x1 x2^2 d3 - x1 x4 d2^2". Factors are x<i>
// or d<i> with optional ^power; an optional leading rational coefficient.
inline WeylElement w_parse(int nvars, const std::string& s) {
    WeylElement out(nvars);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '*')) ++pos;
    };
    skip();
    while (pos < s.size()) {
        int sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-' || s[pos] == ' ')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= s.size()) break;
        skip();
        Rational coeff(sign);
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                ++pos;
            coeff = Rational(sign) * Rational::from_string(s.substr(start, pos - start));
        }
        Expo xs(static_cast<std::size_t>(nvars), 0), ds(static_cast<std::size_t>(nvars), 0);
        skip();
        while (pos < s.size() && (s[pos] == 'x' || s[pos] == 'd')) {
            char kind = s[pos++];
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            int idx = std::stoi(s.substr(start, pos - start));
            int power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                power = std::stoi(s.substr(start, pos - start));
            }
            if (idx < 1 || idx > nvars) throw UsageError("w_parse: variable index out of range");
            (kind == 'x' ? xs : ds)[static_cast<std::size_t>(idx - 1)] += power;
            skip();
        }
        out.add(std::move(xs), std::move(ds), coeff);
        skip();
    }
    return out;
}

struct RelationCheck {
    std::string name;
    bool pass = false;
};

// The quadratic/quartic coincidences in A_4 that kill the generator of the
// maximal ideal. Pair rows assert w_image equality of two words; value rows
// pin the image against an explicit normal-ordered literal.
inline std::vector<RelationCheck> quartic_relation_checks(const RootSystem& rs) {
    if (rs.n() != 4) throw UsageError("quartic_relation_checks: rank-3 system required");
    struct Row {
        const char* name;
        const char* lhs;
        const char* rhs;   // may be empty
        const char* value; // may be empty
    };
    // Row q12 corrects an obvious slip in the source display: the right-hand
    // word must follow the same prefix pattern as the other f-rows (prefix
    // times e[2,3] e[1,4]); the printed variant is not an identity in A_4.
    static const Row rows[] = {
        {"q01", "e[2,4] e[1,3]", "e[2,3] e[1,4]", ""},
        {"q02", "h[1] e[2,4] e[1,3]", "h[1] e[2,3] e[1,4]", ""},
        {"q03", "h[2] e[2,4] e[1,3]", "h[2] e[2,3] e[1,4]", ""},
        {"q04", "h[3] e[2,4] e[1,3]", "h[3] e[2,3] e[1,4]", ""},
        {"q05", "h[1] h[2] e[2,4] e[1,3]", "h[1] h[2] e[2,3] e[1,4]", ""},
        {"q06", "h[2]^2 e[2,4] e[1,3]", "h[2]^2 e[2,3] e[1,4]", ""},
        {"q07", "h[2] h[3] e[2,4] e[1,3]", "h[2] h[3] e[2,3] e[1,4]", ""},
        {"q08", "f[1,2] e[1,2] e[2,4] e[1,3]", "f[1,2] e[1,2] e[2,3] e[1,4]", ""},
        {"q09", "f[1,3] e[1,3] e[2,4] e[1,3]", "f[1,3] e[1,3] e[2,3] e[1,4]", ""},
        {"q10", "f[1,4] e[1,4] e[2,4] e[1,3]", "f[1,4] e[1,4] e[2,3] e[1,4]", ""},
        {"q11", "f[2,3] e[2,3] e[2,4] e[1,3]", "f[2,3] e[2,3]^2 e[1,4]", ""},
        {"q12", "f[2,4] e[2,4]^2 e[1,3]", "f[2,4] e[2,4] e[2,3] e[1,4]", ""},
        {"q13", "f[3,4] e[3,4] e[2,4] e[1,3]", "f[3,4] e[3,4] e[2,3] e[1,4]", ""},
        {"q14", "h[1] h[3] e[2,4] e[1,3]", "h[1] h[3] e[2,3] e[1,4]", ""},
        {"q15", "h[1] h[3] e[2,4] e[1,3]", "",
         "x1^2 x2 x3 d1 d3^2 d4 - x1 x2^2 x3 d2 d3^2 d4 - x1^2 x2 x4 d1 d3 d4^2 + x1 x2^2 x4 d2 "
         "d3 d4^2"},
        {"q16", "e[3,4] e[2,3] e[1,3]", "", "x1 x2 x3 d3^2 d4"},
        {"q17", "e[3,4] e[2,3]^2 e[1,2]", "", "x1 x2^2 x3 d2 d3^2 d4"},
        {"q18", "h[3] e[1,2] e[2,3] e[2,4]", "",
         "2 x1 x2 x3 d3^2 d4 + x1 x2^2 x3 d2 d3^2 d4 - 2 x1 x2 x4 d3 d4^2 - x1 x2^2 x4 d2 d3 "
         "d4^2"},
        {"q19", "h[1] e[3,4] e[2,3] e[1,3]", "",
         "x1^2 x2 x3 d1 d3^2 d4 - x1 x2^2 x3 d2 d3^2 d4"},
        {"q20", "h[3] f[1,2] e[1,4] e[1,3]", "",
         "2 x1 x2 x3 d3^2 d4 + x1^2 x2 x3 d1 d3^2 d4 - 2 x1 x2 x4 d3 d4^2 - x1^2 x2 x4 d1 d3 "
         "d4^2"},
        {"q21", "f[1,2] e[3,4] e[1,3]^2", "", "2 x1 x2 x3 d3^2 d4 + x1^2 x2 x3 d1 d3^2 d4"},
        {"q22", "h[1] f[3,4] e[2,4] e[1,4]", "",
         "x1^2 x2 x4 d1 d3 d4^2 - x1 x2^2 x4 d2 d3 d4^2"},
        {"q23", "f[3,4] e[1,2] e[2,4]^2", "", "2 x1 x2 x4 d3 d4^2 + x1 x2^2 x4 d2 d3 d4^2"},
        {"q24", "f[3,4] f[1,2] e[1,4]^2", "", "2 x1 x2 x4 d3 d4^2 + x1^2 x2 x4 d1 d3 d4^2"},
    };
    std::vector<RelationCheck> out;
    for (const Row& r : rows) {
        WeylElement lhs = w_image(rs, r.lhs);
        bool ok = true;
        if (r.rhs[0] != '\0') ok = ok && lhs == w_image(rs, r.rhs);
        if (r.value[0] != '\0') ok = ok && lhs == w_parse(rs.n(), r.value);
        out.push_back({r.name, ok});
    }
    return out;
}

// ---- symbolic action on monomials x^b ----

// Applying a normal-ordered term x^a d^q to x^b with symbolic exponents gives
// the falling-factorial coefficient prod_i b_i (b_i-1) ... (b_i-q_i+1) and the
// exponent offset a - q. The offset map is the whole content of the action.
inline std::map<Expo, MultiPoly> act_symbolic(const WeylElement& w, const VarSetPtr& bvars) {
    if (static_cast<int>(bvars->size()) != w.nvars())
        throw UsageError("act_symbolic: one symbol per variable required");
    std::map<Expo, MultiPoly> out;
    for (const auto& [key, c] : w.terms()) {
        MultiPoly coeff{c};
        Expo offset(key.first.size(), 0);
        for (std::size_t i = 0; i < key.first.size(); ++i) {
            offset[i] = key.first[i] - key.second[i];
            MultiPoly b = MultiPoly::var(bvars, bvars->name(i));
            for (int t = 0; t < key.second[i]; ++t) coeff *= b - MultiPoly(Rational(t));
        }
        auto it = out.find(offset);
        if (it == out.end()) out[offset] = coeff;
        else {
            it->second += coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

// ---- lattice membership for the monomial modules ----

// The module on span{ x^b : b == a mod Z^n, sum b = sum a } contains the
// distinguished generator in its image iff the symbolic action vanishes on
// the whole lattice. Eliminating b_1 = (sum a) - b_2 - ... - b_n turns that
// into a polynomial identity; a nonvanishing specialization is a witness.
struct MaResult {
    bool member = false;
    std::string witness; // exponent vector with nonzero action, when not a member
};

inline MaResult ma_criterion(const RootSystem& rs, const UElement& uelt,
                             const std::vector<Rational>& a) {
    int n = rs.n();
    if (static_cast<int>(a.size()) != n) throw UsageError("ma_criterion: need one entry per variable");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("b" + std::to_string(i));
    VarSetPtr bvars = VarSet::make(names);
    auto action = act_symbolic(phi(rs, uelt), bvars);

    Rational sum_a(0);
    for (const auto& ai : a) sum_a += ai;
    std::map<std::string, MultiPoly> elim;
    MultiPoly b1 = MultiPoly(sum_a);
    for (int i = 2; i <= n; ++i) b1 -= MultiPoly::var(bvars, names[static_cast<std::size_t>(i - 1)]);
    elim[names[0]] = b1;
    for (int i = 2; i <= n; ++i)
        elim[names[static_cast<std::size_t>(i - 1)]] =
            MultiPoly::var(bvars, names[static_cast<std::size_t>(i - 1)]);

    MaResult out;
    out.member = true;
    for (const auto& [offset, coeff] : action)
        if (!coeff.eval(elim).is_zero()) out.member = false;
    if (out.member) return out;

    // Search small zero-sum integer shifts of a for a nonvanishing point.
    auto value_at = [&](const std::vector<int>& sh) {
        std::map<std::string, MultiPoly> assign;
        for (int i = 0; i < n; ++i)
            assign[names[static_cast<std::size_t>(i)]] =
                MultiPoly(a[static_cast<std::size_t>(i)] + Rational(sh[static_cast<std::size_t>(i)]));
        for (const auto& [offset, coeff] : action)
            if (!coeff.eval(assign).is_zero()) return true;
        return false;
    };
    for (int m = 0; m <= 2 && out.witness.empty(); ++m)
        for (int i = 0; i < n && out.witness.empty(); ++i)
            for (int j = 0; j < n && out.witness.empty(); ++j) {
                std::vector<int> sh(static_cast<std::size_t>(n), 0);
                sh[static_cast<std::size_t>(i)] += m;
                sh[static_cast<std::size_t>(j)] -= m;
                if (!value_at(sh)) continue;
                std::ostringstream os;
                os << "(";
                for (int t = 0; t < n; ++t) {
                    if (t) os << ", ";
                    os << (a[static_cast<std::size_t>(t)] +
                           Rational(sh[static_cast<std::size_t>(t)]))
                              .str();
                }
                os << ")";
                out.witness = os.str();
            }
    if (out.witness.empty()) throw EvalError("ma_criterion: no witness in search range");
    return out;
}

} // namespace kmv
