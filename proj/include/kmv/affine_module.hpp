#pragma once

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "kmv/enveloping.hpp"
#include "kmv/root_system.hpp"

namespace kmv {

// ---- top-space models for generalized Verma style modules ----

// One-dimensional vacuum top: every zero mode kills it.
struct TrivialModel {};

// Symmetric power of the (dual) natural representation, realizing V(n w_1)
// resp. V(n w_last). Exponents of the lowered variables are explicit; the
// highest-weight variable's exponent is implicit (n minus the rest), which
// is what makes a symbolic n work.
struct SymPowerModel {
    enum Dir { First, Last } dir = First;
    MultiPoly n_value; // constant or the symbol n
};

// Highest-weight vector with numeric weight, lowered by zero-mode f's,
// modulo exactly the declared zero-label annihilations: f_alpha(0) v = 0 for
// simple alpha with <lambda, alpha^vee> = 0 (and their bracket closure: the
// PBW basis drops every monomial containing an f whose root is supported on
// zero-label nodes only). Vanishing here implies vanishing in the simple
// quotient; the converse is not claimed.
struct LoweredModel {
    std::vector<Rational> lambda;    // fundamental coordinates
    std::vector<char> annih;         // per gen id: annihilating f-generator
};

using TopModel = std::variant<TrivialModel, SymPowerModel, LoweredModel>;

struct ModuleContext {
    const RootSystem* rs = nullptr;
    Rational k;
    TopModel top;
};

inline LoweredModel make_lowered(const RootSystem& rs, std::vector<Rational> lambda) {
    LoweredModel m;
    m.lambda = std::move(lambda);
    m.annih.assign(static_cast<std::size_t>(rs.num_gens()), 0);
    for (int id = 0; id < rs.num_gens(); ++id) {
        const Gen& g = rs.gen(id);
        if (g.kind != 'f') continue;
        bool zero_support = true;
        for (int t = g.i; t < g.j; ++t)
            if (!m.lambda[static_cast<std::size_t>(t - 1)].is_zero()) zero_support = false;
        m.annih[static_cast<std::size_t>(id)] = zero_support ? 1 : 0;
    }
    return m;
}

// ---- module vectors ----

// Strictly negative modes, sorted ascending by (mode, generator id); the
// top monomial encoding depends on the model.
using AffWord = std::vector<std::pair<int, int>>; // (gen id, mode < 0)
using TopMono = std::vector<int>;
using MVKey = std::pair<AffWord, TopMono>;
using ModuleVector = std::map<MVKey, MultiPoly>;

inline void mv_add(ModuleVector& out, const MVKey& key, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto it = out.find(key);
    if (it == out.end()) out[key] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

inline ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
    ModuleVector out = a;
    for (const auto& [key, c] : b) mv_add(out, key, c);
    return out;
}

inline ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) {
    ModuleVector out = a;
    for (const auto& [key, c] : b) mv_add(out, key, -c);
    return out;
}

inline ModuleVector operator*(const MultiPoly& s, const ModuleVector& a) {
    ModuleVector out;
    for (const auto& [key, c] : a) mv_add(out, key, s * c);
    return out;
}

inline TopMono top_highest(const ModuleContext& ctx) {
    if (std::holds_alternative<SymPowerModel>(ctx.top))
        return TopMono(static_cast<std::size_t>(ctx.rs->n() - 1), 0);
    return {};
}

inline ModuleVector mv_highest(const ModuleContext& ctx) {
    return ModuleVector{{{AffWord{}, top_highest(ctx)}, MultiPoly(Rational(1))}};
}

namespace detail {

using TopTerms = std::vector<std::pair<TopMono, MultiPoly>>;

// x_r d/dx_c on the natural symmetric power (explicit slots = vars 2..n).
inline void sympower_shift(const ModuleContext& ctx, const SymPowerModel& m, int r, int c,
                           const TopMono& top, const MultiPoly& sign, TopTerms& out) {
    int n = ctx.rs->n();
    int lowered_base = m.dir == SymPowerModel::First ? 2 : 1; // first explicit variable
    int implicit_var = m.dir == SymPowerModel::First ? 1 : n;
    auto slot = [&](int v) { return static_cast<std::size_t>(v - lowered_base); };
    MultiPoly coeff;
    if (c == implicit_var) {
        MultiPoly expl;
        for (int e : top) expl += MultiPoly(Rational(e));
        coeff = m.n_value - expl;
    } else {
        coeff = MultiPoly(Rational(top[slot(c)]));
    }
    coeff = coeff * sign;
    if (coeff.is_zero()) return;
    TopMono t = top;
    if (c != implicit_var) t[slot(c)] -= 1;
    if (r != implicit_var) t[slot(r)] += 1;
    out.push_back({std::move(t), std::move(coeff)});
}

inline TopTerms top_act(const ModuleContext& ctx, int genid, const TopMono& top) {
    const Gen& g = ctx.rs->gen(genid);
    TopTerms out;
    if (std::holds_alternative<TrivialModel>(ctx.top)) return out;

    if (const auto* m = std::get_if<SymPowerModel>(&ctx.top)) {
        if (m->dir == SymPowerModel::First) {
            // E(r,c) -> x_r d_c
            if (g.kind == 'h') {
                TopTerms a, b;
                sympower_shift(ctx, *m, g.i, g.i, top, MultiPoly(Rational(1)), a);
                sympower_shift(ctx, *m, g.i + 1, g.i + 1, top, MultiPoly(Rational(-1)), b);
                out = a;
                for (auto& t : b) out.push_back(std::move(t));
            } else {
                int r = g.kind == 'e' ? g.i : g.j;
                int c = g.kind == 'e' ? g.j : g.i;
                sympower_shift(ctx, *m, r, c, top, MultiPoly(Rational(1)), out);
            }
        } else {
            // Contragredient: E(r,c) -> -y_c d_r
            if (g.kind == 'h') {
                TopTerms a, b;
                sympower_shift(ctx, *m, g.i, g.i, top, MultiPoly(Rational(-1)), a);
                sympower_shift(ctx, *m, g.i + 1, g.i + 1, top, MultiPoly(Rational(1)), b);
                out = a;
                for (auto& t : b) out.push_back(std::move(t));
            } else {
                int r = g.kind == 'e' ? g.i : g.j;
                int c = g.kind == 'e' ? g.j : g.i;
                sympower_shift(ctx, *m, c, r, top, MultiPoly(Rational(-1)), out);
            }
        }
        return out;
    }

    const auto& m = std::get<LoweredModel>(ctx.top);
    const RootSystem& rs = *ctx.rs;
    // Adapted PBW rank: annihilating f's sort to the right.
    auto arank = [&](int id) {
        return std::pair<int, int>(m.annih[static_cast<std::size_t>(id)] ? 1 : 0, id);
    };
    // Recursive zero-mode straightening inside U(n_-) v_lambda.
    auto rec = [&](auto&& self, int gid, const TopMono& w) -> TopTerms {
        const Gen& gg = rs.gen(gid);
        if (gg.kind == 'f' && (w.empty() || arank(gid) <= arank(w[0]))) {
            TopMono t;
            t.reserve(w.size() + 1);
            t.push_back(gid);
            t.insert(t.end(), w.begin(), w.end());
            return {{std::move(t), MultiPoly(Rational(1))}};
        }
        if (w.empty()) {
            if (gg.kind == 'e') return {};
            // 'h': scalar lambda(h_i)
            return {{TopMono{}, MultiPoly(m.lambda[static_cast<std::size_t>(gg.i - 1)])}};
        }
        int head = w[0];
        TopMono rest(w.begin() + 1, w.end());
        TopTerms out2;
        for (auto& [sub, c] : self(self, gid, rest))
            for (auto& [sub2, c2] : self(self, head, sub)) out2.push_back({sub2, c * c2});
        for (const auto& [g2, s] : rs.bracket(gid, head))
            for (auto& [sub, c] : self(self, g2, rest)) out2.push_back({sub, c * s});
        return out2;
    };
    TopTerms raw = rec(rec, genid, top);
    // Drop monomials containing an annihilating factor; merge duplicates.
    std::map<TopMono, MultiPoly> merged;
    for (auto& [w, c] : raw) {
        bool dead = false;
        for (int id : w)
            if (m.annih[static_cast<std::size_t>(id)]) dead = true;
        if (dead) continue;
        auto it = merged.find(w);
        if (it == merged.end()) merged[w] = c;
        else it->second += c;
    }
    for (auto& [w, c] : merged)
        if (!c.is_zero()) out.push_back({w, c});
    return out;
}

} // namespace detail

// x(mode) applied to one canonical term; appends results to out.
inline void act_basis(const ModuleContext& ctx, int genid, int mode, const AffWord& word,
                      const TopMono& top, const MultiPoly& coeff, ModuleVector& out) {
    if (coeff.is_zero()) return;
    auto key = std::pair<int, int>(mode, genid);
    if (mode < 0 &&
        (word.empty() || key <= std::pair<int, int>(word[0].second, word[0].first))) {
        AffWord w;
        w.reserve(word.size() + 1);
        w.push_back({genid, mode});
        w.insert(w.end(), word.begin(), word.end());
        mv_add(out, {std::move(w), top}, coeff);
        return;
    }
    if (word.empty()) {
        if (mode > 0) return; // kills the top space
        for (const auto& [t, c] : detail::top_act(ctx, genid, top))
            mv_add(out, {AffWord{}, t}, coeff * c);
        return;
    }
    // x(m) y(l) = y(l) x(m) + [x,y](m+l) + m delta_{m+l,0} (x|y) K
    auto [hgen, hmode] = word[0];
    AffWord rest(word.begin() + 1, word.end());
    ModuleVector tail;
    act_basis(ctx, genid, mode, rest, top, coeff, tail);
    for (const auto& [k2, c2] : tail) act_basis(ctx, hgen, hmode, k2.first, k2.second, c2, out);
    for (const auto& [g2, s] : ctx.rs->bracket(genid, hgen))
        act_basis(ctx, g2, mode + hmode, rest, top, coeff * s, out);
    if (mode + hmode == 0) {
        Rational central = ctx.rs->form(genid, hgen) * Rational(mode) * ctx.k;
        mv_add(out, {rest, top}, coeff * central);
    }
}

inline ModuleVector act(const ModuleContext& ctx, int genid, int mode, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [key, c] : v) act_basis(ctx, genid, mode, key.first, key.second, c, out);
    return out;
}

inline ModuleVector act(const ModuleContext& ctx, const GElem& x, int mode,
                        const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [id, cx] : x)
        for (const auto& [key, c] : v)
            act_basis(ctx, id, mode, key.first, key.second, c * cx, out);
    return out;
}

// ---- degree / weight bookkeeping ----

inline Weight top_weight(const ModuleContext& ctx, const TopMono& top) {
    int rank = ctx.rs->rank();
    Weight w(static_cast<std::size_t>(rank), MultiPoly());
    if (std::holds_alternative<TrivialModel>(ctx.top)) return w;
    if (const auto* m = std::get_if<SymPowerModel>(&ctx.top)) {
        int n = ctx.rs->n();
        // exponent of variable v as a polynomial
        auto expo = [&](int v) -> MultiPoly {
            int lowered_base = m->dir == SymPowerModel::First ? 2 : 1;
            int implicit_var = m->dir == SymPowerModel::First ? 1 : n;
            if (v == implicit_var) {
                MultiPoly e;
                for (int x : top) e += MultiPoly(Rational(x));
                return m->n_value - e;
            }
            return MultiPoly(Rational(top[static_cast<std::size_t>(v - lowered_base)]));
        };
        for (int t = 1; t < n; ++t) {
            MultiPoly d = expo(t) - expo(t + 1);
            w[static_cast<std::size_t>(t - 1)] =
                m->dir == SymPowerModel::First ? d : MultiPoly() - d;
        }
        return w;
    }
    const auto& m = std::get<LoweredModel>(ctx.top);
    for (int t = 0; t < rank; ++t) w[static_cast<std::size_t>(t)] = MultiPoly(m.lambda[static_cast<std::size_t>(t)]);
    for (int id : top) {
        const auto& gw = ctx.rs->gen_weight(id);
        for (int t = 0; t < rank; ++t) w[static_cast<std::size_t>(t)] += MultiPoly(Rational(gw[static_cast<std::size_t>(t)]));
    }
    return w;
}

// Degree (minus the mode sum) and g-weight; errors if the vector is not
// homogeneous in both.
inline std::pair<int, Weight> degree_and_weight(const ModuleContext& ctx,
                                                const ModuleVector& v) {
    if (v.empty()) throw UsageError("degree_and_weight: zero vector");
    bool first = true;
    int deg = 0;
    Weight wt;
    for (const auto& [key, c] : v) {
        int d = 0;
        Weight w = top_weight(ctx, key.second);
        for (auto [g, m] : key.first) {
            d -= m;
            const auto& gw = ctx.rs->gen_weight(g);
            for (std::size_t t = 0; t < w.size(); ++t) w[t] += MultiPoly(Rational(gw[t]));
        }
        if (first) {
            deg = d;
            wt = w;
            first = false;
        } else if (d != deg || !weight_eq(w, wt)) {
            throw UsageError("degree_and_weight: vector not homogeneous");
        }
    }
    return {deg, wt};
}

// ---- golden-file construction ----

// Build a vector by applying parsed factors right-to-left to the
// highest-weight term. Every factor needs an explicit mode.
inline ModuleVector mv_from_terms(const ModuleContext& ctx, const std::vector<ParsedTerm>& terms) {
    ModuleVector out;
    for (const auto& t : terms) {
        ModuleVector cur = mv_highest(ctx);
        for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
            if (!it->mode) throw UsageError("mv_from_terms: factor without mode");
            int id = ctx.rs->gen_id(it->kind, it->i, it->j);
            for (int p = 0; p < it->power; ++p) cur = act(ctx, id, *it->mode, cur);
        }
        out = out + (t.coeff * cur);
    }
    return out;
}

inline ModuleVector mv_parse_lines(const ModuleContext& ctx, const std::vector<std::string>& lines,
                                   const VarSetPtr& vars = nullptr) {
    std::vector<ParsedTerm> terms;
    for (const auto& line : lines) terms.push_back(parse_term_line(line, vars));
    return mv_from_terms(ctx, terms);
}

inline std::string mv_str(const ModuleContext& ctx, const ModuleVector& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : v) {
        os << (first ? "" : "  +  ") << "(" << c.str() << ")";
        for (auto [g, m] : key.first) os << " " << ctx.rs->gen_str(g) << "(" << m << ")";
        if (std::holds_alternative<LoweredModel>(ctx.top)) {
            for (int id : key.second) os << " " << ctx.rs->gen_str(id) << "(0)";
            os << " v";
        } else if (std::holds_alternative<SymPowerModel>(ctx.top)) {
            os << " m[";
            for (std::size_t i = 0; i < key.second.size(); ++i)
                os << (i ? "," : "") << key.second[i];
            os << "]";
        } else {
            os << " 1";
        }
        first = false;
    }
    return os.str();
}

} // namespace kmv
