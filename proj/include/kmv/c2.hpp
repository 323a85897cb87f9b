#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "affine_module.hpp"
#include "io.hpp"
#include "parse.hpp"
#include "root_system.hpp"

namespace kmv {

// Element of the associated-graded quotient: a commutative word of generator
// symbols (the surviving mode -1 letters, id-sorted) tensor a top-space
// monomial.
using SGKey = std::pair<std::vector<int>, TopMono>;
using SGElement = std::map<SGKey, MultiPoly>;

inline void sg_add(SGElement& out, const SGKey& key, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto it = out.find(key);
    if (it == out.end()) out[key] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

inline SGElement operator+(const SGElement& a, const SGElement& b) {
    SGElement out = a;
    for (const auto& [key, c] : b) sg_add(out, key, c);
    return out;
}

inline SGElement operator-(const SGElement& a, const SGElement& b) {
    SGElement out = a;
    for (const auto& [key, c] : b) sg_add(out, key, -c);
    return out;
}

inline SGElement operator*(const MultiPoly& s, const SGElement& a) {
    SGElement out;
    for (const auto& [key, c] : a) sg_add(out, key, s * c);
    return out;
}

// Multiplication by one generator symbol.
inline SGElement sg_symbol_mul(int genid, const SGElement& a) {
    SGElement out;
    for (const auto& [key, c] : a) {
        SGKey k2 = key;
        k2.first.insert(std::upper_bound(k2.first.begin(), k2.first.end(), genid), genid);
        sg_add(out, k2, c);
    }
    return out;
}

// Mode -1 letters become commuting symbols, anything deeper dies in the
// quotient, the top part is carried along unchanged. Nonnegative modes have
// no canonical image here and are a usage error.
inline SGElement c2_project(const ModuleContext& ctx, const ModuleVector& v) {
    (void)ctx;
    SGElement out;
    for (const auto& [key, c] : v) {
        bool dead = false;
        std::vector<int> syms;
        for (const auto& [gid, mode] : key.first) {
            if (mode >= 0) throw UsageError("c2_project: creation modes only");
            if (mode <= -2) {
                dead = true;
                break;
            }
            syms.push_back(gid);
        }
        if (dead) continue;
        std::sort(syms.begin(), syms.end());
        sg_add(out, {std::move(syms), key.second}, c);
    }
    return out;
}

inline std::string sg_str(const ModuleContext& ctx, const SGElement& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : v) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << c.str() << ")";
        for (int gid : key.first) os << " " << ctx.rs->gen_str(gid);
        if (!key.second.empty()) {
            os << " |";
            for (int t : key.second) os << " " << t;
        }
    }
    return os.str();
}

// Golden-file loader. Line format: coefficient and symbol factors, then an
// optional '|' and zero-mode factors applied to the top vector, rightmost
// first. The '|' is split off before lexing; it is not part of the grammar.
inline SGElement load_sg(const ModuleContext& ctx, const std::filesystem::path& dir,
                         const std::string& name, const VarSetPtr& vars = nullptr) {
    SGElement out;
    for (const auto& line : data_lines(load_golden(dir, name).content)) {
        std::string left = line, right;
        if (auto bar = line.find('|'); bar != std::string::npos) {
            left = line.substr(0, bar);
            right = line.substr(bar + 1);
        }
        ParsedTerm syms = parse_term_line(left, vars);
        std::vector<int> ids;
        for (const auto& f : syms.factors) {
            if (f.mode) throw UsageError("load_sg: symbol factors carry no mode");
            for (int p = 0; p < f.power; ++p) ids.push_back(ctx.rs->gen_id(f.kind, f.i, f.j));
        }
        std::sort(ids.begin(), ids.end());

        ModuleVector top = mv_highest(ctx);
        if (!right.empty()) {
            ParsedTerm tf = parse_term_line(right, vars);
            if (!tf.coeff.is_constant() || !tf.coeff.constant_value().is_one())
                throw UsageError("load_sg: top factors carry no coefficient");
            for (auto it = tf.factors.rbegin(); it != tf.factors.rend(); ++it) {
                if (it->mode && *it->mode != 0)
                    throw UsageError("load_sg: top factors act at mode zero");
                int id = ctx.rs->gen_id(it->kind, it->i, it->j);
                for (int p = 0; p < it->power; ++p) top = act(ctx, id, 0, top);
            }
        }
        for (const auto& [key, c] : top) {
            if (!key.first.empty()) throw UsageError("load_sg: top action left the top space");
            sg_add(out, {ids, key.second}, syms.coeff * c);
        }
    }
    return out;
}

// ---- the 1|2 grading and the restriction functional ----

struct GradingData {
    GElem x;                       // semisimple grading element
    std::map<int, Rational> j;     // ad-eigenvalue per generator
    std::vector<int> deg1, deg2;   // raising generators of degree 1 and 2
    std::map<int, Rational> chi;   // restriction functional on degrees 1 and 2
};

// x = (3 h1 + 6 h2 + 5 h3)/4 is the unique Cartan element with simple-root
// values (0,1,1); chi pairs the degree >= 1 part against f[2,3] + f[3,4].
inline GradingData compute_grading(const RootSystem& rs) {
    if (rs.n() != 4) throw UsageError("compute_grading: rank-3 system required");
    GradingData out;
    out.x = gelem(rs.h_id(1), MultiPoly(Rational(BigInt(3), BigInt(4)))) +
            gelem(rs.h_id(2), MultiPoly(Rational(BigInt(3), BigInt(2)))) +
            gelem(rs.h_id(3), MultiPoly(Rational(BigInt(5), BigInt(4))));
    for (int id = 0; id < rs.num_gens(); ++id) {
        GElem br = bracket(rs, out.x, gelem(id));
        if (br.empty()) {
            out.j[id] = Rational(0);
            continue;
        }
        if (br.size() != 1 || br.begin()->first != id)
            throw EvalError("compute_grading: grading element is not diagonal");
        out.j[id] = br.begin()->second.constant_value();
    }
    GElem chi_elem = gelem(rs.gen_id('f', 2, 3)) + gelem(rs.gen_id('f', 3, 4));
    for (int id = 0; id < rs.num_gens(); ++id) {
        if (out.j[id] == Rational(1)) out.deg1.push_back(id);
        if (out.j[id] == Rational(2)) out.deg2.push_back(id);
        if (out.j[id].sign() > 0)
            out.chi[id] = inv_form(rs, chi_elem, gelem(id)).constant_value();
    }
    return out;
}

// The ad-eigenvalues are a Lie algebra grading: j([a,b]) = j(a)+j(b) on
// every pair with nonvanishing bracket.
inline bool grading_is_additive(const RootSystem& rs, const GradingData& gd) {
    for (int a = 0; a < rs.num_gens(); ++a)
        for (int b = 0; b < rs.num_gens(); ++b)
            for (const auto& [g, s] : rs.bracket(a, b))
                if (!(gd.j.at(g) == gd.j.at(a) + gd.j.at(b))) return false;
    return true;
}

// Substitute chi for every positive-degree symbol; zero values kill the
// term, degree <= 0 symbols survive unchanged.
inline SGElement jchi_reduce(const GradingData& gd, const SGElement& v) {
    SGElement out;
    for (const auto& [key, c] : v) {
        Rational scale(1);
        bool dead = false;
        std::vector<int> kept;
        for (int gid : key.first) {
            auto it = gd.chi.find(gid);
            if (it == gd.chi.end()) {
                kept.push_back(gid);
                continue;
            }
            if (it->second.is_zero()) {
                dead = true;
                break;
            }
            scale *= it->second;
        }
        if (dead) continue;
        sg_add(out, {std::move(kept), key.second}, MultiPoly(scale) * c);
    }
    return out;
}

} // namespace kmv
