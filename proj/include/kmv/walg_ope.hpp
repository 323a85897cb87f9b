#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "io.hpp"
#include "parse.hpp"
#include "rationalfunc.hpp"
#include "root_system.hpp"

namespace kmv {

// One term of a pole coefficient: a rational function of the level times a
// named field of the algebra ("1" is the identity, dX a derivative, :X..: a
// normally ordered product).
struct OpeTerm {
    RationalFunc coeff;
    std::string field;
};

class OpeTable {
public:
    using Entry = std::map<int, std::vector<OpeTerm>>;

    static OpeTable load(const std::string& dir, const std::string& name = "ope_subreg_sl4.toml") {
        GoldenFile g = load_golden(dir, name);
        OpeTable t;
        VarSetPtr kv = VarSet::make({"k"});
        std::pair<std::string, std::string> cur;
        bool in_block = false;
        for (const std::string& raw : data_lines(g.content)) {
            std::string line = detail_trim(raw);
            if (line == "[[ope]]") {
                cur = {};
                in_block = true;
                continue;
            }
            auto eq = line.find('=');
            if (eq == std::string::npos) throw DataError(name + ": expected key = value");
            std::string key = detail_trim(line.substr(0, eq));
            std::string val = detail_trim(line.substr(eq + 1));
            if (key == "schema") {
                t.schema_ = unquote(val);
                continue;
            }
            if (!in_block) throw DataError(name + ": key outside a table entry");
            if (key == "left") {
                cur.first = unquote(val);
            } else if (key == "right") {
                cur.second = unquote(val);
            } else if (key.rfind("pole", 0) == 0) {
                if (cur.first.empty() || cur.second.empty())
                    throw DataError(name + ": pole before left/right");
                int p = std::stoi(key.substr(4));
                t.entries_[cur][p] = parse_terms(val, kv, name);
            } else {
                throw DataError(name + ": unknown key '" + key + "'");
            }
        }
        if (t.schema_ != "ope-table-v1") throw DataError(name + ": unsupported schema");
        return t;
    }

    const std::string& schema() const { return schema_; }
    const std::map<std::pair<std::string, std::string>, Entry>& entries() const { return entries_; }

    const Entry& at(const std::string& l, const std::string& r) const {
        auto it = entries_.find({l, r});
        if (it == entries_.end()) throw DataError("ope table: no entry " + l + " " + r);
        return it->second;
    }

    // Sum of the matching field's coefficients in the given pole, evaluated
    // at a concrete level. Missing pole or field means zero.
    Rational coefficient(const std::string& l, const std::string& r, int pole,
                         const std::string& field, const Rational& k0) const {
        const Entry& e = at(l, r);
        auto it = e.find(pole);
        if (it == e.end()) return Rational(0);
        Rational out(0);
        for (const OpeTerm& t : it->second)
            if (t.field == field) out += t.coeff.eval("k", k0);
        return out;
    }

private:
    static std::string detail_trim(const std::string& s) {
        std::size_t a = 0, b = s.size();
        while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
        return s.substr(a, b - a);
    }
    static std::string unquote(const std::string& s) {
        if (s.size() < 2 || s.front() != '"' || s.back() != '"')
            throw DataError("ope table: expected quoted string, got " + s);
        return s.substr(1, s.size() - 2);
    }
    // [["expr", "field"], ...] on a single line
    static std::vector<OpeTerm> parse_terms(const std::string& s, const VarSetPtr& kv,
                                            const std::string& name) {
        std::vector<OpeTerm> out;
        std::size_t i = 0;
        auto skip = [&] {
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        };
        auto expect = [&](char c) {
            skip();
            if (i >= s.size() || s[i] != c)
                throw DataError(name + ": expected '" + std::string(1, c) + "' in " + s);
            ++i;
        };
        auto quoted = [&] {
            skip();
            if (i >= s.size() || s[i] != '"') throw DataError(name + ": expected string in " + s);
            std::size_t j = s.find('"', i + 1);
            if (j == std::string::npos) throw DataError(name + ": unterminated string");
            std::string v = s.substr(i + 1, j - i - 1);
            i = j + 1;
            return v;
        };
        expect('[');
        skip();
        while (i < s.size() && s[i] != ']') {
            expect('[');
            std::string expr = quoted();
            expect(',');
            std::string field = quoted();
            expect(']');
            out.push_back({parse_rf(expr, kv), field});
            skip();
            if (i < s.size() && s[i] == ',') {
                ++i;
                skip();
            }
        }
        expect(']');
        skip();
        if (i != s.size()) throw DataError(name + ": trailing input in " + s);
        return out;
    }

    std::string schema_;
    std::map<std::pair<std::string, std::string>, Entry> entries_;
};

// The charged-generator OPE data evaluated at one level: which singular
// simplifications hold there.
struct CollapseReport {
    Rational k;
    Rational p4;            // G+ G- fourth-order coefficient of the identity
    Rational p3;            // third-order coefficient of J
    Rational p2_L, p2_JJ, p2_dJ;
    Rational central;       // L L fourth-order coefficient of the identity, c/2
    Rational ww;            // W W leading (sixth-order) coefficient
    Rational charged_w;     // G+ G- first-order coefficient of W; reported only
    bool p4_vanishes = false;
    bool p3_vanishes = false;
    bool p2_is_combination = false; // equals 3/4 (L - 4 :JJ:)
    bool central_is_half = false;
    bool ww_vanishes = false;
    bool collapsed() const {
        return p4_vanishes && p3_vanishes && p2_is_combination && central_is_half && ww_vanishes;
    }
};

inline CollapseReport collapse_check(const OpeTable& t, const Rational& k0) {
    CollapseReport r;
    r.k = k0;
    r.p4 = t.coefficient("G+", "G-", 4, "1", k0);
    r.p3 = t.coefficient("G+", "G-", 3, "J", k0);
    r.p2_L = t.coefficient("G+", "G-", 2, "L", k0);
    r.p2_JJ = t.coefficient("G+", "G-", 2, ":JJ:", k0);
    r.p2_dJ = t.coefficient("G+", "G-", 2, "dJ", k0);
    r.central = t.coefficient("L", "L", 4, "1", k0);
    r.ww = t.coefficient("W", "W", 6, "1", k0);
    r.charged_w = t.coefficient("G+", "G-", 1, "W", k0);
    r.p4_vanishes = r.p4.is_zero();
    r.p3_vanishes = r.p3.is_zero();
    r.p2_is_combination =
        r.p2_L == rat(3, 4) && r.p2_JJ == Rational(-3) && r.p2_dJ.is_zero();
    r.central_is_half = r.central == rat(1, 2);
    r.ww_vanishes = r.ww.is_zero();
    return r;
}

// Top-level data of a reduced highest-weight module: conformal weight after
// shifting by the grading charge, and the charge itself.
struct ReducedTopData {
    MultiPoly delta; // Delta(mu) - (mu | omega_2 + omega_3)
    MultiPoly j0;    // (mu | omega_1)
};

inline ReducedTopData reduced_top_data(const RootSystem& rs, const Weight& mu, const Rational& k) {
    if (rs.n() != 4) throw UsageError("reduced_top_data: rank 3 input");
    Weight x = weight_of_ints({0, 1, 1});
    Weight om1 = weight_of_ints({1, 0, 0});
    ReducedTopData out;
    out.delta = conformal_weight(rs, mu, k) - weight_form(rs, mu, x);
    out.j0 = weight_form(rs, mu, om1);
    return out;
}

struct IntegralityRow {
    int n = 0;
    Rational delta;          // reduced conformal weight
    bool integral = false;   // delta is a nonnegative integer
    Rational affine_delta;   // unreduced conformal weight
    bool affine_integral = false;
    bool excluded = false;   // reduced weight integral but the affine one not
};

// Scan n omega_dir for n = 0..nmax. dir is 1 or 3.
inline std::vector<IntegralityRow> integrality_scan(const RootSystem& rs, int dir, int nmax,
                                                    const Rational& k) {
    std::vector<IntegralityRow> out;
    for (int n = 0; n <= nmax; ++n) {
        std::vector<int> coords(3, 0);
        coords[static_cast<std::size_t>(dir - 1)] = n;
        Weight mu = weight_of_ints(coords);
        ReducedTopData td = reduced_top_data(rs, mu, k);
        IntegralityRow row;
        row.n = n;
        row.delta = td.delta.constant_value();
        row.integral = row.delta.is_nonneg_integer();
        row.affine_delta = conformal_weight(rs, mu, k).constant_value();
        row.affine_integral = row.affine_delta.is_nonneg_integer();
        row.excluded = row.integral && !row.affine_integral;
        out.push_back(row);
    }
    return out;
}

} // namespace kmv
