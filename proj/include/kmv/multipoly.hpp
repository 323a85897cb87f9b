#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "kmv/error.hpp"
#include "kmv/rational.hpp"

namespace kmv {

// Ordered set of indeterminate names, shared by all polynomials of one
// computation context. Exponent vectors are dense against this ordering.
class VarSet {
public:
    static std::shared_ptr<const VarSet> make(std::vector<std::string> names) {
        return std::shared_ptr<const VarSet>(new VarSet(std::move(names)));
    }
    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& v) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == v) return static_cast<int>(i);
        return -1;
    }

private:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;
using Expo = std::vector<int>;

// Graded lexicographic order; larger terms compare greater.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial with Rational coefficients over a declared
// indeterminate set. Invariants: no explicit zero coefficients; the zero
// polynomial has an empty term map; constants carry a null context and lift
// into any other context on demand.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const Rational& c) { // NOLINT: implicit by design
        if (!c.is_zero()) terms_[{}] = c;
    }
    MultiPoly(long long c) : MultiPoly(Rational(c)) {}

    static MultiPoly constant(const Rational& c) { return MultiPoly(c); }

    static MultiPoly var(const VarSetPtr& vars, const std::string& name) {
        int idx = vars->index_of(name);
        if (idx < 0) throw UsageError("MultiPoly: unknown indeterminate " + name);
        MultiPoly p;
        p.vars_ = vars;
        Expo e(vars->size(), 0);
        e[static_cast<std::size_t>(idx)] = 1;
        p.terms_[e] = Rational(1);
        return p;
    }

    static MultiPoly monomial(const VarSetPtr& vars, Expo e, const Rational& c) {
        MultiPoly p;
        p.vars_ = vars;
        if (!c.is_zero()) p.terms_[std::move(e)] = c;
        return p;
    }

    const VarSetPtr& vars() const { return vars_; }
    const std::map<Expo, Rational, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 &&
                std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                            [](int e) { return e == 0; }));
    }
    Rational constant_value() const {
        if (is_zero()) return Rational(0);
        if (!is_constant()) throw UsageError("MultiPoly: not a constant");
        return terms_.begin()->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    Rational coeff(const Expo& e) const {
        auto it = terms_.find(pad(e));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // gcd of all coefficients (positive; 0 for the zero polynomial).
    Rational content() const {
        Rational g(0);
        for (const auto& [e, c] : terms_) g = Rational::gcd(g, c);
        return g.sign() < 0 ? -g : g;
    }
    Rational leading_coeff() const {
        return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out = a.lifted_to(merged_vars(a, b));
        MultiPoly bb = b.lifted_to(out.vars_);
        for (const auto& [e, c] : bb.terms_) out.add_term(e, c);
        return out;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    MultiPoly operator-() const {
        MultiPoly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        VarSetPtr vs = merged_vars(a, b);
        MultiPoly aa = a.lifted_to(vs), bb = b.lifted_to(vs), out;
        out.vars_ = vs;
        for (const auto& [ea, ca] : aa.terms_)
            for (const auto& [eb, cb] : bb.terms_) {
                Expo e = ea;
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    friend MultiPoly operator*(const MultiPoly& a, const Rational& s) {
        MultiPoly out;
        out.vars_ = a.vars_;
        if (!s.is_zero())
            for (const auto& [e, c] : a.terms_) out.terms_[e] = c * s;
        return out;
    }
    friend MultiPoly operator*(const Rational& s, const MultiPoly& a) { return a * s; }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(int k) const {
        if (k < 0) throw UsageError("MultiPoly: negative power");
        MultiPoly out(Rational(1));
        for (int i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    // Structural equality on canonical representatives.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.is_constant() || b.is_constant()) return (a - b).is_zero();
        if (!same_vars(a.vars_, b.vars_)) return false;
        return a.terms_ == b.terms_;
    }

    // Substitution homomorphism. Every indeterminate that actually appears
    // must be assigned; values may be polynomials over a common context.
    MultiPoly eval(const std::map<std::string, MultiPoly>& assignment) const {
        if (!vars_) return *this;
        std::vector<const MultiPoly*> sub(vars_->size(), nullptr);
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            auto it = assignment.find(vars_->name(i));
            if (it != assignment.end()) sub[i] = &it->second;
        }
        MultiPoly out;
        for (const auto& [e, c] : terms_) {
            MultiPoly term{c};
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!sub[i])
                    throw UsageError("MultiPoly.eval: no assignment for " + vars_->name(i));
                term = term * sub[i]->pow(e[i]);
            }
            out = out + term;
        }
        return out;
    }

    // Canonical text: graded-lex descending, "*" products, "^" powers.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = c;
            if (out.empty()) {
                if (a.sign() < 0) { out += "-"; a = -a; }
            } else {
                out += a.sign() < 0 ? " - " : " + ";
                if (a.sign() < 0) a = -a;
            }
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_->name(i);
                if (e[i] != 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) out += a.str();
            else if (a.is_one()) out += mono;
            else out += a.str() + "*" + mono;
        }
        return out;
    }

private:
    static bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
        if (a == b) return true;
        if (!a || !b) return false;
        return a->names() == b->names();
    }
    static VarSetPtr merged_vars(const MultiPoly& a, const MultiPoly& b) {
        if (!a.vars_) return b.vars_;
        if (!b.vars_) return a.vars_;
        if (!same_vars(a.vars_, b.vars_))
            throw UsageError("MultiPoly: indeterminate-set mismatch");
        return a.vars_;
    }
    MultiPoly lifted_to(const VarSetPtr& vs) const {
        if (same_vars(vars_, vs) || !vs) return *this;
        if (vars_) throw UsageError("MultiPoly: indeterminate-set mismatch");
        MultiPoly out;
        out.vars_ = vs;
        for (const auto& [e, c] : terms_) out.terms_[Expo(vs->size(), 0)] = c;
        return out;
    }
    Expo pad(const Expo& e) const {
        if (!vars_ || e.size() == vars_->size()) return e;
        Expo p = e;
        p.resize(vars_->size(), 0);
        return p;
    }
    void add_term(const Expo& e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    VarSetPtr vars_; // null for pure constants
    std::map<Expo, Rational, GrlexLess> terms_;
};

} // namespace kmv
