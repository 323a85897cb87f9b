#pragma once

#include <string>

#include "kmv/multipoly.hpp"

namespace kmv {

// Ratio of two univariate polynomials in the level symbol k. Kept reduced by
// content only: the denominator has integer-free content 1 and positive
// leading coefficient. No polynomial gcd is attempted (out of scope); table
// data is entered in factored form so common factors do not arise.
class RationalFunc {
public:
    RationalFunc() : num_(Rational(0)), den_(Rational(1)) {}
    RationalFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw UsageError("RationalFunc: zero denominator");
        normalize();
    }
    RationalFunc(const Rational& c) : num_(c), den_(Rational(1)) {} // NOLINT
    RationalFunc(const MultiPoly& p) : num_(p), den_(Rational(1)) {} // NOLINT

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunc operator-() const { return RationalFunc(-num_, den_); }
    friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
        return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
        if (b.num_.is_zero()) throw EvalError("RationalFunc: division by zero");
        return RationalFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RationalFunc& a, const RationalFunc& b) {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }

    // Evaluate at k = k0. A denominator zero is a pole and an error.
    Rational eval(const std::string& var, const Rational& k0) const {
        Rational d = eval_poly(den_, var, k0);
        if (d.is_zero()) throw EvalError("RationalFunc: pole at " + var + " = " + k0.str());
        return eval_poly(num_, var, k0) / d;
    }

    std::string str() const {
        if (den_ == MultiPoly(Rational(1))) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    static Rational eval_poly(const MultiPoly& p, const std::string& var, const Rational& k0) {
        Rational out(0);
        for (const auto& [e, c] : p.terms()) {
            Rational term = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (p.vars()->name(i) != var)
                    throw UsageError("RationalFunc.eval: unassigned indeterminate " +
                                     p.vars()->name(i));
                for (int j = 0; j < e[i]; ++j) term *= k0;
            }
            out += term;
        }
        return out;
    }

    void normalize() {
        Rational c = den_.content();
        if (den_.leading_coeff().sign() < 0) c = -c;
        if (!c.is_zero() && !c.is_one()) {
            Rational inv = Rational(1) / c;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    MultiPoly num_;
    MultiPoly den_;
};

} // namespace kmv
