// ratfunc.hpp
//
// Elements of the coefficient field K: multivariate rational functions
// over Q in the index variables and parameters. Kept normalized (numerator
// and denominator coprime, denominator integer-primitive with positive
// leading coefficient) so equality and the zero test are structural.
//
// The shift action substitutes x_i -> x_i + 1 in index variables; it is a
// field automorphism and fixes parameters.

#ifndef DIFFALG_RATFUNC_HPP
#define DIFFALG_RATFUNC_HPP

#include <algorithm>
#include <string>

#include "diffalg/errors.hpp"
#include "diffalg/multipoly.hpp"
#include "diffalg/rational.hpp"

namespace diffalg {

class RationalFunction {
public:
    RationalFunction() : num_(0), den_(MultiPoly::constant(0, Rational(1))) {}

    static RationalFunction from_rational(int nvars, const Rational& c) {
        return RationalFunction(MultiPoly::constant(nvars, c), MultiPoly::constant(nvars, Rational(1)), false);
    }

    static RationalFunction variable(int nvars, int v) {
        return RationalFunction(MultiPoly::variable(nvars, v), MultiPoly::constant(nvars, Rational(1)), false);
    }

    static RationalFunction from_poly(MultiPoly p) {
        MultiPoly one = MultiPoly::constant(p.nvars(), Rational(1));
        return RationalFunction(std::move(p), std::move(one), false);
    }

    static RationalFunction make(MultiPoly num, MultiPoly den) {
        if (den.is_zero()) fail(ErrorKind::Argument, "zero denominator");
        return RationalFunction(std::move(num), std::move(den), true);
    }

    int nvars() const { return den_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && den_.constant_value() == 1 && num_.is_constant() &&
                                 num_.constant_value() == 1; }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

    Rational rational_value() const {
        if (!is_rational()) fail(ErrorKind::Internal, "rational_value on non-constant coefficient");
        if (num_.is_zero()) return Rational(0);
        return num_.constant_value() / den_.constant_value();
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, false); }

    // Zero values (e.g. default-constructed, arity 0) are arity-polymorphic:
    // the nonzero operand decides the result's variable set.
    RationalFunction operator+(const RationalFunction& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        check_arity(o);
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_, true);
    }

    RationalFunction operator-(const RationalFunction& o) const {
        if (o.is_zero()) return *this;
        if (is_zero()) return -o;
        check_arity(o);
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_, true);
    }

    RationalFunction operator*(const RationalFunction& o) const {
        if (is_zero() || o.is_zero()) return from_rational(std::max(nvars(), o.nvars()), Rational(0));
        check_arity(o);
        return RationalFunction(num_ * o.num_, den_ * o.den_, true);
    }

    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) fail(ErrorKind::Argument, "division by zero coefficient");
        if (is_zero()) return from_rational(std::max(nvars(), o.nvars()), Rational(0));
        check_arity(o);
        return RationalFunction(num_ * o.den_, den_ * o.num_, true);
    }

    RationalFunction inverse() const {
        if (is_zero()) fail(ErrorKind::Argument, "inverse of zero coefficient");
        return RationalFunction(den_, num_, true);
    }

    bool operator==(const RationalFunction& o) const {
        if (nvars() != o.nvars()) {
            if (is_zero() && o.is_zero()) return true;
            if (is_zero() || o.is_zero()) return false;
            fail(ErrorKind::Internal, "coefficient arity mismatch in comparison");
        }
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // Applies the shift x_v -> x_v + steps to one variable. An automorphism
    // of K, so normalization is preserved up to the (cheap) renormalization
    // performed here for safety.
    RationalFunction shift_var(int v, long steps = 1) const {
        if (steps == 0 || is_zero()) return *this;
        return RationalFunction(num_.shift_var(v, steps), den_.shift_var(v, steps), true);
    }

    // Machine-readable canonical key.
    std::string key() const { return num_.key() + "/" + den_.key(); }

private:
    RationalFunction(MultiPoly num, MultiPoly den, bool wants_normalize) : num_(std::move(num)), den_(std::move(den)) {
        if (wants_normalize) normalize();
    }

    void check_arity(const RationalFunction& o) const {
        if (nvars() != o.nvars()) fail(ErrorKind::Internal, "coefficient arity mismatch");
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(den_.nvars(), Rational(1));
            return;
        }
        MultiPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            auto qn = num_.divide_exact(g), qd = den_.divide_exact(g);
            if (!qn || !qd) fail(ErrorKind::Internal, "gcd does not divide its arguments");
            num_ = *qn;
            den_ = *qd;
        }
        Rational c = den_.rational_content();
        num_ = num_.scaled(Rational(1) / c);
        den_ = den_.scaled(Rational(1) / c);
    }

    MultiPoly num_, den_;
};

// Shifts every index variable v by beta[v] steps; parameters (variables at
// positions >= beta.size()) are fixed.
inline RationalFunction shift_coeff(const RationalFunction& c, const std::vector<int>& beta) {
    RationalFunction r = c;
    for (size_t v = 0; v < beta.size(); ++v)
        if (beta[v] != 0) r = r.shift_var(static_cast<int>(v), beta[v]);
    return r;
}

}  // namespace diffalg

#endif
