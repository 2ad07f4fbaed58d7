#pragma once

// The fraction field of the Laurent ring, in canonical form:
// numerator is a Laurent polynomial, denominator a monic polynomial with
// nonzero constant term, gcd(numerator, denominator) = 1.  An element lies
// in the Laurent ring exactly when its denominator is 1.

#include <stdexcept>
#include <string>

#include "pearl/laurent.hpp"

namespace pearl {

template <class F>
class RatFun {
    Laurent<F> num_;
    Laurent<F> den_;

    void normalize() {
        if (den_.is_zero())
            throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Laurent<F>::one();
            return;
        }
        // Pull the pure t-power out of the denominator into the numerator.
        int a = *den_.filtration_level();
        den_ = den_.shifted(-a);
        num_ = num_.shifted(-a);
        // Cancel the common polynomial factor; the numerator may stay Laurent.
        int b = *num_.filtration_level();
        Laurent<F> n0 = num_.shifted(b < 0 ? -b : 0);
        Laurent<F> g = Laurent<F>::gcd(n0, den_);
        if (!(g == Laurent<F>::one())) {
            n0 = Laurent<F>::divmod(n0, g).first;
            den_ = Laurent<F>::divmod(den_, g).first;
            num_ = n0.shifted(b < 0 ? b : 0);
        }
        F lc = den_.terms().rbegin()->second;
        if (!lc.is_one()) {
            F inv = F::one() / lc;
            den_ = den_.scaled(inv);
            num_ = num_.scaled(inv);
        }
    }

public:
    RatFun() : num_(Laurent<F>::zero()), den_(Laurent<F>::one()) {}
    RatFun(Laurent<F> n, Laurent<F> d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    explicit RatFun(const Laurent<F>& n) : num_(n), den_(Laurent<F>::one()) {}

    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(Laurent<F>::one()); }

    const Laurent<F>& num() const { return num_; }
    const Laurent<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Laurent<F>::one() && den_ == Laurent<F>::one(); }
    bool is_laurent() const { return den_ == Laurent<F>::one(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero())
            throw std::domain_error("rational function division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = Laurent<F>::zero() - r.num_;
        return r;
    }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        if (is_laurent())
            return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }
};

}  // namespace pearl
