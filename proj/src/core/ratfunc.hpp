#pragma once

#include "polynomial.hpp"

namespace duality {

// Rational function num/den over Q[x1..xn], kept reduced with a monic
// denominator so equality is structural.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(Polynomial num)
        : num_(std::move(num)), den_(num_.ring(), Rational(1)) {}
    RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::runtime_error("RatFunc: zero denominator");
        reduce();
    }

    static RatFunc constant(const RingPtr& ring, const Rational& c) {
        return RatFunc(Polynomial(ring, c));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::runtime_error("RatFunc: division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial(den_.ring(), Rational(1));
            return;
        }
        Polynomial g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        Rational lc = den_.leading().c;
        if (lc != 1) {
            num_ = num_ * (Rational(1) / lc);
            den_ = den_ * (Rational(1) / lc);
        }
    }

    Polynomial num_, den_;
};

} // namespace duality
