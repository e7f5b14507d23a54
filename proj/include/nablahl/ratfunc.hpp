// Canonical fractions of Laurent polynomials in (q, t). Every value is kept
// in the normal form: numerator and denominator coprime after clearing
// monomials, denominator monomial-free with unit coefficient on its greatest
// term. Equality of values is structural equality of the normal forms.
#pragma once

#include <stdexcept>
#include <utility>

#include "laurent.hpp"

namespace nablahl {

class RatFunc {
public:
    RatFunc() : den_(LaurentPoly::one()) {}
    RatFunc(const Rational& c) : num_(c), den_(LaurentPoly::one()) {}
    RatFunc(long c) : num_(c), den_(LaurentPoly::one()) {}
    RatFunc(LaurentPoly n) : num_(std::move(n)), den_(LaurentPoly::one()) {}
    RatFunc(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
        canonicalize();
    }

    static RatFunc one() { return RatFunc(1); }
    static RatFunc var_q() { return RatFunc(LaurentPoly::var_q()); }
    static RatFunc var_t() { return RatFunc(LaurentPoly::var_t()); }
    static RatFunc monomial(const Rational& c, int eq, int et) {
        return RatFunc(LaurentPoly::monomial(c, eq, et));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    // member of N[q,t]
    bool is_natural() const { return den_.is_one() && num_.is_natural(); }

    const LaurentPoly& as_laurent() const {
        if (!den_.is_one()) throw std::domain_error("RatFunc: not a Laurent polynomial");
        return num_;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(int e) const {
        if (e >= 0) return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
        if (is_zero()) throw std::invalid_argument("RatFunc: negative power of zero");
        return RatFunc(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc inverted_params() const {
        return RatFunc(num_.inverted_params(), den_.inverted_params());
    }
    RatFunc swapped_params() const {
        return RatFunc(num_.swapped_params(), den_.swapped_params());
    }
    // q |-> t^r, t |-> t^s; throws when the denominator collapses to zero
    RatFunc subst_qt_tpow(int r, int s) const {
        LaurentPoly d = den_.subst_qt_tpow(r, s);
        if (d.is_zero()) throw std::domain_error("RatFunc: substitution hits a pole");
        return RatFunc(num_.subst_qt_tpow(r, s), std::move(d));
    }
    RatFunc subst_q_tpow(int p) const { return subst_qt_tpow(p, 1); }
    RatFunc subst_q_rational(const Rational& v) const {
        LaurentPoly d = den_.subst_q_rational(v);
        if (d.is_zero()) throw std::domain_error("RatFunc: substitution hits a pole");
        return RatFunc(num_.subst_q_rational(v), std::move(d));
    }
    RatFunc subst_t_rational(const Rational& v) const {
        LaurentPoly d = den_.subst_t_rational(v);
        if (d.is_zero()) throw std::domain_error("RatFunc: substitution hits a pole");
        return RatFunc(num_.subst_t_rational(v), std::move(d));
    }
    Rational eval(const Rational& qv, const Rational& tv) const {
        Rational d = den_.eval(qv, tv);
        if (d == 0) throw std::domain_error("RatFunc: evaluation hits a pole");
        return num_.eval(qv, tv) / d;
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        // clear monomial parts so gcd runs on true polynomials
        const Monomial mn = num_.monomial_content();
        const Monomial md = den_.monomial_content();
        LaurentPoly n = num_.shifted(-mn.q, -mn.t);
        LaurentPoly d = den_.shifted(-md.q, -md.t);
        LaurentPoly g = gcd(n, d);
        if (!g.is_one()) {
            LaurentPoly qn, qd;
            if (!divide_exact(n, g, qn) || !divide_exact(d, g, qd))
                throw std::logic_error("RatFunc: gcd does not divide");
            n = std::move(qn);
            d = std::move(qd);
        }
        const Rational lead = d.leading_term().second;
        n.scale(Rational(1) / lead);
        d.scale(Rational(1) / lead);
        num_ = n.shifted(mn.q - md.q, mn.t - md.t);
        den_ = std::move(d);
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace nablahl
