// Sparse exact-rational Laurent polynomials in (q, t), with exact division
// and GCD (primitive pseudo-remainder sequences).
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace nablahl {

struct Monomial {
    int q = 0;
    int t = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Lexicographic order, q before t, higher exponent first means "greater".
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        return a.q != b.q ? a.q < b.q : a.t < b.t;
    }
};

class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) terms_[Monomial{0, 0}] = c;
    }
    explicit LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(const Rational& c, int eq, int et) {
        LaurentPoly p;
        if (c != 0) p.terms_[Monomial{eq, et}] = c;
        return p;
    }
    static LaurentPoly one() { return LaurentPoly(1); }
    static LaurentPoly var_q() { return monomial(Rational(1), 1, 0); }
    static LaurentPoly var_t() { return monomial(Rational(1), 0, 1); }
    static LaurentPoly q_pow(int e) { return monomial(Rational(1), e, 0); }
    static LaurentPoly t_pow(int e) { return monomial(Rational(1), 0, e); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} &&
               terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::invalid_argument("LaurentPoly: not a constant");
        return terms_.begin()->second;
    }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    // All exponents nonnegative (a true polynomial).
    bool is_polynomial() const {
        for (const auto& [m, c] : terms_)
            if (m.q < 0 || m.t < 0) return false;
        return true;
    }
    // Element of N[q,t]: polynomial with positive integer coefficients.
    bool is_natural() const {
        for (const auto& [m, c] : terms_)
            if (m.q < 0 || m.t < 0 || !is_integer(c) || c < 0) return false;
        return true;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        // iterate the smaller operand outside
        const LaurentPoly& s = a.terms_.size() <= b.terms_.size() ? a : b;
        const LaurentPoly& l = a.terms_.size() <= b.terms_.size() ? b : a;
        for (const auto& [ms, cs] : s.terms_)
            for (const auto& [ml, cl] : l.terms_)
                r.add_term(Monomial{ms.q + ml.q, ms.t + ml.t}, cs * cl);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& scale(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, v] : terms_) v *= c;
        }
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a.scale(c); }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a.scale(c); }

    LaurentPoly shifted(int dq, int dt) const {
        LaurentPoly r;
        for (const auto& [m, c] : terms_) r.terms_[Monomial{m.q + dq, m.t + dt}] = c;
        return r;
    }

    LaurentPoly pow(unsigned e) const {
        LaurentPoly r = one();
        LaurentPoly base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    int min_deg_q() const { return fold_exp(true, true); }
    int max_deg_q() const { return fold_exp(true, false); }
    int min_deg_t() const { return fold_exp(false, true); }
    int max_deg_t() const { return fold_exp(false, false); }

    // componentwise minimum of exponents: the largest monomial dividing *this
    Monomial monomial_content() const {
        if (terms_.empty()) return Monomial{0, 0};
        Monomial m{terms_.begin()->first.q, min_deg_t()};
        return m;
    }

    // greatest term in the declared order
    std::pair<Monomial, Rational> leading_term() const {
        if (terms_.empty()) throw std::invalid_argument("LaurentPoly: leading term of zero");
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }

    // q |-> q^{-1}, t |-> t^{-1}
    LaurentPoly inverted_params() const {
        LaurentPoly r;
        for (const auto& [m, c] : terms_) r.terms_[Monomial{-m.q, -m.t}] = c;
        return r;
    }
    LaurentPoly swapped_params() const {
        LaurentPoly r;
        for (const auto& [m, c] : terms_) r.terms_[Monomial{m.t, m.q}] = c;
        return r;
    }
    // q |-> t^r, t |-> t^s
    LaurentPoly subst_qt_tpow(int r, int s) const {
        LaurentPoly out;
        for (const auto& [m, c] : terms_) out.add_term(Monomial{0, r * m.q + s * m.t}, c);
        return out;
    }
    LaurentPoly subst_q_tpow(int p) const { return subst_qt_tpow(p, 1); }

    // q |-> rational constant; throws when a negative q-exponent meets 0
    LaurentPoly subst_q_rational(const Rational& v) const {
        LaurentPoly out;
        for (const auto& [m, c] : terms_) {
            if (m.q < 0 && v == 0) throw std::domain_error("LaurentPoly: pole at q=0");
            if (m.q != 0 && v == 0) continue;
            out.add_term(Monomial{0, m.t}, c * rational_pow(v, m.q));
        }
        return out;
    }
    LaurentPoly subst_t_rational(const Rational& v) const {
        LaurentPoly out;
        for (const auto& [m, c] : terms_) {
            if (m.t < 0 && v == 0) throw std::domain_error("LaurentPoly: pole at t=0");
            if (m.t != 0 && v == 0) continue;
            out.add_term(Monomial{m.q, 0}, c * rational_pow(v, m.t));
        }
        return out;
    }
    Rational eval(const Rational& qv, const Rational& tv) const {
        return subst_q_rational(qv).subst_t_rational(tv).constant_value();
    }

    // gcd of the rational coefficients, positive; 0 for the zero polynomial
    Rational content() const {
        Rational g(0);
        for (const auto& [m, c] : terms_) {
            g = rational_gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

private:
    int fold_exp(bool on_q, bool want_min) const {
        if (terms_.empty()) return 0;
        if (on_q)  // map is sorted by q first
            return want_min ? terms_.begin()->first.q : terms_.rbegin()->first.q;
        int best = terms_.begin()->first.t;
        for (const auto& [m, c] : terms_)
            best = want_min ? std::min(best, m.t) : std::max(best, m.t);
        return best;
    }

    TermMap terms_;
};

namespace detail {

// --- dense univariate polynomials over Q (no trailing zeros) ---------------

using UPoly = std::vector<Rational>;

inline void upoly_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline bool upoly_is_zero(const UPoly& p) { return p.empty(); }
inline int upoly_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    upoly_trim(r);
    return r;
}

inline UPoly upoly_scale(UPoly p, const Rational& c) {
    if (c == 0) return {};
    for (auto& x : p) x *= c;
    return p;
}

inline void upoly_sub_inplace(UPoly& a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    upoly_trim(a);
}

// exact division over Q[x]; false when the remainder is nonzero
inline bool upoly_divide_exact(const UPoly& a, const UPoly& b, UPoly& quot) {
    if (b.empty()) throw std::invalid_argument("upoly: division by zero");
    quot.clear();
    if (a.empty()) return true;
    if (a.size() < b.size()) return false;
    UPoly r = a;
    quot.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lc = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t k = r.size() - b.size();
        Rational c = r.back() / lc;
        quot[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
        upoly_trim(r);
    }
    if (!r.empty()) return false;
    upoly_trim(quot);
    return true;
}

// primitive integer polynomial from a rational one (content stripped)
inline std::vector<Integer> upoly_to_primitive_int(const UPoly& p) {
    Integer l(1);
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rational s = p[i] * Rational(l);
        v[i] = s.get_num();
    }
    Integer g(0);
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : v) c /= g;
    return v;
}

inline void ipoly_trim(std::vector<Integer>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// pseudo-remainder with integer coefficients (result only defined up to a
// power of lc(b), which the primitive PRS strips anyway)
inline std::vector<Integer> ipoly_prem(std::vector<Integer> r, const std::vector<Integer>& b) {
    const Integer& lcb = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t k = r.size() - b.size();
        Integer lcr = r.back();
        for (auto& c : r) c *= lcb;
        for (std::size_t i = 0; i < b.size(); ++i) r[k + i] -= lcr * b[i];
        ipoly_trim(r);
    }
    return r;
}

inline void ipoly_make_primitive(std::vector<Integer>& p) {
    Integer g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : p) c /= g;
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
}

// gcd over Q[x], normalized primitive with positive leading coefficient
inline UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    if (a.empty() && b.empty()) return {};
    if (a.empty() || b.empty()) {
        auto v = upoly_to_primitive_int(a.empty() ? b : a);
        ipoly_make_primitive(v);
        UPoly r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
        return r;
    }
    auto r0 = upoly_to_primitive_int(a);
    auto r1 = upoly_to_primitive_int(b);
    if (r0.size() < r1.size()) std::swap(r0, r1);
    while (!r1.empty()) {
        auto r2 = ipoly_prem(r0, r1);
        ipoly_make_primitive(r2);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    ipoly_make_primitive(r0);
    UPoly g(r0.size());
    for (std::size_t i = 0; i < r0.size(); ++i) g[i] = Rational(r0[i]);
    return g;
}

// --- dense-in-main-variable view with UPoly coefficients -------------------

// b[k] = coefficient of x^k, a UPoly in the other variable
using BPoly = std::vector<UPoly>;

inline void bpoly_trim(BPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}
inline bool bpoly_is_zero(const BPoly& p) { return p.empty(); }

// main_is_q: x = q, coefficient variable t. Requires nonnegative exponents.
inline BPoly laurent_to_bpoly(const LaurentPoly& f, bool main_is_q) {
    BPoly b;
    for (const auto& [m, c] : f.terms()) {
        int xe = main_is_q ? m.q : m.t;
        int ye = main_is_q ? m.t : m.q;
        if (xe < 0 || ye < 0) throw std::invalid_argument("laurent_to_bpoly: negative exponent");
        if (static_cast<std::size_t>(xe) >= b.size()) b.resize(xe + 1);
        UPoly& u = b[xe];
        if (static_cast<std::size_t>(ye) >= u.size()) u.resize(ye + 1, Rational(0));
        u[ye] = c;
    }
    for (auto& u : b) upoly_trim(u);
    bpoly_trim(b);
    return b;
}

inline LaurentPoly bpoly_to_laurent(const BPoly& b, bool main_is_q) {
    LaurentPoly f;
    for (std::size_t xe = 0; xe < b.size(); ++xe)
        for (std::size_t ye = 0; ye < b[xe].size(); ++ye) {
            if (b[xe][ye] == 0) continue;
            int eq = main_is_q ? static_cast<int>(xe) : static_cast<int>(ye);
            int et = main_is_q ? static_cast<int>(ye) : static_cast<int>(xe);
            f.add_term(Monomial{eq, et}, b[xe][ye]);
        }
    return f;
}

inline UPoly bpoly_content(const BPoly& p) {
    UPoly g;
    for (const auto& u : p) {
        if (u.empty()) continue;
        g = upoly_gcd(g, u);
        if (upoly_deg(g) == 0) break;
    }
    if (!g.empty() && upoly_deg(g) == 0) g = {Rational(1)};
    return g;
}

inline BPoly bpoly_divide_by_upoly(const BPoly& p, const UPoly& d) {
    BPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].empty()) continue;
        if (!upoly_divide_exact(p[i], d, r[i]))
            throw std::logic_error("bpoly: inexact content division");
    }
    bpoly_trim(r);
    return r;
}

inline BPoly bpoly_prem(BPoly r, const BPoly& b) {
    const UPoly& lcb = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t k = r.size() - b.size();
        UPoly lcr = r.back();
        for (auto& u : r) u = upoly_mul(u, lcb);
        for (std::size_t i = 0; i < b.size(); ++i) {
            UPoly s = upoly_mul(lcr, b[i]);
            upoly_sub_inplace(r[k + i], s);
        }
        bpoly_trim(r);
    }
    return r;
}

inline BPoly bpoly_primitive_part(const BPoly& p, UPoly* content_out = nullptr) {
    if (p.empty()) {
        if (content_out) content_out->clear();
        return p;
    }
    UPoly c = bpoly_content(p);
    if (content_out) *content_out = c;
    if (upoly_deg(c) == 0) return p;
    return bpoly_divide_by_upoly(p, c);
}

inline BPoly bpoly_gcd(const BPoly& a, const BPoly& b) {
    if (bpoly_is_zero(a)) return b;
    if (bpoly_is_zero(b)) return a;
    UPoly ca, cb;
    BPoly r0 = bpoly_primitive_part(a, &ca);
    BPoly r1 = bpoly_primitive_part(b, &cb);
    if (r0.size() < r1.size()) std::swap(r0, r1);
    while (!bpoly_is_zero(r1)) {
        BPoly r2 = bpoly_prem(r0, r1);
        r2 = bpoly_primitive_part(r2);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    r0 = bpoly_primitive_part(r0);
    UPoly cg = upoly_gcd(ca, cb);
    if (!(cg.size() == 1 && cg[0] == 1)) {
        for (auto& u : r0) u = upoly_mul(u, cg);
    }
    return r0;
}

}  // namespace detail

// Exact division of Laurent polynomials; false when g does not divide f.
inline bool divide_exact(const LaurentPoly& f, const LaurentPoly& g, LaurentPoly& quot) {
    if (g.is_zero()) throw std::invalid_argument("LaurentPoly: division by zero");
    quot = LaurentPoly();
    if (f.is_zero()) return true;
    if (g.is_monomial()) {
        auto [gm, gc] = *g.terms().begin();
        quot = f.shifted(-gm.q, -gm.t);
        quot.scale(Rational(1) / gc);
        return true;
    }
    const Monomial mf = f.monomial_content();
    const Monomial mg = g.monomial_content();
    LaurentPoly fc = f.shifted(-mf.q, -mf.t);
    LaurentPoly gc = g.shifted(-mg.q, -mg.t);
    // main variable t: divide as polynomials in t with Q[q] coefficients
    detail::BPoly A = detail::laurent_to_bpoly(fc, false);
    detail::BPoly B = detail::laurent_to_bpoly(gc, false);
    if (A.size() < B.size()) return false;
    detail::BPoly Q(A.size() - B.size() + 1);
    const detail::UPoly& lcb = B.back();
    while (!detail::bpoly_is_zero(A) && A.size() >= B.size()) {
        std::size_t k = A.size() - B.size();
        detail::UPoly c;
        if (!detail::upoly_divide_exact(A.back(), lcb, c)) return false;
        Q[k] = c;
        for (std::size_t i = 0; i < B.size(); ++i) {
            detail::UPoly s = detail::upoly_mul(c, B[i]);
            detail::upoly_sub_inplace(A[k + i], s);
        }
        detail::bpoly_trim(A);
    }
    if (!detail::bpoly_is_zero(A)) return false;
    quot = detail::bpoly_to_laurent(Q, false).shifted(mf.q - mg.q, mf.t - mg.t);
    return true;
}

// GCD over Q[q,t] of Laurent polynomials, including the largest common
// monomial factor; primitive, with positive coefficient on the greatest term.
inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    auto normalize = [](LaurentPoly p) {
        if (p.is_zero()) return p;
        Rational c = p.content();
        if (p.leading_term().second < 0) c = -c;
        p.scale(Rational(1) / c);
        return p;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    const Monomial ma = a.monomial_content();
    const Monomial mb = b.monomial_content();
    const Monomial mg{std::min(ma.q, mb.q), std::min(ma.t, mb.t)};
    LaurentPoly ac = a.shifted(-ma.q, -ma.t);
    LaurentPoly bc = b.shifted(-mb.q, -mb.t);
    LaurentPoly g;
    if (ac.is_constant() || bc.is_constant()) {
        g = LaurentPoly::one();
    } else {
        const int dqa = ac.max_deg_q(), dqb = bc.max_deg_q();
        const int dta = ac.max_deg_t(), dtb = bc.max_deg_t();
        bool main_is_q;
        if (dqa == 0 && dqb == 0)
            main_is_q = false;
        else if (dta == 0 && dtb == 0)
            main_is_q = true;
        else
            main_is_q = std::max(dqa, dqb) <= std::max(dta, dtb);
        detail::BPoly G =
            detail::bpoly_gcd(detail::laurent_to_bpoly(ac, main_is_q),
                              detail::laurent_to_bpoly(bc, main_is_q));
        g = detail::bpoly_to_laurent(G, main_is_q);
    }
    return normalize(g.shifted(mg.q, mg.t));
}

}  // namespace nablahl
