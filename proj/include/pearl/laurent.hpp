#pragma once

// Sparse exact Laurent polynomials over a coefficient field, the grading
// context deg t = -N_L, and the degree filtration.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "pearl/fields.hpp"

namespace pearl {

// Grading data of a monotone Lagrangian: the minimal Maslov number N_L.
// A monomial x t^k with |x| = d has degree d - k*N_L.
struct GradingContext {
    int maslov = 2;

    explicit GradingContext(int n_l = 2) : maslov(n_l) {
        if (n_l < 2)
            throw std::invalid_argument("minimal Maslov number must be >= 2");
    }
    int monomial_degree(int gen_degree, int exp) const { return gen_degree - exp * maslov; }
    friend bool operator==(const GradingContext&, const GradingContext&) = default;
};

template <class F>
class Laurent {
    std::map<int, F> c_;  // exponent -> coefficient, zero entries never stored

public:
    Laurent() = default;

    static Laurent zero() { return Laurent(); }
    static Laurent one() { return term(F::one(), 0); }
    static Laurent t(int k = 1) { return term(F::one(), k); }
    static Laurent term(const F& c, int k) {
        Laurent p;
        if (!c.is_zero())
            p.c_.emplace(k, c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, F>& terms() const { return c_; }

    F coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? F::zero() : it->second;
    }

    void add_term(int k, const F& c) {
        if (c.is_zero())
            return;
        auto [it, fresh] = c_.emplace(k, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero())
                c_.erase(it);
        }
    }

    // Least exponent with nonzero coefficient; "bottom" (nullopt) for 0.
    // This is the degree-filtration level F^k of eq-style t-adic filtrations.
    std::optional<int> filtration_level() const {
        if (c_.empty())
            return std::nullopt;
        return c_.begin()->first;
    }

    int max_exponent() const {
        if (c_.empty())
            throw std::domain_error("max_exponent of zero");
        return c_.rbegin()->first;
    }

    // Membership in the positive ring (all exponents >= 0). Zero qualifies.
    bool is_positive() const { return c_.empty() || c_.begin()->first >= 0; }

    Laurent shifted(int k) const {
        Laurent p;
        for (auto& [e, c] : c_)
            p.c_.emplace(e + k, c);
        return p;
    }

    Laurent scaled(const F& s) const {
        Laurent p;
        if (s.is_zero())
            return p;
        for (auto& [e, c] : c_) {
            F x = c * s;
            if (!x.is_zero())
                p.c_.emplace(e, x);
        }
        return p;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent s = a;
        for (auto& [e, c] : b.c_)
            s.add_term(e, c);
        return s;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent s = a;
        for (auto& [e, c] : b.c_)
            s.add_term(e, -c);
        return s;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent p;
        for (auto& [ea, ca] : a.c_)
            for (auto& [eb, cb] : b.c_)
                p.add_term(ea + eb, ca * cb);
        return p;
    }
    friend bool operator==(const Laurent& a, const Laurent& b) {
        if (a.c_.size() != b.c_.size())
            return false;
        auto ia = a.c_.begin();
        for (auto ib = b.c_.begin(); ib != b.c_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second))
                return false;
        return true;
    }

    // Polynomial division, both operands in F[t]; returns (quotient, remainder).
    static std::pair<Laurent, Laurent> divmod(const Laurent& a, const Laurent& b) {
        if (b.is_zero())
            throw std::domain_error("polynomial division by zero");
        if (!a.is_positive() || !b.is_positive())
            throw std::domain_error("divmod requires polynomials");
        Laurent q, r = a;
        int db = b.max_exponent();
        F lb = b.c_.rbegin()->second;
        while (!r.is_zero() && r.max_exponent() >= db) {
            int e = r.max_exponent() - db;
            F c = r.c_.rbegin()->second / lb;
            Laurent m = term(c, e);
            q = q + m;
            r = r - m * b;
        }
        return {q, r};
    }

    // Monic polynomial gcd in F[t].
    static Laurent gcd(Laurent a, Laurent b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero())
            return a;
        return a.scaled(F::one() / a.c_.rbegin()->second);
    }

    std::string str() const {
        if (c_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : c_) {
            if (!first)
                os << " + ";
            first = false;
            if (e == 0) {
                os << c.str();
            } else {
                if (!c.is_one())
                    os << c.str() << "*";
                os << "t^" << e;
            }
        }
        return os.str();
    }
};

using LaurentGf2 = Laurent<Gf2>;
using LaurentQ = Laurent<Rat>;

}  // namespace pearl
