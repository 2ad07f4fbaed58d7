#pragma once

// Monotone 2-torus machinery: the disk-count function nu on H_1 classes,
// the D_1 class, synthesis of the full quantum product from nu, and the
// exact flat-torus model for the enumerative coefficients s_1, n_4 and the
// comparison coefficient.  Boundaries of Maslov-2 disks through a point are
// modelled as the straight closed geodesics through it in the nu-supported
// classes; crossing parities reduce to counting integers in open rational
// intervals, so everything is exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "pearl/quantum_algebra.hpp"

namespace pearl {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NuFunction {
    std::set<std::pair<int, int>> support;  // classes (k,l) with nu = 1

    bool at(int k, int l) const { return support.count({k, l}) != 0; }
};

// D_1 = sum nu(k,l) (k,l) in H_1(T^2; Z_2).
inline std::pair<int, int> d1_class(const NuFunction& nu) {
    int dk = 0, dl = 0;
    for (auto& [k, l] : nu.support) {
        dk ^= (k & 1);
        dl ^= (l & 1);
    }
    return {dk, dl};
}

struct TorusRing {
    bool alpha = false, beta = false, gamma_sum = false;
    // convention when noncommutative: gamma' = gamma_sum, gamma'' = 0
    QuantumAlgebra<Gf2> ring;  // basis {w, a, b, m}, unit w, N_L = 2

    bool s1() const { return gamma_sum; }
    bool s2() const { return alpha && beta; }  // alpha*beta + gamma'*gamma'' with gamma'' = 0
};

// Build the quantum product of a monotone 2-torus from nu.  Returns nullopt
// when D_1 != 0, which forces QH(L) = 0.
inline std::optional<TorusRing> synthesize(const NuFunction& nu) {
    if (d1_class(nu) != std::make_pair(0, 0))
        return std::nullopt;
    auto mod2 = [](long long v) { return static_cast<int>(((v % 2) + 2) % 2) == 1; };
    long long alpha_acc = 0, beta_acc = 0, gamma_acc = 0;
    for (auto& [k, l] : nu.support) {
        alpha_acc += (static_cast<long long>(l) * (l + 1)) / 2;
        beta_acc += (static_cast<long long>(k) * (k + 1)) / 2;
        gamma_acc += static_cast<long long>(k) * l;
    }
    TorusRing out;
    out.alpha = mod2(alpha_acc);
    out.beta = mod2(beta_acc);
    out.gamma_sum = mod2(gamma_acc);

    bool gp = out.gamma_sum, gpp = false;  // gamma', gamma''
    QuantumAlgebra<Gf2> ring("torus", GradingContext(2),
                             {{"w", 2}, {"a", 1}, {"b", 1}, {"m", 0}}, 2, "w");
    int w = ring.index_of("w"), a = ring.index_of("a"), b = ring.index_of("b"),
        m = ring.index_of("m");
    auto one = [](int k, int e = 0) { return FormalSum<Gf2>::basis(k, e); };
    auto maybe = [&](bool c, int k, int e) {
        return c ? FormalSum<Gf2>::basis(k, e) : FormalSum<Gf2>::zero();
    };
    for (int x : {w, a, b, m}) {
        ring.mul[w][x] = one(x);
        ring.mul[x][w] = one(x);
    }
    ring.mul[a][a] = maybe(out.alpha, w, 1);
    ring.mul[b][b] = maybe(out.beta, w, 1);
    ring.mul[a][b] = one(m) + maybe(gp, w, 1);
    ring.mul[b][a] = one(m) + maybe(gpp, w, 1);
    ring.mul[m][a] = maybe(out.alpha, b, 1) + maybe(gpp, a, 1);
    ring.mul[a][m] = maybe(out.alpha, b, 1) + maybe(gp, a, 1);
    ring.mul[m][b] = maybe(out.beta, a, 1) + maybe(gp, b, 1);
    ring.mul[b][m] = maybe(out.beta, a, 1) + maybe(gpp, b, 1);
    ring.mul[m][m] = maybe(out.gamma_sum, m, 1) + maybe(out.alpha && out.beta, w, 2);
    ring.aug[m] = Gf2::one();
    out.ring = std::move(ring);
    return out;
}

using Rational = boost::multiprecision::cpp_rational;

struct TorusPoint {
    Rational x, y;
    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

struct TorusScene {
    NuFunction nu;
    std::map<std::string, TorusPoint> points;
};

namespace detail {

inline boost::multiprecision::cpp_int rfloor(const Rational& q) {
    boost::multiprecision::cpp_int n = boost::multiprecision::numerator(q);
    boost::multiprecision::cpp_int d = boost::multiprecision::denominator(q);
    boost::multiprecision::cpp_int quo = n / d;
    if (n % d != 0 && n < 0)
        --quo;
    return quo;
}

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

}  // namespace detail

// Crossing count of the closed geodesic of primitive class (k,l) through a
// point with the straight segment from `a` to `b` (canonical lifts in the
// plane).  Computed as the number of integers in an open rational interval.
inline int crossings(std::pair<int, int> cls, const TorusPoint& through, const TorusPoint& a,
                     const TorusPoint& b) {
    auto [k, l] = cls;
    if (k == 0 && l == 0)
        throw GeometryError("zero homology class");
    if (std::gcd(std::abs(k), std::abs(l)) != 1)
        throw GeometryError("non-primitive class in crossing count");
    if (a == b)
        return 0;  // length-0 segments cross nothing
    auto f = [&](const TorusPoint& p) { return Rational(l) * p.x - Rational(k) * p.y; };
    Rational u = f(a) - f(through);
    Rational v = f(b) - f(through);
    if (detail::is_integer(u) || detail::is_integer(v))
        throw GeometryError("segment endpoint on the geodesic");
    if (u == v)
        return 0;  // parallel, not incident
    if (u > v)
        std::swap(u, v);
    return static_cast<int>(detail::rfloor(v) - detail::rfloor(u));
}

// Parity of crossings of delta_p (all nu-supported geodesics through p)
// with the segment from a to b.
inline int delta_crossings(const NuFunction& nu, const TorusPoint& p, const TorusPoint& a,
                           const TorusPoint& b) {
    int total = 0;
    for (auto& cls : nu.support)
        total += crossings(cls, p, a, b);
    return total % 2;
}

namespace detail {

inline void require_generic_pair(const NuFunction& nu, const TorusPoint& p,
                                 const TorusPoint& q) {
    for (auto& [k, l] : nu.support) {
        Rational fp = Rational(l) * p.x - Rational(k) * p.y;
        Rational fq = Rational(l) * q.x - Rational(k) * q.y;
        if (is_integer(fp - fq))
            throw GeometryError("point lies on a geodesic through another point");
    }
}

}  // namespace detail

// s_1 as the cyclic sum of crossing parities; fully symmetric in the three
// points, and equal to gamma' + gamma'' of the synthesized ring.
inline int s1_geometric(const NuFunction& nu, const TorusPoint& p1, const TorusPoint& p2,
                        const TorusPoint& p3) {
    detail::require_generic_pair(nu, p1, p2);
    detail::require_generic_pair(nu, p2, p3);
    detail::require_generic_pair(nu, p3, p1);
    int total = delta_crossings(nu, p1, p2, p3) + delta_crossings(nu, p2, p3, p1) +
                delta_crossings(nu, p3, p1, p2);
    return total % 2;
}

// n_4 recovered from s_2 of the synthesized ring and the two crossing
// factors; counts mod 2 the Maslov-4 disks through the three points.
inline int n4(const NuFunction& nu, const TorusPoint& p1, const TorusPoint& p2,
              const TorusPoint& p3) {
    auto ring = synthesize(nu);
    if (!ring)
        throw GeometryError("nu has D_1 != 0; QH vanishes and n_4 is undefined here");
    detail::require_generic_pair(nu, p1, p2);
    detail::require_generic_pair(nu, p2, p3);
    detail::require_generic_pair(nu, p3, p1);
    int f1 = delta_crossings(nu, p3, p1, p2);
    int f2 = delta_crossings(nu, p1, p2, p3);
    return (static_cast<int>(ring->s2()) + f1 * f2) % 2;
}

// Comparison coefficient between the canonical bases attached to two
// (min, max) pairs: eps = #(delta_{y0} cap l(y2,x2)) + #(delta_{x2} cap l(y0,x0)).
inline int epsilon_coeff(const NuFunction& nu, const TorusPoint& y0, const TorusPoint& x0,
                         const TorusPoint& y2, const TorusPoint& x2) {
    return (delta_crossings(nu, y0, y2, x2) + delta_crossings(nu, x2, y0, x0)) % 2;
}

// Base-change rule s_2(p',q') = s_2(p,q) + eta (s_1 + 1).
inline int s2_transport(int s2, int s1, int eta) {
    return (s2 + eta * (s1 + 1)) % 2;
}

}  // namespace pearl
