#pragma once

// Built-in constructions of the worked examples: the circle, the Clifford
// torus with its module and inclusion data, projective spaces, real
// projective spaces, quadrics over the integers and mod 2, Lagrangian
// spheres and 2-torsion Lagrangians of the quadric, the two torus
// disk-count functions, the complete-intersection inclusion coefficient,
// and the Gromov-radius / mixed-packing bound arithmetic.

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pearl/minimal_model.hpp"
#include "pearl/quantum_algebra.hpp"
#include "pearl/torus.hpp"

namespace pearl::catalog {

// ---------------------------------------------------------------- complexes

inline PearlComplex circle_complex() {
    PearlComplex c("circle", GradingContext(2), {{"P", 0}, {"Q", 1}}, 1);
    c.set_del(1, c.index_of("Q"), c.index_of("P"), Gf2::one());
    return c;
}

inline PearlComplex clifford_t2_complex() {
    return PearlComplex("clifford-t2", GradingContext(2),
                        {{"w", 2}, {"a", 1}, {"b", 1}, {"m", 0}}, 2);
}

// Perfect complex of a Lagrangian with H_i = Z_2 for 0 <= i <= n, N_L = n+1.
inline PearlComplex rpn_complex(int n) {
    std::vector<Generator> gens;
    for (int i = n; i >= 0; --i)
        gens.push_back({"a" + std::to_string(i), i});
    return PearlComplex("rp" + std::to_string(n), GradingContext(n + 1), gens, n);
}

// ------------------------------------------------------------------- rings

// QH(CP^n) over Z_2 with deg t = -N_L (N_L | 2(n+1)): cap powers of the
// hyperplane class, h^{*(n+1)} = u t^{2(n+1)/N_L}.
template <class F>
QuantumAlgebra<F> cpn_ring(int n, int nl) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("cpn_ring: n out of the supported range");
    if (nl < 2 || (2 * (n + 1)) % nl != 0)
        throw std::invalid_argument("cpn_ring: N_L must divide 2(n+1)");
    int q = 2 * (n + 1) / nl;
    std::vector<Generator> basis;
    auto cap_id = [n](int i) {
        if (i == 0)
            return std::string("u");
        if (i == n)
            return std::string("p");
        if (i == 1)
            return std::string("h");
        return "h" + std::to_string(i);
    };
    for (int i = 0; i <= n; ++i)
        basis.push_back({cap_id(i), 2 * n - 2 * i});
    QuantumAlgebra<F> a("cp" + std::to_string(n), GradingContext(nl), basis, 2 * n, "u");
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            int s = i + j;
            if (s <= n)
                a.mul[i][j] = FormalSum<F>::basis(s);
            else
                a.mul[i][j] = FormalSum<F>::basis(s - n - 1, q);
        }
    a.aug[a.index_of("p")] = F::one();
    return a;
}

// The Clifford T^2 quantum ring (basis w, a, b, m; noncommutative).
inline QuantumAlgebra<Gf2> clifford_t2_ring() {
    NuFunction nu{{{1, 0}, {0, 1}, {-1, -1}}};
    auto r = synthesize(nu);
    if (!r)
        throw std::logic_error("Clifford nu has D_1 != 0");
    auto ring = r->ring;
    ring.name = "clifford-t2-ring";
    return ring;
}

inline NuFunction clifford_nu() { return {{{1, 0}, {0, 1}, {-1, -1}}}; }
inline NuFunction split_nu() { return {{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}}; }

// The split torus Eq x Eq in S^2 x S^2: commutative, m*m = w t^2.
inline QuantumAlgebra<Gf2> split_t2_ring() {
    auto r = synthesize(split_nu());
    if (!r)
        throw std::logic_error("split nu has D_1 != 0");
    auto ring = r->ring;
    ring.name = "split-t2-ring";
    return ring;
}

// QH of the quadric Q^n over the integers, deg t = -N_L with N_L | 2n.
// Basis: cap powers c_i = h^{cap i} above the middle degree, the two plane
// classes a, b in the middle for n even, the classes g_i = h^{*(n/2-i)}*a
// below it, and the point class p.
inline QuantumAlgebra<Rat> quadric_ring_z(int n, int nl) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("quadric_ring_z: n out of the supported range");
    if (nl < 2 || (2 * n) % nl != 0)
        throw std::invalid_argument("quadric_ring_z: N_L must divide 2n");
    int q = 2 * n / nl;
    auto rat = [](long long v) { return Rat(v, 1); };
    if (n % 2 == 1) {
        std::vector<Generator> basis;
        auto cap_id = [](int i) { return i == 0 ? std::string("u")
                                                : (i == 1 ? std::string("h")
                                                          : "h" + std::to_string(i)); };
        for (int i = 0; i <= n - 1; ++i)
            basis.push_back({cap_id(i), 2 * n - 2 * i});
        basis.push_back({"p", 0});
        int pidx = n;
        QuantumAlgebra<Rat> a("quadric" + std::to_string(n), GradingContext(nl), basis, 2 * n,
                              "u");
        for (int i = 0; i <= n - 1; ++i)
            for (int j = 0; j <= n - 1; ++j) {
                int s = i + j;
                FormalSum<Rat> v;
                if (s <= n - 1) {
                    v.add(Rat::one(), s, 0);
                } else if (s == n) {
                    v.add(rat(2), pidx, 0);
                    v.add(rat(2), 0, q);
                } else {
                    v.add(rat(4), s - n, q);
                }
                a.mul[i][j] = v;
            }
        for (int i = 1; i <= n - 1; ++i) {
            a.mul[i][pidx] = FormalSum<Rat>::basis(i, q);
            a.mul[pidx][i] = a.mul[i][pidx];
        }
        a.mul[0][pidx] = FormalSum<Rat>::basis(pidx);
        a.mul[pidx][0] = a.mul[0][pidx];
        a.mul[pidx][pidx] = FormalSum<Rat>::basis(0, 2 * q);
        a.aug[pidx] = Rat::one();
        return a;
    }
    // n even: middle classes a, b with h^{cap k} = a + b, k = n/2
    int k = n / 2;
    std::vector<Generator> basis;
    auto cap_id = [](int i) { return i == 0 ? std::string("u")
                                            : (i == 1 ? std::string("h")
                                                      : "h" + std::to_string(i)); };
    for (int i = 0; i <= k - 1; ++i)
        basis.push_back({cap_id(i), 2 * n - 2 * i});
    int ai = k, bi = k + 1;
    basis.push_back({"a", n});
    basis.push_back({"b", n});
    std::vector<int> gidx(k, -1);  // gidx[i] for g_i, 1 <= i <= k-1
    for (int i = k - 1; i >= 1; --i) {
        gidx[i] = static_cast<int>(basis.size());
        basis.push_back({"g" + std::to_string(i), 2 * i});
    }
    int pidx = static_cast<int>(basis.size());
    basis.push_back({"p", 0});
    QuantumAlgebra<Rat> alg("quadric" + std::to_string(n), GradingContext(nl), basis, 2 * n,
                            "u");
    bool k_odd = (k % 2 == 1);
    // elements as formal sums
    auto C = [&](int i) { return i == 0 ? 0 : i; };  // c_i index is i for i <= k-1
    auto sum2 = [&](int x, int y, int e = 0) {
        FormalSum<Rat> v;
        v.add(Rat::one(), x, e);
        v.add(Rat::one(), y, e);
        return v;
    };
    // c_i * c_j
    for (int i = 0; i <= k - 1; ++i)
        for (int j = 0; j <= k - 1; ++j) {
            int s = i + j;
            FormalSum<Rat> v;
            if (s <= k - 1)
                v.add(Rat::one(), C(s), 0);
            else if (s == k)
                v = sum2(ai, bi);
            else
                v.add(rat(2), gidx[n - s], 0);
            alg.mul[i][j] = v;
        }
    // c_i * a = c_i * b = g_{k-i} (i >= 1)
    for (int i = 1; i <= k - 1; ++i) {
        auto v = FormalSum<Rat>::basis(gidx[k - i]);
        alg.mul[i][ai] = v;
        alg.mul[ai][i] = v;
        alg.mul[i][bi] = v;
        alg.mul[bi][i] = v;
    }
    // middle products by the parity of k
    {
        FormalSum<Rat> point = FormalSum<Rat>::basis(pidx);
        FormalSum<Rat> ut = FormalSum<Rat>::basis(0, q);
        alg.mul[ai][ai] = k_odd ? ut : point;
        alg.mul[bi][bi] = alg.mul[ai][ai];
        alg.mul[ai][bi] = k_odd ? point : ut;
        alg.mul[bi][ai] = alg.mul[ai][bi];
    }
    // c_i * g_j
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j) {
            FormalSum<Rat> v;
            if (j - i >= 1)
                v.add(Rat::one(), gidx[j - i], 0);
            else if (i == j) {
                v.add(Rat::one(), pidx, 0);
                v.add(Rat::one(), 0, q);
            } else
                v.add(rat(2), C(i - j), q);
            alg.mul[i][gidx[j]] = v;
            alg.mul[gidx[j]][i] = v;
        }
    // a * g_i = b * g_i = c_{k-i} t^q
    for (int i = 1; i <= k - 1; ++i) {
        auto v = FormalSum<Rat>::basis(C(k - i), q);
        alg.mul[ai][gidx[i]] = v;
        alg.mul[gidx[i]][ai] = v;
        alg.mul[bi][gidx[i]] = v;
        alg.mul[gidx[i]][bi] = v;
    }
    // g_i * g_j
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j) {
            int mdeg = 2 * k - i - j;
            FormalSum<Rat> v;
            if (mdeg <= k - 1)
                v.add(Rat::one(), C(mdeg), q);
            else if (mdeg == k)
                v = sum2(ai, bi, q);
            else
                v.add(rat(2), gidx[i + j], q);
            alg.mul[gidx[i]][gidx[j]] = v;
        }
    // products with p
    for (int i = 1; i <= k - 1; ++i) {
        alg.mul[i][pidx] = FormalSum<Rat>::basis(C(i), q);
        alg.mul[pidx][i] = alg.mul[i][pidx];
        alg.mul[gidx[i]][pidx] = FormalSum<Rat>::basis(gidx[i], q);
        alg.mul[pidx][gidx[i]] = alg.mul[gidx[i]][pidx];
    }
    alg.mul[ai][pidx] = FormalSum<Rat>::basis(bi, q);
    alg.mul[pidx][ai] = alg.mul[ai][pidx];
    alg.mul[bi][pidx] = FormalSum<Rat>::basis(ai, q);
    alg.mul[pidx][bi] = alg.mul[bi][pidx];
    alg.mul[pidx][pidx] = FormalSum<Rat>::basis(0, 2 * q);
    for (std::size_t x = 0; x < alg.basis.size(); ++x) {
        alg.mul[0][x] = FormalSum<Rat>::basis(static_cast<int>(x));
        alg.mul[x][0] = alg.mul[0][x];
    }
    alg.aug[pidx] = Rat::one();
    return alg;
}

inline QuantumAlgebra<Gf2> quadric_ring_mod2(int n, int nl) {
    auto a = mod2_reduction(quadric_ring_z(n, nl));
    a.name += "-mod2";
    // For n odd the cap powers below the middle degree reduce to zero
    // classes, so this is the reduction of the subring generated by h and p,
    // not a homology basis; its pairing is degenerate and carries no
    // augmentation.  For n even the basis stays honest.
    if (n % 2 == 1)
        a.aug.clear();
    return a;
}

// ----------------------------------------------------------------- modules

// helper: alpha_{d} in the RP^n ring written with a nonnegative power of t
inline FormalSum<Gf2> rpn_alpha(int n, int d) {
    int l = 0;
    while (d < 0) {
        d += n + 1;
        ++l;
    }
    return FormalSum<Gf2>::basis(n - d, l);  // basis listed top degree first
}

// RP^n-like Lagrangian in CP^n: ring alpha_k * alpha_j = alpha_{k+j-n},
// module action h * alpha_j = alpha_{j-2}, inclusion split by parity of n.
inline ModuleAction<Gf2> rpn_module(int n) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("rpn_module: n out of the supported range");
    ModuleAction<Gf2> m;
    m.ambient = cpn_ring<Gf2>(n, n + 1);
    std::vector<Generator> basis;
    for (int i = n; i >= 0; --i)
        basis.push_back({"a" + std::to_string(i), i});
    m.lagr = QuantumAlgebra<Gf2>("rp" + std::to_string(n) + "-ring", GradingContext(n + 1),
                                 basis, n, "a" + std::to_string(n));
    for (int kdeg = 0; kdeg <= n; ++kdeg)
        for (int jdeg = 0; jdeg <= n; ++jdeg)
            m.lagr.mul[n - kdeg][n - jdeg] = rpn_alpha(n, kdeg + jdeg - n);
    m.lagr.aug[m.lagr.index_of("a0")] = Gf2::one();
    m.init_act();
    for (int i = 0; i <= n; ++i)  // ambient c_i = h^{* i}
        for (int jdeg = 0; jdeg <= n; ++jdeg)
            m.act[i][n - jdeg] = rpn_alpha(n, jdeg - 2 * i);
    // quantum inclusion, by the parity of n
    auto amb_a = [&](int deg2k) {  // ambient class a_{2k} = h^{cap(n - k)}
        return n - deg2k / 2;      // index in the cpn basis (c_i at position i)
    };
    if (n % 2 == 0) {
        for (int kdeg = 0; kdeg <= n; kdeg += 2)
            m.incl[n - kdeg] = FormalSum<Gf2>::basis(amb_a(kdeg));
        for (int kdeg = 1; kdeg <= n - 1; kdeg += 2)
            m.incl[n - kdeg] = FormalSum<Gf2>::basis(amb_a(kdeg + n + 1), 1);
    } else {
        for (int kdeg = 0; kdeg <= n; kdeg += 2) {
            FormalSum<Gf2> v = FormalSum<Gf2>::basis(amb_a(kdeg));
            v.add(Gf2::one(), amb_a(kdeg + n + 1), 1);
            m.incl[n - kdeg] = v;
        }
        for (int kdeg = 1; kdeg <= n; kdeg += 2)
            m.incl[n - kdeg] = FormalSum<Gf2>::zero();
    }
    m.pairing = classical_pairing(m.ambient);
    return m;
}

// The Clifford torus module over QH(CP^2): h acts by t on every class and
// i_L(m) = p + h t + u t^2.
inline ModuleAction<Gf2> clifford_t2_module() {
    ModuleAction<Gf2> m;
    m.ambient = cpn_ring<Gf2>(2, 2);
    m.lagr = clifford_t2_ring();
    m.init_act();
    int u = m.ambient.index_of("u"), h = m.ambient.index_of("h"), p = m.ambient.index_of("p");
    for (std::size_t x = 0; x < m.lagr.basis.size(); ++x) {
        m.act[u][x] = FormalSum<Gf2>::basis(static_cast<int>(x));
        m.act[h][x] = FormalSum<Gf2>::basis(static_cast<int>(x), 1);
        m.act[p][x] = FormalSum<Gf2>::basis(static_cast<int>(x), 2);
    }
    FormalSum<Gf2> ilm = FormalSum<Gf2>::basis(p);
    ilm.add(Gf2::one(), h, 1);
    ilm.add(Gf2::one(), u, 2);
    m.incl[m.lagr.index_of("m")] = ilm;
    m.incl[m.lagr.index_of("a")] = FormalSum<Gf2>::zero();
    m.incl[m.lagr.index_of("b")] = FormalSum<Gf2>::zero();
    m.incl[m.lagr.index_of("w")] = FormalSum<Gf2>::zero();
    m.pairing = classical_pairing(m.ambient);
    return m;
}

// Lagrangian sphere in the quadric (n even, N_L = 2n): the action of the
// middle classes swaps the sphere classes, p acts by t, i_L(alpha_0) = p + u t.
inline ModuleAction<Gf2> quadric_sphere_module(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("quadric_sphere_module: n must be even and >= 2");
    ModuleAction<Gf2> m;
    m.ambient = quadric_ring_mod2(n, 2 * n);
    std::vector<Generator> basis = {{"an", n}, {"a0", 0}};
    m.lagr = QuantumAlgebra<Gf2>("quadric-sphere" + std::to_string(n), GradingContext(2 * n),
                                 basis, n, "an");
    int an = m.lagr.index_of("an"), a0 = m.lagr.index_of("a0");
    m.lagr.mul[an][an] = FormalSum<Gf2>::basis(an);
    m.lagr.mul[an][a0] = FormalSum<Gf2>::basis(a0);
    m.lagr.mul[a0][an] = FormalSum<Gf2>::basis(a0);
    m.lagr.mul[a0][a0] = FormalSum<Gf2>::basis(an, 1);
    m.lagr.aug[a0] = Gf2::one();
    m.init_act();
    int u = m.ambient.index_of("u"), p = m.ambient.index_of("p");
    int ai = m.ambient.index_of("a"), bi = m.ambient.index_of("b");
    m.act[u][an] = FormalSum<Gf2>::basis(an);
    m.act[u][a0] = FormalSum<Gf2>::basis(a0);
    m.act[p][an] = FormalSum<Gf2>::basis(an, 1);
    m.act[p][a0] = FormalSum<Gf2>::basis(a0, 1);
    for (int mid : {ai, bi}) {
        m.act[mid][an] = FormalSum<Gf2>::basis(a0);
        m.act[mid][a0] = FormalSum<Gf2>::basis(an, 1);
    }
    // c_i and g_i act by zero: their degrees land in vanishing QH_j(S^n)
    FormalSum<Gf2> il0 = FormalSum<Gf2>::basis(p);
    il0.add(Gf2::one(), u, 1);
    m.incl[a0] = il0;
    FormalSum<Gf2> iln = FormalSum<Gf2>::basis(ai);
    iln.add(Gf2::one(), bi, 0);
    m.incl[an] = iln;
    m.pairing = classical_pairing(m.ambient);
    return m;
}

// Lagrangian with 2 H_1 = 0 in the quadric, N_L = n: the two possibilities
// for the action of the point class, parameters (s, r) with s r = 0.  The
// ambient datum is the subalgebra generated by {u, p}, which is all the
// proposition pins down.
inline ModuleAction<Gf2> quadric_torsion_module(int n, int variant, int s = 0, int r = 0) {
    if (n < 4)
        throw std::invalid_argument("quadric_torsion_module: n must be >= 4");
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("quadric_torsion_module: variant must be 1 or 2");
    if (variant == 2 && s * r != 0)
        throw std::invalid_argument("quadric_torsion_module: s r = 0 required");
    if (variant == 2 && s == 1)
        throw std::invalid_argument(
            "quadric_torsion_module: s = 1 admits no two-sided algebra structure");
    ModuleAction<Gf2> m;
    std::vector<Generator> amb = {{"u", 2 * n}, {"p", 0}};
    m.ambient = QuantumAlgebra<Gf2>("quadric" + std::to_string(n) + "-up", GradingContext(n),
                                    amb, 2 * n, "u");
    int u = 0, p = 1;
    m.ambient.mul[u][u] = FormalSum<Gf2>::basis(u);
    m.ambient.mul[u][p] = FormalSum<Gf2>::basis(p);
    m.ambient.mul[p][u] = FormalSum<Gf2>::basis(p);
    m.ambient.mul[p][p] = FormalSum<Gf2>::basis(u, 4);  // p*p = u t^{2q}, q = 2
    m.ambient.aug[p] = Gf2::one();

    std::vector<Generator> lb = {{"an", n}, {"a0", 0}};
    m.lagr = QuantumAlgebra<Gf2>("quad-tors" + std::to_string(n), GradingContext(n), lb, n,
                                 "an");
    int an = 0, a0 = 1;
    m.lagr.mul[an][an] = FormalSum<Gf2>::basis(an);
    m.lagr.mul[an][a0] = FormalSum<Gf2>::basis(a0);
    m.lagr.mul[a0][an] = FormalSum<Gf2>::basis(a0);
    // alpha_0 * alpha_0 constrained by two-sidedness against p
    if (variant == 1)
        m.lagr.mul[a0][a0] = FormalSum<Gf2>::basis(an, 2);
    else
        m.lagr.mul[a0][a0] = FormalSum<Gf2>::zero();
    m.lagr.aug[a0] = Gf2::one();

    m.init_act();
    m.act[u][an] = FormalSum<Gf2>::basis(an);
    m.act[u][a0] = FormalSum<Gf2>::basis(a0);
    if (variant == 1) {
        m.act[p][a0] = FormalSum<Gf2>::basis(an, 3);
        m.act[p][an] = FormalSum<Gf2>::basis(a0, 1);
    } else {
        FormalSum<Gf2> pa0 = FormalSum<Gf2>::basis(a0, 2);
        if (s)
            pa0.add(Gf2::one(), an, 3);
        m.act[p][a0] = pa0;
        FormalSum<Gf2> pan = FormalSum<Gf2>::basis(an, 2);
        if (r)
            pan.add(Gf2::one(), a0, 1);
        m.act[p][an] = pan;
    }
    if (variant == 1) {
        m.incl[a0] = FormalSum<Gf2>::basis(p);
        m.incl[an] = FormalSum<Gf2>::basis(u, 1);
    } else {
        FormalSum<Gf2> il0 = FormalSum<Gf2>::basis(p);
        il0.add(Gf2::one(), u, 2);
        m.incl[a0] = il0;
        m.incl[an] = r ? FormalSum<Gf2>::basis(u, 1) : FormalSum<Gf2>::zero();
    }
    Mat<Gf2> pairing(2, 2);
    pairing.at(u, p) = Gf2::one();
    pairing.at(p, u) = Gf2::one();
    m.pairing = pairing;
    return m;
}

// ------------------------------------------------- complete intersections

struct CiInclusion {
    int n = 0, r = 0;
    int chern = 0;           // N = n + r + 1 - sum d_i
    long long coeff = 0;     // prod (d_i - 1)!
    int cap_power = 0;       // i_L(alpha_0) = p - coeff * h^{cap(n-N)} t
    bool coeff_mod2 = false;
};

inline CiInclusion ci_inclusion(int n, const std::vector<int>& degrees) {
    CiInclusion out;
    out.n = n;
    out.r = static_cast<int>(degrees.size());
    long long sum_d = 0;
    for (int d : degrees) {
        if (d < 1)
            throw std::invalid_argument("ci_inclusion: degrees must be positive");
        sum_d += d;
    }
    out.chern = n + out.r + 1 - static_cast<int>(sum_d);
    if (n < 3)
        throw std::invalid_argument("ci_inclusion: requires n >= 3");
    if (out.chern <= 0)
        throw std::invalid_argument("ci_inclusion: not monotone (N <= 0)");
    if (n < 2 * sum_d - 2 * out.r + 1)
        throw std::invalid_argument("ci_inclusion: hypothesis n >= 2 sum d_i - 2r + 1 fails");
    out.coeff = 1;
    for (int d : degrees)
        for (int i = 2; i <= d - 1; ++i)
            out.coeff *= i;
    out.cap_power = n - out.chern;
    out.coeff_mod2 = (out.coeff % 2) != 0;
    return out;
}

// ------------------------------------------------------------------ bounds

// One evaluated inequality; thresholds are exact rationals with pi already
// cancelled from both sides.
struct BoundLine {
    std::string name;
    std::string lhs;           // what is being bounded
    Rat threshold;             // right-hand side
    bool equality = false;     // the bound is attained
    std::optional<bool> pass;  // verdict when data was supplied
    std::optional<bool> attained;  // supplied data sits exactly on the bound
};

namespace detail {

inline void judge(BoundLine& b, const Rat& value) {
    b.pass = value.v <= b.threshold.v;
    b.attained = (value == b.threshold);
}

}  // namespace detail

// pi Gr(M \ L)^2 <= E', pi Gr(L)^2 / 2 <= E'' with energies given as
// multiples of pi.
inline std::vector<BoundLine> gromov_bounds_raw(const Rat& eprime, const Rat& esecond,
                                                std::optional<Rat> r_rel,
                                                std::optional<Rat> rho_compl) {
    std::vector<BoundLine> out;
    BoundLine compl_line{"complement-energy", "Gr(M\\L)^2", eprime};
    if (rho_compl)
        detail::judge(compl_line, *rho_compl * *rho_compl);
    out.push_back(compl_line);
    BoundLine rel{"relative-energy", "Gr(L)^2", esecond * Rat(2, 1)};
    if (r_rel)
        detail::judge(rel, *r_rel * *r_rel);
    out.push_back(rel);
    return out;
}

// Bounds for monotone Lagrangians in CP^n (Gromov radius 1).
inline std::vector<BoundLine> cpn_bounds(int n, int nl, bool clifford, bool two_torsion,
                                         std::optional<Rat> r_rel, std::optional<Rat> rho_compl) {
    if (n < 1)
        throw std::invalid_argument("cpn_bounds: n must be positive");
    if (nl < 2 || nl > n + 1)
        throw std::invalid_argument("cpn_bounds: 2 <= N_L <= n+1 required");
    std::vector<BoundLine> out;
    {
        BoundLine b{"complement", "Gr(CP^n\\L)^2",
                    Rat(static_cast<long long>((2 * n / nl)) * nl, 2 * (n + 1))};
        if (rho_compl)
            detail::judge(b, *rho_compl * *rho_compl);
        out.push_back(b);
    }
    {
        BoundLine b{"complement-general", "Gr(CP^n\\L)^2", Rat(n, n + 1)};
        if (rho_compl)
            detail::judge(b, *rho_compl * *rho_compl);
        out.push_back(b);
    }
    {
        // full homology case: Gr(L)^2/2 + Gr(CP^n\L)^2 <= 1
        BoundLine b{"mixed-sum", "Gr(L)^2/2 + Gr(CP^n\\L)^2", Rat(1, 1)};
        if (r_rel && rho_compl)
            detail::judge(b, *r_rel * *r_rel / Rat(2, 1) + *rho_compl * *rho_compl);
        out.push_back(b);
    }
    if (clifford) {
        BoundLine b{"clifford-torus", "Gr(T_clif)^2", Rat(2, n + 1)};
        if (r_rel)
            detail::judge(b, *r_rel * *r_rel);
        out.push_back(b);
        BoundLine c{"clifford-complement", "Gr(CP^n\\T_clif)^2", Rat(n, n + 1)};
        c.equality = true;  // attained by an explicit packing
        if (rho_compl)
            detail::judge(c, *rho_compl * *rho_compl);
        out.push_back(c);
    }
    if (two_torsion) {
        BoundLine b{"2H1=0-complement", "Gr(CP^n\\L)^2", Rat(1, 2)};
        if (rho_compl)
            detail::judge(b, *rho_compl * *rho_compl);
        out.push_back(b);
    }
    return out;
}

// Monotone-torus bound pi Gr(T)^2/2 <= 2 tau when QH is not full, plus the
// general vanishing bound pi Gr(L)^2/2 <= (n+1) tau; tau in units of pi.
inline std::vector<BoundLine> torus_bounds(const Rat& tau, std::optional<int> n,
                                           std::optional<Rat> r_rel) {
    std::vector<BoundLine> out;
    BoundLine b{"torus-not-full", "Gr(T)^2", Rat(4, 1) * tau};
    if (r_rel)
        detail::judge(b, *r_rel * *r_rel);
    out.push_back(b);
    if (n) {
        BoundLine g{"vanishing-general", "Gr(L)^2", Rat(2 * (*n + 1), 1) * tau};
        if (r_rel)
            detail::judge(g, *r_rel * *r_rel);
        out.push_back(g);
    }
    return out;
}

// Mixed packings: sum pi r_i^2/2 + sum pi rho_j^2 <= E (E in units of pi).
inline std::vector<BoundLine> mixed_packing(const std::string& target,
                                            const std::vector<Rat>& rs,
                                            const std::vector<Rat>& rhos,
                                            std::optional<Rat> energy = std::nullopt) {
    Rat e(0, 1);
    std::string name;
    if (target == "clifford") {
        e = Rat(2, 3);
        name = "mixed-clifford-cp2";
    } else if (target == "quadric-sphere") {
        e = Rat(1, 1);
        name = "mixed-quadric-sphere";
    } else if (target == "raw") {
        if (!energy)
            throw std::invalid_argument("mixed_packing: raw case needs the energy bound");
        e = *energy;
        name = "mixed-raw";
    } else {
        throw std::invalid_argument("mixed_packing: unknown target " + target);
    }
    std::vector<BoundLine> out;
    BoundLine b{name, "sum r_i^2/2 + sum rho_j^2", e};
    if (!rs.empty() || !rhos.empty()) {
        Rat v(0, 1);
        for (auto& r : rs)
            v = v + r * r / Rat(2, 1);
        for (auto& rho : rhos)
            v = v + rho * rho;
        detail::judge(b, v);
    }
    out.push_back(b);
    if (target == "clifford") {
        BoundLine eq{"mixed-clifford-equal-radii", "r^2 (r = rho)", Rat(4, 9)};
        if (rs.size() == 1 && rhos.size() == 1 && rs[0] == rhos[0])
            detail::judge(eq, rs[0] * rs[0]);
        out.push_back(eq);
    }
    return out;
}

// ----------------------------------------------------------------- entries

struct CheckResult {
    std::string name;
    bool pass = false;
};

struct CatalogEntry {
    std::string name;
    std::string kind;  // complex | algebra | algebra-q | module | nu
    std::optional<PearlComplex> complex;
    std::optional<QuantumAlgebra<Gf2>> algebra;
    std::optional<QuantumAlgebra<Rat>> algebra_q;
    std::optional<ModuleAction<Gf2>> module;
    std::optional<NuFunction> nu;
    std::vector<std::pair<std::string, std::function<bool()>>> checks;

    std::vector<CheckResult> run_checks() const {
        std::vector<CheckResult> out;
        for (auto& [nm, fn] : checks) {
            bool pass = false;
            try {
                pass = fn();
            } catch (const std::exception&) {
                pass = false;
            }
            out.push_back({nm, pass});
        }
        return out;
    }
};

namespace detail {

template <class F>
bool action_invertible(const ModuleAction<F>& m, const std::string& amb_id) {
    int a = m.ambient.index_of(amb_id);
    std::size_t n = m.lagr.basis.size();
    Mat<RatFun<F>> mat(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (auto& t : m.act[a][x].terms())
            mat.at(t.k, x) = mat.at(t.k, x) + RatFun<F>(Laurent<F>::term(t.c, t.e));
    return !det(std::move(mat)).is_zero();
}

template <class F>
FormalSum<F> power(const QuantumAlgebra<F>& a, const FormalSum<F>& x, int j) {
    FormalSum<F> acc = FormalSum<F>::basis(a.unit);
    for (int i = 0; i < j; ++i)
        acc = a.product(acc, x);
    return acc;
}

}  // namespace detail

inline std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> out;
    auto add = [&out](CatalogEntry e) { out.push_back(std::move(e)); };

    {
        CatalogEntry e;
        e.name = "circle";
        e.kind = "complex";
        e.complex = circle_complex();
        PearlComplex c = *e.complex;
        e.checks = {
            {"validate", [c] { return validate(c).ok(); }},
            {"qplus-dims",
             [c] {
                 auto h = homology_plus(c);
                 for (int i = h.lo; i <= h.hi; ++i)
                     if (h.at(i) != (i == 1 ? 1 : 0))
                         return false;
                 return true;
             }},
            {"qh-vanishes-over-lambda",
             [c] {
                 auto h = homology_full(c);
                 for (int i = h.lo; i <= h.hi; ++i)
                     if (h.at(i) != 0)
                         return false;
                 return true;
             }},
            {"minimal-delta-p-qt",
             [c] {
                 auto mm = reduce(c);
                 Chain want;
                 want.toggle(mm.model.index_of("Q"), 1);
                 return mm.model.boundary(mm.model.index_of("P")) == want &&
                        qh_vanishes(mm, "Q") && !qh_is_full(mm);
             }},
            {"duality", [c] { return check_duality(c); }},
            {"augmentation", [c] { return augmentation_check(c); }},
        };
        add(std::move(e));
    }

    {
        CatalogEntry e;
        e.name = "clifford-t2-complex";
        e.kind = "complex";
        e.complex = clifford_t2_complex();
        PearlComplex c = *e.complex;
        e.checks = {
            {"validate", [c] { return validate(c).ok(); }},
            {"full-homology",
             [c] {
                 auto h = homology_full(c);
                 return h.at(0) == 2 && h.at(1) == 2;
             }},
            {"qh-is-full", [c] { return qh_is_full(reduce(c)); }},
            {"duality", [c] { return check_duality(c); }},
        };
        add(std::move(e));
    }

    for (int n = 2; n <= 5; ++n) {
        CatalogEntry e;
        e.name = "rp" + std::to_string(n) + "-complex";
        e.kind = "complex";
        e.complex = rpn_complex(n);
        PearlComplex c = *e.complex;
        e.checks = {
            {"validate", [c] { return validate(c).ok(); }},
            {"qh-every-degree",
             [c] {
                 auto h = homology_full(c);
                 for (int i = -3; i <= 8; ++i)
                     if (h.at(i) != 1)
                         return false;
                 return true;
             }},
            {"minimal-fullness", [c] { return qh_is_full(reduce(c)); }},
            {"duality", [c] { return check_duality(c); }},
        };
        add(std::move(e));
    }

    {
        CatalogEntry e;
        e.name = "clifford-t2";
        e.kind = "module";
        e.module = clifford_t2_module();
        ModuleAction<Gf2> m = *e.module;
        e.checks = {
            {"ambient-verify", [m] { return verify_algebra(m.ambient).ok(); }},
            {"ring-verify",
             [m] {
                 auto rep = verify_algebra(m.lagr);
                 return rep.ok() && !rep.commutative;
             }},
            {"ring-table",
             [m] {
                 const auto& r = m.lagr;
                 int a = r.index_of("a"), b = r.index_of("b"), w = r.index_of("w"),
                     mm = r.index_of("m");
                 auto B = [](int k, int e = 0) { return FormalSum<Gf2>::basis(k, e); };
                 return r.mul[a][b] == B(mm) + B(w, 1) && r.mul[b][a] == B(mm) &&
                        r.mul[a][a] == B(w, 1) && r.mul[b][b] == B(w, 1) &&
                        r.mul[mm][mm] == B(mm, 1) + B(w, 2);
             }},
            {"module-verify", [m] { return verify_module(m).ok(); }},
            {"h-action",
             [m] {
                 int h = m.ambient.index_of("h");
                 for (std::size_t x = 0; x < m.lagr.basis.size(); ++x)
                     if (!(m.act[h][x] == FormalSum<Gf2>::basis(static_cast<int>(x), 1)))
                         return false;
                 return true;
             }},
            {"inclusion",
             [m] {
                 auto want = FormalSum<Gf2>::basis(m.ambient.index_of("p"));
                 want.add(Gf2::one(), m.ambient.index_of("h"), 1);
                 want.add(Gf2::one(), m.ambient.index_of("u"), 2);
                 return m.incl.at(m.lagr.index_of("m")) == want &&
                        m.incl.at(m.lagr.index_of("a")).is_zero() &&
                        m.incl.at(m.lagr.index_of("b")).is_zero() &&
                        m.incl.at(m.lagr.index_of("w")).is_zero();
             }},
            {"frobenius", [m] { return frobenius_check(m.lagr) && frobenius_check(m.ambient); }},
            {"two-periodicity", [m] { return detail::action_invertible(m, "h"); }},
        };
        add(std::move(e));
    }

    {
        CatalogEntry e;
        e.name = "clifford-t2-ring";
        e.kind = "algebra";
        e.algebra = clifford_t2_ring();
        QuantumAlgebra<Gf2> a = *e.algebra;
        e.checks = {
            {"verify", [a] { return verify_algebra(a).ok(); }},
            {"noncommutative", [a] { return !verify_algebra(a).commutative; }},
            {"frobenius", [a] { return frobenius_check(a); }},
        };
        add(std::move(e));
    }

    {
        CatalogEntry e;
        e.name = "split-t2-ring";
        e.kind = "algebra";
        e.algebra = split_t2_ring();
        QuantumAlgebra<Gf2> a = *e.algebra;
        e.checks = {
            {"verify", [a] { return verify_algebra(a).ok(); }},
            {"commutative", [a] { return verify_algebra(a).commutative; }},
            {"m-squared",
             [a] {
                 int mm = a.index_of("m"), w = a.index_of("w");
                 return a.mul[mm][mm] == FormalSum<Gf2>::basis(w, 2);
             }},
            {"frobenius", [a] { return frobenius_check(a); }},
        };
        add(std::move(e));
    }

    for (int n = 2; n <= 6; ++n) {
        CatalogEntry e;
        e.name = "cp" + std::to_string(n);
        e.kind = "algebra";
        e.algebra = cpn_ring<Gf2>(n, 2);
        QuantumAlgebra<Gf2> a = *e.algebra;
        int q = n + 1;  // 2(n+1)/N_L with N_L = 2
        e.checks = {
            {"verify",
             [a] {
                 auto rep = verify_algebra(a);
                 return rep.ok() && rep.commutative;
             }},
            {"h-powers",
             [a, n, q] {
                 auto h = FormalSum<Gf2>::basis(a.index_of("h"));
                 for (int j = 0; j <= n; ++j)
                     if (!(detail::power(a, h, j) == FormalSum<Gf2>::basis(j)))
                         return false;
                 return detail::power(a, h, n + 1) ==
                        FormalSum<Gf2>::basis(a.index_of("u"), q);
             }},
            {"h-invertible",
             [a] {
                 auto h = FormalSum<Gf2>::basis(a.index_of("h"));
                 auto inv = invert(a, h);
                 if (!inv.ok || !inv.laurent)
                     return false;
                 return a.product(h, *inv.laurent) == FormalSum<Gf2>::basis(a.unit);
             }},
            {"frobenius", [a] { return frobenius_check(a); }},
        };
        add(std::move(e));
    }

    for (int n = 2; n <= 4; ++n) {
        CatalogEntry e;
        e.name = "cp" + std::to_string(n) + "-q";
        e.kind = "algebra-q";
        e.algebra_q = cpn_ring<Rat>(n, 2);
        QuantumAlgebra<Rat> a = *e.algebra_q;
        e.checks = {
            {"verify", [a] { return verify_algebra(a).ok(); }},
            {"euler-degree-0",
             [a] {
                 auto eu = quantum_euler(a);
                 auto d = a.pure_degree(eu);
                 return d && *d == 0;
             }},
            {"euler-invertible", [a] { return is_semisimple(a); }},
        };
        add(std::move(e));
    }

    for (int n = 2; n <= 5; ++n) {
        CatalogEntry e;
        e.name = "rp" + std::to_string(n);
        e.kind = "module";
        e.module = rpn_module(n);
        ModuleAction<Gf2> m = *e.module;
        e.checks = {
            {"ambient-verify", [m] { return verify_algebra(m.ambient).ok(); }},
            {"ring-verify", [m] { return verify_algebra(m.lagr).ok(); }},
            {"ring-law",
             [m, n] {
                 for (int k = 0; k <= n; ++k)
                     for (int j = 0; j <= n; ++j) {
                         auto got = m.lagr.product(rpn_alpha(n, k), rpn_alpha(n, j));
                         if (!(got == rpn_alpha(n, k + j - n)))
                             return false;
                     }
                 return true;
             }},
            {"module-verify", [m] { return verify_module(m).ok(); }},
            {"two-periodicity", [m] { return detail::action_invertible(m, "h"); }},
            {"frobenius", [m] { return frobenius_check(m.lagr); }},
        };
        add(std::move(e));
    }

    for (int n = 2; n <= 6; ++n) {
        CatalogEntry e;
        e.name = "quadric" + std::to_string(n);
        e.kind = "algebra-q";
        e.algebra_q = quadric_ring_z(n, 2 * n);
        QuantumAlgebra<Rat> a = *e.algebra_q;
        int q = 1;  // 2n / N_L with N_L = 2n
        auto h_elem = [a, n]() {
            if (n == 2) {
                auto v = FormalSum<Rat>::basis(a.index_of("a"));
                v.add(Rat::one(), a.index_of("b"), 0);
                return v;
            }
            return FormalSum<Rat>::basis(a.index_of("h"));
        };
        e.checks = {
            {"verify", [a] { return verify_algebra(a).ok(); }},
            {"h-cap-powers",
             [a, n, h_elem] {
                 if (n == 2)
                     return true;  // no cap powers outside the middle
                 auto h = h_elem();
                 int jmax = (n % 2 == 1) ? n - 1 : n / 2 - 1;
                 for (int j = 0; j <= jmax; ++j)
                     if (!(detail::power(a, h, j) == FormalSum<Rat>::basis(j)))
                         return false;
                 if (n % 2 == 0) {
                     auto mid = FormalSum<Rat>::basis(a.index_of("a"));
                     mid.add(Rat::one(), a.index_of("b"), 0);
                     if (!(detail::power(a, h, n / 2) == mid))
                         return false;
                 }
                 return true;
             }},
            {"h-top-powers",
             [a, n, q, h_elem] {
                 auto h = h_elem();
                 FormalSum<Rat> want_n = FormalSum<Rat>::basis(a.index_of("p"));
                 want_n = want_n.scaled(Rat(2, 1));
                 want_n.add(Rat(2, 1), a.index_of("u"), q);
                 if (!(detail::power(a, h, n) == want_n))
                     return false;
                 auto want_n1 = h_elem().scaled(Rat(4, 1)).shifted(q);
                 return detail::power(a, h, n + 1) == want_n1;
             }},
            {"p-squared",
             [a, q] {
                 auto p = FormalSum<Rat>::basis(a.index_of("p"));
                 return a.product(p, p) == FormalSum<Rat>::basis(a.index_of("u"), 2 * q);
             }},
            {"middle-classes",
             [a, n, q] {
                 if (n % 2 != 0)
                     return true;
                 int k = n / 2;
                 auto av = FormalSum<Rat>::basis(a.index_of("a"));
                 auto bv = FormalSum<Rat>::basis(a.index_of("b"));
                 auto p = FormalSum<Rat>::basis(a.index_of("p"));
                 auto utq = FormalSum<Rat>::basis(a.index_of("u"), q);
                 bool ok = true;
                 if (n > 2) {
                     auto h = FormalSum<Rat>::basis(a.index_of("h"));
                     ok = ok && a.product(h, av) == a.product(h, bv);
                 }
                 if (k % 2 == 1)
                     ok = ok && a.product(av, bv) == p && a.product(av, av) == utq &&
                          a.product(bv, bv) == utq;
                 else
                     ok = ok && a.product(av, av) == p && a.product(bv, bv) == p &&
                          a.product(av, bv) == utq;
                 // (a-b)*(a-b) = (-1)^k 2 (p - u t^q)
                 auto amb = av + bv.scaled(Rat(-1, 1));
                 auto want = (p + utq.scaled(Rat(-1, 1))).scaled(Rat(k % 2 == 1 ? -2 : 2, 1));
                 return ok && a.product(amb, amb) == want;
             }},
            {"euler-invertible", [a] { return is_semisimple(a); }},
        };
        add(std::move(e));
    }

    for (int n = 2; n <= 6; ++n) {
        CatalogEntry e;
        e.name = "quadric" + std::to_string(n) + "-mod2";
        e.kind = "algebra";
        e.algebra = quadric_ring_mod2(n, 2 * n);
        QuantumAlgebra<Gf2> a = *e.algebra;
        e.checks = {
            {"verify", [a] { return verify_algebra(a).ok(); }},
            {"p-invertible",
             [a] {
                 return is_invertible(a, FormalSum<Gf2>::basis(a.index_of("p")));
             }},
            {"h-not-invertible",
             [a, n] {
                 FormalSum<Gf2> h;
                 if (n == 2) {
                     h.add(Gf2::one(), a.index_of("a"), 0);
                     h.add(Gf2::one(), a.index_of("b"), 0);
                 } else {
                     h = FormalSum<Gf2>::basis(a.index_of("h"));
                 }
                 return !is_invertible(a, h);
             }},
            {"a-invertible-n-even",
             [a, n] {
                 if (n % 2 != 0)
                     return true;
                 return is_invertible(a, FormalSum<Gf2>::basis(a.index_of("a")));
             }},
        };
        add(std::move(e));
    }

    for (int n : {2, 4, 6}) {
        CatalogEntry e;
        e.name = "quadric-sphere" + std::to_string(n);
        e.kind = "module";
        e.module = quadric_sphere_module(n);
        ModuleAction<Gf2> m = *e.module;
        e.checks = {
            {"ambient-verify", [m] { return verify_algebra(m.ambient).ok(); }},
            {"ring-verify", [m] { return verify_algebra(m.lagr).ok(); }},
            {"module-verify", [m] { return verify_module(m).ok(); }},
            {"p-action",
             [m] {
                 int p = m.ambient.index_of("p");
                 int a0 = m.lagr.index_of("a0"), an = m.lagr.index_of("an");
                 return m.act[p][a0] == FormalSum<Gf2>::basis(a0, 1) &&
                        m.act[p][an] == FormalSum<Gf2>::basis(an, 1);
             }},
            {"sphere-product",
             [m] {
                 int a0 = m.lagr.index_of("a0"), an = m.lagr.index_of("an");
                 return m.lagr.mul[a0][a0] == FormalSum<Gf2>::basis(an, 1);
             }},
            {"inclusion",
             [m] {
                 auto want = FormalSum<Gf2>::basis(m.ambient.index_of("p"));
                 want.add(Gf2::one(), m.ambient.index_of("u"), 1);
                 return m.incl.at(m.lagr.index_of("a0")) == want;
             }},
        };
        add(std::move(e));
    }

    {
        struct Tors {
            std::string name;
            int variant, s, r;
        };
        for (auto& t : {Tors{"quadric-torsion-1", 1, 0, 0}, Tors{"quadric-torsion-2-r0", 2, 0, 0},
                        Tors{"quadric-torsion-2-r1", 2, 0, 1}}) {
            CatalogEntry e;
            e.name = t.name;
            e.kind = "module";
            e.module = quadric_torsion_module(5, t.variant, t.s, t.r);
            ModuleAction<Gf2> m = *e.module;
            e.checks = {
                {"ambient-verify", [m] { return verify_algebra(m.ambient).ok(); }},
                {"ring-verify", [m] { return verify_algebra(m.lagr).ok(); }},
                {"module-verify", [m] { return verify_module(m).ok(); }},
            };
            add(std::move(e));
        }
    }

    {
        CatalogEntry e;
        e.name = "clifford-nu";
        e.kind = "nu";
        e.nu = clifford_nu();
        NuFunction nu = *e.nu;
        e.checks = {
            {"d1-zero", [nu] { return d1_class(nu) == std::make_pair(0, 0); }},
            {"coefficients",
             [nu] {
                 auto r = synthesize(nu);
                 return r && r->alpha && r->beta && r->gamma_sum;
             }},
            {"matches-catalog-ring",
             [nu] {
                 auto r = synthesize(nu);
                 return r && r->ring.mul == clifford_t2_ring().mul;
             }},
        };
        add(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "split-nu";
        e.kind = "nu";
        e.nu = split_nu();
        NuFunction nu = *e.nu;
        e.checks = {
            {"d1-zero", [nu] { return d1_class(nu) == std::make_pair(0, 0); }},
            {"coefficients",
             [nu] {
                 auto r = synthesize(nu);
                 return r && r->alpha && r->beta && !r->gamma_sum;
             }},
            {"matches-catalog-ring",
             [nu] {
                 auto r = synthesize(nu);
                 return r && r->ring.mul == split_t2_ring().mul;
             }},
        };
        add(std::move(e));
    }

    return out;
}

inline const CatalogEntry& find_entry(const std::vector<CatalogEntry>& cat,
                                      const std::string& name) {
    for (auto& e : cat)
        if (e.name == name)
            return e;
    throw std::invalid_argument("no catalog entry named " + name);
}

}  // namespace pearl::catalog
