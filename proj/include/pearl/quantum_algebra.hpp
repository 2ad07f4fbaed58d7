#pragma once

// Finitely presented graded quantum algebras and module/inclusion data over
// the positive Laurent ring, together with the verification routines: unit
// and associativity sweeps, two-sided module axioms, the inclusion identity
// <h*, i_L(x)> = eps(h*x), Frobenius nondegeneracy, exact inversion over
// the fraction field, the even quantum Euler class and the semi-simplicity
// criterion built on its invertibility.

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pearl/fields.hpp"
#include "pearl/laurent.hpp"
#include "pearl/linalg.hpp"
#include "pearl/pearl_complex.hpp"
#include "pearl/ratfun.hpp"

namespace pearl {

template <class F>
struct Term {
    F c;
    int k;  // basis index
    int e;  // t-exponent
};

// Canonical linear combination of basis monomials e_k t^e.
template <class F>
class FormalSum {
    std::map<std::pair<int, int>, F> t_;  // (k, e) -> coefficient

public:
    FormalSum() = default;

    static FormalSum zero() { return {}; }
    static FormalSum basis(int k, int e = 0, F c = F::one()) {
        FormalSum s;
        s.add(c, k, e);
        return s;
    }

    void add(const F& c, int k, int e) {
        if (c.is_zero())
            return;
        auto [it, fresh] = t_.emplace(std::make_pair(k, e), c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero())
                t_.erase(it);
        }
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    std::vector<Term<F>> terms() const {
        std::vector<Term<F>> out;
        for (auto& [ke, c] : t_)
            out.push_back({c, ke.first, ke.second});
        return out;
    }

    F coeff(int k, int e) const {
        auto it = t_.find({k, e});
        return it == t_.end() ? F::zero() : it->second;
    }

    FormalSum shifted(int de) const {
        FormalSum s;
        for (auto& [ke, c] : t_)
            s.t_.emplace(std::make_pair(ke.first, ke.second + de), c);
        return s;
    }

    FormalSum scaled(const F& f) const {
        FormalSum s;
        for (auto& [ke, c] : t_)
            s.add(c * f, ke.first, ke.second);
        return s;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum& b) {
        for (auto& [ke, c] : b.t_)
            a.add(c, ke.first, ke.second);
        return a;
    }

    friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.t_ == b.t_; }

    bool positive_exponents() const {
        for (auto& [ke, c] : t_)
            if (ke.second < 0)
                return false;
        return true;
    }
};

template <class F>
struct QuantumAlgebra {
    std::string name;
    GradingContext ctx{2};
    std::vector<Generator> basis;
    int top = 0;   // degree of the unit
    int unit = 0;  // basis index of the unit
    std::vector<std::vector<FormalSum<F>>> mul;  // mul[i][j] = e_i * e_j
    std::map<int, F> aug;  // explicit augmentation; empty = degree-0 indicator

    QuantumAlgebra() = default;
    QuantumAlgebra(std::string nm, GradingContext c, std::vector<Generator> b, int top_deg,
                   const std::string& unit_id)
        : name(std::move(nm)), ctx(c), basis(std::move(b)), top(top_deg) {
        unit = index_of(unit_id);
        mul.assign(basis.size(), std::vector<FormalSum<F>>(basis.size()));
    }

    int index_of(const std::string& id) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].id == id)
                return static_cast<int>(i);
        throw std::invalid_argument("unknown basis element: " + id);
    }

    void set_mul(const std::string& a, const std::string& b, const FormalSum<F>& s) {
        mul[index_of(a)][index_of(b)] = s;
    }

    FormalSum<F> product(const FormalSum<F>& a, const FormalSum<F>& b) const {
        FormalSum<F> out;
        for (auto& ta : a.terms())
            for (auto& tb : b.terms())
                out = out + mul[ta.k][tb.k].scaled(ta.c * tb.c).shifted(ta.e + tb.e);
        return out;
    }

    F augmentation_of(int k) const {
        if (!aug.empty()) {
            auto it = aug.find(k);
            return it == aug.end() ? F::zero() : it->second;
        }
        return basis[k].degree == 0 ? F::one() : F::zero();
    }

    // Lambda(+)-valued augmentation of a formal sum.
    Laurent<F> augment(const FormalSum<F>& s) const {
        Laurent<F> out;
        for (auto& t : s.terms())
            out.add_term(t.e, t.c * augmentation_of(t.k));
        return out;
    }

    // pure degree of a formal sum, if it has one
    std::optional<int> pure_degree(const FormalSum<F>& s) const {
        std::optional<int> deg;
        for (auto& t : s.terms()) {
            int d = ctx.monomial_degree(basis[t.k].degree, t.e);
            if (deg && *deg != d)
                return std::nullopt;
            deg = d;
        }
        return deg;
    }

    std::string render(const FormalSum<F>& s) const {
        if (s.is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& t : s.terms()) {
            if (!first)
                os << " + ";
            first = false;
            if (!t.c.is_one())
                os << t.c.str() << "*";
            os << basis[t.k].id;
            if (t.e != 0)
                os << " t^" << t.e;
        }
        return os.str();
    }
};

struct AlgebraReport {
    std::vector<std::string> issues;
    bool commutative = true;
    bool ok() const { return issues.empty(); }
    std::string str() const {
        std::ostringstream os;
        for (auto& s : issues)
            os << s << "\n";
        return os.str();
    }
};

// Homogeneity of every structure constant, the unit law, associativity on
// all basis triples; commutativity is reported, never demanded.
template <class F>
AlgebraReport verify_algebra(const QuantumAlgebra<F>& a) {
    AlgebraReport rep;
    std::size_t n = a.basis.size();
    if (a.basis[a.unit].degree != a.top)
        rep.issues.push_back("unit degree differs from declared top");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (auto& t : a.mul[i][j].terms()) {
                if (t.e < 0)
                    rep.issues.push_back("negative exponent in " + a.basis[i].id + "*" +
                                         a.basis[j].id);
                int want = a.basis[i].degree + a.basis[j].degree - a.top;
                if (a.ctx.monomial_degree(a.basis[t.k].degree, t.e) != want) {
                    std::ostringstream os;
                    os << "inhomogeneous product " << a.basis[i].id << "*" << a.basis[j].id
                       << ": term " << a.basis[t.k].id << " t^" << t.e;
                    rep.issues.push_back(os.str());
                }
            }
    for (std::size_t i = 0; i < n; ++i) {
        auto ei = FormalSum<F>::basis(static_cast<int>(i));
        if (!(a.mul[a.unit][i] == ei))
            rep.issues.push_back("unit * " + a.basis[i].id + " != " + a.basis[i].id);
        if (!(a.mul[i][a.unit] == ei))
            rep.issues.push_back(a.basis[i].id + " * unit != " + a.basis[i].id);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(a.mul[i][j] == a.mul[j][i]))
                rep.commutative = false;
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = a.product(a.mul[i][j], FormalSum<F>::basis(static_cast<int>(k)));
                auto rhs = a.product(FormalSum<F>::basis(static_cast<int>(i)), a.mul[j][k]);
                if (!(lhs == rhs)) {
                    std::ostringstream os;
                    os << "associativity fails on (" << a.basis[i].id << ", " << a.basis[j].id
                       << ", " << a.basis[k].id << ")";
                    rep.issues.push_back(os.str());
                }
            }
        }
    return rep;
}

// Module datum: an ambient algebra of top degree 2n acting on a Lagrangian
// algebra of top degree n, optionally with the quantum inclusion i_L and a
// classical intersection table on the ambient basis.
template <class F>
struct ModuleAction {
    QuantumAlgebra<F> ambient;
    QuantumAlgebra<F> lagr;
    std::vector<std::vector<FormalSum<F>>> act;  // act[a][x] in lagr basis
    std::map<int, FormalSum<F>> incl;            // lagr index -> ambient sum
    std::optional<Mat<F>> pairing;               // ambient intersection table

    void init_act() { act.assign(ambient.basis.size(), std::vector<FormalSum<F>>(lagr.basis.size())); }

    void set_act(const std::string& a, const std::string& x, const FormalSum<F>& s) {
        act[ambient.index_of(a)][lagr.index_of(x)] = s;
    }

    FormalSum<F> action(const FormalSum<F>& a, const FormalSum<F>& x) const {
        FormalSum<F> out;
        for (auto& ta : a.terms())
            for (auto& tx : x.terms())
                out = out + act[ta.k][tx.k].scaled(ta.c * tx.c).shifted(ta.e + tx.e);
        return out;
    }

    // i_L extended linearly; nullopt when the support of x leaves the table.
    std::optional<FormalSum<F>> include(const FormalSum<F>& x) const {
        FormalSum<F> out;
        for (auto& t : x.terms()) {
            auto it = incl.find(t.k);
            if (it == incl.end())
                return std::nullopt;
            out = out + it->second.scaled(t.c).shifted(t.e);
        }
        return out;
    }
};

template <class F>
AlgebraReport verify_module(const ModuleAction<F>& m) {
    AlgebraReport rep;
    std::size_t na = m.ambient.basis.size(), nl = m.lagr.basis.size();
    int two_n = m.ambient.top;
    if (m.ambient.ctx.maslov != m.lagr.ctx.maslov)
        rep.issues.push_back("ambient and Lagrangian grading contexts disagree");
    if (m.ambient.top != 2 * m.lagr.top)
        rep.issues.push_back("ambient top degree is not twice the Lagrangian top degree");
    // act homogeneity with the -2n shift
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t x = 0; x < nl; ++x)
            for (auto& t : m.act[i][x].terms()) {
                int want = m.ambient.basis[i].degree + m.lagr.basis[x].degree - two_n;
                if (m.lagr.ctx.monomial_degree(m.lagr.basis[t.k].degree, t.e) != want ||
                    t.e < 0) {
                    rep.issues.push_back("inhomogeneous action " + m.ambient.basis[i].id + "*" +
                                         m.lagr.basis[x].id);
                }
            }
    // unit of the ambient acts as the identity
    for (std::size_t x = 0; x < nl; ++x)
        if (!(m.act[m.ambient.unit][x] == FormalSum<F>::basis(static_cast<int>(x))))
            rep.issues.push_back("[M] * " + m.lagr.basis[x].id + " != " + m.lagr.basis[x].id);
    // (a*b)*x = a*(b*x)
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t x = 0; x < nl; ++x) {
                auto lhs = m.action(m.ambient.mul[i][j], FormalSum<F>::basis(static_cast<int>(x)));
                auto rhs = m.action(FormalSum<F>::basis(static_cast<int>(i)), m.act[j][x]);
                if (!(lhs == rhs))
                    rep.issues.push_back("module associativity fails on (" +
                                         m.ambient.basis[i].id + ", " + m.ambient.basis[j].id +
                                         ", " + m.lagr.basis[x].id + ")");
            }
    // two-sided: a*(x*y) = x*(a*y) = (a*x)*y
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t x = 0; x < nl; ++x)
            for (std::size_t y = 0; y < nl; ++y) {
                auto a_xy = m.action(FormalSum<F>::basis(static_cast<int>(i)), m.lagr.mul[x][y]);
                auto x_ay = m.lagr.product(FormalSum<F>::basis(static_cast<int>(x)),
                                           m.act[i][y]);
                auto ax_y = m.lagr.product(m.act[i][x],
                                           FormalSum<F>::basis(static_cast<int>(y)));
                if (!(a_xy == x_ay) || !(a_xy == ax_y))
                    rep.issues.push_back("two-sidedness fails on (" + m.ambient.basis[i].id +
                                         ", " + m.lagr.basis[x].id + ", " + m.lagr.basis[y].id +
                                         ")");
            }
    // quantum inclusion: degree 0, module morphism, pairing identity
    for (auto& [x, ix] : m.incl) {
        for (auto& t : ix.terms()) {
            if (m.ambient.ctx.monomial_degree(m.ambient.basis[t.k].degree, t.e) !=
                    m.lagr.basis[x].degree ||
                t.e < 0)
                rep.issues.push_back("i_L(" + m.lagr.basis[x].id + ") not degree preserving");
        }
        for (std::size_t i = 0; i < na; ++i) {
            auto via_lagr = m.include(m.act[i][x]);
            if (!via_lagr)
                continue;  // i_L only partially specified
            auto via_amb =
                m.ambient.product(FormalSum<F>::basis(static_cast<int>(i)), ix);
            if (!(*via_lagr == via_amb))
                rep.issues.push_back("i_L is not a module morphism at (" +
                                     m.ambient.basis[i].id + ", " + m.lagr.basis[x].id + ")");
        }
        if (m.pairing) {
            for (std::size_t i = 0; i < na; ++i) {
                Laurent<F> lhs;  // <h*, i_L(x)> via the intersection table
                for (auto& t : ix.terms())
                    lhs.add_term(t.e, t.c * m.pairing->at(i, t.k));
                Laurent<F> rhs = m.lagr.augment(m.act[i][x]);
                if (!(lhs == rhs))
                    rep.issues.push_back("inclusion pairing identity fails at (" +
                                         m.ambient.basis[i].id + ", " + m.lagr.basis[x].id +
                                         ")");
            }
        }
    }
    return rep;
}

// The Frobenius pairing eps(e_i * e_j) is nondegenerate over the fraction
// field.
template <class F>
bool frobenius_check(const QuantumAlgebra<F>& a) {
    std::size_t n = a.basis.size();
    Mat<RatFun<F>> p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p.at(i, j) = RatFun<F>(a.augment(a.mul[i][j]));
    return !det(std::move(p)).is_zero();
}

// Left multiplication by x as a matrix over the fraction field.
template <class F>
Mat<RatFun<F>> left_multiplication(const QuantumAlgebra<F>& a, const FormalSum<F>& x) {
    std::size_t n = a.basis.size();
    Mat<RatFun<F>> m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        auto xk = a.product(x, FormalSum<F>::basis(static_cast<int>(k)));
        for (auto& t : xk.terms())
            m.at(t.k, k) = m.at(t.k, k) + RatFun<F>(Laurent<F>::term(t.c, t.e));
    }
    return m;
}

template <class F>
struct Inverse {
    bool ok = false;
    std::vector<RatFun<F>> coords;          // over the fraction field
    std::optional<FormalSum<F>> laurent;    // present when all coords lie in Lambda
};

// Solve x * y = unit exactly over the fraction field.
template <class F>
Inverse<F> invert(const QuantumAlgebra<F>& a, const FormalSum<F>& x) {
    std::size_t n = a.basis.size();
    auto lm = left_multiplication(a, x);
    std::vector<RatFun<F>> rhs(n);
    rhs[a.unit] = RatFun<F>::one();
    auto sol = solve(lm, rhs);
    Inverse<F> out;
    if (!sol)
        return out;
    out.ok = true;
    out.coords = *sol;
    bool laurent = true;
    for (auto& c : out.coords)
        laurent = laurent && c.is_laurent();
    if (laurent) {
        FormalSum<F> y;
        for (std::size_t k = 0; k < n; ++k)
            for (auto& [e, c] : out.coords[k].num().terms())
                y.add(c, static_cast<int>(k), e);
        out.laurent = y;
    }
    return out;
}

template <class F>
bool is_invertible(const QuantumAlgebra<F>& a, const FormalSum<F>& x) {
    return invert(a, x).ok;
}

// Classical intersection pairing derived from the t^0 part of the product
// composed with the augmentation (for honest data this is the intersection
// table; a stored table may be supplied instead).
template <class F>
Mat<F> classical_pairing(const QuantumAlgebra<F>& a) {
    std::size_t n = a.basis.size();
    Mat<F> p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p.at(i, j) = a.augment(a.mul[i][j]).coeff(0);
    return p;
}

// The even quantum Euler class sum e_i * e_i^# over a pairing-dual basis.
// Rejects odd-degree bases and degenerate pairings; checks pure degree 0
// and recomputes in a transformed basis as a self-test.
template <class F>
FormalSum<F> quantum_euler(const QuantumAlgebra<F>& a,
                           const std::optional<Mat<F>>& pairing = std::nullopt) {
    std::size_t n = a.basis.size();
    for (auto& b : a.basis)
        if (((b.degree % 2) + 2) % 2 != 0)
            throw std::invalid_argument("quantum_euler requires an even-degree basis");
    Mat<F> p = pairing ? *pairing : classical_pairing(a);
    auto pinv = inverse(p);
    if (!pinv)
        throw std::invalid_argument("degenerate intersection pairing");

    auto euler_for = [&](const Mat<F>& basis_change) {
        // rows of basis_change give the new basis f_i = sum_j T_{ij} e_j
        Mat<F> pf = basis_change * p * basis_change.transposed();
        auto pfinv = inverse(pf);
        if (!pfinv)
            throw std::invalid_argument("degenerate pairing after basis change");
        FormalSum<F> total;
        for (std::size_t i = 0; i < n; ++i) {
            FormalSum<F> fi, fidual;
            for (std::size_t j = 0; j < n; ++j) {
                fi.add(basis_change.at(i, j), static_cast<int>(j), 0);
                // f_i^# = sum_k (P_f^{-1})_{ik} f_k
                for (std::size_t k = 0; k < n; ++k)
                    fidual.add(pfinv->at(i, k) * basis_change.at(k, j), static_cast<int>(j), 0);
            }
            total = total + a.product(fi, fidual);
        }
        return total;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(p.at(i, j) == p.at(j, i)))
                throw std::invalid_argument("intersection pairing must be symmetric");

    auto e = euler_for(Mat<F>::identity(n));
    if (auto d = a.pure_degree(e); !e.is_zero() && (!d || *d != 0))
        throw std::logic_error("quantum Euler class is not of pure degree 0");

    // recomputation in a second basis: a unitriangular mix f_i = e_i + e_{i+1}
    Mat<F> t = Mat<F>::identity(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        t.at(i, i + 1) = F::one();
    if (!(euler_for(t) == e))
        throw std::logic_error("quantum Euler class depends on the basis; data inconsistent");
    return e;
}

// Semi-simplicity in the sense of the invertibility of the even quantum
// Euler class.
template <class F>
bool is_semisimple(const QuantumAlgebra<F>& a,
                   const std::optional<Mat<F>>& pairing = std::nullopt) {
    return is_invertible(a, quantum_euler(a, pairing));
}

template <class F>
struct DegreeSearch {
    bool found = false;
    bool exhaustive = false;  // deterministic sweep of the GF(2)-span
    FormalSum<F> witness;
};

// Search the pure-degree-l slice for an invertible element.  With at most
// 16 slice monomials the GF(2)-span is swept deterministically; otherwise
// `samples` random coefficient vectors are tried.  A hit is verified
// exactly; a miss is only probabilistic.
template <class F>
DegreeSearch<F> has_invertible_of_degree(const QuantumAlgebra<F>& a, int l, int samples = 64,
                                         std::uint64_t seed = 0x9e3779b9) {
    std::vector<std::pair<int, int>> slice;  // (k, forced exponent)
    for (std::size_t k = 0; k < a.basis.size(); ++k) {
        int diff = a.basis[k].degree - l;
        if (((diff % a.ctx.maslov) + a.ctx.maslov) % a.ctx.maslov == 0)
            slice.emplace_back(static_cast<int>(k), diff / a.ctx.maslov);
    }
    DegreeSearch<F> out;
    if (slice.empty()) {
        out.exhaustive = true;  // an empty slice is a definite no
        return out;
    }
    if (slice.size() <= 16) {
        out.exhaustive = true;
        for (std::uint32_t mask = 1; mask < (1u << slice.size()); ++mask) {
            FormalSum<F> x;
            for (std::size_t i = 0; i < slice.size(); ++i)
                if (mask & (1u << i))
                    x.add(F::one(), slice[i].first, slice[i].second);
            if (is_invertible(a, x)) {
                out.found = true;
                out.witness = x;
                return out;
            }
        }
        return out;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    for (int s = 0; s < samples; ++s) {
        FormalSum<F> x;
        for (auto& [k, e] : slice)
            x.add(F::from_int(coeff(rng)), k, e);
        if (x.is_zero())
            continue;
        if (is_invertible(a, x)) {
            out.found = true;
            out.witness = x;
            return out;
        }
    }
    return out;
}

// Minimal t-exponent and its coefficient part.
template <class F>
std::pair<int, FormalSum<F>> leading_order(const FormalSum<F>& x) {
    if (x.is_zero())
        throw std::invalid_argument("leading_order of zero");
    int kmin = 0;
    bool first = true;
    for (auto& t : x.terms()) {
        if (first || t.e < kmin)
            kmin = t.e;
        first = false;
    }
    FormalSum<F> head;
    for (auto& t : x.terms())
        if (t.e == kmin)
            head.add(t.c, t.k, 0);
    return {kmin, head};
}

// Mod-2 reduction of an integral rational algebra.
inline QuantumAlgebra<Gf2> mod2_reduction(const QuantumAlgebra<Rat>& a) {
    QuantumAlgebra<Gf2> out(a.name, a.ctx, a.basis, a.top, a.basis[a.unit].id);
    for (std::size_t i = 0; i < a.basis.size(); ++i)
        for (std::size_t j = 0; j < a.basis.size(); ++j) {
            FormalSum<Gf2> s;
            for (auto& t : a.mul[i][j].terms())
                s.add(t.c.mod2(), t.k, t.e);
            out.mul[i][j] = s;
        }
    for (auto& [k, c] : a.aug)
        out.aug[k] = c.mod2();
    return out;
}

}  // namespace pearl
