#pragma once

// The pearl chain complex as finite data: graded generators plus one GF(2)
// matrix per Maslov order j, encoding the differential d = sum_j del_j t^j
// of pure degree -1.  Homology is computed degreewise over the positive
// ring (exponents >= 0) and over the full Laurent ring (the complex folded
// by degree mod N_L, where each generator carries a forced t-power).

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pearl/fields.hpp"
#include "pearl/laurent.hpp"
#include "pearl/linalg.hpp"

namespace pearl {

struct Generator {
    std::string id;
    int degree = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// A Lambda+ element of a complex: set of (generator index, t-exponent),
// GF(2) coefficients implicit.
struct Chain {
    std::set<std::pair<int, int>> terms;

    bool empty() const { return terms.empty(); }
    void toggle(int gen, int exp) {
        auto key = std::make_pair(gen, exp);
        if (!terms.insert(key).second)
            terms.erase(key);
    }
    Chain& operator+=(const Chain& o) {
        for (auto& t : o.terms)
            toggle(t.first, t.second);
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    Chain shifted(int k) const {
        Chain c;
        for (auto& [g, e] : terms)
            c.terms.emplace(g, e + k);
        return c;
    }
    friend bool operator==(const Chain&, const Chain&) = default;
};

struct ValidationIssue {
    enum class Kind { Homogeneity, SquareNonzero, NegativeExponent } kind;
    int j = 0;      // Maslov order of the offending block
    int from = -1;  // source generator index (homogeneity only)
    int to = -1;    // target generator index (homogeneity only)
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string str() const {
        std::ostringstream os;
        for (auto& i : issues)
            os << i.message << "\n";
        return os.str();
    }
};

// Graded GF(2) dimensions over a finite degree window, with the periodic
// behaviour below (and for full coefficients, everywhere outside) recorded.
struct GradedDims {
    int lo = 0, hi = -1;
    int maslov = 2;
    std::map<int, int> dims;
    bool periodic_tail = false;   // dims repeat with period N below lo
    bool fully_periodic = false;  // dims repeat with period N everywhere

    int at(int degree) const {
        if (degree >= lo && degree <= hi) {
            auto it = dims.find(degree);
            return it == dims.end() ? 0 : it->second;
        }
        if (fully_periodic) {
            int d = degree;
            while (d < lo)
                d += maslov;
            while (d > hi)
                d -= maslov;
            auto it = dims.find(d);
            return it == dims.end() ? 0 : it->second;
        }
        if (degree > hi)
            return 0;
        if (periodic_tail) {
            int d = degree;
            while (d < lo)
                d += maslov;
            auto it = dims.find(d);
            return it == dims.end() ? 0 : it->second;
        }
        throw std::out_of_range("GradedDims: degree outside computed window");
    }

    int total() const {
        int s = 0;
        for (auto& [d, v] : dims)
            s += v;
        return s;
    }
};

class PearlComplex {
    std::string name_;
    GradingContext ctx_;
    std::vector<Generator> gens_;
    std::vector<Mat<Gf2>> del_;  // del_[j].at(target, source)
    std::optional<int> top_;

public:
    PearlComplex() = default;
    PearlComplex(std::string name, GradingContext ctx, std::vector<Generator> gens,
                 std::optional<int> top = std::nullopt)
        : name_(std::move(name)), ctx_(ctx), gens_(std::move(gens)), top_(top) {
        std::set<std::string> seen;
        for (auto& g : gens_)
            if (!seen.insert(g.id).second)
                throw std::invalid_argument("duplicate generator id: " + g.id);
    }

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const GradingContext& ctx() const { return ctx_; }
    int maslov() const { return ctx_.maslov; }
    const std::vector<Generator>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    const std::vector<Mat<Gf2>>& blocks() const { return del_; }
    std::optional<int> declared_top() const { return top_; }

    int index_of(const std::string& id) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].id == id)
                return static_cast<int>(i);
        throw std::invalid_argument("unknown generator: " + id);
    }

    int min_degree() const {
        if (gens_.empty())
            return 0;
        int m = gens_[0].degree;
        for (auto& g : gens_)
            m = std::min(m, g.degree);
        return m;
    }
    int max_degree() const {
        if (gens_.empty())
            return 0;
        int m = gens_[0].degree;
        for (auto& g : gens_)
            m = std::max(m, g.degree);
        return m;
    }
    int top_degree() const { return top_ ? *top_ : max_degree(); }

    Gf2 del(std::size_t j, int target, int source) const {
        if (j >= del_.size())
            return Gf2::zero();
        return del_[j].at(target, source);
    }

    void set_del(std::size_t j, int target, int source, Gf2 v) {
        while (del_.size() <= j)
            del_.emplace_back(gens_.size(), gens_.size());
        del_[j].at(target, source) = v;
    }

    std::size_t block_count() const { return del_.size(); }

    // d applied to a single generator.
    Chain boundary(int gen) const {
        Chain c;
        for (std::size_t j = 0; j < del_.size(); ++j)
            for (std::size_t y = 0; y < gens_.size(); ++y)
                if (del_[j].at(y, gen).is_one())
                    c.toggle(static_cast<int>(y), static_cast<int>(j));
        return c;
    }

    Chain boundary(const Chain& x) const {
        Chain c;
        for (auto& [g, e] : x.terms)
            c += boundary(g).shifted(e);
        return c;
    }

    // Basis of the degree-i slice over Lambda+: (gen, exp) with exp >= 0.
    std::vector<std::pair<int, int>> plus_basis(int degree) const {
        std::vector<std::pair<int, int>> b;
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            int diff = gens_[g].degree - degree;
            if (diff >= 0 && diff % ctx_.maslov == 0)
                b.emplace_back(static_cast<int>(g), diff / ctx_.maslov);
        }
        return b;
    }

    // Basis of the degree-i slice over Lambda: every generator in the right
    // residue class appears once, with its forced (possibly negative) power.
    std::vector<std::pair<int, int>> full_basis(int degree) const {
        std::vector<std::pair<int, int>> b;
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            int diff = gens_[g].degree - degree;
            if (((diff % ctx_.maslov) + ctx_.maslov) % ctx_.maslov == 0)
                b.emplace_back(static_cast<int>(g), diff / ctx_.maslov);
        }
        return b;
    }

    // Matrix of d from the degree slice `from` to the degree slice `to`
    // (to == from - 1), with respect to the given slice bases.
    Mat<Gf2> slice_matrix(const std::vector<std::pair<int, int>>& from,
                          const std::vector<std::pair<int, int>>& to) const {
        std::map<std::pair<int, int>, std::size_t> index;
        for (std::size_t i = 0; i < to.size(); ++i)
            index[to[i]] = i;
        Mat<Gf2> m(to.size(), from.size());
        for (std::size_t c = 0; c < from.size(); ++c) {
            auto [g, e] = from[c];
            for (std::size_t j = 0; j < del_.size(); ++j)
                for (std::size_t y = 0; y < gens_.size(); ++y)
                    if (del_[j].at(y, g).is_one()) {
                        auto it = index.find({static_cast<int>(y), e + static_cast<int>(j)});
                        if (it != index.end())
                            m.at(it->second, c) = m.at(it->second, c) + Gf2::one();
                    }
        }
        return m;
    }
};

inline ValidationReport validate(const PearlComplex& c) {
    ValidationReport rep;
    int n = static_cast<int>(c.size());
    int nl = c.maslov();
    for (std::size_t j = 0; j < c.block_count(); ++j) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (!c.del(j, y, x).is_one())
                    continue;
                int want = c.gens()[x].degree - 1 + static_cast<int>(j) * nl;
                if (c.gens()[y].degree != want) {
                    std::ostringstream os;
                    os << "homogeneity: del_" << j << " " << c.gens()[x].id << " -> "
                       << c.gens()[y].id << " violates |y| = |x| - 1 + j*N_L";
                    rep.issues.push_back({ValidationIssue::Kind::Homogeneity,
                                          static_cast<int>(j), x, y, os.str()});
                }
            }
    }
    // d^2 = 0, checked per total Maslov order: sum_{a+b=j} del_a del_b = 0.
    std::size_t jmax = 2 * c.block_count();
    for (std::size_t j = 0; j < jmax; ++j) {
        Mat<Gf2> acc(c.size(), c.size());
        bool any = false;
        for (std::size_t a = 0; a <= j; ++a) {
            std::size_t b = j - a;
            if (a >= c.block_count() || b >= c.block_count())
                continue;
            acc = acc + c.blocks()[a] * c.blocks()[b];
            any = true;
        }
        if (any && !acc.is_zero()) {
            std::ostringstream os;
            os << "d^2 != 0 at order t^" << j;
            rep.issues.push_back(
                {ValidationIssue::Kind::SquareNonzero, static_cast<int>(j), -1, -1, os.str()});
        }
    }
    return rep;
}

namespace detail {

inline int hom_dim(const Mat<Gf2>& d_in, const Mat<Gf2>& d_out) {
    // dim ker(d_out) - rank(d_in)
    int k = static_cast<int>(d_out.cols() - rank(d_out));
    return k - static_cast<int>(rank(d_in));
}

}  // namespace detail

// Homology over Lambda+ on a degree window.  The default window is
// [min_deg - 2 N_L, max_deg]; any window containing it is accepted.
inline GradedDims homology_plus(const PearlComplex& c,
                                std::optional<std::pair<int, int>> window = std::nullopt) {
    auto rep = validate(c);
    if (!rep.ok())
        throw std::invalid_argument("homology of invalid complex:\n" + rep.str());
    int nl = c.maslov();
    int lo = c.min_degree() - 2 * nl, hi = c.max_degree();
    if (window) {
        if (window->first > lo || window->second < hi)
            throw std::invalid_argument("window must contain [min_deg - 2 N_L, max_deg]");
        lo = window->first;
        hi = window->second;
    }
    GradedDims out;
    out.lo = lo;
    out.hi = hi;
    out.maslov = nl;
    for (int i = lo; i <= hi; ++i) {
        auto bi = c.plus_basis(i);
        auto blow = c.plus_basis(i - 1);
        auto bup = c.plus_basis(i + 1);
        Mat<Gf2> d_out = c.slice_matrix(bi, blow);
        Mat<Gf2> d_in = c.slice_matrix(bup, bi);
        out.dims[i] = detail::hom_dim(d_in, d_out);
    }
    // Guard: below the generator range multiplication by t is a chain
    // isomorphism, so the dims must already repeat with period N_L.
    out.periodic_tail = true;
    for (int i = lo; i + nl <= c.min_degree() - 1 && i <= c.min_degree() - 2; ++i)
        if (out.dims[i] != out.dims[i + nl])
            throw std::logic_error("tail stabilization failed; implementation bug");
    return out;
}

// Homology over the full Laurent ring, reported on one period of degrees.
inline GradedDims homology_full(const PearlComplex& c) {
    auto rep = validate(c);
    if (!rep.ok())
        throw std::invalid_argument("homology of invalid complex:\n" + rep.str());
    int nl = c.maslov();
    int lo = c.min_degree();
    GradedDims out;
    out.lo = lo;
    out.hi = lo + nl - 1;
    out.maslov = nl;
    out.fully_periodic = true;
    out.periodic_tail = true;
    for (int i = lo; i <= lo + nl - 1; ++i) {
        auto bi = c.full_basis(i);
        auto blow = c.full_basis(i - 1);
        auto bup = c.full_basis(i + 1);
        Mat<Gf2> d_out = c.slice_matrix(bi, blow);
        Mat<Gf2> d_in = c.slice_matrix(bup, bi);
        out.dims[i] = detail::hom_dim(d_in, d_out);
    }
    return out;
}

// The n-fold suspension of the adjoint complex: generator degrees reflect
// through n and each block transposes.  The result is again a valid pearl
// complex over Lambda+.
inline PearlComplex dual_complex(const PearlComplex& c) {
    int n = c.top_degree();
    std::vector<Generator> gens;
    gens.reserve(c.size());
    for (auto& g : c.gens())
        gens.push_back({g.id + "*", n - g.degree});
    PearlComplex d(c.name().empty() ? "" : c.name() + "-dual", c.ctx(), std::move(gens), n);
    for (std::size_t j = 0; j < c.block_count(); ++j)
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = 0; b < c.size(); ++b)
                if (c.del(j, static_cast<int>(a), static_cast<int>(b)).is_one())
                    d.set_del(j, static_cast<int>(b), static_cast<int>(a), Gf2::one());
    return d;
}

// Dimension-level verification of the duality isomorphism
// Q+H_k(L) -> Q+H^{n-k}(L): graded dims of the complex and of its dual
// agree in every window degree.
inline bool check_duality(const PearlComplex& c) {
    PearlComplex d = dual_complex(c);
    int nl = c.maslov();
    int lo = std::min(c.min_degree(), d.min_degree()) - 2 * nl;
    int hi = std::max(c.max_degree(), d.max_degree());
    auto hc = homology_plus(c, std::make_pair(lo, hi));
    auto hd = homology_plus(d, std::make_pair(lo, hi));
    for (int i = lo; i <= hi; ++i)
        if (hc.at(i) != hd.at(i))
            return false;
    return true;
}

// The augmentation sends degree-0 generators to 1.  It is a chain map iff
// eps(dx) = 0 for every generator x, i.e. every del_j hits an even number
// of degree-0 targets.
inline bool augmentation_check(const PearlComplex& c) {
    for (std::size_t x = 0; x < c.size(); ++x)
        for (std::size_t j = 0; j < c.block_count(); ++j) {
            int hits = 0;
            for (std::size_t y = 0; y < c.size(); ++y)
                if (c.gens()[y].degree == 0 && c.del(j, static_cast<int>(y), static_cast<int>(x)).is_one())
                    ++hits;
            if (hits % 2 != 0)
                return false;
        }
    return true;
}

// Degree-0 chain map between pearl complexes, phi = sum_j phi_j t^j with
// phi_j a GF(2) matrix (target gens x source gens).
struct ChainMap {
    PearlComplex source;
    PearlComplex target;
    std::vector<Mat<Gf2>> blocks;

    Gf2 block(std::size_t j, int to, int from) const {
        if (j >= blocks.size())
            return Gf2::zero();
        return blocks[j].at(to, from);
    }
    void set(std::size_t j, int to, int from, Gf2 v) {
        while (blocks.size() <= j)
            blocks.emplace_back(target.size(), source.size());
        blocks[j].at(to, from) = v;
    }

    Chain apply(const Chain& x) const {
        Chain out;
        for (auto& [g, e] : x.terms)
            for (std::size_t j = 0; j < blocks.size(); ++j)
                for (std::size_t y = 0; y < target.size(); ++y)
                    if (blocks[j].at(y, g).is_one())
                        out.toggle(static_cast<int>(y), e + static_cast<int>(j));
        return out;
    }
};

inline ChainMap identity_map(const PearlComplex& c) {
    ChainMap f{c, c, {}};
    f.blocks.push_back(Mat<Gf2>::identity(c.size()));
    return f;
}

// g after f.
inline ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(f.target.gens() == g.source.gens()))
        throw std::invalid_argument("compose: middle complexes differ");
    ChainMap h{f.source, g.target, {}};
    std::size_t jmax = f.blocks.empty() || g.blocks.empty()
                           ? 1
                           : f.blocks.size() + g.blocks.size() - 1;
    h.blocks.assign(jmax, Mat<Gf2>(g.target.size(), f.source.size()));
    for (std::size_t a = 0; a < g.blocks.size(); ++a)
        for (std::size_t b = 0; b < f.blocks.size(); ++b)
            h.blocks[a + b] = h.blocks[a + b] + g.blocks[a] * f.blocks[b];
    while (h.blocks.size() > 1 && h.blocks.back().is_zero())
        h.blocks.pop_back();
    return h;
}

// Homogeneity plus the chain property d phi = phi d, as block identities.
inline bool chain_check(const ChainMap& f) {
    if (!f.blocks.empty() &&
        (f.blocks[0].rows() != f.target.size() || f.blocks[0].cols() != f.source.size()))
        throw std::invalid_argument("chain_check: block shape mismatch");
    int nl = f.source.maslov();
    if (f.target.maslov() != nl)
        throw std::invalid_argument("chain_check: incompatible grading contexts");
    for (std::size_t j = 0; j < f.blocks.size(); ++j)
        for (std::size_t x = 0; x < f.source.size(); ++x)
            for (std::size_t y = 0; y < f.target.size(); ++y)
                if (f.blocks[j].at(y, x).is_one() &&
                    f.target.gens()[y].degree !=
                        f.source.gens()[x].degree + static_cast<int>(j) * nl)
                    return false;
    std::size_t jmax = f.blocks.size() + std::max(f.source.block_count(), f.target.block_count());
    for (std::size_t j = 0; j < jmax; ++j) {
        Mat<Gf2> lhs(f.target.size(), f.source.size());
        Mat<Gf2> rhs(f.target.size(), f.source.size());
        for (std::size_t a = 0; a <= j; ++a) {
            std::size_t b = j - a;
            if (a < f.target.block_count() && b < f.blocks.size())
                lhs = lhs + f.target.blocks()[a] * f.blocks[b];
            if (a < f.blocks.size() && b < f.source.block_count())
                rhs = rhs + f.blocks[a] * f.source.blocks()[b];
        }
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

namespace detail {

// Does the chain map induce an isomorphism between the homologies of two
// finite degreewise slices?  `fs`/`ft` index the slice bases; the map must
// already be known to send cycles to cycles.
inline bool induced_iso(const Mat<Gf2>& d_out_s, const Mat<Gf2>& d_in_s, const Mat<Gf2>& d_out_t,
                        const Mat<Gf2>& d_in_t, const Mat<Gf2>& f) {
    auto zs = kernel_basis(d_out_s);
    auto zt = kernel_basis(d_out_t);
    int hs = static_cast<int>(zs.size()) - static_cast<int>(rank(d_in_s));
    int ht = static_cast<int>(zt.size()) - static_cast<int>(rank(d_in_t));
    if (hs != ht)
        return false;
    // span of boundaries in the target
    std::vector<std::vector<Gf2>> bd;
    for (std::size_t c = 0; c < d_in_t.cols(); ++c) {
        std::vector<Gf2> v(d_in_t.rows(), Gf2::zero());
        bool nz = false;
        for (std::size_t r = 0; r < d_in_t.rows(); ++r) {
            v[r] = d_in_t.at(r, c);
            nz = nz || v[r].is_one();
        }
        if (nz)
            bd.push_back(std::move(v));
    }
    std::size_t rank_b = span_dim(bd);
    auto with_images = bd;
    for (auto& z : zs)
        with_images.push_back(f.apply(z));
    // induced map surjective onto H_t  <=>  rank(B_t + f(Z_s)) = rank B_t + dim H_t
    return span_dim(with_images) == rank_b + static_cast<std::size_t>(ht);
}

}  // namespace detail

// True iff the induced maps on homology over the full ring (checked on one
// period of degrees) and on the t^0 Morse homology are isomorphisms.
inline bool is_quasi_iso(const ChainMap& f) {
    if (!chain_check(f))
        return false;
    const PearlComplex& s = f.source;
    const PearlComplex& t = f.target;
    int nl = s.maslov();

    // Full-coefficients check, degreewise on the folded complex.
    int lo = std::min(s.min_degree(), t.min_degree());
    for (int i = lo; i < lo + nl; ++i) {
        auto bs = s.full_basis(i);
        auto bt = t.full_basis(i);
        auto d_out_s = s.slice_matrix(bs, s.full_basis(i - 1));
        auto d_in_s = s.slice_matrix(s.full_basis(i + 1), bs);
        auto d_out_t = t.slice_matrix(bt, t.full_basis(i - 1));
        auto d_in_t = t.slice_matrix(t.full_basis(i + 1), bt);
        // matrix of f between the slices
        Mat<Gf2> fm(bt.size(), bs.size());
        std::map<std::pair<int, int>, std::size_t> idx;
        for (std::size_t k = 0; k < bt.size(); ++k)
            idx[bt[k]] = k;
        for (std::size_t cidx = 0; cidx < bs.size(); ++cidx) {
            auto [g, e] = bs[cidx];
            for (std::size_t j = 0; j < f.blocks.size(); ++j)
                for (std::size_t y = 0; y < t.size(); ++y)
                    if (f.blocks[j].at(y, g).is_one()) {
                        auto it = idx.find({static_cast<int>(y), e + static_cast<int>(j)});
                        if (it != idx.end())
                            fm.at(it->second, cidx) = fm.at(it->second, cidx) + Gf2::one();
                    }
        }
        if (!detail::induced_iso(d_out_s, d_in_s, d_out_t, d_in_t, fm))
            return false;
    }

    // t^0 block on del_0-homology, degree by degree.
    int dlo = std::min(s.min_degree(), t.min_degree());
    int dhi = std::max(s.max_degree(), t.max_degree());
    for (int i = dlo; i <= dhi; ++i) {
        auto pick = [i](const PearlComplex& c, int d) {
            std::vector<int> v;
            for (std::size_t g = 0; g < c.size(); ++g)
                if (c.gens()[g].degree == d)
                    v.push_back(static_cast<int>(g));
            return v;
        };
        auto morse_mat = [&pick](const PearlComplex& c, int from_deg) {
            auto from = pick(c, from_deg);
            auto to = pick(c, from_deg - 1);
            Mat<Gf2> m(to.size(), from.size());
            for (std::size_t a = 0; a < to.size(); ++a)
                for (std::size_t b = 0; b < from.size(); ++b)
                    m.at(a, b) = c.del(0, to[a], from[b]);
            return m;
        };
        auto ss = pick(s, i);
        auto tt = pick(t, i);
        Mat<Gf2> f0(tt.size(), ss.size());
        for (std::size_t a = 0; a < tt.size(); ++a)
            for (std::size_t b = 0; b < ss.size(); ++b)
                f0.at(a, b) = f.block(0, tt[a], ss[b]);
        if (!detail::induced_iso(morse_mat(s, i), morse_mat(s, i + 1), morse_mat(t, i),
                                 morse_mat(t, i + 1), f0))
            return false;
    }
    return true;
}

}  // namespace pearl
