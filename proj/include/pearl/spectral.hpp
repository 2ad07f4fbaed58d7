#pragma once

// The spectral sequence of the increasing degree filtration
//   F_p C_l = span{ x t^j : j >= -p },
// computed for the complex over the full Laurent ring.  Every degree slice
// is finite because each generator appears in degree l with one forced
// power of t, so pages reduce to GF(2) subspace arithmetic:
//   E^r_{p,q} = Z^r_{p,q} / (Z^{r-1}_{p-1,q+1} + d Z^{r-1}_{p+r-1,q-r+2}).

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pearl/pearl_complex.hpp"

namespace pearl {

struct SSPage {
    int r = 0;
    std::map<std::pair<int, int>, int> dims;     // (p,q) -> dim E^r_{p,q}
    std::map<std::pair<int, int>, int> dr_rank;  // (p,q) -> rank of d_r leaving (p,q)
};

namespace detail {

struct SSWork {
    const PearlComplex* c;
    int nl;

    std::vector<int> slice(int l) const {
        std::vector<int> v;
        for (std::size_t g = 0; g < c->size(); ++g) {
            int diff = c->gens()[g].degree - l;
            if (((diff % nl) + nl) % nl == 0)
                v.push_back(static_cast<int>(g));
        }
        return v;
    }

    // differential between full slices; at most one block contributes per
    // generator pair by homogeneity
    Mat<Gf2> d_matrix(int l) const {
        auto from = slice(l), to = slice(l - 1);
        std::map<int, std::size_t> row;
        for (std::size_t i = 0; i < to.size(); ++i)
            row[to[i]] = i;
        Mat<Gf2> m(to.size(), from.size());
        for (std::size_t cidx = 0; cidx < from.size(); ++cidx)
            for (std::size_t j = 0; j < c->block_count(); ++j)
                for (std::size_t y = 0; y < c->size(); ++y)
                    if (c->del(j, static_cast<int>(y), from[cidx]).is_one())
                        m.at(row.at(static_cast<int>(y)), cidx) =
                            m.at(row.at(static_cast<int>(y)), cidx) + Gf2::one();
        return m;
    }

    bool in_fp(int gen, int l, int p) const { return c->gens()[gen].degree >= l - p * nl; }

    // Z^r_{p, l}: elements of F_p whose boundary lies in F_{p-r}; for r <= 0
    // this is all of F_p.
    std::vector<std::vector<Gf2>> z_space(int p, int l, int r) const {
        auto sl = slice(l);
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < sl.size(); ++i)
            if (in_fp(sl[i], l, p))
                cols.push_back(i);
        std::vector<std::vector<Gf2>> out;
        if (r <= 0) {
            for (auto ci : cols) {
                std::vector<Gf2> v(sl.size(), Gf2::zero());
                v[ci] = Gf2::one();
                out.push_back(std::move(v));
            }
            return out;
        }
        auto tl = slice(l - 1);
        auto dm = d_matrix(l);
        std::vector<std::size_t> bad_rows;
        for (std::size_t i = 0; i < tl.size(); ++i)
            if (!in_fp(tl[i], l - 1, p - r))
                bad_rows.push_back(i);
        Mat<Gf2> sys(bad_rows.size(), cols.size());
        for (std::size_t a = 0; a < bad_rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b)
                sys.at(a, b) = dm.at(bad_rows[a], cols[b]);
        for (auto& k : kernel_basis(sys)) {
            std::vector<Gf2> v(sl.size(), Gf2::zero());
            for (std::size_t b = 0; b < cols.size(); ++b)
                v[cols[b]] = k[b];
            out.push_back(std::move(v));
        }
        return out;
    }

    std::vector<std::vector<Gf2>> d_image(int l, const std::vector<std::vector<Gf2>>& zs) const {
        auto dm = d_matrix(l);
        std::vector<std::vector<Gf2>> out;
        for (auto& z : zs) {
            auto w = dm.apply(z);
            bool nz = false;
            for (auto& x : w)
                nz = nz || x.is_one();
            if (nz)
                out.push_back(std::move(w));
        }
        return out;
    }

    // denominator subspace of E^r at (p, l)
    std::vector<std::vector<Gf2>> boundary_space(int p, int l, int r) const {
        auto b = z_space(p - 1, l, r - 1);
        for (auto& w : d_image(l + 1, z_space(p + r - 1, l + 1, r - 1)))
            b.push_back(w);
        return b;
    }

    int e_dim(int p, int l, int r) const {
        auto z = z_space(p, l, r);
        if (z.empty())
            return 0;
        return static_cast<int>(span_dim(z)) - static_cast<int>(span_dim(boundary_space(p, l, r)));
    }

    int dr_rank(int p, int l, int r) const {
        auto img = d_image(l, z_space(p, l, r));
        auto t = boundary_space(p - r, l - 1, r);
        std::size_t base = span_dim(t);
        for (auto& w : img)
            t.push_back(w);
        return static_cast<int>(span_dim(t) - base);
    }
};

}  // namespace detail

// Pages r = 0 .. max_r of the degree-filtration spectral sequence, on the
// (p,q) window induced by the generator degrees and total degrees
// l in [min_deg - N_L, max_deg].
inline std::vector<SSPage> pages(const PearlComplex& c, int max_r) {
    auto rep = validate(c);
    if (!rep.ok())
        throw std::invalid_argument("spectral sequence of invalid complex:\n" + rep.str());
    if (max_r < 1)
        throw std::invalid_argument("max_r must be >= 1");
    detail::SSWork w{&c, c.maslov()};
    int nl = c.maslov();
    int lmin = c.min_degree() - nl, lmax = c.max_degree();
    std::vector<SSPage> out;
    for (int r = 0; r <= max_r; ++r) {
        SSPage page;
        page.r = r;
        for (int l = lmin; l <= lmax; ++l) {
            if (c.size() == 0)
                continue;
            int pmin = -(lmax - l) / nl - 1;
            // entries vanish unless the slot degree l - p*N_L is a generator
            // degree; walk all p with slot degree within the range
            while (l - pmin * nl > c.max_degree())
                ++pmin;
            int pmax = pmin;
            while (l - (pmax + 1) * nl >= c.min_degree())
                ++pmax;
            for (int p = pmin; p <= pmax; ++p) {
                page.dims[{p, l - p}] = w.e_dim(p, l, r);
                page.dr_rank[{p, l - p}] = w.dr_rank(p, l, r);
            }
        }
        out.push_back(std::move(page));
    }
    return out;
}

// Least page index r >= 1 from which all later differentials vanish.
// Bounded by floor((n+1)/N_L) + 1 for complexes graded within [0, n].
inline int collapse_page(const PearlComplex& c) {
    int nl = c.maslov();
    int width = c.size() ? (c.max_degree() - c.min_degree()) / nl + 2 : 1;
    auto pg = pages(c, width + 1);
    int last_nonzero = 0;
    for (auto& page : pg) {
        if (page.r < 1)
            continue;
        for (auto& [pq, rk] : page.dr_rank)
            if (rk > 0)
                last_nonzero = std::max(last_nonzero, page.r);
    }
    int r = std::max(1, last_nonzero + 1);
    if (c.size() && c.min_degree() >= 0) {
        int bound = (c.top_degree() + 1) / nl + 1;
        if (r > bound)
            throw std::logic_error("collapse bound exceeded; implementation bug");
    }
    return r;
}

// The spectral sequence converges to QH: for each total degree the E^infty
// dims across the diagonal sum to dim QH_l.
inline bool abutment_check(const PearlComplex& c) {
    int nl = c.maslov();
    int width = c.size() ? (c.max_degree() - c.min_degree()) / nl + 2 : 1;
    auto pg = pages(c, width + 1);
    const SSPage& einf = pg.back();
    auto qh = homology_full(c);
    int lmin = c.min_degree() - nl, lmax = c.max_degree();
    for (int l = lmin; l <= lmax; ++l) {
        int total = 0;
        for (auto& [pq, d] : einf.dims)
            if (pq.first + pq.second == l)
                total += d;
        if (total != qh.at(l))
            return false;
    }
    return true;
}

}  // namespace pearl
