#pragma once

// Minimal models: reduce a valid pearl complex to a complex on its
// Morse-homology basis with delta_0 = 0, together with chain maps
// phi: C -> C_min and psi: C_min -> C satisfying phi psi = id exactly.
//
// The construction follows the inductive scheme: split a basis into x
// (homology), y, y' with del_0 y' = y, start at the top degree with
// phi = phi_0, psi = psi_0, delta = 0, and extend degree by degree
// downwards.  The correction term tau with d tau = dx - psi(delta x)
// is found inside the acyclic subcomplex spanned by the pairs (y', dy').

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pearl/pearl_complex.hpp"

namespace pearl {

struct MinimalModel {
    PearlComplex model;  // generators = chosen del_0-homology basis, delta_0 = 0
    ChainMap phi;        // original -> model
    ChainMap psi;        // model -> original
};

namespace detail {

enum class GenType { X, Y, Yp };

struct BasisSplit {
    Mat<Gf2> p;                 // columns: new basis vectors in original coordinates
    Mat<Gf2> p_inv;
    std::vector<int> degree;    // per new index
    std::vector<GenType> type;  // per new index
    std::vector<int> partner;   // Yp -> its Y (new index), Y -> its Yp
};

// Deterministic del_0 normal form: Gaussian elimination in generator order,
// pivots of del_0 give the (y', y) pairs, the kernel completes with x's.
inline BasisSplit split_basis(const PearlComplex& c) {
    int n = static_cast<int>(c.size());
    std::map<int, std::vector<int>> by_deg;
    for (int g = 0; g < n; ++g)
        by_deg[c.gens()[g].degree].push_back(g);

    struct NewVec {
        std::vector<Gf2> coords;  // over original generators
        int degree;
        GenType type;
        int pair_tag;  // shared tag linking y' and y
    };
    std::vector<NewVec> vecs;
    int next_tag = 0;

    // images of del_0 per target degree, with the tag of the producing y'
    std::map<int, std::vector<std::pair<std::vector<Gf2>, int>>> images;
    std::map<int, std::vector<std::vector<Gf2>>> kernels;

    for (auto it = by_deg.rbegin(); it != by_deg.rend(); ++it) {
        int d = it->first;
        auto& cols = it->second;
        // pivot bookkeeping for column elimination of del_0 on degree d
        std::vector<int> pivot_row;
        std::vector<std::vector<Gf2>> pivot_img, pivot_comb;
        for (int col : cols) {
            std::vector<Gf2> comb(n, Gf2::zero());
            comb[col] = Gf2::one();
            std::vector<Gf2> img(n, Gf2::zero());
            for (int y = 0; y < n; ++y)
                img[y] = c.del(0, y, col);
            for (std::size_t p = 0; p < pivot_row.size(); ++p)
                if (img[pivot_row[p]].is_one()) {
                    for (int y = 0; y < n; ++y)
                        img[y] = img[y] + pivot_img[p][y];
                    for (int y = 0; y < n; ++y)
                        comb[y] = comb[y] + pivot_comb[p][y];
                }
            int lead = -1;
            for (int y = 0; y < n && lead < 0; ++y)
                if (img[y].is_one())
                    lead = y;
            if (lead < 0) {
                kernels[d].push_back(comb);
            } else {
                pivot_row.push_back(lead);
                pivot_img.push_back(img);
                pivot_comb.push_back(comb);
                int tag = next_tag++;
                vecs.push_back({comb, d, GenType::Yp, tag});
                images[d - 1].push_back({img, tag});
            }
        }
    }

    // x vectors: complete each kernel against the incoming image span.
    for (auto it = by_deg.rbegin(); it != by_deg.rend(); ++it) {
        int d = it->first;
        // echelon over the images first
        std::vector<std::pair<int, std::vector<Gf2>>> ech;  // (lead, vector)
        auto reduce = [&](std::vector<Gf2> v) {
            for (auto& [lead, w] : ech)
                if (v[lead].is_one())
                    for (int i = 0; i < n; ++i)
                        v[i] = v[i] + w[i];
            return v;
        };
        auto lead_of = [&](const std::vector<Gf2>& v) {
            for (int i = 0; i < n; ++i)
                if (v[i].is_one())
                    return i;
            return -1;
        };
        for (auto& [img, tag] : images[d]) {
            auto v = reduce(img);
            int l = lead_of(v);
            if (l >= 0)
                ech.emplace_back(l, v);
            vecs.push_back({img, d, GenType::Y, tag});
        }
        for (auto& k : kernels[d]) {
            auto v = reduce(k);
            int l = lead_of(v);
            if (l < 0)
                continue;
            ech.emplace_back(l, v);
            vecs.push_back({v, d, GenType::X, -1});
        }
    }

    if (static_cast<int>(vecs.size()) != n)
        throw std::logic_error("basis split lost dimensions");

    // global order: degree descending, X before Y before Yp, stable otherwise
    std::vector<int> order(vecs.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (vecs[a].degree != vecs[b].degree)
            return vecs[a].degree > vecs[b].degree;
        return static_cast<int>(vecs[a].type) < static_cast<int>(vecs[b].type);
    });

    BasisSplit out;
    out.p = Mat<Gf2>(n, n);
    out.degree.resize(n);
    out.type.resize(n);
    out.partner.assign(n, -1);
    std::map<int, int> y_by_tag, yp_by_tag;
    for (int newIdx = 0; newIdx < n; ++newIdx) {
        auto& v = vecs[order[newIdx]];
        for (int i = 0; i < n; ++i)
            out.p.at(i, newIdx) = v.coords[i];
        out.degree[newIdx] = v.degree;
        out.type[newIdx] = v.type;
        if (v.type == GenType::Y)
            y_by_tag[v.pair_tag] = newIdx;
        if (v.type == GenType::Yp)
            yp_by_tag[v.pair_tag] = newIdx;
    }
    for (auto& [tag, yi] : y_by_tag) {
        int ypi = yp_by_tag.at(tag);
        out.partner[yi] = ypi;
        out.partner[ypi] = yi;
    }
    auto inv = inverse(out.p);
    if (!inv)
        throw std::logic_error("basis change is singular");
    out.p_inv = *inv;
    return out;
}

}  // namespace detail

inline MinimalModel reduce(const PearlComplex& c) {
    {
        auto rep = validate(c);
        if (!rep.ok())
            throw std::invalid_argument("reduce on invalid complex:\n" + rep.str());
    }
    int n = static_cast<int>(c.size());
    int nl = c.maslov();
    auto split = detail::split_basis(c);

    // transformed differential blocks: dtil_j = P^{-1} del_j P
    std::vector<Mat<Gf2>> dtil;
    for (std::size_t j = 0; j < c.block_count(); ++j)
        dtil.push_back(split.p_inv * c.blocks()[j] * split.p);
    auto dtil_chain = [&](int g) {
        Chain ch;
        for (std::size_t j = 0; j < dtil.size(); ++j)
            for (int y = 0; y < n; ++y)
                if (dtil[j].at(y, g).is_one())
                    ch.toggle(y, static_cast<int>(j));
        return ch;
    };

    // model generators = X-type vectors, in global order
    std::vector<int> model_of(n, -1);
    std::vector<Generator> model_gens;
    for (int g = 0; g < n; ++g)
        if (split.type[g] == detail::GenType::X) {
            int lead = -1;
            for (int i = 0; i < n && lead < 0; ++i)
                if (split.p.at(i, g).is_one())
                    lead = i;
            model_of[g] = static_cast<int>(model_gens.size());
            model_gens.push_back({c.gens()[lead].id, split.degree[g]});
        }
    int m = static_cast<int>(model_gens.size());

    std::vector<Chain> phi(n);
    std::vector<bool> phi_set(n, false);
    std::vector<Chain> psi(m), delta(m);

    auto phi_apply = [&](const Chain& ch) {
        Chain out;
        for (auto& [g, e] : ch.terms) {
            if (!phi_set[g])
                throw std::logic_error("phi applied before definition");
            out += phi[g].shifted(e);
        }
        return out;
    };
    auto psi_apply = [&](const Chain& ch) {
        Chain out;
        for (auto& [mm, e] : ch.terms)
            out += psi[mm].shifted(e);
        return out;
    };

    // degrees present, descending
    std::vector<int> degrees;
    for (int g = 0; g < n; ++g)
        degrees.push_back(split.degree[g]);
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    std::vector<int> processed_yp;  // y' indices processed so far
    for (int deg : degrees) {
        for (int g = 0; g < n; ++g) {
            if (split.degree[g] != deg)
                continue;
            if (split.type[g] == detail::GenType::X) {
                phi[g] = Chain{};
                phi[g].toggle(model_of[g], 0);
                phi_set[g] = true;
            } else if (split.type[g] == detail::GenType::Yp) {
                phi[g] = Chain{};
                phi_set[g] = true;
                int y = split.partner[g];
                Chain rest = dtil_chain(g);
                rest.toggle(y, 0);  // dtil y' = y + higher order
                phi[y] = phi_apply(rest);
                phi_set[y] = true;
            }
        }
        for (int g = 0; g < n; ++g) {
            if (split.degree[g] != deg || split.type[g] != detail::GenType::X)
                continue;
            int mg = model_of[g];
            delta[mg] = phi_apply(dtil_chain(g));
            Chain w = dtil_chain(g) + psi_apply(delta[mg]);
            Chain tau;
            if (!w.empty()) {
                // solve w = sum c_{y'} d(y') t^e inside ker(phi)
                std::vector<std::pair<int, int>> cand;  // (y' index, e)
                std::vector<Chain> cand_img;
                for (int yp : processed_yp) {
                    int diff = split.degree[yp] - deg;
                    if (diff > 0 && diff % nl == 0) {
                        int e = diff / nl;
                        cand.emplace_back(yp, e);
                        cand_img.push_back(dtil_chain(yp).shifted(e));
                    }
                }
                std::map<std::pair<int, int>, std::size_t> rows;
                auto row_of = [&](const std::pair<int, int>& t) {
                    auto [it, fresh] = rows.emplace(t, rows.size());
                    return it->second;
                };
                for (auto& ch : cand_img)
                    for (auto& t : ch.terms)
                        row_of(t);
                for (auto& t : w.terms)
                    row_of(t);
                Mat<Gf2> sys(rows.size(), cand.size());
                for (std::size_t col = 0; col < cand_img.size(); ++col)
                    for (auto& t : cand_img[col].terms)
                        sys.at(rows.at(t), col) = Gf2::one();
                std::vector<Gf2> rhs(rows.size(), Gf2::zero());
                for (auto& t : w.terms)
                    rhs[rows.at(t)] = Gf2::one();
                auto sol = solve(sys, rhs);
                if (!sol)
                    throw std::logic_error("correction term not found; implementation bug");
                for (std::size_t i = 0; i < cand.size(); ++i)
                    if ((*sol)[i].is_one())
                        tau.toggle(cand[i].first, cand[i].second);
            }
            psi[mg] = Chain{};
            psi[mg].toggle(g, 0);
            psi[mg] += tau;
        }
        for (int g = 0; g < n; ++g)
            if (split.degree[g] == deg && split.type[g] == detail::GenType::Yp)
                processed_yp.push_back(g);
    }

    // assemble the model complex and the two chain maps in original coordinates
    PearlComplex model(c.name(), c.ctx(), model_gens, c.top_degree());
    for (int mg = 0; mg < m; ++mg)
        for (auto& [tgt, e] : delta[mg].terms)
            model.set_del(e, tgt, mg, Gf2::one());
    {
        auto rep = validate(model);
        if (!rep.ok())
            throw std::logic_error("reduced model fails validation:\n" + rep.str());
        for (std::size_t a = 0; a < model.size(); ++a)
            for (std::size_t b = 0; b < model.size(); ++b)
                if (model.del(0, static_cast<int>(a), static_cast<int>(b)).is_one())
                    throw std::logic_error("delta_0 != 0 in reduced model");
    }

    // phi, psi are built in the split coordinates; conjugate back with P.
    ChainMap phi_map{c, model, {}};
    for (int g = 0; g < n; ++g)
        for (auto& [mg, e] : phi[g].terms)
            phi_map.set(e, mg, g, Gf2::one());
    for (auto& blockmat : phi_map.blocks)
        blockmat = blockmat * split.p_inv;

    ChainMap psi_map{model, c, {}};
    for (int mg = 0; mg < m; ++mg)
        for (auto& [g, e] : psi[mg].terms)
            psi_map.set(e, g, mg, Gf2::one());
    for (auto& blockmat : psi_map.blocks)
        blockmat = split.p * blockmat;

    return {std::move(model), std::move(phi_map), std::move(psi_map)};
}

// A chain map between minimal complexes is an isomorphism iff its t^0
// block is one.
inline bool iso_test(const ChainMap& f) {
    auto minimal = [](const PearlComplex& c) {
        return c.block_count() == 0 || c.blocks()[0].is_zero();
    };
    if (!minimal(f.source) || !minimal(f.target))
        throw std::invalid_argument("iso_test requires minimal complexes");
    if (f.source.size() != f.target.size())
        return false;
    if (f.blocks.empty())
        return f.source.size() == 0;
    return inverse(f.blocks[0]).has_value();
}

// QH(L) = 0 iff the fundamental class becomes a boundary: delta v = [L] t^k
// for some k >= 1.  Homogeneity bounds k by ceil((degree span + 1) / N_L).
// An empty model (acyclic input) vanishes trivially.
inline bool qh_vanishes(const MinimalModel& mm, const std::string& top_id) {
    const PearlComplex& model = mm.model;
    if (model.size() == 0)
        return true;
    int top = model.index_of(top_id);
    int ndeg = model.gens()[top].degree;
    int nl = model.maslov();
    int span = model.max_degree() - model.min_degree();
    int kmax = (span + 1 + nl - 1) / nl;
    for (int k = 1; k <= kmax; ++k) {
        int target_deg = ndeg - k * nl;
        auto basis_src = model.plus_basis(target_deg + 1);
        auto basis_tgt = model.plus_basis(target_deg);
        if (basis_src.empty())
            continue;
        Mat<Gf2> d = model.slice_matrix(basis_src, basis_tgt);
        std::vector<Gf2> rhs(basis_tgt.size(), Gf2::zero());
        bool found = false;
        for (std::size_t i = 0; i < basis_tgt.size(); ++i)
            if (basis_tgt[i] == std::make_pair(top, k)) {
                rhs[i] = Gf2::one();
                found = true;
            }
        if (!found)
            continue;
        if (solve(d, rhs))
            return true;
    }
    return false;
}

// Q+H(L) is isomorphic to H(L) tensor Lambda+ iff delta vanishes identically.
inline bool qh_is_full(const MinimalModel& mm) {
    for (auto& b : mm.model.blocks())
        if (!b.is_zero())
            return false;
    return true;
}

enum class Dichotomy { Vanishes, Full, Inapplicable };

// The 0-or-all dichotomy for minimal models whose homology is generated in
// degrees >= n-k.  For N_L > k+1 only fullness can occur; for N_L = k+1 a
// degree-(n-k) generator with delta x = [L] t forces vanishing.
inline Dichotomy dichotomy(const MinimalModel& mm, int n, int k) {
    const PearlComplex& model = mm.model;
    int nl = model.maslov();
    if (nl <= k)
        throw std::invalid_argument("dichotomy requires N_L > k");
    for (auto& g : model.gens())
        if (g.degree < 0 || g.degree > n)
            throw std::invalid_argument("dichotomy: generator degrees outside [0, n]");
    if (nl > k + 1)
        return qh_is_full(mm) ? Dichotomy::Full : Dichotomy::Inapplicable;
    // N_L = k+1
    int top = -1, tops = 0;
    for (std::size_t g = 0; g < model.size(); ++g)
        if (model.gens()[g].degree == n) {
            ++tops;
            top = static_cast<int>(g);
        }
    if (tops == 1) {
        for (std::size_t g = 0; g < model.size(); ++g) {
            if (model.gens()[g].degree != n - k)
                continue;
            Chain d = model.boundary(static_cast<int>(g));
            Chain want;
            want.toggle(top, 1);
            if (d == want)
                return Dichotomy::Vanishes;
        }
    }
    return qh_is_full(mm) ? Dichotomy::Full : Dichotomy::Inapplicable;
}

}  // namespace pearl
