#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "pearl/minimal_model.hpp"
#include "random_complex.hpp"

using namespace pearl;

namespace {

PearlComplex circle() {
    PearlComplex c("circle", GradingContext(2), {{"P", 0}, {"Q", 1}}, 1);
    c.set_del(1, c.index_of("Q"), c.index_of("P"), Gf2::one());
    return c;
}

bool phi_psi_is_identity(const MinimalModel& mm) {
    auto comp = compose(mm.phi, mm.psi);
    if (comp.blocks.empty())
        return mm.model.size() == 0;
    if (!(comp.blocks[0] == Mat<Gf2>::identity(mm.model.size())))
        return false;
    for (std::size_t j = 1; j < comp.blocks.size(); ++j)
        if (!comp.blocks[j].is_zero())
            return false;
    return true;
}

PearlComplex permuted(const PearlComplex& c, std::mt19937_64& rng) {
    std::vector<int> perm(c.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < perm.size(); ++i)
        gens.push_back(c.gens()[perm[i]]);
    PearlComplex out(c.name(), c.ctx(), gens, c.declared_top());
    for (std::size_t j = 0; j < c.block_count(); ++j)
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = 0; b < c.size(); ++b)
                if (c.del(j, perm[a], perm[b]).is_one())
                    out.set_del(j, static_cast<int>(a), static_cast<int>(b), Gf2::one());
    return out;
}

}  // namespace

TEST_CASE("circle is already minimal") {
    auto mm = reduce(circle());
    REQUIRE(mm.model.size() == 2);
    // delta P = Q t survives unchanged
    Chain want;
    want.toggle(mm.model.index_of("Q"), 1);
    REQUIRE(mm.model.boundary(mm.model.index_of("P")) == want);
    REQUIRE(phi_psi_is_identity(mm));
    REQUIRE(chain_check(mm.phi));
    REQUIRE(chain_check(mm.psi));
    REQUIRE(is_quasi_iso(mm.psi));
}

TEST_CASE("acyclic pair reduces to nothing") {
    PearlComplex c("pair", GradingContext(2), {{"yp", 1}, {"y", 0}});
    c.set_del(0, c.index_of("y"), c.index_of("yp"), Gf2::one());
    auto mm = reduce(c);
    REQUIRE(mm.model.size() == 0);
    REQUIRE(qh_is_full(mm));  // vacuously: delta = 0 on an empty model
}

TEST_CASE("three-generator reduction solves the correction term") {
    // z(0), y(1), y'(2) with del_0 y' = y and d z = y t: the model is the
    // single class of z; psi(z~) must pick up the correction z + y' t.
    PearlComplex c("three", GradingContext(2), {{"z", 0}, {"y", 1}, {"yp", 2}});
    c.set_del(0, c.index_of("y"), c.index_of("yp"), Gf2::one());
    c.set_del(1, c.index_of("y"), c.index_of("z"), Gf2::one());
    REQUIRE(validate(c).ok());
    auto mm = reduce(c);
    REQUIRE(mm.model.size() == 1);
    REQUIRE(mm.model.gens()[0].degree == 0);
    REQUIRE(phi_psi_is_identity(mm));
    REQUIRE(chain_check(mm.psi));
    // psi(z~) = z + y' t
    REQUIRE(mm.psi.block(0, c.index_of("z"), 0).is_one());
    REQUIRE(mm.psi.block(1, c.index_of("yp"), 0).is_one());
    // H(delta) must equal the homology of the input
    auto hpm = homology_plus(mm.model, std::make_pair(-6, 4));
    auto hpc = homology_plus(c, std::make_pair(-6, 4));
    for (int i = -4; i <= 4; ++i)
        REQUIRE(hpm.at(i) == hpc.at(i));
}

TEST_CASE("four-generator reduction pushes delta through the y image") {
    // z(0), y(1), y'(2), w(3) with del_0 y' = y, d y' = y + w t, d z = y t.
    // Here phi(y) = phi(d y' - y) = w~ t, so delta(z~) = w~ t^2.
    PearlComplex c("four", GradingContext(2), {{"z", 0}, {"y", 1}, {"yp", 2}, {"w", 3}});
    c.set_del(0, c.index_of("y"), c.index_of("yp"), Gf2::one());
    c.set_del(1, c.index_of("w"), c.index_of("yp"), Gf2::one());
    c.set_del(1, c.index_of("y"), c.index_of("z"), Gf2::one());
    REQUIRE(validate(c).ok());
    auto mm = reduce(c);
    REQUIRE(mm.model.size() == 2);
    Chain want;
    want.toggle(mm.model.index_of("w"), 2);
    REQUIRE(mm.model.boundary(mm.model.index_of("z")) == want);
    // cross-check against direct homology of the input
    auto hpm = homology_plus(mm.model, std::make_pair(-6, 4));
    auto hpc = homology_plus(c, std::make_pair(-6, 4));
    for (int i = -4; i <= 3; ++i)
        REQUIRE(hpm.at(i) == hpc.at(i));
    REQUIRE(phi_psi_is_identity(mm));
    REQUIRE(is_quasi_iso(mm.phi));
}

TEST_CASE("iso_test decides invertibility by the t^0 block") {
    SECTION("identity map") {
        auto mm = reduce(circle());
        REQUIRE(iso_test(identity_map(mm.model)));
    }
    SECTION("permutation with arbitrary higher block") {
        PearlComplex two("two", GradingContext(2), {{"u", 0}, {"v", 2}});
        ChainMap f{two, two, {}};
        f.set(0, 0, 0, Gf2::one());
        f.set(0, 1, 1, Gf2::one());
        f.set(1, 1, 0, Gf2::one());  // u -> u + v t
        REQUIRE(iso_test(f));
    }
    SECTION("singular t^0 block") {
        PearlComplex two("two", GradingContext(2), {{"u", 0}, {"v", 0}});
        ChainMap f{two, two, {}};
        f.set(0, 0, 0, Gf2::one());
        f.set(0, 0, 1, Gf2::one());
        REQUIRE(!iso_test(f));
    }
    SECTION("non-minimal input rejected") {
        PearlComplex bad("bad", GradingContext(2), {{"a", 1}, {"b", 0}});
        bad.set_del(0, bad.index_of("b"), bad.index_of("a"), Gf2::one());
        REQUIRE_THROWS_AS(iso_test(identity_map(bad)), std::invalid_argument);
    }
}

TEST_CASE("qh_vanishes and qh_is_full") {
    SECTION("circle vanishes") {
        auto mm = reduce(circle());
        REQUIRE(qh_vanishes(mm, "Q"));
        REQUIRE(!qh_is_full(mm));
    }
    SECTION("zero differential is full") {
        PearlComplex t2("t2", GradingContext(2), {{"w", 2}, {"a", 1}, {"b", 1}, {"m", 0}}, 2);
        auto mm = reduce(t2);
        REQUIRE(qh_is_full(mm));
        REQUIRE(!qh_vanishes(mm, "w"));
    }
    SECTION("direct witness delta x = [L] t^2") {
        PearlComplex c("w2", GradingContext(2), {{"top", 4}, {"x", 1}}, 4);
        c.set_del(2, c.index_of("top"), c.index_of("x"), Gf2::one());
        auto mm = reduce(c);
        REQUIRE(qh_vanishes(mm, "top"));
    }
    SECTION("mutual exclusion on nonempty models") {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 60; ++i) {
            auto c = testing::random_complex(rng);
            auto mm = reduce(c);
            if (mm.model.size() == 0)
                continue;
            int tops = 0;
            int top = -1;
            for (std::size_t g = 0; g < mm.model.size(); ++g)
                if (mm.model.gens()[g].degree == mm.model.max_degree()) {
                    ++tops;
                    top = static_cast<int>(g);
                }
            if (tops != 1)
                continue;
            bool v = qh_vanishes(mm, mm.model.gens()[top].id);
            bool f = qh_is_full(mm);
            REQUIRE(!(v && f));
        }
    }
}

TEST_CASE("dichotomy") {
    SECTION("torus-type model with delta = 0 is Full") {
        PearlComplex t2("t2", GradingContext(2), {{"w", 2}, {"a", 1}, {"b", 1}, {"m", 0}}, 2);
        auto mm = reduce(t2);
        REQUIRE(dichotomy(mm, 2, 1) == Dichotomy::Full);
    }
    SECTION("degree-1 generator hitting [L] t forces Vanishes") {
        PearlComplex c("van", GradingContext(2), {{"w", 2}, {"a", 1}, {"b", 1}, {"m", 0}}, 2);
        c.set_del(1, c.index_of("w"), c.index_of("a"), Gf2::one());
        c.set_del(1, c.index_of("b"), c.index_of("m"), Gf2::one());
        REQUIRE(validate(c).ok());
        auto mm = reduce(c);
        REQUIRE(dichotomy(mm, 2, 1) == Dichotomy::Vanishes);
    }
    SECTION("RPn-type: N_L > k+1 demands Full") {
        PearlComplex rp3("rp3", GradingContext(4),
                         {{"a0", 0}, {"a1", 1}, {"a2", 2}, {"a3", 3}}, 3);
        auto mm = reduce(rp3);
        REQUIRE(dichotomy(mm, 3, 1) == Dichotomy::Full);
    }
    SECTION("N_L <= k is an error") {
        PearlComplex t2("t2", GradingContext(2), {{"w", 2}, {"m", 0}}, 2);
        auto mm = reduce(t2);
        REQUIRE_THROWS_AS(dichotomy(mm, 2, 2), std::invalid_argument);
    }
}

TEST_CASE("reduce properties on random complexes") {
    std::mt19937_64 rng(999);
    for (int i = 0; i < 120; ++i) {
        auto c = testing::random_complex(rng);
        auto mm = reduce(c);

        // phi psi = id exactly, both are chain maps, delta_0 = 0
        REQUIRE(phi_psi_is_identity(mm));
        REQUIRE(chain_check(mm.phi));
        REQUIRE(chain_check(mm.psi));
        if (mm.model.block_count() > 0)
            REQUIRE(mm.model.blocks()[0].is_zero());

        // H(delta) equals H(d) gradedwise, over both rings
        auto hc = homology_full(c);
        auto hm = homology_full(mm.model);
        for (int d = c.min_degree(); d < c.min_degree() + c.maslov(); ++d)
            REQUIRE(hc.at(d) == hm.at(d));
        int lo = std::min(c.min_degree(), mm.model.size() ? mm.model.min_degree() : 0) -
                 2 * c.maslov();
        int hi = std::max(c.max_degree(), mm.model.size() ? mm.model.max_degree() : 0);
        auto hpc = homology_plus(c, std::make_pair(lo, hi));
        for (int d = lo; d <= hi; ++d) {
            int model_dim = 0;
            if (mm.model.size()) {
                auto hpm = homology_plus(mm.model, std::make_pair(lo, hi));
                model_dim = hpm.at(d);
            }
            REQUIRE(hpc.at(d) == model_dim);
        }

        // both maps are quasi-isomorphisms (full ring and Morse homology)
        REQUIRE(is_quasi_iso(mm.psi));
        REQUIRE(is_quasi_iso(mm.phi));
    }
}

TEST_CASE("reduce is stable under generator reordering, up to isomorphism") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 40; ++i) {
        auto c = testing::random_complex(rng);
        auto mm1 = reduce(c);
        auto cp = permuted(c, rng);
        auto mm2 = reduce(cp);
        REQUIRE(mm1.model.size() == mm2.model.size());
        if (mm1.model.size() == 0)
            continue;
        // comparison map phi2 after psi1, with the generators of the
        // permuted complex re-identified by name
        ChainMap psi1_in_cp{mm1.model, cp, {}};
        for (std::size_t j = 0; j < mm1.psi.blocks.size(); ++j)
            for (std::size_t g = 0; g < c.size(); ++g)
                for (std::size_t mg = 0; mg < mm1.model.size(); ++mg)
                    if (mm1.psi.block(j, static_cast<int>(g), static_cast<int>(mg)).is_one())
                        psi1_in_cp.set(j, cp.index_of(c.gens()[g].id), static_cast<int>(mg),
                                       Gf2::one());
        auto comp = compose(mm2.phi, psi1_in_cp);
        REQUIRE(chain_check(comp));
        REQUIRE(iso_test(comp));
    }
}

TEST_CASE("reduce is idempotent up to isomorphism") {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 40; ++i) {
        auto c = testing::random_complex(rng);
        auto mm = reduce(c);
        auto mm2 = reduce(mm.model);
        REQUIRE(mm2.model.size() == mm.model.size());
        if (mm.model.size() == 0)
            continue;
        REQUIRE(iso_test(mm2.phi));
    }
}
