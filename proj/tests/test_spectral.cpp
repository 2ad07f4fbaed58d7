#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pearl/spectral.hpp"
#include "random_complex.hpp"

using namespace pearl;

namespace {

PearlComplex circle() {
    PearlComplex c("circle", GradingContext(2), {{"P", 0}, {"Q", 1}}, 1);
    c.set_del(1, c.index_of("Q"), c.index_of("P"), Gf2::one());
    return c;
}

// Morse homology dims of del_0, degree by degree.
std::map<int, int> morse_dims(const PearlComplex& c) {
    std::map<int, int> out;
    auto pick = [&](int d) {
        std::vector<int> v;
        for (std::size_t g = 0; g < c.size(); ++g)
            if (c.gens()[g].degree == d)
                v.push_back(static_cast<int>(g));
        return v;
    };
    for (int d = c.min_degree(); d <= c.max_degree(); ++d) {
        auto here = pick(d), below = pick(d - 1), above = pick(d + 1);
        Mat<Gf2> dout(below.size(), here.size());
        for (std::size_t a = 0; a < below.size(); ++a)
            for (std::size_t b = 0; b < here.size(); ++b)
                dout.at(a, b) = c.del(0, below[a], here[b]);
        Mat<Gf2> din(here.size(), above.size());
        for (std::size_t a = 0; a < here.size(); ++a)
            for (std::size_t b = 0; b < above.size(); ++b)
                din.at(a, b) = c.del(0, here[a], above[b]);
        out[d] = static_cast<int>(here.size() - rank(dout)) - static_cast<int>(rank(din));
    }
    return out;
}

}  // namespace

TEST_CASE("circle spectral sequence") {
    auto pg = pages(circle(), 3);
    const SSPage& e1 = pg[1];
    // E^1 slots carry the Morse homology of S^1: one class in each of
    // degrees 0 and 1, repeated along the t-periodicity
    REQUIRE(e1.dims.at({0, 1}) == 1);    // Q
    REQUIRE(e1.dims.at({0, 0}) == 1);    // P
    REQUIRE(e1.dims.at({-1, 0}) == 1);   // Q t
    REQUIRE(e1.dims.at({-1, -1}) == 1);  // P t
    // d_1 kills everything
    REQUIRE(e1.dr_rank.at({0, 0}) == 1);
    const SSPage& e2 = pg[2];
    for (auto& [pq, d] : e2.dims)
        REQUIRE(d == 0);
    REQUIRE(collapse_page(circle()) == 2);
    REQUIRE(abutment_check(circle()));
}

TEST_CASE("zero differential collapses at E^1") {
    PearlComplex t2("t2", GradingContext(2), {{"w", 2}, {"a", 1}, {"b", 1}, {"m", 0}}, 2);
    auto pg = pages(t2, 2);
    for (auto& page : pg)
        if (page.r >= 1)
            for (auto& [pq, rk] : page.dr_rank)
                REQUIRE(rk == 0);
    // E^1 = E^2 entrywise
    REQUIRE(pg[1].dims == pg[2].dims);
    REQUIRE(collapse_page(t2) == 1);
    REQUIRE(abutment_check(t2));
}

TEST_CASE("RPn-type complex collapses at E^1") {
    PearlComplex rp3("rp3", GradingContext(4), {{"a0", 0}, {"a1", 1}, {"a2", 2}, {"a3", 3}}, 3);
    REQUIRE(collapse_page(rp3) == 1);
    REQUIRE(abutment_check(rp3));
}

TEST_CASE("E^1 equals Morse homology in the slot degrees") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 50; ++i) {
        auto c = testing::random_complex(rng);
        auto pg = pages(c, 1);
        auto md = morse_dims(c);
        for (auto& [pq, d] : pg[1].dims) {
            int slot = pq.first + pq.second - pq.first * c.maslov();
            int want = 0;
            if (auto it = md.find(slot); it != md.end())
                want = it->second;
            REQUIRE(d == want);
        }
    }
}

TEST_CASE("page bookkeeping: dim E^{r+1} = dim E^r - rank out - rank in") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 40; ++i) {
        auto c = testing::random_complex(rng);
        int width = (c.max_degree() - c.min_degree()) / c.maslov() + 2;
        auto pg = pages(c, width);
        for (std::size_t r = 0; r + 1 < pg.size(); ++r) {
            for (auto& [pq, d] : pg[r].dims) {
                auto it_next = pg[r + 1].dims.find(pq);
                if (it_next == pg[r + 1].dims.end())
                    continue;
                int rank_out = pg[r].dr_rank.at(pq);
                // d_r arrives from (p+r, q-r+1)
                auto in_slot = std::make_pair(pq.first + pg[r].r, pq.second - pg[r].r + 1);
                int rank_in = 0;
                if (auto it = pg[r].dr_rank.find(in_slot); it != pg[r].dr_rank.end()) {
                    rank_in = it->second;
                } else {
                    // outside the stored window; only provably-zero slots
                    // (slot degree outside the generator range) are usable
                    int slot = in_slot.first + in_slot.second - in_slot.first * c.maslov();
                    if (slot >= c.min_degree() && slot <= c.max_degree())
                        continue;
                }
                REQUIRE(it_next->second == d - rank_out - rank_in);
            }
        }
    }
}

TEST_CASE("collapse bound and abutment on random complexes") {
    std::mt19937_64 rng(54);
    for (int i = 0; i < 50; ++i) {
        auto c = testing::random_complex(rng);
        int r = collapse_page(c);  // throws on bound violation
        REQUIRE(r >= 1);
        REQUIRE(r <= (c.top_degree() + 1) / c.maslov() + 1);
        REQUIRE(abutment_check(c));
    }
}
