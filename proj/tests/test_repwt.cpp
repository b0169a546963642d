#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "k3rm/characters.hpp"
#include "test_util.hpp"

using namespace k3rm;
using k3rm_test::throws_kind;

TEST_CASE("irreducible character shapes") {
    auto w00 = irr_char({0, 0});
    REQUIRE(char_dim(w00) == 1);
    REQUIRE(w00.weights.count({0, 0}) == 1);
    auto w11 = irr_char({1, 1});
    REQUIRE(char_dim(w11) == 4);
    for (int a : {-1, 1})
        for (int b : {-1, 1}) REQUIRE(w11.weights.at({a, b}) == 1);
    REQUIRE(char_dim(irr_char({2, 2})) == 9);
    REQUIRE(char_dim(irr_char({3, 1})) == 8);

    auto v = irr_char({1});
    auto s = sym2(v);
    REQUIRE(char_dim(s) == 3);
    REQUIRE(s.weights.at({2}) == 1);
    REQUIRE(s.weights.at({0}) == 1);
    auto wdg = wedge2(v);
    REQUIRE(char_dim(wdg) == 1);
    REQUIRE(wdg.weights.at({0}) == 1);
}

TEST_CASE("dimension identities and decomposition round trip") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 40; ++t) {
        int d = 1 + static_cast<int>(rng() % 4);
        Character c{d, {}};
        for (int j = 0; j < 3; ++j) {
            Weight k(static_cast<size_t>(d));
            for (auto& x : k) x = static_cast<int>(rng() % 5);
            c = char_add(c, char_scale(irr_char(k), Int(1 + rng() % 3)));
        }
        Int n = char_dim(c);
        REQUIRE(char_dim(sym2(c)) == n * (n + 1) / 2);
        REQUIRE(char_dim(wedge2(c)) == n * (n - 1) / 2);
        auto dec = decompose(c);
        REQUIRE(reconstruct(d, dec).weights == c.weights);
    }
}

TEST_CASE("square decompositions at d = 2") {
    auto w11 = irr_char({1, 1});
    auto sd = decompose(sym2(w11));
    REQUIRE(sd.mults.size() == 2);
    REQUIRE(sd.mults.at({2, 2}) == 1);
    REQUIRE(sd.mults.at({0, 0}) == 1);
    auto wd = decompose(wedge2(w11));
    REQUIRE(wd.mults.size() == 2);
    REQUIRE(wd.mults.at({2, 0}) == 1);
    REQUIRE(wd.mults.at({0, 2}) == 1);
    auto self = decompose(irr_char({3, 1}));
    REQUIRE(self.mults.size() == 1);
    REQUIRE(self.mults.at({3, 1}) == 1);
}

TEST_CASE("squares of the spin representation, all degrees") {
    // Sym^2 W = weights in {0,2}^d with evenly many zeros, wedge^2 W oddly many,
    // every multiplicity 1
    for (int d = 2; d <= 6; ++d) {
        Character W = irr_char(Weight(static_cast<size_t>(d), 1));
        auto sd = decompose(sym2(W));
        auto wd = decompose(wedge2(W));
        std::map<Weight, Int> se, we;
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            Weight k(static_cast<size_t>(d), 0);
            int zeros = 0;
            for (int i = 0; i < d; ++i) {
                if (mask & (1u << i)) k[static_cast<size_t>(i)] = 2;
                else ++zeros;
            }
            (zeros % 2 == 0 ? se : we)[k] = 1;
        }
        REQUIRE(sd.mults == se);
        REQUIRE(wd.mults == we);
        REQUIRE(trivial_multiplicity(sym2(W)) == (d % 2 == 0 ? 1 : 0));
        REQUIRE(trivial_multiplicity(wedge2(W)) == (d % 2 == 1 ? 1 : 0));
    }
}

TEST_CASE("two-copy identity") {
    for (int d = 2; d <= 4; ++d) {
        Character W = irr_char(Weight(static_cast<size_t>(d), 1));
        Character two = char_add(W, W);
        REQUIRE(wedge2(two).weights == char_add(char_scale(wedge2(W), 3), sym2(W)).weights);
        REQUIRE(sym2(two).weights == char_add(char_scale(sym2(W), 3), wedge2(W)).weights);
    }
}

TEST_CASE("Hodge gradings") {
    auto w11 = irr_char({1, 1});
    auto h = hodge_numbers(wedge2(w11), 2);
    REQUIRE(h.values == std::vector<Int>({1, 4, 1}));
    REQUIRE(h.h(2) == 1);
    REQUIRE(h.h(1) == 4);
    REQUIRE(h.h(0) == 1);
    auto h22 = hodge_numbers(irr_char({2, 2}), 2);
    REQUIRE(h22.values == std::vector<Int>({3, 3, 3}));
    auto hs = hodge_numbers(sym2(w11), 2);
    REQUIRE(hs.values == std::vector<Int>({3, 4, 3}));
    auto h1 = hodge_numbers(w11, 1);
    REQUIRE(h1.values == std::vector<Int>({2, 2}));

    // transcendental piece at d = 2
    auto ts = char_add(irr_char({2, 0}), irr_char({0, 2}));
    auto hts = hodge_numbers(ts, 2);
    REQUIRE(char_dim(ts) == 6);
    REQUIRE(hts.h(2) == 1);
    REQUIRE(hts.h(1) == 4);
    REQUIRE(hts.h(0) == 1);

    REQUIRE(throws_kind([] { hodge_numbers(irr_char({1, 1}), 2); }, errc::weight_out_of_range));
    REQUIRE(throws_kind([] { hodge_numbers(irr_char({0, 3}), 2); }, errc::weight_out_of_range));
}

TEST_CASE("conjugation symmetry of the outer Hodge numbers") {
    std::mt19937_64 r2(5);
    for (int t = 0; t < 30; ++t) {
        int d = 1 + static_cast<int>(r2() % 3);
        Character c{d, {}};
        for (int j = 0; j < 2; ++j) {
            Weight k(static_cast<size_t>(d));
            for (size_t i = 0; i + 1 < k.size(); ++i) k[i] = static_cast<int>(r2() % 4);
            k.back() = 2 * static_cast<int>(r2() % 2);
            c = char_add(c, irr_char(k));
        }
        auto h = hodge_numbers(c, 2);
        REQUIRE(h.h(2) == h.h(0));
    }
}

TEST_CASE("non-characters are rejected") {
    Character bad{1, {{{1}, Int(1)}}};
    REQUIRE(throws_kind([&] { sym2(bad); }, errc::not_symmetric));
    REQUIRE(throws_kind([&] { decompose(bad); }, errc::not_decomposable));
}

TEST_CASE("representation reports for all degrees") {
    for (int d = 2; d <= 6; ++d) {
        auto r = ks_representation_report(d);
        REQUIRE(r.dim_h1 == pow_int(2, static_cast<unsigned>(d) + 1));
        REQUIRE(r.parity_ok);
        REQUIRE(r.lemma_identity);
        REQUIRE(r.ts_dim == 3 * d);
        REQUIRE(static_cast<int>(r.ts_summands.size()) == d);
        REQUIRE(r.sym2_two_trivial == (d % 2 == 0 ? 3 : 1));
        REQUIRE(r.wedge2_two_trivial == (d % 2 == 0 ? 1 : 3));
    }
    auto r = ks_representation_report(3);
    REQUIRE(r.ts_summands[0] == Weight({2, 0, 0}));
    REQUIRE(r.ts_summands[2] == Weight({0, 0, 2}));
}
