#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "k3rm/clifford.hpp"
#include "test_util.hpp"

using namespace k3rm;
using k3rm_test::throws_kind;

namespace {

// local symbol profile of a quaternion algebra over a real quadratic field:
// archimedean symbols plus symbols at every place above the given primes
std::map<std::string, int> profile(const QuaternionAlgebra& B, std::set<Int> ps) {
    std::map<std::string, int> out;
    for (int i = 1; i <= 2; ++i)
        out["arch" + std::to_string(i)] = hilbert_k(B.base, B.alpha, B.beta, PlaceK::arch(i));
    ps.insert(2);
    for (const auto& p : detail::candidate_primes_k(B.base, B.alpha, B.beta)) ps.insert(p);
    for (const auto& p : ps)
        for (const auto& w : places_above(B.base, p))
            out[w.str()] = hilbert_k(B.base, B.alpha, B.beta, w);
    return out;
}

}  // namespace

TEST_CASE("ternary even Clifford closed form") {
    auto Q = NumberField::rationals();
    auto fe = [&](long v) { return Q.from_rational(Rat(v)); };

    auto B111 = even_clifford_ternary(diagonal_form(Q, {fe(1), fe(1), fe(1)}));
    REQUIRE(B111.alpha.coords[0] == -1);
    REQUIRE(B111.beta.coords[0] == -1);
    auto r111 = ramification_q(B111);
    REQUIRE(r111.infinite);
    REQUIRE(r111.primes == std::set<Int>{2});

    auto B11m1 = even_clifford_ternary(diagonal_form(Q, {fe(1), fe(1), fe(-1)}));
    REQUIRE(B11m1.alpha.coords[0] == 1);
    REQUIRE(B11m1.beta.coords[0] == 1);
    REQUIRE(ramification_q(B11m1).empty());

    auto F2 = NumberField::make(QPoly({Rat(-2), Rat(0), Rat(1)}));
    auto am1 = F2.sub(F2.gen(), F2.one());
    auto Bk = even_clifford_ternary(diagonal_form(F2, {am1, am1, F2.from_rational(Rat(-1))}));
    REQUIRE(Bk.alpha == am1);
    REQUIRE(Bk.beta == am1);
}

TEST_CASE("trace-zero round trip preserves ramification over Q") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        long a = static_cast<long>(rng() % 40) - 20;
        long b = static_cast<long>(rng() % 40) - 20;
        if (!a || !b) continue;
        auto B = make_quaternion_q(Rat(a), Rat(b));
        auto B2 = even_clifford_ternary(trace_zero_form(B));
        REQUIRE(ramification_q(B2) == ramification_q(B));
    }
}

TEST_CASE("quaternary even Clifford closed form") {
    auto Q = NumberField::rationals();
    auto fe = [&](long v) { return Q.from_rational(Rat(v)); };

    auto ec = even_clifford_quaternary(diagonal_form(Q, {fe(1), fe(1), fe(1), fe(2)}));
    REQUIRE(ec.center_radicand == 2);
    REQUIRE(ec.algebra.alpha.coords[0] == -1);
    REQUIRE(ec.algebra.beta.coords[0] == -1);

    auto ec2 = even_clifford_quaternary(diagonal_form(Q, {fe(1), fe(1), fe(-1), fe(-2)}));
    REQUIRE(ec2.center_radicand == 2);
    REQUIRE(ec2.algebra.alpha.coords[0] == -1);
    REQUIRE(ec2.algebra.beta.coords[0] == 1);

    REQUIRE(throws_kind(
        [&] { even_clifford_quaternary(diagonal_form(Q, {fe(1), fe(1), fe(1), fe(1)})); },
        errc::split_center));
    REQUIRE(throws_kind(
        [&] { even_clifford_quaternary(diagonal_form(Q, {fe(1), fe(1), fe(1), fe(-1)})); },
        errc::not_real_quadratic));
}

TEST_CASE("Brauer class is invariant under permutation of the diagonal") {
    auto Q = NumberField::rationals();
    auto fe = [&](long v) { return Q.from_rational(Rat(v)); };
    for (std::vector<long> base : {std::vector<long>{1, 1, 1, 2}, {1, 2, 3, 5}, {1, -1, 3, -6}}) {
        std::vector<FieldElement> d0;
        for (long v : base) d0.push_back(fe(v));
        auto ref = even_clifford_quaternary(diagonal_form(Q, d0));
        std::set<Int> ps;
        for (long v : base)
            for (const auto& [p, e] : factor_int(Int(v))) {
                (void)e;
                ps.insert(p);
            }
        auto refp = profile(ref.algebra, ps);
        std::vector<size_t> idx{0, 1, 2, 3};
        std::mt19937_64 r2(11);
        for (int t = 0; t < 6; ++t) {
            std::shuffle(idx.begin(), idx.end(), r2);
            std::vector<FieldElement> d;
            for (size_t i : idx) d.push_back(d0[i]);
            auto alt = even_clifford_quaternary(diagonal_form(Q, d));
            REQUIRE(alt.center_radicand == ref.center_radicand);
            REQUIRE(profile(alt.algebra, ps) == refp);
        }
    }
}

TEST_CASE("split_quadric worked examples") {
    auto Q = NumberField::rationals();
    auto fe = [&](long v) { return Q.from_rational(Rat(v)); };

    auto rep = split_quadric(diagonal_form(Q, {fe(1), fe(1), fe(1), fe(2)}));
    REQUIRE(rep.center_radicand == 2);
    auto Cd = diagonalize(rep.conic).diag; // <1,1,1>
    REQUIRE(Cd[0] == rep.center.one());
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < 2; ++i) REQUIRE(!rep.real_points[c][i]);
    REQUIRE(!rep.k3_type);

    auto rep2 = split_quadric(diagonal_form(Q, {fe(1), fe(1), fe(-1), fe(-2)}));
    for (int i = 0; i < 2; ++i) REQUIRE(rep2.real_points[0][i]);
    REQUIRE(!rep2.k3_type);

    REQUIRE(throws_kind(
        [&] { split_quadric(diagonal_form(Q, {fe(1), fe(1), fe(1), fe(-1)})); },
        errc::not_real_quadratic));

    // non-diagonal input goes through the diagonalizer
    KMat g(4, std::vector<FieldElement>(4, Q.zero()));
    g[0][0] = fe(2);
    g[0][1] = fe(1);
    g[1][0] = fe(1);
    g[1][1] = fe(1);
    g[2][2] = fe(1);
    g[3][3] = fe(3);
    auto rep3 = split_quadric(make_form(Q, g));
    REQUIRE(rep3.center_radicand == squarefree_radicand(det_form(make_form(Q, g)).coords[0]));
}

TEST_CASE("structure constants are associative and even-part closed") {
    auto Q = NumberField::rationals();
    auto fe = [&](long v) { return Q.from_rational(Rat(v)); };
    auto C4 = make_clifford(Q, {fe(1), fe(1), fe(1), fe(2)});
    REQUIRE(C4.dim() == 16);

    std::mt19937_64 r3(3);
    for (int t = 0; t < 300; ++t) {
        unsigned S = static_cast<unsigned>(r3() % C4.dim());
        unsigned T = static_cast<unsigned>(r3() % C4.dim());
        unsigned U = static_cast<unsigned>(r3() % C4.dim());
        auto x = clifford_basis(C4, S), y = clifford_basis(C4, T), z = clifford_basis(C4, U);
        auto lhs = clifford_mul(C4, clifford_mul(C4, x, y), z);
        auto rhs = clifford_mul(C4, x, clifford_mul(C4, y, z));
        REQUIRE(lhs == rhs);
    }
    for (unsigned S = 0; S < C4.dim(); ++S)
        for (unsigned T = 0; T < C4.dim(); ++T)
            if (__builtin_popcount(S) % 2 == 0 && __builtin_popcount(T) % 2 == 0)
                REQUIRE(__builtin_popcount(C4.table[S][T].mask) % 2 == 0);

    auto F2 = NumberField::make(QPoly({Rat(-2), Rat(0), Rat(1)}));
    auto am1 = F2.sub(F2.gen(), F2.one());
    auto K3 = make_clifford(F2, {am1, am1, F2.from_rational(Rat(-1))});
    std::mt19937_64 r4(4);
    for (int t = 0; t < 200; ++t) {
        unsigned S = static_cast<unsigned>(r4() % K3.dim());
        unsigned T = static_cast<unsigned>(r4() % K3.dim());
        unsigned U = static_cast<unsigned>(r4() % K3.dim());
        auto lhs = clifford_mul(K3, clifford_mul(K3, clifford_basis(K3, S), clifford_basis(K3, T)),
                                clifford_basis(K3, U));
        auto rhs = clifford_mul(K3, clifford_basis(K3, S),
                                clifford_mul(K3, clifford_basis(K3, T), clifford_basis(K3, U)));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("conjugate form preserves the det norm") {
    auto F2 = NumberField::make(QPoly({Rat(-2), Rat(0), Rat(1)}));
    auto am1 = F2.sub(F2.gen(), F2.one());
    auto C = diagonal_form(F2, {am1, F2.one(), F2.gen()});
    auto Cb = conjugate_form(C);
    REQUIRE(Cb.gram[0][0] == F2.element({Rat(-1), Rat(-1)})); // conj(a-1) = -a-1
    REQUIRE(F2.norm(det_form(C)) == F2.norm(det_form(Cb)));
}
