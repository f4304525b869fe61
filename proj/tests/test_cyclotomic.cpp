#include <doctest.h>

#include <random>

#include "redvar/cyclotomic.hpp"
#include "redvar/poly.hpp"

using namespace redvar;

TEST_CASE("CycInt ring identities") {
    // 1 + z + z^2 = 0 in Z[zeta_3]
    CycInt s = CycInt::integer(3, 1) + CycInt::zeta_pow(3, 1) + CycInt::zeta_pow(3, 2);
    CHECK(s.is_zero());
    CHECK(CycInt::zeta_pow(5, 5) == CycInt::integer(5, 1));
    CHECK(CycInt::zeta_pow(4, 2) == CycInt::integer(4, -1));
    CHECK(CycInt::zeta_pow(2, 1) == CycInt::integer(2, -1));
    // conjugation on zeta_3
    CHECK(CycInt::zeta_pow(3, 1).conj() == CycInt::zeta_pow(3, 2));
    CHECK(CycInt::integer(7, 42).to_string() == "42");
    CHECK((CycInt::integer(3, 1) + CycInt::zeta_pow(3, 1).scaled(2)).to_string() == "1+2*z");
}

TEST_CASE("psi_eval basics") {
    const Field& f2 = field(2, 1);
    AdditiveChar psi0(f2, 1);
    CHECK(psi_eval(psi0, 1) == CycInt::integer(2, -1));
    CHECK(psi_eval(psi0, 0) == CycInt::integer(2, 1));

    const Field& f3 = field(3, 1);
    AdditiveChar psi3(f3, 1);
    CHECK(psi_eval(psi3, 1) == CycInt::zeta_pow(3, 1));

    const Field& f4 = field(2, 2);
    AdditiveChar psi4(f4, 1);
    CHECK(psi_eval(psi4, f4.gen()) == CycInt::integer(2, -1));  // Tr(alpha) = 1

    // additivity
    for (i64 x = 0; x < 4; ++x)
        for (i64 y = 0; y < 4; ++y)
            CHECK(psi_eval(psi4, f4.add(fel(x), fel(y))) ==
                  psi_eval(psi4, fel(x)) * psi_eval(psi4, fel(y)));
}

TEST_CASE("character orthogonality: sum over a of psi_a(x) = q [x=0]") {
    for (auto [p, m] : std::vector<std::pair<i64, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
        const Field& F = field(p, m);
        for (i64 x = 0; x < F.size(); ++x) {
            CycInt s(p);
            for (i64 a = 0; a < F.size(); ++a) s += AdditiveChar(F, fel(a)).eval(fel(x));
            CHECK(s == CycInt::integer(p, x == 0 ? F.size() : 0));
        }
    }
}

TEST_CASE("gauss sums") {
    const Field& f3 = field(3, 1);
    AdditiveChar triv(f3, 0), psi(f3, 1);
    CHECK(gauss_sum(triv) == CycInt::integer(3, 3));
    CycInt g = gauss_sum(psi);
    CHECK(g == CycInt::integer(3, 1) + CycInt::zeta_pow(3, 1).scaled(2));  // 1+2z
    CHECK(g * g.conj() == CycInt::integer(3, 3));

    // |g|^2 = q for every nontrivial psi, every odd q <= 9.  (For p = 2 the
    // defining sum over squares is a bijective reindexing of sum psi(x) = 0;
    // the quadratic Gauss sum only enters the p != 2 formulas.)
    for (auto [p, m] : std::vector<std::pair<i64, int>>{{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        const Field& F = field(p, m);
        for (i64 a = 1; a < F.size(); ++a) {
            CycInt ga = gauss_sum(AdditiveChar(F, fel(a)));
            CHECK(ga * ga.conj() == CycInt::integer(p, F.size()));
        }
    }
    // p = 2: the sum collapses to zero for nontrivial psi
    CHECK(gauss_sum(AdditiveChar(field(2, 2), 1)).is_zero());

    // g^2 = (-1|q) q for p odd
    for (auto [p, m] : std::vector<std::pair<i64, int>>{{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        const Field& F = field(p, m);
        int s = quad_res_symbol(F, F.neg(F.one()));
        for (i64 a = 1; a < F.size(); ++a) {
            CycInt ga = gauss_sum(AdditiveChar(F, fel(a)));
            CHECK(ga * ga == CycInt::integer(p, s * F.size()));
        }
    }
}

TEST_CASE("exp_sum basics and substitution invariance") {
    const Field& f2 = field(2, 1);
    const Field& f3 = field(3, 1);

    Poly zero2(f2, 2);
    CHECK(exp_sum(zero2, AdditiveChar(f2, 1), 1, 1 << 20) == CycInt::integer(2, 4));

    Poly xsq(f3, 1);
    xsq.add_term({2}, 1);
    CHECK(exp_sum(xsq, AdditiveChar(f3, 1), 1, 1 << 20) == gauss_sum(AdditiveChar(f3, 1)));

    Poly xy(f2, 2);
    xy.add_term({1, 1}, 1);
    CHECK(exp_sum(xy, AdditiveChar(f2, 1), 1, 1 << 20) == CycInt::integer(2, 2));

    // invariance under invertible linear substitution, random 2-variable cases
    std::mt19937_64 rng(99);
    for (const Field* Fp : {&f2, &f3, &field(2, 2)}) {
        const Field& F = *Fp;
        std::uniform_int_distribution<i64> d(0, F.size() - 1);
        for (int it = 0; it < 10; ++it) {
            Poly P(F, 2);
            for (u32 e1 = 0; e1 <= 2; ++e1)
                for (u32 e2 = 0; e2 + e1 <= 2; ++e2) P.add_term({e1, e2}, fel(d(rng)));
            fel a, b, c, dd;
            do {
                a = fel(d(rng)); b = fel(d(rng)); c = fel(d(rng)); dd = fel(d(rng));
            } while (F.sub(F.mul(a, dd), F.mul(b, c)) == 0);
            std::vector<Poly> images;
            Poly u = Poly::variable(F, 2, 0, 1, a) + Poly::variable(F, 2, 1, 1, c);
            Poly v = Poly::variable(F, 2, 0, 1, b) + Poly::variable(F, 2, 1, 1, dd);
            images.push_back(u);
            images.push_back(v);
            Poly Q = P.compose(images);
            for (int e = 1; e <= 2; ++e) {
                AdditiveChar chi(F, 1);
                CHECK(exp_sum(P, chi, e, 1 << 22) == exp_sum(Q, chi, e, 1 << 22));
            }
        }
    }
}

TEST_CASE("exp_sum budget") {
    const Field& f3 = field(3, 1);
    Poly P(f3, 5);
    CHECK_THROWS_AS(exp_sum(P, AdditiveChar(f3, 1), 2, 10), BudgetExceeded);
}
