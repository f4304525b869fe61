#include <doctest.h>

#include <random>

#include "redvar/linalg.hpp"
#include "redvar/qform.hpp"

using namespace redvar;

namespace {

QuadForm random_form(const Field& F, int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> d(0, F.size() - 1);
    QuadForm Q(F, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) Q.set_coeff(i, j, fel(d(rng)));
    return Q;
}

Mat random_invertible(const Field& F, int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> d(0, F.size() - 1);
    while (true) {
        Mat M(m, Vec(m));
        for (auto& row : M)
            for (auto& v : row) v = fel(d(rng));
        if (determinant(F, M)) return M;
    }
}

// columns of M as basis vectors
Mat columns(const Mat& M) {
    int m = int(M.size());
    Mat cols(m, Vec(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) cols[j][i] = M[i][j];
    return cols;
}

bool roundtrip_ok(const QuadForm& Q) {
    const Field& F = Q.field_ref();
    Decomposition D = decompose(Q);
    if (int(D.basis.size()) != Q.dim()) return false;
    if (rank(F, D.basis) != Q.dim()) return false;
    QuadForm B = D.block_form(F);
    QuadForm R = Q.restricted(D.basis);
    return R == B;
}

}  // namespace

TEST_CASE("decompose frozen examples") {
    const Field& f2 = field(2, 1);

    QuadForm zero3(f2, 3);
    Decomposition d0 = decompose(zero3);
    CHECK(d0.blocks.size() == 3);
    for (auto& b : d0.blocks) CHECK(b.kind == FormBlock::kZeroLine);

    QuadForm xy(f2, 2);
    xy.set_coeff(0, 1, 1);
    Decomposition d1 = decompose(xy);
    REQUIRE(d1.blocks.size() == 1);
    CHECK(d1.blocks[0].kind == FormBlock::kHyperbolic);
    CHECK(d1.blocks[0].a == 0);
    CHECK(d1.blocks[0].b == 0);

    // x^2 + xy + y^2 + z^2 over F_2: one hyperbolic Q_{1,1} plus one nonzero line
    QuadForm Q(f2, 3);
    Q.set_coeff(0, 0, 1);
    Q.set_coeff(0, 1, 1);
    Q.set_coeff(1, 1, 1);
    Q.set_coeff(2, 2, 1);
    Decomposition d2 = decompose(Q);
    int hyp = 0, lines = 0, zl = 0;
    for (auto& b : d2.blocks) {
        if (b.kind == FormBlock::kHyperbolic) ++hyp;
        if (b.kind == FormBlock::kNonzeroLine) ++lines;
        if (b.kind == FormBlock::kZeroLine) ++zl;
    }
    CHECK(hyp == 1);
    CHECK(lines == 1);
    CHECK(zl == 0);
    CHECK(roundtrip_ok(Q));
}

TEST_CASE("invariants frozen examples") {
    const Field& f2 = field(2, 1);
    const Field& f3 = field(3, 1);

    QuadForm xsq(f3, 1);
    xsq.set_coeff(0, 0, 1);
    FormInvariants i1 = invariants(xsq);
    CHECK(i1.rank == 1);
    CHECK(i1.det_is_square);

    QuadForm ell(f2, 2);  // x^2+xy+y^2, Arf = 1
    ell.set_coeff(0, 0, 1);
    ell.set_coeff(0, 1, 1);
    ell.set_coeff(1, 1, 1);
    FormInvariants i2 = invariants(ell);
    CHECK(i2.rank == 2);
    CHECK(i2.arf_trace == 1);

    QuadForm xy(f2, 2);  // Arf = 0
    xy.set_coeff(0, 1, 1);
    FormInvariants i3 = invariants(xy);
    CHECK(i3.rank == 2);
    CHECK(i3.arf_trace == 0);
}

TEST_CASE("fiber counts") {
    const Field& f2 = field(2, 1);
    QuadForm zero3(f2, 3);
    CHECK(fiber_count(zero3, 0) == 8);

    QuadForm xy(f2, 2);
    xy.set_coeff(0, 1, 1);
    CHECK(fiber_count(xy, 1) == 1);

    QuadForm ell(f2, 2);
    ell.set_coeff(0, 0, 1);
    ell.set_coeff(0, 1, 1);
    ell.set_coeff(1, 1, 1);
    CHECK(fiber_count(ell, 1) == 3);
}

TEST_CASE("arf_by_counting") {
    const Field& f2 = field(2, 1);
    QuadForm xy(f2, 2);
    xy.set_coeff(0, 1, 1);
    CHECK(arf_by_counting(xy) == 0);

    QuadForm ell(f2, 2);
    ell.set_coeff(0, 0, 1);
    ell.set_coeff(0, 1, 1);
    ell.set_coeff(1, 1, 1);
    CHECK(arf_by_counting(ell) == 1);

    QuadForm h2(f2, 4);  // x1 y1 + x2 y2: fiber 6 = 8 - 2
    h2.set_coeff(0, 1, 1);
    h2.set_coeff(2, 3, 1);
    CHECK(fiber_count(h2, 1) == 6);
    CHECK(arf_by_counting(h2) == 0);

    QuadForm deg(f2, 2);  // degenerate: count matches neither branch
    deg.set_coeff(0, 0, 1);
    CHECK_THROWS_AS(arf_by_counting(deg), std::domain_error);
}

TEST_CASE("invariants preserved under invertible substitution") {
    std::mt19937_64 rng(7);
    for (auto [p, m_deg] : std::vector<std::pair<i64, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1},
                                                            {5, 1}, {7, 1}}) {
        const Field& F = field(p, m_deg);
        if (F.size() > 8) continue;
        for (int dim = 1; dim <= 6; ++dim) {
            for (int it = 0; it < 34; ++it) {
                QuadForm Q = random_form(F, dim, rng);
                Mat M = random_invertible(F, dim, rng);
                QuadForm QM = Q.restricted(columns(M));
                CHECK(invariants(Q) == invariants(QM));
            }
        }
    }
}

TEST_CASE("decompose round-trip, exhaustive for small spaces") {
    std::mt19937_64 rng(11);
    // exhaustive over all forms with q^m <= 4096: F_2 dims 1..3, F_3 dims 1..2
    for (auto [p, dims] : std::vector<std::pair<i64, int>>{{2, 3}, {3, 2}}) {
        const Field& F = field(p, 1);
        for (int m = 1; m <= dims; ++m) {
            int ncoef = m * (m + 1) / 2;
            i64 total = 1;
            for (int i = 0; i < ncoef; ++i) total *= F.size();
            for (i64 code = 0; code < total; ++code) {
                QuadForm Q(F, m);
                i64 v = code;
                for (int i = 0; i < m; ++i)
                    for (int j = i; j < m; ++j) {
                        Q.set_coeff(i, j, fel(v % F.size()));
                        v /= F.size();
                    }
                CHECK(roundtrip_ok(Q));
            }
        }
    }
    // random larger ones
    for (const Field* Fp : {&field(2, 2), &field(3, 1), &field(5, 1), &field(3, 2)}) {
        for (int it = 0; it < 50; ++it) {
            QuadForm Q = random_form(*Fp, 5, rng);
            CHECK(roundtrip_ok(Q));
        }
    }
}

TEST_CASE("arf additivity and det multiplicativity under direct sum") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 60; ++it) {
        const Field& f2 = field(2, 2);
        QuadForm A = random_form(f2, 2, rng), B = random_form(f2, 3, rng);
        FormInvariants ia = invariants(A), ib = invariants(B), is = invariants(A.direct_sum(B));
        CHECK(is.rank == ia.rank + ib.rank);
        CHECK(is.arf_trace == (ia.arf_trace + ib.arf_trace) % 2);

        const Field& f5 = field(5, 1);
        QuadForm C = random_form(f5, 2, rng), D = random_form(f5, 3, rng);
        FormInvariants ic = invariants(C), id = invariants(D), it2 = invariants(C.direct_sum(D));
        CHECK(it2.rank == ic.rank + id.rank);
        CHECK(it2.det_is_square == (ic.det_is_square == id.det_is_square));
    }
}

TEST_CASE("arf_by_counting agrees with invariants on random nondegenerate forms") {
    std::mt19937_64 rng(17);
    const Field& f2 = field(2, 1);
    int done = 0;
    while (done < 100) {
        int dim = 2 * (1 + int(rng() % 3));  // 2, 4, 6
        QuadForm Q = random_form(f2, dim, rng);
        FormInvariants inv = invariants(Q);
        if (inv.rank != dim) continue;
        CHECK(arf_by_counting(Q) == inv.arf_trace);
        ++done;
    }
}
