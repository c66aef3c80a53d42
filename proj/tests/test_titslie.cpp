#include <doctest.h>

#include "atlas/jordan.hpp"
#include "atlas/titslie.hpp"

using namespace atlas;

TEST_CASE("normalization constants are pinned by Jacobi") {
    TitsNormalization fitted = fit_tits_normalization();
    CHECK(fitted.lambda == kTitsNormalization.lambda);
    CHECK(fitted.mu == kTitsNormalization.mu);
    CHECK(kTitsNormalization.lambda == Rational(1, 4));
    CHECK(kTitsNormalization.mu == Rational(1, 2));
}

TEST_CASE("degenerate rows") {
    // H = R: Der(H) and H0 vanish, the construction is Der(J) alone
    TitsAlgebra f4(1, 8);
    CHECK(f4.algebra().dim() == 52);
    CHECK(f4.der_h_dim() == 0);
    CHECK(f4.h0_dim() == 0);

    // H = C: no derivations, one traceless direction
    TitsAlgebra row2(2, 1);
    CHECK(row2.algebra().dim() == 8);
    CHECK(row2.der_h_dim() == 0);
    CHECK(row2.h0_dim() == 1);
    CHECK(jacobi_check(row2.algebra(), JacobiMode::exhaustive).ok());
}

TEST_CASE("dimension formula across the square") {
    static const int hs[4] = {1, 2, 4, 8};
    static const int expected[4][4] = {{3, 8, 21, 52}, {8, 16, 35, 78}, {21, 35, 66, 133}, {52, 78, 133, 248}};
    static const int der_h[4] = {0, 0, 3, 14};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            TitsAlgebra entry(hs[r], hs[c]);
            CHECK(entry.algebra().dim() == expected[r][c]);
            // dim = Der(H) + (H-1)(3n+2) + Der(J)
            CHECK(entry.algebra().dim() ==
                  der_h[r] + (hs[r] - 1) * (3 * hs[c] + 2) + (expected[0][c]));
            CHECK(antisymmetry_holds(entry.algebra()));
        }
}

TEST_CASE("exhaustive Jacobi on the small entries") {
    for (auto [h, j] : {std::pair{1, 1}, {1, 2}, {2, 2}, {4, 1}, {4, 2}, {2, 4}}) {
        TitsAlgebra entry(h, j);
        JacobiReport report = jacobi_check(entry.algebra(), JacobiMode::exhaustive);
        CHECK_MESSAGE(report.ok(), "tits(", h, ",", j, ")");
    }
    TitsAlgebra c3(1, 1);
    JacobiReport report = jacobi_check(c3.algebra(), JacobiMode::exhaustive);
    CHECK(report.triples_checked == 1);  // dim 3: one triple
}

TEST_CASE("perturbed structure constant fails Jacobi with a named triple") {
    TitsAlgebra entry(4, 1);
    LieAlgebra broken = entry.algebra();
    broken.perturb_constant(3, 7, 2, FieldScalar(Rational(1, 2)));
    JacobiReport report = jacobi_check(broken, JacobiMode::exhaustive);
    CHECK(!report.ok());
    CHECK(!report.violations.empty());
    // the offending triple is reported
    CHECK(report.violations.front().size() == 3);
}

TEST_CASE("sampled Jacobi and per-block coverage on e8") {
    TitsAlgebra e8(8, 8);
    CHECK(e8.algebra().dim() == 248);
    CHECK(jacobi_check(e8.algebra(), JacobiMode::sampled, 300, 11).ok());
    // blocks: Der(H) 14, middle 182, Der(J) 52
    CHECK(e8.der_h_dim() == 14);
    CHECK(e8.h0_dim() * e8.j0_dim() == 182);
    CHECK(e8.der_j_dim() == 52);
}

TEST_CASE("charge grading of e8 refines the seven-part decomposition") {
    TitsAlgebra e8(8, 8);
    SparseVec h = e8.charge_element({1, 5, -6});
    Grading g = grading_decompose(e8.algebra(), h);

    // collision-free charges: Jordan-pair parts at +-1, +-5, +-6 with 27
    // elements each; the six a2 root elements sit alone at +-4, +-7, +-11
    for (const char* w : {"1", "-1", "5", "-5", "6", "-6"}) CHECK(g.parts.at(w).size() == 27);
    for (const char* w : {"4", "-4", "7", "-7", "11", "-11"}) CHECK(g.parts.at(w).size() == 1);
    CHECK(g.parts.at("0").size() == 80);

    // grouped as in the charge-zero stabilizer: 86 + 6 x 27 = 248
    size_t l0 = g.parts.at("0").size() + 6;
    CHECK(l0 == 86);
    CHECK(l0 + 6 * 27 == 248);
}

TEST_CASE("three-grading of the C row matches the reduced structure algebra") {
    // tits(2,n) is str0(J3^n); the map u@x -> i L_x, D -> D matches brackets
    JordanAlgebra j1(1);
    JordanDerivationAlgebra der(j1);
    TitsAlgebra row2(2, 1);
    const FieldScalar i = FieldScalar::imaginary_unit();

    auto lift = [&](const Vec& j0p) {
        // image of u@x under the bracket-preserving map
        return i * j1.left_mult(j0p);
    };
    std::vector<Vec> j0 = j1.traceless_basis();
    for (int p = 0; p < (int)j0.size(); ++p)
        for (int q = p + 1; q < (int)j0.size(); ++q) {
            // [u@x_p, u@x_q] in the Tits algebra has only Der components
            SparseVec value = row2.algebra().bracket_basis(row2.middle_index(0, p), row2.middle_index(0, q));
            Mat rhs((size_t)j1.dim(), (size_t)j1.dim());
            for (const auto& t : value) {
                CHECK(t.index >= row2.derj_index(0));
                rhs = rhs + t.coef * der.ops()[t.index - row2.derj_index(0)];
            }
            Mat lhs = commutator(lift(j0[p]), lift(j0[q]));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("chain decomposition bookkeeping") {
    ChainDecomposition chain = chain_decompose_e8();
    REQUIRE(chain.steps.size() == 5);
    for (const auto& step : chain.steps) CHECK(step.total() == 248);
    CHECK(chain.steps[0].parts.size() == 3);

    int dim_total = 0, root_total = 0, a2_leaves = 0, j8_leaves = 0, j2_leaves = 0;
    for (const auto& [label, pair] : chain.leaves) {
        dim_total += pair.first;
        root_total += pair.second;
        if (label.rfind("a2", 0) == 0) {
            ++a2_leaves;
            CHECK(pair.first == 8);
            CHECK(pair.second == 6);
        } else if (label.rfind("J8", 0) == 0) {
            ++j8_leaves;
            CHECK(pair.second == 27);
        } else {
            ++j2_leaves;
            CHECK(pair.second == 9);
        }
    }
    CHECK(dim_total == 248);
    CHECK(root_total == 240);
    CHECK(a2_leaves == 4);
    CHECK(j8_leaves == 6);
    CHECK(j2_leaves == 6);
}

TEST_CASE("the C row is the grade-zero part of the three-graded row") {
    // dim tkk(n) = 2 dim J3^n + dim tits(2,n) + 1, for every n
    for (int n : {1, 2, 4, 8}) {
        TkkAlgebra tkk(n);
        TitsAlgebra row2(2, n);
        CHECK(tkk.algebra().dim() == 2 * tkk.jordan().dim() + row2.algebra().dim() + 1);
        Grading g = grading_decompose(tkk.algebra(), tkk.grading_element());
        CHECK(g.parts.at("0").size() == (size_t)(row2.algebra().dim() + 1));
    }
}

TEST_CASE("ranks of the small entries") {
    CHECK(rank_by_generic_nullity(TitsAlgebra(1, 1).algebra()) == 1);
    CHECK(rank_by_generic_nullity(TitsAlgebra(2, 1).algebra()) == 2);
    CHECK(rank_by_generic_nullity(TitsAlgebra(4, 1).algebra()) == 3);
    CHECK(rank_by_generic_nullity(TitsAlgebra(2, 2).algebra()) == 4);  // a2 + a2
    CHECK(rank_by_generic_nullity(TitsAlgebra(4, 2).algebra()) == 5);
}
