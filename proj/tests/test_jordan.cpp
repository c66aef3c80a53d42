#include <doctest.h>

#include "atlas/jordan.hpp"
#include "test_util.hpp"

using namespace atlas;
using atlas_test::Rng;

namespace {

Vec random_jordan(Rng& rng, const JordanAlgebra& j) {
    Vec v(j.dim());
    for (int i = 0; i < j.dim(); ++i) v[i] = FieldScalar(rng.range(-5, 5));
    return v;
}

}  // namespace

TEST_CASE("circ basics") {
    for (int n : {1, 2, 4, 8}) {
        JordanAlgebra j(n);
        CHECK(j.dim() == 3 + 3 * n);
        Rng rng(n);
        Vec x = random_jordan(rng, j);
        CHECK(j.circ(j.unit(), x) == x);
        CHECK(vec_is_zero(j.circ(j.basis_vec(0), j.basis_vec(1))));  // E1 o E2 = 0
        Vec y = random_jordan(rng, j);
        CHECK(j.circ(x, y) == j.circ(y, x));
        // Jordan identity: x^2 o (x o y) = x o (x^2 o y)
        Vec x2 = j.circ(x, x);
        CHECK(j.circ(x2, j.circ(x, y)) == j.circ(x, j.circ(x2, y)));
    }
}

TEST_CASE("trace and traceless") {
    JordanAlgebra j(8);
    CHECK(j.trace_of(j.unit()) == FieldScalar(3));
    Rng rng(9);
    Vec x = random_jordan(rng, j);
    CHECK(j.trace_of(j.traceless(x)).is_zero());
    CHECK(j.traceless_basis().size() == 26);
}

TEST_CASE("quadratic operator axioms") {
    for (int n : {1, 2, 4, 8}) {
        JordanAlgebra j(n);
        CHECK(j.quadratic_U(j.unit()) == Mat::identity((size_t)j.dim()));
        Rng rng(100 + n);
        int samples = n == 8 ? 6 : 15;
        for (int s = 0; s < samples; ++s) {
            Vec x = random_jordan(rng, j), y = random_jordan(rng, j);
            Mat Ux = j.quadratic_U(x), Uy = j.quadratic_U(y);
            // U_{U_x y} = U_x U_y U_x
            CHECK(j.quadratic_U(Ux.apply(y)) == Ux * Uy * Ux);
            // U_x V_{y,x} = V_{x,y} U_x
            CHECK(Ux * j.linearized_V(y, x) == j.linearized_V(x, y) * Ux);
        }
    }
}

TEST_CASE("linearized V against its defining polarization") {
    for (int n : {1, 2}) {
        JordanAlgebra j(n);
        Rng rng(n);
        for (int s = 0; s < 5; ++s) {
            Vec x = random_jordan(rng, j), y = random_jordan(rng, j);
            CHECK(j.linearized_V(x, y) == j.linearized_V_by_polarization(x, y));
        }
    }
    JordanAlgebra j8(8);
    Rng rng(3);
    Vec x = random_jordan(rng, j8), y = random_jordan(rng, j8);
    CHECK(j8.linearized_V(x, y) == j8.linearized_V_by_polarization(x, y));
    // V_{1,1} = 2 Id
    CHECK(j8.linearized_V(j8.unit(), j8.unit()) == FieldScalar(2) * Mat::identity((size_t)j8.dim()));
}

TEST_CASE("triple-system and pair axioms") {
    for (int n : {1, 2, 4, 8}) {
        JordanAlgebra j(n);
        Rng rng(200 + n);
        int samples = n == 8 ? 5 : 12;
        for (int s = 0; s < samples; ++s) {
            Vec x = random_jordan(rng, j), y = random_jordan(rng, j);
            Mat Ux = j.quadratic_U(x), Uy = j.quadratic_U(y);
            CHECK(j.linearized_V(Ux.apply(y), y) == j.linearized_V(x, Uy.apply(x)));
            CHECK(j.quadratic_U(Ux.apply(y)) == Ux * Uy * Ux);
            CHECK(Ux * j.linearized_V(y, x) == j.linearized_V(x, y) * Ux);
        }
    }
}

TEST_CASE("derivation algebra dimensions and unit annihilation") {
    std::map<int, int> expected = {{1, 3}, {2, 8}, {4, 21}, {8, 52}};
    for (auto [n, dim] : expected) {
        JordanAlgebra j(n);
        JordanDerivationAlgebra der(j);
        CHECK(der.dim() == dim);
        for (const auto& op : der.ops()) CHECK(vec_is_zero(op.apply(j.unit())));
        CHECK(antisymmetry_holds(der.algebra()));
    }
}

TEST_CASE("reduced structure algebra dimensions") {
    std::map<int, int> expected = {{1, 8}, {2, 16}, {4, 35}, {8, 78}};
    for (auto [n, dim] : expected) {
        JordanAlgebra j(n);
        JordanDerivationAlgebra der(j);
        CHECK(reduced_structure_dim(j, der) == dim);
    }
}

TEST_CASE("tkk dimensions and grading") {
    std::map<int, int> expected = {{1, 21}, {2, 35}, {4, 66}, {8, 133}};
    for (auto [n, dim] : expected) {
        TkkAlgebra tkk(n);
        CHECK(tkk.algebra().dim() == dim);

        Grading g = grading_decompose(tkk.algebra(), tkk.grading_element());
        CHECK(g.parts.at("1").size() == (size_t)tkk.jordan().dim());
        CHECK(g.parts.at("-1").size() == (size_t)tkk.jordan().dim());
        CHECK(g.parts.at("0").size() == (size_t)(tkk.jordan().dim() + tkk.derivations().dim()));

        // [L_1, L_1] = 0 and [L_-1, L_-1] = 0
        for (int i = 0; i < tkk.jordan().dim(); ++i)
            for (int j = i + 1; j < tkk.jordan().dim(); ++j) {
                CHECK(tkk.algebra().bracket_basis(tkk.x_index(i), tkk.x_index(j)).empty());
                CHECK(tkk.algebra().bracket_basis(tkk.y_index(i), tkk.y_index(j)).empty());
            }
    }
}

TEST_CASE("tkk jacobi: exhaustive small, sampled large") {
    TkkAlgebra tkk1(1);
    JacobiReport r1 = jacobi_check(tkk1.algebra(), JacobiMode::exhaustive);
    CHECK(r1.ok());
    CHECK(r1.triples_checked == 21 * 20 * 19 / 6);

    TkkAlgebra tkk8(8);
    JacobiReport r8 = jacobi_check(tkk8.algebra(), JacobiMode::sampled, 500, 42);
    CHECK(r8.ok());
    CHECK(r8.triples_checked > 400);
}

TEST_CASE("V through brackets agrees with the quadratic route") {
    for (int n : {1, 2, 4, 8}) {
        TkkAlgebra tkk(n);
        const JordanAlgebra& j = tkk.jordan();
        Rng rng(300 + n);
        int samples = n == 8 ? 5 : 10;
        for (int s = 0; s < samples; ++s) {
            Vec x = random_jordan(rng, j), y = random_jordan(rng, j), z = random_jordan(rng, j);
            Vec via_brackets = tkk.v_by_brackets(x, y, z);
            Vec via_U = j.linearized_V(x, y).apply(z);
            CHECK(via_U == scale(FieldScalar(kVBracketNormalization), via_brackets));
        }
    }
}

TEST_CASE("tkk(1) equals c3 and tkk(8) equals e7 by dimension and rank") {
    TkkAlgebra tkk1(1);
    CHECK(rank_by_generic_nullity(tkk1.algebra()) == 3);
}
