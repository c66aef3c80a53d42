#include <doctest.h>

#include "atlas/hurwitz.hpp"
#include "test_util.hpp"

using namespace atlas;
using atlas_test::Rng;

namespace {

HurwitzElement random_element(Rng& rng, int dim, bool integer_only = true) {
    HurwitzElement x(dim);
    for (int i = 0; i < dim; ++i)
        x.coord(i) = integer_only ? FieldScalar(rng.range(-5, 5)) : atlas_test::random_scalar(rng, 2);
    return x;
}

}  // namespace

TEST_CASE("idempotents rho+-") {
    HurwitzElement rp = HurwitzElement::rho(1), rm = HurwitzElement::rho(-1);
    CHECK(rp * rp == rp);
    CHECK(rm * rm == rm);
    CHECK((rp * rm).is_zero());
    CHECK((rm * rp).is_zero());
    CHECK(rp + rm == HurwitzElement::unit(8));
}

TEST_CASE("quaternion subalgebra and the distinguished unit") {
    HurwitzElement u1 = HurwitzElement::basis(8, 1), u2 = HurwitzElement::basis(8, 2),
                   u3 = HurwitzElement::basis(8, 3), u7 = HurwitzElement::basis(8, 7);
    CHECK(u1 * u2 == u3);
    CHECK(u1 * u7 == HurwitzElement::basis(8, 4));
    CHECK(u2 * u7 == HurwitzElement::basis(8, 5));
    CHECK(u3 * u7 == HurwitzElement::basis(8, 6));
    for (int k = 1; k < 8; ++k) {
        HurwitzElement uk = HurwitzElement::basis(8, k);
        CHECK(uk * uk == -HurwitzElement::unit(8));
    }
}

TEST_CASE("zorn product cross term") {
    // A- = (1,0,0) times B- = (0,1,0): the A- x B- entry lands in A+
    ZornMatrix x, y;
    x.a_minus[0] = FieldScalar::one();
    y.a_minus[1] = FieldScalar::one();
    ZornMatrix p = zorn_mul(x, y);
    CHECK(p.a_plus == std::array<FieldScalar, 3>{FieldScalar::zero(), FieldScalar::zero(), FieldScalar::one()});
    CHECK(p.alpha_plus.is_zero());
    CHECK(p.alpha_minus.is_zero());
    CHECK(p.a_minus == std::array<FieldScalar, 3>{});
    // independent oracle: the same product through the multiplication table
    HurwitzElement via_table = from_zorn(x) * from_zorn(y);
    CHECK(to_zorn(via_table) == p);
}

TEST_CASE("zorn bijection is a ring isomorphism on all 64 basis pairs") {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            HurwitzElement a = HurwitzElement::basis(8, i), b = HurwitzElement::basis(8, j);
            CHECK(from_zorn(zorn_mul(to_zorn(a), to_zorn(b))) == a * b);
        }
}

TEST_CASE("conjugation, norm, trace") {
    CHECK(norm(HurwitzElement::basis(8, 3)) == FieldScalar::one());
    CHECK(conj_oct(HurwitzElement::rho(1)) == HurwitzElement::rho(-1));
    for (int k = 1; k <= 3; ++k)
        for (int s : {1, -1}) CHECK(trace(HurwitzElement::epsilon(k, s)).is_zero());
    // epsilon are nilpotent
    for (int k = 1; k <= 3; ++k) {
        HurwitzElement e = HurwitzElement::epsilon(k, 1);
        CHECK((e * e).is_zero());
    }
}

TEST_CASE("composition law on seeded samples, all four algebras") {
    Rng rng(100);
    for (int dim : {1, 2, 4, 8}) {
        for (int t = 0; t < 200; ++t) {
            HurwitzElement x = random_element(rng, dim), y = random_element(rng, dim);
            CHECK(norm(x * y) == norm(x) * norm(y));
        }
    }
}

TEST_CASE("alternativity and associativity") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        HurwitzElement x = random_element(rng, 8), y = random_element(rng, 8);
        CHECK(associator(x, x, y).is_zero());
        CHECK(associator(y, x, x).is_zero());
        CHECK(associator(x, y, x).is_zero());
    }
    for (int t = 0; t < 50; ++t) {
        HurwitzElement x = random_element(rng, 4), y = random_element(rng, 4), z = random_element(rng, 4);
        CHECK(associator(x, y, z).is_zero());
    }
    CHECK(!associator(HurwitzElement::basis(8, 1), HurwitzElement::basis(8, 2), HurwitzElement::basis(8, 4))
               .is_zero());
    CHECK_THROWS_AS(HurwitzElement::basis(8, 1) * HurwitzElement::basis(4, 1), std::invalid_argument);
}

TEST_CASE("derivations: antisymmetry, unit, Leibniz") {
    Rng rng(21);
    HurwitzElement a = random_element(rng, 8), b = random_element(rng, 8);
    CHECK(derivation(a, a).is_zero());
    Mat d = derivation(a, b);
    Vec unit_image = d.apply(HurwitzElement::unit(8).to_vec());
    CHECK(vec_is_zero(unit_image));
    CHECK(leibniz_holds(d, 8));
    Mat swapped = derivation(b, a);
    CHECK((d + swapped).is_zero());
    CHECK_THROWS_AS(derivation(HurwitzElement::basis(2, 1), HurwitzElement::unit(2)), std::invalid_argument);
}

TEST_CASE("derivation algebra of the quaternions is a1") {
    DerivationAlgebra der = derivation_algebra(4);
    CHECK(der.ops.size() == 3);
    CHECK(der.algebra.dim() == 3);
    for (const auto& op : der.ops) CHECK(leibniz_holds(op, 4));
    CHECK(jacobi_check(der.algebra, JacobiMode::exhaustive).ok());
    CHECK(rank_by_generic_nullity(der.algebra) == 1);
}

TEST_CASE("derivation algebra of the octonions is g2") {
    DerivationAlgebra der = derivation_algebra(8);
    CHECK(der.ops.size() == 14);
    CHECK(der.algebra.dim() == 14);
    for (const auto& op : der.ops) CHECK(leibniz_holds(op, 8));

    JacobiReport jacobi = jacobi_check(der.algebra, JacobiMode::exhaustive);
    CHECK(jacobi.ok());
    CHECK(jacobi.triples_checked == 14 * 13 * 12 / 6);

    // g2 identification: dimension 14, rank 2, nondegenerate Killing form
    CHECK(rank_by_generic_nullity(der.algebra) == 2);
    CHECK(rank(killing_form(der.algebra)) == 14);
}

TEST_CASE("zorn-adapted g2 basis") {
    DerivationAlgebra adapted = g2_zorn_adapted();
    CHECK(adapted.ops.size() == 14);
    for (const auto& op : adapted.ops) CHECK(leibniz_holds(op, 8));
    CHECK(jacobi_check(adapted.algebra, JacobiMode::exhaustive).ok());
    // the first eight fix u_7
    for (int n = 0; n < 8; ++n) {
        Vec image = adapted.ops[n].apply(HurwitzElement::basis(8, 7).to_vec());
        CHECK(vec_is_zero(image));
    }
    // D+(k) and D-(k) move rho+ along epsilon directions (nilpotent weight vectors)
    for (size_t t = 8; t < 14; ++t) {
        Vec image = adapted.ops[t].apply(HurwitzElement::basis(8, 7).to_vec());
        CHECK(!vec_is_zero(image));
    }
}

TEST_CASE("derivations expressed in the spanning basis") {
    DerivationAlgebra der = derivation_algebra(8);
    Rng rng(5);
    HurwitzElement a = random_element(rng, 8), b = random_element(rng, 8);
    Mat d = derivation(a, b);
    auto coords = der.express(d);
    Mat rebuilt(8, 8);
    for (size_t t = 0; t < coords.size(); ++t)
        if (!coords[t].is_zero()) rebuilt = rebuilt + coords[t] * der.ops[t];
    CHECK(rebuilt == d);
}
