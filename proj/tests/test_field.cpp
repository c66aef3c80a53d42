#include <cmath>

#include <doctest.h>

#include "atlas/field.hpp"
#include "test_util.hpp"

using atlas::FieldScalar;
using atlas::Rational;
using atlas_test::Rng;

namespace {
FieldScalar frac(long long n, long long d) { return FieldScalar(Rational(n, d)); }
}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK((Rational(7, 2) / Rational(7, 2)).is_one());
    CHECK_THROWS_AS(Rational(1) / Rational(0), atlas::division_by_zero);
    CHECK(Rational::parse("-22/33") == Rational(-2, 3));
    CHECK(Rational(-2, 3).to_string() == "-2/3");
    CHECK(Rational(5).to_string() == "5");
}

TEST_CASE("rational big-value promotion and demotion") {
    Rational big(1);
    for (int i = 0; i < 5; ++i) big *= Rational(3037000499LL);  // beyond 64-bit after a few
    Rational back = big;
    for (int i = 0; i < 5; ++i) back /= Rational(3037000499LL);
    CHECK(back.is_one());
    CHECK(back.hash() == Rational(1).hash());
    Rational third = big / (big * Rational(3));
    CHECK(third == Rational(1, 3));
}

TEST_CASE("basis multiplication") {
    CHECK(FieldScalar::sqrt2() * FieldScalar::sqrt3() == FieldScalar::sqrt6());
    CHECK(FieldScalar::sqrt2() * FieldScalar::sqrt2() == FieldScalar(2));
    CHECK(FieldScalar::sqrt3() * FieldScalar::sqrt3() == FieldScalar(3));
    CHECK(FieldScalar::sqrt6() * FieldScalar::sqrt6() == FieldScalar(6));
    CHECK(FieldScalar::sqrt2() * FieldScalar::sqrt6() == FieldScalar(2) * FieldScalar::sqrt3());
    CHECK(FieldScalar::imaginary_unit() * FieldScalar::imaginary_unit() == -FieldScalar::one());
}

TEST_CASE("conjugate product (1+r2)(1-r2) = -1") {
    FieldScalar x = FieldScalar::one() + FieldScalar::sqrt2();
    FieldScalar y = FieldScalar::one() - FieldScalar::sqrt2();
    CHECK(x * y == -FieldScalar::one());
}

TEST_CASE("(r2/2)^2 = 1/2") {
    // oracle: (1/2)^2 * 2 = 1/2 by symbolic expansion
    FieldScalar half_sqrt2 = frac(1, 2) * FieldScalar::sqrt2();
    CHECK(half_sqrt2 * half_sqrt2 == frac(1, 2));
}

TEST_CASE("complex conjugation") {
    CHECK(FieldScalar::conj_i(FieldScalar::imaginary_unit()) == -FieldScalar::imaginary_unit());
    CHECK(FieldScalar::conj_i(FieldScalar::sqrt2()) == FieldScalar::sqrt2());
    FieldScalar x = FieldScalar::one() + FieldScalar::imaginary_unit() * FieldScalar::sqrt3();
    FieldScalar xb = FieldScalar::one() - FieldScalar::imaginary_unit() * FieldScalar::sqrt3();
    CHECK(FieldScalar::conj_i(x) == xb);
    // involution and multiplicativity on random samples
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        FieldScalar a = atlas_test::random_scalar(rng), b = atlas_test::random_scalar(rng);
        CHECK(FieldScalar::conj_i(FieldScalar::conj_i(a)) == a);
        CHECK(FieldScalar::conj_i(a * b) == FieldScalar::conj_i(a) * FieldScalar::conj_i(b));
    }
}

TEST_CASE("to_double") {
    CHECK(std::abs(FieldScalar::sqrt2().to_double().first - 1.41421356237309504) < 1e-12);
    CHECK(FieldScalar::zero().to_double().first == 0.0);
    CHECK(std::abs(frac(1, 3).to_double().first - 1.0 / 3.0) < 1e-12);
    CHECK(FieldScalar::imaginary_unit().to_double().second == 1.0);
}

TEST_CASE("field axioms on random samples") {
    Rng rng(42);
    for (int t = 0; t < 100; ++t) {
        FieldScalar a = atlas_test::random_scalar(rng);
        FieldScalar b = atlas_test::random_scalar(rng);
        FieldScalar c = atlas_test::random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == FieldScalar::one());
            CHECK(b / a * a == b);
        }
    }
    CHECK_THROWS_AS(FieldScalar::one() / FieldScalar::zero(), atlas::division_by_zero);
}

TEST_CASE("canonical uniqueness: equality iff all coordinates equal") {
    FieldScalar x = frac(1, 2) + frac(3, 4) * FieldScalar::sqrt2();
    FieldScalar y = frac(2, 4) + frac(6, 8) * FieldScalar::sqrt2();
    CHECK(x == y);
    CHECK(x.hash() == y.hash());
    FieldScalar z = x + frac(1, 1000000);
    CHECK(x != z);
}

TEST_CASE("exact real sign") {
    CHECK((FieldScalar::sqrt2() - frac(141421356, 100000000)).real_sign() > 0);
    CHECK((FieldScalar::sqrt2() - frac(141421357, 100000000)).real_sign() < 0);
    CHECK((FieldScalar::sqrt6() - FieldScalar::sqrt2() * FieldScalar::sqrt3()).real_sign() == 0);
    // 1 + r2 - r3 - r6/2 is positive: 1 + 1.414 - 1.732 - 1.224 < 0 actually
    FieldScalar v = FieldScalar::one() + FieldScalar::sqrt2() - FieldScalar::sqrt3() - frac(1, 2) * FieldScalar::sqrt6();
    double approx = v.to_double().first;
    CHECK(v.real_sign() == (approx > 0 ? 1 : -1));
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        FieldScalar a;
        for (int k = 0; k < 4; ++k) a.coeff(k) = atlas_test::random_rational(rng);
        double d = a.to_double().first;
        if (std::abs(d) > 1e-9) CHECK(a.real_sign() == (d > 0 ? 1 : -1));
    }
}

TEST_CASE("hybrid rational agrees with a pure GMP oracle under growth") {
    // random expression walk crossing the int64 promotion boundary both ways
    Rng rng(2024);
    Rational value(1);
    mpq_class oracle(1);
    for (int step = 0; step < 4000; ++step) {
        long long n = rng.range(-1, 1) == 0 ? rng.range(-5, 5) : rng.range(-3037000499LL, 3037000499LL);
        long long d = rng.range(1, 97);
        Rational operand(n, d);
        mpq_class oq(mpz_class((long)n), mpz_class((long)d));
        oq.canonicalize();
        switch (rng.next() % 4) {
            case 0: value += operand; oracle += oq; break;
            case 1: value -= operand; oracle -= oq; break;
            case 2: value *= operand; oracle *= oq; break;
            default:
                if (!operand.is_zero()) {
                    value /= operand;
                    oracle /= oq;
                }
                break;
        }
        if ((step & 255) == 0) {
            // keep magnitudes bounded so both paths stay exercised
            if (value > Rational(1000000) || value < Rational(-1000000)) {
                value = Rational(rng.range(-9, 9), rng.range(1, 9));
                oracle = value.to_mpq();
            }
        }
        REQUIRE(value.to_mpq() == oracle);
        REQUIRE(value == Rational::from_mpq(oracle));
        REQUIRE(value.hash() == Rational::from_mpq(oracle).hash());
    }
}

TEST_CASE("field inverses under large coefficients") {
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
        FieldScalar x;
        for (int k = 0; k < 8; ++k) x.coeff(k) = Rational(rng.range(-1000003, 1000003), rng.range(1, 991));
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == FieldScalar::one());
    }
}

TEST_CASE("textual format round-trip") {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        FieldScalar a = atlas_test::random_scalar(rng, 4);
        CHECK(FieldScalar::parse(a.to_string()) == a);
    }
    CHECK(FieldScalar::zero().to_string() == "0");
    CHECK(FieldScalar::parse("0") == FieldScalar::zero());
    CHECK(FieldScalar::parse("1/2+1/2*r2") == frac(1, 2) + frac(1, 2) * FieldScalar::sqrt2());
    CHECK(FieldScalar::parse("-r6") == -FieldScalar::sqrt6());
    CHECK(FieldScalar::parse("i*(1+r3)") ==
          FieldScalar::imaginary_unit() * (FieldScalar::one() + FieldScalar::sqrt3()));
    CHECK(FieldScalar::parse("i") == FieldScalar::imaginary_unit());
    CHECK_THROWS_AS(FieldScalar::parse("1+"), atlas::parse_error);
    CHECK_THROWS_AS(FieldScalar::parse("r7"), atlas::parse_error);
}
