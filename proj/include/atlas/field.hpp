#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "atlas/rational.hpp"

namespace atlas {

/// An element of the number field Q(i, sqrt2, sqrt3), stored as eight exact
/// rational coordinates on the basis {1, r2, r3, r6} x {1, i} where
/// r2 = sqrt(2), r3 = sqrt(3), r6 = sqrt(6):
///
///   a + b*r2 + c*r3 + d*r6 + i*(e + f*r2 + g*r3 + h*r6)
///
/// The basis is linearly independent over Q, so the representation is unique
/// and equality is componentwise. All arithmetic is exact; doubles appear
/// only in to_double() for rendering.
class FieldScalar {
public:
    FieldScalar() = default;
    FieldScalar(long long v) { c_[0] = Rational(v); }
    FieldScalar(const Rational& v) { c_[0] = v; }

    static FieldScalar zero() { return FieldScalar(); }
    static FieldScalar one() { return FieldScalar(1); }
    static FieldScalar imaginary_unit() { return unit(4); }
    static FieldScalar sqrt2() { return unit(1); }
    static FieldScalar sqrt3() { return unit(2); }
    static FieldScalar sqrt6() { return unit(3); }
    static FieldScalar of_ratio(long long num, long long den) { return FieldScalar(Rational(num, den)); }

    /// Coefficient access in the order a,b,c,d,e,f,g,h above.
    const Rational& coeff(int index) const { return c_[index]; }
    Rational& coeff(int index) { return c_[index]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_real() const { return c_[4].is_zero() && c_[5].is_zero() && c_[6].is_zero() && c_[7].is_zero(); }
    bool is_rational() const {
        for (int i = 1; i < 8; ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    /// The rational part; exact value only when is_rational().
    const Rational& rational_part() const { return c_[0]; }

    friend bool operator==(const FieldScalar& x, const FieldScalar& y) { return x.c_ == y.c_; }
    friend bool operator!=(const FieldScalar& x, const FieldScalar& y) { return !(x == y); }

    friend FieldScalar operator-(const FieldScalar& x) {
        FieldScalar r;
        for (int i = 0; i < 8; ++i) r.c_[i] = -x.c_[i];
        return r;
    }
    friend FieldScalar operator+(const FieldScalar& x, const FieldScalar& y) {
        FieldScalar r;
        for (int i = 0; i < 8; ++i) r.c_[i] = x.c_[i] + y.c_[i];
        return r;
    }
    friend FieldScalar operator-(const FieldScalar& x, const FieldScalar& y) {
        FieldScalar r;
        for (int i = 0; i < 8; ++i) r.c_[i] = x.c_[i] - y.c_[i];
        return r;
    }
    FieldScalar& operator+=(const FieldScalar& y) {
        for (int i = 0; i < 8; ++i) c_[i] += y.c_[i];
        return *this;
    }
    FieldScalar& operator-=(const FieldScalar& y) {
        for (int i = 0; i < 8; ++i) c_[i] -= y.c_[i];
        return *this;
    }

    friend FieldScalar operator*(const FieldScalar& x, const FieldScalar& y) {
        // (R1 + i I1)(R2 + i I2) = (R1 R2 - I1 I2) + i (R1 I2 + I1 R2)
        FieldScalar r;
        mul4_acc(r.c_, 0, x.c_, 0, y.c_, 0, false);
        mul4_acc(r.c_, 0, x.c_, 4, y.c_, 4, true);
        mul4_acc(r.c_, 4, x.c_, 0, y.c_, 4, false);
        mul4_acc(r.c_, 4, x.c_, 4, y.c_, 0, false);
        return r;
    }
    FieldScalar& operator*=(const FieldScalar& y) { return *this = *this * y; }

    /// this += x*y, skipping zero components.
    void add_mul(const FieldScalar& x, const FieldScalar& y) {
        mul4_acc(c_, 0, x.c_, 0, y.c_, 0, false);
        mul4_acc(c_, 0, x.c_, 4, y.c_, 4, true);
        mul4_acc(c_, 4, x.c_, 0, y.c_, 4, false);
        mul4_acc(c_, 4, x.c_, 4, y.c_, 0, false);
    }

    friend FieldScalar operator/(const FieldScalar& x, const FieldScalar& y) { return x * y.inverse(); }
    FieldScalar& operator/=(const FieldScalar& y) { return *this = *this / y; }

    FieldScalar inverse() const {
        if (is_zero()) throw division_by_zero();
        // Rationalize stepwise: kill i, then sqrt3 (with sqrt6), then sqrt2.
        FieldScalar ci = conj_i(*this);
        FieldScalar y = *this * ci;         // real
        FieldScalar c3 = conj_sqrt3(y);
        FieldScalar z = y * c3;             // in Q(sqrt2)
        FieldScalar c2 = conj_sqrt2(z);
        FieldScalar w = z * c2;             // rational
        FieldScalar numer = ci * c3 * c2;
        FieldScalar r;
        Rational inv_w = Rational(1) / w.c_[0];
        for (int i = 0; i < 8; ++i) r.c_[i] = numer.c_[i] * inv_w;
        return r;
    }

    /// Complex conjugation i -> -i. Distinct from the octonionic conjugation
    /// in the Hurwitz algebras, which never touches this i.
    static FieldScalar conj_i(const FieldScalar& x) {
        FieldScalar r = x;
        for (int i = 4; i < 8; ++i) r.c_[i] = -r.c_[i];
        return r;
    }
    /// Field automorphism sqrt2 -> -sqrt2 (negates the r2 and r6 coordinates).
    static FieldScalar conj_sqrt2(const FieldScalar& x) {
        FieldScalar r = x;
        r.c_[1] = -r.c_[1];
        r.c_[3] = -r.c_[3];
        r.c_[5] = -r.c_[5];
        r.c_[7] = -r.c_[7];
        return r;
    }
    /// Field automorphism sqrt3 -> -sqrt3 (negates the r3 and r6 coordinates).
    static FieldScalar conj_sqrt3(const FieldScalar& x) {
        FieldScalar r = x;
        r.c_[2] = -r.c_[2];
        r.c_[3] = -r.c_[3];
        r.c_[6] = -r.c_[6];
        r.c_[7] = -r.c_[7];
        return r;
    }

    FieldScalar real_part() const {
        FieldScalar r;
        for (int i = 0; i < 4; ++i) r.c_[i] = c_[i];
        return r;
    }
    FieldScalar imag_part() const {
        FieldScalar r;
        for (int i = 0; i < 4; ++i) r.c_[i] = c_[i + 4];
        return r;
    }

    /// Exact sign of a purely real element (-1, 0, +1). No floating point:
    /// signs of p + q*sqrt(m) reduce to signs of p, q and p^2 - m q^2.
    int real_sign() const {
        if (!is_real()) throw std::domain_error("real_sign on non-real scalar");
        return sign_q3(c_[0], c_[1], c_[2], c_[3]);
    }

    /// Exact total order on real elements.
    static bool real_less(const FieldScalar& x, const FieldScalar& y) { return (x - y).real_sign() < 0; }

    /// Lexicographic order on the 8 rational coordinates; the canonical
    /// (ordering-only) comparison used to sort roots deterministically.
    static bool tuple_less(const FieldScalar& x, const FieldScalar& y) {
        for (int i = 0; i < 8; ++i) {
            if (x.c_[i] < y.c_[i]) return true;
            if (y.c_[i] < x.c_[i]) return false;
        }
        return false;
    }

    /// (real, imaginary) double approximation; rendering only.
    std::pair<double, double> to_double() const {
        static const double s2 = 1.4142135623730950488, s3 = 1.7320508075688772935, s6 = 2.4494897427831780982;
        double re = c_[0].to_double() + c_[1].to_double() * s2 + c_[2].to_double() * s3 + c_[3].to_double() * s6;
        double im = c_[4].to_double() + c_[5].to_double() * s2 + c_[6].to_double() * s3 + c_[7].to_double() * s6;
        return {re, im};
    }

    std::string to_string() const;
    static FieldScalar parse(const std::string& text);

    size_t hash() const noexcept {
        size_t h = 1469598103934665603ull;
        for (const auto& x : c_) h = (h ^ x.hash()) * 1099511628211ull;
        return h;
    }

private:
    // order: [0]=1, [1]=r2, [2]=r3, [3]=r6, then the same four times i
    std::array<Rational, 8> c_{};

    static FieldScalar unit(int index) {
        FieldScalar r;
        r.c_[index] = Rational(1);
        return r;
    }

    // out[o..o+3] += (x[xo..xo+3]) * (y[yo..yo+3]) in the basis {1,r2,r3,r6},
    // negated when minus is set. Zero components are skipped.
    static void mul4_acc(std::array<Rational, 8>& out, int o, const std::array<Rational, 8>& x, int xo,
                         const std::array<Rational, 8>& y, int yo, bool minus) {
        static constexpr int target[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static constexpr int scale[4][4] = {{1, 1, 1, 1}, {1, 2, 1, 2}, {1, 1, 3, 3}, {1, 2, 3, 6}};
        for (int i = 0; i < 4; ++i) {
            const Rational& xi = x[xo + i];
            if (xi.is_zero()) continue;
            for (int j = 0; j < 4; ++j) {
                const Rational& yj = y[yo + j];
                if (yj.is_zero()) continue;
                Rational p = xi * yj;
                int s = scale[i][j];
                if (s != 1) p *= Rational(s);
                if (minus)
                    out[o + target[i][j]] -= p;
                else
                    out[o + target[i][j]] += p;
            }
        }
    }

    static int sign_rat(const Rational& p) { return p.sign(); }
    // sign of p + q*sqrt2, p,q rational
    static int sign_q2(const Rational& p, const Rational& q) {
        if (q.is_zero()) return p.sign();
        if (p.is_zero()) return q.sign();
        int sp = p.sign(), sq = q.sign();
        if (sp == sq) return sp;
        Rational diff = p * p - Rational(2) * q * q;  // nonzero: sqrt2 irrational
        return sp * diff.sign();
    }
    // sign of (a + b*sqrt2) + (c + d*sqrt2)*sqrt3
    static int sign_q3(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
        bool qzero = c.is_zero() && d.is_zero();
        bool pzero = a.is_zero() && b.is_zero();
        if (qzero) return sign_q2(a, b);
        if (pzero) return sign_q2(c, d);
        int sp = sign_q2(a, b), sq = sign_q2(c, d);
        if (sp == sq) return sp;
        // compare P^2 with 3 Q^2 inside Q(sqrt2)
        Rational p0 = a * a + Rational(2) * b * b, p1 = Rational(2) * a * b;
        Rational q0 = c * c + Rational(2) * d * d, q1 = Rational(2) * c * d;
        Rational d0 = p0 - Rational(3) * q0, d1 = p1 - Rational(3) * q1;
        return sp * sign_q2(d0, d1);
    }
};

inline FieldScalar operator*(const Rational& a, const FieldScalar& x) { return FieldScalar(a) * x; }

}  // namespace atlas
