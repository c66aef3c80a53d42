#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace atlas {

/// Thrown on x/0 so callers can tell it apart from other domain errors.
class division_by_zero : public std::domain_error {
public:
    division_by_zero() : std::domain_error("division by zero") {}
};

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Arbitrary-precision rational, always reduced, denominator > 0.
///
/// Values that fit in 64 bits are kept inline; anything larger is promoted
/// to a heap-allocated GMP rational and demoted back as soon as it fits
/// again, so representation (and hashing) stays canonical.
class Rational {
public:
    Rational() noexcept = default;
    Rational(long long value) : num_(value) {}
    Rational(long long num, long long den) {
        if (den == 0) throw division_by_zero();
        num_ = num;
        den_ = den;
        reduce_small();
    }
    Rational(const Rational& o) : num_(o.num_), den_(o.den_), big_(o.big_ ? new mpq_class(*o.big_) : nullptr) {}
    Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) { o.big_ = nullptr; }
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            delete big_;
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? new mpq_class(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) {
            delete big_;
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_;
            o.big_ = nullptr;
        }
        return *this;
    }
    ~Rational() { delete big_; }

    static Rational from_mpq(const mpq_class& q) {
        Rational r;
        r.big_ = new mpq_class(q);
        r.big_->canonicalize();
        r.maybe_demote();
        return r;
    }

    bool is_zero() const noexcept { return big_ ? sgn(*big_) == 0 : num_ == 0; }
    bool is_one() const noexcept { return big_ ? false : (num_ == 1 && den_ == 1); }
    bool is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }
    int sign() const noexcept { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

    mpq_class to_mpq() const {
        if (big_) return *big_;
        mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
        q.canonicalize();
        return q;
    }

    double to_double() const { return big_ ? big_->get_d() : double(num_) / double(den_); }

    friend Rational operator-(const Rational& a) {
        if (!a.big_) {
            Rational r;
            r.num_ = -a.num_;
            r.den_ = a.den_;
            return r;
        }
        return from_mpq(-*a.big_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            __int128 nn = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
            __int128 dd = i128(a.den_) * b.den_;
            if (fits(nn) && fits(dd)) return make_reduced(nn, dd);
        }
        return from_mpq(a.to_mpq() + b.to_mpq());
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            __int128 nn = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
            __int128 dd = i128(a.den_) * b.den_;
            if (fits(nn) && fits(dd)) return make_reduced(nn, dd);
        }
        return from_mpq(a.to_mpq() - b.to_mpq());
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            __int128 nn = i128(a.num_) * b.num_;
            __int128 dd = i128(a.den_) * b.den_;
            if (fits(nn) && fits(dd)) return make_reduced(nn, dd);
        }
        return from_mpq(a.to_mpq() * b.to_mpq());
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw division_by_zero();
        if (!a.big_ && !b.big_) {
            __int128 nn = i128(a.num_) * b.den_;
            __int128 dd = i128(a.den_) * b.num_;
            if (fits(nn) && fits(dd)) return make_reduced(nn, dd);
        }
        return from_mpq(a.to_mpq() / b.to_mpq());
    }

    Rational& operator+=(const Rational& o) {
        if (!big_ && !o.big_) {
            __int128 nn = i128(num_) * o.den_ + i128(o.num_) * den_;
            __int128 dd = i128(den_) * o.den_;
            if (fits(nn) && fits(dd)) {
                set_reduced(nn, dd);
                return *this;
            }
        }
        return *this = *this + o;
    }
    Rational& operator-=(const Rational& o) {
        if (!big_ && !o.big_) {
            __int128 nn = i128(num_) * o.den_ - i128(o.num_) * den_;
            __int128 dd = i128(den_) * o.den_;
            if (fits(nn) && fits(dd)) {
                set_reduced(nn, dd);
                return *this;
            }
        }
        return *this = *this - o;
    }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    /// this += a*b without an intermediate temporary on the small path.
    void add_mul(const Rational& a, const Rational& b) {
        if (!big_ && !a.big_ && !b.big_) {
            __int128 pn = i128(a.num_) * b.num_;
            __int128 pd = i128(a.den_) * b.den_;
            if (fits(pn) && fits(pd)) {
                __int128 nn = i128(num_) * (long long)pd + pn * den_;
                __int128 dd = i128(den_) * (long long)pd;
                if (fits(nn) && fits(dd)) {
                    set_reduced(nn, dd);
                    return;
                }
            }
        }
        *this += a * b;
    }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // canonical: big implies it does not fit small
    }
    friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
        return a.to_mpq() < b.to_mpq();
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Canonical "p" or "p/q".
    std::string to_string() const {
        if (big_) {
            std::string s = big_->get_num().get_str();
            if (big_->get_den() != 1) s += "/" + big_->get_den().get_str();
            return s;
        }
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) {
                mpz_class n(text);
                return from_mpq(mpq_class(n));
            }
            mpz_class n(text.substr(0, slash)), d(text.substr(slash + 1));
            if (d == 0) throw division_by_zero();
            return from_mpq(mpq_class(n, d));
        } catch (const std::invalid_argument&) {
            throw parse_error("bad rational: " + text);
        }
    }

    size_t hash() const noexcept {
        if (!big_) {
            size_t h = std::hash<long long>{}(num_);
            return h * 1000003u ^ std::hash<long long>{}(den_);
        }
        // Rare path; canonical invariant guarantees big never equals a small.
        size_t h = 1469598103934665603ull;
        for (char c : big_->get_num().get_str()) h = (h ^ size_t(c)) * 1099511628211ull;
        for (char c : big_->get_den().get_str()) h = (h ^ size_t(c)) * 1099511628211ull;
        return h;
    }

private:
    long long num_ = 0;
    long long den_ = 1;
    mpq_class* big_ = nullptr;

    static __int128 i128(long long v) noexcept { return static_cast<__int128>(v); }
    static bool fits(__int128 v) noexcept {
        return v < (__int128)INT64_MAX / 2 && v > (__int128)INT64_MIN / 2;
    }
    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) noexcept {
        if (a <= UINT64_MAX && b <= UINT64_MAX) return std::gcd(uint64_t(a), uint64_t(b));
        while (b) {
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    static Rational make_reduced(__int128 nn, __int128 dd) {
        Rational r;
        r.set_reduced(nn, dd);
        return r;
    }
    void set_reduced(__int128 nn, __int128 dd) {
        if (dd < 0) {
            nn = -nn;
            dd = -dd;
        }
        unsigned __int128 an = nn < 0 ? (unsigned __int128)(-nn) : (unsigned __int128)nn;
        unsigned __int128 g = gcd128(an, (unsigned __int128)dd);
        if (g > 1) {
            nn /= (__int128)g;
            dd /= (__int128)g;
        }
        num_ = (long long)nn;
        den_ = (long long)dd;
    }
    void reduce_small() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
    void maybe_demote() {
        if (!big_) return;
        if (big_->get_num().fits_slong_p() && big_->get_den().fits_slong_p()) {
            num_ = big_->get_num().get_si();
            den_ = big_->get_den().get_si();
            delete big_;
            big_ = nullptr;
        }
    }
};

}  // namespace atlas
