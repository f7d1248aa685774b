/*
 * scalars.hpp
 * -----------
 * Exact coefficient tower used throughout the library:
 *
 *   Rational           arbitrary-precision rational numbers
 *   QuadExt            a + b*sqrt(d), a real quadratic extension of Q
 *   CScalar            re + im*I with re, im in QuadExt
 *
 * All arithmetic is exact.  A QuadExt value carries its radicand d; values
 * with b == 0 are normalized to d == 0 so that plain rationals mix freely
 * with elements of any fixed extension.  Mixing two different nonzero
 * radicands is an error.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crrigid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

Rational parse_rational(const std::string& text);
std::string rational_string(const Rational& q);

// a + b*sqrt(d); invariant: b == 0  =>  d == 0.
struct QuadExt {
    Rational a;
    Rational b;
    std::int64_t d = 0;

    QuadExt() = default;
    QuadExt(Rational ra) : a(std::move(ra)) {}
    QuadExt(long v) : a(v) {}
    QuadExt(Rational ra, Rational rb, std::int64_t rad) : a(std::move(ra)), b(std::move(rb)), d(rad) {
        normalize();
    }

    void normalize() {
        if (b == 0) d = 0;
        if (b != 0 && d <= 0) throw std::invalid_argument("QuadExt: radicand must be positive");
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    static QuadExt sqrt_d(std::int64_t rad) { return QuadExt(Rational(0), Rational(1), rad); }

    QuadExt conj_sqrt() const { return QuadExt(a, -b, d); }  // a - b*sqrt(d)

    // Exact sign in the real embedding with sqrt(d) > 0.
    int sign() const;

    std::string str() const;
};

std::int64_t merge_radicand(const QuadExt& x, const QuadExt& y);

QuadExt operator+(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x, const QuadExt& y);
QuadExt operator-(const QuadExt& x);
QuadExt operator*(const QuadExt& x, const QuadExt& y);
QuadExt operator/(const QuadExt& x, const QuadExt& y);
bool operator==(const QuadExt& x, const QuadExt& y);
inline bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

struct CScalar {
    QuadExt re;
    QuadExt im;

    CScalar() = default;
    CScalar(QuadExt r) : re(std::move(r)) {}
    CScalar(long v) : re(Rational(v)) {}
    CScalar(Rational r) : re(QuadExt(std::move(r))) {}
    CScalar(QuadExt r, QuadExt i) : re(std::move(r)), im(std::move(i)) {}

    static CScalar unit_i() { return CScalar(QuadExt(Rational(0)), QuadExt(Rational(1))); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    CScalar conj() const;

    // |x|^2 = re^2 + im^2, always a QuadExt (real and >= 0).
    QuadExt norm2() const;

    std::string str() const;
};

CScalar operator+(const CScalar& x, const CScalar& y);
CScalar operator-(const CScalar& x, const CScalar& y);
CScalar operator-(const CScalar& x);
CScalar operator*(const CScalar& x, const CScalar& y);
CScalar operator/(const CScalar& x, const CScalar& y);
bool operator==(const CScalar& x, const CScalar& y);
inline bool operator!=(const CScalar& x, const CScalar& y) { return !(x == y); }

}  // namespace crrigid
