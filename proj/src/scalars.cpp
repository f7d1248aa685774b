#include "crrigid/scalars.hpp"

#include <sstream>

namespace crrigid {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    return Rational(num, den);
}

std::string rational_string(const Rational& q) {
    std::ostringstream os;
    os << numerator_of(q);
    if (denominator_of(q) != 1) os << "/" << denominator_of(q);
    return os.str();
}

std::int64_t merge_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.d == 0) return y.d;
    if (y.d == 0 || y.d == x.d) return x.d;
    throw std::invalid_argument("QuadExt: mixing distinct radicands " + std::to_string(x.d) + " and " +
                                std::to_string(y.d));
}

int QuadExt::sign() const {
    if (b == 0) return sign_of(a);
    if (a == 0) return sign_of(b);
    if (sign_of(a) == sign_of(b)) return sign_of(a);
    // a, b of opposite sign: compare a^2 with d*b^2.
    Rational lhs = a * a;
    Rational rhs = Rational(d) * b * b;
    if (lhs == rhs) throw std::logic_error("QuadExt: sqrt(d) rational, d not square-free");
    return lhs > rhs ? sign_of(a) : sign_of(b);
}

std::string QuadExt::str() const {
    if (b == 0) return rational_string(a);
    std::ostringstream os;
    if (a != 0) os << rational_string(a) << (b > 0 ? "+" : "");
    if (b == 1)
        os << "sqrt";
    else if (b == -1)
        os << "-sqrt";
    else
        os << rational_string(b) << "*sqrt";
    return os.str();
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b, merge_radicand(x, y));
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b, merge_radicand(x, y));
}

QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a, -x.b, x.d); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    std::int64_t d = merge_radicand(x, y);
    return QuadExt(x.a * y.a + Rational(d) * x.b * y.b, x.a * y.b + x.b * y.a, d);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
    if (y.b == 0) return QuadExt(x.a / y.a, x.b / y.a, x.d);
    // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - d*b^2)
    Rational n = y.a * y.a - Rational(y.d) * y.b * y.b;
    if (n == 0) throw std::logic_error("QuadExt: zero norm for nonzero value (d not square-free?)");
    return x * QuadExt(y.a / n, -y.b / n, y.d);
}

bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a != y.a || x.b != y.b) return false;
    if (x.b == 0) return true;
    return x.d == y.d;
}

CScalar CScalar::conj() const { return CScalar(re, -im); }

QuadExt CScalar::norm2() const { return re * re + im * im; }

std::string CScalar::str() const {
    if (im.is_zero()) return re.str();
    std::ostringstream os;
    if (!re.is_zero()) os << re.str() << "+";
    os << "(" << im.str() << ")*i";
    return os.str();
}

CScalar operator+(const CScalar& x, const CScalar& y) { return CScalar(x.re + y.re, x.im + y.im); }

CScalar operator-(const CScalar& x, const CScalar& y) { return CScalar(x.re - y.re, x.im - y.im); }

CScalar operator-(const CScalar& x) { return CScalar(-x.re, -x.im); }

CScalar operator*(const CScalar& x, const CScalar& y) {
    return CScalar(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
}

CScalar operator/(const CScalar& x, const CScalar& y) {
    QuadExt n = y.norm2();
    if (n.is_zero()) throw std::domain_error("CScalar: division by zero");
    CScalar c = x * y.conj();
    return CScalar(c.re / n, c.im / n);
}

bool operator==(const CScalar& x, const CScalar& y) { return x.re == y.re && x.im == y.im; }

}  // namespace crrigid
