#include "crrigid/printing.hpp"

#include <sstream>

namespace crrigid {

namespace {

// a + b*sqrt as an expression string (inner signs allowed)
std::string quad_expr(const QuadExt& q) {
    std::ostringstream os;
    bool have = false;
    if (q.a != 0) {
        os << rational_string(q.a);
        have = true;
    }
    if (q.b != 0) {
        Rational ab = q.b < 0 ? Rational(-q.b) : q.b;
        if (have) os << (q.b > 0 ? "+" : "-");
        else if (q.b < 0) os << "-";
        if (ab != 1) os << rational_string(ab) << "*";
        os << "sqrt";
    }
    if (!have && q.b == 0) os << "0";
    return os.str();
}

// factor sequence for a QuadExt whose leading component is positive
void quad_factors(const QuadExt& q, std::vector<std::string>& out) {
    if (q.b == 0) {
        if (q.a != 1) out.push_back(rational_string(q.a));
    } else if (q.a == 0) {
        if (q.b != 1) out.push_back(rational_string(q.b));
        out.push_back("sqrt");
    } else {
        out.push_back("(" + quad_expr(q) + ")");
    }
}

int leading_sign(const CScalar& c) {
    if (c.re.a != 0) return sign_of(c.re.a);
    if (c.re.b != 0) return sign_of(c.re.b);
    if (c.im.a != 0) return sign_of(c.im.a);
    if (c.im.b != 0) return sign_of(c.im.b);
    return 0;
}

// im * i as a term string, im assumed leading-positive
std::string imag_term(const QuadExt& im) {
    std::vector<std::string> fs;
    quad_factors(im, fs);
    fs.push_back("i");
    std::string s = fs[0];
    for (size_t k = 1; k < fs.size(); ++k) s += "*" + fs[k];
    return s;
}

// factor sequence for a coefficient with positive leading component
std::vector<std::string> coeff_factors(const CScalar& c) {
    std::vector<std::string> out;
    if (c.im.is_zero()) {
        quad_factors(c.re, out);
        return out;
    }
    if (c.re.is_zero()) {
        quad_factors(c.im, out);
        out.push_back("i");
        return out;
    }
    // sign of the imaginary part's leading component decides the joiner
    int lead = c.im.a != 0 ? sign_of(c.im.a) : sign_of(c.im.b);
    QuadExt mag = lead < 0 ? -c.im : c.im;
    out.push_back("(" + quad_expr(c.re) + (lead < 0 ? "-" : "+") + imag_term(mag) + ")");
    return out;
}

std::string monomial_factors(const Monomial& m, const std::vector<std::string>& vars) {
    std::ostringstream os;
    int n = static_cast<int>(vars.size());
    bool first = true;
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < n; ++j) {
            int e = m.e[pass * n + j];
            if (e == 0) continue;
            if (!first) os << "*";
            first = false;
            if (pass == 1) os << "~";
            os << vars[j];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace

std::string quadext_string(const QuadExt& q) { return quad_expr(q); }

std::string scalar_string(const CScalar& c) {
    if (c.is_zero()) return "0";
    int sgn = leading_sign(c);
    CScalar mag = sgn < 0 ? -c : c;
    std::vector<std::string> fs = coeff_factors(mag);
    std::string body;
    if (fs.empty()) body = "1";
    else {
        body = fs[0];
        for (size_t k = 1; k < fs.size(); ++k) body += "*" + fs[k];
    }
    return sgn < 0 ? "-" + body : body;
}

std::string poly_string(const MPoly& p, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != p.nvars())
        throw std::invalid_argument("poly_string: variable list arity mismatch");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        int sgn = leading_sign(c);
        CScalar mag = sgn < 0 ? -c : c;
        std::vector<std::string> fs = coeff_factors(mag);
        std::string mono = monomial_factors(m, vars);
        if (!mono.empty()) fs.push_back(mono);
        std::string body;
        if (fs.empty()) body = "1";
        else {
            body = fs[0];
            for (size_t k = 1; k < fs.size(); ++k) body += "*" + fs[k];
        }
        if (first) {
            if (sgn < 0) os << "-";
            os << body;
            first = false;
        } else {
            os << (sgn < 0 ? " - " : " + ") << body;
        }
    }
    return os.str();
}

}  // namespace crrigid
