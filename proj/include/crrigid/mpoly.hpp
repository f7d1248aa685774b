/*
 * mpoly.hpp
 * ---------
 * Sparse multivariate polynomials over CScalar in N holomorphic variables
 * Z_1..Z_N together with their formal conjugates ~Z_1..~Z_N.  A monomial is
 * an exponent vector of length 2N: slots [0, N) hold the Z-exponents and
 * slots [N, 2N) the conjugate exponents.
 *
 * The term order is graded lexicographic with Z_1 > ... > Z_N > ~Z_1 > ...
 * > ~Z_N, and terms are stored leading-first.  No zero coefficients are
 * ever kept, so equality of term maps is equality of polynomials.
 *
 * Conjugation conjugates each coefficient and swaps the Z_i and ~Z_i
 * exponents; it is an involutive ring morphism.
 *
 * poly_reduce(p, rho) is remainder on division by the single divisor rho.
 * A one-element set is a Groebner basis of the ideal it generates, so the
 * remainder is unique, linear in p, and zero exactly on multiples of rho.
 */
#pragma once

#include "crrigid/scalars.hpp"

#include <map>
#include <vector>

namespace crrigid {

struct Monomial {
    std::vector<int> e;  // length 2N

    explicit Monomial(int slots = 0) : e(slots, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int slots() const { return static_cast<int>(e.size()); }
    int total_degree() const;
    int degree_range(int lo, int hi) const;  // sum of exponents over [lo, hi)
    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;
    Monomial quotient_by(const Monomial& m) const;
    Monomial conj() const;  // swap the two exponent halves
    bool operator==(const Monomial& m) const { return e == m.e; }
};

// True when x comes strictly before y in the canonical (descending) order.
bool monomial_precedes(const Monomial& x, const Monomial& y);

struct MonomialBefore {
    bool operator()(const Monomial& x, const Monomial& y) const { return monomial_precedes(x, y); }
};

class MPoly {
  public:
    using TermMap = std::map<Monomial, CScalar, MonomialBefore>;

    MPoly() = default;
    explicit MPoly(int nvars) : n_(nvars) {}

    static MPoly constant(int nvars, const CScalar& c);
    static MPoly variable(int nvars, int i);       // Z_i, 0-based
    static MPoly conj_variable(int nvars, int i);  // ~Z_i, 0-based

    int nvars() const { return n_; }
    int slots() const { return 2 * n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    const Monomial& leading_monomial() const;
    const CScalar& leading_coefficient() const;
    CScalar constant_term() const;

    int total_degree() const;  // -1 for the zero polynomial
    int holo_degree() const;   // max Z-degree over terms
    int anti_degree() const;   // max ~Z-degree over terms
    bool is_holomorphic() const;

    void add_term(const Monomial& m, const CScalar& c);

    MPoly conj() const;
    MPoly derivative(int slot) const;

    // Substitute images[s] for slot s; images must all share an arity.
    MPoly compose(const std::vector<MPoly>& images) const;

    // Evaluate at a point of C^N: slot i gets p[i], slot N+i gets conj(p[i]).
    CScalar eval(const std::vector<CScalar>& p) const;
    // Evaluate on the complexification: independent values for Z and ~Z.
    CScalar eval2(const std::vector<CScalar>& z, const std::vector<CScalar>& zeta) const;

    MPoly& operator+=(const MPoly& q);
    MPoly& operator-=(const MPoly& q);

    friend MPoly operator+(MPoly p, const MPoly& q) { return p += q; }
    friend MPoly operator-(MPoly p, const MPoly& q) { return p -= q; }
    friend MPoly operator-(const MPoly& p);
    friend MPoly operator*(const MPoly& p, const MPoly& q);
    friend MPoly operator*(const CScalar& c, const MPoly& p);
    friend bool operator==(const MPoly& p, const MPoly& q) { return p.n_ == q.n_ && p.terms_ == q.terms_; }
    friend bool operator!=(const MPoly& p, const MPoly& q) { return !(p == q); }

  private:
    int n_ = 0;
    TermMap terms_;

    void check_arity(const MPoly& q) const;
};

// Remainder of p on division by the single divisor rho (same variable set).
MPoly poly_reduce(const MPoly& p, const MPoly& rho);

// Splits p into its homogeneous components by total degree (Z and ~Z count).
std::map<int, MPoly> homogeneous_parts(const MPoly& p);

// Groups terms by m = deg_Z - deg_~Z (the circle weight).
std::map<int, MPoly> circle_grading(const MPoly& p);

// (p + conj(p)) / 2
MPoly real_part(const MPoly& p);

}  // namespace crrigid
