#include "doctest.h"
#include "test_helpers.hpp"

#include "crrigid/linsys.hpp"

using namespace crtest;

TEST_CASE("rational canonical form") {
    Rational q = Rational(6) / Rational(-8);
    CHECK(numerator_of(q) == -3);
    CHECK(denominator_of(q) == 4);  // denominator positive, gcd reduced
    CHECK(Rational(0, 5) == Rational(0, 1));
    CHECK(parse_rational("21/14") == Rational(3, 2));
}

TEST_CASE("quadext arithmetic and norm") {
    QuadExt s2 = QuadExt::sqrt_d(2);
    CHECK(s2 * s2 == QuadExt(Rational(2)));
    QuadExt x(Q(1), Q(2), 2);  // 1 + 2 sqrt2
    QuadExt n = x * x.conj_sqrt();
    CHECK(n.is_rational());
    CHECK(n == QuadExt(Q(-7)));  // 1 - 8
    CHECK((x / x) == QuadExt(Q(1)));
    CHECK(x.sign() == 1);
    CHECK(QuadExt(Q(3), Q(-2), 2).sign() == 1);   // 3 - 2 sqrt2 > 0
    CHECK(QuadExt(Q(-3), Q(2), 2).sign() == -1);  // symmetric
    CHECK(QuadExt(Q(2), Q(-2), 2).sign() == -1);  // 2 - 2 sqrt2 < 0
}

TEST_CASE("quadext refuses mixed radicands") {
    QuadExt a = QuadExt::sqrt_d(2), b = QuadExt::sqrt_d(3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK((QuadExt(Q(1)) + a).d == 2);  // rationals mix freely
}

TEST_CASE("cscalar conjugation and modulus") {
    CScalar x(QuadExt(Q(1), Q(1), 2), QuadExt(Q(2)));
    CHECK(x.conj().re == x.re);
    CHECK(x.conj().im == -x.im);
    QuadExt n = x.norm2();
    CHECK(n.sign() == 1);
    CHECK(n == x.re * x.re + x.im * x.im);
    CScalar i = CScalar::unit_i();
    CHECK(i * i == CScalar(-1L));
    CHECK((x / x) == CScalar(1L));
}

TEST_CASE("graded lex order and leading monomial of the sphere") {
    Hypersurface S = sphere(2);
    Monomial zzbar(4);
    zzbar.e = {1, 0, 1, 0};
    CHECK(S.rho().leading_monomial() == zzbar);
}

TEST_CASE("poly_reduce worked examples") {
    MPoly rho = sphere(2).rho();
    SUBCASE("multiple of the divisor reduces to zero") {
        MPoly p = rho * pzw("z + 1");
        CHECK(poly_reduce(p, rho).is_zero());
    }
    SUBCASE("already reduced polynomial is returned unchanged") {
        MPoly p = pzw("w*~w");
        CHECK(poly_reduce(p, rho) == p);
    }
    SUBCASE("z^2 ~z + z w ~w - z is z times rho") {
        MPoly p = pzw("z^2*~z + z*w*~w - z");
        CHECK(poly_reduce(p, rho).is_zero());
    }
    SUBCASE("arity mismatch is an error") {
        CHECK_THROWS_AS(poly_reduce(sphere(3).rho(), rho), std::invalid_argument);
    }
    SUBCASE("zero input reduces to zero") { CHECK(poly_reduce(MPoly(2), rho).is_zero()); }
}

TEST_CASE("kernel worked examples") {
    SUBCASE("dependent rational rows") {
        LinearSystem sys;
        sys.col_labels = {"x", "y"};
        sys.rows = {{QuadExt(Q(1)), QuadExt(Q(1))}, {QuadExt(Q(2)), QuadExt(Q(2))}};
        KernelResult k = kernel(sys);
        CHECK(k.basis.size() == 1);
        CHECK(k.basis[0][0] == QuadExt(Q(1)));  // normalized leading entry
        CHECK(k.basis[0][1] == QuadExt(Q(-1)));
    }
    SUBCASE("identity has trivial kernel") {
        LinearSystem sys;
        sys.col_labels = {"a", "b", "c"};
        sys.rows.assign(3, QVec(3, QuadExt(Q(0))));
        for (int i = 0; i < 3; ++i) sys.rows[i][i] = QuadExt(Q(1));
        CHECK(kernel(sys).basis.empty());
    }
    SUBCASE("proportional rows over Q(sqrt2)") {
        LinearSystem sys;
        sys.col_labels = {"x", "y"};
        sys.rows = {{QuadExt(Q(1)), QuadExt::sqrt_d(2)}, {QuadExt::sqrt_d(2), QuadExt(Q(2))}};
        KernelResult k = kernel(sys);
        CHECK(k.basis.size() == 1);
        // A v = 0 exactly on re-substitution
        for (const auto& row : sys.rows) {
            QuadExt acc = row[0] * k.basis[0][0] + row[1] * k.basis[0][1];
            CHECK(acc.is_zero());
        }
    }
    SUBCASE("inconsistent solve is distinct from zero kernel") {
        LinearSystem sys;
        sys.col_labels = {"x"};
        sys.rows = {{QuadExt(Q(1))}, {QuadExt(Q(1))}};
        sys.rhs = {QuadExt(Q(1)), QuadExt(Q(2))};
        FullSolveResult r = solve(sys);
        CHECK(!r.consistent);
        CHECK(!r.residual.empty());

        sys.rhs = {QuadExt(Q(3)), QuadExt(Q(3))};
        FullSolveResult ok = solve(sys);
        CHECK(ok.consistent);
        CHECK(ok.kernel.empty());
        CHECK(ok.particular[0] == QuadExt(Q(3)));
    }
}

TEST_CASE("homogeneous parts worked examples") {
    SUBCASE("constant plus quadratic") {
        auto parts = homogeneous_parts(pzw("z^2 + z*~w + 1"));
        CHECK(parts.size() == 2);
        CHECK(parts[0] == pzw("1"));
        CHECK(parts[2] == pzw("z^2 + z*~w"));
    }
    SUBCASE("zero polynomial") { CHECK(homogeneous_parts(MPoly(2)).empty()); }
    SUBCASE("sphere defining polynomial") {
        auto parts = homogeneous_parts(sphere(2).rho());
        CHECK(parts[0] == pzw("-1"));
        CHECK(parts[2] == pzw("z*~z + w*~w"));
    }
}

TEST_CASE("circle grading worked examples") {
    SUBCASE("weight one") {
        auto g = circle_grading(pzw("z^2*~z"));
        CHECK(g.size() == 1);
        CHECK(g[1] == pzw("z^2*~z"));
    }
    SUBCASE("real polynomial sits at weight zero") {
        auto g = circle_grading(sphere(2).rho());
        CHECK(g.size() == 1);
        CHECK(g[0] == sphere(2).rho());
    }
    SUBCASE("reality pairing") {
        auto g = circle_grading(pzw("z^2 + ~z^2"));
        CHECK(g.size() == 2);
        CHECK(g[2] == pzw("z^2"));
        CHECK(g[-2] == pzw("~z^2"));
        CHECK(g[2].conj() == g[-2]);
    }
}

TEST_CASE("real part is a projection") {
    MPoly p = pzw("(1+2*i)*z^2*~w + sqrt*z - 3/4");
    MPoly rp = real_part(p);
    CHECK(rp.conj() == rp);
    CHECK(real_part(rp) == rp);
}
