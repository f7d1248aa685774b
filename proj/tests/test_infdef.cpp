#include "doctest.h"
#include "test_helpers.hpp"

#include "crrigid/infdef.hpp"

using namespace crtest;

namespace {

PolyVectorField field2(const std::string& a, const std::string& b) {
    return PolyVectorField{{pzw(a), pzw(b)}};
}

QMat flatten_fields(const std::vector<PolyVectorField>& fs, int cap) {
    QMat rows;
    for (const auto& f : fs) rows.push_back(flatten_section(VectorSection{f.comps}, 2, 2, cap));
    return rows;
}

}  // namespace

TEST_CASE("sphere automorphism generators") {
    SUBCASE("counts n^2 + 2n and tangency") {
        CHECK(sphere_hol_generators(1).size() == 3);
        CHECK(sphere_hol_generators(2).size() == 8);
        CHECK(sphere_hol_generators(3).size() == 15);
        Hypersurface S3 = sphere(3);
        for (const auto& g : sphere_hol_generators(3)) CHECK(is_tangent_field(g, S3));
    }
    SUBCASE("printed S1, S2, S3 lie in the span") {
        auto gens = sphere_hol_generators(2);
        RowSpan span;
        for (const auto& g : gens) span.add(flatten_section(VectorSection{g.comps}, 2, 2, 2));
        std::vector<PolyVectorField> printed = {
            field2("1 - z^2", "-z*w"),          // S1, alpha = 1
            field2("i + i*z^2", "i*z*w"),       // S1, alpha = i
            field2("-z*w", "1 - w^2"),          // S1, beta = 1
            field2("i*z*w", "i + i*w^2"),       // S1, beta = i
            field2("-w", "z"),                  // S2, gamma = 1
            field2("i*w", "i*z"),               // S2, gamma = i
            field2("i*z", "0"),                 // S3, s = 1
            field2("0", "i*w"),                 // S3, t = 1
        };
        for (const auto& f : printed) {
            CHECK(is_tangent_field(f, sphere(2)));
            CHECK(span.contains(flatten_section(VectorSection{f.comps}, 2, 2, 2)));
        }
        // and conversely the printed fields span everything
        CHECK(rank_of(flatten_fields(printed, 2)) == 8);
    }
}

TEST_CASE("solve_hol for the identity on sphere(2)") {
    Hypersurface S2 = sphere(2);
    DeformationBasis hol = solve_hol(identity_map(2), S2, S2, 2);
    CHECK(hol.dim() == 8);
    CHECK(hol.exact);  // homogeneous degree 1, cap 2 >= 2*deg

    // equals the generator span
    auto gens = sphere_hol_generators(2);
    QMat rows = flatten_fields(gens, 2);
    for (const auto& b : hol.basis) rows.push_back(flatten_section(b, 2, 2, 2));
    CHECK(rank_of(rows) == 8);

    // a degree-3 ansatz finds nothing new
    CHECK(solve_hol(identity_map(2), S2, S2, 3).dim() == 8);
}

TEST_CASE("solve_hol for the degree-two sphere map has dimension 27") {
    Hypersurface S2 = sphere(2), S3 = sphere(3);
    DeformationBasis hol = solve_hol(example1(), S2, S3, 4);
    CHECK(hol.dim() == 27);
    CHECK(hol.exact);
    CHECK(hol.degree_cap == 4);

    SUBCASE("membership soundness at every stored sample point") {
        std::vector<MPoly> grad;
        for (int j = 0; j < 3; ++j) grad.push_back(substitute_map(S3.rho().derivative(j), example1()));
        for (const auto& b : hol.basis) {
            MPoly e(2);
            for (int j = 0; j < 3; ++j) e += b.comps[j] * grad[j];
            MPoly re = e + e.conj();
            for (const auto& p : S2.points()) CHECK(re.eval(p).is_zero());
        }
    }
}

TEST_CASE("grading consistency: graded blocks reproduce the full dimension") {
    // For a homogeneous degree-s sphere map the system splits by the circle
    // weight; the block at weight m involves only ansatz degrees s-m, s+m.
    Hypersurface S2 = sphere(2), S3 = sphere(3);
    HoloMap H = example1();
    int s = H.degree(), D = 4;
    int total = 0;
    for (int m = 0; m <= D - s; ++m) {
        std::vector<std::vector<int>> monos;
        for (const auto& alpha : multiindices_up_to(2, D)) {
            int deg = alpha[0] + alpha[1];
            if (deg == s + m || deg == s - m) monos.push_back(alpha);
        }
        HolOperator op = build_hol_operator(H, S2, S3, monos);
        total += static_cast<int>(kernel(op.sys).basis.size());
    }
    CHECK(total == 27);
}

TEST_CASE("compute_aut on the worked maps") {
    Hypersurface S2 = sphere(2), S3 = sphere(3);
    auto gens2 = sphere_hol_generators(2);
    auto gens3 = sphere_hol_generators(3);

    SUBCASE("identity map: everything is trivial and the stabilizer is full") {
        AutDecomposition aut = compute_aut(identity_map(2), S2, S2, gens2, gens2);
        CHECK(aut.dim_aut() == 8);
        CHECK(aut.dim_stabilizer() == 8);
        CHECK(aut.dim_aut() + aut.dim_stabilizer() == aut.hol_M_dim + aut.hol_Mp_dim);
    }
    SUBCASE("degree-two map: aut 19, stabilizer 4") {
        AutDecomposition aut = compute_aut(example1(), S2, S3, gens2, gens3);
        CHECK(aut.dim_aut() == 19);
        CHECK(aut.dim_stabilizer() == 4);
        CHECK(aut.dim_aut() + aut.dim_stabilizer() == 8 + 15);
        // stabilizer pairs satisfy H_* S + S' o H = 0 exactly
        for (const auto& [S, Sp] : aut.stabilizer) {
            VectorSection lhs = apply_pushforward(example1(), S);
            VectorSection rhs = restrict_to_map(Sp, example1());
            for (int j = 0; j < 3; ++j) CHECK((lhs.comps[j] + rhs.comps[j]).is_zero());
        }
        // every trivial deformation is an infinitesimal deformation
        for (const auto& b : aut.aut_basis) CHECK(hol_membership(b.comps, example1(), S2, S3));
    }
    SUBCASE("degree-three map: stabilizer 2, aut 21") {
        AutDecomposition aut = compute_aut(example2(), S2, S3, gens2, gens3);
        CHECK(aut.dim_stabilizer() == 2);
        CHECK(aut.dim_aut() == 21);
    }
}

TEST_CASE("rigidity verdict for the identity map") {
    Hypersurface S2 = sphere(2);
    RigidityVerdict v = rigidity_verdict(identity_map(2), S2, S2, 3);
    CHECK(v.rigid);
    CHECK(v.dim_hol == 8);
    CHECK(v.dim_aut == 8);
    CHECK(v.complement == 0);
    CHECK(v.verdict == "rigid (sufficient condition)");
}

TEST_CASE("solve_hol flags truncation honestly") {
    Hypersurface M = example3_M();
    DeformationBasis hm = solve_hol(identity_map(2), M, M, 3);
    CHECK_FALSE(hm.exact);  // non-sphere source: no completeness certificate
    CHECK(hm.dim() == 2);   // the diagonal rotation family
    for (const auto& b : hm.basis) CHECK(hol_membership(b.comps, identity_map(2), M, M));
}

TEST_CASE("solve_hol rejects maps that do not send M into M'") {
    Hypersurface S2 = sphere(2);
    Hypersurface big(2, pzw("z*~z + w*~w - 2"));
    CHECK_THROWS_AS(solve_hol(identity_map(2), S2, big, 2), std::invalid_argument);
}
