#include "doctest.h"
#include "test_helpers.hpp"

#include "crrigid/higher.hpp"

using namespace crtest;

namespace {

const std::vector<std::string> kZ1 = {"z"};

MPoly pz(const std::string& text) { return parse_poly(text, kZ1, 2); }

VectorSection sec1(const std::string& a) { return VectorSection{{pz(a)}}; }

VectorSection zero_section(int n, int np) { return VectorSection{std::vector<MPoly>(np, MPoly(n))}; }

// Embeds an arity-n polynomial into arity n+extra (the extra slots are
// formal deformation parameters), used by the independent full-expansion
// oracle and the flow group-law check.
MPoly embed(const MPoly& p, int extra) {
    int n = p.nvars();
    int m = n + extra;
    std::vector<MPoly> images;
    for (int i = 0; i < n; ++i) images.push_back(MPoly::variable(m, i));
    for (int i = 0; i < n; ++i) images.push_back(MPoly::conj_variable(m, i));
    return p.compose(images);
}

// rho'(h(t), conj h(t)) computed by one full polynomial multiplication with
// t as an extra commuting variable; independent of the truncated-series path.
std::vector<MPoly> brute_force_expansion(const MPoly& rho_target, const JetCurve& h, int k) {
    int n = h.base.src_dim;
    int np = h.base.tgt_dim;
    int m = n + 1;  // extra slot: t
    MPoly t = MPoly::variable(m, n);
    std::vector<MPoly> images(2 * np, MPoly(m));
    for (int i = 0; i < np; ++i) {
        MPoly hi = embed(h.base.comps[i], 1);
        MPoly hibar = embed(h.base.comps[i].conj(), 1);
        MPoly tp = MPoly::constant(m, CScalar(1L));
        for (int l = 1; l <= h.order(); ++l) {
            tp = tp * t;
            hi += embed(h.coeffs[l - 1].comps[i], 1) * tp;
            hibar += embed(h.coeffs[l - 1].comps[i].conj(), 1) * tp;
        }
        images[i] = hi;
        images[np + i] = hibar;
    }
    MPoly full = rho_target.compose(images);
    // slice by t-degree, strip the t slot by differentiating exponents away
    std::vector<MPoly> out(k + 1, MPoly(n));
    for (const auto& [mono, coef] : full.terms()) {
        int deg_t = mono.e[n];
        if (deg_t > k) continue;
        Monomial stripped(2 * n);
        for (int i = 0; i < n; ++i) stripped.e[i] = mono.e[i];
        for (int i = 0; i < n; ++i) stripped.e[n + i] = mono.e[m + i];
        out[deg_t].add_term(stripped, coef);
    }
    return out;
}

}  // namespace

TEST_CASE("expansion along a curve: sphere-target shapes") {
    Hypersurface S2 = sphere(2), S3 = sphere(3);
    HoloMap H = example1();
    VectorSection V1{{pzw("w"), pzw("z^2"), pzw("i*z*w")}};
    VectorSection V2{{pzw("1"), pzw("0"), pzw("z")}};

    SUBCASE("c1 = 2 Re(sum V1_j conj H_j)") {
        JetCurve h = make_jet(H, {V1});
        auto c = expand_defining_along_curve(S3.rho(), h, 1);
        MPoly e(2);
        for (int j = 0; j < 3; ++j) e += V1.comps[j] * H.comps[j].conj();
        CHECK(c[1] == e + e.conj());
        CHECK(c[0] == pullback_defining(H, S3));
    }
    SUBCASE("c2 carries the printed second-order polynomial") {
        JetCurve h = make_jet(H, {V1, V2});
        auto c = expand_defining_along_curve(S3.rho(), h, 2);
        MPoly lin(2), quad(2);
        for (int j = 0; j < 3; ++j) {
            lin += V2.comps[j] * H.comps[j].conj();
            quad += V1.comps[j] * V1.comps[j].conj();
        }
        // for the sphere rho'_{Z'_i Z'_j} = 0 and rho'_{Z'_i ~Z'_j} = delta_ij
        CHECK(c[2] == lin + lin.conj() + quad);
    }
    SUBCASE("constant curve") {
        JetCurve h = make_jet(H, {zero_section(2, 3), zero_section(2, 3)});
        auto c = expand_defining_along_curve(S3.rho(), h, 2);
        CHECK(c[0] == pullback_defining(H, S3));
        CHECK(c[1].is_zero());
        CHECK(c[2].is_zero());
    }
}

TEST_CASE("expansion agrees with the brute-force full multiplication") {
    Hypersurface S3 = sphere(3);
    HoloMap H = example1();
    VectorSection V1{{pzw("w"), pzw("z^2 - i*w"), pzw("z*w")}};
    VectorSection V2{{pzw("1 + z"), pzw("0"), pzw("i*z^2")}};
    VectorSection V3{{pzw("z*w^2"), pzw("i"), pzw("w")}};
    JetCurve h = make_jet(H, {V1, V2, V3});
    auto fast = expand_defining_along_curve(S3.rho(), h, 3);
    auto slow = brute_force_expansion(S3.rho(), h, 3);
    for (int l = 0; l <= 3; ++l) CHECK(fast[l] == slow[l]);

    // also on a non-sphere target: second derivatives of rho' now matter
    Hypersurface M3 = example3_M();
    HoloMap id = identity_map(2);
    VectorSection W1{{pzw("i*z"), pzw("w^2")}};
    VectorSection W2{{pzw("z*w"), pzw("-i")}};
    JetCurve g = make_jet(id, {W1, W2});
    auto fast2 = expand_defining_along_curve(M3.rho(), g, 2);
    auto slow2 = brute_force_expansion(M3.rho(), g, 2);
    for (int l = 0; l <= 2; ++l) CHECK(fast2[l] == slow2[l]);
}

TEST_CASE("hol^k membership") {
    Hypersurface S2 = sphere(2), S3 = sphere(3);
    HoloMap H = example1();

    SUBCASE("order 1 reduces to the first-order membership equation") {
        DeformationBasis hol = solve_hol(H, S2, S3, 4);
        CHECK(is_member_holk(make_jet(H, {hol.basis[0]}), S2, S3));
        VectorSection bad{{pzw("1"), pzw("0"), pzw("0")}};
        CHECK_FALSE(is_member_holk(make_jet(H, {bad}), S2, S3));
    }
    SUBCASE("h = H + tH is not tangent: c1 = 2|H|^2 = 2 on the sphere") {
        VectorSection VH{{H.comps[0], H.comps[1], H.comps[2]}};
        JetCurve h = make_jet(H, {VH});
        auto c = expand_defining_along_curve(S3.rho(), h, 1);
        CHECK(poly_reduce(c[1], S2.rho()) == pzw("2"));
        CHECK_FALSE(is_member_holk(h, S2, S3));
    }
    SUBCASE("truncations of members are members") {
        JetCurve d4 = dangelo_jet(Q(4, 5), Q(3, 5), 4);
        Hypersurface S4 = sphere(4);
        CHECK(is_member_holk(d4, S2, S4));
        for (int j = 1; j < 4; ++j) CHECK(is_member_holk(d4.truncated(j), S2, S4));
        CHECK(d4.truncated(3).truncated(2).coeffs.size() == d4.truncated(2).coeffs.size());
    }
}

TEST_CASE("prolongation on the circle: an explicit obstruction") {
    // M = M' = {|z|^2 = 1}, H = id, V1 = 1 - z^2.  The order-2 equation
    // needs a degree-3 coefficient (the Moebius flow gives -z + z^3), so the
    // cap-2 system is inconsistent while the cap-3 system extends.
    Hypersurface S1 = sphere(1);
    HoloMap id1 = identity_map(1);
    JetCurve h = make_jet(id1, {sec1("1 - z^2")});

    SUBCASE("obstructed at cap 2, with an independent inconsistency certificate") {
        ProlongationResult res = prolong(h, S1, S1, 2);
        CHECK_FALSE(res.extended);
        CHECK(res.residual_poly == pz("2 - z^2 - ~z^2"));
        bool some_nonzero = false;
        for (const auto& x : res.residual_coords) some_nonzero = some_nonzero || !x.is_zero();
        CHECK(some_nonzero);

        // left-null certificate: u with u^T A = 0 and u^T b != 0
        HolOperator op = build_hol_operator(id1, S1, S1, multiindices_up_to(1, 2), {res.residual_poly});
        QVec b = op.rhs_for(res.residual_poly);
        LinearSystem tsys;
        tsys.col_labels.assign(op.sys.rows.size(), "");
        tsys.rows.assign(op.sys.cols(), QVec(op.sys.rows.size(), QuadExt(Q(0))));
        for (size_t r = 0; r < op.sys.rows.size(); ++r)
            for (int c = 0; c < op.sys.cols(); ++c) tsys.rows[c][r] = op.sys.rows[r][c];
        bool witnessed = false;
        for (const auto& u : kernel(tsys).basis) {
            QuadExt dot(Q(0));
            for (size_t r = 0; r < b.size(); ++r) dot = dot + u[r] * b[r];
            witnessed = witnessed || !dot.is_zero();
        }
        CHECK(witnessed);
    }
    SUBCASE("extends at cap 3 and the extension is a genuine order-2 member") {
        ProlongationResult res = prolong(h, S1, S1, 3);
        CHECK(res.extended);
        JetCurve h2 = make_jet(id1, {h.coeffs[0], res.particular});
        CHECK(is_member_holk(h2, S1, S1));
        // the flow of (1 - z^2) d/dz gives the particular extension -z + z^3
        // up to a kernel element
        VectorSection flow = sec1("-z + z^3");
        bool matches_mod_kernel = false;
        QMat rows;
        for (const auto& kv : res.kernel) rows.push_back(flatten_section(kv, 1, 1, 3));
        MPoly diff = res.particular.comps[0] - flow.comps[0];
        RowSpan span;
        for (auto& r : rows) span.add(std::move(r));
        matches_mod_kernel = span.contains(flatten_section(VectorSection{{diff}}, 1, 1, 3));
        CHECK(matches_mod_kernel);
    }
    SUBCASE("constant curve prolongs with particular zero and kernel hol") {
        JetCurve c = make_jet(id1, {zero_section(1, 1)});
        ProlongationResult res = prolong(c, S1, S1, 2);
        CHECK(res.extended);
        for (const auto& comp : res.particular.comps) CHECK(comp.is_zero());
        CHECK(res.kernel.size() == solve_hol(id1, S1, S1, 2).basis.size());
    }
}

TEST_CASE("obstruction quadric") {
    SUBCASE("circle at cap 2: quadric detects exactly the extendable directions") {
        Hypersurface S1 = sphere(1);
        HoloMap id1 = identity_map(1);
        DeformationBasis hol = solve_hol(id1, S1, S1, 2);
        REQUIRE(hol.dim() == 3);
        ObstructionQuadric q = obstruction_quadric(id1, S1, S1, hol, 2);
        CHECK_FALSE(q.is_identically_zero());

        // exhaustive consistency against prolong on a small integer grid
        for (int a = -1; a <= 1; ++a) {
            for (int b = -1; b <= 1; ++b) {
                for (int c = -1; c <= 1; ++c) {
                    QVec v = {QuadExt(Q(a)), QuadExt(Q(b)), QuadExt(Q(c))};
                    VectorSection X = zero_section(1, 1);
                    for (int k = 0; k < 3; ++k) X.comps[0] += CScalar(v[k]) * hol.basis[k].comps[0];
                    ProlongationResult res = prolong(make_jet(id1, {X}), S1, S1, 2);
                    CHECK(q.vanishes_at(v) == res.extended);
                }
            }
        }
    }
    SUBCASE("identity on sphere(2) at cap 3: every direction integrates, q = 0") {
        Hypersurface S2 = sphere(2);
        HoloMap id2 = identity_map(2);
        DeformationBasis hol = solve_hol(id2, S2, S2, 2);
        REQUIRE(hol.dim() == 8);
        ObstructionQuadric q = obstruction_quadric(id2, S2, S2, hol, 3);
        CHECK(q.is_identically_zero());
    }
    SUBCASE("the D'Angelo direction is unobstructed at order 2") {
        Hypersurface S2 = sphere(2), S4 = sphere(4);
        JetCurve d = dangelo_jet(Q(4, 5), Q(3, 5), 1);
        ProlongationResult res = prolong(d, S2, S4, 4);
        CHECK(res.extended);
    }
}

TEST_CASE("lie series flows") {
    SUBCASE("linear diagonal field") {
        PolyVectorField X{{pzw("2*i*z"), pzw("i*w")}};
        auto phi = lie_series_flow(X, 3);
        CHECK(phi[0][0] == pzw("z"));
        CHECK(phi[1][0] == pzw("2*i*z"));
        CHECK(phi[2][0] == pzw("-2*z"));        // (2i)^2/2
        CHECK(phi[3][0] == pzw("-4/3*i*z"));    // (2i)^3/6
        CHECK(phi[2][1] == pzw("-1/2*w"));
    }
    SUBCASE("zero field is the identity") {
        PolyVectorField X{{MPoly(2), MPoly(2)}};
        auto phi = lie_series_flow(X, 2);
        CHECK(phi[0][0] == pzw("z"));
        CHECK(phi[1][0].is_zero());
        CHECK(phi[2][1].is_zero());
    }
    SUBCASE("flow of -X inverts the flow of X up to the truncation order") {
        PolyVectorField X{{pzw("1 - z^2"), pzw("-z*w")}};  // S1-type quadratic field
        int k = 3;
        auto fwd = lie_series_flow(X, k);
        PolyVectorField Xm{{-X.comps[0], -X.comps[1]}};
        auto bwd = lie_series_flow(Xm, k);

        // compose in arity 3 (extra slot: t), truncate at t-degree k
        int m = 3;
        MPoly t = MPoly::variable(m, 2);
        auto as_poly = [&](const std::vector<std::vector<MPoly>>& flow, int comp) {
            MPoly acc(m), tp = MPoly::constant(m, CScalar(1L));
            for (int l = 0; l <= k; ++l) {
                acc += embed(flow[l][comp], 1) * tp;
                tp = tp * t;
            }
            return acc;
        };
        std::vector<MPoly> images = {as_poly(bwd, 0), as_poly(bwd, 1), t,
                                     MPoly(m), MPoly(m), MPoly(m)};
        for (int comp = 0; comp < 2; ++comp) {
            MPoly composed = as_poly(fwd, comp).compose(images);
            MPoly expect = MPoly::variable(m, comp);
            MPoly err = composed - expect;
            for (const auto& [mono, coef] : err.terms()) CHECK(mono.e[2] > k);
        }
    }
    SUBCASE("group law jet(exp(tX)) o jet(exp(sX)) = jet(exp((t+s)X))") {
        for (const PolyVectorField& X :
             {PolyVectorField{{pzw("i*z"), pzw("-i*w")}}, PolyVectorField{{pzw("1 - z^2"), pzw("-z*w")}}}) {
            int k = 3;
            auto flow = lie_series_flow(X, k);
            int m = 4;  // z, w, t, s
            MPoly t = MPoly::variable(m, 2), s = MPoly::variable(m, 3);
            auto as_poly = [&](const MPoly& param) {
                std::vector<MPoly> out;
                for (int comp = 0; comp < 2; ++comp) {
                    MPoly acc(m), pp = MPoly::constant(m, CScalar(1L));
                    for (int l = 0; l <= k; ++l) {
                        acc += embed(flow[l][comp], 2) * pp;
                        pp = pp * param;
                    }
                    out.push_back(acc);
                }
                return out;
            };
            auto drop_high = [&](const MPoly& p) {
                MPoly out(m);
                for (const auto& [mono, coef] : p.terms())
                    if (mono.e[2] + mono.e[3] <= k) out.add_term(mono, coef);
                return out;
            };
            std::vector<MPoly> inner = as_poly(s);
            std::vector<MPoly> images = {inner[0], inner[1], t, MPoly(m),
                                         MPoly(m), MPoly(m), MPoly(m), MPoly(m)};
            std::vector<MPoly> lhs = as_poly(t);
            std::vector<MPoly> rhs = as_poly(t + s);
            for (int comp = 0; comp < 2; ++comp)
                CHECK(drop_high(lhs[comp].compose(images)) == drop_high(rhs[comp]));
        }
    }
}

TEST_CASE("aut^k sampling") {
    Hypersurface S2 = sphere(2), S3 = sphere(3);
    HoloMap H = example1();
    std::vector<std::string> v3 = {"z1", "z2", "z3"};
    auto p3 = [&](const std::string& s) { return parse_poly(s, v3, 2); };

    SUBCASE("pure target diagonal flow") {
        PolyVectorField S{{MPoly(2), MPoly(2)}};
        PolyVectorField Sp{{p3("i*z1"), p3("2*i*z2"), p3("3*i*z3")}};
        JetCurve jet = autk_sample(H, S, Sp, 2);
        CHECK(jet.coeffs[0].comps[0] == pzw("i*z^2"));
        CHECK(jet.coeffs[0].comps[1] == pzw("2*i*sqrt*z*w"));
        CHECK(jet.coeffs[0].comps[2] == pzw("3*i*w^2"));
        CHECK(jet.coeffs[1].comps[0] == pzw("-1/2*z^2"));
        CHECK(jet.coeffs[1].comps[1] == pzw("-2*sqrt*z*w"));
        CHECK(jet.coeffs[1].comps[2] == pzw("-9/2*w^2"));
        CHECK(is_member_holk(jet, S2, S3));
    }
    SUBCASE("stabilizer direction gives the zero jet curve") {
        // H_* S = S' o H for S = (iz, iw), S' = 2i Z'
        PolyVectorField S{{pzw("i*z"), pzw("i*w")}};
        PolyVectorField Sp{{p3("2*i*z1"), p3("2*i*z2"), p3("2*i*z3")}};
        JetCurve jet = autk_sample(H, S, Sp, 2);
        for (const auto& v : jet.coeffs)
            for (const auto& c : v.comps) CHECK(c.is_zero());
    }
    SUBCASE("sampled curves are order-3 members") {
        auto gens2 = sphere_hol_generators(2);
        auto gens3 = sphere_hol_generators(3);
        for (size_t a = 0; a < gens2.size(); a += 3) {
            for (size_t b = 0; b < gens3.size(); b += 5) {
                JetCurve jet = autk_sample(H, gens2[a], gens3[b], 3);
                CHECK(is_member_holk(jet, S2, S3));
            }
        }
    }
}

TEST_CASE("invariance: extendable plus trivial stays extendable") {
    Hypersurface S2 = sphere(2);
    HoloMap id2 = identity_map(2);
    DeformationBasis hol = solve_hol(id2, S2, S2, 2);
    auto gens = sphere_hol_generators(2);
    AutDecomposition aut = compute_aut(id2, S2, S2, gens, gens);

    JetCurve base = make_jet(id2, {hol.basis[0]});
    REQUIRE(prolong(base, S2, S2, 3).extended);
    std::vector<JetCurve> jets;
    for (const auto& w : aut.aut_basis) {
        VectorSection sum = zero_section(2, 2);
        for (int c = 0; c < 2; ++c) sum.comps[c] = hol.basis[0].comps[c] + w.comps[c];
        jets.push_back(make_jet(id2, {sum}));
    }
    for (const auto& res : prolong_batch(jets, S2, S2, 3)) CHECK(res.extended);
}

TEST_CASE("the D'Angelo family jets") {
    Hypersurface S2 = sphere(2), S4 = sphere(4);
    SUBCASE("first coefficient at (4/5, 3/5)") {
        JetCurve d = dangelo_jet(Q(4, 5), Q(3, 5), 1);
        CHECK(d.base.comps[0] == pzw("z"));
        CHECK(d.base.comps[1] == pzw("3/5*w"));
        CHECK(d.base.comps[2] == pzw("4/5*z*w"));
        CHECK(d.base.comps[3] == pzw("4/5*w^2"));
        CHECK(d.coeffs[0].comps[0].is_zero());
        CHECK(d.coeffs[0].comps[1] == pzw("4/5*w"));
        CHECK(d.coeffs[0].comps[2] == pzw("-3/5*z*w"));
        CHECK(d.coeffs[0].comps[3] == pzw("-3/5*w^2"));
    }
    SUBCASE("flat base point") {
        JetCurve d = dangelo_jet(Q(1), Q(0), 1);
        CHECK(d.coeffs[0].comps[1] == pzw("w"));
        CHECK(d.coeffs[0].comps[2].is_zero());
        CHECK(d.coeffs[0].comps[3].is_zero());
    }
    SUBCASE("members up to order 4") {
        for (int k = 1; k <= 4; ++k) CHECK(is_member_holk(dangelo_jet(Q(4, 5), Q(3, 5), k), S2, S4));
    }
    SUBCASE("the circle constraint is enforced") {
        CHECK_THROWS_AS(dangelo_jet(Q(1, 2), Q(1, 2), 2), std::invalid_argument);
    }
}
