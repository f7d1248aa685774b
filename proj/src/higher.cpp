#include "crrigid/higher.hpp"

#include <stdexcept>

namespace crrigid {

namespace {

// Truncated polynomial in t with MPoly coefficients.
struct TSeries {
    std::vector<MPoly> c;  // length k+1

    static TSeries zero(int arity, int k) {
        TSeries s;
        s.c.assign(k + 1, MPoly(arity));
        return s;
    }

    int cap() const { return static_cast<int>(c.size()) - 1; }

    TSeries mul(const TSeries& o) const {
        TSeries r = zero(c[0].nvars(), cap());
        for (int i = 0; i <= cap(); ++i) {
            if (c[i].is_zero()) continue;
            for (int j = 0; i + j <= cap(); ++j) {
                if (o.c[j].is_zero()) continue;
                r.c[i + j] += c[i] * o.c[j];
            }
        }
        return r;
    }

    void add_scaled(const TSeries& o, const CScalar& f) {
        for (int i = 0; i <= cap(); ++i) c[i] += f * o.c[i];
    }

    void shift(int by) {  // multiply by t^by
        for (int i = cap(); i >= 0; --i) c[i] = (i - by >= 0) ? c[i - by] : MPoly(c[0].nvars());
    }
};

// Substitute one series per slot of p, truncating at order k.
TSeries series_compose(const MPoly& p, const std::vector<TSeries>& images, int arity, int k) {
    if (static_cast<int>(images.size()) != p.slots())
        throw std::invalid_argument("series_compose: one image per slot required");
    std::vector<std::vector<TSeries>> pw(images.size());
    TSeries one = TSeries::zero(arity, k);
    one.c[0] = MPoly::constant(arity, CScalar(1L));
    for (size_t s = 0; s < images.size(); ++s) pw[s].push_back(one);

    TSeries out = TSeries::zero(arity, k);
    for (const auto& [m, coef] : p.terms()) {
        TSeries term = one;
        for (int s = 0; s < m.slots(); ++s) {
            int e = m.e[s];
            if (e == 0) continue;
            while (static_cast<int>(pw[s].size()) <= e) pw[s].push_back(pw[s].back().mul(images[s]));
            term = term.mul(pw[s][e]);
        }
        out.add_scaled(term, coef);
    }
    return out;
}

std::vector<TSeries> jet_target_images(const JetCurve& h, int k) {
    int n = h.base.src_dim;
    int np = h.base.tgt_dim;
    std::vector<TSeries> images(2 * np, TSeries::zero(n, k));
    for (int i = 0; i < np; ++i) {
        images[i].c[0] = h.base.comps[i];
        images[np + i].c[0] = h.base.comps[i].conj();
        for (int l = 1; l <= std::min(k, h.order()); ++l) {
            images[i].c[l] = h.coeffs[l - 1].comps[i];
            images[np + i].c[l] = h.coeffs[l - 1].comps[i].conj();
        }
    }
    return images;
}

VectorSection section_from_solution(const HolOperator& op, const QVec& x, int n, int np) {
    VectorSection X;
    X.comps.assign(np, MPoly(n));
    for (size_t c = 0; c < op.columns.size(); ++c) {
        if (x[c].is_zero()) continue;
        const HolColumn& col = op.columns[c];
        Monomial m(2 * n);
        for (int i = 0; i < n; ++i) m.e[i] = col.alpha[i];
        CScalar coef = col.imag ? CScalar(QuadExt(Rational(0)), x[c]) : CScalar(x[c]);
        X.comps[col.comp].add_term(m, coef);
    }
    return X;
}

}  // namespace

JetCurve JetCurve::truncated(int j) const {
    if (j < 0 || j > order()) throw std::invalid_argument("JetCurve: bad truncation order");
    JetCurve out;
    out.base = base;
    out.coeffs.assign(coeffs.begin(), coeffs.begin() + j);
    return out;
}

JetCurve make_jet(const HoloMap& H, std::vector<VectorSection> coeffs) {
    for (const auto& v : coeffs) {
        if (static_cast<int>(v.comps.size()) != H.tgt_dim)
            throw std::invalid_argument("make_jet: coefficient arity mismatch");
        for (const auto& c : v.comps)
            if (c.nvars() != H.src_dim || !c.is_holomorphic())
                throw std::invalid_argument("make_jet: coefficients must be holomorphic in the source variables");
    }
    return JetCurve{H, std::move(coeffs)};
}

std::vector<MPoly> expand_defining_along_curve(const MPoly& rho_target, const JetCurve& h, int k) {
    if (rho_target.nvars() != h.base.tgt_dim)
        throw std::invalid_argument("expand_defining_along_curve: target arity mismatch");
    // orders beyond h.order() read as zero coefficients
    TSeries s = series_compose(rho_target, jet_target_images(h, k), h.base.src_dim, k);
    return s.c;
}

bool is_member_holk(const JetCurve& h, const Hypersurface& M, const Hypersurface& Mp) {
    if (!maps_into(h.base, M, Mp)) throw std::invalid_argument("is_member_holk: base map must send M to M'");
    std::vector<MPoly> c = expand_defining_along_curve(Mp.rho(), h, h.order());
    for (int l = 1; l <= h.order(); ++l)
        if (!poly_reduce(c[l], M.rho()).is_zero()) return false;
    return true;
}

std::vector<ProlongationResult> prolong_batch(const std::vector<JetCurve>& jets, const Hypersurface& M,
                                              const Hypersurface& Mp, int D) {
    if (jets.empty()) return {};
    const HoloMap& H = jets[0].base;
    for (const auto& h : jets) {
        if (h.base.comps != jets[0].base.comps)
            throw std::invalid_argument("prolong_batch: jets must share the base map");
        if (!is_member_holk(h, M, Mp))
            throw std::invalid_argument("prolong_batch: jet is not an order-k deformation");
    }

    std::vector<MPoly> inhoms;
    for (const auto& h : jets) {
        JetCurve padded = h;
        padded.coeffs.push_back(VectorSection{std::vector<MPoly>(H.tgt_dim, MPoly(H.src_dim))});
        std::vector<MPoly> c = expand_defining_along_curve(Mp.rho(), padded, padded.order());
        inhoms.push_back(poly_reduce(c[padded.order()], M.rho()));
    }

    HolOperator op = build_hol_operator(H, M, Mp, multiindices_up_to(M.dim(), D), inhoms);
    QMat rhs_cols;
    for (const auto& q : inhoms) {
        QVec b = op.rhs_for(q);
        for (auto& v : b) v = -v;
        rhs_cols.push_back(std::move(b));
    }
    Elimination elim(op.sys, rhs_cols);

    std::vector<VectorSection> ker;
    for (const auto& v : elim.kernel_basis()) ker.push_back(section_from_solution(op, v, M.dim(), Mp.dim()));

    std::vector<ProlongationResult> out;
    for (size_t j = 0; j < jets.size(); ++j) {
        ProlongationResult res;
        SolveOutcome oc = elim.outcome(static_cast<int>(j));
        res.extended = oc.consistent;
        if (oc.consistent) {
            res.particular = section_from_solution(op, oc.particular, M.dim(), Mp.dim());
            res.kernel = ker;
        } else {
            res.residual_poly = inhoms[j];
            res.residual_coords = std::move(oc.residual);
            res.residual_labels = std::move(oc.residual_labels);
        }
        out.push_back(std::move(res));
    }
    return out;
}

ProlongationResult prolong(const JetCurve& h, const Hypersurface& M, const Hypersurface& Mp, int D) {
    return prolong_batch({h}, M, Mp, D)[0];
}

QVec ObstructionQuadric::eval(const QVec& v) const {
    if (static_cast<int>(v.size()) != basis_dim) throw std::invalid_argument("ObstructionQuadric: bad coordinates");
    QVec out;
    for (const auto& F : forms) {
        QuadExt acc(Rational(0));
        for (int i = 0; i < basis_dim; ++i) {
            if (v[i].is_zero()) continue;
            for (int j = 0; j < basis_dim; ++j) {
                if (v[j].is_zero() || F[i][j].is_zero()) continue;
                acc = acc + v[i] * F[i][j] * v[j];
            }
        }
        out.push_back(acc);
    }
    return out;
}

bool ObstructionQuadric::vanishes_at(const QVec& v) const {
    for (const auto& x : eval(v))
        if (!x.is_zero()) return false;
    return true;
}

bool ObstructionQuadric::is_identically_zero() const {
    for (const auto& F : forms)
        for (const auto& row : F)
            for (const auto& x : row)
                if (!x.is_zero()) return false;
    return true;
}

ObstructionQuadric obstruction_quadric(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp,
                                       const DeformationBasis& hol1, int D) {
    int m = hol1.dim();
    int n = M.dim(), np = Mp.dim();

    auto p2_of = [&](const VectorSection& X) {
        JetCurve h = make_jet(H, {X, VectorSection{std::vector<MPoly>(np, MPoly(n))}});
        std::vector<MPoly> c = expand_defining_along_curve(Mp.rho(), h, 2);
        return poly_reduce(c[2], M.rho());
    };

    // quadratic and polarized mixed residuals
    std::vector<MPoly> polys;
    std::vector<std::pair<int, int>> pair_of;
    std::vector<MPoly> diag(m, MPoly(n));
    for (int i = 0; i < m; ++i) {
        diag[i] = p2_of(hol1.basis[i]);
        polys.push_back(diag[i]);
        pair_of.emplace_back(i, i);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            VectorSection sum;
            sum.comps.assign(np, MPoly(n));
            for (int c = 0; c < np; ++c) sum.comps[c] = hol1.basis[i].comps[c] + hol1.basis[j].comps[c];
            MPoly mixed = p2_of(sum) - diag[i] - diag[j];
            polys.push_back(mixed);
            pair_of.emplace_back(i, j);
        }
    }

    HolOperator op = build_hol_operator(H, M, Mp, multiindices_up_to(n, D), polys);
    QMat rhs_cols;
    for (const auto& q : polys) rhs_cols.push_back(op.rhs_for(q));
    Elimination elim(op.sys, rhs_cols);

    std::vector<int> coker = elim.nonpivot_rows();
    ObstructionQuadric quad;
    quad.basis_dim = m;
    for (int r : coker) quad.coker_labels.push_back(op.sys.row_labels[r]);
    size_t ncoker = coker.size();
    quad.forms.assign(ncoker, QMat(m, QVec(m, QuadExt(Rational(0)))));

    QuadExt half(Rational(1, 2));
    for (size_t c = 0; c < polys.size(); ++c) {
        QVec vals = elim.coker_values(static_cast<int>(c));
        auto [i, j] = pair_of[c];
        for (size_t r = 0; r < ncoker; ++r) {
            if (i == j) {
                quad.forms[r][i][i] = vals[r];
            } else {
                quad.forms[r][i][j] = half * vals[r];
                quad.forms[r][j][i] = half * vals[r];
            }
        }
    }
    return quad;
}

std::vector<std::vector<MPoly>> lie_series_flow(const PolyVectorField& X, int k) {
    if (k < 0) throw std::invalid_argument("lie_series_flow: order must be >= 0");
    int n = static_cast<int>(X.comps.size());
    std::vector<std::vector<MPoly>> phi;
    std::vector<MPoly> id;
    for (int j = 0; j < n; ++j) id.push_back(MPoly::variable(n, j));
    phi.push_back(id);
    for (int l = 1; l <= k; ++l) {
        std::vector<MPoly> next;
        CScalar inv_l(Rational(1, l));
        for (int j = 0; j < n; ++j) {
            MPoly acc(n);
            for (int v = 0; v < n; ++v) {
                if (X.comps[v].is_zero()) continue;
                acc += X.comps[v] * phi[l - 1][j].derivative(v);
            }
            next.push_back(inv_l * acc);
        }
        phi.push_back(std::move(next));
    }
    return phi;
}

JetCurve autk_sample(const HoloMap& H, const PolyVectorField& S, const PolyVectorField& Sp, int k) {
    if (k < 1) throw std::invalid_argument("autk_sample: order must be >= 1");
    int n = H.src_dim, np = H.tgt_dim;
    if (static_cast<int>(S.comps.size()) != n || static_cast<int>(Sp.comps.size()) != np)
        throw std::invalid_argument("autk_sample: field arity mismatch");

    PolyVectorField minusS;
    for (const auto& c : S.comps) minusS.comps.push_back(-c);
    std::vector<std::vector<MPoly>> src_flow = lie_series_flow(minusS, k);
    std::vector<std::vector<MPoly>> tgt_flow = lie_series_flow(Sp, k);

    // series of exp(-tS) in the source variables
    std::vector<TSeries> inner(2 * n, TSeries::zero(n, k));
    for (int j = 0; j < n; ++j)
        for (int l = 0; l <= k; ++l) {
            inner[j].c[l] = src_flow[l][j];
            inner[n + j].c[l] = src_flow[l][j].conj();
        }

    // series of H o exp(-tS)
    std::vector<TSeries> mid(2 * np, TSeries::zero(n, k));
    for (int i = 0; i < np; ++i) {
        mid[i] = series_compose(H.comps[i], inner, n, k);
        for (int l = 0; l <= k; ++l) mid[np + i].c[l] = mid[i].c[l].conj();
    }

    // series of exp(tS') o H o exp(-tS): sum_l t^l * B_l(mid)
    std::vector<TSeries> result(np, TSeries::zero(n, k));
    for (int i = 0; i < np; ++i) {
        for (int l = 0; l <= k; ++l) {
            if (tgt_flow[l][i].is_zero()) continue;
            TSeries term = series_compose(tgt_flow[l][i], mid, n, k);
            term.shift(l);
            result[i].add_scaled(term, CScalar(1L));
        }
        if (result[i].c[0] != H.comps[i])
            throw std::logic_error("autk_sample: flow composition does not fix H at t = 0");
    }

    std::vector<VectorSection> coeffs;
    for (int l = 1; l <= k; ++l) {
        VectorSection v;
        for (int i = 0; i < np; ++i) v.comps.push_back(result[i].c[l]);
        coeffs.push_back(std::move(v));
    }
    return make_jet(H, std::move(coeffs));
}

JetCurve dangelo_jet(const Rational& c, const Rational& s, int k) {
    if (c * c + s * s != 1) throw std::invalid_argument("dangelo_jet: (c, s) must satisfy c^2 + s^2 = 1");
    if (k < 1) throw std::invalid_argument("dangelo_jet: order must be >= 1");

    int n = 2;
    MPoly z = MPoly::variable(n, 0);
    MPoly w = MPoly::variable(n, 1);
    MPoly zw = z * w;
    MPoly w2 = w * w;

    HoloMap H(n, {z, CScalar(s) * w, CScalar(c) * zw, CScalar(c) * w2});

    // derivative cycles of sin and cos at the base angle, divided by l!
    auto sin_deriv = [&](int l) -> Rational {
        switch (l % 4) {
            case 0: return s;
            case 1: return c;
            case 2: return -s;
            default: return -c;
        }
    };
    auto cos_deriv = [&](int l) -> Rational {
        switch (l % 4) {
            case 0: return c;
            case 1: return -s;
            case 2: return -c;
            default: return s;
        }
    };

    Rational fact(1);
    std::vector<VectorSection> coeffs;
    for (int l = 1; l <= k; ++l) {
        fact *= l;
        CScalar a(sin_deriv(l) / fact);
        CScalar b(cos_deriv(l) / fact);
        VectorSection v;
        v.comps.push_back(MPoly(n));
        v.comps.push_back(a * w);
        v.comps.push_back(b * zw);
        v.comps.push_back(b * w2);
        coeffs.push_back(std::move(v));
    }
    return make_jet(H, std::move(coeffs));
}

}  // namespace crrigid
