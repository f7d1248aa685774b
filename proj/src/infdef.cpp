#include "crrigid/infdef.hpp"

#include "crrigid/printing.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace crrigid {

namespace {

std::string alpha_string(const std::vector<int>& alpha) {
    std::string s = "(";
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alpha[i]);
    }
    return s + ")";
}

MPoly monomial_poly(int nvars, const std::vector<int>& alpha) {
    Monomial m(2 * nvars);
    for (int i = 0; i < nvars; ++i) m.e[i] = alpha[i];
    MPoly p(nvars);
    p.add_term(m, CScalar(1L));
    return p;
}

// Gradient of the target defining polynomial pulled back along H.
std::vector<MPoly> target_gradient_along(const HoloMap& H, const Hypersurface& Mp) {
    std::vector<MPoly> g;
    for (int j = 0; j < Mp.dim(); ++j) g.push_back(substitute_map(Mp.rho().derivative(j), H));
    return g;
}

int complex_rank(std::vector<std::vector<CScalar>> rows) {
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (size_t k = r + 1; k < rows.size(); ++k) {
            if (rows[k][c].is_zero()) continue;
            CScalar f = rows[k][c] / rows[r][c];
            for (size_t j = c; j < cols; ++j) rows[k][j] = rows[k][j] - f * rows[r][j];
        }
        ++rank;
        ++r;
    }
    return rank;
}

bool components_independent(const HoloMap& H) {
    std::set<Monomial, MonomialBefore> monos;
    for (const auto& c : H.comps)
        for (const auto& [m, coef] : c.terms()) monos.insert(m);
    std::vector<std::vector<CScalar>> rows;
    for (const auto& c : H.comps) {
        std::vector<CScalar> row;
        for (const auto& m : monos) {
            auto it = c.terms().find(m);
            row.push_back(it == c.terms().end() ? CScalar() : it->second);
        }
        rows.push_back(std::move(row));
    }
    return complex_rank(rows) == H.tgt_dim;
}

}  // namespace

int VectorSection::degree() const {
    int d = 0;
    for (const auto& c : comps) d = std::max(d, c.total_degree());
    return d;
}

QVec HolOperator::rhs_for(const MPoly& q_reduced) const {
    std::map<Monomial, size_t, MonomialBefore> index;
    for (size_t r = 0; r < row_monomials.size(); r += 2) index.emplace(row_monomials[r], r);
    QVec b(row_monomials.size(), QuadExt(Rational(0)));
    for (const auto& [m, c] : q_reduced.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw std::logic_error("HolOperator: rhs monomial outside the row universe");
        b[it->second] = c.re;
        b[it->second + 1] = c.im;
    }
    return b;
}

HolOperator build_hol_operator(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp,
                               const std::vector<std::vector<int>>& monomials,
                               const std::vector<MPoly>& extra_rows) {
    int n = M.dim();
    int np = Mp.dim();
    if (H.src_dim != n || H.tgt_dim != np) throw std::invalid_argument("build_hol_operator: dimension mismatch");

    std::vector<MPoly> grad = target_gradient_along(H, Mp);

    HolOperator op;
    std::vector<MPoly> contributions;
    for (int j = 0; j < np; ++j) {
        for (const auto& alpha : monomials) {
            MPoly zmu = monomial_poly(n, alpha);
            MPoly base = zmu * grad[j];
            MPoly re_contrib = poly_reduce(base + base.conj(), M.rho());
            MPoly im_contrib = poly_reduce(CScalar::unit_i() * base + (CScalar::unit_i() * base).conj(), M.rho());
            op.columns.push_back({j, alpha, false});
            contributions.push_back(std::move(re_contrib));
            op.columns.push_back({j, alpha, true});
            contributions.push_back(std::move(im_contrib));
        }
    }

    std::map<Monomial, size_t, MonomialBefore> universe;
    for (const auto& p : contributions)
        for (const auto& [m, c] : p.terms()) universe.emplace(m, 0);
    for (const auto& p : extra_rows)
        for (const auto& [m, c] : p.terms()) universe.emplace(m, 0);
    {
        size_t idx = 0;
        for (auto& [m, i] : universe) i = idx++;
    }

    std::vector<std::string> var_names;
    for (int v = 0; v < n; ++v) var_names.push_back("Z" + std::to_string(v + 1));

    for (const auto& [m, idx] : universe) {
        for (int part = 0; part < 2; ++part) {
            op.row_monomials.push_back(m);
            op.row_imag.push_back(part == 1);
            MPoly mono(n);
            mono.add_term(m, CScalar(1L));
            op.sys.row_labels.push_back((part ? "Im " : "Re ") + poly_string(mono, var_names));
        }
    }

    for (const auto& col : op.columns) {
        std::ostringstream label;
        label << (col.imag ? "Im" : "Re") << " X" << (col.comp + 1) << alpha_string(col.alpha);
        op.sys.col_labels.push_back(label.str());
    }

    op.sys.rows.assign(op.row_monomials.size(), QVec(op.columns.size(), QuadExt(Rational(0))));
    for (size_t c = 0; c < contributions.size(); ++c) {
        for (const auto& [m, coef] : contributions[c].terms()) {
            size_t idx = universe.at(m);
            op.sys.rows[2 * idx][c] = coef.re;
            op.sys.rows[2 * idx + 1][c] = coef.im;
        }
    }
    return op;
}

DeformationBasis solve_hol(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp, int degree_cap) {
    if (degree_cap < 1) throw std::invalid_argument("solve_hol: degree cap must be >= 1");
    if (!maps_into(H, M, Mp)) throw std::invalid_argument("solve_hol: H does not map M into M'");

    HolOperator op = build_hol_operator(H, M, Mp, multiindices_up_to(M.dim(), degree_cap));
    KernelResult ker = kernel(op.sys);

    DeformationBasis out;
    out.degree_cap = degree_cap;
    int n = M.dim();
    for (const auto& v : ker.basis) {
        VectorSection X;
        X.comps.assign(Mp.dim(), MPoly(n));
        for (size_t c = 0; c < op.columns.size(); ++c) {
            if (v[c].is_zero()) continue;
            const HolColumn& col = op.columns[c];
            Monomial m(2 * n);
            for (int i = 0; i < n; ++i) m.e[i] = col.alpha[i];
            CScalar coef = col.imag ? CScalar(QuadExt(Rational(0)), v[c]) : CScalar(v[c]);
            X.comps[col.comp].add_term(m, coef);
        }
        out.basis.push_back(std::move(X));
    }

    out.exact = M.is_sphere() && Mp.is_sphere() && H.is_homogeneous() && components_independent(H) &&
                degree_cap >= 2 * H.degree();
    return out;
}

bool hol_membership(const std::vector<MPoly>& X, const HoloMap& H, const Hypersurface& M,
                    const Hypersurface& Mp) {
    if (static_cast<int>(X.size()) != Mp.dim()) throw std::invalid_argument("hol_membership: arity mismatch");
    std::vector<MPoly> grad = target_gradient_along(H, Mp);
    MPoly e(M.dim());
    for (int j = 0; j < Mp.dim(); ++j) e += X[j] * grad[j];
    return poly_reduce(e + e.conj(), M.rho()).is_zero();
}

std::vector<PolyVectorField> sphere_hol_generators(int n) {
    if (n < 1) throw std::invalid_argument("sphere_hol_generators: n must be >= 1");
    Hypersurface S = sphere(n);
    std::vector<PolyVectorField> gens;
    CScalar I = CScalar::unit_i();

    auto zero_field = [n]() {
        PolyVectorField f;
        f.comps.assign(n, MPoly(n));
        return f;
    };

    // i E_jj
    for (int j = 0; j < n; ++j) {
        PolyVectorField f = zero_field();
        f.comps[j] = I * MPoly::variable(n, j);
        gens.push_back(std::move(f));
    }
    // E_jk - E_kj and i(E_jk + E_kj), j < k
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            PolyVectorField f = zero_field();
            f.comps[j] = MPoly::variable(n, k);
            f.comps[k] = -MPoly::variable(n, j);
            gens.push_back(std::move(f));
            PolyVectorField g = zero_field();
            g.comps[j] = I * MPoly::variable(n, k);
            g.comps[k] = I * MPoly::variable(n, j);
            gens.push_back(std::move(g));
        }
    }
    // b - <Z, b> Z for b = e_j and b = i e_j
    for (int j = 0; j < n; ++j) {
        for (int im = 0; im < 2; ++im) {
            CScalar b = im ? I : CScalar(1L);
            PolyVectorField f = zero_field();
            // <Z, b> = Z_j * conj(b)
            MPoly pairing = b.conj() * MPoly::variable(n, j);
            for (int m = 0; m < n; ++m) {
                MPoly comp = -(pairing * MPoly::variable(n, m));
                if (m == j) comp += MPoly::constant(n, b);
                f.comps[m] = comp;
            }
            gens.push_back(std::move(f));
        }
    }

    for (const auto& g : gens)
        if (!is_tangent_field(g, S)) throw std::logic_error("sphere_hol_generators: generator not tangent");
    return gens;
}

VectorSection apply_pushforward(const HoloMap& H, const PolyVectorField& S) {
    if (static_cast<int>(S.comps.size()) != H.src_dim)
        throw std::invalid_argument("apply_pushforward: arity mismatch");
    VectorSection out;
    for (int i = 0; i < H.tgt_dim; ++i) {
        MPoly acc(H.src_dim);
        for (int j = 0; j < H.src_dim; ++j) {
            if (S.comps[j].is_zero()) continue;
            acc += S.comps[j] * H.comps[i].derivative(j);
        }
        out.comps.push_back(std::move(acc));
    }
    return out;
}

VectorSection restrict_to_map(const PolyVectorField& Sp, const HoloMap& H) {
    if (static_cast<int>(Sp.comps.size()) != H.tgt_dim)
        throw std::invalid_argument("restrict_to_map: arity mismatch");
    VectorSection out;
    for (const auto& c : Sp.comps) out.comps.push_back(substitute_map(c, H));
    return out;
}

QVec flatten_section(const VectorSection& X, int src_dim, int tgt_dim, int cap) {
    if (static_cast<int>(X.comps.size()) != tgt_dim)
        throw std::invalid_argument("flatten_section: component count mismatch");
    auto monos = multiindices_up_to(src_dim, cap);
    QVec v;
    v.reserve(2 * tgt_dim * monos.size());
    for (int j = 0; j < tgt_dim; ++j) {
        if (X.comps[j].total_degree() > cap) throw std::invalid_argument("flatten_section: degree above cap");
        for (const auto& alpha : monos) {
            Monomial m(2 * src_dim);
            for (int i = 0; i < src_dim; ++i) m.e[i] = alpha[i];
            auto it = X.comps[j].terms().find(m);
            CScalar c = it == X.comps[j].terms().end() ? CScalar() : it->second;
            v.push_back(c.re);
            v.push_back(c.im);
        }
    }
    return v;
}

AutDecomposition compute_aut(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp,
                             const std::vector<PolyVectorField>& gens_M,
                             const std::vector<PolyVectorField>& gens_Mp) {
    for (const auto& g : gens_M)
        if (!is_tangent_field(g, M)) throw std::invalid_argument("compute_aut: source generator not tangent");
    for (const auto& g : gens_Mp)
        if (!is_tangent_field(g, Mp)) throw std::invalid_argument("compute_aut: target generator not tangent");

    AutDecomposition out;
    out.hol_M_dim = static_cast<int>(gens_M.size());
    out.hol_Mp_dim = static_cast<int>(gens_Mp.size());

    std::vector<VectorSection> src_images, tgt_images;
    for (const auto& g : gens_M) src_images.push_back(apply_pushforward(H, g));
    for (const auto& g : gens_Mp) tgt_images.push_back(restrict_to_map(g, H));

    int cap = 1;
    for (const auto& s : src_images) cap = std::max(cap, s.degree());
    for (const auto& s : tgt_images) cap = std::max(cap, s.degree());

    RowSpan span_all, span_src, span_tgt;
    for (const auto& s : src_images) {
        QVec v = flatten_section(s, H.src_dim, H.tgt_dim, cap);
        if (span_src.add(v)) out.source_basis.push_back(s);
        if (span_all.add(std::move(v))) out.aut_basis.push_back(s);
    }
    for (const auto& s : tgt_images) {
        QVec v = flatten_section(s, H.src_dim, H.tgt_dim, cap);
        if (span_tgt.add(v)) out.target_basis.push_back(s);
        if (span_all.add(std::move(v))) out.aut_basis.push_back(s);
    }

    // stabilizer: kernel of (alpha, beta) |-> sum alpha_k H_* S_k + sum beta_l S'_l o H
    LinearSystem sys;
    int ncols = out.hol_M_dim + out.hol_Mp_dim;
    if (ncols == 0) return out;
    for (int c = 0; c < ncols; ++c) sys.col_labels.push_back("g" + std::to_string(c));
    size_t veclen = flatten_section(src_images.empty() ? tgt_images[0] : src_images[0], H.src_dim, H.tgt_dim, cap).size();
    sys.rows.assign(veclen, QVec(ncols, QuadExt(Rational(0))));
    for (int k = 0; k < out.hol_M_dim; ++k) {
        QVec v = flatten_section(src_images[k], H.src_dim, H.tgt_dim, cap);
        for (size_t r = 0; r < veclen; ++r) sys.rows[r][k] = v[r];
    }
    for (int l = 0; l < out.hol_Mp_dim; ++l) {
        QVec v = flatten_section(tgt_images[l], H.src_dim, H.tgt_dim, cap);
        for (size_t r = 0; r < veclen; ++r) sys.rows[r][out.hol_M_dim + l] = v[r];
    }
    KernelResult ker = kernel(sys);
    int n = M.dim();
    int np = Mp.dim();
    for (const auto& v : ker.basis) {
        PolyVectorField S, Sp;
        S.comps.assign(n, MPoly(n));
        Sp.comps.assign(np, MPoly(np));
        for (int k = 0; k < out.hol_M_dim; ++k)
            for (int j = 0; j < n; ++j) S.comps[j] += CScalar(v[k]) * gens_M[k].comps[j];
        for (int l = 0; l < out.hol_Mp_dim; ++l)
            for (int j = 0; j < np; ++j) Sp.comps[j] += CScalar(v[out.hol_M_dim + l]) * gens_Mp[l].comps[j];
        out.stabilizer.emplace_back(std::move(S), std::move(Sp));
    }
    return out;
}

RigidityVerdict rigidity_verdict(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp,
                                 int degree_cap) {
    if (!maps_into(H, M, Mp)) throw std::invalid_argument("rigidity_verdict: H does not map M into M'");

    std::vector<PolyVectorField> gens_M, gens_Mp;
    if (M.is_sphere()) {
        gens_M = sphere_hol_generators(M.dim());
    } else {
        DeformationBasis hm = solve_hol(identity_map(M.dim()), M, M, degree_cap);
        for (const auto& s : hm.basis) gens_M.push_back(PolyVectorField{s.comps});
    }
    if (Mp.is_sphere()) {
        gens_Mp = sphere_hol_generators(Mp.dim());
    } else {
        DeformationBasis hm = solve_hol(identity_map(Mp.dim()), Mp, Mp, degree_cap);
        for (const auto& s : hm.basis) gens_Mp.push_back(PolyVectorField{s.comps});
    }

    AutDecomposition aut = compute_aut(H, M, Mp, gens_M, gens_Mp);

    int cap = degree_cap;
    for (const auto& s : aut.aut_basis) cap = std::max(cap, s.degree());
    DeformationBasis hol = solve_hol(H, M, Mp, cap);

    for (const auto& s : aut.aut_basis)
        if (!hol_membership(s.comps, H, M, Mp))
            throw std::logic_error("rigidity_verdict: trivial deformation fails the membership equation");

    RigidityVerdict v;
    v.dim_hol = hol.dim();
    v.dim_aut = aut.dim_aut();
    v.dim_stabilizer = aut.dim_stabilizer();
    v.complement = v.dim_hol - v.dim_aut;
    v.hol_M_dim = aut.hol_M_dim;
    v.hol_Mp_dim = aut.hol_Mp_dim;
    v.exact_basis = hol.exact;
    v.degree_cap_used = cap;
    v.rigid = v.complement == 0;
    if (v.rigid) {
        v.verdict = "rigid (sufficient condition)";
    } else {
        v.verdict = "inconclusive: nontrivial infinitesimal deformations of dimension " +
                    std::to_string(v.complement);
    }
    v.hol = std::move(hol);
    v.aut = std::move(aut);
    return v;
}

}  // namespace crrigid
