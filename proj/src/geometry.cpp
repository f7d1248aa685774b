#include "crrigid/geometry.hpp"

#include <stdexcept>

namespace crrigid {

Hypersurface::Hypersurface(int dim, MPoly rho, std::vector<Point> points) : n_(dim), rho_(std::move(rho)) {
    if (rho_.is_zero()) throw std::invalid_argument("Hypersurface: rho must be nonzero");
    if (rho_.nvars() != n_) throw std::invalid_argument("Hypersurface: rho arity mismatch");
    if (rho_.conj() != rho_) throw std::invalid_argument("Hypersurface: rho is not real (conj(rho) != rho)");
    for (const auto& p : points) add_point(p);
}

void Hypersurface::add_point(const Point& p) {
    if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("Hypersurface: point dimension mismatch");
    if (!rho_.eval(p).is_zero()) throw std::invalid_argument("Hypersurface: point not on {rho = 0}");
    bool grad_nonzero = false;
    for (int s = 0; s < 2 * n_ && !grad_nonzero; ++s)
        if (!rho_.derivative(s).eval(p).is_zero()) grad_nonzero = true;
    if (!grad_nonzero) throw std::invalid_argument("Hypersurface: gradient vanishes at sample point");
    points_.push_back(p);
}

bool Hypersurface::is_sphere() const {
    MPoly s(n_);
    for (int j = 0; j < n_; ++j) s += MPoly::variable(n_, j) * MPoly::conj_variable(n_, j);
    s -= MPoly::constant(n_, CScalar(1L));
    return rho_ == s;
}

HoloMap::HoloMap(int src, std::vector<MPoly> components)
    : src_dim(src), tgt_dim(static_cast<int>(components.size())), comps(std::move(components)) {
    for (const auto& c : comps) {
        if (c.nvars() != src_dim) throw std::invalid_argument("HoloMap: component arity mismatch");
        if (!c.is_holomorphic()) throw std::invalid_argument("HoloMap: component is not holomorphic");
    }
}

int HoloMap::degree() const {
    int d = 0;
    for (const auto& c : comps) d = std::max(d, c.total_degree());
    return d;
}

bool HoloMap::is_homogeneous() const {
    int d = degree();
    for (const auto& c : comps) {
        if (c.is_zero()) continue;
        for (const auto& [m, coef] : c.terms())
            if (m.total_degree() != d) return false;
    }
    return true;
}

HoloMap identity_map(int n) {
    std::vector<MPoly> comps;
    for (int j = 0; j < n; ++j) comps.push_back(MPoly::variable(n, j));
    return HoloMap(n, std::move(comps));
}

MPoly CRField::apply(const MPoly& q) const {
    int n = static_cast<int>(coeffs.size());
    MPoly out(q.nvars());
    for (int i = 0; i < n; ++i) {
        if (coeffs[i].is_zero()) continue;
        out += coeffs[i] * q.derivative(n + i);
    }
    return out;
}

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

Point real_point(std::initializer_list<Rational> coords) {
    Point p;
    for (const auto& c : coords) p.push_back(CScalar(c));
    return p;
}

std::vector<Point> sphere_stock(int n) {
    std::vector<Point> pts;
    CScalar phase35(QuadExt(rat(3, 5)), QuadExt(rat(4, 5)));    // (3+4i)/5
    CScalar phase513(QuadExt(rat(5, 13)), QuadExt(rat(12, 13)));  // (5+12i)/13
    if (n == 1) {
        pts.push_back({CScalar(1L)});
        pts.push_back({CScalar(-1L)});
        pts.push_back({CScalar::unit_i()});
        pts.push_back({phase35});
        pts.push_back({phase513});
        return pts;
    }
    if (n == 2) {
        pts.push_back(real_point({rat(3, 5), rat(4, 5)}));
        pts.push_back(real_point({rat(1), rat(0)}));
        pts.push_back(real_point({rat(0), rat(1)}));
        pts.push_back(real_point({rat(4, 5), rat(3, 5)}));
        pts.push_back(real_point({rat(5, 13), rat(12, 13)}));
        pts.push_back(real_point({rat(12, 13), rat(5, 13)}));
        pts.push_back(real_point({rat(8, 17), rat(15, 17)}));
        pts.push_back({phase35, CScalar()});
        pts.push_back({CScalar(rat(3, 5)) * phase513, CScalar(rat(4, 5))});
        return pts;
    }
    if (n == 3) {
        pts.push_back(real_point({rat(1, 3), rat(2, 3), rat(2, 3)}));
        pts.push_back(real_point({rat(1), rat(0), rat(0)}));
        pts.push_back(real_point({rat(0), rat(1), rat(0)}));
        pts.push_back(real_point({rat(0), rat(0), rat(1)}));
        pts.push_back(real_point({rat(2, 3), rat(1, 3), rat(2, 3)}));
        pts.push_back(real_point({rat(2, 3), rat(2, 3), rat(1, 3)}));
        pts.push_back(real_point({rat(3, 5), rat(4, 5), rat(0)}));
        pts.push_back(real_point({rat(2, 7), rat(3, 7), rat(6, 7)}));
        pts.push_back({CScalar(rat(1, 3)) * phase35, CScalar(rat(2, 3)), CScalar(rat(2, 3))});
        return pts;
    }
    // n >= 4: axis points plus padded lower-dimensional stock
    for (int j = 0; j < n; ++j) {
        Point p(n, CScalar());
        p[j] = CScalar(1L);
        pts.push_back(p);
    }
    for (const auto& q : sphere_stock(n - 1)) {
        Point p = q;
        p.push_back(CScalar());
        pts.push_back(p);
    }
    return pts;
}

}  // namespace

Hypersurface sphere(int n) {
    if (n < 1) throw std::invalid_argument("sphere: dimension must be >= 1");
    MPoly rho(n);
    for (int j = 0; j < n; ++j) rho += MPoly::variable(n, j) * MPoly::conj_variable(n, j);
    rho -= MPoly::constant(n, CScalar(1L));
    return Hypersurface(n, rho, sphere_stock(n));
}

MPoly substitute_map(const MPoly& p, const HoloMap& F) {
    int np = p.nvars();
    if (np != F.tgt_dim) throw std::invalid_argument("substitute_map: arity mismatch");
    std::vector<MPoly> images;
    images.reserve(2 * np);
    for (int j = 0; j < np; ++j) images.push_back(F.comps[j]);
    for (int j = 0; j < np; ++j) images.push_back(F.comps[j].conj());
    return p.compose(images);
}

MPoly pullback_defining(const HoloMap& H, const Hypersurface& target) {
    if (target.dim() != H.tgt_dim) throw std::invalid_argument("pullback_defining: dimension mismatch");
    return substitute_map(target.rho(), H);
}

bool maps_into(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp) {
    if (H.src_dim != M.dim() || H.tgt_dim != Mp.dim())
        throw std::invalid_argument("maps_into: dimension mismatch");
    return poly_reduce(pullback_defining(H, Mp), M.rho()).is_zero();
}

std::vector<Point> rational_points(const Hypersurface& M, int count) {
    std::vector<Point> pts = M.points();
    if (M.is_sphere()) {
        for (const auto& p : sphere_stock(M.dim())) {
            bool dup = false;
            for (const auto& q : pts) dup = dup || q == p;
            if (!dup) pts.push_back(p);
        }
    }
    if (pts.empty()) throw std::runtime_error("rational_points: no points available for this hypersurface");
    if (count < static_cast<int>(pts.size())) pts.resize(count);
    return pts;
}

std::vector<CRField> cr_basis(const Hypersurface& M) {
    int n = M.dim();
    const MPoly& rho = M.rho();
    std::vector<MPoly> grad;
    for (int i = 0; i < n; ++i) grad.push_back(rho.derivative(n + i));

    int pivot = -1;
    for (int i = 0; i < n; ++i) {
        if (!grad[i].is_zero()) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) throw std::runtime_error("cr_basis: gradient in the conjugate variables vanishes identically");

    std::vector<CRField> fields;
    for (int i = 0; i < n; ++i) {
        if (i == pivot) continue;
        CRField L;
        L.coeffs.assign(n, MPoly(n));
        L.coeffs[pivot] = grad[i];
        L.coeffs[i] = -grad[pivot];
        if (!poly_reduce(L.apply(rho), rho).is_zero())
            throw std::logic_error("cr_basis: field fails to annihilate rho");
        fields.push_back(std::move(L));
    }
    return fields;
}

std::vector<std::vector<int>> multiindices_up_to(int nvars, int k) {
    std::vector<std::vector<int>> out;
    out.push_back(std::vector<int>(nvars, 0));
    if (nvars == 0) return out;
    for (int deg = 1; deg <= k; ++deg) {
        std::vector<std::vector<int>> next;
        // all multiindices of total degree deg, lexicographically descending
        std::vector<int> alpha(nvars, 0);
        alpha[0] = deg;
        while (true) {
            next.push_back(alpha);
            // next composition in reverse-lex order
            int i = nvars - 2;
            while (i >= 0 && alpha[i] == 0) --i;
            if (i < 0) break;
            alpha[i] -= 1;
            int rest = 1;
            for (int j = i + 1; j < nvars; ++j) {
                rest += alpha[j];
                alpha[j] = 0;
            }
            alpha[i + 1] = rest;
        }
        for (auto& a : next) out.push_back(a);
    }
    return out;
}

Jet jet_at(const HoloMap& H, const Point& p, int k) {
    if (k < 0) throw std::invalid_argument("jet_at: order must be >= 0");
    Jet jet;
    jet.multiindices = multiindices_up_to(H.src_dim, k);
    jet.values.resize(H.tgt_dim);
    for (int c = 0; c < H.tgt_dim; ++c) {
        for (const auto& alpha : jet.multiindices) {
            MPoly q = H.comps[c];
            for (int v = 0; v < H.src_dim; ++v)
                for (int rep = 0; rep < alpha[v]; ++rep) q = q.derivative(v);
            jet.values[c].push_back(q.eval(p));
        }
    }
    return jet;
}

bool is_tangent_field(const PolyVectorField& X, const Hypersurface& M) {
    int n = M.dim();
    if (static_cast<int>(X.comps.size()) != n) throw std::invalid_argument("is_tangent_field: arity mismatch");
    MPoly e(n);
    for (int j = 0; j < n; ++j) e += X.comps[j] * M.rho().derivative(j);
    return poly_reduce(real_part(e), M.rho()).is_zero();
}

HoloMap compose_maps(const HoloMap& outer, const HoloMap& inner) {
    if (outer.src_dim != inner.tgt_dim) throw std::invalid_argument("compose_maps: dimension mismatch");
    std::vector<MPoly> comps;
    for (const auto& c : outer.comps) comps.push_back(substitute_map(c, inner));
    return HoloMap(inner.src_dim, std::move(comps));
}

PolyAutomorphism::PolyAutomorphism(HoloMap f, HoloMap g) : fwd(std::move(f)), inv(std::move(g)) {
    if (fwd.src_dim != fwd.tgt_dim || inv.src_dim != inv.tgt_dim || fwd.src_dim != inv.src_dim)
        throw std::invalid_argument("PolyAutomorphism: not an endomorphism pair");
    HoloMap id = identity_map(fwd.src_dim);
    HoloMap a = compose_maps(fwd, inv);
    HoloMap b = compose_maps(inv, fwd);
    for (int j = 0; j < fwd.src_dim; ++j)
        if (a.comps[j] != id.comps[j] || b.comps[j] != id.comps[j])
            throw std::invalid_argument("PolyAutomorphism: supplied inverse is not an exact inverse");
}

std::vector<MPoly> pushforward_deformation(const std::vector<MPoly>& V, const PolyAutomorphism& phi,
                                           const PolyAutomorphism& phi_prime, const HoloMap& H) {
    int np = phi_prime.fwd.src_dim;
    if (static_cast<int>(V.size()) != np || H.tgt_dim != np)
        throw std::invalid_argument("pushforward_deformation: dimension mismatch");
    // W_i(Z) = sum_j (d phi'_i / dZ'_j)(H(Z)) V_j(Z), then precompose with phi^{-1}.
    std::vector<MPoly> out;
    for (int i = 0; i < np; ++i) {
        MPoly w(H.src_dim);
        for (int j = 0; j < np; ++j) {
            if (V[j].is_zero()) continue;
            MPoly dij = phi_prime.fwd.comps[i].derivative(j);
            if (dij.is_zero()) continue;
            w += substitute_map(dij, H) * V[j];
        }
        HoloMap winv = phi.inv;
        out.push_back(substitute_map(w, winv));
    }
    return out;
}

}  // namespace crrigid
