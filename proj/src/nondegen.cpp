#include "crrigid/nondegen.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace crrigid {

namespace {

void gen_multiindices(int nvars, int budget, Multiindex& cur, std::vector<Multiindex>& out) {
    if (static_cast<int>(cur.size()) == nvars) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= budget; ++v) {
        cur.push_back(v);
        gen_multiindices(nvars, budget - v, cur, out);
        cur.pop_back();
    }
}

std::vector<Multiindex> lex_pool(int nvars, int k) {
    std::vector<Multiindex> out;
    Multiindex cur;
    gen_multiindices(nvars, k, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

int norm_of(const Multiindex& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

MPoly det_of(const std::vector<std::vector<MPoly>>& m, std::vector<int> cols) {
    size_t row = m.size() - cols.size();
    if (cols.size() == 1) return m[row][cols[0]];
    MPoly acc(m[0][0].nvars());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (m[row][cols[j]].is_zero()) continue;
        std::vector<int> rest;
        for (size_t l = 0; l < cols.size(); ++l)
            if (l != j) rest.push_back(cols[l]);
        MPoly minor = det_of(m, rest);
        if (j % 2 == 0)
            acc += m[row][cols[j]] * minor;
        else
            acc -= m[row][cols[j]] * minor;
    }
    return acc;
}

// Shared per-search state: memoized rows L^alpha(gradient row).
struct RowCache {
    std::vector<CRField> fields;
    std::map<Multiindex, std::vector<MPoly>> rows;

    const std::vector<MPoly>& row(const Multiindex& alpha) {
        auto it = rows.find(alpha);
        if (it != rows.end()) return it->second;
        int j = 0;
        while (alpha[j] == 0) ++j;  // alpha != 0 here; base row is preseeded
        Multiindex prev = alpha;
        prev[j] -= 1;
        const std::vector<MPoly>& base = row(prev);
        std::vector<MPoly> r;
        r.reserve(base.size());
        for (const auto& q : base) r.push_back(fields[j].apply(q));
        return rows.emplace(alpha, std::move(r)).first->second;
    }
};

RowCache make_cache(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp) {
    RowCache cache;
    cache.fields = cr_basis(M);
    std::vector<MPoly> base;
    for (int j = 0; j < Mp.dim(); ++j) base.push_back(substitute_map(Mp.rho().derivative(j), H));
    cache.rows.emplace(Multiindex(M.dim() - 1, 0), std::move(base));
    return cache;
}

bool has_duplicate_rows(const std::vector<Multiindex>& iota, const std::vector<int>& ell) {
    for (size_t a = 0; a < iota.size(); ++a)
        for (size_t b = a + 1; b < iota.size(); ++b)
            if (iota[a] == iota[b] && ell[a] == ell[b]) return true;
    return false;
}

MPoly det_for(RowCache& cache, const std::vector<Multiindex>& iota) {
    std::vector<std::vector<MPoly>> m;
    for (const auto& a : iota) m.push_back(cache.row(a));
    std::vector<int> cols(m.size());
    for (size_t j = 0; j < cols.size(); ++j) cols[j] = static_cast<int>(j);
    return det_of(m, cols);
}

template <typename Test>
NondegCertificate search(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp, int cap,
                         Test&& nonzero) {
    RowCache cache = make_cache(H, M, Mp);
    int n = M.dim() - 1;
    NondegCertificate cert;
    cert.cap = cap;
    for (int k = 0; k <= cap; ++k) {
        MultiindexEnumerator en(n, Mp.dim(), k);
        std::vector<Multiindex> iota;
        std::vector<int> ell;
        while (en.next(iota, ell)) {
            if (has_duplicate_rows(iota, ell)) continue;  // determinant vanishes on equal rows
            MPoly det = det_for(cache, iota);
            if (det.is_zero()) continue;
            if (nonzero(det, cert)) {
                cert.degenerate = false;
                cert.k0 = k;
                cert.iota = iota;
                cert.ell = ell;
                return cert;
            }
        }
    }
    cert.degenerate = true;
    return cert;
}

}  // namespace

MultiindexEnumerator::MultiindexEnumerator(int cr_dim, int rows, int k, int d_prime)
    : pool_(lex_pool(cr_dim, k)), rows_(rows), k_(k), d_prime_(d_prime) {
    idx_.assign(rows_, 0);
    ell_state_.assign(rows_, 1);
}

bool MultiindexEnumerator::max_is_k() const {
    int mx = 0;
    for (int i : idx_) mx = std::max(mx, norm_of(pool_[i]));
    return mx == k_;
}

bool MultiindexEnumerator::advance() {
    // odometer over ell first, then iota (so iota is the outer lexicographic key)
    for (int pos = rows_ - 1; pos >= 0; --pos) {
        if (ell_state_[pos] < d_prime_) {
            ++ell_state_[pos];
            return true;
        }
        ell_state_[pos] = 1;
    }
    for (int pos = rows_ - 1; pos >= 0; --pos) {
        if (idx_[pos] + 1 < static_cast<int>(pool_.size())) {
            ++idx_[pos];
            return true;
        }
        idx_[pos] = 0;
    }
    return false;
}

bool MultiindexEnumerator::next(std::vector<Multiindex>& iota, std::vector<int>& ell) {
    if (done_) return false;
    while (true) {
        if (!fresh_) {
            if (!advance()) {
                done_ = true;
                return false;
            }
        }
        fresh_ = false;
        if (max_is_k()) break;
    }
    iota.clear();
    for (int i : idx_) iota.push_back(pool_[i]);
    ell = ell_state_;
    return true;
}

MPoly nondeg_determinant(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp,
                         const std::vector<Multiindex>& iota, const std::vector<int>& ell) {
    if (static_cast<int>(iota.size()) != Mp.dim() || ell.size() != iota.size())
        throw std::invalid_argument("nondeg_determinant: need one multiindex and row index per target dim");
    for (int l : ell)
        if (l != 1) throw std::invalid_argument("nondeg_determinant: hypersurface target has d' = 1");
    for (const auto& a : iota)
        if (static_cast<int>(a.size()) != M.dim() - 1)
            throw std::invalid_argument("nondeg_determinant: multiindex length must equal the CR dimension");
    RowCache cache = make_cache(H, M, Mp);
    return det_for(cache, iota);
}

NondegCertificate k0_at_point(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp,
                              const Point& p, int cap) {
    if (cap < 1) throw std::invalid_argument("k0_at_point: cap must be >= 1");
    if (!M.rho().eval(p).is_zero()) throw std::invalid_argument("k0_at_point: point is not on M");
    NondegCertificate cert = search(H, M, Mp, cap, [&](const MPoly& det, NondegCertificate& c) {
        CScalar v = det.eval(p);
        if (v.is_zero()) return false;
        c.value = v;
        return true;
    });
    cert.point = p;
    return cert;
}

NondegCertificate k0_generic(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp, int cap) {
    if (cap < 1) throw std::invalid_argument("k0_generic: cap must be >= 1");
    return search(H, M, Mp, cap, [&](const MPoly& det, NondegCertificate& c) {
        MPoly r = poly_reduce(det, M.rho());
        if (r.is_zero()) return false;
        c.reduced_determinant = r;
        return true;
    });
}

NondegCertificate k0_order(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp, int cap) {
    NondegCertificate best = k0_generic(H, M, Mp, cap);
    if (best.degenerate) return best;
    std::vector<Point> stock;
    try {
        stock = rational_points(M, 64);
    } catch (const std::exception&) {
        stock = M.points();
    }
    for (const auto& p : stock) {
        NondegCertificate c = k0_at_point(H, M, Mp, p, cap);
        if (c.degenerate) return c;  // order exceeds the cap at this point
        if (c.k0 > best.k0) best = c;
    }
    return best;
}

int default_nondeg_cap(const HoloMap& H) { return H.degree() + 2; }

}  // namespace crrigid
