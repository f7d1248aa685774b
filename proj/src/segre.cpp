#include "crrigid/segre.hpp"

#include <functional>
#include <random>
#include <stdexcept>

namespace crrigid {

namespace {

// substitute purely holomorphic images (conjugate slots must be unused)
MPoly subst_holo(const MPoly& p, const std::vector<MPoly>& z_images, int arity) {
    std::vector<MPoly> images(2 * p.nvars(), MPoly(arity));
    for (int i = 0; i < p.nvars(); ++i) images[i] = z_images[i];
    for (int i = 0; i < p.nvars(); ++i) images[p.nvars() + i] = MPoly(arity);
    if (!p.is_holomorphic()) throw std::invalid_argument("segre: polynomial uses conjugate variables");
    return p.compose(images);
}

MPoly drop_high_degrees(const MPoly& p, int maxdeg) {
    MPoly out(p.nvars());
    for (const auto& [m, c] : p.terms())
        if (m.total_degree() <= maxdeg) out.add_term(m, c);
    return out;
}

}  // namespace

NormalComplexification make_normal_complexification(int n, MPoly Q, int trunc) {
    if (n < 1) throw std::invalid_argument("NormalComplexification: n must be >= 1");
    if (Q.nvars() != 2 * n + 1) throw std::invalid_argument("NormalComplexification: Q arity must be 2n+1");
    if (!Q.is_holomorphic())
        throw std::invalid_argument("NormalComplexification: Q must not use conjugate slots");
    int arity = 2 * n + 1;

    MPoly tau = MPoly::variable(arity, 2 * n);

    // Q(z, 0, tau) == tau
    {
        std::vector<MPoly> im;
        for (int i = 0; i < n; ++i) im.push_back(MPoly::variable(arity, i));
        for (int i = 0; i < n; ++i) im.push_back(MPoly(arity));
        im.push_back(tau);
        if (subst_holo(Q, im, arity) != tau)
            throw std::invalid_argument("NormalComplexification: Q(z, 0, tau) != tau");
    }
    // Q(0, chi, tau) == tau
    {
        std::vector<MPoly> im;
        for (int i = 0; i < n; ++i) im.push_back(MPoly(arity));
        for (int i = 0; i < n; ++i) im.push_back(MPoly::variable(arity, n + i));
        im.push_back(tau);
        if (subst_holo(Q, im, arity) != tau)
            throw std::invalid_argument("NormalComplexification: Q(0, chi, tau) != tau");
    }
    // involution: Q(z, chi, conj Q(chi, z, w)) == w up to total degree trunc
    {
        MPoly Qbar = Q.conj();
        // conj swaps slot halves; move back to the holomorphic slots
        std::vector<MPoly> unswap(2 * arity, MPoly(arity));
        for (int i = 0; i < arity; ++i) unswap[arity + i] = MPoly::variable(arity, i);
        Qbar = Qbar.compose(unswap);  // coefficients conjugated, variables restored

        std::vector<MPoly> swap_zs;
        for (int i = 0; i < n; ++i) swap_zs.push_back(MPoly::variable(arity, n + i));  // chi
        for (int i = 0; i < n; ++i) swap_zs.push_back(MPoly::variable(arity, i));      // z
        swap_zs.push_back(tau);                                                        // w := tau slot
        MPoly inner = subst_holo(Qbar, swap_zs, arity);

        std::vector<MPoly> outer;
        for (int i = 0; i < n; ++i) outer.push_back(MPoly::variable(arity, i));
        for (int i = 0; i < n; ++i) outer.push_back(MPoly::variable(arity, n + i));
        outer.push_back(inner);
        MPoly full = subst_holo(Q, outer, arity) - tau;
        if (!drop_high_degrees(full, trunc).is_zero())
            throw std::invalid_argument(
                "NormalComplexification: involution identity fails below the truncation degree");
    }

    NormalComplexification nc;
    nc.n = n;
    nc.Q = std::move(Q);
    nc.trunc = trunc;
    return nc;
}

SegreMap build_segre(const NormalComplexification& nc, int q) {
    if (q < 1) throw std::invalid_argument("build_segre: order must be >= 1");
    int n = nc.n;

    SegreMap S;
    S.order_q = 1;
    S.n = n;
    S.N = n + 1;
    S.comps.clear();
    for (int i = 0; i < n; ++i) S.comps.push_back(MPoly::variable(n, i));
    S.comps.push_back(MPoly(n));  // (x_1, 0)

    for (int ord = 2; ord <= q; ++ord) {
        int arity = ord * n;
        // re-embed S^{ord-1}, conjugate coefficients, shift variables to x_2..x_ord
        std::vector<MPoly> prev_shift;
        for (const auto& comp : S.comps) {
            MPoly c = comp.conj();  // conjugate coefficients, variables land in conj slots
            std::vector<MPoly> unswap(2 * comp.nvars(), MPoly(arity));
            for (int i = 0; i < comp.nvars(); ++i)
                unswap[comp.nvars() + i] = MPoly::variable(arity, n + i);
            prev_shift.push_back(c.compose(unswap));
        }
        std::vector<MPoly> images;
        for (int i = 0; i < n; ++i) images.push_back(MPoly::variable(arity, i));  // z := x_1
        for (auto& pc : prev_shift) images.push_back(std::move(pc));              // (chi, tau)
        MPoly last = subst_holo(nc.Q, images, arity);

        SegreMap next;
        next.order_q = ord;
        next.n = n;
        next.N = n + 1;
        for (int i = 0; i < n; ++i) next.comps.push_back(MPoly::variable(arity, i));
        next.comps.push_back(std::move(last));
        S = std::move(next);
    }
    S.order_q = q;
    return S;
}

int generic_rank(const SegreMap& S, std::uint64_t seed) {
    int rows = S.N;
    int cols = S.order_q * S.n;
    std::vector<std::vector<MPoly>> jac(rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) jac[r].push_back(S.comps[r].derivative(c));

    // evaluation at a seeded rational point
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<CScalar> pt;
    for (int c = 0; c < cols; ++c) pt.push_back(CScalar(Rational(num(rng), den(rng))));

    QMat rows_re_im;
    std::vector<std::vector<CScalar>> vals(rows, std::vector<CScalar>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) vals[r][c] = jac[r][c].eval(pt);

    // complex Gaussian elimination on the evaluated matrix
    int eval_rank = 0;
    {
        auto m = vals;
        int rr = 0;
        for (int c = 0; c < cols && rr < rows; ++c) {
            int piv = rr;
            while (piv < rows && m[piv][c].is_zero()) ++piv;
            if (piv == rows) continue;
            std::swap(m[piv], m[rr]);
            for (int k = rr + 1; k < rows; ++k) {
                if (m[k][c].is_zero()) continue;
                CScalar f = m[k][c] / m[rr][c];
                for (int j = c; j < cols; ++j) m[k][j] = m[k][j] - f * m[rr][j];
            }
            ++rr;
            ++eval_rank;
        }
    }
    int maxrank = std::min(rows, cols);
    if (eval_rank == maxrank) return eval_rank;

    // certify by symbolic minors: find the largest r with a nonzero r x r minor
    auto minor_nonzero = [&](int size) {
        std::vector<int> rsel(size), csel(size);
        for (int i = 0; i < size; ++i) rsel[i] = i;
        auto next_comb = [](std::vector<int>& sel, int limit) {
            int k = static_cast<int>(sel.size());
            for (int i = k - 1; i >= 0; --i) {
                if (sel[i] < limit - (k - i)) {
                    ++sel[i];
                    for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            for (int i = 0; i < size; ++i) csel[i] = i;
            do {
                // Laplace expansion of the selected minor
                std::vector<std::vector<MPoly>> sub(size);
                for (int i = 0; i < size; ++i)
                    for (int j = 0; j < size; ++j) sub[i].push_back(jac[rsel[i]][csel[j]]);
                std::function<MPoly(std::vector<int>)> det = [&](std::vector<int> colsleft) -> MPoly {
                    size_t row = size - colsleft.size();
                    if (colsleft.size() == 1) return sub[row][colsleft[0]];
                    MPoly acc(sub[0][0].nvars());
                    for (size_t j = 0; j < colsleft.size(); ++j) {
                        if (sub[row][colsleft[j]].is_zero()) continue;
                        std::vector<int> rest;
                        for (size_t l = 0; l < colsleft.size(); ++l)
                            if (l != j) rest.push_back(colsleft[l]);
                        MPoly mn = det(rest);
                        if (j % 2 == 0) acc += sub[row][colsleft[j]] * mn;
                        else acc -= sub[row][colsleft[j]] * mn;
                    }
                    return acc;
                };
                std::vector<int> all(size);
                for (int i = 0; i < size; ++i) all[i] = i;
                if (!det(all).is_zero()) return true;
            } while (next_comb(csel, cols));
        } while (next_comb(rsel, rows));
        return false;
    };

    int r = maxrank;
    while (r > eval_rank && !minor_nonzero(r)) --r;
    return r;
}

MinimalityReport minimality(const NormalComplexification& nc, int bound, std::uint64_t seed) {
    if (bound < 1) throw std::invalid_argument("minimality: bound must be >= 1");
    MinimalityReport rep;
    rep.bound = bound;
    rep.seed = seed;
    for (int q = 1; q <= bound; ++q) {
        SegreMap S = build_segre(nc, q);
        int r = generic_rank(S, seed);
        rep.ranks.push_back(r);
        if (!rep.t_min && r == S.N) rep.t_min = q;
    }
    if (rep.t_min) rep.jet_order_hint = 2 * *rep.t_min;  // times k0, at k0 = 1
    return rep;
}

std::vector<MPoly> compose_with_segre(const HoloMap& H, const SegreMap& S) {
    if (H.src_dim != S.N) throw std::invalid_argument("compose_with_segre: dimension mismatch");
    int arity = S.order_q * S.n;
    std::vector<MPoly> out;
    for (const auto& c : H.comps) out.push_back(subst_holo(c, S.comps, arity));
    return out;
}

}  // namespace crrigid
