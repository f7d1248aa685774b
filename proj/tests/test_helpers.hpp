// Shared fixtures for the test suites: parse shortcuts, the worked example
// maps, and a minor-expansion rank oracle kept independent of the
// elimination code it cross-checks.
#pragma once

#include "crrigid/geometry.hpp"
#include "crrigid/parser.hpp"

#include <string>
#include <vector>

namespace crtest {

using namespace crrigid;

inline const std::vector<std::string> kZW = {"z", "w"};

inline MPoly pzw(const std::string& text, std::int64_t d = 2) { return parse_poly(text, kZW, d); }

inline Rational Q(long n, long den = 1) { return Rational(n, den); }

// H(z,w) = (z^2, sqrt2 z w, w^2), sphere(2) -> sphere(3)
inline HoloMap example1() {
    return HoloMap(2, {pzw("z^2"), pzw("sqrt*z*w"), pzw("w^2")});
}

// H(z,w) = (z^3, sqrt3 z w, w^3), sphere(2) -> sphere(3)
inline HoloMap example2() {
    return HoloMap(2, {pzw("z^3", 3), pzw("sqrt*z*w", 3), pzw("w^3", 3)});
}

// H(z,w) = (z^2, z w^2, w) on M3 = {|z|^4 + |z|^2 |w|^4 + |w|^2 = 1}
inline HoloMap example3_map() {
    return HoloMap(2, {pzw("z^2"), pzw("z*w^2"), pzw("w")});
}

inline MPoly example3_rho() { return pzw("z^2*~z^2 + z*~z*w^2*~w^2 + w*~w - 1"); }

inline std::vector<Point> example3_points() {
    std::vector<Point> pts;
    pts.push_back({CScalar(1L), CScalar()});
    pts.push_back({CScalar(), CScalar(1L)});
    pts.push_back({CScalar(QuadExt(Q(3, 5)), QuadExt(Q(4, 5))), CScalar()});
    pts.push_back({CScalar(), CScalar(QuadExt(Q(3, 5)), QuadExt(Q(4, 5)))});
    pts.push_back({CScalar::unit_i(), CScalar()});
    return pts;
}

inline Hypersurface example3_M() { return Hypersurface(2, example3_rho(), example3_points()); }

// Determinant by minor expansion; the independent rank oracle for matrices
// up to 5x5 used to cross-check the elimination kernel.
inline QuadExt det_minor_expansion(const QMat& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    QuadExt acc{Rational(0)};
    for (size_t j = 0; j < cols.size(); ++j) {
        if (m[rows[0]][cols[j]].is_zero()) continue;
        std::vector<int> rrest(rows.begin() + 1, rows.end());
        std::vector<int> crest;
        for (size_t l = 0; l < cols.size(); ++l)
            if (l != j) crest.push_back(cols[l]);
        QuadExt minor = det_minor_expansion(m, rrest, crest);
        QuadExt term = m[rows[0]][cols[j]] * minor;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline int rank_by_minors(const QMat& m) {
    if (m.empty()) return 0;
    int R = static_cast<int>(m.size());
    int C = static_cast<int>(m[0].size());
    for (int r = std::min(R, C); r >= 1; --r) {
        std::vector<int> rsel(r), csel(r);
        auto next_comb = [](std::vector<int>& s, int limit) {
            int k = static_cast<int>(s.size());
            for (int i = k - 1; i >= 0; --i) {
                if (s[i] < limit - (k - i)) {
                    ++s[i];
                    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        for (int i = 0; i < r; ++i) rsel[i] = i;
        do {
            for (int i = 0; i < r; ++i) csel[i] = i;
            do {
                if (!det_minor_expansion(m, rsel, csel).is_zero()) return r;
            } while (next_comb(csel, C));
        } while (next_comb(rsel, R));
    }
    return 0;
}

}  // namespace crtest
