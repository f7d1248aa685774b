#include "crrigid/linsys.hpp"

#include <stdexcept>

namespace crrigid {

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
BigInt big_lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return a / big_gcd(a, b) * b;
}

}  // namespace

Elimination::Elimination(const LinearSystem& sys, const QMat& rhs_columns) {
    cols_ = sys.cols();
    nrhs_ = static_cast<int>(rhs_columns.size());
    int m = sys.nrows();
    row_labels_ = sys.row_labels;
    for (const auto& col : rhs_columns)
        if (static_cast<int>(col.size()) != m) throw std::invalid_argument("Elimination: rhs length mismatch");

    // Determine the shared radicand.
    auto take_rad = [this](const QuadExt& v) {
        if (v.d == 0) return;
        if (rad_ == 0) rad_ = v.d;
        else if (rad_ != v.d) throw std::invalid_argument("Elimination: mixed radicands");
    };
    for (const auto& row : sys.rows)
        for (const auto& v : row) take_rad(v);
    for (const auto& col : rhs_columns)
        for (const auto& v : col) take_rad(v);

    // Clear denominators row by row.
    w_.assign(m, {});
    for (int r = 0; r < m; ++r) {
        if (static_cast<int>(sys.rows[r].size()) != cols_)
            throw std::invalid_argument("Elimination: ragged matrix");
        std::vector<QuadExt> full(sys.rows[r]);
        for (int k = 0; k < nrhs_; ++k) full.push_back(rhs_columns[k][r]);
        BigInt lcm = 1;
        for (const auto& v : full) {
            lcm = big_lcm(lcm, denominator_of(v.a));
            lcm = big_lcm(lcm, denominator_of(v.b));
        }
        std::vector<ZQ> zrow;
        zrow.reserve(full.size());
        for (const auto& v : full) {
            ZQ z;
            z.x = numerator_of(v.a) * (lcm / denominator_of(v.a));
            z.y = numerator_of(v.b) * (lcm / denominator_of(v.b));
            zrow.push_back(std::move(z));
        }
        strip_content(zrow);
        w_[r] = std::move(zrow);
    }

    used_.assign(m, false);
    for (int c = 0; c < cols_; ++c) {
        int piv = -1;
        for (int r = 0; r < m; ++r) {
            if (!used_[r] && !w_[r][c].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        used_[piv] = true;
        pivots_.emplace_back(c, piv);
        const std::vector<ZQ> prow = w_[piv];
        for (int r = 0; r < m; ++r) {
            if (used_[r] || w_[r][c].is_zero()) continue;
            const ZQ f = w_[r][c];
            for (int j = c; j < cols_ + nrhs_; ++j) {
                ZQ t1 = mul(prow[c], w_[r][j]);
                ZQ t2 = mul(f, prow[j]);
                w_[r][j] = ZQ{t1.x - t2.x, t1.y - t2.y};
            }
            strip_content(w_[r]);
        }
    }
}

Elimination::ZQ Elimination::mul(const ZQ& a, const ZQ& b) const {
    ZQ r;
    r.x = a.x * b.x + BigInt(rad_) * a.y * b.y;
    r.y = a.x * b.y + a.y * b.x;
    return r;
}

QuadExt Elimination::to_field(const ZQ& a) const { return QuadExt(Rational(a.x), Rational(a.y), a.y == 0 ? 0 : rad_); }

void Elimination::strip_content(std::vector<ZQ>& row) const {
    BigInt g = 0;
    for (const auto& v : row) {
        g = big_gcd(g, v.x);
        g = big_gcd(g, v.y);
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& v : row) {
        v.x /= g;
        v.y /= g;
    }
}

QMat Elimination::kernel_basis() const {
    std::vector<int> pivot_col_row(cols_, -1);
    for (const auto& [c, r] : pivots_) pivot_col_row[c] = r;

    QMat basis;
    for (int f = 0; f < cols_; ++f) {
        if (pivot_col_row[f] >= 0) continue;
        QVec v(cols_, QuadExt(Rational(0)));
        v[f] = QuadExt(Rational(1));
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            auto [c, r] = *it;
            QuadExt acc(Rational(0));
            for (int j = c + 1; j < cols_; ++j) {
                if (v[j].is_zero() || w_[r][j].is_zero()) continue;
                acc = acc + to_field(w_[r][j]) * v[j];
            }
            v[c] = -acc / to_field(w_[r][c]);
        }
        // normalize: first nonzero entry in column order equals 1
        for (int j = 0; j < cols_; ++j) {
            if (!v[j].is_zero()) {
                QuadExt lead = v[j];
                for (auto& x : v) x = x / lead;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<int> Elimination::nonpivot_rows() const {
    std::vector<int> out;
    for (int r = 0; r < static_cast<int>(w_.size()); ++r)
        if (!used_[r]) out.push_back(r);
    return out;
}

QVec Elimination::coker_values(int rhs_index) const {
    if (rhs_index < 0 || rhs_index >= nrhs_) throw std::out_of_range("Elimination: rhs index");
    QVec out;
    for (int r : nonpivot_rows()) out.push_back(to_field(w_[r][cols_ + rhs_index]));
    return out;
}

SolveOutcome Elimination::outcome(int rhs_index) const {
    if (rhs_index < 0 || rhs_index >= nrhs_) throw std::out_of_range("Elimination: rhs index");
    int bcol = cols_ + rhs_index;
    SolveOutcome out;
    for (int r = 0; r < static_cast<int>(w_.size()); ++r) {
        if (used_[r] || w_[r][bcol].is_zero()) continue;
        out.consistent = false;
        break;
    }
    if (!out.consistent) {
        for (int r : nonpivot_rows()) {
            out.residual.push_back(to_field(w_[r][bcol]));
            if (!w_[r][bcol].is_zero() && r < static_cast<int>(row_labels_.size()))
                out.residual_labels.push_back(row_labels_[r]);
        }
        return out;
    }
    QVec x(cols_, QuadExt(Rational(0)));
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        auto [c, r] = *it;
        QuadExt acc = to_field(w_[r][bcol]);
        for (int j = c + 1; j < cols_; ++j) {
            if (x[j].is_zero() || w_[r][j].is_zero()) continue;
            acc = acc - to_field(w_[r][j]) * x[j];
        }
        x[c] = acc / to_field(w_[r][c]);
    }
    out.particular = std::move(x);
    return out;
}

KernelResult kernel(const LinearSystem& sys) {
    if (!sys.rhs.empty()) throw std::invalid_argument("kernel: system must be homogeneous");
    Elimination elim(sys, {});
    KernelResult res;
    res.rank = elim.rank();
    res.basis = elim.kernel_basis();
    return res;
}

FullSolveResult solve(const LinearSystem& sys) {
    QMat rhs_cols;
    if (!sys.rhs.empty()) rhs_cols.push_back(sys.rhs);
    else rhs_cols.push_back(QVec(sys.nrows(), QuadExt(Rational(0))));
    Elimination elim(sys, rhs_cols);
    FullSolveResult res;
    res.rank = elim.rank();
    SolveOutcome out = elim.outcome(0);
    res.consistent = out.consistent;
    res.particular = std::move(out.particular);
    res.residual = std::move(out.residual);
    res.residual_labels = std::move(out.residual_labels);
    if (res.consistent) res.kernel = elim.kernel_basis();
    return res;
}

int rank_of(const QMat& rows) {
    if (rows.empty()) return 0;
    LinearSystem sys;
    sys.col_labels.assign(rows[0].size(), "");
    sys.rows = rows;
    Elimination elim(sys, {});
    return elim.rank();
}

void RowSpan::reduce(QVec& v) const {
    for (size_t k = 0; k < reduced_.size(); ++k) {
        int p = pivot_of_[k];
        if (v[p].is_zero()) continue;
        QuadExt f = v[p];
        for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * reduced_[k][j];
    }
}

bool RowSpan::add(QVec v) {
    reduce(v);
    for (size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero()) {
            QuadExt lead = v[j];
            for (auto& x : v) x = x / lead;
            reduced_.push_back(std::move(v));
            pivot_of_.push_back(static_cast<int>(j));
            return true;
        }
    }
    return false;
}

bool RowSpan::contains(QVec v) const {
    reduce(v);
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<QVec> coordinates_in_span(const QMat& rows, const QVec& v) {
    if (rows.empty()) return std::nullopt;
    LinearSystem sys;
    sys.col_labels.assign(rows.size(), "");
    int len = static_cast<int>(rows[0].size());
    sys.rows.assign(len, QVec(rows.size(), QuadExt(Rational(0))));
    for (size_t k = 0; k < rows.size(); ++k)
        for (int j = 0; j < len; ++j) sys.rows[j][k] = rows[k][j];
    sys.rhs = v;
    FullSolveResult res = solve(sys);
    if (!res.consistent) return std::nullopt;
    return res.particular;
}

}  // namespace crrigid
