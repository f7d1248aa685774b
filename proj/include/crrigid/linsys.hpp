/*
 * linsys.hpp
 * ----------
 * Exact linear algebra over QuadExt.  Systems are assembled with labeled
 * columns (unknowns) and rows (equations); elimination is fraction-free:
 * each row is cleared of rational denominators, updates use cross
 * multiplication only, and rows are divided by their integer content to
 * keep entries small.  Pivots are chosen deterministically (first usable
 * row per column), so kernels, particular solutions and inconsistency
 * residuals are reproducible.
 *
 * Kernel vectors are normalized so that the first nonzero entry in column
 * order equals 1.
 */
#pragma once

#include "crrigid/scalars.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crrigid {

using QVec = std::vector<QuadExt>;
using QMat = std::vector<QVec>;

struct LinearSystem {
    std::vector<std::string> col_labels;
    std::vector<std::string> row_labels;  // optional; sized like rows when used
    QMat rows;
    QVec rhs;  // empty for homogeneous systems

    int cols() const { return static_cast<int>(col_labels.size()); }
    int nrows() const { return static_cast<int>(rows.size()); }
};

struct SolveOutcome {
    bool consistent = true;
    QVec particular;                          // free unknowns set to 0
    QVec residual;                            // values at non-pivot rows (inconsistent case)
    std::vector<std::string> residual_labels; // labels of the nonzero residual rows
};

// Shared elimination of one coefficient matrix against many right-hand sides.
class Elimination {
  public:
    Elimination(const LinearSystem& sys, const QMat& rhs_columns);

    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::vector<std::pair<int, int>>& pivots() const { return pivots_; }  // (col, row)
    QMat kernel_basis() const;
    SolveOutcome outcome(int rhs_index) const;
    // Row indices that never became pivots, in row order (the cokernel slots).
    std::vector<int> nonpivot_rows() const;
    // Eliminated rhs values at the non-pivot rows (all zero iff solvable).
    QVec coker_values(int rhs_index) const;

  private:
    struct ZQ {
        BigInt x, y;  // x + y*sqrt(d)
        bool is_zero() const { return x == 0 && y == 0; }
    };

    int cols_ = 0;
    int nrhs_ = 0;
    std::int64_t rad_ = 0;
    std::vector<std::vector<ZQ>> w_;
    std::vector<std::pair<int, int>> pivots_;
    std::vector<bool> used_;
    std::vector<std::string> row_labels_;

    ZQ mul(const ZQ& a, const ZQ& b) const;
    QuadExt to_field(const ZQ& a) const;
    void strip_content(std::vector<ZQ>& row) const;
};

struct KernelResult {
    int rank = 0;
    QMat basis;
};

KernelResult kernel(const LinearSystem& sys);

struct FullSolveResult {
    bool consistent = true;
    int rank = 0;
    QVec particular;
    QMat kernel;
    QVec residual;
    std::vector<std::string> residual_labels;
};

FullSolveResult solve(const LinearSystem& sys);

int rank_of(const QMat& rows);

// Incremental row space: add() keeps a row only if it enlarges the span.
class RowSpan {
  public:
    bool add(QVec v);
    bool contains(QVec v) const;
    int rank() const { return static_cast<int>(reduced_.size()); }

  private:
    QMat reduced_;              // rows with distinct pivot columns, pivot scaled to 1
    std::vector<int> pivot_of_; // pivot column per reduced row
    void reduce(QVec& v) const;
};

// Expresses v in the span of the given rows; nullopt when v is outside.
std::optional<QVec> coordinates_in_span(const QMat& rows, const QVec& v);

}  // namespace crrigid
