/*
 * higher.hpp
 * ----------
 * Order-k deformation theory along a map H : M -> M'.
 *
 * A JetCurve is the truncated curve h(t) = H + sum_{l=1..k} V^l t^l.  The
 * coefficients c_l of rho'(h(t), conj h(t)) are computed by direct
 * truncated substitution; c_l = 2 Re(sum_j V^l_j rho'_{Z'_j}) + (terms in
 * V^1..V^{l-1}) by construction, so membership in hol^k and the
 * prolongation system at the next order fall out without any separate
 * bookkeeping for the universal polynomials.
 *
 * Prolongation solves the affine-linear system in V^{j+1} with the same
 * homogeneous operator as solve_hol; when the system is inconsistent, the
 * residual coordinates in the cokernel (non-pivot rows of the eliminated
 * system) are reported.  The order-2 obstruction is exposed as exact
 * quadratic forms on the coordinates of a hol^1 basis.
 */
#pragma once

#include "crrigid/infdef.hpp"

namespace crrigid {

struct JetCurve {
    HoloMap base;
    std::vector<VectorSection> coeffs;  // V^1 .. V^k

    int order() const { return static_cast<int>(coeffs.size()); }
    JetCurve truncated(int j) const;  // pi_j
};

JetCurve make_jet(const HoloMap& H, std::vector<VectorSection> coeffs);

// Coefficients c_0..c_k of rho'(h(t), conj h(t)) truncated at t^k.
std::vector<MPoly> expand_defining_along_curve(const MPoly& rho_target, const JetCurve& h, int k);

bool is_member_holk(const JetCurve& h, const Hypersurface& M, const Hypersurface& Mp);

struct ProlongationResult {
    bool extended = false;
    VectorSection particular;              // a valid V^{j+1} (extended case)
    std::vector<VectorSection> kernel;     // hol_{<=D}(H), the homogeneous solutions
    MPoly residual_poly;                   // reduced inhomogeneity (obstructed case)
    QVec residual_coords;                  // cokernel coordinates of the residual
    std::vector<std::string> residual_labels;
};

ProlongationResult prolong(const JetCurve& h, const Hypersurface& M, const Hypersurface& Mp, int D);

// Shared-operator batch: all jets must have the same base map.
std::vector<ProlongationResult> prolong_batch(const std::vector<JetCurve>& jets, const Hypersurface& M,
                                              const Hypersurface& Mp, int D);

struct ObstructionQuadric {
    std::vector<std::string> coker_labels;      // one label per cokernel coordinate
    std::vector<QMat> forms;                    // forms[r][i][j], symmetric
    int basis_dim = 0;

    QVec eval(const QVec& v) const;
    bool vanishes_at(const QVec& v) const;
    bool is_identically_zero() const;
};

ObstructionQuadric obstruction_quadric(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp,
                                       const DeformationBasis& hol1, int D);

// Order-k jet of the time-t flow of X: phi_l = X^l(Z) / l!.
std::vector<std::vector<MPoly>> lie_series_flow(const PolyVectorField& X, int k);

// pi_k( exp(t S') o H o exp(-t S) ), an element of aut^k(H).
JetCurve autk_sample(const HoloMap& H, const PolyVectorField& S, const PolyVectorField& Sp, int k);

// The family (z, sin(a+t) w, cos(a+t) z w, cos(a+t) w^2) expanded at the
// exact circle point (cos a, sin a) = (c, s).
JetCurve dangelo_jet(const Rational& c, const Rational& s, int k);

}  // namespace crrigid
