/*
 * infdef.hpp
 * ----------
 * First-order infinitesimal deformations of a map H : M -> M'.
 *
 * A section X = (X_1..X_{N'}) of holomorphic polynomials on the source
 * belongs to hol(H) when Re(sum_j X_j rho'_{Z'_j}(H, conj H)) reduces to 0
 * modulo (rho).  solve_hol assembles the coefficient-matching linear
 * system over QuadExt (unknowns split into real and imaginary parts) and
 * extracts an exact kernel basis.
 *
 * aut(H) = H_*(hol(M)) + hol(M')|_H is the space of trivial deformations;
 * compute_aut also returns the infinitesimal stabilizer, the pairs (S, S')
 * with H_*S + S' o H = 0.
 */
#pragma once

#include "crrigid/geometry.hpp"

#include <functional>
#include <string>

namespace crrigid {

struct VectorSection {
    std::vector<MPoly> comps;  // arity = source dimension, purely holomorphic

    int degree() const;
};

struct DeformationBasis {
    std::vector<VectorSection> basis;
    int degree_cap = 0;
    bool exact = false;  // certified complete at this cap

    int dim() const { return static_cast<int>(basis.size()); }
};

// One unknown of the hol operator: coefficient of Z^alpha in component
// `comp`, real or imaginary part.
struct HolColumn {
    int comp;
    std::vector<int> alpha;
    bool imag;
};

struct HolOperator {
    std::vector<HolColumn> columns;
    LinearSystem sys;  // homogeneous part; rows labeled by monomial and part
    std::vector<Monomial> row_monomials;
    std::vector<bool> row_imag;

    // Right-hand column for "operator(X) = -q" with q already reduced mod rho.
    QVec rhs_for(const MPoly& q_reduced) const;
};

// The linear operator X |-> reduce(2 Re(sum X_j rho'_{Z'_j}(H, conj H)), rho)
// restricted to the span of the given Z-monomials (shared by components).
// extra_rows extends the row universe so right-hand sides fit.
HolOperator build_hol_operator(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp,
                               const std::vector<std::vector<int>>& monomials,
                               const std::vector<MPoly>& extra_rows = {});

DeformationBasis solve_hol(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp, int degree_cap);

bool hol_membership(const std::vector<MPoly>& X, const HoloMap& H, const Hypersurface& M,
                    const Hypersurface& Mp);

// The n^2 + 2n generators (A Z + b - <Z,b> Z) d/dZ of hol(sphere(n)),
// A over the skew-Hermitian basis and b over the standard complex basis.
std::vector<PolyVectorField> sphere_hol_generators(int n);

struct AutDecomposition {
    std::vector<VectorSection> source_basis;  // basis of H_*(hol(M))
    std::vector<VectorSection> target_basis;  // basis of hol(M')|_H
    std::vector<VectorSection> aut_basis;     // basis of the sum
    std::vector<std::pair<PolyVectorField, PolyVectorField>> stabilizer;  // (S, S') pairs
    int hol_M_dim = 0;
    int hol_Mp_dim = 0;

    int dim_source() const { return static_cast<int>(source_basis.size()); }
    int dim_target() const { return static_cast<int>(target_basis.size()); }
    int dim_aut() const { return static_cast<int>(aut_basis.size()); }
    int dim_stabilizer() const { return static_cast<int>(stabilizer.size()); }
};

VectorSection apply_pushforward(const HoloMap& H, const PolyVectorField& S);    // H_* S
VectorSection restrict_to_map(const PolyVectorField& Sp, const HoloMap& H);     // S' o H

AutDecomposition compute_aut(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp,
                             const std::vector<PolyVectorField>& gens_M,
                             const std::vector<PolyVectorField>& gens_Mp);

struct RigidityVerdict {
    bool rigid = false;
    std::string verdict;
    int dim_hol = 0;
    int dim_aut = 0;
    int dim_stabilizer = 0;
    int complement = 0;
    int hol_M_dim = 0;
    int hol_Mp_dim = 0;
    bool exact_basis = false;
    int degree_cap_used = 0;
    DeformationBasis hol;
    AutDecomposition aut;
};

RigidityVerdict rigidity_verdict(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp,
                                 int degree_cap);

// Exact real coefficient vector of a section over the monomials of degree
// <= cap, ordered (component, monomial, Re/Im).
QVec flatten_section(const VectorSection& X, int src_dim, int tgt_dim, int cap);

}  // namespace crrigid
