/*
 * geometry.hpp
 * ------------
 * Hypersurfaces {rho = 0} with exact sample points, holomorphic polynomial
 * maps between them, CR vector fields on the complexification, polynomial
 * vector fields with a tangency test, jets, and the pushforward of
 * deformations under polynomial automorphisms.
 *
 * The complexification is formal: the conjugate slots of an MPoly are read
 * as the independent variables zeta.  "Vanishes on M" is realized as
 * membership in the principal ideal (rho) via poly_reduce.
 */
#pragma once

#include "crrigid/linsys.hpp"
#include "crrigid/mpoly.hpp"

#include <optional>
#include <vector>

namespace crrigid {

using Point = std::vector<CScalar>;

class Hypersurface {
  public:
    // Validates reality conj(rho) == rho, rho != 0, and each sample point.
    Hypersurface(int dim, MPoly rho, std::vector<Point> points = {});

    int dim() const { return n_; }
    const MPoly& rho() const { return rho_; }
    const std::vector<Point>& points() const { return points_; }
    bool is_sphere() const;  // structurally rho == sum Z_j ~Z_j - 1

    void add_point(const Point& p);  // validated

  private:
    int n_;
    MPoly rho_;
    std::vector<Point> points_;
};

struct HoloMap {
    int src_dim = 0;
    int tgt_dim = 0;
    std::vector<MPoly> comps;  // arity src_dim, purely holomorphic

    HoloMap() = default;
    HoloMap(int src, std::vector<MPoly> components);

    int degree() const;
    bool is_homogeneous() const;
    MPoly conj_comp(int i) const { return comps[i].conj(); }
};

HoloMap identity_map(int n);

// A (0,1)-type field sum coeffs[i] * d/d(zeta_i) on the complexification.
struct CRField {
    std::vector<MPoly> coeffs;

    MPoly apply(const MPoly& q) const;
};

// Sum comps[j] * d/dZ_j with polynomial holomorphic coefficients.
struct PolyVectorField {
    std::vector<MPoly> comps;
};

Hypersurface sphere(int n);

// rho'(H(Z), conj(H)(~Z)) as a polynomial on the complexification of the source.
MPoly pullback_defining(const HoloMap& H, const Hypersurface& target);

bool maps_into(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp);

std::vector<Point> rational_points(const Hypersurface& M, int count);

std::vector<CRField> cr_basis(const Hypersurface& M);

// All partial derivatives of H up to order k at p, one row of values per
// component, multiindices in graded lexicographic order.
struct Jet {
    std::vector<std::vector<int>> multiindices;
    std::vector<std::vector<CScalar>> values;  // [component][multiindex]
};

Jet jet_at(const HoloMap& H, const Point& p, int k);

std::vector<std::vector<int>> multiindices_up_to(int nvars, int k);

// Re(sum comps[j] * rho_{Z_j}) reduces to 0 mod (rho).
bool is_tangent_field(const PolyVectorField& X, const Hypersurface& M);

// Polynomial automorphism with an explicitly supplied polynomial inverse.
struct PolyAutomorphism {
    HoloMap fwd;
    HoloMap inv;

    PolyAutomorphism(HoloMap f, HoloMap g);  // verifies both compositions
};

// Section along H -> section along phi_prime o H o phi^{-1}:
// (D phi' . V) o phi^{-1}, with D phi' evaluated along H.
std::vector<MPoly> pushforward_deformation(const std::vector<MPoly>& V, const PolyAutomorphism& phi,
                                           const PolyAutomorphism& phi_prime, const HoloMap& H);

// Substitute Z |-> F(Z), ~Z |-> conj(F)(~Z) into p.
MPoly substitute_map(const MPoly& p, const HoloMap& F);

HoloMap compose_maps(const HoloMap& outer, const HoloMap& inner);

}  // namespace crrigid
