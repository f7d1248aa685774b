/*
 * nondegen.hpp
 * ------------
 * Finite nondegeneracy of a map H : M -> M'.  For a tuple of multiindices
 * iota (one per target dimension) and row choices ell, the witness matrix
 * has rows L^{iota_m} applied to the pulled-back target gradient, where
 * the CR fields differentiate only the conjugate (zeta) dependence.  The
 * nondegeneracy order k0 is the least k whose witness set J_k contains a
 * pair with nonvanishing determinant, either at a point of M or modulo
 * the complexified ideal (rho) for the generic order.
 *
 * With n = dim M - 1 > 1 the CR fields do not commute; L^iota is the
 * ordered composition L_1^{i_1} o ... o L_n^{i_n}.
 */
#pragma once

#include "crrigid/geometry.hpp"

#include <optional>
#include <string>

namespace crrigid {

using Multiindex = std::vector<int>;

struct NondegCertificate {
    bool degenerate = false;  // no witness up to the cap
    int k0 = -1;
    std::vector<Multiindex> iota;
    std::vector<int> ell;                 // 1-based row indices into rho' (always 1 for hypersurfaces)
    std::optional<Point> point;           // nullopt: generic certificate
    CScalar value;                        // determinant value at the point
    MPoly reduced_determinant;            // determinant mod (rho), generic case
    int cap = 0;
};

// Enumerates J_k pairs (iota, ell): max_m |iota_m| == k, lexicographic on the
// concatenated multiindex tuple, then on ell.
class MultiindexEnumerator {
  public:
    MultiindexEnumerator(int cr_dim, int rows, int k, int d_prime = 1);
    bool next(std::vector<Multiindex>& iota, std::vector<int>& ell);

  private:
    std::vector<Multiindex> pool_;  // all |alpha| <= k, ordered
    int rows_;
    int k_;
    int d_prime_;
    std::vector<int> idx_;
    std::vector<int> ell_state_;
    bool done_ = false;
    bool fresh_ = true;

    bool max_is_k() const;
    bool advance();
};

MPoly nondeg_determinant(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp,
                         const std::vector<Multiindex>& iota, const std::vector<int>& ell);

NondegCertificate k0_at_point(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp,
                              const Point& p, int cap);

NondegCertificate k0_generic(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp, int cap);

// The order of the map: the maximum of the generic order and the pointwise
// orders over the validated sample stock.  The generic order can undershoot
// at special points (the degree-three sphere map drops to order 2 off the
// coordinate axes but needs order 3 on them), so the stock points matter.
NondegCertificate k0_order(const HoloMap& H, const Hypersurface& M, const Hypersurface& Mp, int cap);

int default_nondeg_cap(const HoloMap& H);

}  // namespace crrigid
