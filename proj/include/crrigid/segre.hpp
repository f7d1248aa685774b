/*
 * segre.hpp
 * ---------
 * Segre maps in normal coordinates.  The complexification is given as
 * w = Q(z, chi, tau) with Q(z, 0, tau) = Q(0, chi, tau) = tau; the Segre
 * map recursion is
 *
 *   S^1(x_1) = (x_1, 0),   S^q(x_1..x_q) = (x_1, Q(x_1, conj S^{q-1}(x_2..x_q)))
 *
 * where conj acts on coefficients only.  Minimality at the base point is
 * certified by the generic rank of the Jacobian of S^q reaching N; ranks
 * are computed at seeded rational points and certified by symbolic minors
 * when the evaluation comes out below the maximum.
 */
#pragma once

#include "crrigid/geometry.hpp"

#include <cstdint>
#include <optional>

namespace crrigid {

struct NormalComplexification {
    int n = 1;       // CR dimension; codimension is 1
    MPoly Q;         // arity 2n+1: variables z_1..z_n, chi_1..chi_n, tau
    int trunc = 3;   // degree up to which the involution identity is checked
};

// Validates the axioms; throws std::invalid_argument on violation.
NormalComplexification make_normal_complexification(int n, MPoly Q, int trunc = 3);

struct SegreMap {
    int order_q = 0;
    int n = 1;                 // CR dimension
    int N = 2;                 // ambient dimension n + 1
    std::vector<MPoly> comps;  // arity q*n
};

SegreMap build_segre(const NormalComplexification& nc, int q);

int generic_rank(const SegreMap& S, std::uint64_t seed);

struct MinimalityReport {
    std::vector<int> ranks;       // ranks[q-1] = generic rank of S^q
    std::optional<int> t_min;     // least q with full rank N
    int bound = 0;
    std::uint64_t seed = 0;
    std::optional<int> jet_order_hint;  // 2 * t_min * k0 for k0 = 1, when minimal
};

MinimalityReport minimality(const NormalComplexification& nc, int bound, std::uint64_t seed);

std::vector<MPoly> compose_with_segre(const HoloMap& H, const SegreMap& S);

}  // namespace crrigid
