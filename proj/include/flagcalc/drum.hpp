#pragma once

// Drums over the two-bundle models: the horospherical variety Z obtained as
// the closure of G.[v_i + v_j] in P((V_i + V_j)^v), its C*-action of
// bandwidth one, and the intersection numbers on the blowup of Z along the
// sink and the source.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "flagcalc/homogeneous.hpp"

namespace flagcalc {

/// Dimension of the irreducible representation with highest weight the k-th
/// fundamental weight (Weyl dimension formula, exact rational arithmetic).
BigInt weyl_dim(const DynkinDiagram& d, int k);

struct FixedComponent {
    MarkedDiagram variety;
    int dimension = 0;
    int mu = 0; // linearization weight
};

struct HorosphericalDrum {
    TwoBundleModel model;
    int dim_y = 0;
    int dim_z = 0;
    BigInt dim_vi;
    BigInt dim_vj;
    /// Z sits in P^N with N = dim V_i + dim V_j - 1.
    BigInt ambient_dim;
    /// Sink D(i) with mu = 0, then source D(j) with mu = 1.
    std::vector<FixedComponent> fixed;
};

/// Throws DomainError unless D(i,j) carries two projective bundle structures.
HorosphericalDrum build_drum(const DynkinDiagram& d, int i, int j);

/// mu_max - mu_min; throws DomainError on an empty list.
int bandwidth(std::span<const FixedComponent> fixed);
int bandwidth(const HorosphericalDrum& drum);

/// Divisor classes on the blowup Z' of Z along sink and source, written in
/// the basis (alpha^*L, pi^*L_-, pi^*L_+).
struct DivisorClass {
    std::string name;
    std::array<int, 3> coords;
};

/// A line l_- or l_+ in a fiber of p_- or p_+, lifted to Z' through the
/// section s_- (image Y_-) or s_+ (image Y_+).
struct CurveClass {
    std::string name;
    char section; // '-' or '+'
    char line;    // '-' or '+'
};

/// Affine form constant + coefficient * t, where t = alpha^*L . curve.
struct LinearForm {
    int constant = 0;
    int coefficient = 0;

    int at(int t) const { return constant + coefficient * t; }
    bool operator==(const LinearForm&) const = default;
};

struct IntersectionLedger {
    /// L_a . l_b on Y, indexed [a][b] with 0 = '-' and 1 = '+'.
    std::array<std::array<int, 2>, 2> line_products{};
    std::vector<DivisorClass> classes; // alpha^*L, pi^*L_-, pi^*L_+, Y_-, Y_+, M_-, M_+
    std::vector<CurveClass> curves;    // s_-(l_-), s_-(l_+), s_+(l_-), s_+(l_+)
    /// classes x {l_-, l_+}, with alpha^*L . l left free.
    std::vector<std::array<LinearForm, 2>> symbolic;
    /// classes x curves, fully numeric.
    std::vector<std::vector<int>> table;
    /// Hypotheses carried along, never verified here.
    bool tangent_bundle_nef_assumed = true;
    bool m_minus_nef_assumed = true;
    bool m_plus_nef_assumed = true;

    int product(const std::string& cls, const std::string& curve) const;
};

IntersectionLedger ledger(const HorosphericalDrum& drum);

/// Checks the identities the ledger must satisfy: the exceptional divisors
/// are Y_+ = alpha^*L - pi^*L_- and Y_- = alpha^*L - pi^*L_+, they meet
/// the opposite section trivially, restrict to L_+ - L_- (resp. L_- - L_+)
/// on their own section, and L_-.l_- = L_+.l_+ = 0, L_-.l_+ = L_+.l_- = 1.
bool ledger_consistent(const IntersectionLedger& l);

} // namespace flagcalc
