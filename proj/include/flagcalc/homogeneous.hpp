#pragma once

// Rational homogeneous varieties G/P presented as marked Dynkin diagrams.
// A diagram marked on I stands for G/P(I^c); the complete flag manifold is
// the diagram marked everywhere.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagcalc/dynkin.hpp"

namespace flagcalc {

struct MarkedDiagram {
    DynkinDiagram diagram;
    NodeSet marks;

    bool operator==(const MarkedDiagram&) const = default;
};

/// Validates the invariants (marks nonempty and inside the node range).
MarkedDiagram make_marked(DynkinDiagram d, NodeSet marks);

/// Syntax `B3{1,3}`; the diagram part follows parse_diagram and marks are
/// given in raw numbering (so `D3{1}` becomes `A3{2}`).
MarkedDiagram parse_marked(std::string_view text);
std::string render(const MarkedDiagram& m);

NodeSet parse_node_list(std::string_view text);

/// Number of positive roots whose support meets the marks.
int dimension(const MarkedDiagram& m);
int picard_number(const MarkedDiagram& m);

/// Fiber of the contraction D(J) -> D(I): the subdiagram on I^c marked at
/// J \ I, with unmarked components dropped.
struct ContractionFiber {
    NodeSet base_marks;
    NodeSet total_marks;
    MarkedDiagram fiber;
    /// fiber_origin[k-1] is the node of the ambient diagram behind fiber node k.
    std::vector<int> fiber_origin;
    /// Unmarked components of D_{I^c}; they contract to points.
    std::vector<Component> dropped;
};

ContractionFiber contraction_fiber(const DynkinDiagram& d, const NodeSet& total, const NodeSet& base);

/// Some(r) iff the marked diagram is isomorphic to P^r.
std::optional<int> is_projective_space(const MarkedDiagram& m);

/// Canonical representative of a connected marked diagram up to diagram
/// automorphisms and the B2/C2 coincidence: smallest family letter, then the
/// lexicographically smallest mark set.
MarkedDiagram canonical_form(const MarkedDiagram& m);

/// A rational homogeneous variety of Picard number two with two projective
/// bundle structures p_-: D(i,j) -> D(i) and p_+: D(i,j) -> D(j).
/// r_minus and r_plus are the relative dimensions of p_- and p_+.
struct TwoBundleModel {
    DynkinDiagram diagram;
    int i = 0;
    int j = 0;
    int r_minus = 0;
    int r_plus = 0;

    bool operator==(const TwoBundleModel&) const = default;
};

/// Some(model) iff both contractions of D(i,j) are projective bundles.
std::optional<TwoBundleModel> two_bundle_model(const DynkinDiagram& d, int i, int j);

/// Every connected diagram of rank <= max_rank carrying a pair of marks with
/// two projective bundle structures, one entry per isomorphism class, sorted.
std::vector<TwoBundleModel> enumerate_two_bundles(int max_rank);

/// Connected normal-form diagrams of rank in [1, max_rank], in a fixed order.
std::vector<Component> connected_components_up_to(int max_rank);

} // namespace flagcalc
