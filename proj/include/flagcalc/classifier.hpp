#pragma once

// Two projective bundle structures on a Picard number two variety: tag
// consistency checks and lookup among the homogeneous models.

#include <string>
#include <vector>

#include "flagcalc/homogeneous.hpp"
#include "flagcalc/tags.hpp"

namespace flagcalc {

/// Relative dimensions of p_- and p_+ together with the tag of each
/// complete flag bundle measured on the lines of the other structure.
struct TwoBundleData {
    int r_minus;
    int r_plus;
    Tag delta_minus; // on A_{r_minus}
    Tag delta_plus;  // on A_{r_plus}
};

/// Throws DomainError unless the tags live on A_{r_minus} and A_{r_plus}.
TwoBundleData make_two_bundle_data(int r_minus, int r_plus, Tag delta_minus, Tag delta_plus);

struct HomogeneousTags {
    Tag plus;
    Tag minus;
};

/// Tags of the two projective bundle structures of D(i,j).
///
/// p_+ : D(i,j) -> D(j) has fiber K marked at i, where K is the component of
/// D minus j that contains i.  Restricted to a line of class alpha_j^v the
/// G_K/B_K-bundle is given by the cocharacter alpha_j^v, so its tag on node
/// k of K is -<alpha_k, alpha_j^v>.  Nodes are read from i along the chain,
/// which puts the P^{r_+} node first.  When K is of type C (P^{2m-1} as
/// C_m(1)) the A_{2m-1} tag is the symplectic unfolding of the C_m tag.
///
/// Throws DomainError if D(i,j) does not carry two projective bundle
/// structures.
HomogeneousTags homogeneous_tags(const DynkinDiagram& d, int i, int j);

struct ShapeVerdict {
    bool pass = false;
    TagShape shape;
    /// Name of the violated clause, or what the passing shape entails.
    std::string detail;
};

/// For r_- = 1 the tag of p_+ is (d,0,...,0) or, on odd r_+, (d,0,...,0,d)
/// with d > 0.  Throws DomainError if r_minus != 1.  Only Picard number two
/// inputs are in scope.
ShapeVerdict check_shape(const TwoBundleData& data);

struct HomogeneousModel {
    TwoBundleModel model; // oriented: p_- goes to D(i)
    Tag tag_minus;
    Tag tag_plus;
    MarkedDiagram fiber_minus;
    MarkedDiagram fiber_plus;
    bool product = false;
};

HomogeneousModel homogeneous_model(const DynkinDiagram& d, int i, int j);

/// All homogeneous models of rank <= max_rank, in either orientation, whose
/// (r_-, r_+, delta_-, delta_+) agree with the data; the product
/// P^{r_+} x P^{r_-} is included as the model A_{r_+}+A_{r_-} marked at the
/// first node of each component.  Results are canonical up to diagram
/// automorphism and sorted.
std::vector<HomogeneousModel> match_model(const TwoBundleData& data, int max_rank);

} // namespace flagcalc
