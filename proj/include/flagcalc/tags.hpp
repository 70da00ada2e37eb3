#pragma once

// Tags of flag bundles over P^1.
//
// A G/B-bundle over the projective line is determined by its Dynkin diagram
// and a tag, one nonnegative integer per node (the degree of the relative
// canonical of each elementary contraction on a minimal section).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagcalc/dynkin.hpp"

namespace flagcalc {

class Tag {
public:
    /// Throws DomainError on a size mismatch or a negative value.
    Tag(DynkinDiagram diagram, std::vector<int> values);

    const DynkinDiagram& diagram() const { return diagram_; }
    const std::vector<int>& values() const { return values_; }
    int rank() const { return diagram_.rank(); }
    /// Value at a 1-based node.
    int at(int node) const { return values_.at(node - 1); }

    bool operator==(const Tag&) const = default;

private:
    DynkinDiagram diagram_;
    std::vector<int> values_;
};

/// Tag on A_r, r >= 1.
Tag type_a_tag(std::vector<int> values);

/// Syntax `A5:1,0,0,0,1`.
Tag parse_tag(std::string_view text);
std::string render(const Tag& t);

/// Degrees a_0 <= ... <= a_r of a split vector bundle O(a_0) + ... + O(a_r).
class SplittingType {
public:
    /// Throws DomainError if the list is shorter than 2 or not nondecreasing.
    explicit SplittingType(std::vector<int> degrees);
    const std::vector<int>& degrees() const { return degrees_; }

private:
    std::vector<int> degrees_;
};

std::vector<int> parse_int_list(std::string_view text);

/// Tag of the complete flag bundle of P(O(a_0)+...+O(a_r)): the consecutive
/// differences a_k - a_{k-1} on A_r, nodes read left to right.
Tag tag_from_splitting(const SplittingType& s);

struct ZeroData {
    NodeSet zeros;   // nodes with value 0
    NodeSet support; // the rest
};

ZeroData zero_data(const Tag& t);

/// The tag restricted to the subdiagram on the complement of `marks`.
/// origin[k-1] is the original node behind node k of the restricted diagram.
struct RestrictedTag {
    Tag tag;
    std::vector<int> origin;
};

RestrictedTag restrict_tag(const Tag& t, const NodeSet& marks);

bool is_trivial(const Tag& t);

/// Some(first half) on C_{(r+1)/2} iff r is odd and the tag is a palindrome.
/// Throws DomainError unless the tag lives on a connected A_r.
std::optional<Tag> symplectic_reduce(const Tag& t);

/// Inverse of symplectic_reduce: (c_1..c_m) on C_m (or A1 for m = 1) to the
/// palindrome (c_1, ..., c_m, ..., c_1) on A_{2m-1}.
Tag symplectic_unfold(const Tag& c_tag);

/// Whether a nesting of type (A_r, I, J) can exist for a bundle with this tag.
/// Throws on overlapping or empty node sets and on non-A diagrams.
bool nesting_admissible(const Tag& t, const NodeSet& first, const NodeSet& second);

enum class ShapeKind { FirstNodeOnly, SymmetricEnds, Other };

std::string to_string(ShapeKind k);

struct TagShape {
    ShapeKind kind = ShapeKind::Other;
    int d = 0;
    /// The C-type tag, present for SymmetricEnds.
    std::optional<Tag> reduction;
};

/// (d,0,...,0) with d >= 0, or (d,0,...,0,d) with d > 0 on odd r >= 3.
TagShape classify_tag_shape(const Tag& t);

} // namespace flagcalc
