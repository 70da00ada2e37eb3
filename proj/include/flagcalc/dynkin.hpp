#pragma once

// Dynkin diagrams, Cartan matrices and positive root systems.
//
// Nodes are 1-based and numbered component by component, each component in
// Humphreys order.  Cartan convention: C[i][j] = <alpha_j, alpha_i^v>, so a
// double edge from a long node i to a short node j has C[j][i] = -2 and
// C[i][j] = -1.  The pairing <beta, alpha_i^v> of a root written in the
// simple-root basis is therefore (C * beta)_i.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagcalc {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<int>>;
using Root = std::vector<int>;
using NodeSet = std::set<int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char letter(Family f) { return static_cast<char>(f); }

struct Component {
    Family family = Family::A;
    int rank = 1;

    auto operator<=>(const Component&) const = default;
};

std::string render(const Component& c);

/// A finite disjoint union of typed components in normal form
/// (A>=1, B>=2, C>=2, D>=4, E6-8, F4, G2).
class DynkinDiagram {
public:
    DynkinDiagram() = default;
    /// Throws DomainError unless every component is already in normal form.
    explicit DynkinDiagram(std::vector<Component> components);

    const std::vector<Component>& components() const { return components_; }
    std::size_t component_count() const { return components_.size(); }
    int rank() const { return rank_; }
    bool empty() const { return components_.empty(); }
    bool connected() const { return components_.size() == 1; }

    /// Number of nodes preceding component c.
    int offset(std::size_t c) const;
    /// Index of the component that owns a (1-based) node.
    std::size_t component_of(int node) const;
    bool has_node(int node) const { return node >= 1 && node <= rank_; }
    NodeSet nodes() const;

    bool operator==(const DynkinDiagram& other) const { return components_ == other.components_; }

private:
    std::vector<Component> components_;
    int rank_ = 0;
};

/// Result of bringing a raw component list into normal form.
/// node_map[k-1] is the normalized index of raw node k.
struct Normalization {
    DynkinDiagram diagram;
    std::vector<int> node_map;
};

/// Accepts A>=1, B>=1, C>=1, D>=2, E6-8, F4, G2.  Applies the low-rank
/// coincidences B1,C1 -> A1, D2 -> A1+A1, D3 -> A3.  B2 and C2 are kept.
Normalization normalize(const std::vector<Component>& raw);

/// Grammar: COMPONENT (SEP COMPONENT)* with COMPONENT = FAMILY RANK and
/// SEP one of '+', "⊔".  Whitespace around separators is ignored.
Normalization parse_diagram_with_map(std::string_view text);
DynkinDiagram parse_diagram(std::string_view text);
std::string render(const DynkinDiagram& d);

/// Cartan matrix of a single component in its raw (possibly non-normal) form.
IntMatrix raw_cartan_matrix(const Component& c);
/// Block-diagonal Cartan matrix (0-based storage, node k at row k-1).
IntMatrix cartan_matrix(const DynkinDiagram& d);

struct RootSystem {
    IntMatrix cartan;
    /// Sorted by (height, lexicographic coefficients).
    std::vector<Root> positive_roots;
};

RootSystem positive_roots(const DynkinDiagram& d);

/// <beta, alpha_i^v> for a 0-based simple index i.
int pairing(const IntMatrix& cartan, const Root& beta, std::size_t i);
int height(const Root& beta);

std::size_t positive_root_count(const Component& c);
BigInt weyl_order(const Component& c);
BigInt weyl_order(const DynkinDiagram& d);

/// Induced subdiagram on a node subset, re-identified into normal form.
/// Components are ordered by their smallest original node; origin[k-1] is
/// the original node carried by new node k.
struct Subdiagram {
    DynkinDiagram diagram;
    std::vector<int> origin;
};

Subdiagram induced_subdiagram(const DynkinDiagram& d, const NodeSet& nodes);

/// Identify a connected finite-type Cartan matrix.  Rank-2 double edges are
/// reported as B2.  Returned origin indexes into `labels`.
Subdiagram identify_connected(const IntMatrix& cartan, const std::vector<int>& labels);

/// Diagram automorphisms of a normal-form component as node permutations:
/// perm[k-1] is the image of node k.  Always contains the identity first.
std::vector<std::vector<int>> automorphisms(const Component& c);

/// The B2 <-> C2 coincidence: B2 node 1 (long) corresponds to C2 node 2.
struct Isomorphism {
    Component target;
    std::vector<int> node_map;
};

std::optional<Isomorphism> coincidence(const Component& c);

} // namespace flagcalc
