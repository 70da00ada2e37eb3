#include "flagcalc/classifier.hpp"

#include <algorithm>
#include <map>

#include "flagcalc/error.hpp"

namespace flagcalc {

namespace {

bool on_a(const Tag& t, int r)
{
    return t.diagram() == DynkinDiagram({{Family::A, r}});
}

// Tag of the projective bundle D(base, mark) -> D(base) on a line of class
// alpha_base^v.
Tag bundle_tag(const DynkinDiagram& d, const IntMatrix& cartan, int base, int mark)
{
    auto fib = contraction_fiber(d, {base, mark}, {base});
    const Component k = fib.fiber.diagram.components().front();
    const int v = *fib.fiber.marks.begin();

    std::vector<int> chain(k.rank);
    for (int n = 0; n < k.rank; ++n)
        chain[n] = n + 1;
    if (v != 1)
        std::reverse(chain.begin(), chain.end()); // A_r marked at r, or B2 marked at 2

    std::vector<int> values;
    for (int local : chain)
        values.push_back(-cartan[base - 1][fib.fiber_origin[local - 1] - 1]);

    if (k.family == Family::A)
        return type_a_tag(std::move(values));
    return symplectic_unfold(Tag(DynkinDiagram({{Family::C, k.rank}}), std::move(values)));
}

// Canonical orientation of a model on a connected diagram: the smallest
// ordered pair (i, j) over the diagram automorphisms.
std::pair<int, int> canonical_pair(const Component& c, int i, int j)
{
    std::pair<int, int> best{i, j};
    for (const auto& perm : automorphisms(c))
        best = std::min(best, std::pair<int, int>{perm[i - 1], perm[j - 1]});
    return best;
}

} // namespace

TwoBundleData make_two_bundle_data(int r_minus, int r_plus, Tag delta_minus, Tag delta_plus)
{
    if (r_minus < 1 || r_plus < 1)
        throw DomainError("relative dimensions must be positive");
    if (!on_a(delta_minus, r_minus))
        throw DomainError("delta_minus must live on A" + std::to_string(r_minus) + ", got " + render(delta_minus));
    if (!on_a(delta_plus, r_plus))
        throw DomainError("delta_plus must live on A" + std::to_string(r_plus) + ", got " + render(delta_plus));
    return {r_minus, r_plus, std::move(delta_minus), std::move(delta_plus)};
}

HomogeneousTags homogeneous_tags(const DynkinDiagram& d, int i, int j)
{
    if (!two_bundle_model(d, i, j))
        throw DomainError(render(MarkedDiagram{d, {i, j}}) + " does not carry two projective bundle structures");
    const auto cartan = cartan_matrix(d);
    return {bundle_tag(d, cartan, j, i), bundle_tag(d, cartan, i, j)};
}

ShapeVerdict check_shape(const TwoBundleData& data)
{
    if (data.r_minus != 1)
        throw DomainError("the shape criterion applies to r_minus = 1 only");
    ShapeVerdict v;
    v.shape = classify_tag_shape(data.delta_plus);
    switch (v.shape.kind) {
    case ShapeKind::FirstNodeOnly:
        v.pass = true;
        v.detail = v.shape.d == 0 ? "zero tag: the case of a product of projective spaces"
                                  : "delta_+ = (d,0,...,0) with d = " + std::to_string(v.shape.d);
        break;
    case ShapeKind::SymmetricEnds:
        v.pass = true;
        v.detail = "delta_+ = (d,0,...,0,d): p_+ reduces to PSp(" + std::to_string(data.r_plus + 1) +
                   ") with tag " + render(*v.shape.reduction);
        break;
    case ShapeKind::Other:
        v.pass = false;
        v.detail = "neither shape";
        break;
    }
    return v;
}

HomogeneousModel homogeneous_model(const DynkinDiagram& d, int i, int j)
{
    auto model = two_bundle_model(d, i, j);
    if (!model)
        throw DomainError(render(MarkedDiagram{d, {i, j}}) + " does not carry two projective bundle structures");
    auto tags = homogeneous_tags(d, i, j);
    return {*model,
            tags.minus,
            tags.plus,
            contraction_fiber(d, {i, j}, {i}).fiber,
            contraction_fiber(d, {i, j}, {j}).fiber,
            !d.connected()};
}

std::vector<HomogeneousModel> match_model(const TwoBundleData& data, int max_rank)
{
    if (max_rank < std::max(data.r_minus, data.r_plus) + 1)
        throw DomainError("max_rank must exceed both relative dimensions");

    auto matches = [&](const HomogeneousModel& m) {
        return m.model.r_minus == data.r_minus && m.model.r_plus == data.r_plus && m.tag_minus == data.delta_minus &&
               m.tag_plus == data.delta_plus;
    };

    std::map<std::tuple<Component, int, int>, HomogeneousModel> found;
    for (const auto& entry : enumerate_two_bundles(max_rank)) {
        const Component c = entry.diagram.components().front();
        for (auto [i, j] : {std::pair{entry.i, entry.j}, std::pair{entry.j, entry.i}}) {
            auto [ci, cj] = canonical_pair(c, i, j);
            if (found.contains({c, ci, cj}))
                continue;
            auto m = homogeneous_model(entry.diagram, ci, cj);
            if (matches(m))
                found.emplace(std::make_tuple(c, ci, cj), std::move(m));
        }
    }

    std::vector<HomogeneousModel> out;
    for (auto& [key, m] : found)
        out.push_back(std::move(m));

    DynkinDiagram product({{Family::A, data.r_plus}, {Family::A, data.r_minus}});
    auto pm = homogeneous_model(product, 1, data.r_plus + 1);
    if (matches(pm))
        out.push_back(std::move(pm));
    return out;
}

} // namespace flagcalc
