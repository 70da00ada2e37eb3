#include "flagcalc/homogeneous.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "flagcalc/error.hpp"

namespace flagcalc {

namespace {

std::string render_marks(const NodeSet& s)
{
    std::string out;
    for (int v : s) {
        if (!out.empty())
            out += ',';
        out += std::to_string(v);
    }
    return out;
}

NodeSet map_nodes(const std::vector<int>& perm, const NodeSet& s)
{
    NodeSet out;
    for (int v : s)
        out.insert(perm[v - 1]);
    return out;
}

bool lex_less(const NodeSet& a, const NodeSet& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

MarkedDiagram make_marked(DynkinDiagram d, NodeSet marks)
{
    if (marks.empty())
        throw DomainError("marked diagram needs at least one mark");
    for (int v : marks)
        if (!d.has_node(v))
            throw DomainError("mark " + std::to_string(v) + " outside " + render(d));
    return {std::move(d), std::move(marks)};
}

NodeSet parse_node_list(std::string_view text)
{
    NodeSet out;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            throw ParseError("empty entry in node list");
        if (token.size() > 6)
            throw ParseError("node index too large: " + token);
        out.insert(std::stoi(token));
        token.clear();
    };
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch)))
            token += ch;
        else if (ch == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            throw ParseError(std::string("unexpected character '") + ch + "' in node list");
    }
    flush();
    return out;
}

MarkedDiagram parse_marked(std::string_view text)
{
    auto open = text.find('{');
    if (open == std::string_view::npos || text.empty() || text.back() != '}')
        throw ParseError("marked diagram must look like B3{1,3}");
    auto norm = parse_diagram_with_map(text.substr(0, open));
    auto raw_marks = parse_node_list(text.substr(open + 1, text.size() - open - 2));
    NodeSet marks;
    for (int v : raw_marks) {
        if (v < 1 || v > static_cast<int>(norm.node_map.size()))
            throw DomainError("mark " + std::to_string(v) + " out of range");
        marks.insert(norm.node_map[v - 1]);
    }
    return make_marked(std::move(norm.diagram), std::move(marks));
}

std::string render(const MarkedDiagram& m)
{
    return render(m.diagram) + "{" + render_marks(m.marks) + "}";
}

int dimension(const MarkedDiagram& m)
{
    auto rs = positive_roots(m.diagram);
    int count = 0;
    for (const auto& beta : rs.positive_roots)
        if (std::any_of(m.marks.begin(), m.marks.end(), [&](int v) { return beta[v - 1] > 0; }))
            ++count;
    return count;
}

int picard_number(const MarkedDiagram& m)
{
    return static_cast<int>(m.marks.size());
}

ContractionFiber contraction_fiber(const DynkinDiagram& d, const NodeSet& total, const NodeSet& base)
{
    if (base.empty())
        throw DomainError("base mark set must be nonempty");
    if (!std::includes(total.begin(), total.end(), base.begin(), base.end()))
        throw DomainError("base marks {" + render_marks(base) + "} not contained in {" + render_marks(total) + "}");
    if (base == total)
        throw DomainError("contraction onto the same marks is the identity");
    for (int v : total)
        if (!d.has_node(v))
            throw DomainError("mark " + std::to_string(v) + " outside " + render(d));

    NodeSet rest;
    for (int v : d.nodes())
        if (!base.contains(v))
            rest.insert(v);
    auto sub = induced_subdiagram(d, rest);

    ContractionFiber out{base, total, {}, {}, {}};
    std::vector<Component> kept;
    NodeSet marks;
    int src = 0;
    for (const auto& c : sub.diagram.components()) {
        NodeSet local;
        for (int k = 0; k < c.rank; ++k)
            if (total.contains(sub.origin[src + k]))
                local.insert(k + 1);
        if (local.empty()) {
            out.dropped.push_back(c);
        } else {
            int shift = 0;
            for (const auto& kc : kept)
                shift += kc.rank;
            for (int v : local)
                marks.insert(v + shift);
            kept.push_back(c);
            for (int k = 0; k < c.rank; ++k)
                out.fiber_origin.push_back(sub.origin[src + k]);
        }
        src += c.rank;
    }
    out.fiber = make_marked(DynkinDiagram(std::move(kept)), std::move(marks));
    return out;
}

std::optional<int> is_projective_space(const MarkedDiagram& m)
{
    // unmarked components contribute a point
    if (m.marks.size() != 1)
        return std::nullopt;
    const int node = *m.marks.begin();
    const std::size_t k = m.diagram.component_of(node);
    const auto c = m.diagram.components()[k];
    const int v = node - m.diagram.offset(k);
    switch (c.family) {
    case Family::A:
        if (v == 1 || v == c.rank)
            return c.rank;
        return std::nullopt;
    case Family::C:
        if (v == 1)
            return 2 * c.rank - 1;
        return std::nullopt;
    case Family::B:
        // B2(2) is C2(1) = P^3
        if (auto iso = coincidence(c); iso && iso->target.family == Family::C && iso->node_map[v - 1] == 1)
            return 3;
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

MarkedDiagram canonical_form(const MarkedDiagram& m)
{
    if (!m.diagram.connected())
        throw DomainError("canonical_form expects a connected diagram");
    Component c = m.diagram.components().front();
    NodeSet marks = m.marks;
    if (auto iso = coincidence(c); iso && letter(iso->target.family) < letter(c.family)) {
        marks = map_nodes(iso->node_map, marks);
        c = iso->target;
    }
    NodeSet best = marks;
    for (const auto& perm : automorphisms(c)) {
        auto image = map_nodes(perm, marks);
        if (lex_less(image, best))
            best = image;
    }
    return {DynkinDiagram({c}), best};
}

std::optional<TwoBundleModel> two_bundle_model(const DynkinDiagram& d, int i, int j)
{
    if (i == j || !d.has_node(i) || !d.has_node(j))
        return std::nullopt;
    const NodeSet both{i, j};
    auto minus = contraction_fiber(d, both, {i});
    auto plus = contraction_fiber(d, both, {j});
    auto r_minus = is_projective_space(minus.fiber);
    auto r_plus = is_projective_space(plus.fiber);
    if (!r_minus || !r_plus)
        return std::nullopt;
    return TwoBundleModel{d, i, j, *r_minus, *r_plus};
}

std::vector<Component> connected_components_up_to(int max_rank)
{
    std::vector<Component> out;
    for (int n = 1; n <= max_rank; ++n) {
        out.push_back({Family::A, n});
        if (n >= 2) {
            out.push_back({Family::B, n});
            out.push_back({Family::C, n});
        }
        if (n >= 4)
            out.push_back({Family::D, n});
        if (n >= 6 && n <= 8)
            out.push_back({Family::E, n});
        if (n == 4)
            out.push_back({Family::F, 4});
        if (n == 2)
            out.push_back({Family::G, 2});
    }
    return out;
}

std::vector<TwoBundleModel> enumerate_two_bundles(int max_rank)
{
    if (max_rank < 2)
        throw DomainError("max_rank must be at least 2");
    std::map<std::pair<Component, std::vector<int>>, TwoBundleModel> found;
    for (const auto& c : connected_components_up_to(max_rank)) {
        DynkinDiagram d({c});
        for (int i = 1; i <= c.rank; ++i)
            for (int j = i + 1; j <= c.rank; ++j) {
                if (!two_bundle_model(d, i, j))
                    continue;
                auto canon = canonical_form({d, {i, j}});
                Component cc = canon.diagram.components().front();
                std::vector<int> key(canon.marks.begin(), canon.marks.end());
                if (found.contains({cc, key}))
                    continue;
                auto model = two_bundle_model(canon.diagram, key[0], key[1]);
                if (!model)
                    throw std::logic_error("canonical form lost the two-bundle property");
                found.emplace(std::make_pair(cc, key), *model);
            }
    }
    std::vector<TwoBundleModel> out;
    for (auto& [key, model] : found)
        out.push_back(std::move(model));
    return out;
}

} // namespace flagcalc
