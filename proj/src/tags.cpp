#include "flagcalc/tags.hpp"

#include <algorithm>
#include <cctype>

#include "flagcalc/error.hpp"

namespace flagcalc {

namespace {

bool is_palindrome(const std::vector<int>& v)
{
    return std::equal(v.begin(), v.begin() + v.size() / 2, v.rbegin());
}

void require_connected_a(const Tag& t, const char* op)
{
    const auto& d = t.diagram();
    if (!d.connected() || d.components().front().family != Family::A)
        throw DomainError(std::string(op) + " needs a tag on a connected A_r, got " + render(d));
}

} // namespace

Tag::Tag(DynkinDiagram diagram, std::vector<int> values) : diagram_(std::move(diagram)), values_(std::move(values))
{
    if (static_cast<int>(values_.size()) != diagram_.rank())
        throw DomainError("tag has " + std::to_string(values_.size()) + " values for " + render(diagram_));
    if (std::any_of(values_.begin(), values_.end(), [](int v) { return v < 0; }))
        throw DomainError("tag values must be nonnegative");
}

Tag type_a_tag(std::vector<int> values)
{
    if (values.empty())
        throw DomainError("empty tag");
    int r = static_cast<int>(values.size());
    return Tag(DynkinDiagram({{Family::A, r}}), std::move(values));
}

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty() || token == "-")
            throw ParseError("empty entry in integer list");
        if (token.size() > 9)
            throw ParseError("integer too large: " + token);
        out.push_back(std::stoi(token));
        token.clear();
    };
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch)) || (ch == '-' && token.empty()))
            token += ch;
        else if (ch == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            throw ParseError(std::string("unexpected character '") + ch + "' in integer list");
    }
    flush();
    return out;
}

Tag parse_tag(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("tag must look like A5:1,0,0,0,1");
    auto norm = parse_diagram_with_map(text.substr(0, colon));
    auto raw = parse_int_list(text.substr(colon + 1));
    if (raw.size() != norm.node_map.size())
        throw DomainError("tag has " + std::to_string(raw.size()) + " values for " + render(norm.diagram));
    std::vector<int> values(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k)
        values[norm.node_map[k] - 1] = raw[k];
    return Tag(std::move(norm.diagram), std::move(values));
}

std::string render(const Tag& t)
{
    std::string out = render(t.diagram()) + ":";
    for (std::size_t k = 0; k < t.values().size(); ++k) {
        if (k)
            out += ',';
        out += std::to_string(t.values()[k]);
    }
    return out;
}

SplittingType::SplittingType(std::vector<int> degrees) : degrees_(std::move(degrees))
{
    if (degrees_.size() < 2)
        throw DomainError("splitting type needs at least two summands");
    if (!std::is_sorted(degrees_.begin(), degrees_.end()))
        throw DomainError("splitting type must be nondecreasing");
}

Tag tag_from_splitting(const SplittingType& s)
{
    const auto& a = s.degrees();
    std::vector<int> d(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k)
        d[k - 1] = a[k] - a[k - 1];
    return type_a_tag(std::move(d));
}

ZeroData zero_data(const Tag& t)
{
    ZeroData z;
    for (int k = 1; k <= t.rank(); ++k)
        (t.at(k) == 0 ? z.zeros : z.support).insert(k);
    return z;
}

RestrictedTag restrict_tag(const Tag& t, const NodeSet& marks)
{
    if (marks.empty())
        throw DomainError("restriction needs a nonempty mark set");
    NodeSet rest;
    for (int v : t.diagram().nodes())
        if (!marks.contains(v))
            rest.insert(v);
    for (int v : marks)
        if (!t.diagram().has_node(v))
            throw DomainError("mark " + std::to_string(v) + " outside " + render(t.diagram()));
    if (rest.empty())
        throw DomainError("restriction to an empty diagram");
    auto sub = induced_subdiagram(t.diagram(), rest);
    std::vector<int> values;
    for (int v : sub.origin)
        values.push_back(t.at(v));
    return {Tag(std::move(sub.diagram), std::move(values)), std::move(sub.origin)};
}

bool is_trivial(const Tag& t)
{
    return std::all_of(t.values().begin(), t.values().end(), [](int v) { return v == 0; });
}

std::optional<Tag> symplectic_reduce(const Tag& t)
{
    require_connected_a(t, "symplectic_reduce");
    const int r = t.rank();
    if (r % 2 == 0 || !is_palindrome(t.values()))
        return std::nullopt;
    const int m = (r + 1) / 2;
    std::vector<int> half(t.values().begin(), t.values().begin() + m);
    Component c = m == 1 ? Component{Family::A, 1} : Component{Family::C, m};
    return Tag(DynkinDiagram({c}), std::move(half));
}

Tag symplectic_unfold(const Tag& c_tag)
{
    const auto& d = c_tag.diagram();
    bool ok = d.connected() && (d.components().front().family == Family::C ||
                                d.components().front() == Component{Family::A, 1});
    if (!ok)
        throw DomainError("symplectic_unfold needs a tag on C_m, got " + render(d));
    std::vector<int> v = c_tag.values();
    v.insert(v.end(), c_tag.values().rbegin() + 1, c_tag.values().rend());
    return type_a_tag(std::move(v));
}

bool nesting_admissible(const Tag& t, const NodeSet& first, const NodeSet& second)
{
    require_connected_a(t, "nesting_admissible");
    if (first.empty() || second.empty())
        throw DomainError("nesting needs two nonempty node sets");
    for (int v : first)
        if (second.contains(v))
            throw DomainError("nesting node sets must be disjoint");
    for (const auto* s : {&first, &second})
        for (int v : *s)
            if (!t.diagram().has_node(v))
                throw DomainError("node " + std::to_string(v) + " outside " + render(t.diagram()));
    const int r = t.rank();
    if (r % 2 == 0)
        return false;
    NodeSet both = first;
    both.insert(second.begin(), second.end());
    return both == NodeSet{1, r} && is_palindrome(t.values());
}

std::string to_string(ShapeKind k)
{
    switch (k) {
    case ShapeKind::FirstNodeOnly: return "FirstNodeOnly";
    case ShapeKind::SymmetricEnds: return "SymmetricEnds";
    case ShapeKind::Other: return "Other";
    }
    return "Other";
}

TagShape classify_tag_shape(const Tag& t)
{
    require_connected_a(t, "classify_tag_shape");
    const auto& v = t.values();
    const int r = t.rank();
    if (std::all_of(v.begin() + 1, v.end(), [](int x) { return x == 0; }))
        return {ShapeKind::FirstNodeOnly, v.front(), std::nullopt};
    if (r >= 3 && r % 2 == 1 && v.front() > 0 && v.back() == v.front() &&
        std::all_of(v.begin() + 1, v.end() - 1, [](int x) { return x == 0; }))
        return {ShapeKind::SymmetricEnds, v.front(), symplectic_reduce(t)};
    return {};
}

} // namespace flagcalc
