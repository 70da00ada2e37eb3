#include "flagcalc/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "flagcalc/error.hpp"

namespace flagcalc {

namespace {

bool in_normal_form(const Component& c)
{
    switch (c.family) {
    case Family::A: return c.rank >= 1;
    case Family::B:
    case Family::C: return c.rank >= 2;
    case Family::D: return c.rank >= 4;
    case Family::E: return c.rank >= 6 && c.rank <= 8;
    case Family::F: return c.rank == 4;
    case Family::G: return c.rank == 2;
    }
    return false;
}

bool acceptable_raw(const Component& c)
{
    switch (c.family) {
    case Family::A:
    case Family::B:
    case Family::C: return c.rank >= 1;
    case Family::D: return c.rank >= 2;
    case Family::E: return c.rank >= 6 && c.rank <= 8;
    case Family::F: return c.rank == 4;
    case Family::G: return c.rank == 2;
    }
    return false;
}

std::optional<Family> family_from_letter(char ch)
{
    switch (std::toupper(static_cast<unsigned char>(ch))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: return std::nullopt;
    }
}

// Single edge between a and b, or a multiple edge from long node a to short
// node b (1-based).
void add_edge(IntMatrix& m, int a, int b, int multiplicity = 1)
{
    m[b - 1][a - 1] = -multiplicity;
    m[a - 1][b - 1] = -1;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Component parse_component(std::string_view token)
{
    token = trim(token);
    if (token.size() < 2)
        throw ParseError("bad diagram component '" + std::string(token) + "'");
    auto fam = family_from_letter(token.front());
    if (!fam)
        throw ParseError("unknown family '" + std::string(1, token.front()) + "'");
    std::string_view digits = token.substr(1);
    if (digits.size() > 6 || !std::all_of(digits.begin(), digits.end(),
                                          [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw ParseError("bad rank in '" + std::string(token) + "'");
    return {*fam, std::stoi(std::string(digits))};
}

// Split on '+' and on the UTF-8 encoding of U+2294.
std::vector<std::string_view> split_components(std::string_view text)
{
    static constexpr std::string_view kCup = "\xE2\x8A\x94";
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '+') {
            parts.push_back(text.substr(start, i - start));
            start = ++i;
        } else if (text.substr(i, kCup.size()) == kCup) {
            parts.push_back(text.substr(start, i - start));
            i += kCup.size();
            start = i;
        } else {
            ++i;
        }
    }
    parts.push_back(text.substr(start));
    return parts;
}

std::vector<std::vector<int>> adjacency(const IntMatrix& m)
{
    std::vector<std::vector<int>> adj(m.size());
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b)
            if (a != b && m[a][b] != 0)
                adj[a].push_back(static_cast<int>(b));
    return adj;
}

// Walk a simple path starting at `start` (0-based) without revisiting `avoid`.
std::vector<int> walk_arm(const std::vector<std::vector<int>>& adj, int start, int avoid)
{
    std::vector<int> arm{start};
    int prev = avoid;
    int cur = start;
    for (;;) {
        int next = -1;
        for (int nb : adj[cur])
            if (nb != prev)
                next = nb;
        if (next < 0)
            break;
        arm.push_back(next);
        prev = cur;
        cur = next;
    }
    return arm;
}

[[noreturn]] void not_finite_type()
{
    throw DomainError("Cartan matrix is not of finite type");
}

} // namespace

std::string render(const Component& c)
{
    return std::string(1, letter(c.family)) + std::to_string(c.rank);
}

DynkinDiagram::DynkinDiagram(std::vector<Component> components) : components_(std::move(components))
{
    for (const auto& c : components_) {
        if (!in_normal_form(c))
            throw DomainError("component " + render(c) + " is not in normal form");
        rank_ += c.rank;
    }
}

int DynkinDiagram::offset(std::size_t c) const
{
    int off = 0;
    for (std::size_t k = 0; k < c; ++k)
        off += components_[k].rank;
    return off;
}

std::size_t DynkinDiagram::component_of(int node) const
{
    if (!has_node(node))
        throw DomainError("node " + std::to_string(node) + " out of range");
    int off = 0;
    for (std::size_t c = 0; c < components_.size(); ++c) {
        off += components_[c].rank;
        if (node <= off)
            return c;
    }
    throw DomainError("node out of range");
}

NodeSet DynkinDiagram::nodes() const
{
    NodeSet s;
    for (int k = 1; k <= rank_; ++k)
        s.insert(k);
    return s;
}

Normalization normalize(const std::vector<Component>& raw)
{
    if (raw.empty())
        throw ParseError("empty diagram");
    std::vector<Component> out;
    std::vector<int> map;
    int next = 1;
    for (const auto& c : raw) {
        if (!acceptable_raw(c))
            throw DomainError("rank " + std::to_string(c.rank) + " out of range for family " +
                              std::string(1, letter(c.family)));
        if (c.rank == 1) {
            out.push_back({Family::A, 1});
            map.push_back(next++);
        } else if (c.family == Family::D && c.rank == 2) {
            out.push_back({Family::A, 1});
            out.push_back({Family::A, 1});
            map.push_back(next++);
            map.push_back(next++);
        } else if (c.family == Family::D && c.rank == 3) {
            // D3 node 1 is the middle of the chain 2 - 1 - 3.
            out.push_back({Family::A, 3});
            map.push_back(next + 1);
            map.push_back(next);
            map.push_back(next + 2);
            next += 3;
        } else {
            out.push_back(c);
            for (int k = 0; k < c.rank; ++k)
                map.push_back(next++);
        }
    }
    return {DynkinDiagram(std::move(out)), std::move(map)};
}

Normalization parse_diagram_with_map(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw ParseError("empty diagram");
    std::vector<Component> raw;
    for (auto part : split_components(text))
        raw.push_back(parse_component(part));
    return normalize(raw);
}

DynkinDiagram parse_diagram(std::string_view text)
{
    return parse_diagram_with_map(text).diagram;
}

std::string render(const DynkinDiagram& d)
{
    std::string out;
    for (const auto& c : d.components()) {
        if (!out.empty())
            out += '+';
        out += render(c);
    }
    return out;
}

IntMatrix raw_cartan_matrix(const Component& c)
{
    const int n = c.rank;
    IntMatrix m(n, std::vector<int>(n, 0));
    for (int k = 0; k < n; ++k)
        m[k][k] = 2;
    switch (c.family) {
    case Family::A:
        for (int k = 1; k < n; ++k)
            add_edge(m, k, k + 1);
        break;
    case Family::B:
        for (int k = 1; k + 1 < n; ++k)
            add_edge(m, k, k + 1);
        if (n >= 2)
            add_edge(m, n - 1, n, 2);
        break;
    case Family::C:
        for (int k = 1; k + 1 < n; ++k)
            add_edge(m, k, k + 1);
        if (n >= 2)
            add_edge(m, n, n - 1, 2);
        break;
    case Family::D:
        for (int k = 1; k + 2 < n; ++k)
            add_edge(m, k, k + 1);
        if (n >= 3) {
            add_edge(m, n - 2, n - 1);
            add_edge(m, n - 2, n);
        }
        break;
    case Family::E:
        add_edge(m, 1, 3);
        add_edge(m, 2, 4);
        for (int k = 3; k < n; ++k)
            add_edge(m, k, k + 1);
        break;
    case Family::F:
        add_edge(m, 1, 2);
        add_edge(m, 2, 3, 2);
        add_edge(m, 3, 4);
        break;
    case Family::G:
        add_edge(m, 1, 2, 3);
        break;
    }
    return m;
}

IntMatrix cartan_matrix(const DynkinDiagram& d)
{
    const int n = d.rank();
    IntMatrix m(n, std::vector<int>(n, 0));
    int off = 0;
    for (const auto& c : d.components()) {
        auto block = raw_cartan_matrix(c);
        for (int a = 0; a < c.rank; ++a)
            for (int b = 0; b < c.rank; ++b)
                m[off + a][off + b] = block[a][b];
        off += c.rank;
    }
    return m;
}

int pairing(const IntMatrix& cartan, const Root& beta, std::size_t i)
{
    int s = 0;
    for (std::size_t j = 0; j < beta.size(); ++j)
        s += cartan[i][j] * beta[j];
    return s;
}

int height(const Root& beta)
{
    return std::accumulate(beta.begin(), beta.end(), 0);
}

RootSystem positive_roots(const DynkinDiagram& d)
{
    RootSystem rs{cartan_matrix(d), {}};
    const std::size_t n = rs.cartan.size();
    std::set<Root> known;
    std::vector<Root> level;
    for (std::size_t i = 0; i < n; ++i) {
        Root e(n, 0);
        e[i] = 1;
        level.push_back(e);
        known.insert(e);
    }
    // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^v> > 0,
    // where p counts how far the string extends below beta.
    while (!level.empty()) {
        std::set<Root> next;
        for (const auto& beta : level) {
            for (std::size_t i = 0; i < n; ++i) {
                int p = 0;
                Root down = beta;
                while (down[i] > 0) {
                    --down[i];
                    if (!known.contains(down))
                        break;
                    ++p;
                }
                if (p - pairing(rs.cartan, beta, i) > 0) {
                    Root up = beta;
                    ++up[i];
                    next.insert(up);
                }
            }
        }
        level.assign(next.begin(), next.end());
        known.insert(level.begin(), level.end());
    }
    rs.positive_roots.assign(known.begin(), known.end());
    std::stable_sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const Root& a, const Root& b) {
        int ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
    });
    return rs;
}

std::size_t positive_root_count(const Component& c)
{
    const std::size_t n = static_cast<std::size_t>(c.rank);
    switch (c.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return 0;
}

BigInt weyl_order(const Component& c)
{
    auto factorial = [](int k) {
        BigInt f = 1;
        for (int m = 2; m <= k; ++m)
            f *= m;
        return f;
    };
    switch (c.family) {
    case Family::A: return factorial(c.rank + 1);
    case Family::B:
    case Family::C: return (BigInt(1) << c.rank) * factorial(c.rank);
    case Family::D: return (BigInt(1) << (c.rank - 1)) * factorial(c.rank);
    case Family::E: return c.rank == 6 ? BigInt(51840) : c.rank == 7 ? BigInt(2903040) : BigInt(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
    }
    return 0;
}

BigInt weyl_order(const DynkinDiagram& d)
{
    BigInt w = 1;
    for (const auto& c : d.components())
        w *= weyl_order(c);
    return w;
}

Subdiagram identify_connected(const IntMatrix& m, const std::vector<int>& labels)
{
    const int n = static_cast<int>(m.size());
    if (n == 0)
        throw DomainError("empty subdiagram");
    auto adj = adjacency(m);
    auto mult = [&](int a, int b) { return m[a][b] * m[b][a]; };
    // long end of a multiple edge: the node whose row holds -1
    auto is_short = [&](int a, int b) { return m[a][b] < -1; };

    Component comp{Family::A, n};
    std::vector<int> order; // order[k] = local index of normalized node k+1

    int edges = 0;
    std::vector<std::pair<int, int>> multiple;
    int branch = -1;
    for (int a = 0; a < n; ++a) {
        if (adj[a].size() > 3)
            not_finite_type();
        if (adj[a].size() == 3) {
            if (branch >= 0)
                not_finite_type();
            branch = a;
        }
        for (int b : adj[a]) {
            if (b <= a)
                continue;
            ++edges;
            int k = mult(a, b);
            if (k < 1 || k > 3 || std::min(m[a][b], m[b][a]) != -k || std::max(m[a][b], m[b][a]) != -1)
                not_finite_type();
            if (k > 1)
                multiple.emplace_back(a, b);
        }
    }
    if (edges != n - 1)
        not_finite_type(); // not a tree (or disconnected)

    auto by_label = [&](int a, int b) { return labels[a] < labels[b]; };

    if (n == 1) {
        order = {0};
    } else if (!multiple.empty()) {
        if (multiple.size() != 1 || branch >= 0)
            not_finite_type();
        auto [a, b] = multiple.front();
        int lng = is_short(a, b) ? b : a;
        int shrt = lng == a ? b : a;
        if (mult(a, b) == 3) {
            if (n != 2)
                not_finite_type();
            comp = {Family::G, 2};
            order = {lng, shrt};
        } else if (adj[lng].size() == 1 || adj[shrt].size() == 1) {
            // double edge at an end: B_n (short end) or C_n (long end)
            int end = adj[shrt].size() == 1 ? shrt : lng;
            if (n == 2)
                end = shrt;
            int inner = end == shrt ? lng : shrt;
            order = walk_arm(adj, inner, end);
            std::reverse(order.begin(), order.end());
            order.push_back(end);
            comp = {end == shrt ? Family::B : Family::C, n};
        } else {
            if (n != 4)
                not_finite_type();
            comp = {Family::F, 4};
            order = walk_arm(adj, lng, shrt);
            std::reverse(order.begin(), order.end());
            auto tail = walk_arm(adj, shrt, lng);
            order.insert(order.end(), tail.begin(), tail.end());
        }
    } else if (branch < 0) {
        std::vector<int> ends;
        for (int a = 0; a < n; ++a)
            if (adj[a].size() == 1)
                ends.push_back(a);
        int start = *std::min_element(ends.begin(), ends.end(), by_label);
        order = walk_arm(adj, start, -1);
        comp = {Family::A, n};
    } else {
        std::vector<std::vector<int>> arms;
        for (int nb : adj[branch])
            arms.push_back(walk_arm(adj, nb, branch));
        std::stable_sort(arms.begin(), arms.end(), [&](const auto& x, const auto& y) {
            if (x.size() != y.size())
                return x.size() < y.size();
            return labels[*std::min_element(x.begin(), x.end(), by_label)] <
                   labels[*std::min_element(y.begin(), y.end(), by_label)];
        });
        const auto& a0 = arms[0];
        const auto& a1 = arms[1];
        const auto& a2 = arms[2];
        if (a0.size() == 1 && a1.size() == 1) {
            // D_n: long arm 1..n-3 read from its far end, branch n-2, short arms n-1, n
            comp = {Family::D, n};
            order.assign(a2.rbegin(), a2.rend());
            order.push_back(branch);
            order.push_back(a0[0]);
            order.push_back(a1[0]);
        } else if (a0.size() == 1 && a1.size() == 2 && a2.size() >= 2 && a2.size() <= 4) {
            // E_n: 1 - 3 - 4 - 5 - ..., node 2 hangs off node 4
            comp = {Family::E, n};
            order = {a1[1], a0[0], a1[0], branch};
            order.insert(order.end(), a2.begin(), a2.end());
        } else {
            not_finite_type();
        }
    }

    // The identification must reproduce the standard Cartan matrix exactly.
    auto expected = raw_cartan_matrix(comp);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (m[order[a]][order[b]] != expected[a][b])
                not_finite_type();

    Subdiagram out{DynkinDiagram({comp}), {}};
    for (int k : order)
        out.origin.push_back(labels[k]);
    return out;
}

Subdiagram induced_subdiagram(const DynkinDiagram& d, const NodeSet& nodes)
{
    auto full = cartan_matrix(d);
    std::vector<int> pending(nodes.begin(), nodes.end());
    for (int v : pending)
        if (!d.has_node(v))
            throw DomainError("node " + std::to_string(v) + " not in " + render(d));

    std::vector<Component> comps;
    std::vector<int> origin;
    std::set<int> seen;
    for (int start : pending) {
        if (seen.contains(start))
            continue;
        std::vector<int> members{start};
        seen.insert(start);
        for (std::size_t q = 0; q < members.size(); ++q)
            for (int v : pending)
                if (!seen.contains(v) && full[members[q] - 1][v - 1] != 0) {
                    seen.insert(v);
                    members.push_back(v);
                }
        std::sort(members.begin(), members.end());
        IntMatrix local(members.size(), std::vector<int>(members.size()));
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = 0; b < members.size(); ++b)
                local[a][b] = full[members[a] - 1][members[b] - 1];
        auto sub = identify_connected(local, members);
        comps.push_back(sub.diagram.components().front());
        origin.insert(origin.end(), sub.origin.begin(), sub.origin.end());
    }
    return {DynkinDiagram(std::move(comps)), std::move(origin)};
}

std::vector<std::vector<int>> automorphisms(const Component& c)
{
    const int n = c.rank;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    std::vector<std::vector<int>> out{id};
    if (c.family == Family::A && n >= 2) {
        std::vector<int> flip(id.rbegin(), id.rend());
        out.push_back(flip);
    } else if (c.family == Family::D && n == 4) {
        std::vector<int> legs{1, 3, 4};
        std::vector<int> perm = legs;
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<int> p = id;
            for (int k = 0; k < 3; ++k)
                p[legs[k] - 1] = perm[k];
            out.push_back(p);
        }
    } else if (c.family == Family::D) {
        auto p = id;
        std::swap(p[n - 2], p[n - 1]);
        out.push_back(p);
    } else if (c.family == Family::E && n == 6) {
        out.push_back({6, 2, 5, 4, 3, 1});
    }
    return out;
}

std::optional<Isomorphism> coincidence(const Component& c)
{
    if (c.rank != 2)
        return std::nullopt;
    if (c.family == Family::B)
        return Isomorphism{{Family::C, 2}, {2, 1}};
    if (c.family == Family::C)
        return Isomorphism{{Family::B, 2}, {2, 1}};
    return std::nullopt;
}

} // namespace flagcalc
