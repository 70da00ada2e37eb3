#include "flagcalc/drum.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "flagcalc/error.hpp"

namespace flagcalc {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Half squared lengths (alpha_k, alpha_k)/2 up to a common factor on each
// component, from (alpha_a, alpha_b) = s_a C[a][b] = s_b C[b][a].
std::vector<Rational> symmetrizer(const IntMatrix& cartan)
{
    const std::size_t n = cartan.size();
    std::vector<Rational> s(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (s[start] != 0)
            continue;
        s[start] = 1;
        std::vector<std::size_t> queue{start};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            std::size_t a = queue[q];
            for (std::size_t b = 0; b < n; ++b)
                if (b != a && cartan[a][b] != 0 && s[b] == 0) {
                    s[b] = s[a] * cartan[a][b] / cartan[b][a];
                    queue.push_back(b);
                }
        }
    }
    return s;
}

int sign_index(char c)
{
    return c == '-' ? 0 : 1;
}

} // namespace

BigInt weyl_dim(const DynkinDiagram& d, int k)
{
    if (!d.has_node(k))
        throw DomainError("node " + std::to_string(k) + " outside " + render(d));
    auto rs = positive_roots(d);
    auto s = symmetrizer(rs.cartan);
    Rational dim = 1;
    for (const auto& beta : rs.positive_roots) {
        Rational rho_beta = 0;
        for (std::size_t j = 0; j < beta.size(); ++j)
            rho_beta += s[j] * beta[j];
        dim *= (rho_beta + s[k - 1] * beta[k - 1]) / rho_beta;
    }
    if (denominator(dim) != 1)
        throw std::logic_error("Weyl dimension formula produced a non-integer");
    return numerator(dim);
}

HorosphericalDrum build_drum(const DynkinDiagram& d, int i, int j)
{
    auto model = two_bundle_model(d, i, j);
    if (!model || !d.connected())
        throw DomainError(render(MarkedDiagram{d, {i, j}}) + " is not a two-bundle model");
    HorosphericalDrum drum;
    drum.model = *model;
    drum.dim_y = dimension({d, {i, j}});
    drum.dim_z = drum.dim_y + 1;
    drum.dim_vi = weyl_dim(d, i);
    drum.dim_vj = weyl_dim(d, j);
    drum.ambient_dim = drum.dim_vi + drum.dim_vj - 1;
    MarkedDiagram sink{d, {i}};
    MarkedDiagram source{d, {j}};
    drum.fixed.push_back({sink, dimension(sink), 0});
    drum.fixed.push_back({source, dimension(source), 1});
    return drum;
}

int bandwidth(std::span<const FixedComponent> fixed)
{
    if (fixed.empty())
        throw DomainError("bandwidth needs at least one fixed component");
    auto [lo, hi] = std::minmax_element(fixed.begin(), fixed.end(),
                                        [](const auto& a, const auto& b) { return a.mu < b.mu; });
    return hi->mu - lo->mu;
}

int bandwidth(const HorosphericalDrum& drum)
{
    return bandwidth(std::span<const FixedComponent>(drum.fixed));
}

int IntersectionLedger::product(const std::string& cls, const std::string& curve) const
{
    for (std::size_t a = 0; a < classes.size(); ++a)
        if (classes[a].name == cls)
            for (std::size_t b = 0; b < curves.size(); ++b)
                if (curves[b].name == curve)
                    return table[a][b];
    throw DomainError("no ledger entry " + cls + " . " + curve);
}

IntersectionLedger ledger(const HorosphericalDrum& drum)
{
    if (drum.fixed.size() != 2)
        throw DomainError("ledger needs a drum with sink and source");
    IntersectionLedger l;

    // On Y: L_- and L_+ are pulled back from X_- and X_+, so each vanishes on
    // the lines its own projection contracts.
    auto& lp = l.line_products;
    lp[0][0] = 0;
    lp[1][1] = 0;
    // A line in a fiber of the exceptional divisor Y_+ (resp. Y_-) has normal
    // degree -1.  With Y_+ = alpha^*L - pi^*L_- and alpha^*L|Y_+ = L_+ this
    // reads L_+.l_+ - L_-.l_+ = -1, and symmetrically for Y_-.
    const int normal_degree = -1;
    lp[0][1] = lp[1][1] - normal_degree;
    lp[1][0] = lp[0][0] - normal_degree;

    l.classes = {
        {"alpha*L", {1, 0, 0}},
        {"pi*L-", {0, 1, 0}},
        {"pi*L+", {0, 0, 1}},
        {"Y-", {1, 0, -1}},
        {"Y+", {1, -1, 0}},
    };
    // M = alpha^*L - Y
    l.classes.push_back({"M-", {0, 0, 1}});
    l.classes.push_back({"M+", {0, 1, 0}});

    l.curves = {
        {"s-(l-)", '-', '-'},
        {"s-(l+)", '-', '+'},
        {"s+(l-)", '+', '-'},
        {"s+(l+)", '+', '+'},
    };

    for (const auto& cls : l.classes) {
        std::array<LinearForm, 2> row{};
        for (int b = 0; b < 2; ++b)
            row[b] = {cls.coords[1] * lp[0][b] + cls.coords[2] * lp[1][b], cls.coords[0]};
        l.symbolic.push_back(row);
    }

    // alpha^*L restricted to the section s_a is L_a, which fixes t.
    for (std::size_t a = 0; a < l.classes.size(); ++a) {
        std::vector<int> row;
        for (const auto& c : l.curves) {
            const int t = lp[sign_index(c.section)][sign_index(c.line)];
            row.push_back(l.symbolic[a][sign_index(c.line)].at(t));
        }
        l.table.push_back(row);
    }
    return l;
}

bool ledger_consistent(const IntersectionLedger& l)
{
    const auto& lp = l.line_products;
    if (lp[0][0] != 0 || lp[1][1] != 0 || lp[0][1] != 1 || lp[1][0] != 1)
        return false;
    for (const auto& c : l.curves) {
        const int own = sign_index(c.section);
        const int b = sign_index(c.line);
        const std::string yo = own == 0 ? "Y-" : "Y+";
        const std::string yx = own == 0 ? "Y+" : "Y-";
        // restriction of the exceptional divisor to its own section
        const int expected_self = own == 1 ? lp[1][b] - lp[0][b] : lp[0][b] - lp[1][b];
        if (l.product(yo, c.name) != expected_self)
            return false;
        if (l.product(yx, c.name) != 0)
            return false;
        if (l.product("alpha*L", c.name) != lp[own][b])
            return false;
        if (l.product("pi*L-", c.name) != lp[0][b] || l.product("pi*L+", c.name) != lp[1][b])
            return false;
        if (l.product("M-", c.name) != l.product("alpha*L", c.name) - l.product("Y-", c.name))
            return false;
        if (l.product("M+", c.name) != l.product("alpha*L", c.name) - l.product("Y+", c.name))
            return false;
    }
    return true;
}

} // namespace flagcalc
