#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagcalc/classifier.hpp"
#include "flagcalc/drum.hpp"
#include "flagcalc/error.hpp"
#include "flagcalc/homogeneous.hpp"
#include "flagcalc/tags.hpp"

namespace flagcalc::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

Json big(const BigInt& v)
{
    if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
        return static_cast<std::int64_t>(v);
    return v.str();
}

std::string join(const NodeSet& s)
{
    std::string out;
    for (int v : s)
        out += (out.empty() ? "" : ",") + std::to_string(v);
    return out;
}

std::string tuple(const std::vector<int>& v)
{
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        out += (k ? "," : "") + std::to_string(v[k]);
    return out + ")";
}

Json marked_json(const MarkedDiagram& m)
{
    Json j;
    j["diagram"] = render(m.diagram);
    if (m.diagram.connected())
        j["family"] = std::string(1, letter(m.diagram.components().front().family));
    else
        j["family"] = nullptr;
    j["rank"] = m.diagram.rank();
    j["marks"] = m.marks;
    j["dim"] = dimension(m);
    j["picard"] = picard_number(m);
    return j;
}

Json tag_json(const Tag& t)
{
    auto z = zero_data(t);
    Json j;
    j["tag"] = render(t);
    j["diagram"] = render(t.diagram());
    j["values"] = t.values();
    j["zeros"] = z.zeros;
    j["support"] = z.support;
    j["trivial"] = is_trivial(t);
    return j;
}

Json model_json(const TwoBundleModel& m)
{
    Json j = marked_json({m.diagram, {m.i, m.j}});
    j["i"] = m.i;
    j["j"] = m.j;
    j["r_minus"] = m.r_minus;
    j["r_plus"] = m.r_plus;
    return j;
}

std::string model_text(const TwoBundleModel& m)
{
    std::ostringstream os;
    os << render(m.diagram) << "(" << m.i << "," << m.j << ")";
    return os.str();
}

Json shape_json(const TagShape& s)
{
    Json j;
    j["shape"] = to_string(s.kind);
    j["d"] = s.d;
    j["reduction"] = s.reduction ? Json(render(*s.reduction)) : Json(nullptr);
    return j;
}

std::string shape_text(const TagShape& s)
{
    switch (s.kind) {
    case ShapeKind::FirstNodeOnly: return "FirstNodeOnly(" + std::to_string(s.d) + ")";
    case ShapeKind::SymmetricEnds:
        return "SymmetricEnds(" + std::to_string(s.d) + ") reduces to " + render(*s.reduction);
    case ShapeKind::Other: return "Other";
    }
    return "Other";
}

Json homogeneous_model_json(const HomogeneousModel& m)
{
    Json j = model_json(m.model);
    j["tag_minus"] = render(m.tag_minus);
    j["tag_plus"] = render(m.tag_plus);
    j["fiber_minus"] = render(m.fiber_minus);
    j["fiber_plus"] = render(m.fiber_plus);
    j["product"] = m.product;
    return j;
}

Json drum_json(const HorosphericalDrum& d)
{
    Json j;
    j["model"] = model_json(d.model);
    j["dim_y"] = d.dim_y;
    j["dim_z"] = d.dim_z;
    j["dim_vi"] = big(d.dim_vi);
    j["dim_vj"] = big(d.dim_vj);
    j["ambient_dim"] = big(d.ambient_dim);
    j["bandwidth"] = bandwidth(d);
    auto fixed = [](const FixedComponent& f) {
        Json c;
        c["variety"] = render(f.variety);
        c["dim"] = f.dimension;
        c["mu"] = f.mu;
        return c;
    };
    j["sink"] = fixed(d.fixed.front());
    j["source"] = fixed(d.fixed.back());
    return j;
}

void emit(std::ostream& out, Json j)
{
    Json wrapped;
    wrapped["schema"] = kSchema;
    for (auto& [key, value] : j.items())
        wrapped[key] = value;
    out << wrapped.dump(2) << "\n";
}

struct Context {
    std::ostream& out;
    bool json = false;
};

void add_format(CLI::App* cmd, std::string& format)
{
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

// ---- commands ----------------------------------------------------------------

void cmd_roots(Context& cx, const std::string& text)
{
    auto d = parse_diagram(text);
    auto rs = positive_roots(d);
    if (cx.json) {
        Json j;
        j["diagram"] = render(d);
        j["cartan"] = rs.cartan;
        j["positive_roots"] = rs.positive_roots;
        j["count"] = rs.positive_roots.size();
        j["weyl_order"] = big(weyl_order(d));
        emit(cx.out, j);
        return;
    }
    cx.out << render(d) << "  rank " << d.rank() << "  |W| = " << weyl_order(d) << "\n";
    cx.out << "cartan:\n";
    for (const auto& row : rs.cartan)
        cx.out << "  " << tuple(row) << "\n";
    cx.out << "positive roots (" << rs.positive_roots.size() << "):\n";
    for (const auto& beta : rs.positive_roots)
        cx.out << "  " << tuple(beta) << "  height " << height(beta) << "\n";
}

void cmd_gp_dim(Context& cx, const std::string& text)
{
    auto m = parse_marked(text);
    auto p = is_projective_space(m);
    if (cx.json) {
        Json j = marked_json(m);
        j["projective_space"] = p ? Json(*p) : Json(nullptr);
        emit(cx.out, j);
        return;
    }
    cx.out << render(m) << "  dim " << dimension(m) << "  picard " << picard_number(m);
    if (p)
        cx.out << "  = P^" << *p;
    cx.out << "\n";
}

void cmd_gp_fiber(Context& cx, const std::string& text, const std::string& base_text)
{
    auto m = parse_marked(text);
    auto base = parse_node_list(base_text);
    // base marks are given in the same numbering as the marked diagram
    auto raw = parse_diagram_with_map(text.substr(0, text.find('{')));
    NodeSet mapped;
    for (int v : base) {
        if (v < 1 || v > static_cast<int>(raw.node_map.size()))
            throw DomainError("base mark " + std::to_string(v) + " out of range");
        mapped.insert(raw.node_map[v - 1]);
    }
    auto f = contraction_fiber(m.diagram, m.marks, mapped);
    auto p = is_projective_space(f.fiber);
    if (cx.json) {
        Json j;
        j["total"] = marked_json(m);
        j["base_marks"] = f.base_marks;
        j["fiber"] = marked_json(f.fiber);
        j["fiber_origin"] = f.fiber_origin;
        j["projective_space"] = p ? Json(*p) : Json(nullptr);
        emit(cx.out, j);
        return;
    }
    cx.out << render(m) << " -> " << render(m.diagram) << "{" << join(f.base_marks) << "}  fiber "
           << render(f.fiber) << "  dim " << dimension(f.fiber);
    if (p)
        cx.out << "  = P^" << *p;
    cx.out << "\n";
}

void cmd_enumerate(Context& cx, int max_rank)
{
    auto models = enumerate_two_bundles(max_rank);
    if (cx.json) {
        Json j;
        j["max_rank"] = max_rank;
        j["count"] = models.size();
        Json list = Json::array();
        for (const auto& m : models)
            list.push_back(model_json(m));
        j["models"] = list;
        emit(cx.out, j);
        return;
    }
    for (const auto& m : models)
        cx.out << model_text(m) << "  dim " << dimension({m.diagram, {m.i, m.j}}) << "  r- " << m.r_minus
               << "  r+ " << m.r_plus << "\n";
    cx.out << models.size() << " models up to rank " << max_rank << "\n";
}

void cmd_tag_split(Context& cx, const std::string& text)
{
    SplittingType s(parse_int_list(text));
    auto t = tag_from_splitting(s);
    if (cx.json) {
        Json j = tag_json(t);
        j["splitting"] = s.degrees();
        emit(cx.out, j);
        return;
    }
    cx.out << render(t) << "\n";
}

void cmd_tag_zeros(Context& cx, const std::string& text)
{
    auto t = parse_tag(text);
    if (cx.json) {
        emit(cx.out, tag_json(t));
        return;
    }
    auto z = zero_data(t);
    cx.out << "I0 = {" << join(z.zeros) << "}  N = {" << join(z.support) << "}"
           << (is_trivial(t) ? "  trivial" : "") << "\n";
}

void cmd_tag_restrict(Context& cx, const std::string& text, const std::string& marks_text)
{
    auto t = parse_tag(text);
    auto marks = parse_node_list(marks_text);
    auto r = restrict_tag(t, marks);
    if (cx.json) {
        Json j;
        j["input"] = tag_json(t);
        j["marks"] = marks;
        j["restricted"] = tag_json(r.tag);
        j["origin"] = r.origin;
        emit(cx.out, j);
        return;
    }
    cx.out << render(r.tag) << "\n";
}

void cmd_tag_reduce(Context& cx, const std::string& text)
{
    auto t = parse_tag(text);
    auto r = symplectic_reduce(t);
    if (cx.json) {
        Json j;
        j["input"] = tag_json(t);
        j["reduction"] = r ? tag_json(*r) : Json(nullptr);
        emit(cx.out, j);
        return;
    }
    cx.out << (r ? render(*r) : std::string("none")) << "\n";
}

void cmd_tag_shape(Context& cx, const std::string& text)
{
    auto t = parse_tag(text);
    auto s = classify_tag_shape(t);
    if (cx.json) {
        Json j = shape_json(s);
        j["input"] = tag_json(t);
        emit(cx.out, j);
        return;
    }
    cx.out << shape_text(s) << "\n";
}

void cmd_tag_nest(Context& cx, const std::string& text, const std::string& first, const std::string& second)
{
    auto t = parse_tag(text);
    auto a = parse_node_list(first);
    auto b = parse_node_list(second);
    bool ok = nesting_admissible(t, a, b);
    if (cx.json) {
        Json j;
        j["input"] = tag_json(t);
        j["first"] = a;
        j["second"] = b;
        j["admissible"] = ok;
        emit(cx.out, j);
        return;
    }
    cx.out << (ok ? "admissible" : "not admissible") << "\n";
}

void cmd_classify(Context& cx, int r_minus, int r_plus, const std::string& tm, const std::string& tp, int max_rank)
{
    auto data = make_two_bundle_data(r_minus, r_plus, type_a_tag(parse_int_list(tm)), type_a_tag(parse_int_list(tp)));
    std::optional<ShapeVerdict> verdict;
    if (r_minus == 1)
        verdict = check_shape(data);
    auto models = match_model(data, max_rank);
    if (cx.json) {
        Json j;
        j["r_minus"] = r_minus;
        j["r_plus"] = r_plus;
        j["tag_minus"] = tag_json(data.delta_minus);
        j["tag_plus"] = tag_json(data.delta_plus);
        j["max_rank"] = max_rank;
        if (verdict) {
            Json v = shape_json(verdict->shape);
            v["pass"] = verdict->pass;
            v["detail"] = verdict->detail;
            j["shape_check"] = v;
        } else {
            j["shape_check"] = nullptr;
        }
        Json list = Json::array();
        for (const auto& m : models)
            list.push_back(homogeneous_model_json(m));
        j["models"] = list;
        emit(cx.out, j);
        return;
    }
    if (verdict)
        cx.out << (verdict->pass ? "pass: " : "fail: ") << shape_text(verdict->shape) << " - " << verdict->detail
               << "\n";
    if (models.empty())
        cx.out << "no homogeneous model up to rank " << max_rank << "\n";
    for (const auto& m : models)
        cx.out << model_text(m.model) << (m.product ? "  (product)" : "") << "  delta- " << render(m.tag_minus)
               << "  delta+ " << render(m.tag_plus) << "\n";
}

void cmd_drum_build(Context& cx, const std::string& text, int i, int j)
{
    auto norm = parse_diagram_with_map(text);
    auto map = [&](int v) {
        if (v < 1 || v > static_cast<int>(norm.node_map.size()))
            throw DomainError("node " + std::to_string(v) + " out of range");
        return norm.node_map[v - 1];
    };
    auto drum = build_drum(norm.diagram, map(i), map(j));
    if (cx.json) {
        emit(cx.out, drum_json(drum));
        return;
    }
    cx.out << model_text(drum.model) << "  dim Y " << drum.dim_y << "  dim Z " << drum.dim_z << "\n";
    cx.out << "V_i " << drum.dim_vi << "  V_j " << drum.dim_vj << "  ambient P^" << drum.ambient_dim << "\n";
    for (const auto& f : drum.fixed)
        cx.out << (f.mu == 0 ? "sink   " : "source ") << render(f.variety) << "  dim " << f.dimension << "  mu "
               << f.mu << "\n";
    cx.out << "bandwidth " << bandwidth(drum) << "\n";
}

void cmd_drum_ledger(Context& cx, const std::string& text, int i, int j)
{
    auto norm = parse_diagram_with_map(text);
    auto map = [&](int v) {
        if (v < 1 || v > static_cast<int>(norm.node_map.size()))
            throw DomainError("node " + std::to_string(v) + " out of range");
        return norm.node_map[v - 1];
    };
    auto drum = build_drum(norm.diagram, map(i), map(j));
    auto l = ledger(drum);
    if (cx.json) {
        Json js;
        js["model"] = model_json(drum.model);
        js["line_products"] = {{"L-.l-", l.line_products[0][0]},
                               {"L-.l+", l.line_products[0][1]},
                               {"L+.l-", l.line_products[1][0]},
                               {"L+.l+", l.line_products[1][1]}};
        Json classes = Json::array();
        for (const auto& c : l.classes)
            classes.push_back({{"name", c.name}, {"alpha*L", c.coords[0]}, {"pi*L-", c.coords[1]}, {"pi*L+", c.coords[2]}});
        js["classes"] = classes;
        Json curves = Json::array();
        for (const auto& c : l.curves)
            curves.push_back(c.name);
        js["curves"] = curves;
        js["table"] = l.table;
        js["consistent"] = ledger_consistent(l);
        js["assumptions"] = {{"tangent_bundle_nef", l.tangent_bundle_nef_assumed},
                             {"M-_nef", l.m_minus_nef_assumed},
                             {"M+_nef", l.m_plus_nef_assumed}};
        emit(cx.out, js);
        return;
    }
    cx.out << model_text(drum.model) << "\n";
    cx.out << "L-.l- = " << l.line_products[0][0] << "  L+.l+ = " << l.line_products[1][1]
           << "  L-.l+ = " << l.line_products[0][1] << "  L+.l- = " << l.line_products[1][0] << "\n";
    auto pad = [](std::string text, std::size_t width, bool left) {
        while (text.size() < width)
            text = left ? text + ' ' : ' ' + text;
        return text;
    };
    std::string header = pad("", 8, true);
    for (const auto& c : l.curves)
        header += pad(c.name, 8, false);
    cx.out << header << "\n";
    for (std::size_t a = 0; a < l.classes.size(); ++a) {
        std::string row = pad(l.classes[a].name, 8, true);
        for (int v : l.table[a])
            row += pad(std::to_string(v), 8, false);
        cx.out << row << "\n";
    }
    cx.out << (ledger_consistent(l) ? "consistent" : "INCONSISTENT") << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact combinatorics of flag varieties, tags over P^1, and drums", "flagcalc"};
    app.require_subcommand(1);
    std::string format = "text";
    Context cx{out};

    std::string diagram, marked, base, tag, marks, first, second, degrees, tag_minus, tag_plus;
    int max_rank = 12, r_minus = 1, r_plus = 1, node_i = 0, node_j = 0;

    auto* roots = app.add_subcommand("roots", "Cartan matrix and positive roots of a diagram");
    roots->add_option("diagram", diagram, "e.g. A5, B3, A2+A1")->required();
    add_format(roots, format);

    auto* gp = app.add_subcommand("gp", "Marked diagrams D(I) = G/P(I^c)");
    gp->require_subcommand(1);
    auto* gp_dim = gp->add_subcommand("dim", "Dimension and Picard number");
    gp_dim->add_option("marked", marked, "e.g. B3{1,3}")->required();
    add_format(gp_dim, format);
    auto* gp_fiber = gp->add_subcommand("fiber", "Fiber of D(J) -> D(I)");
    gp_fiber->add_option("marked", marked, "D(J), e.g. B3{1,3}")->required();
    gp_fiber->add_option("--base", base, "base marks I, e.g. 1")->required();
    add_format(gp_fiber, format);
    auto* gp_enum = gp->add_subcommand("enumerate", "Diagrams with two projective bundle structures");
    gp_enum->add_option("--max-rank", max_rank)->check(CLI::PositiveNumber);
    add_format(gp_enum, format);

    auto* enumerate = app.add_subcommand("enumerate", "Same as gp enumerate");
    enumerate->add_option("--max-rank", max_rank)->check(CLI::PositiveNumber);
    add_format(enumerate, format);

    auto* tagc = app.add_subcommand("tag", "Tags of flag bundles over P^1");
    tagc->require_subcommand(1);
    auto* tag_split = tagc->add_subcommand("split", "Tag of a split bundle, from nondecreasing degrees");
    tag_split->add_option("degrees", degrees, "e.g. 0,1,3 or -2,-1,-1,-1")->required();
    add_format(tag_split, format);
    auto* tag_zeros = tagc->add_subcommand("zeros", "Zero set I0 and support N");
    tag_zeros->add_option("tag", tag, "e.g. A3:1,0,2")->required();
    add_format(tag_zeros, format);
    auto* tag_restrict = tagc->add_subcommand("restrict", "Restrict to the subdiagram off the marks");
    tag_restrict->add_option("tag", tag)->required();
    tag_restrict->add_option("--marks", marks, "e.g. 2,3")->required();
    add_format(tag_restrict, format);
    auto* tag_reduce = tagc->add_subcommand("reduce", "Symplectic reduction of a palindromic A_r tag");
    tag_reduce->add_option("tag", tag)->required();
    add_format(tag_reduce, format);
    auto* tag_shape = tagc->add_subcommand("shape", "FirstNodeOnly / SymmetricEnds / Other");
    tag_shape->add_option("tag", tag)->required();
    add_format(tag_shape, format);
    auto* tag_nest = tagc->add_subcommand("nest", "Whether a nesting (A_r, I, J) is admissible");
    tag_nest->add_option("tag", tag)->required();
    tag_nest->add_option("--first", first, "I")->required();
    tag_nest->add_option("--second", second, "J")->required();
    add_format(tag_nest, format);

    auto* classify = app.add_subcommand("classify", "Check tags of two bundle structures and match models");
    classify->add_option("--r-minus", r_minus)->required()->check(CLI::PositiveNumber);
    classify->add_option("--r-plus", r_plus)->required()->check(CLI::PositiveNumber);
    classify->add_option("--tag-minus", tag_minus, "values on A_{r-}")->required();
    classify->add_option("--tag-plus", tag_plus, "values on A_{r+}")->required();
    classify->add_option("--max-rank", max_rank)->check(CLI::PositiveNumber);
    add_format(classify, format);

    auto* drum = app.add_subcommand("drum", "Horospherical drums over two-bundle models");
    drum->require_subcommand(1);
    auto* drum_build = drum->add_subcommand("build", "Dimensions, sink, source, bandwidth");
    auto* drum_ledger = drum->add_subcommand("ledger", "Intersection table on the blowup");
    for (auto* c : {drum_build, drum_ledger}) {
        c->add_option("diagram", diagram)->required();
        c->add_option("i", node_i, "sink node")->required();
        c->add_option("j", node_j, "source node")->required();
        add_format(c, format);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    cx.json = format == "json";

    try {
        if (*roots)
            cmd_roots(cx, diagram);
        else if (*gp_dim)
            cmd_gp_dim(cx, marked);
        else if (*gp_fiber)
            cmd_gp_fiber(cx, marked, base);
        else if (*gp_enum || *enumerate)
            cmd_enumerate(cx, max_rank);
        else if (*tag_split)
            cmd_tag_split(cx, degrees);
        else if (*tag_zeros)
            cmd_tag_zeros(cx, tag);
        else if (*tag_restrict)
            cmd_tag_restrict(cx, tag, marks);
        else if (*tag_reduce)
            cmd_tag_reduce(cx, tag);
        else if (*tag_shape)
            cmd_tag_shape(cx, tag);
        else if (*tag_nest)
            cmd_tag_nest(cx, tag, first, second);
        else if (*classify)
            cmd_classify(cx, r_minus, r_plus, tag_minus, tag_plus, max_rank);
        else if (*drum_build)
            cmd_drum_build(cx, diagram, node_i, node_j);
        else if (*drum_ledger)
            cmd_drum_ledger(cx, diagram, node_i, node_j);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace flagcalc::cli
