// alcove-shi: Shi coefficient vectors of alcoves in affine Weyl groups,
// irreducible components via admitted vectors, H^1(W, ZPhi) from the Cartan
// matrix, and same-orientation decisions cross-validated three ways.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "alcove/json_io.hpp"
#include "alcove/pyramid.hpp"
#include "alcove/render.hpp"

namespace {

using namespace alcove;
using nlohmann::json;

struct CommonOpts {
    std::string type;
    int rank = 0;
    bool json_out = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_json = true)
{
    cmd->add_option("--type", o.type, "root system type: A..G or a fused label like B2")->required();
    cmd->add_option("--rank", o.rank, "rank (optional when the type label carries it)");
    if (with_json) cmd->add_flag("--json", o.json_out, "machine-readable output");
}

RootSystem build_from(const CommonOpts& o)
{
    auto [t, n] = parse_type_rank(o.type, o.rank);
    return RootSystem::build(t, n);
}

std::size_t admissible_cap()
{
    if (const char* env = std::getenv("ALCOVE_SHI_MAX_ADMISSIBLE")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw std::invalid_argument("ALCOVE_SHI_MAX_ADMISSIBLE must be a positive integer");
    }
    return 2000000;
}

// Shi-vector inputs: "@file" reads the file first; a leading '{' means JSON,
// an embedded newline or ';' means a type-A pyramid, otherwise the value is
// the k-vector in canonical root order.
ShiVector parse_vector_arg(const RootSystem& rs, std::string text)
{
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw std::invalid_argument("cannot read file '" + text.substr(1) + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty vector argument");
    if (text[first] == '{') {
        json j = json::parse(text);
        if (!j.is_object() || !j.contains("k") || !j.at("k").is_array())
            throw std::invalid_argument("Shi vector JSON needs a \"k\" array");
        ShiVector v;
        for (const auto& x : j.at("k")) v.k.push_back(x.get<Int>());
        return v;
    }
    ShiVector v;
    if (text.find('\n') != std::string::npos || text.find(';') != std::string::npos) {
        v = parse_pyramid(rs, text);
    } else {
        std::istringstream in(text);
        Int x;
        while (in >> x) v.k.push_back(x);
        if (!in.eof()) throw std::invalid_argument("bad k-vector literal");
    }
    return v;
}

ShiVector read_vector_arg(const RootSystem& rs, std::string text)
{
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw std::invalid_argument("cannot read file '" + text.substr(1) + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return shi_vector_from_json(rs, json::parse(text));  // also checks "order"
    ShiVector v = parse_vector_arg(rs, text);
    if (!is_alcove(rs, v.k)) throw std::invalid_argument("input k-vector is not an alcove");
    return v;
}

std::string k_list(const IntVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

int cmd_roots(const CommonOpts& o)
{
    RootSystem rs = build_from(o);
    if (o.json_out) {
        std::cout << root_system_json(rs).dump(2) << "\n";
        return 0;
    }
    std::cout << rs.label() << ": " << rs.root_count() << " positive roots, f = "
              << rs.index_of_connection() << "\n";
    std::cout << "cartan:\n";
    for (int i = 0; i < rs.rank(); ++i) {
        for (int j = 0; j < rs.rank(); ++j) std::cout << (j ? " " : "  ") << rs.cartan_at(i, j);
        std::cout << "\n";
    }
    std::cout << "roots (root | coroot | h(coroot) | |.|^2):\n";
    for (const PositiveRoot& pr : rs.positive_roots())
        std::cout << "  " << k_list(pr.root) << " | " << k_list(pr.coroot) << " | " << pr.coroot_height
                  << " | " << pr.sq_norm << "\n";
    return 0;
}

int cmd_shi(const CommonOpts& o, const std::string& word_text)
{
    RootSystem rs = build_from(o);
    Word word = parse_word(word_text, rs.rank());
    AffineElement w = evaluate_word(rs, word);
    ShiVector v = shi_vector(rs, w);
    if (o.json_out) {
        json j = shi_vector_json(rs, v);
        j["element"] = element_json(w);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "k = " << k_list(v.k) << "\n";
    if (rs.type() == Type::A && rs.rank() >= 2) std::cout << format_pyramid(rs, v);
    return 0;
}

int cmd_is_alcove(const CommonOpts& o, const std::string& input)
{
    RootSystem rs = build_from(o);
    ShiVector v = parse_vector_arg(rs, input);
    bool ok = is_alcove(rs, v.k);
    if (o.json_out)
        std::cout << json({{"schema", kSchemaTag}, {"is_alcove", ok}}).dump(2) << "\n";
    else
        std::cout << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int cmd_components(const CommonOpts& o)
{
    RootSystem rs = build_from(o);
    std::vector<AdmittedVector> admitted = enumerate_admitted(rs, admissible_cap());
    if (o.json_out) {
        json order = json::array();
        for (const PositiveRoot& pr : rs.positive_roots()) order.push_back(pr.root);
        json lams = json::array();
        for (const AdmittedVector& a : admitted) lams.push_back(a.lambda);
        std::cout << json({{"schema", kSchemaTag},
                           {"type", type_name(rs.type())},
                           {"rank", rs.rank()},
                           {"order", std::move(order)},
                           {"count", admitted.size()},
                           {"admitted", std::move(lams)}})
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << rs.label() << ": " << admitted.size() << " admitted vectors (irreducible components)\n";
    for (const AdmittedVector& a : admitted) std::cout << "  " << k_list(a.lambda) << "\n";
    return 0;
}

std::string modular_formula_text(const RootSystem& rs)
{
    int n = rs.rank();
    switch (rs.type()) {
        case Type::A:
            return "same class iff sum_j j*d_j = 0 in Z/" + std::to_string(n + 1) + "Z";
        case Type::B:
            return "same class iff d_" + std::to_string(n) + " = 0 in Z/2Z";
        case Type::C:
            return "same class iff sum over odd j of d_j = 0 in Z/2Z";
        case Type::D:
            return "same class iff sum_{odd j<=n-2} 2*d_j + n*d_{n-1} + (n-2)*d_n = 0 and "
                   "sum_{odd j<=n-2} 2*d_j + (n-2)*d_{n-1} + n*d_n = 0 in Z/4Z";
        default:
            return "";
    }
}

int cmd_h1(const CommonOpts& o)
{
    RootSystem rs = build_from(o);
    CohomologyGroup g = h1_group(rs);
    if (o.json_out) {
        std::cout << h1_json(rs, g).dump(2) << "\n";
        return 0;
    }
    std::cout << "H^1(W(" << rs.label() << "), ZPhi): ";
    if (g.invariant_factors.empty()) {
        std::cout << "trivial\n";
    } else {
        for (size_t i = 0; i < g.invariant_factors.size(); ++i)
            std::cout << (i ? " x " : "") << "Z/" << g.invariant_factors[i] << "Z";
        std::cout << "  (order " << g.order << ")\n";
    }
    std::cout << "f = " << rs.index_of_connection() << "; minimal localization Z[1/"
              << rs.index_of_connection() << "]\n";
    std::string formula = modular_formula_text(rs);
    if (!formula.empty()) std::cout << formula << "\n";
    return 0;
}

int cmd_orient(const CommonOpts& o, const std::string& v1_text, const std::string& v2_text)
{
    RootSystem rs = build_from(o);
    ShiVector v1 = read_vector_arg(rs, v1_text);
    ShiVector v2 = read_vector_arg(rs, v2_text);

    CohomologyGroup g = h1_group(rs);
    bool component_equal = same_component(rs, v1, v2);
    bool theorem = same_orientation_theorem(rs, g, v1, v2);
    AffineElement w1 = element_of_shi_vector(rs, v1);
    AffineElement w2 = element_of_shi_vector(rs, v2);
    bool oracle = same_orientation_oracle(rs, w1, w2);

    json modular;
    bool has_modular = rs.type() == Type::A || rs.type() == Type::B || rs.type() == Type::C ||
                       rs.type() == Type::D;
    std::string modular_note;
    if (!has_modular)
        modular_note = "modular test unavailable for type " + type_name(rs.type());
    else if (!component_equal)
        modular_note = "hypothesis not met: vectors lie in different components";
    else
        modular = same_orientation_modular(rs, v1, v2);

    json classes = json::array();
    classes.push_back(h1_class(g, section_of(rs, v1)).residues);
    classes.push_back(h1_class(g, section_of(rs, v2)).residues);

    json out = {{"schema", kSchemaTag}, {"oracle", oracle},           {"theorem", theorem},
                {"modular", modular},   {"component_equal", component_equal}, {"classes", classes}};
    if (!modular_note.empty()) out["modular_note"] = modular_note;
    if (o.json_out) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "component_equal: " << (component_equal ? "true" : "false") << "\n";
    std::cout << "oracle:  " << (oracle ? "same orientation" : "different orientation") << "\n";
    std::cout << "theorem: " << (theorem ? "same orientation" : "different orientation") << "\n";
    if (modular.is_null())
        std::cout << "modular: " << modular_note << "\n";
    else
        std::cout << "modular: " << (modular.get<bool>() ? "same orientation" : "different orientation")
                  << "\n";
    return 0;
}

int cmd_verify(const CommonOpts& o, int radius)
{
    RootSystem rs = build_from(o);
    BallReport rep = classify_ball(rs, radius);
    if (o.json_out) {
        std::cout << ball_report_json(rep).dump(2) << "\n";
    } else {
        std::cout << rs.label() << " radius " << radius << ": ball " << rep.ball_size << ", "
                  << rep.pairs_checked << " pairs, " << rep.orientation_classes
                  << " orientation classes, " << rep.components << " components, "
                  << rep.discrepancies.size() << " discrepancies\n";
        for (const Discrepancy& d : rep.discrepancies) {
            std::cout << "  DISCREPANCY words '" << d.word1 << "' vs '" << d.word2
                      << "': oracle=" << d.oracle << " theorem=" << d.theorem;
            if (d.modular.has_value()) std::cout << " modular=" << *d.modular;
            std::cout << "\n";
        }
    }
    return rep.discrepancies.empty() ? 0 : 1;
}

int cmd_render(const CommonOpts& o, int radius, const std::string& color, bool labels, double width,
               double height, const std::string& out_path)
{
    RootSystem rs = build_from(o);
    RenderSpec spec;
    spec.radius = radius;
    spec.coloring = parse_coloring(color);
    spec.labels = labels;
    spec.width = width;
    spec.height = height;
    std::string svg = render_svg(rs, spec);
    if (out_path.empty() || out_path == "-") {
        std::cout << svg;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << svg;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Shi coefficients, Shi variety components, H^1(W, ZPhi), and alcove orientation"};
    app.require_subcommand(1);

    CommonOpts roots_o;
    add_common(app.add_subcommand("roots", "print a root system"), roots_o);

    CommonOpts shi_o;
    std::string shi_word;
    {
        CLI::App* c = app.add_subcommand("shi", "Shi vector of a word in the affine generators");
        add_common(c, shi_o);
        c->add_option("--word", shi_word, "letters 0..n, e.g. \"0 1 2 1\" (empty = identity)");
    }

    CommonOpts alc_o;
    std::string alc_k;
    {
        CLI::App* c = app.add_subcommand("is-alcove", "test Shi's alcove criterion");
        add_common(c, alc_o);
        c->add_option("--k", alc_k, "k-vector, pyramid ('@file' or ';'-separated rows), or JSON")
            ->required();
    }

    CommonOpts comp_o;
    add_common(app.add_subcommand("components", "enumerate admitted vectors"), comp_o);

    CommonOpts h1_o;
    add_common(app.add_subcommand("h1", "H^1(W, ZPhi) via Smith normal form"), h1_o);

    CommonOpts orient_o;
    std::string orient_v1, orient_v2;
    {
        CLI::App* c = app.add_subcommand("orient", "same-orientation decision, three routes");
        add_common(c, orient_o);
        c->add_option("--v1", orient_v1, "first Shi vector (k list, pyramid, JSON, or @file)")->required();
        c->add_option("--v2", orient_v2, "second Shi vector")->required();
    }

    CommonOpts verify_o;
    int verify_radius = 6;
    {
        CLI::App* c = app.add_subcommand("verify", "cross-validate the three routes over a ball");
        add_common(c, verify_o);
        c->add_option("--radius", verify_radius, "Cayley ball radius")->required();
    }

    CommonOpts render_o;
    int render_radius = 4;
    std::string render_color = "orientation";
    bool render_labels = false;
    double render_width = 800.0, render_height = 800.0;
    std::string render_out;
    {
        CLI::App* c = app.add_subcommand("render", "SVG tiling for rank <= 2");
        add_common(c, render_o, false);
        c->add_option("--radius", render_radius, "Cayley ball radius");
        c->add_option("--color", render_color, "orientation|component|h1class");
        c->add_flag("--labels", render_labels, "print Shi coefficients inside each alcove");
        c->add_option("--width", render_width, "canvas width");
        c->add_option("--height", render_height, "canvas height");
        c->add_option("--out,-o", render_out, "output file ('-' = stdout)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return 2;
    }

    try {
        if (app.got_subcommand("roots")) return cmd_roots(roots_o);
        if (app.got_subcommand("shi")) return cmd_shi(shi_o, shi_word);
        if (app.got_subcommand("is-alcove")) return cmd_is_alcove(alc_o, alc_k);
        if (app.got_subcommand("components")) return cmd_components(comp_o);
        if (app.got_subcommand("h1")) return cmd_h1(h1_o);
        if (app.got_subcommand("orient")) return cmd_orient(orient_o, orient_v1, orient_v2);
        if (app.got_subcommand("verify")) return cmd_verify(verify_o, verify_radius);
        if (app.got_subcommand("render"))
            return cmd_render(render_o, render_radius, render_color, render_labels, render_width,
                              render_height, render_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
