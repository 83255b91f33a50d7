#include "alcove/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace alcove {

namespace {

const char* kPalette[] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1",
    "#ff9da7", "#9c755f", "#bab0ac", "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string fixed(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", x + 0.0);  // +0.0 normalizes -0
    return buf;
}

// Vertices of the fundamental alcove: drop one of the n+1 walls
// (H_{alpha_i,0} and H_{highest,1}) and intersect the rest.
std::vector<RatVec> fundamental_vertices(const RootSystem& rs)
{
    const int n = rs.rank();
    std::vector<IntVec> wall_normals;  // row = coefficients of <x, theta_vee>
    RatVec wall_values;
    for (int i = 0; i < n; ++i) {
        IntVec row(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r) row[static_cast<size_t>(r)] = rs.cartan_at(r, i);
        wall_normals.push_back(std::move(row));
        wall_values.push_back(Rat(0));
    }
    wall_normals.push_back(rs.highest_root().simple_pairings);
    wall_values.push_back(Rat(1));

    std::vector<RatVec> verts;
    for (int drop = 0; drop <= n; ++drop) {
        SquareMat m(n);
        RatVec rhs(static_cast<size_t>(n));
        int r = 0;
        for (int w = 0; w <= n; ++w) {
            if (w == drop) continue;
            for (int c = 0; c < n; ++c) m.at(r, c) = wall_normals[static_cast<size_t>(w)][static_cast<size_t>(c)];
            rhs[static_cast<size_t>(r)] = wall_values[static_cast<size_t>(w)];
            ++r;
        }
        verts.push_back(solve_rational(m, rhs));
    }
    return verts;
}

// Planar embedding of the root basis from the Gram matrix
// <alpha_i, alpha_j> = (|alpha_j|^2 / 2) C_ij; alpha_1 goes on the x-axis.
struct Embedding {
    double a[2][2] = {{1, 0}, {0, 1}};  // column j = embedded alpha_{j+1}

    std::pair<double, double> point(const RatVec& x) const
    {
        double u = x[0].to_double();
        double v = x.size() > 1 ? x[1].to_double() : 0.0;
        return {a[0][0] * u + a[0][1] * v, a[1][0] * u + a[1][1] * v};
    }
};

Embedding make_embedding(const RootSystem& rs)
{
    Embedding e;
    double g11 = static_cast<double>(rs.norms()[0]);
    e.a[0][0] = std::sqrt(g11);
    e.a[1][0] = 0.0;
    if (rs.rank() == 2) {
        double g22 = static_cast<double>(rs.norms()[1]);
        double g12 = static_cast<double>(rs.norms()[1]) / 2.0 * static_cast<double>(rs.cartan_at(0, 1));
        e.a[0][1] = g12 / e.a[0][0];
        e.a[1][1] = std::sqrt(g22 - e.a[0][1] * e.a[0][1]);
    }
    return e;
}

}  // namespace

void RenderSpec::validate(const RootSystem& rs) const
{
    if (rs.rank() > 2) throw std::invalid_argument("render: rank > 2 refused");
    if (radius < 0) throw std::invalid_argument("render: radius must be >= 0");
    if (width <= 0 || height <= 0) throw std::invalid_argument("render: canvas must be positive");
}

Coloring parse_coloring(const std::string& name)
{
    if (name == "orientation") return Coloring::Orientation;
    if (name == "component") return Coloring::Component;
    if (name == "h1class") return Coloring::H1Class;
    throw std::invalid_argument("unknown coloring '" + name + "' (orientation|component|h1class)");
}

std::string render_svg(const RootSystem& rs, const RenderSpec& spec, RenderStats* stats)
{
    spec.validate(rs);
    const int n = rs.rank();
    std::vector<BallElement> ball = enumerate_ball(rs, spec.radius);
    std::vector<RatVec> base = fundamental_vertices(rs);
    CohomologyGroup group = h1_group(rs);

    // Classification key per alcove; classes are sorted by key so the color
    // assignment is deterministic.
    struct Alcove {
        std::vector<RatVec> verts;
        IntVec key;
        ShiVector v;
    };
    std::vector<Alcove> alcoves;
    alcoves.reserve(ball.size());
    std::map<IntVec, size_t> class_of_key;
    for (const BallElement& be : ball) {
        Alcove a;
        for (const RatVec& v : base) a.verts.push_back(be.g.apply(v));
        a.v = shi_vector(rs, be.g);
        switch (spec.coloring) {
            case Coloring::Orientation: a.key = be.g.finite.a; break;
            case Coloring::Component: a.key = lambda_of(rs, a.v).lambda; break;
            case Coloring::H1Class: a.key = h1_class(group, section_of(rs, a.v)).residues; break;
        }
        class_of_key.emplace(a.key, 0);
        alcoves.push_back(std::move(a));
    }
    size_t color_index = 0;
    for (auto& kv : class_of_key) kv.second = color_index++;

    // Exact bounding box in embedded coordinates (evaluated as doubles only
    // here; shared vertices are the same rationals, so they serialize
    // identically).
    Embedding emb = make_embedding(rs);
    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
    for (const Alcove& a : alcoves)
        for (const RatVec& v : a.verts) {
            auto [x, y] = emb.point(v);
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
    if (n == 1) { miny = -0.5; maxy = 0.5; }
    double margin = 0.05 * std::max(maxx - minx, maxy - miny);
    minx -= margin; maxx += margin; miny -= margin; maxy += margin;
    double scale = std::min(spec.width / (maxx - minx), spec.height / (maxy - miny));
    auto to_canvas = [&](double x, double y) {
        // y axis flipped so the picture has the usual orientation
        return std::pair<double, double>{(x - minx) * scale, (maxy - y) * scale};
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(spec.width) +
           "\" height=\"" + fixed(spec.height) + "\" viewBox=\"0 0 " + fixed(spec.width) + " " +
           fixed(spec.height) + "\">\n";

    for (const Alcove& a : alcoves) {
        size_t cls = class_of_key.at(a.key);
        const char* fill = kPalette[cls % kPaletteSize];
        if (n == 1) {
            // rank 1: alcoves are segments; draw them as slim boxes
            auto [x0, y0] = to_canvas(emb.point(a.verts[0]).first, 0.25);
            auto [x1, y1] = to_canvas(emb.point(a.verts[1]).first, -0.25);
            double bx = std::min(x0, x1), bw = std::fabs(x1 - x0);
            svg += "  <rect x=\"" + fixed(bx) + "\" y=\"" + fixed(y0) + "\" width=\"" + fixed(bw) +
                   "\" height=\"" + fixed(y1 - y0) + "\" fill=\"" + fill +
                   "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        } else {
            svg += "  <polygon points=\"";
            for (size_t i = 0; i < a.verts.size(); ++i) {
                auto [ex, ey] = emb.point(a.verts[i]);
                auto [cx, cy] = to_canvas(ex, ey);
                if (i) svg += ' ';
                svg += fixed(cx) + "," + fixed(cy);
            }
            svg += "\" fill=\"";
            svg += fill;
            svg += "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        }
    }

    if (spec.labels) {
        // One coefficient per root, arranged identically inside every alcove:
        // k(w,theta) sits off the centroid in the embedded direction of theta.
        RatVec fc(static_cast<size_t>(n), Rat(0));
        for (const RatVec& v : base)
            for (int i = 0; i < n; ++i) fc[static_cast<size_t>(i)] += v[static_cast<size_t>(i)];
        for (int i = 0; i < n; ++i) fc[static_cast<size_t>(i)] /= Rat(static_cast<Int>(base.size()));
        // inradius: distance from the centroid to the nearest wall, so the
        // labels stay inside even the thin G2 alcoves
        auto [cx, cy] = emb.point(fc);
        double inradius = 1e300;
        for (size_t a = 0; a < base.size() && n == 2; ++a)
            for (size_t b = a + 1; b < base.size(); ++b) {
                auto [ax, ay] = emb.point(base[a]);
                auto [bx, by] = emb.point(base[b]);
                double ex = bx - ax, ey = by - ay;
                double elen = std::hypot(ex, ey);
                double dist = std::fabs(ex * (cy - ay) - ey * (cx - ax)) / elen;
                inradius = std::min(inradius, dist);
            }
        if (n == 1) {
            auto [ax, ay] = emb.point(base[0]);
            auto [bx, by] = emb.point(base[1]);
            (void)ay; (void)by;
            inradius = 0.5 * std::fabs(bx - ax);
        }
        double offset = 0.55 * inradius * scale;
        double font = std::max(4.0, 0.6 * inradius * scale / std::max(1, n));

        for (const Alcove& a : alcoves) {
            RatVec c(static_cast<size_t>(n), Rat(0));
            for (const RatVec& v : a.verts)
                for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] += v[static_cast<size_t>(i)];
            for (int i = 0; i < n; ++i)
                c[static_cast<size_t>(i)] /= Rat(static_cast<Int>(a.verts.size()));
            auto [ecx, ecy] = emb.point(c);
            auto [ccx, ccy] = to_canvas(ecx, ecy);
            for (int t = 0; t < rs.root_count(); ++t) {
                auto [rx, ry] = emb.point(to_rat_vec(rs.root(t).root));
                double len = std::hypot(rx, ry);
                double lx = ccx + (rx / len) * offset;
                double ly = ccy - (ry / len) * offset;  // canvas y is flipped
                svg += "  <text x=\"" + fixed(lx) + "\" y=\"" + fixed(ly) + "\" font-size=\"" +
                       fixed(font) +
                       "\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"#111111\">" +
                       std::to_string(a.v.k[static_cast<size_t>(t)]) + "</text>\n";
            }
        }
    }

    svg += "</svg>\n";
    if (stats) {
        stats->alcoves = alcoves.size();
        stats->colors_used = std::min(class_of_key.size(), kPaletteSize);
    }
    return svg;
}

}  // namespace alcove
