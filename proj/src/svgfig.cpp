#include "atlas/svgfig.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

#include "atlas/projection.hpp"

namespace atlas {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // avoid -0.00
    if (std::string(buf) == "-0.00") return "0.00";
    return buf;
}

// orthonormal frame of the a2 plane: (k1-k2)/r2, (k1+k2-2k3)/r6
std::pair<double, double> plane_coords(const RootVector& p) {
    const FieldScalar inv_r2 = FieldScalar::sqrt2() * FieldScalar(Rational(1, 2));
    const FieldScalar inv_r6 = FieldScalar::sqrt6() * FieldScalar(Rational(1, 6));
    RootVector e1 = inv_r2 * (RootVector::k(1) - RootVector::k(2));
    RootVector e2 = inv_r6 * (RootVector::k(1) + RootVector::k(2) - FieldScalar(2) * RootVector::k(3));
    return {inner(p, e1).to_double().first, inner(p, e2).to_double().first};
}

struct Dot {
    double x, y;
    int multiplicity;
    std::string note;
};

void draw(std::string& svg, const std::vector<Dot>& dots, double dx) {
    for (const auto& d : dots) {
        svg += "  <circle class=\"root-dot\" cx=\"" + fmt(dx + 100 * d.x) + "\" cy=\"" + fmt(-100 * d.y) +
               "\" r=\"7\" fill=\"#1b4965\"/>\n";
        if (!d.note.empty())
            svg += "  <text class=\"mult\" x=\"" + fmt(dx + 100 * d.x + 10) + "\" y=\"" + fmt(-100 * d.y - 10) +
                   "\" font-size=\"22\">" + d.note + "</text>\n";
    }
}

std::string wrap(const std::string& body, int width) {
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + std::to_string(-width / 2) + " -250 " +
                      std::to_string(width) + " 500\">\n";
    svg += body;
    svg += "</svg>\n";
    return svg;
}

std::string projection_figure(AlgebraName name) {
    RootSystem rs = generate_roots(name);
    Subspace plane = pi_plane();
    std::map<std::pair<std::string, std::string>, std::pair<RootVector, int>> fibers;
    for (const auto& r : rs.roots()) {
        RootVector p = plane.project_span(r);
        auto key = std::make_pair(p.coords[0].to_string() + "," + p.coords[1].to_string(), p.coords[2].to_string());
        auto it = fibers.find(key);
        if (it == fibers.end())
            fibers.emplace(key, std::make_pair(p, 1));
        else
            it->second.second++;
    }
    std::vector<Dot> dots;
    for (const auto& [key, value] : fibers) {
        auto [x, y] = plane_coords(value.first);
        std::string note;
        if (value.second > 1) note = std::to_string(value.second);
        if (value.first.is_zero() && name != AlgebraName::g2)
            note += "+" + std::to_string(rs.rank());  // Cartan directions live over the center
        dots.push_back({x, y, value.second, note});
    }
    std::string body = "  <title>" + algebra_to_string(name) + " roots on the a2 plane</title>\n";
    std::vector<Dot> sorted = dots;  // map order is already deterministic
    draw(body, sorted, 0.0);
    return wrap(body, 500);
}

std::string c3_figure() {
    PlaneSet planes = build_planes(AlgebraName::f4);
    Decomposition d = decompose(AlgebraName::f4);
    struct Panel {
        const char* title;
        const char* plane;
        std::vector<RootVector> roots;
        double dx;
    };
    std::vector<Panel> panels = {{"Pi-", "Pi-", d.part(PartTag::jordan_bar, 1).roots, -320.0},
                                 {"Pi0", "Pi0", d.part(PartTag::g0).roots, 0.0},
                                 {"Pi+", "Pi+", d.part(PartTag::jordan, 1).roots, 320.0}};
    std::string body = "  <title>c3 root diagram across the three parallel planes</title>\n";
    for (const auto& panel : panels) {
        const Subspace& plane = planes.plane(panel.plane);
        const auto& basis = plane.orthogonal_basis();  // k4 and (r3/3)(k1+k2+k3), orthonormal
        std::vector<Dot> dots;
        for (const auto& r : panel.roots) {
            RootVector in_plane = r - plane.offset();
            double s = inner(in_plane, basis[0]).to_double().first;
            double t = inner(in_plane, basis[1]).to_double().first;
            dots.push_back({s, t, 1, ""});
        }
        draw(body, dots, panel.dx);
        body += "  <text class=\"panel\" x=\"" + fmt(panel.dx - 20) + "\" y=\"230\" font-size=\"26\">" +
                panel.title + "</text>\n";
    }
    return wrap(body, 1000);
}

}  // namespace

std::string render_figure(const std::string& name) {
    if (name == "c3") return c3_figure();
    AlgebraName algebra = algebra_from_string(name);
    switch (algebra) {
        case AlgebraName::g2:
        case AlgebraName::f4:
        case AlgebraName::e6:
        case AlgebraName::e7:
        case AlgebraName::e8: return projection_figure(algebra);
        default: throw std::invalid_argument("no figure for " + name);
    }
}

void emit_figure(const std::string& name, const std::string& path) {
    std::string svg = render_figure(name);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << svg;
}

}  // namespace atlas
