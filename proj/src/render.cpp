#include "render.hpp"

#include <cmath>
#include <sstream>

namespace mk {

std::string graph_dot(const ChordDiagram& d) {
    IntersectionGraph g = d.intersection_graph();
    std::ostringstream os;
    os << "graph intersection {\n";
    os << "  node [shape=circle];\n";
    for (auto& v : g.vertices) {
        os << "  \"" << v.id << "\" [label=\"" << v.id << (v.sign > 0 ? "+" : "-") << "\"";
        if (v.placement == Placement::Inner) os << ", style=filled, fillcolor=black, fontcolor=white";
        os << "];\n";
    }
    for (auto& [u, v] : g.edges) os << "  \"" << u << "\" -- \"" << v << "\";\n";
    os << "}\n";
    return os.str();
}

std::string render_svg(const ChordDiagram& d) {
    const double cx = 200, cy = 200, r = 120;
    int n2 = std::max(1, 2 * d.n());
    auto pt = [&](int pos, double radius) {
        double ang = 2 * M_PI * pos / n2 - M_PI / 2;
        return std::pair<double, double>{cx + radius * std::cos(ang), cy + radius * std::sin(ang)};
    };
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
          "viewBox=\"0 0 400 400\">\n";
    os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i < 2 * d.n(); i++) {
        auto [x, y] = pt(i, r);
        auto [lx, ly] = pt(i, r + 14);
        os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"2.5\" fill=\"black\"/>\n";
        os << "  <text x=\"" << lx << "\" y=\"" << ly
           << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"gray\">" << i << "</text>\n";
    }
    for (auto& c : d.chords()) {
        auto [x1, y1] = pt(c.p, r);
        auto [x2, y2] = pt(c.q, r);
        std::string color = c.sign > 0 ? "#1f77b4" : "#d62728";
        if (c.placement == Placement::Inner) {
            os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
               << y2 << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        } else {
            // exterior arc bulging away from the circle
            double mx = (x1 + x2) / 2 - cx, my = (y1 + y2) / 2 - cy;
            double len = std::sqrt(mx * mx + my * my);
            double bx = cx, by = cy - (r + 60);
            if (len > 1e-6) {
                bx = cx + mx / len * (r + 60);
                by = cy + my / len * (r + 60);
            }
            os << "  <path d=\"M " << x1 << " " << y1 << " Q " << bx << " " << by << " " << x2
               << " " << y2 << "\" fill=\"none\" stroke=\"" << color
               << "\" stroke-width=\"1.5\"/>\n";
        }
        auto [x1b, y1b] = pt(c.p, c.placement == Placement::Inner ? r - 14 : r + 26);
        os << "  <text x=\"" << x1b << "\" y=\"" << y1b
           << "\" font-size=\"11\" text-anchor=\"middle\">" << c.id << (c.sign > 0 ? "+" : "-")
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace mk
