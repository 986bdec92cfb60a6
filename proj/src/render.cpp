#include "hrnflow/render.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

namespace hrnflow {

namespace {

struct Bounds {
    std::int64_t lo = 0;
    std::int64_t hi = 4;
};

Bounds diagram_bounds(const ErrorDiagram& diagram) {
    if (diagram.empty()) {
        return {};
    }
    Bounds b{std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::min()};
    for (const auto& p : diagram.points()) {
        b.lo = std::min(b.lo, p.birth);
        b.hi = std::max(b.hi, p.birth);
        if (!p.at_infinity()) {
            b.lo = std::min(b.lo, p.death.value());
            b.hi = std::max(b.hi, p.death.value());
        }
    }
    return {b.lo - 1, b.hi + 1};
}

char multiplicity_glyph(Dim m) {
    return m > 9 ? '+' : static_cast<char>('0' + m);
}

} // namespace

std::string render_diagram_ascii(const ErrorDiagram& diagram) {
    const Bounds b = diagram_bounds(diagram);
    std::map<std::int64_t, Dim> infinite;
    std::map<std::pair<std::int64_t, std::int64_t>, Dim> proper;
    for (const auto& p : diagram.points()) {
        if (p.at_infinity()) {
            infinite[p.birth] += p.multiplicity;
        } else {
            proper[{p.birth, p.death.value()}] += p.multiplicity;
        }
    }

    constexpr int label_width = 6;
    constexpr int cell = 3;
    std::ostringstream out;
    out << "death\n";
    out << std::setw(label_width) << "inf" << " |";
    for (std::int64_t x = b.lo; x <= b.hi; ++x) {
        auto it = infinite.find(x);
        out << std::setw(cell) << (it == infinite.end() ? '-' : multiplicity_glyph(it->second));
    }
    out << '\n';
    for (std::int64_t y = b.hi; y >= b.lo; --y) {
        std::string row;
        for (std::int64_t x = b.lo; x <= b.hi; ++x) {
            char c = ' ';
            if (auto it = proper.find({x, y}); it != proper.end()) {
                c = multiplicity_glyph(it->second);
            } else if (x == y) {
                c = '.';
            }
            row += std::string(cell - 1, ' ') + c;
        }
        while (!row.empty() && row.back() == ' ') {
            row.pop_back();
        }
        out << std::setw(label_width) << y << " |" << row << '\n';
    }
    out << std::string(label_width, ' ') << " +"
        << std::string(static_cast<std::size_t>((b.hi - b.lo + 1) * cell), '-') << '\n';
    out << std::string(label_width + 2, ' ');
    for (std::int64_t x = b.lo; x <= b.hi; ++x) {
        out << std::setw(cell) << x;
    }
    out << "  birth\n";
    return out.str();
}

std::string render_diagram_svg(const ErrorDiagram& diagram) {
    const Bounds b = diagram_bounds(diagram);
    constexpr double size = 400.0;
    constexpr double margin = 50.0;
    constexpr double inf_band = 30.0;
    const double span = static_cast<double>(b.hi - b.lo);
    const double plot = size - 2 * margin;
    auto sx = [&](std::int64_t x) { return margin + plot * static_cast<double>(x - b.lo) / span; };
    auto sy = [&](std::int64_t y) { return size - margin - (plot - inf_band) * static_cast<double>(y - b.lo) / span; };
    const double inf_y = margin;

    std::ostringstream out;
    out << std::fixed << std::setprecision(1);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    out << "    <line x1=\"" << sx(b.lo) << "\" y1=\"" << sy(b.lo) << "\" x2=\"" << sx(b.hi) << "\" y2=\""
        << sy(b.lo) << "\"/>\n";
    out << "    <line x1=\"" << sx(b.lo) << "\" y1=\"" << sy(b.lo) << "\" x2=\"" << sx(b.lo) << "\" y2=\""
        << inf_y << "\"/>\n";
    out << "  </g>\n";
    out << "  <line id=\"diagonal\" x1=\"" << sx(b.lo) << "\" y1=\"" << sy(b.lo) << "\" x2=\"" << sx(b.hi)
        << "\" y2=\"" << sy(b.hi) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    out << "  <line id=\"infinity-row\" x1=\"" << sx(b.lo) << "\" y1=\"" << inf_y << "\" x2=\"" << sx(b.hi)
        << "\" y2=\"" << inf_y << "\" stroke=\"gray\" stroke-dasharray=\"2 2\"/>\n";
    out << "  <text x=\"" << margin - 30 << "\" y=\"" << inf_y + 4 << "\" font-size=\"12\">inf</text>\n";
    for (std::int64_t t = b.lo; t <= b.hi; ++t) {
        out << "  <text x=\"" << sx(t) - 4 << "\" y=\"" << size - margin + 16 << "\" font-size=\"11\">" << t
            << "</text>\n";
        out << "  <text x=\"" << margin - 24 << "\" y=\"" << sy(t) + 4 << "\" font-size=\"11\">" << t
            << "</text>\n";
    }
    out << "  <text x=\"" << size / 2 << "\" y=\"" << size - 10 << "\" font-size=\"12\">birth</text>\n";
    out << "  <text x=\"10\" y=\"" << size / 2 << "\" font-size=\"12\">death</text>\n";
    out << "  <g id=\"points\">\n";
    for (const auto& p : diagram.points()) {
        const double r = 3.0 + 2.0 * static_cast<double>(std::min<Dim>(p.multiplicity, 8));
        const double cy = p.at_infinity() ? inf_y : sy(p.death.value());
        out << "    <circle class=\"" << (p.at_infinity() ? "infinite" : "proper") << "\" cx=\"" << sx(p.birth)
            << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"" << (p.at_infinity() ? "crimson" : "steelblue")
            << "\" fill-opacity=\"0.7\"><title>(" << p.birth << ", " << p.death.to_string()
            << ") x" << p.multiplicity << "</title></circle>\n";
    }
    out << "  </g>\n</svg>\n";
    return out.str();
}

std::string render_graph_ascii(const Hrn& h) {
    std::ostringstream out;
    out << "HRN with m = " << h.cycle_count() << ", " << h.vertices().size() << " vertices, "
        << h.edges().size() << " edges\n";
    out << "spine:";
    for (VertexId v : h.spine()) {
        out << ' ' << h.label(v);
    }
    out << '\n';
    for (std::size_t i = 1; i <= h.cycles().size(); ++i) {
        out << 'H' << i << ':';
        for (VertexId v : h.cycles()[i - 1]) {
            out << ' ' << h.label(v) << " ->";
        }
        out << ' ' << h.label(h.cycles()[i - 1].front()) << '\n';
    }
    return out.str();
}

std::string render_graph_svg(const Hrn& h) {
    constexpr double step = 70.0;
    constexpr double base_y = 160.0;
    constexpr double top_y = 60.0;
    std::map<VertexId, std::pair<double, double>> pos;
    for (VertexId v : h.spine()) {
        pos[v] = {step * v, base_y};
    }
    for (std::size_t i = 1; i <= h.cycles().size(); ++i) {
        const auto& cycle = h.cycles()[i - 1];
        const double left = step * static_cast<double>(cycle.front());
        const double right = step * static_cast<double>(cycle.back());
        const std::size_t aux = cycle.size() - 2;
        for (std::size_t a = 0; a < aux; ++a) {
            const double t = static_cast<double>(a + 1) / static_cast<double>(aux + 1);
            pos[cycle[a + 1]] = {left + t * (right - left), top_y};
        }
    }
    const double width = step * static_cast<double>(h.spine().size() + 1);

    std::ostringstream out;
    out << std::fixed << std::setprecision(1);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"220\">\n";
    out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"16\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n";
    for (const Edge& e : h.edges()) {
        const auto [x1, y1] = pos[e.tail];
        const auto [x2, y2] = pos[e.head];
        out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
    }
    for (const auto& [v, xy] : pos) {
        out << "  <circle cx=\"" << xy.first << "\" cy=\"" << xy.second << "\" r=\"5\"/>\n";
        out << "  <text x=\"" << xy.first - 6 << "\" y=\"" << (xy.second == base_y ? xy.second + 20 : xy.second - 10)
            << "\" font-size=\"12\">" << h.label(v) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace hrnflow
