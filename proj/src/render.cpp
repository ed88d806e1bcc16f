#include "overpath/render.hpp"

#include "overpath/overpartition.hpp"  // Parity

#include <nlohmann/json.hpp>
#include <sstream>

namespace overpath {

namespace {

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace

std::string render_ascii(const LatticePath& p) {
    const auto verts = p.vertices();
    const int xmax = verts.back().first;
    const int rows = p.k;             // heights 0 .. k-1
    const int cols = 2 * xmax + 2;
    std::vector<std::string> canvas(static_cast<std::size_t>(rows),
                                    std::string(static_cast<std::size_t>(cols), ' '));
    auto put = [&](int x_col, int y, char c) {
        if (y < 0 || y >= rows || x_col < 0 || x_col >= cols) return;
        canvas[static_cast<std::size_t>(rows - 1 - y)][static_cast<std::size_t>(x_col)] = c;
    };
    int x = 0;
    int y = p.start_height();
    for (StepKind s : p.steps) {
        switch (s) {
            case StepKind::NE: put(2 * x + 1, y + 1, '/'); ++x; ++y; break;
            case StepKind::SE: put(2 * x + 1, y, '\\'); ++x; --y; break;
            case StepKind::N: put(2 * x, y + 1, '|'); ++y; break;
            case StepKind::E: put(2 * x + 1, y, '_'); ++x; break;
        }
    }
    std::ostringstream os;
    os << p.to_text() << "  major=" << major_index(p) << "\n";
    for (int h = rows - 1; h >= 0; --h) {
        os << (h < 10 ? " " : "") << h << " |"
           << canvas[static_cast<std::size_t>(rows - 1 - h)] << "\n";
    }
    os << "   +" << std::string(static_cast<std::size_t>(cols), '-') << "\n";
    const auto pk = annotated_peaks(p);
    if (pk.empty()) {
        os << "peaks: none\n";
    } else {
        os << "peaks:";
        for (const auto& q : pk)
            os << " x=" << q.x << " " << (q.nese ? "NESE" : "NSE") << " rel=" << q.rel_height
               << " " << parity_name(peak_parity(p, q)) << ";";
        os << "\n";
    }
    return os.str();
}

std::string render_svg(const LatticePath& p, int unit) {
    const auto verts = p.vertices();
    const int xmax = verts.back().first;
    const double u = static_cast<double>(unit);
    const double w = (xmax + 2) * u;
    const double h = (p.k + 2) * u;
    auto px = [&](int vx) { return (vx + 1) * u; };
    auto py = [&](int vy) { return (p.k - vy) * u; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
       << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    // baseline
    os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(xmax)
       << "\" y2=\"" << py(0) << "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
    if (!verts.empty() && p.steps.size() > 0) {
        os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i) os << " ";
            os << px(verts[i].first) << "," << py(verts[i].second);
        }
        os << "\"/>\n";
    }
    for (const auto& q : annotated_peaks(p)) {
        os << "  <circle cx=\"" << px(q.x) << "\" cy=\"" << py(q.y)
           << "\" r=\"3\" fill=\"black\"/>\n";
        os << "  <text x=\"" << px(q.x) << "\" y=\"" << py(q.y) - 6
           << "\" font-size=\"" << u / 2 << "\" text-anchor=\"middle\">" << q.x << " ("
           << (q.nese ? "NESE" : "NSE") << ", r=" << q.rel_height << ", "
           << parity_name(peak_parity(p, q)) << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

nlohmann::json path_json(const LatticePath& p) {
    nlohmann::json j;
    j["k"] = p.k;
    j["a"] = p.a;
    std::string steps;
    for (StepKind s : p.steps) steps.push_back(step_letter(s));
    j["steps"] = steps;
    j["major_index"] = major_index(p);
    j["peaks"] = nlohmann::json::array();
    for (const auto& q : annotated_peaks(p)) {
        j["peaks"].push_back({{"x", q.x},
                              {"y", q.y},
                              {"kind", q.nese ? "NESE" : "NSE"},
                              {"rel_height", q.rel_height},
                              {"parity", parity_name(peak_parity(p, q))}});
    }
    return j;
}

}  // namespace overpath
