#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "poset.hpp"

namespace affinv {

// One text grid per layer. axes names the coordinates used as
// (column, row, layer); the default draws z-layers of the xy-plane.
inline std::string render_ascii(const std::set<Point3>& I, coord n, std::array<int, 3> axes = {0, 1, 2}) {
    static const char* names = "xyz";
    std::set<std::array<coord, 3>> pts;
    for (Point3 u : I) pts.insert({u[axes[0]], u[axes[1]], u[axes[2]]});
    std::ostringstream out;
    for (coord L = 0; L <= n; ++L) {
        int count = 0;
        for (auto& q : pts) count += q[2] == L;
        out << names[axes[2]] << "=" << L << " (" << count << " points)\n";
        for (coord row = n; row >= 0; --row) {
            for (coord col = 0; col <= n; ++col) out << (pts.count({col, row, L}) ? '#' : '.');
            out << '\n';
        }
    }
    return out.str();
}

// Isometric drawing of unit cubes, painted back to front.
inline std::string render_svg(const std::set<Point3>& I, coord n, double unit = 20.0) {
    const double ax = unit * 0.8660254037844386, by = unit * 0.5;
    const double width = 2 * ax * (n + 1) + 2 * unit;
    const double height = 2 * by * (n + 1) + unit * (n + 1) + 2 * unit;
    const double ox = ax * (n + 1) + unit, oy = unit * (n + 1) + unit;
    auto P = [&](double x, double y, double z) {
        return std::array<double, 2>{ox + (x - y) * ax, oy + (x + y) * by - z * unit};
    };
    auto poly = [&](std::ostringstream& o, std::vector<std::array<double, 2>> v, const char* fill) {
        o << "<polygon points=\"";
        char buf[64];
        for (size_t i = 0; i < v.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", v[i][0], v[i][1]);
            o << buf;
        }
        o << "\" fill=\"" << fill << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    };
    std::vector<Point3> order(I.begin(), I.end());
    std::stable_sort(order.begin(), order.end(), [](Point3 a, Point3 b) {
        return a.x + a.y + a.z < b.x + b.y + b.z;
    });
    std::ostringstream o;
    char head[160];
    std::snprintf(head, sizeof head,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  width, height, width, height);
    o << head;
    for (Point3 u : order) {
        double x = u.x, y = u.y, z = u.z;
        poly(o, {P(x, y, z + 1), P(x + 1, y, z + 1), P(x + 1, y + 1, z + 1), P(x, y + 1, z + 1)}, "#e8e8e8");
        poly(o, {P(x + 1, y, z), P(x + 1, y + 1, z), P(x + 1, y + 1, z + 1), P(x + 1, y, z + 1)}, "#b0b0b0");
        poly(o, {P(x, y + 1, z), P(x + 1, y + 1, z), P(x + 1, y + 1, z + 1), P(x, y + 1, z + 1)}, "#808080");
    }
    o << "</svg>\n";
    return o.str();
}

} // namespace affinv
