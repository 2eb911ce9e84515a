#include "defco/named.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "defco/errors.hpp"

namespace defco {

namespace {

// Rotation system from a straight-line drawing: neighbors sorted by angle.
std::vector<std::vector<int>> rotations_from_points(
    const std::vector<std::pair<double, double>>& pos,
    const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> rot(pos.size());
    for (auto [u, v] : edges) {
        rot[u].push_back(v);
        rot[v].push_back(u);
    }
    for (std::size_t v = 0; v < pos.size(); ++v) {
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
            double aa = std::atan2(pos[a].second - pos[v].second, pos[a].first - pos[v].first);
            double ab = std::atan2(pos[b].second - pos[v].second, pos[b].first - pos[v].first);
            return aa < ab;
        });
    }
    return rot;
}

PlanarEmbedding make_cycle(int n) {
    if (n < 3) throw ContractError("cycle(n) needs n >= 3");
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return PlanarEmbedding::build(std::move(rot));
}

PlanarEmbedding make_path(int n) {
    if (n < 1) throw ContractError("path(n) needs n >= 1");
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i + 1 < n; ++i) {
        rot[i].push_back(i + 1);
        rot[i + 1].push_back(i);
    }
    return PlanarEmbedding::build(std::move(rot));
}

// star(n) is K_{1,n}: center 0, leaves 1..n.
PlanarEmbedding make_star(int n) {
    if (n < 1) throw ContractError("star(n) needs n >= 1");
    std::vector<std::vector<int>> rot(n + 1);
    for (int i = 1; i <= n; ++i) {
        rot[0].push_back(i);
        rot[i] = {0};
    }
    return PlanarEmbedding::build(std::move(rot));
}

// grid(m,n): m rows by n columns, vertex (r,c) = r*n + c.
PlanarEmbedding make_grid(int m, int n) {
    if (m < 1 || n < 1) throw ContractError("grid(m,n) needs m,n >= 1");
    std::vector<std::pair<double, double>> pos(static_cast<std::size_t>(m) * n);
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            int v = r * n + c;
            pos[v] = {static_cast<double>(c), static_cast<double>(-r)};
            if (c + 1 < n) edges.emplace_back(v, v + 1);
            if (r + 1 < m) edges.emplace_back(v, v + n);
        }
    return PlanarEmbedding::build(rotations_from_points(pos, edges));
}

// Four concentric rings of five: outer pentagon 0-4, spoke layer 5-9,
// zigzag layer 10-14, inner pentagon 15-19.
PlanarEmbedding make_dodecahedron() {
    std::vector<std::pair<double, double>> pos(20);
    std::vector<std::pair<int, int>> edges;
    const double step = 2.0 * std::numbers::pi / 5.0;
    for (int i = 0; i < 5; ++i) {
        double th = step * i;
        pos[i] = {4 * std::cos(th), 4 * std::sin(th)};
        pos[5 + i] = {3 * std::cos(th), 3 * std::sin(th)};
        pos[10 + i] = {2 * std::cos(th + step / 2), 2 * std::sin(th + step / 2)};
        pos[15 + i] = {std::cos(th + step / 2), std::sin(th + step / 2)};
    }
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        edges.emplace_back(i, j);
        edges.emplace_back(i, 5 + i);
        edges.emplace_back(5 + i, 10 + i);
        edges.emplace_back(10 + i, 5 + j);
        edges.emplace_back(10 + i, 15 + i);
        edges.emplace_back(15 + i, 15 + j);
    }
    return PlanarEmbedding::build(rotations_from_points(pos, edges));
}

}  // namespace

PlanarEmbedding subdivide_all(const PlanarEmbedding& base) {
    int n = base.vertex_count();
    std::vector<std::vector<int>> rot(n + base.edge_count());
    for (int v = 0; v < n; ++v) {
        rot[v] = base.rotations()[v];
        for (int& w : rot[v]) w = n + base.edge_id(v, w);
    }
    for (int e = 0; e < base.edge_count(); ++e) {
        auto [u, v] = base.edge(e);
        rot[n + e] = {u, v};
    }
    return PlanarEmbedding::build(std::move(rot));
}

PlanarEmbedding gen_named(const std::string& name, int default_n) {
    std::string head = name;
    std::string args;
    auto open = name.find('(');
    if (open != std::string::npos) {
        if (name.back() != ')') throw ContractError("gen_named: unbalanced '(' in " + name);
        head = name.substr(0, open);
        args = name.substr(open + 1, name.size() - open - 2);
    }
    auto int_arg = [&](int fallback) {
        if (args.empty()) {
            if (fallback <= 0)
                throw ContractError("gen_named: " + head + " needs a size (use " + head +
                                    "(n) or --n)");
            return fallback;
        }
        return std::stoi(args);
    };

    if (head == "cycle") return make_cycle(int_arg(default_n));
    if (head == "path") return make_path(int_arg(default_n));
    if (head == "star") return make_star(int_arg(default_n));
    if (head == "dodecahedron") return make_dodecahedron();
    if (head == "grid") {
        auto comma = args.find(',');
        if (comma != std::string::npos)
            return make_grid(std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1)));
        int n = int_arg(default_n);
        int m = std::max(1, static_cast<int>(std::lround(std::sqrt(n))));
        return make_grid(m, (n + m - 1) / m);
    }
    if (head == "subdivided") {
        if (args.empty()) throw ContractError("gen_named: subdivided(<name>) needs a base");
        return subdivide_all(gen_named(args, default_n));
    }
    throw ContractError("gen_named: unknown family '" + head + "'");
}

}  // namespace defco
