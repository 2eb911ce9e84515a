#include "defco/coloring.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "defco/errors.hpp"

namespace defco {

Color color_from_value(int v) {
    if (v == 3) return Color::C3;
    if (v == 4) return Color::C4;
    throw ContractError("color value must be 3 or 4, got " + std::to_string(v));
}

DefectiveColoring::DefectiveColoring(const SimpleGraph& g, int bound3, int bound4)
    : g_(&g),
      bound3_(bound3),
      bound4_(bound4),
      color_(g.vertex_count(), Color::None),
      same_(g.vertex_count(), 0) {}

bool DefectiveColoring::complete() const {
    return std::none_of(color_.begin(), color_.end(),
                        [](Color c) { return c == Color::None; });
}

int DefectiveColoring::same_color_count(int v) const {
    if (!colored(v)) throw ContractError("same_color_count: vertex uncolored");
    return same_[v];
}

bool DefectiveColoring::is_saturated(int v) const {
    if (!colored(v)) throw ContractError("is_saturated: vertex uncolored");
    return same_[v] >= bound(color_[v]);
}

bool DefectiveColoring::can_assign(int v, Color c) const {
    int own = 0;
    for (int w : g_->neighbors(v)) {
        if (color_[w] != c) continue;
        ++own;
        if (same_[w] >= bound(c)) return false;  // w already saturated
    }
    return own <= bound(c);
}

void DefectiveColoring::assign(int v, Color c) {
    if (colored(v)) throw ContractError("assign: vertex already colored");
    int own = 0;
    for (int w : g_->neighbors(v))
        if (color_[w] == c) {
            ++same_[w];
            ++own;
        }
    color_[v] = c;
    same_[v] = own;
}

void DefectiveColoring::unassign(int v) {
    if (!colored(v)) throw ContractError("unassign: vertex not colored");
    Color c = color_[v];
    for (int w : g_->neighbors(v))
        if (color_[w] == c) --same_[w];
    color_[v] = Color::None;
    same_[v] = 0;
}

bool DefectiveColoring::can_flip(int v, int* blocker) const {
    Color to = other(color_[v]);
    int own = 0;
    for (int w : g_->neighbors(v)) {
        if (color_[w] != to) continue;
        ++own;
        if (same_[w] >= bound(to)) {
            if (blocker) *blocker = w;
            return false;
        }
    }
    if (own > bound(to)) {
        if (blocker) *blocker = v;
        return false;
    }
    return true;
}

DefectiveColoring::FlipOutcome DefectiveColoring::safe_flip(int v) {
    if (!colored(v)) throw ContractError("safe_flip: vertex uncolored");
    FlipOutcome out;
    int blocker = -1;
    if (!can_flip(v, &blocker)) {
        out.blocker = blocker;
        out.reason = blocker == v
                         ? "vertex would exceed its new bound"
                         : "neighbor " + std::to_string(blocker) + " is saturated";
        return out;
    }
    Color from = color_[v];
    unassign(v);
    assign(v, other(from));
    out.flipped = true;
    return out;
}

VerifyResult verify(const SimpleGraph& g, const std::vector<Color>& assignment, int d1, int d2) {
    if (static_cast<int>(assignment.size()) != g.vertex_count())
        throw ContractError("verify: assignment size mismatch");
    VerifyResult res;
    int n3 = 0, n4 = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (assignment[v] == Color::None) throw ContractError("verify: incomplete coloring");
        (assignment[v] == Color::C3 ? n3 : n4)++;
    }
    if (n3 == 0 || n4 == 0) res.empty_class = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int same = 0;
        for (int w : g.neighbors(v))
            if (assignment[w] == assignment[v]) ++same;
        int limit = assignment[v] == Color::C3 ? d1 : d2;
        if (same > limit) res.violations.push_back({v, same});
    }
    res.valid = !res.empty_class && res.violations.empty();
    return res;
}

std::optional<RecoloringPlan> recoloring_search(const DefectiveColoring& start, int target,
                                                int max_depth) {
    if (start.colored(target)) throw ContractError("recoloring_search: target already colored");
    if (max_depth < 1) return std::nullopt;

    const SimpleGraph& g = start.graph();
    auto dist = g.distances_from(target, 2);
    std::vector<int> candidates;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != target && dist[v] >= 0 && dist[v] <= 2) candidates.push_back(v);

    auto key_of = [&](const DefectiveColoring& c) {
        std::string key(candidates.size(), '\0');
        for (std::size_t i = 0; i < candidates.size(); ++i)
            key[i] = static_cast<char>(c.color(candidates[i]));
        return key;
    };

    struct Node {
        DefectiveColoring coloring;
        std::vector<Move> moves;
    };

    std::deque<Node> queue;
    std::unordered_set<std::string> seen;
    queue.push_back({start, {}});
    seen.insert(key_of(start));

    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();

        for (Color c : {Color::C3, Color::C4}) {
            if (!node.coloring.can_assign(target, c)) continue;
            RecoloringPlan plan{node.moves};
            plan.moves.push_back({target, c});
            return plan;
        }

        if (static_cast<int>(node.moves.size()) + 2 > max_depth) continue;
        for (int v : candidates) {
            if (!node.coloring.colored(v) || !node.coloring.can_flip(v)) continue;
            Node next{node.coloring, node.moves};
            Color to = other(next.coloring.color(v));
            next.coloring.safe_flip(v);
            auto key = key_of(next.coloring);
            if (!seen.insert(key).second) continue;
            next.moves.push_back({v, to});
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

}  // namespace defco
