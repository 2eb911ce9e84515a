#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defco/graph.hpp"

namespace defco {

/// The two color classes keep the paper-of-record convention for (3,4):
/// class "3" tolerates up to d1 same-colored neighbors, class "4" up to d2.
/// For general bounds the names stay 3 and 4; only the bounds change.
enum class Color : unsigned char { None = 0, C3 = 3, C4 = 4 };

inline Color other(Color c) { return c == Color::C3 ? Color::C4 : Color::C3; }
inline int color_value(Color c) { return static_cast<int>(c); }
Color color_from_value(int v);

/// Partial two-class defective coloring with same-color neighbor counts kept
/// incrementally. Single-owner mutable value; distinct colorings of one
/// shared graph may be used from different threads.
class DefectiveColoring {
public:
    explicit DefectiveColoring(const SimpleGraph& g, int bound3 = 3, int bound4 = 4);

    const SimpleGraph& graph() const { return *g_; }
    int bound(Color c) const { return c == Color::C3 ? bound3_ : bound4_; }

    Color color(int v) const { return color_[v]; }
    bool colored(int v) const { return color_[v] != Color::None; }
    bool complete() const;

    /// Count of v's neighbors sharing v's color; v must be colored.
    int same_color_count(int v) const;

    /// A vertex colored i is saturated once it has i same-colored neighbors
    /// (its defect budget is spent). Throws ContractError on uncolored v.
    bool is_saturated(int v) const;

    /// True iff assigning c to the uncolored vertex v keeps validity: v stays
    /// within c's bound and no saturated c-neighbor is pushed over.
    bool can_assign(int v, Color c) const;

    /// Unchecked bookkeeping primitives (used by search and by the
    /// bookkeeping property tests).
    void assign(int v, Color c);
    void unassign(int v);

    struct FlipOutcome {
        bool flipped = false;
        int blocker = -1;  // vertex obstructing the flip, when blocked
        std::string reason;
    };

    /// Whether flipping v's color preserves validity; on failure names the
    /// first obstruction. Flipping away from a color never over-saturates
    /// old-color neighbors, so only the new color side is checked.
    bool can_flip(int v, int* blocker = nullptr) const;

    /// Flip v if doing so keeps the coloring valid.
    FlipOutcome safe_flip(int v);

    const std::vector<Color>& assignment() const { return color_; }

private:
    const SimpleGraph* g_;
    int bound3_, bound4_;
    std::vector<Color> color_;
    std::vector<int> same_;
};

struct VerifyViolation {
    int vertex;
    int same_color_degree;
};

struct VerifyResult {
    bool valid = false;
    bool empty_class = false;
    std::vector<VerifyViolation> violations;
};

/// Full validity check by direct recount, independent of the incremental
/// bookkeeping: both classes nonempty and class i induces max degree <= d_i.
/// Throws ContractError when the coloring is incomplete.
VerifyResult verify(const SimpleGraph& g, const std::vector<Color>& assignment, int d1, int d2);

struct Move {
    int vertex;
    Color color;
};

/// Ordered flip sequence ending with the move that colors the target.
/// Replaying the moves keeps the coloring valid after every prefix.
struct RecoloringPlan {
    std::vector<Move> moves;
    int depth() const { return static_cast<int>(moves.size()); }
};

/// Breadth-first search over safe single-vertex flips of colored vertices
/// within graph distance 2 of the target, looking for a state where the
/// target can be colored validly. Returns a shortest plan (final coloring
/// move included in the depth); flips are explored in ascending vertex-index
/// order and color 3 is tried before color 4, so results are deterministic.
std::optional<RecoloringPlan> recoloring_search(const DefectiveColoring& start, int target,
                                                int max_depth = 6);

}  // namespace defco
