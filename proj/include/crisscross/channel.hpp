#pragma once

#include <vector>

#include "crisscross/grid.hpp"

namespace crisscross {

// Deduplicated set of equal-dimension grids in canonical (sorted) order.
class GridSet {
public:
    GridSet() = default;
    static GridSet from_vector(std::vector<BitGrid> grids);

    size_t size() const { return grids_.size(); }
    bool empty() const { return grids_.empty(); }
    bool contains(const BitGrid& g) const;
    bool intersects(const GridSet& other) const;
    const std::vector<BitGrid>& grids() const& { return grids_; }
    // Rvalue overload returns by value so iterating grids() of a temporary
    // set never dangles.
    std::vector<BitGrid> grids() && { return std::move(grids_); }

private:
    std::vector<BitGrid> grids_;
};

// All grids reachable from x by deleting exactly t_r rows and t_c columns.
// Requires 0 <= t_r < rows and 0 <= t_c < cols (t = 0 allowed; both zero
// gives {x}). Guarded enumeration.
GridSet deletion_ball(const BitGrid& x, int t_r, int t_c);

// All grids reachable from x by inserting exactly t_r rows and t_c columns.
GridSet insertion_ball(const BitGrid& x, int t_r, int t_c);

enum class BallMode { deletion, insertion };

// Whether the (t_r, t_c) ball of x meets the ball of y of the same mode and
// target dimensions. (t_r, t_c) applies to x; y's own counts are derived
// from the target dimensions, so x and y may differ in shape.
bool balls_intersect(const BitGrid& x, const BitGrid& y, BallMode mode, int t_r,
                     int t_c);

}  // namespace crisscross
