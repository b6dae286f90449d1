#pragma once

#include <vector>

#include "polyalg/norm_spec.hpp"
#include "polyalg/types.hpp"

namespace polyalg {

/// Finite point cloud in E; `radius` is the exact max point norm, recomputed
/// on construction. Continuous compacts must be discretized by the caller.
class CompactSet {
public:
    CompactSet(std::vector<CVec> points, SpacePtr space);

    const std::vector<CVec>& points() const { return points_; }
    const SpacePtr& space() const { return space_; }
    double radius() const { return radius_; }

private:
    std::vector<CVec> points_;
    SpacePtr space_;
    double radius_;
};

}  // namespace polyalg
