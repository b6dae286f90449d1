#include "polyalg/compact_set.hpp"

#include <algorithm>

#include "polyalg/exceptions.hpp"

namespace polyalg {

CompactSet::CompactSet(std::vector<CVec> points, SpacePtr space)
    : points_(std::move(points)), space_(std::move(space)) {
    if (points_.empty()) throw std::invalid_argument("compact set must be nonempty");
    radius_ = 0.0;
    for (const CVec& x : points_) {
        if (x.size() != space_->dim) throw DimensionMismatch("point dimension does not match space");
        radius_ = std::max(radius_, vector_norm(space_->norm, x));
    }
}

}  // namespace polyalg
