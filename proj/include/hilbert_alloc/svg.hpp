#pragma once

#include "hilbert_alloc/allocator.hpp"
#include "hilbert_alloc/hilbert.hpp"

#include <string>

namespace hilbert_alloc {

/// Allocated regions as filled cells over the grid, coloured by a hash of
/// the region id, with a legend listing id and phi.
std::string render_allocation_svg(const Allocator& state);

/// The curve as a polyline through the cell centres.
std::string render_curve_svg(const CurveOrder& order);

} // namespace hilbert_alloc
