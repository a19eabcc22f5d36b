#pragma once

#include <memory>
#include <vector>

#include "tlenv/element.hpp"

namespace tlenv {

// Diagrams without side points, top `to` points, bottom `from` points.
// Cached per (from, to).
std::shared_ptr<const std::vector<TLDiagram>> epi_diagrams(int from, int to);
std::shared_ptr<const std::vector<TLDiagram>> monic_diagrams(int from, int to);
std::shared_ptr<const std::vector<TLDiagram>> nonnested_epi_diagrams(int from, int to);
std::shared_ptr<const std::vector<TLDiagram>> nonnested_monic_diagrams(int from, int to);

// V -> W: sum of all epi (x) monic actions.
GradedElement map_X(const GradedElement& v);
// W -> V: signed sum of nonnested actions, sign (-1)^(number of caps).
GradedElement map_Y(const GradedElement& w);

}  // namespace tlenv
