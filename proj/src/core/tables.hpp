#pragma once

#include <string>

#include "core/aq_catalog.hpp"
#include "core/weights.hpp"

namespace coh {

// Induced-representation label of one catalog entry, in the style of the
// k = 2 tables: Ind[D(0,3)⊗D(0,1)], J(F(-1,2)⊗F(1,2)), 1_{GL_4(R)}, sgn.
std::string langlands_label(GroupKind kind, const OrderedPartition& partition,
                            const SelfDualData& sd, int eps);

// one textual table for Coh_mu of the given group
std::string render_catalog_table(GroupKind kind, const Weight& mu);

// the split table followed by the quaternionic one, n = 2k
std::string render_tables(int k, const Weight& mu);

}  // namespace coh
