#pragma once

#include "skeinlab/verlinde.hpp"

namespace skeinlab {

enum class Orientation { Over, Under };

/// Scalar by which a loop of color `loop` around a strand of color `strand`
/// acts: s_{ij}/d_j for an over-loop, sbar_{ij}/d_j for an under-loop.
Complex encircle(const CategoryData& cat, int loop, int strand,
                 Orientation orientation);

/// The regular coloring Omega = sum_i d_i x_i.
VerlindeElement omega_vector(const CategoryRef& cat);

/// (1/D) sum_i d_i s_{ij} / d_j; equals 1 on transparent j, 0 otherwise.
Complex killing_ring(const CategoryData& cat, int j);

/// Multiplicity of X_k in the ordered tensor product of `objects`,
/// by exact iterated N-tensor contraction.
long long hom_dim(const CategoryData& cat, int k,
                  const std::vector<int>& objects);

}  // namespace skeinlab
