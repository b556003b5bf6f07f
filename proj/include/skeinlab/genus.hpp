#pragma once

#include "skeinlab/fusion_trees.hpp"
#include "skeinlab/verlinde.hpp"

namespace skeinlab {

/// Element of the genus-g algebra: a sum, over leaf tuples (i_1..i_g), of
/// endomorphisms of X_{i_1} x ... x X_{i_g} in comb-basis coordinates.
/// With a nontrivial boundary label the blocks are rectangular, with rows
/// over the comb basis on (boundary, i_1..i_g); only the trivial boundary
/// is supported by the product and S operations.
struct GenusGElement {
  CategoryRef cat;
  int g = 1;
  int boundary = 0;
  std::map<std::vector<int>, Matrix> blocks;  // leaf tuple -> matrix

  GenusGElement& operator+=(const GenusGElement& other);
};

double distance(const GenusGElement& x, const GenusGElement& y);

/// One element per (tuple, row-state, column-state) pair with matching
/// root; sizes agree with hom_dim counting.
std::vector<GenusGElement> enumerate_basis(const CategoryRef& cat, int g,
                                           int boundary = 0);

/// delta_{tuple,tuple} weighted composition: 1/(d_{i_1}...d_{i_g}) x . y.
GenusGElement gen_convolution(const GenusGElement& x, const GenusGElement& y);

/// Stacks x over y and projects each strand pair onto its fusion channels.
GenusGElement gen_fusion(const FRData& fr, const GenusGElement& x,
                         const GenusGElement& y);

/// Closes the strands of x into loops threading g fresh strands (k_1..k_g),
/// summed with weights d_{k_1}...d_{k_g}; gen_sbar uses the opposite
/// crossings.  At g=1 these reduce to the s / sbar matrix action.
GenusGElement gen_s(const FRData& fr, const GenusGElement& x);
GenusGElement gen_sbar(const FRData& fr, const GenusGElement& x);

/// Over the full basis: gen_sbar(gen_fusion(x,y)) vs
/// gen_convolution(gen_sbar x, gen_sbar y), and the same for gen_s with the
/// factors of gen_fusion swapped.
IdentityReport verify_handlebody_verlinde(const FRData& fr, int g);

}  // namespace skeinlab
