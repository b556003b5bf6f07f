#include "skeinlab/skein.hpp"

namespace skeinlab {

Complex encircle(const CategoryData& cat, int loop, int strand,
                 Orientation orientation) {
  if (orientation == Orientation::Over)
    return cat.s(loop, strand) / cat.d(strand);
  return cat.s(cat.dual[loop], strand) / cat.d(strand);
}

VerlindeElement omega_vector(const CategoryRef& cat) {
  return {cat, cat->d};
}

Complex killing_ring(const CategoryData& cat, int j) {
  Complex acc = 0.0;
  for (int i = 0; i < cat.rank(); ++i) acc += cat.d(i) * cat.s(i, j);
  return acc / (cat.D * cat.d(j));
}

long long hom_dim(const CategoryData& cat, int k,
                  const std::vector<int>& objects) {
  if (objects.empty()) throw CategoryError("hom_dim: empty object list");
  const int r = cat.rank();
  std::vector<long long> v(r, 0);
  v[objects[0]] = 1;
  for (size_t m = 1; m < objects.size(); ++m) {
    std::vector<long long> next(r, 0);
    for (int i = 0; i < r; ++i) {
      if (!v[i]) continue;
      for (int c = 0; c < r; ++c) {
        const long long n = cat.fusion(i, objects[m], c);
        if (n) next[c] += v[i] * n;
      }
    }
    v = std::move(next);
  }
  return v[k];
}

}  // namespace skeinlab
