#include "skeinlab/genus.hpp"

#include <algorithm>

namespace skeinlab {

namespace {

std::vector<std::vector<int>> all_tuples(int r, int g) {
  std::vector<std::vector<int>> out = {{}};
  for (int t = 0; t < g; ++t) {
    std::vector<std::vector<int>> next;
    for (const auto& s : out)
      for (int i = 0; i < r; ++i) {
        auto e = s;
        e.push_back(i);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

/// Applies the adjacent braid at position p, advancing `basis` to the
/// swapped leaf order, and returns its matrix.
Matrix braid_and_advance(const FRData& fr, CombBasis& basis, int p,
                         bool inverse) {
  Matrix b = braid_matrix(fr, basis, p, inverse);
  auto leaves = basis.leaves;
  std::swap(leaves[p], leaves[p + 1]);
  basis = comb_basis(*fr.cat, leaves);
  return b;
}

/// phi (an endomorphism over the first g leaves, in comb coordinates over
/// that prefix) extended by the identity on the remaining leaves.
Matrix embed_front(const CombBasis& front, const CombBasis& full, int g,
                   const Matrix& phi) {
  Matrix out = Matrix::Zero(full.size(), full.size());
  for (int js = 0; js < full.size(); ++js) {
    const auto& s = full.states[js];
    for (int jt = 0; jt < full.size(); ++jt) {
      const auto& t = full.states[jt];
      if (!std::equal(s.begin() + g, s.end(), t.begin() + g)) continue;
      const std::vector<int> sf(s.begin(), s.begin() + g);
      const std::vector<int> tf(t.begin(), t.begin() + g);
      out(js, jt) = phi(front.index(sf), front.index(tf));
    }
  }
  return out;
}

/// The strand at position p winds once around the whole block of strands
/// [qlo, qhi] (p < qlo): conjugate it next to the block, cross the block
/// and come back with uniform chirality, then conjugate back.  `inverse`
/// flips the chirality of the winding crossings only.
Matrix block_winding(const FRData& fr, const CombBasis& basis0, int p,
                     int qlo, int qhi, bool inverse) {
  CombBasis cur = basis0;
  Matrix total = Matrix::Identity(basis0.size(), basis0.size());
  std::vector<int> approach;
  for (int t = p; t <= qlo - 2; ++t) approach.push_back(t);
  for (int t : approach) total = braid_and_advance(fr, cur, t, false) * total;
  for (int t = qlo - 1; t <= qhi - 1; ++t)
    total = braid_and_advance(fr, cur, t, inverse) * total;
  for (int t = qhi - 1; t >= qlo - 1; --t)
    total = braid_and_advance(fr, cur, t, inverse) * total;
  for (auto it = approach.rbegin(); it != approach.rend(); ++it)
    total = braid_and_advance(fr, cur, *it, true) * total;
  return total;
}

/// Conjugates op by the move taking the strand at position p to the last
/// position; `cur` advances to the reordered basis.
void move_to_end_conj(const FRData& fr, CombBasis& cur, Matrix& op, int p) {
  const int L = static_cast<int>(cur.leaves.size());
  std::vector<int> swaps;
  for (int t = p; t <= L - 2; ++t) swaps.push_back(t);
  const CombBasis start = cur;
  Matrix fwd = Matrix::Identity(cur.size(), cur.size());
  for (int t : swaps) fwd = braid_and_advance(fr, cur, t, false) * fwd;
  CombBasis back = cur;
  Matrix inv = Matrix::Identity(cur.size(), cur.size());
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
    inv = braid_and_advance(fr, back, *it, true) * inv;
  op = fwd * op * inv;
}

void require_plain(const GenusGElement& x, const char* what) {
  if (x.boundary != 0)
    throw CategoryError(std::string(what) +
                        ": only the trivial boundary label is supported");
}

GenusGElement gen_s_impl(const FRData& fr, const GenusGElement& x,
                         bool inverse) {
  require_plain(x, "gen_s");
  const auto& cat = *fr.cat;
  const int r = cat.rank();
  const int g = x.g;
  GenusGElement out{x.cat, g, 0, {}};
  const auto ktuples = all_tuples(r, g);
  for (const auto& [tuple, phi] : x.blocks) {
    const CombBasis front = comb_basis(cat, tuple);
    for (const auto& kt : ktuples) {
      auto leaves = tuple;
      leaves.insert(leaves.end(), kt.begin(), kt.end());
      const CombBasis full = comb_basis(cat, leaves);
      Matrix op = embed_front(front, full, g, phi);
      // The loops are nested: strand i_m winds once around the block of
      // fresh strands k_1..k_{g-m}, so the first strand encloses all of
      // them and the last only k_1.  The mirror-image map uses the
      // opposite crossings and stacks the windings in the opposite order.
      for (int step = 0; step < g; ++step) {
        const int m = inverse ? step : g - 1 - step;
        op = block_winding(fr, full, m, g, 2 * g - 1 - m, inverse) * op;
      }
      CombBasis cur = full;
      for (int t = g - 1; t >= 0; --t) {
        move_to_end_conj(fr, cur, op, t);
        op = ptrace_last(cat, cur, op);
        auto rest = cur.leaves;
        rest.pop_back();
        cur = comb_basis(cat, rest);
      }
      Complex weight = 1.0;
      for (int k : kt) weight *= cat.d(k);
      auto it = out.blocks.find(kt);
      if (it == out.blocks.end())
        out.blocks[kt] = weight * op;
      else
        it->second += weight * op;
    }
  }
  return out;
}

}  // namespace

GenusGElement& GenusGElement::operator+=(const GenusGElement& other) {
  if (g != other.g || boundary != other.boundary)
    throw CategoryError("genus element shape mismatch");
  for (const auto& [tuple, m] : other.blocks) {
    auto it = blocks.find(tuple);
    if (it == blocks.end())
      blocks[tuple] = m;
    else
      it->second += m;
  }
  return *this;
}

double distance(const GenusGElement& x, const GenusGElement& y) {
  if (x.g != y.g) throw CategoryError("genus mismatch");
  double out = 0.0;
  auto side = [&](const GenusGElement& a, const GenusGElement& b) {
    for (const auto& [tuple, m] : a.blocks) {
      const auto it = b.blocks.find(tuple);
      const double res = it == b.blocks.end()
                             ? (m.size() ? m.cwiseAbs().maxCoeff() : 0.0)
                             : (m.size() ? (m - it->second).cwiseAbs().maxCoeff()
                                         : 0.0);
      if (res > out) out = res;
    }
  };
  side(x, y);
  side(y, x);
  return out;
}

std::vector<GenusGElement> enumerate_basis(const CategoryRef& cat, int g,
                                           int boundary) {
  if (g < 1) throw CategoryError("enumerate_basis requires g >= 1");
  if (!multiplicity_free(*cat))
    throw CategoryError("genus basis requires a multiplicity-free category");
  std::vector<GenusGElement> out;
  for (const auto& tuple : all_tuples(cat->rank(), g)) {
    const CombBasis cols = comb_basis(*cat, tuple);
    CombBasis rows = cols;
    if (boundary != 0) {
      auto leaves = tuple;
      leaves.insert(leaves.begin(), boundary);
      rows = comb_basis(*cat, leaves);
    }
    for (int p = 0; p < rows.size(); ++p)
      for (int q = 0; q < cols.size(); ++q) {
        if (rows.states[p].back() != cols.states[q].back()) continue;
        GenusGElement e{cat, g, boundary, {}};
        Matrix m = Matrix::Zero(rows.size(), cols.size());
        m(p, q) = 1.0;
        e.blocks[tuple] = std::move(m);
        out.push_back(std::move(e));
      }
  }
  return out;
}

GenusGElement gen_convolution(const GenusGElement& x, const GenusGElement& y) {
  require_plain(x, "gen_convolution");
  require_plain(y, "gen_convolution");
  if (x.g != y.g) throw CategoryError("genus mismatch");
  const auto& cat = *x.cat;
  GenusGElement out{x.cat, x.g, 0, {}};
  for (const auto& [tuple, mx] : x.blocks) {
    const auto it = y.blocks.find(tuple);
    if (it == y.blocks.end()) continue;
    if (mx.cols() != it->second.rows())
      throw CategoryError("genus block dimension mismatch");
    Complex weight = 1.0;
    for (int i : tuple) weight /= cat.d(i);
    out.blocks[tuple] = weight * (it->second * mx);
  }
  return out;
}

GenusGElement gen_fusion(const FRData& fr, const GenusGElement& x,
                         const GenusGElement& y) {
  require_plain(x, "gen_fusion");
  require_plain(y, "gen_fusion");
  if (x.g != y.g) throw CategoryError("genus mismatch");
  const auto& cat = *fr.cat;
  const int g = x.g;
  GenusGElement out{x.cat, g, 0, {}};
  for (const auto& [ti, mx] : x.blocks) {
    const CombBasis fi = comb_basis(cat, ti);
    for (const auto& [tj, my] : y.blocks) {
      const CombBasis fj = comb_basis(cat, tj);
      auto leaves_ij = ti;
      leaves_ij.insert(leaves_ij.end(), tj.begin(), tj.end());
      const CombBasis bij = comb_basis(cat, leaves_ij);
      const Matrix opx = embed_front(fi, bij, g, mx);

      // y embeds on the front of the (j, i) order, then conjugates over.
      auto leaves_ji = tj;
      leaves_ji.insert(leaves_ji.end(), ti.begin(), ti.end());
      const CombBasis bji = comb_basis(cat, leaves_ji);
      Matrix opy = embed_front(fj, bji, g, my);
      {
        std::vector<int> swaps;
        for (int m = 0; m < g; ++m)
          for (int t = g + m - 1; t >= m; --t) swaps.push_back(t);
        CombBasis cur = bji;
        Matrix fwd = Matrix::Identity(cur.size(), cur.size());
        for (int t : swaps) fwd = braid_and_advance(fr, cur, t, false) * fwd;
        CombBasis back = cur;
        Matrix inv = Matrix::Identity(cur.size(), cur.size());
        for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
          inv = braid_and_advance(fr, back, *it, true) * inv;
        opy = fwd * opy * inv;
      }

      Matrix op = opx * opy;

      // Interleave to (i_1 j_1 i_2 j_2 ...).
      CombBasis cur = bij;
      {
        std::vector<int> swaps;
        for (int m = 1; m < g; ++m)
          for (int t = g + m - 2; t >= 2 * m - 1; --t) swaps.push_back(t);
        Matrix fwd = Matrix::Identity(cur.size(), cur.size());
        CombBasis walk = cur;
        for (int t : swaps)
          fwd = braid_and_advance(fr, walk, t, false) * fwd;
        CombBasis back = walk;
        Matrix inv = Matrix::Identity(cur.size(), cur.size());
        for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
          inv = braid_and_advance(fr, back, *it, true) * inv;
        op = fwd * op * inv;
        cur = walk;
      }

      // Project each adjacent (i_m, j_m) pair onto its fusion channels.
      std::vector<std::vector<int>> kts = {{}};
      for (int m = 0; m < g; ++m) {
        std::vector<std::vector<int>> next;
        for (const auto& s : kts)
          for (int k = 0; k < cat.rank(); ++k)
            if (cat.fusion(ti[m], tj[m], k)) {
              auto e = s;
              e.push_back(k);
              next.push_back(std::move(e));
            }
        kts = std::move(next);
      }
      for (const auto& kt : kts) {
        CombBasis walk = cur;
        Matrix mrg = Matrix::Identity(cur.size(), cur.size());
        Matrix spl = Matrix::Identity(cur.size(), cur.size());
        for (int m = 0; m < g; ++m) {
          const Matrix step_m = merge_pair(fr, walk, m, kt[m]);
          const Matrix step_s = split_pair(fr, walk, m, kt[m]);
          mrg = step_m * mrg;
          spl = spl * step_s;
          auto next_leaves = walk.leaves;
          next_leaves.erase(next_leaves.begin() + m + 1);
          next_leaves[m] = kt[m];
          walk = comb_basis(cat, next_leaves);
        }
        const Matrix block = mrg * op * spl;
        auto it = out.blocks.find(kt);
        if (it == out.blocks.end())
          out.blocks[kt] = block;
        else
          it->second += block;
      }
    }
  }
  return out;
}

GenusGElement gen_s(const FRData& fr, const GenusGElement& x) {
  return gen_s_impl(fr, x, true);
}

GenusGElement gen_sbar(const FRData& fr, const GenusGElement& x) {
  return gen_s_impl(fr, x, false);
}

IdentityReport verify_handlebody_verlinde(const FRData& fr, int g) {
  const auto basis = enumerate_basis(fr.cat, g, 0);
  std::vector<GenusGElement> s_of, sbar_of;
  s_of.reserve(basis.size());
  sbar_of.reserve(basis.size());
  for (const auto& b : basis) {
    s_of.push_back(gen_s(fr, b));
    sbar_of.push_back(gen_sbar(fr, b));
  }
  double res_sbar = 0.0, res_s = 0.0;
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = 0; b < basis.size(); ++b) {
      const auto xy = gen_fusion(fr, basis[a], basis[b]);
      res_sbar = std::max(
          res_sbar, distance(gen_sbar(fr, xy),
                             gen_convolution(sbar_of[a], sbar_of[b])));
      const auto yx = gen_fusion(fr, basis[b], basis[a]);
      res_s = std::max(
          res_s,
          distance(gen_s(fr, yx), gen_convolution(s_of[a], s_of[b])));
    }
  IdentityReport report;
  report.checks.push_back({"gen_sbar(x y) = gen_sbar(x) * gen_sbar(y)",
                           res_sbar});
  report.checks.push_back({"gen_s(y x) = gen_s(x) * gen_s(y)", res_s});
  return report;
}

}  // namespace skeinlab
