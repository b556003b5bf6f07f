#pragma once

#include <array>
#include <map>

#include "skeinlab/category.hpp"

namespace skeinlab {

/// Scalar F/R symbol tables for a multiplicity-free category.
///
/// F keys are (a,b,c,d,e,f) meaning the recoupling coefficient
/// [F^{abc}_d]_{ef} in ((ab)_e c)_d = sum_f [F^{abc}_d]_{ef} (a(bc)_f)_d.
/// R keys are (i,j,k): the braiding eigenvalue on the k channel of i,j,
/// normalized so that theta_k R^{ij}_k R^{ji}_k = theta_i theta_j.
/// Admissible entries not present in the tables default to 1.
struct FRData {
  CategoryRef cat;
  std::map<std::array<int, 6>, Complex> F;
  std::map<std::array<int, 3>, Complex> R;

  /// 0 when any vertex of the entry is inadmissible.
  Complex Fget(int a, int b, int c, int d, int e, int f) const;
  Complex Rget(int i, int j, int k) const;
};

bool multiplicity_free(const CategoryData& cat);

/// Embedded tables exist for trivial, fibonacci, ising, semion, rep_z2.
FRData load_builtin_fr(const CategoryRef& cat);

/// {F: [{i,j,k,l,m,n, v:[re,im]}], R: [{i,j,k, v:[re,im]}]}, with
/// (i,j,k,l,m,n) the key (a,b,c,d,e,f) above.
FRData fr_from_json(const CategoryRef& cat, const std::string& json_text);

/// Pentagon, both hexagons, and the R-twist consistency condition.
ValidationReport validate_fr(const FRData& fr, double tol = kDefaultTol);

/// The fusion-path basis of Hom(root, X_{l_1} x ... x X_{l_n}) for a
/// left-nested (comb) tree: a state stores (a_1,...,a_n) with a_1 = l_1,
/// a_t the channel after the first t leaves, and a_n the root.
struct CombBasis {
  std::vector<int> leaves;
  std::vector<std::vector<int>> states;

  int size() const { return static_cast<int>(states.size()); }
  int index(const std::vector<int>& state) const;  // -1 when absent

 private:
  friend CombBasis comb_basis(const CategoryData& cat,
                              const std::vector<int>& leaves);
  std::map<std::vector<int>, int> index_;
};

CombBasis comb_basis(const CategoryData& cat, const std::vector<int>& leaves);

/// Matrix of the braid swapping leaves p and p+1 (0-based), from `from`
/// coordinates to comb coordinates over the swapped leaf order.  `inverse`
/// selects the opposite crossing.
Matrix braid_matrix(const FRData& fr, const CombBasis& from, int p,
                    bool inverse);

/// Merge vertex on leaves p, p+1 into channel c: matrix from `from`
/// coordinates to comb coordinates over the merged leaf order.  The split
/// matrix goes the other way; merge_pair * split_pair = identity.
Matrix merge_pair(const FRData& fr, const CombBasis& from, int p, int c);
Matrix split_pair(const FRData& fr, const CombBasis& from, int p, int c);

/// Quantum partial trace of an endomorphism over the last leaf; `op` is in
/// `basis` coordinates, the result in comb coordinates with that leaf gone.
Matrix ptrace_last(const CategoryData& cat, const CombBasis& basis,
                   const Matrix& op);

}  // namespace skeinlab
