#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "skeinlab/types.hpp"

namespace skeinlab {

/// A finite (pre)modular category presented numerically.
///
/// Label 0 is always the unit object.  The stored S-matrix is the
/// unnormalized one, s_{0j} = d_j; the normalized S = s / sqrt(D) is only
/// formed inside the genus dimension formula.
struct CategoryData {
  std::string name;
  std::vector<std::string> labels;
  std::vector<int> dual;           // involution on label indices
  std::vector<long long> fusion_;  // N[i][j][k], flattened i*r*r + j*r + k
  Vector d;                        // categorical dimensions
  Vector theta;                    // twists
  Matrix s;                        // unnormalized S-matrix
  Complex D;                       // global dimension, sum_i d_i^2

  int rank() const { return static_cast<int>(labels.size()); }

  long long fusion(int i, int j, int k) const {
    const int r = rank();
    return fusion_[(static_cast<size_t>(i) * r + j) * r + k];
  }
  long long& fusion(int i, int j, int k) {
    const int r = rank();
    return fusion_[(static_cast<size_t>(i) * r + j) * r + k];
  }

  int dual_of(int i) const { return dual[i]; }

  /// sbar_{ij} = s_{i* j}
  Matrix sbar() const;

  int label_index(const std::string& label) const;  // throws CategoryError
};

using CategoryRef = std::shared_ptr<const CategoryData>;

struct CheckResult {
  std::string name;
  bool pass = true;
  double max_residual = 0.0;
  std::vector<std::vector<int>> offending;  // index tuples of failures
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool pass() const;
  double max_residual() const;
  std::string summary() const;
};

/// Generate the unnormalized S-matrix from (N, d, theta) via the ribbon
/// identity s_{ij} = theta_i^{-1} theta_j^{-1} sum_k N_{i*j}^k d_k theta_k.
Matrix s_from_ribbon(const CategoryData& cat);

/// Builtin families: trivial, fibonacci, ising, semion, rep_z2,
/// cyclic (params n, t: theta_j = exp(2 pi i t j^2 / n)), su2 (param k).
CategoryRef load_builtin(const std::string& name,
                         const std::map<std::string, long long>& params = {});

/// Parse a category source: a builtin name, optionally with parameters as
/// in "su2(2)" or "cyclic(3,1)", or a path to a JSON file.
CategoryRef load_category(const std::string& source);

std::vector<std::string> builtin_names();

ValidationReport validate(const CategoryData& cat, double tol = kDefaultTol);

Complex global_dim(const CategoryData& cat);

/// Transparent simple objects: { i : s_{ij} = d_i d_j for all j }.
std::vector<int> transparent_objects(const CategoryData& cat,
                                     double tol = kDefaultTol);

bool is_modular(const CategoryData& cat, double tol = kDefaultTol);

/// Deligne product: labels are pairs, all data multiplies componentwise.
CategoryRef product_category(const CategoryData& a, const CategoryData& b);

CategoryRef category_from_json(const std::string& json_text);
std::string category_to_json(const CategoryData& cat);

}  // namespace skeinlab
