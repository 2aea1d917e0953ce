#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopf/int_matrix.hpp"

namespace hopf {

/// Abelian presentation: each relation is an exponent row over the generators.
struct Presentation {
  std::size_t num_generators = 0;
  std::vector<std::vector<Integer>> relations;
};

/// Z^rank plus Z/n1 + Z/n2 + ... with 2 <= n1 | n2 | ... (ascending).
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  /// Throws std::invalid_argument if the factors are not a valid chain.
  FgAbelianGroup(std::size_t rank, std::vector<Integer> invariant_factors);

  static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, {}); }

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] const std::vector<Integer>& invariant_factors() const { return factors_; }

  /// e.g. "Z + Z/3", "0" for the trivial group.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.rank_ == b.rank_ && a.factors_ == b.factors_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> factors_;
};

/// Cokernel of the relation matrix. Throws ShapeError on a malformed row.
FgAbelianGroup group_from_presentation(const Presentation& p);

bool is_isomorphic(const FgAbelianGroup& g1, const FgAbelianGroup& g2);

/// Order of the torsion subgroup (1 when torsion-free).
Integer torsion_order(const FgAbelianGroup& g);

}  // namespace hopf
