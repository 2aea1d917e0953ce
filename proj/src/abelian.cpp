#include "hopf/abelian.hpp"

#include <stdexcept>
#include <utility>

#include "hopf/exact_linalg.hpp"

namespace hopf {

FgAbelianGroup::FgAbelianGroup(std::size_t rank, std::vector<Integer> invariant_factors)
    : rank_(rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) {
      throw std::invalid_argument("invariant factor " + factors_[i].get_str() + " is below 2");
    }
    if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t())) {
      throw std::invalid_argument("invariant factors do not form a divisibility chain");
    }
  }
}

std::string FgAbelianGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rank_; ++i) out += out.empty() ? "Z" : " + Z";
  for (const auto& f : factors_) out += (out.empty() ? "Z/" : " + Z/") + f.get_str();
  return out.empty() ? "0" : out;
}

FgAbelianGroup group_from_presentation(const Presentation& p) {
  for (const auto& row : p.relations) {
    if (row.size() != p.num_generators) {
      throw ShapeError("relation has " + std::to_string(row.size()) + " entries, expected " +
                       std::to_string(p.num_generators));
    }
  }
  if (p.relations.empty() || p.num_generators == 0) return FgAbelianGroup::free(p.num_generators);

  std::vector<Integer> entries;
  entries.reserve(p.relations.size() * p.num_generators);
  for (const auto& row : p.relations) entries.insert(entries.end(), row.begin(), row.end());
  const IntMatrix rel(p.relations.size(), p.num_generators, std::move(entries));

  const SnfResult snf = smith_normal_form(rel);
  std::size_t nonzero = 0;
  std::vector<Integer> factors;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) factors.push_back(d);
  }
  return FgAbelianGroup(p.num_generators - nonzero, std::move(factors));
}

bool is_isomorphic(const FgAbelianGroup& g1, const FgAbelianGroup& g2) { return g1 == g2; }

Integer torsion_order(const FgAbelianGroup& g) {
  Integer order = 1;
  for (const auto& f : g.invariant_factors()) order *= f;
  return order;
}

}  // namespace hopf
