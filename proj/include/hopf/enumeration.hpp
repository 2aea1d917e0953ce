#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hopf/abelian.hpp"
#include "hopf/hopf_calculus.hpp"

namespace hopf {

struct SweepSpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // inclusive
};

enum class SweepMode { Tuple, Matrix };

/// Parameter sweep. Tuple mode walks the box a x b x p x c x d x q in
/// lexicographic order. Matrix mode draws `sample_count` pairs of random_sl3
/// completions and classifies their two-fibre gluing matrix.
struct SweepSpec {
  SweepMode mode = SweepMode::Tuple;
  std::array<IntRange, 6> ranges{};  // a, b, p, c, d, q
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  std::size_t word_length = 12;
  bool homology_hopf_only = false;
  ZetaVariant zeta = ZetaVariant::Raw;
};

struct SweepRecord {
  std::array<Integer, 6> params;      // a, b, p, c, d, q
  std::optional<IntMatrix> matrix;    // composed gluing matrix (matrix mode)
  Integer mu;                         // torsion order, 0 for the rank-2 case
  bool homology_hopf = false;
  FgAbelianGroup group;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::size_t skipped = 0;  // non-primitive tuples
  std::size_t filtered = 0; // dropped by homology_hopf_only
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t homology_hopf = 0;
  std::map<Integer, std::size_t> by_mu;
};

/// Throws SweepSpecError on an empty range in tuple mode.
void validate(const SweepSpec& spec);

/// Number of cells (tuples or samples) the sweep visits.
std::size_t cell_count(const SweepSpec& spec);

/// Evaluates cell `index`; nullopt for a non-primitive tuple.
std::optional<SweepRecord> evaluate_cell(const SweepSpec& spec, std::size_t index);

/// Serial reference implementation.
SweepResult sweep_serial(const SweepSpec& spec);

/// OpenMP version; cells are merged by index so the result equals sweep_serial.
/// `threads` = 0 uses the OpenMP default.
SweepResult sweep_parallel(const SweepSpec& spec, int threads = 0);

inline SweepResult sweep(const SweepSpec& spec) { return sweep_parallel(spec); }

SweepSummary summarize(const std::vector<SweepRecord>& records);

}  // namespace hopf
