#include "hopf/enumeration.hpp"

#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hopf/seed.hpp"

namespace hopf {

namespace {

std::size_t range_width(const IntRange& r) { return static_cast<std::size_t>(r.hi - r.lo + 1); }

SweepRecord make_record(std::array<Integer, 6> params, std::optional<IntMatrix> matrix,
                        FgAbelianGroup group) {
  SweepRecord rec;
  rec.params = std::move(params);
  rec.matrix = std::move(matrix);
  // rank 2 <=> every 2-minor vanishes; encoded as mu = 0
  rec.mu = group.rank() >= 2 ? Integer(0) : torsion_order(group);
  rec.homology_hopf = rec.mu == 1;
  rec.group = std::move(group);
  return rec;
}

std::optional<SweepRecord> tuple_cell(const SweepSpec& spec, std::size_t index) {
  std::array<Integer, 6> params;
  for (std::size_t i = 6; i-- > 0;) {
    const std::size_t w = range_width(spec.ranges[i]);
    params[i] = static_cast<long>(spec.ranges[i].lo + static_cast<std::int64_t>(index % w));
    index /= w;
  }
  const auto& [a, b, p, c, d, q] = params;
  if (gcd(gcd(a, b), p) != 1 || gcd(gcd(c, d), q) != 1) return std::nullopt;
  auto group = pi1_two_log_transforms(a, b, p, c, d, q);
  return make_record(params, std::nullopt, std::move(group));
}

SweepRecord matrix_cell(const SweepSpec& spec, std::size_t index) {
  const UnimodularMatrix plus_completion =
      random_sl3(mix_seed(spec.seed, 2 * index), spec.word_length);
  const UnimodularMatrix minus_completion =
      random_sl3(mix_seed(spec.seed, 2 * index + 1), spec.word_length);
  const LogTransformParams plus(plus_completion(0, 2), plus_completion(1, 2),
                                plus_completion(2, 2), plus_completion);
  const LogTransformParams minus(minus_completion(0, 2), minus_completion(1, 2),
                                 minus_completion(2, 2), minus_completion);
  const GluingMatrix glued = compose_two_fiber(plus, minus, spec.zeta);
  std::array<Integer, 6> params{plus.a(), plus.b(), plus.p(), minus.a(), minus.b(), minus.p()};
  return make_record(std::move(params), glued.matrix(), pi1_single_gluing(glued));
}

void collect(const SweepSpec& spec, std::vector<std::optional<SweepRecord>>& cells,
             SweepResult& out) {
  for (auto& cell : cells) {
    if (!cell) {
      ++out.skipped;
      continue;
    }
    if (spec.homology_hopf_only && !cell->homology_hopf) {
      ++out.filtered;
      continue;
    }
    out.records.push_back(std::move(*cell));
  }
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (spec.mode != SweepMode::Tuple) return;
  static constexpr const char* kNames[] = {"a", "b", "p", "c", "d", "q"};
  for (std::size_t i = 0; i < 6; ++i) {
    if (spec.ranges[i].lo > spec.ranges[i].hi) {
      throw SweepSpecError(std::string("empty range for ") + kNames[i] + ": " +
                           std::to_string(spec.ranges[i].lo) + ":" +
                           std::to_string(spec.ranges[i].hi));
    }
  }
}

std::size_t cell_count(const SweepSpec& spec) {
  if (spec.mode == SweepMode::Matrix) return spec.sample_count;
  std::size_t n = 1;
  for (const auto& r : spec.ranges) n *= range_width(r);
  return n;
}

std::optional<SweepRecord> evaluate_cell(const SweepSpec& spec, std::size_t index) {
  if (spec.mode == SweepMode::Matrix) return matrix_cell(spec, index);
  return tuple_cell(spec, index);
}

SweepResult sweep_serial(const SweepSpec& spec) {
  validate(spec);
  const std::size_t n = cell_count(spec);
  std::vector<std::optional<SweepRecord>> cells(n);
  for (std::size_t i = 0; i < n; ++i) cells[i] = evaluate_cell(spec, i);
  SweepResult out;
  collect(spec, cells, out);
  return out;
}

SweepResult sweep_parallel(const SweepSpec& spec, int threads) {
  validate(spec);
  const auto n = static_cast<std::int64_t>(cell_count(spec));
  std::vector<std::optional<SweepRecord>> cells(static_cast<std::size_t>(n));
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(team)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    cells[static_cast<std::size_t>(i)] = evaluate_cell(spec, static_cast<std::size_t>(i));
  }
  (void)threads;
  SweepResult out;
  collect(spec, cells, out);
  return out;
}

SweepSummary summarize(const std::vector<SweepRecord>& records) {
  SweepSummary s;
  for (const auto& r : records) {
    ++s.total;
    if (r.homology_hopf) ++s.homology_hopf;
    ++s.by_mu[r.mu];
  }
  return s;
}

}  // namespace hopf
