#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gcdt/tensor.hpp"

namespace gcdt {

struct PositivityReport {
  bool witness_found = false;
  std::optional<std::vector<double>> witness;
  double witness_value = 0.0;  // form value at the witness; otherwise the smallest value seen
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Searches for a vector with negative form value on an even-order tensor.
/// Phase 1 sweeps small integer vectors (entries in -2..2, at most 3 nonzero
/// positions, sign-normalized and primitive) and keeps the most negative hit;
/// phase 2 draws `trials` uniform sphere samples. The violation threshold is
/// -1e-12 times the largest absolute entry.
PositivityReport psd_sample_check(const Tensor<double>& t, std::uint64_t trials,
                                  std::uint64_t seed);

enum class ExtremeMode { min, max };

struct ExtremeFormResult {
  ExtremeMode mode = ExtremeMode::min;
  double value = 0.0;
  std::vector<double> argmin_vector;  // unit vector in the order-norm
  std::uint64_t restarts = 0;
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t default_restarts = 64;
inline constexpr std::uint64_t default_iterations = 500;

/// Multi-restart projected gradient for the extreme value of the form on the
/// sphere sum |x_i|^m = 1. For even order the minimum there is the smallest
/// H-eigenvalue. Deterministic for a fixed seed; ties between restarts keep
/// the earlier one.
ExtremeFormResult extreme_form_on_sphere(const Tensor<double>& t, ExtremeMode mode,
                                         std::uint64_t restarts = default_restarts,
                                         std::uint64_t iterations = default_iterations,
                                         std::uint64_t seed = 0);

}  // namespace gcdt
