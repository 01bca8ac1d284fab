#include "gcdt/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gcdt {

namespace {

void require_even_order(const Tensor<double>& t) {
  if (!t.cubical()) throw std::invalid_argument("positivity probes need a cubical tensor");
  if (t.order() % 2 != 0) {
    throw std::invalid_argument("positivity probes need an even order; sign flips kill "
                                "semidefiniteness at odd order");
  }
}

// mt19937_64 output is pinned by the standard; the transforms below avoid the
// library distributions, whose streams are not, so reports are reproducible
// bit-for-bit across toolchains.
double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& eng) {
  double u1 = uniform01(eng);
  while (u1 <= 0.0) u1 = uniform01(eng);
  const double u2 = uniform01(eng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793238462643 * u2);
}

double form_value(const Tensor<double>& t, const std::vector<double>& x) {
  return eval_form(t, x).value;
}

double max_abs_entry(const Tensor<double>& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) s = std::max(s, std::fabs(t[i]));
  return s;
}

}  // namespace

PositivityReport psd_sample_check(const Tensor<double>& t, std::uint64_t trials,
                                  std::uint64_t seed) {
  require_even_order(t);
  const std::size_t n = t.dim();
  const double threshold = -1e-12 * max_abs_entry(t);

  PositivityReport rep;
  rep.trials = trials;
  rep.seed = seed;

  double best_value = 0.0;
  bool have_value = false;
  std::optional<std::vector<double>> best_vec;

  // integer sweep: supports of up to 3 coordinates, entries in -2..2, first
  // nonzero positive (the form is even, so -x duplicates x), gcd 1 (scaling a
  // vector scales the form value without changing its sign)
  const std::size_t max_support = std::min<std::size_t>(3, n);
  std::vector<int> vals;
  std::vector<std::size_t> support;
  std::vector<double> x(n, 0.0);

  auto consider = [&](const std::vector<double>& cand) {
    const double v = form_value(t, cand);
    if (!have_value || v < best_value) {
      have_value = true;
      best_value = v;
      if (v < threshold) best_vec = cand;
    }
  };

  std::function<void(std::size_t)> fill_values = [&](std::size_t pos) {
    if (pos == support.size()) {
      std::uint64_t g = 0;
      for (int v : vals) g = std::gcd(g, static_cast<std::uint64_t>(std::abs(v)));
      if (g != 1) return;
      std::fill(x.begin(), x.end(), 0.0);
      for (std::size_t i = 0; i < support.size(); ++i) x[support[i]] = vals[i];
      consider(x);
      return;
    }
    // first support position carries the sign normalization
    const int choices_first[] = {1, 2};
    const int choices_rest[] = {-2, -1, 1, 2};
    if (pos == 0) {
      for (int c : choices_first) {
        vals[pos] = c;
        fill_values(pos + 1);
      }
    } else {
      for (int c : choices_rest) {
        vals[pos] = c;
        fill_values(pos + 1);
      }
    }
  };

  std::function<void(std::size_t, std::size_t)> pick_support = [&](std::size_t from,
                                                                   std::size_t remaining) {
    if (remaining == 0) {
      vals.assign(support.size(), 0);
      fill_values(0);
      return;
    }
    for (std::size_t i = from; i + remaining <= n; ++i) {
      support.push_back(i);
      pick_support(i + 1, remaining - 1);
      support.pop_back();
    }
  };

  for (std::size_t k = 1; k <= max_support; ++k) pick_support(0, k);

  if (best_vec) {
    rep.witness_found = true;
    rep.witness = std::move(best_vec);
    rep.witness_value = best_value;
    return rep;
  }

  // random phase: uniform directions on the 2-sphere; the first hit wins
  std::mt19937_64 eng(seed);
  std::vector<double> sample(n);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sample[i] = gaussian(eng);
      norm2 += sample[i] * sample[i];
    }
    if (norm2 == 0.0) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : sample) v *= inv;
    const double value = form_value(t, sample);
    if (!have_value || value < best_value) {
      have_value = true;
      best_value = value;
    }
    if (value < threshold) {
      rep.witness_found = true;
      rep.witness = sample;
      rep.witness_value = value;
      return rep;
    }
  }

  rep.witness_value = have_value ? best_value : 0.0;
  return rep;
}

namespace {

bool renormalize_m(std::vector<double>& x, std::size_t m) {
  double s = 0.0;
  for (double v : x) s += std::pow(std::fabs(v), static_cast<double>(m));
  if (!(s > 0.0) || !std::isfinite(s)) return false;
  const double inv = std::pow(s, -1.0 / static_cast<double>(m));
  for (double& v : x) v *= inv;
  return true;
}

}  // namespace

ExtremeFormResult extreme_form_on_sphere(const Tensor<double>& t, ExtremeMode mode,
                                         std::uint64_t restarts, std::uint64_t iterations,
                                         std::uint64_t seed) {
  require_even_order(t);
  if (restarts < 1 || iterations < 1) {
    throw std::invalid_argument("optimizer needs at least one restart and one iteration");
  }
  const std::size_t n = t.dim();
  const std::size_t m = t.order();
  const double dir = (mode == ExtremeMode::min) ? -1.0 : 1.0;

  ExtremeFormResult out;
  out.mode = mode;
  out.restarts = restarts;
  out.iterations = iterations;
  out.seed = seed;

  std::mt19937_64 eng(seed);
  bool have_best = false;

  for (std::uint64_t r = 0; r < restarts; ++r) {
    std::vector<double> x(n);
    do {
      for (double& v : x) v = gaussian(eng);
    } while (!renormalize_m(x, m));

    double value = eval_form(t, x).value;
    double step = 0.1;
    for (std::uint64_t it = 0; it < iterations && step > 1e-18; ++it) {
      const FormEval<double> ev = eval_form(t, x);
      std::vector<double> cand(n);
      for (std::size_t i = 0; i < n; ++i) {
        cand[i] = x[i] + dir * step * static_cast<double>(m) * ev.mode_contraction[i];
      }
      if (!renormalize_m(cand, m)) {
        step *= 0.5;
        continue;
      }
      const double cand_value = eval_form(t, cand).value;
      const bool improved = (mode == ExtremeMode::min) ? cand_value < value : cand_value > value;
      if (improved) {
        x = std::move(cand);
        value = cand_value;
      } else {
        step *= 0.5;
      }
    }

    const bool better =
        !have_best || ((mode == ExtremeMode::min) ? value < out.value : value > out.value);
    if (better) {
      have_best = true;
      out.value = value;
      out.argmin_vector = x;
    }
  }

  // recompute at the reported vector so the pair is self-consistent
  out.value = eval_form(t, out.argmin_vector).value;
  return out;
}

}  // namespace gcdt
