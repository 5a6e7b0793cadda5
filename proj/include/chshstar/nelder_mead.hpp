/**
 * @file chshstar/nelder_mead.hpp
 * @brief Nelder-Mead downhill simplex minimization.
 *
 * Standard coefficients: reflection 1, expansion 2, contraction 1/2,
 * shrink 1/2. Stops when both the spread of function values and the
 * simplex diameter drop below their tolerances, or when the evaluation
 * budget runs out.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace chshstar::optim {

struct NelderMeadOptions {
  double initial_step = 0.5;
  double ftol = 1e-14;
  double xtol = 1e-9;
  std::size_t max_evaluations = 20000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  std::size_t evaluations;
  bool converged;
};

template <class F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> start, const NelderMeadOptions& opt = {}) {
  const std::size_t n = start.size();
  if (n == 0) throw std::invalid_argument("nelder_mead: empty start point");
  if (!(opt.initial_step > 0.0)) throw std::invalid_argument("nelder_mead: initial_step must be positive");

  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += opt.initial_step;

  std::size_t evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return static_cast<double>(f(x));
  };
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fv[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto along = [&](double t, std::vector<double>& out) {
    // out = centroid + t * (centroid - worst)
    const auto& worst = simplex[order[n]];
    for (std::size_t k = 0; k < n; ++k) out[k] = centroid[k] + t * (centroid[k] - worst[k]);
  };

  bool converged = false;
  while (evals < opt.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });

    const std::size_t best = order[0], worst = order[n], second = order[n - 1];
    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        diameter = std::max(diameter, std::abs(simplex[order[i]][k] - simplex[best][k]));
    if (std::abs(fv[worst] - fv[best]) <= opt.ftol && diameter <= opt.xtol) {
      converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[order[i]][k];
    for (double& c : centroid) c /= static_cast<double>(n);

    along(1.0, trial);
    const double fr = eval(trial);
    if (fr < fv[best]) {
      along(2.0, trial2);
      const double fe = eval(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        fv[worst] = fe;
      } else {
        simplex[worst] = trial;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      simplex[worst] = trial;
      fv[worst] = fr;
      continue;
    }
    // Contraction: outside if the reflection beat the worst point, inside otherwise.
    const bool outside = fr < fv[worst];
    along(outside ? 0.5 : -0.5, trial2);
    const double fc = eval(trial2);
    if (fc < (outside ? fr : fv[worst])) {
      simplex[worst] = trial2;
      fv[worst] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      auto& x = simplex[order[i]];
      for (std::size_t k = 0; k < n; ++k) x[k] = simplex[best][k] + 0.5 * (x[k] - simplex[best][k]);
      fv[order[i]] = eval(x);
    }
  }

  const auto best_it = std::min_element(fv.begin(), fv.end());
  const std::size_t best = static_cast<std::size_t>(best_it - fv.begin());
  return {simplex[best], fv[best], evals, converged};
}

}  // namespace chshstar::optim
