#include "levelga/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace levelga {

Problem::~Problem() = default;

void FitnessMapping::validate() const {
  if (scaling == Scaling::power && !(nu > 0.0))
    throw std::invalid_argument("FitnessMapping: power scaling needs nu > 0");
}

double FitnessMapping::value(const Evaluation& e) const {
  if (!e.feasible) return 0.0;
  const auto f = static_cast<double>(e.objective);
  if (scaling == Scaling::raw) return f;
  if (e.objective == 0) return 0.0;
  return std::exp(nu * std::log(f));
}

std::vector<double> FitnessMapping::selection_weights(const std::vector<Evaluation>& evals) const {
  std::vector<double> w(evals.size(), 0.0);
  if (scaling == Scaling::raw) {
    for (std::size_t i = 0; i < evals.size(); ++i)
      if (evals[i].feasible) w[i] = static_cast<double>(evals[i].objective);
    return w;
  }
  std::int64_t fmax = 0;
  for (const auto& e : evals)
    if (e.feasible && e.objective > fmax) fmax = e.objective;
  if (fmax == 0) return w;
  const double log_fmax = std::log(static_cast<double>(fmax));
  for (std::size_t i = 0; i < evals.size(); ++i) {
    const auto& e = evals[i];
    if (!e.feasible || e.objective == 0) continue;
    w[i] = std::exp(nu * (std::log(static_cast<double>(e.objective)) - log_fmax));
  }
  return w;
}

}  // namespace levelga
