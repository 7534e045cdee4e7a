#include "egfc/granule.hpp"

#include <cmath>
#include <stdexcept>

namespace egfc {

namespace {

void check_finite(std::span<const double> x) {
  for (double v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite feature value");
  }
}

}  // namespace

double membership_degree(const GaussianMembership& a, double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite input");
  if (!(a.sigma > 0.0)) throw std::invalid_argument("degenerate dispersion");
  const double d = (x - a.mu) / a.sigma;
  return std::exp(-0.5 * d * d);
}

double mean_step(double mu_old, double x, std::uint64_t count) {
  const double k = static_cast<double>(count);
  return ((k - 1.0) * mu_old + x) / k;
}

double sigma_step(double sigma_old, double mu_old, double x, std::uint64_t count) {
  const double k = static_cast<double>(count);
  const double innovation = x - mu_old;
  return std::sqrt(((k - 1.0) / k) * sigma_old * sigma_old +
                   (1.0 / k) * innovation * innovation);
}

double granule_activation(const Granule& g, std::span<const double> x) {
  if (x.size() != g.dim()) throw std::invalid_argument("dimension mismatch");
  double degree = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    degree = std::min(degree, membership_degree(g.memberships[j], x[j]));
  }
  return degree;
}

Granule create_granule(std::span<const double> x, std::optional<int> label,
                       std::uint64_t id) {
  if (x.empty()) throw std::invalid_argument("empty feature vector");
  check_finite(x);
  Granule g;
  g.id = id;
  g.memberships.reserve(x.size());
  for (double v : x) g.memberships.push_back({v, kSigmaMax});
  g.label = label;
  g.update_count = 1;
  g.inactivity = 0;
  return g;
}

void absorb_sample(Granule& g, std::span<const double> x) {
  if (x.size() != g.dim()) throw std::invalid_argument("dimension mismatch");
  check_finite(x);
  const std::uint64_t count = g.update_count + 1;
  for (std::size_t j = 0; j < x.size(); ++j) {
    auto& m = g.memberships[j];
    const double mu_old = m.mu;
    m.mu = mean_step(mu_old, x[j], count);
    m.sigma = clamp_sigma(sigma_step(m.sigma, mu_old, x[j], count));
  }
  g.update_count = count;
  g.inactivity = 0;
}

}  // namespace egfc
