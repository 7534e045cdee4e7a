// Gaussian membership functions and single-granule recursive statistics.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace egfc {

// Dispersion bounds kept after every update: floor 1/(4*pi), Stigler limit 1/(2*pi).
inline constexpr double kSigmaMax = 0.15915494309189535;  // 1/(2*pi)
inline constexpr double kSigmaMin = 0.07957747154594767;  // 1/(4*pi)

inline double clamp_sigma(double sigma) {
  if (sigma < kSigmaMin) return kSigmaMin;
  if (sigma > kSigmaMax) return kSigmaMax;
  return sigma;
}

struct GaussianMembership {
  double mu = 0.0;     // modal value
  double sigma = kSigmaMax;
};

/// Height-1 Gaussian: exp(-(x-mu)^2 / (2 sigma^2)). Throws on non-finite x or sigma <= 0.
double membership_degree(const GaussianMembership& a, double x);

// Recursion core, pre-clamp. `count` is the number of samples the granule
// represents after absorbing x (creation sample included).
double mean_step(double mu_old, double x, std::uint64_t count);
double sigma_step(double sigma_old, double mu_old, double x, std::uint64_t count);

struct Granule {
  std::uint64_t id = 0;                       // stable identity across a stream
  std::vector<GaussianMembership> memberships;
  std::optional<int> label;
  std::uint64_t update_count = 1;             // samples absorbed, creation included
  std::uint64_t inactivity = 0;               // steps since last selection

  std::size_t dim() const { return memberships.size(); }
};

/// min T-norm over per-dimension membership degrees.
double granule_activation(const Granule& g, std::span<const double> x);

/// New granule centered at x with maximal dispersion 1/(2*pi) in every dimension.
Granule create_granule(std::span<const double> x, std::optional<int> label,
                       std::uint64_t id = 0);

/// Recursive mean/dispersion update; dispersions clamped to [1/(4*pi), 1/(2*pi)].
void absorb_sample(Granule& g, std::span<const double> x);

}  // namespace egfc
