#ifndef CSIFACTOR_SPECTRAL_HPP_
#define CSIFACTOR_SPECTRAL_HPP_

#include <memory>
#include <vector>

#include "csifactor/common.hpp"

namespace csifactor {

/// Eigenvalues of a sample covariance, sorted descending, with the
/// (N, T) geometry that produced them.
struct EigenSpectrum {
  Vector values;  // descending, nonnegative after PSD clamp
  Index n = 0;
  Index t = 0;
  double c = 0.0;  // aspect ratio n/t

  /// Spectrum restricted to values[start..start+count), keeping t. Used to
  /// peel factor directions off a residual spectrum.
  EigenSpectrum slice(Index start, Index count) const;
};

/// Marchenko-Pastur parameters: noise variance sigma^2 and aspect ratio c.
struct MpParams {
  double sigma2 = 1.0;
  double c = 1.0;

  void validate() const;
};

/// Right-continuous empirical CDF: F(x) = cum_weights[i] for
/// support[i] <= x < support[i+1].
struct Ecdf {
  std::vector<double> support;      // sorted ascending, distinct
  std::vector<double> cum_weights;  // nondecreasing, back() == 1

  static Ecdf from_samples(std::vector<double> samples);
  static Ecdf from_sorted_pool(std::vector<double> pooled_sorted);
  double operator()(double x) const;
};

enum class DistanceMetric { kWasserstein1, kKolmogorovSmirnov };

/// C = (1/T) * U * U^T. Symmetric positive semidefinite by construction.
Matrix covariance(const Matrix& u);

/// Full spectrum of a symmetric matrix, descending. `t` is the sample count
/// behind the covariance (sets the aspect ratio of the result). Inputs must
/// be symmetric and PSD up to a small tolerance; eigenvalues in
/// [-1e-10 * scale, 0) are clamped to 0.
EigenSpectrum eigenvalues(const Matrix& c_matrix, Index t);

/// Support edges a = sigma^2 (1 - sqrt(c))^2, b = sigma^2 (1 + sqrt(c))^2.
std::pair<double, double> mp_edges(const MpParams& params);

/// Marchenko-Pastur density; 0 outside [a, b].
double mp_pdf(double x, const MpParams& params);

/// Marchenko-Pastur CDF by quadrature, accurate to well under 1e-6.
double mp_cdf(double x, const MpParams& params);

/// Tabulated MP law for repeated cdf/quantile evaluation. The integrand is
/// smoothed with x = mid + half*sin(t), which removes the square-root edge
/// singularities, then integrated with composite Simpson on a fine grid.
class MpDistribution {
 public:
  explicit MpDistribution(const MpParams& params);

  const MpParams& params() const { return params_; }
  double edge_a() const { return a_; }
  double edge_b() const { return b_; }
  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double q) const;
  /// Median of the standard (sigma^2 = 1) law at aspect ratio c.
  static double standard_median(double c);

 private:
  MpParams params_;
  double a_ = 0.0;
  double b_ = 0.0;
  std::vector<double> grid_x_;    // ascending over [a, b]
  std::vector<double> grid_cdf_;  // matching CDF values, 0 -> 1
};

/// N-point reference ECDF with mass 1/n at the MP quantiles
/// F^{-1}((k - 0.5) / n), k = 1..n.
Ecdf mp_reference_ecdf(const MpDistribution& dist, Index n);

/// Distance between two step CDFs over their merged support:
/// Wasserstein-1 integrates |F_a - F_b|, Kolmogorov-Smirnov takes the sup.
double spectral_distance(const Ecdf& a, const Ecdf& b, DistanceMetric metric);

/// Exact sup |F_emp - F_mp| against the continuous MP CDF.
double ks_distance_to_mp(const EigenSpectrum& spectrum, const MpDistribution& dist);

/// Theorem-style almost-sure limit of the top sample-covariance eigenvalue
/// produced by a population spike of strength lambda: supercritical spikes
/// (lambda > sigma^2 sqrt(c)) isolate at (lambda + s2)(lambda + s2 c)/lambda,
/// everything else sticks to the bulk edge b.
double spiked_limit(double lambda, const MpParams& params);

}  // namespace csifactor

#endif  // CSIFACTOR_SPECTRAL_HPP_
