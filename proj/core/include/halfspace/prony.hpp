#pragma once

// Complex-image coefficients from a modified Prony fit of C(k) - 1 sampled on
// the deformed contour.
//
// With F(w) = C(k(xi_w)) - 1 at xi_w = T w / W, w = 1..W, the fit
// K(xi) = sum_n A_n exp(B_n xi) is recovered in three linear-algebra steps:
//   1. least squares for the characteristic polynomial coefficients from the
//      (W-Q) x Q shifted-sample system,
//   2. roots zeta_n = exp(B_n T / W) as companion-matrix eigenvalues,
//   3. least squares for A_n against the W x Q Vandermonde system.
// Rewriting exp(B_n xi) in terms of k_z gives
//   C(k) - 1 ~ sum_n a_n exp(-b_n k_z),
//   a_n = A_n exp(B_n T / (1 - iT)),  b_n = B_n T / (k0 (1 - iT)).

#include <vector>

#include "halfspace/spectral.hpp"

namespace halfspace {

struct ReflectionSamples {
  ContourSpec contour;
  std::vector<cplx> values;  ///< values[w-1] = F(w)

  /// xi at sample w (1-based).
  double xi(int w) const noexcept { return contour.T * w / contour.W; }
};

/// Samples C(k) - 1 on the contour. Throws std::invalid_argument when the
/// contour is invalid or passes too close to the reflection pole.
ReflectionSamples sample_reflection(const GroundModel& ground, const ContourSpec& contour);

class ExponentialFit {
 public:
  /// Builds the fit and computes its max on-grid residual against `samples`.
  ExponentialFit(std::vector<cplx> amplitudes, std::vector<cplx> exponents,
                 const ReflectionSamples& samples);

  const std::vector<cplx>& amplitudes() const noexcept { return amplitudes_; }
  const std::vector<cplx>& exponents() const noexcept { return exponents_; }
  const ContourSpec& contour() const noexcept { return contour_; }
  int order() const noexcept { return static_cast<int>(amplitudes_.size()); }

  /// max_w |K(xi_w) - F(w)|.
  double residual() const noexcept { return residual_; }

  /// Set when some root sat on the negative real axis, where the principal
  /// logarithm cannot tell exp(+i pi) from exp(-i pi).
  bool branch_ambiguous() const noexcept { return branch_ambiguous_; }
  void mark_branch_ambiguous() noexcept { branch_ambiguous_ = true; }

  /// K(xi) = sum A_n exp(B_n xi).
  cplx operator()(cplx xi) const;

 private:
  std::vector<cplx> amplitudes_;
  std::vector<cplx> exponents_;
  ContourSpec contour_;
  double residual_ = 0.0;
  bool branch_ambiguous_ = false;
};

/// Modified Prony fit with Q terms. Requires samples.contour.W >= 2Q.
/// All-zero samples give A = B = 0. Constant nonzero samples give a single
/// term with B = 0. Throws FitError on repeated roots (|zeta_i - zeta_j| <
/// 1e-8, or amplitudes summing to more than 1e6 times the largest sample) or
/// a vanishing root.
ExponentialFit fit_exponentials(const ReflectionSamples& samples, int Q);

struct ImageExpansion {
  std::vector<cplx> a;  ///< dimensionless image amplitudes
  std::vector<cplx> b;  ///< complex image offsets (m)
  double k0 = 0.0;
  GroundModel ground;

  int order() const noexcept { return static_cast<int>(a.size()); }

  /// All-zero expansion (C == 1), Q terms.
  static ImageExpansion zero(const GroundModel& ground, int Q);
};

ImageExpansion to_image_coefficients(const ExponentialFit& fit, const GroundModel& ground);

/// sample -> fit -> transform for the contour's Q.
ImageExpansion fit_image_expansion(const GroundModel& ground, const ContourSpec& contour);

/// sum a_n exp(-b_n k_z).
cplx evaluate_expansion(const ImageExpansion& expansion, cplx kz);

/// The fit expressed in k_z: K(xi(k_z)).
cplx evaluate_expansion(const ExponentialFit& fit, cplx kz, double k0);

}  // namespace halfspace
