#ifndef GROUPOIDLAB_SPECTRA_HPP_
#define GROUPOIDLAB_SPECTRA_HPP_

#include <complex>
#include <string>
#include <vector>

#include "groupoidlab/algebra.hpp"
#include "groupoidlab/morphism.hpp"

namespace gl {

// dense complex matrix, row-major
struct CMatrix {
  int n = 0;
  std::vector<Complex> a;

  CMatrix() = default;
  explicit CMatrix(int size) : n(size), a(static_cast<size_t>(size) * size) {}
  Complex& at(int i, int j) {
    return a[static_cast<size_t>(i) * n + j];
  }
  Complex at(int i, int j) const {
    return a[static_cast<size_t>(i) * n + j];
  }
};

CMatrix matmul(CMatrix const& x, CMatrix const& y);
CMatrix adjoint(CMatrix const& x);
double max_abs_diff(CMatrix const& x, CMatrix const& y);

// ℓ²(G_t, ν_t): basis is the fiber G_t, weight of basis vector x is
// ν_t({x}) = ν-weight(x^{-1}).
struct WeightedHilbertSpace {
  std::vector<int> basis;
  std::vector<Rational> weights;

  static WeightedHilbertSpace source_fiber(HaarSystem const& nu, int t);
  int dim() const {
    return static_cast<int>(basis.size());
  }
  int position(int element) const;  // -1 if absent
};

// matrix of π_{h,t}(f) on ℓ²(G_t, ν_t):
//   π(f)ξ(x) = Σ_γ f(γ) ξ(γ^{-1}·_h x) Δ_h(x,γ)^{-1/2} λ^{ρ(r(x))}-weight(γ).
// Throws Error("UnitNotFound", ...) when t is not a target unit.
CMatrix pi_matrix(Morphism const& h, int t, AlgebraElement const& f);

// eigenvalues of a Hermitian matrix, ascending, by cyclic Jacobi iteration
// run to off-diagonal Frobenius norm ≤ 1e-12
std::vector<double> hermitian_eigenvalues(CMatrix const& m);

// largest singular value of M w.r.t. the weighted inner product: rescale the
// basis by sqrt(weights), form the Gram matrix, take sqrt of its top
// eigenvalue.
double operator_norm(CMatrix const& m, WeightedHilbertSpace const& space);

// ‖f‖_h = max over target units of ‖π_{h,t}(f)‖
double norm_h(Morphism const& h, AlgebraElement const& f);
// ‖f‖_red = ‖f‖_l (the identity morphism); the exact C*-norm at finite scale
double reduced_norm(AlgebraElement const& f);

// the trivial representation II_μ on ℓ²(supp μ, μ), with the Δ_μ^{-1/2}
// density: (II_μ(f)k)(u) = Σ_{γ∈Γ^u, d(γ)∈supp μ} f(γ) Δ_μ(γ)^{-1/2} k(d(γ)) λw(γ).
// Throws Error("NotQuasiInvariant", ...).
struct TrivialRepresentation {
  WeightedHilbertSpace space;  // basis = supp μ (unit indices), weights = μ
  CMatrix matrix;
};
TrivialRepresentation trivial_representation_matrix(HaarSystem const& haar,
                                                    UnitMeasure const& mu,
                                                    AlgebraElement const& f);

// ‖II_μ(f)‖, the operator norm of the trivial representation of f itself
double trivial_rep_norm(HaarSystem const& haar, UnitMeasure const& mu,
                        AlgebraElement const& f);

// ‖f‖_{II,μ} = ‖II_μ(|f|)‖ (the kernel has nonnegative entries, so the sup
// over unit vectors equals the operator norm)
double ii_norm(HaarSystem const& haar, UnitMeasure const& mu,
               AlgebraElement const& f);

struct RepCheckResult {
  double multiplicativity_residual;  // ‖π(f∗g) − π(f)π(g)‖_maxabs
  double adjoint_residual;           // ‖π(f*) − π(f)^†_weighted‖_maxabs
  double i_norm_slack;               // ‖π(f)‖ − ‖f‖_I (should be ≤ tolerance)
};
RepCheckResult check_rep_homomorphism(Morphism const& h, int t,
                                      AlgebraElement const& f,
                                      AlgebraElement const& g);

// residual of π_{k,s}(ĥ(f)ξ₁)ξ₂ = π_{kh,s}(f)π_{k,s}(ξ₁)ξ₂;
// throws Error("ChainMismatch", ...).
double check_functoriality(Morphism const& h, Morphism const& k,
                           AlgebraElement const& f, AlgebraElement const& xi1,
                           std::vector<Complex> const& xi2, int s);

struct NormReport {
  std::string element;
  double i_norm = 0.0;
  double reduced = 0.0;
  std::vector<std::pair<std::string, double>> per_morphism;  // ‖f‖_h
  std::vector<std::pair<std::string, double>> per_measure;   // ‖II_μ(f)‖
  std::vector<std::string> violations;
  double norm_tolerance = 0.0;
  bool ok = true;
};

// ‖f‖_h ≤ ‖f‖_red + 1e-7 for each morphism (amenable collapse),
// ‖II_μ(f)‖ ≤ ‖f‖_red + 1e-7 for each quasi-invariant μ, and
// |‖f‖_l − ‖f‖_red| ≤ 1e-9.
NormReport check_norm_sandwich(HaarSystem const& haar, AlgebraElement const& f,
                               std::vector<Morphism> const& morphisms,
                               std::vector<UnitMeasure> const& measures);

// pinned tolerances
inline constexpr double kResidualTol = 1e-9;   // algebraic residuals
inline constexpr double kNormTol = 1e-7;       // stacked-eigensolve norm bounds
inline constexpr double kJacobiOffdiagTol = 1e-12;

}  // namespace gl
#endif  // GROUPOIDLAB_SPECTRA_HPP_
