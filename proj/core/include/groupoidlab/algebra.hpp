#ifndef GROUPOIDLAB_ALGEBRA_HPP_
#define GROUPOIDLAB_ALGEBRA_HPP_

#include <complex>
#include <map>

#include "groupoidlab/haar.hpp"
#include "groupoidlab/morphism.hpp"

namespace gl {

using Complex = std::complex<double>;

// An element of the convolution *-algebra C_c(Γ, λ): a complex coefficient
// per groupoid element, stored sparsely. The algebra structure depends on
// the Haar system, so each element carries it.
class AlgebraElement {
 public:
  AlgebraElement(HaarSystem haar) : haar_(std::move(haar)) {}
  AlgebraElement(HaarSystem haar, std::map<int, Complex> coeff);

  static AlgebraElement delta(HaarSystem const& haar, int x,
                              Complex c = Complex(1.0, 0.0));
  // indicator of the unit space (the finite limit of the approximate identity)
  static AlgebraElement unit_indicator(HaarSystem const& haar);

  HaarSystem const& haar() const {
    return haar_;
  }
  GroupoidPtr const& groupoid() const {
    return haar_.groupoid();
  }
  Complex at(int x) const;
  std::map<int, Complex> const& coeff() const {
    return coeff_;
  }
  void set(int x, Complex c);

  bool same_algebra(AlgebraElement const& other) const {
    return haar_.same_system(other.haar_);
  }

  AlgebraElement& operator+=(AlgebraElement const& other);
  AlgebraElement& operator*=(Complex scale);

 private:
  HaarSystem haar_;
  std::map<int, Complex> coeff_;  // zero entries dropped
};

// (f∗g)(x) = Σ_{y ∈ Γ^{r(x)}} f(y) g(y^{-1}x) λ-weight(y);
// throws Error("AlgebraMismatch", ...) across different algebras.
AlgebraElement convolve(AlgebraElement const& f, AlgebraElement const& g);

// f*(x) = conj(f(x^{-1}))
AlgebraElement involution(AlgebraElement const& f);

// max over units of Σ_{x∈Γ^t}|f(x)|w(x) and Σ_{x∈Γ_t}|f(x)|w(x^{-1})
double i_norm(AlgebraElement const& f);

double max_abs_diff(AlgebraElement const& a, AlgebraElement const& b);

// ĥ(f)(ξ)(x) = Σ_γ f(γ) ξ(γ^{-1}·_h x) Δ_h(x,γ)^{-1/2} λ^{ρ(r(x))}-weight(γ);
// f lives on the source of h, ξ on its target.
// Throws Error("MorphismMismatch", ...).
AlgebraElement h_hat_apply(Morphism const& h, AlgebraElement const& f,
                           AlgebraElement const& xi);

// residual of ξ₂* ∗ (ĥ(f)ξ₁) = (ĥ(f*)ξ₂)* ∗ ξ₁
double check_hermitian_identity(Morphism const& h, AlgebraElement const& f,
                                AlgebraElement const& xi1,
                                AlgebraElement const& xi2);

// residual of k̂(ĥ(f)ξ₁)ξ₂ = (kh)^(f)(k̂(ξ₁)ξ₂);
// throws Error("ChainMismatch", ...).
double check_intertwining(Morphism const& h, Morphism const& k,
                          AlgebraElement const& f, AlgebraElement const& xi1,
                          AlgebraElement const& xi2);

// finite form of the density lemma: the span of {ĥ(δ_γ)δ_x} is all of C_c(G)
bool span_check(Morphism const& h);

}  // namespace gl
#endif  // GROUPOIDLAB_ALGEBRA_HPP_
