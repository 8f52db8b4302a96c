#ifndef GROUPOIDLAB_HAAR_HPP_
#define GROUPOIDLAB_HAAR_HPP_

#include <map>
#include <string>
#include <vector>

#include "groupoidlab/groupoid.hpp"
#include "groupoidlab/rational.hpp"

namespace gl {

// A Haar system as a strictly positive weight per element; λ^u is the
// restriction of the weight to the fiber Γ^u.
class HaarSystem {
 public:
  HaarSystem(GroupoidPtr groupoid, std::vector<Rational> weights);

  GroupoidPtr const& groupoid() const {
    return groupoid_;
  }
  Rational const& weight(int x) const {
    return weights_[static_cast<size_t>(x)];
  }
  // λ_u({x}) = weight(x^{-1}) on the fiber Γ_u
  Rational inverse_weight(int x) const {
    return weights_[static_cast<size_t>(groupoid_->inverse(x))];
  }
  std::vector<Rational> const& weights() const {
    return weights_;
  }

  bool same_system(HaarSystem const& other) const {
    return groupoid_ == other.groupoid_ && weights_ == other.weights_;
  }

 private:
  GroupoidPtr groupoid_;
  std::vector<Rational> weights_;
};

// Nonnegative weight per unit; at least one entry positive.
class UnitMeasure {
 public:
  UnitMeasure(GroupoidPtr groupoid, std::map<int, Rational> unit_weights);

  GroupoidPtr const& groupoid() const {
    return groupoid_;
  }
  Rational weight(int u) const;
  bool in_support(int u) const {
    return sgn(weight(u)) > 0;
  }
  std::vector<int> support() const;
  std::map<int, Rational> const& entries() const {
    return weights_;
  }

 private:
  GroupoidPtr groupoid_;
  std::map<int, Rational> weights_;
};

struct CheckReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// A positive multiplicative function on (part of) a groupoid, stored
// pointwise. Houses Δ (modular functions) and δ_G.
struct ModularCocycle {
  GroupoidPtr groupoid;
  std::map<int, Rational> value;  // element -> positive rational

  Rational const& at(int x) const {
    return value.at(x);
  }
  bool defined(int x) const {
    return value.count(x) != 0;
  }
};

// Decomposition of a Haar system over the principal groupoid:
// weight(x) = beta(x) * beta_tilde(d(x)), with δ_G the isotropy 1-cocycle.
struct HaarDecomposition {
  std::vector<Rational> beta;        // per element
  std::map<int, Rational> beta_tilde;  // per unit
  ModularCocycle delta;              // δ_G (identically 1 at finite scale)
};

// weight ≡ 1; the canonical Haar system on a finite groupoid.
HaarSystem counting_haar(GroupoidPtr const& g);

// λ^t = Σ_q c(q)·counting(Γ_q^t): weight(x) = c(d(x)). This is the general
// Haar system on a finite groupoid; throws Error("NonPositiveWeight", ...).
HaarSystem haar_from_unit_weights(GroupoidPtr const& g,
                                  std::map<int, Rational> const& c);

// Exhaustive exact check of full support and left invariance.
CheckReport check_haar(GroupoidPtr const& g, std::vector<Rational> const& weights);
CheckReport check_haar(HaarSystem const& h);

// λ^μ({x}) = μ(r(x))·weight(x); throws Error("GroupoidMismatch", ...).
std::vector<Rational> induced_measure(HaarSystem const& h, UnitMeasure const& mu);

// image under inversion: result({x}) = m({x^{-1}})
std::vector<Rational> inverse_measure(GroupoidPtr const& g,
                                      std::vector<Rational> const& m);

// true iff supp μ is saturated: μ(r(x)) > 0 ⟺ μ(d(x)) > 0 for every x.
// Equivalent, at finite scale, to λ^μ and (λ^μ)^{-1} having the same null
// sets (the brute-force comparison is asserted in tests).
bool check_quasi_invariance(HaarSystem const& h, UnitMeasure const& mu);

// Δ(x) = λ^μ({x}) / (λ^μ)^{-1}({x}) on the reduction to supp μ;
// multiplicativity is verified exhaustively. Throws
// Error("NotQuasiInvariant", ...).
ModularCocycle modular_function(HaarSystem const& h, UnitMeasure const& mu);

// beta ≡ 1 on every fiber (the F₀ = indicator-of-units normalization),
// beta_tilde(s) = weight of any element of Γ_s, δ_G ≡ 1.
HaarDecomposition decompose_haar(HaarSystem const& h);

// weight(x) = beta_tilde(d(x)); coincides with haar_from_unit_weights on
// finite groupoids. Throws Error("NonPositiveWeight", ...).
HaarSystem haar_from_decomposition(GroupoidPtr const& g,
                                   std::map<int, Rational> const& beta_tilde);

}  // namespace gl
#endif  // GROUPOIDLAB_HAAR_HPP_
