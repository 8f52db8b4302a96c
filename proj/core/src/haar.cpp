#include "groupoidlab/haar.hpp"

#include <utility>

namespace gl {

HaarSystem::HaarSystem(GroupoidPtr groupoid, std::vector<Rational> weights)
    : groupoid_(std::move(groupoid)), weights_(std::move(weights)) {
  if (weights_.size() != static_cast<size_t>(groupoid_->size())) {
    fail("GroupoidMismatch", "one weight per element expected");
  }
  auto report = check_haar(groupoid_, weights_);
  if (!report.ok) {
    fail("NotAHaarSystem", report.violations.front());
  }
}

UnitMeasure::UnitMeasure(GroupoidPtr groupoid, std::map<int, Rational> unit_weights)
    : groupoid_(std::move(groupoid)), weights_(std::move(unit_weights)) {
  bool positive = false;
  for (auto const& [u, w] : weights_) {
    if (!groupoid_->is_unit(u)) {
      fail("NotAUnit", "measure assigns mass to the non-unit '" +
                           groupoid_->label(u) + "'");
    }
    if (sgn(w) < 0) {
      fail("NegativeMeasure", "negative mass at '" + groupoid_->label(u) + "'");
    }
    positive = positive || sgn(w) > 0;
  }
  if (!positive) {
    fail("ZeroMeasure", "a measure on units needs at least one positive mass");
  }
}

Rational UnitMeasure::weight(int u) const {
  auto it = weights_.find(u);
  return it == weights_.end() ? Rational(0) : it->second;
}

std::vector<int> UnitMeasure::support() const {
  std::vector<int> out;
  for (int u : groupoid_->units()) {
    if (in_support(u)) {
      out.push_back(u);
    }
  }
  return out;
}

HaarSystem counting_haar(GroupoidPtr const& g) {
  return HaarSystem(g, std::vector<Rational>(static_cast<size_t>(g->size()),
                                             Rational(1)));
}

HaarSystem haar_from_unit_weights(GroupoidPtr const& g,
                                  std::map<int, Rational> const& c) {
  std::vector<Rational> w(static_cast<size_t>(g->size()));
  for (int x = 0; x < g->size(); ++x) {
    auto it = c.find(g->source(x));
    if (it == c.end() || sgn(it->second) <= 0) {
      fail("NonPositiveWeight",
           "unit '" + g->label(g->source(x)) + "' needs a positive weight");
    }
    w[static_cast<size_t>(x)] = it->second;
  }
  return HaarSystem(g, std::move(w));
}

CheckReport check_haar(GroupoidPtr const& g, std::vector<Rational> const& weights) {
  CheckReport report;
  auto flag = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };
  if (weights.size() != static_cast<size_t>(g->size())) {
    flag("one weight per element expected");
    return report;
  }
  for (int x = 0; x < g->size(); ++x) {
    if (sgn(weights[static_cast<size_t>(x)]) <= 0) {
      flag("weight of '" + g->label(x) + "' is not positive");
    }
  }
  // left invariance: the image of λ^{d(x)} under left translation by x is
  // λ^{r(x)}, i.e. weight(xy) = weight(y) for every y in Γ^{d(x)}
  for (int x = 0; x < g->size(); ++x) {
    for (int y : g->r_fiber(g->source(x))) {
      int xy = g->compose_opt(x, y);
      if (weights[static_cast<size_t>(xy)] != weights[static_cast<size_t>(y)]) {
        flag("left translation by '" + g->label(x) + "' moves the mass of '" +
             g->label(y) + "'");
      }
    }
  }
  return report;
}

CheckReport check_haar(HaarSystem const& h) {
  return check_haar(h.groupoid(), h.weights());
}

std::vector<Rational> induced_measure(HaarSystem const& h, UnitMeasure const& mu) {
  if (h.groupoid() != mu.groupoid()) {
    fail("GroupoidMismatch", "Haar system and measure live on different groupoids");
  }
  auto const& g = *h.groupoid();
  std::vector<Rational> out(static_cast<size_t>(g.size()));
  for (int x = 0; x < g.size(); ++x) {
    out[static_cast<size_t>(x)] = mu.weight(g.range(x)) * h.weight(x);
  }
  return out;
}

std::vector<Rational> inverse_measure(GroupoidPtr const& g,
                                      std::vector<Rational> const& m) {
  std::vector<Rational> out(m.size());
  for (int x = 0; x < g->size(); ++x) {
    out[static_cast<size_t>(x)] = m[static_cast<size_t>(g->inverse(x))];
  }
  return out;
}

bool check_quasi_invariance(HaarSystem const& h, UnitMeasure const& mu) {
  if (h.groupoid() != mu.groupoid()) {
    fail("GroupoidMismatch", "Haar system and measure live on different groupoids");
  }
  auto const& g = *h.groupoid();
  for (int x = 0; x < g.size(); ++x) {
    if (mu.in_support(g.range(x)) != mu.in_support(g.source(x))) {
      return false;
    }
  }
  return true;
}

ModularCocycle modular_function(HaarSystem const& h, UnitMeasure const& mu) {
  if (!check_quasi_invariance(h, mu)) {
    fail("NotQuasiInvariant", "the support of the measure is not saturated");
  }
  auto const& g = *h.groupoid();
  ModularCocycle delta;
  delta.groupoid = h.groupoid();
  auto forward = induced_measure(h, mu);
  auto backward = inverse_measure(h.groupoid(), forward);
  for (int x = 0; x < g.size(); ++x) {
    if (!mu.in_support(g.range(x))) {
      continue;  // Δ lives on the reduction to supp μ
    }
    delta.value[x] =
        forward[static_cast<size_t>(x)] / backward[static_cast<size_t>(x)];
  }
  // Δ(xy) = Δ(x)Δ(y) on composable pairs inside the reduction
  for (auto const& [x, dx] : delta.value) {
    for (auto const& [y, dy] : delta.value) {
      int xy = g.compose_opt(x, y);
      if (xy >= 0 && delta.value.at(xy) != dx * dy) {
        fail("NotACocycle", "modular function fails to be multiplicative on ('" +
                                g.label(x) + "','" + g.label(y) + "')");
      }
    }
  }
  return delta;
}

HaarDecomposition decompose_haar(HaarSystem const& h) {
  auto const& g = *h.groupoid();
  HaarDecomposition out;
  out.beta.assign(static_cast<size_t>(g.size()), Rational(1));
  for (int u : g.units()) {
    // every y with d(y) = u carries the same mass (left invariance)
    out.beta_tilde[u] = h.weight(g.d_fiber(u).front());
  }
  out.delta.groupoid = h.groupoid();
  for (int x = 0; x < g.size(); ++x) {
    if (g.range(x) == g.source(x)) {
      out.delta.value[x] = Rational(1);
    }
  }
  return out;
}

HaarSystem haar_from_decomposition(GroupoidPtr const& g,
                                   std::map<int, Rational> const& beta_tilde) {
  return haar_from_unit_weights(g, beta_tilde);
}

}  // namespace gl
