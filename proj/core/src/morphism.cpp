#include "groupoidlab/morphism.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace gl {

GroupoidAction::GroupoidAction(GroupoidPtr actor, std::vector<std::string> space,
                               std::vector<int> momentum,
                               std::vector<std::vector<int>> table)
    : actor_(std::move(actor)),
      space_(std::move(space)),
      momentum_(std::move(momentum)),
      table_(std::move(table)) {
  if (momentum_.size() != space_.size()) {
    fail("DomainMismatch", "one momentum value per point expected");
  }
  for (int u : momentum_) {
    if (u < 0 || u >= actor_->size() || !actor_->is_unit(u)) {
      fail("NotAUnit", "momentum map must take unit values");
    }
  }
  if (table_.size() != static_cast<size_t>(actor_->size())) {
    fail("DomainMismatch", "one action row per actor element expected");
  }
  for (int gamma = 0; gamma < actor_->size(); ++gamma) {
    auto const& row = table_[static_cast<size_t>(gamma)];
    if (row.size() != space_.size()) {
      fail("DomainMismatch", "one action column per point expected");
    }
    for (int x = 0; x < points(); ++x) {
      int y = row[static_cast<size_t>(x)];
      if (in_domain(gamma, x)) {
        if (y < 0 || y >= points()) {
          fail("DomainMismatch", "action of '" + actor_->label(gamma) +
                                     "' on '" + space_[static_cast<size_t>(x)] +
                                     "' is undefined or out of range");
        }
      } else if (y != -1) {
        fail("DomainMismatch", "action defined off the momentum-matched domain"
                               " at ('" + actor_->label(gamma) + "','" +
                               space_[static_cast<size_t>(x)] + "')");
      }
    }
  }
}

int GroupoidAction::act(int gamma, int x) const {
  if (!in_domain(gamma, x)) {
    fail("DomainMismatch", "d('" + actor_->label(gamma) + "') differs from the"
                           " momentum of '" + space_[static_cast<size_t>(x)] + "'");
  }
  return table_[static_cast<size_t>(gamma)][static_cast<size_t>(x)];
}

CheckReport check_action(GroupoidAction const& a) {
  CheckReport report;
  auto flag = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };
  auto const& g = *a.actor();
  // momentum equivariance: ρ(γ·x) = r(γ)
  for (int gamma = 0; gamma < g.size(); ++gamma) {
    for (int x = 0; x < a.points(); ++x) {
      if (a.in_domain(gamma, x) &&
          a.momentum(a.act(gamma, x)) != g.range(gamma)) {
        flag("momentum of '" + g.label(gamma) + "'.'" +
             a.space()[static_cast<size_t>(x)] + "' is not r('" +
             g.label(gamma) + "')");
      }
    }
  }
  // units act as the identity: ρ(x)·x = x
  for (int x = 0; x < a.points(); ++x) {
    if (a.act(a.momentum(x), x) != x) {
      flag("unit does not fix the point '" +
           a.space()[static_cast<size_t>(x)] + "'");
    }
  }
  // (γ₂γ₁)·x = γ₂·(γ₁·x)
  for (int g1 = 0; g1 < g.size(); ++g1) {
    for (int g2 = 0; g2 < g.size(); ++g2) {
      int g21 = g.compose_opt(g2, g1);
      if (g21 < 0) {
        continue;
      }
      for (int x = 0; x < a.points(); ++x) {
        if (a.in_domain(g1, x) &&
            a.act(g21, x) != a.act(g2, a.act(g1, x))) {
          flag("action is not associative on ('" + g.label(g2) + "','" +
               g.label(g1) + "','" + a.space()[static_cast<size_t>(x)] + "')");
        }
      }
    }
  }
  return report;
}

CheckReport check_algebraic_morphism(GroupoidPtr const& src, GroupoidPtr const& tgt,
                                     std::vector<int> const& rho,
                                     std::vector<std::vector<int>> const& act) {
  CheckReport report;
  auto flag = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };
  if (rho.size() != static_cast<size_t>(tgt->size())) {
    flag("rho must be indexed by the target elements");
    return report;
  }
  for (int t : tgt->units()) {
    int u = rho[static_cast<size_t>(t)];
    if (u < 0 || u >= src->size() || !src->is_unit(u)) {
      flag("rho('" + tgt->label(t) + "') is not a source unit");
      return report;
    }
  }
  if (act.size() != static_cast<size_t>(src->size())) {
    flag("one action row per source element expected");
    return report;
  }
  auto in_domain = [&](int gamma, int x) {
    return src->source(gamma) == rho[static_cast<size_t>(tgt->range(x))];
  };
  for (int gamma = 0; gamma < src->size(); ++gamma) {
    auto const& row = act[static_cast<size_t>(gamma)];
    if (row.size() != static_cast<size_t>(tgt->size())) {
      flag("one action column per target element expected");
      return report;
    }
    for (int x = 0; x < tgt->size(); ++x) {
      int y = row[static_cast<size_t>(x)];
      if (in_domain(gamma, x)) {
        if (y < 0 || y >= tgt->size()) {
          flag("action undefined on the momentum-matched pair ('" +
               src->label(gamma) + "','" + tgt->label(x) + "')");
          return report;
        }
      } else if (y != -1) {
        flag("action defined off the momentum-matched domain at ('" +
             src->label(gamma) + "','" + tgt->label(x) + "')");
        return report;
      }
    }
  }
  auto dot = [&](int gamma, int x) {
    return act[static_cast<size_t>(gamma)][static_cast<size_t>(x)];
  };
  auto pretty = [&](int gamma, int x) {
    return "('" + src->label(gamma) + "','" + tgt->label(x) + "')";
  };

  for (int gamma = 0; gamma < src->size(); ++gamma) {
    for (int x = 0; x < tgt->size(); ++x) {
      if (!in_domain(gamma, x)) {
        continue;
      }
      int gx = dot(gamma, x);
      // (1) ρ(r(γ·x)) = r(γ)
      if (rho[static_cast<size_t>(tgt->range(gx))] != src->range(gamma)) {
        flag("(1) fails at " + pretty(gamma, x));
      }
      // (4) d(γ·x) = d(x)
      if (tgt->source(gx) != tgt->source(x)) {
        flag("(4) fails at " + pretty(gamma, x));
      }
      // γ·x = (γ·r(x))x
      int grx = dot(gamma, tgt->range(x));
      if (grx < 0 || tgt->compose_opt(grx, x) != gx) {
        flag("reduction to unit translates fails at " + pretty(gamma, x));
      }
    }
  }
  // (2) ρ(r(x))·x = x
  for (int x = 0; x < tgt->size(); ++x) {
    if (dot(rho[static_cast<size_t>(tgt->range(x))], x) != x) {
      flag("(2) fails at '" + tgt->label(x) + "'");
    }
  }
  // (3) (γ₁γ₂)·x = γ₁·(γ₂·x)
  for (int g1 = 0; g1 < src->size(); ++g1) {
    for (int g2 = 0; g2 < src->size(); ++g2) {
      int g12 = src->compose_opt(g1, g2);
      if (g12 < 0) {
        continue;
      }
      for (int x = 0; x < tgt->size(); ++x) {
        if (in_domain(g2, x) && dot(g12, x) != dot(g1, dot(g2, x))) {
          flag("(3) fails at ('" + src->label(g1) + "','" + src->label(g2) +
               "','" + tgt->label(x) + "')");
        }
      }
    }
  }
  // (5) (γ·x₁)x₂ = γ·(x₁x₂)
  for (int gamma = 0; gamma < src->size(); ++gamma) {
    for (int x1 = 0; x1 < tgt->size(); ++x1) {
      if (!in_domain(gamma, x1)) {
        continue;
      }
      for (int x2 : tgt->r_fiber(tgt->source(x1))) {
        int x12 = tgt->compose_opt(x1, x2);
        if (tgt->compose_opt(dot(gamma, x1), x2) != dot(gamma, x12)) {
          flag("(5) fails at ('" + src->label(gamma) + "','" + tgt->label(x1) +
               "','" + tgt->label(x2) + "')");
        }
      }
    }
  }
  // (γ·t)^{-1} = γ^{-1}·r(γ·t) on unit translates
  for (int gamma = 0; gamma < src->size(); ++gamma) {
    for (int t : tgt->units()) {
      if (!in_domain(gamma, t)) {
        continue;
      }
      int gt = dot(gamma, t);
      if (tgt->inverse(gt) != dot(src->inverse(gamma), tgt->range(gt))) {
        flag("inverse of a unit translate fails at " + pretty(gamma, t));
      }
    }
  }
  // the image of ρ is saturated
  {
    std::set<int> image;
    for (int t : tgt->units()) {
      image.insert(rho[static_cast<size_t>(t)]);
    }
    for (int gamma = 0; gamma < src->size(); ++gamma) {
      if (image.count(src->source(gamma)) != image.count(src->range(gamma))) {
        flag("the image of rho is not saturated ('" + src->label(gamma) +
             "' leaves it)");
      }
    }
  }
  return report;
}

DeltaCocycle compute_delta_h(HaarSystem const& source, HaarSystem const& target,
                             std::vector<int> const& rho,
                             std::vector<std::vector<int>> const& act) {
  auto const& src = *source.groupoid();
  auto const& tgt = *target.groupoid();
  auto dot = [&](int gamma, int x) {
    return act[static_cast<size_t>(gamma)][static_cast<size_t>(x)];
  };
  // the pairs of the transformation groupoid: r(γ) = ρ(r(x))
  auto paired = [&](int x, int gamma) {
    return src.range(gamma) == rho[static_cast<size_t>(tgt.range(x))];
  };
  // the candidate forced by evaluating the compatibility identity on point
  // masses at y:
  //   Δ(y, η) ν_d({η^{-1}·y}) λ({η^{-1}}) = ν_d({y}) λ({η})
  // where ν_d({x}) = ν({x^{-1}}) is the mass on the d-fiber.
  auto ratio = [&](int y, int eta) -> Rational {
    int inv_y = dot(src.inverse(eta), y);
    return Rational(target.inverse_weight(y) * source.weight(eta)) /
           Rational(target.inverse_weight(inv_y) * source.weight(src.inverse(eta)));
  };
  std::map<std::pair<int, int>, Rational> values;
  for (int t : tgt.units()) {
    for (int gamma = 0; gamma < src.size(); ++gamma) {
      if (paired(t, gamma)) {
        values[{t, gamma}] = ratio(t, gamma);
      }
    }
  }
  DeltaCocycle delta(std::move(values));
  // the value may depend on y only through r(y); with it, the identity above
  // holds at every point mass
  for (int y = 0; y < tgt.size(); ++y) {
    for (int gamma = 0; gamma < src.size(); ++gamma) {
      if (paired(y, gamma) &&
          delta.at(tgt.range(y), gamma) != ratio(y, gamma)) {
        fail("IncompatibleHaar",
             "no cocycle matches the Haar systems at ('" + tgt.label(y) +
                 "','" + src.label(gamma) + "')");
      }
    }
  }
  // cocycle laws: 1 on units, multiplicative along the transformation groupoid
  for (auto const& [key, value] : delta.values()) {
    auto [t, gamma] = key;
    if (src.is_unit(gamma) && value != 1) {
      fail("IncompatibleHaar", "cocycle differs from 1 at the unit pair ('" +
                                   tgt.label(t) + "','" + src.label(gamma) + "')");
    }
    for (int g2 = 0; g2 < src.size(); ++g2) {
      int g12 = src.compose_opt(gamma, g2);
      if (g12 < 0 || !delta.defined(t, g12)) {
        continue;
      }
      int t2 = tgt.range(dot(src.inverse(gamma), t));
      if (delta.at(t, g12) != value * delta.at(t2, g2)) {
        fail("IncompatibleHaar", "cocycle is not multiplicative at ('" +
                                     tgt.label(t) + "','" + src.label(gamma) +
                                     "','" + src.label(g2) + "')");
      }
    }
  }
  return delta;
}

Morphism Morphism::create(HaarSystem source, HaarSystem target,
                          std::vector<int> rho, std::vector<std::vector<int>> act) {
  auto report = check_algebraic_morphism(source.groupoid(), target.groupoid(),
                                         rho, act);
  if (!report.ok) {
    fail("NotAMorphism", report.violations.front());
  }
  Morphism m(std::move(source), std::move(target), std::move(rho), std::move(act));
  m.delta_ = compute_delta_h(m.source_, m.target_, m.rho_, m.act_);
  return m;
}

int Morphism::act(int gamma, int x) const {
  if (!in_domain(gamma, x)) {
    fail("DomainMismatch", "d('" + source()->label(gamma) +
                               "') differs from rho(r('" + target()->label(x) +
                               "'))");
  }
  return act_[static_cast<size_t>(gamma)][static_cast<size_t>(x)];
}

bool Morphism::operator==(Morphism const& other) const {
  return source() == other.source() && target() == other.target() &&
         rho_ == other.rho_ && act_ == other.act_ && delta_ == other.delta_;
}

GroupoidAction unit_action(Morphism const& m) {
  auto const& tgt = *m.target();
  auto const& units = tgt.units();
  std::map<int, int> position;
  std::vector<std::string> space;
  std::vector<int> momentum;
  for (size_t i = 0; i < units.size(); ++i) {
    position[units[i]] = static_cast<int>(i);
    space.push_back(tgt.label(units[i]));
    momentum.push_back(m.rho(units[i]));
  }
  std::vector<std::vector<int>> table(
      static_cast<size_t>(m.source()->size()),
      std::vector<int>(units.size(), -1));
  for (int gamma = 0; gamma < m.source()->size(); ++gamma) {
    for (size_t i = 0; i < units.size(); ++i) {
      if (m.in_domain(gamma, units[i])) {
        table[static_cast<size_t>(gamma)][i] =
            position.at(tgt.range(m.act(gamma, units[i])));
      }
    }
  }
  return GroupoidAction(m.source(), std::move(space), std::move(momentum),
                        std::move(table));
}

namespace {

// Transformation groupoid on pairs (x, γ) with r(γ) = ρ(r(x)), where the
// anchor x runs over a chosen subset of the target (everything, or the
// units). Inversion is (x, γ) -> (γ^{-1}·x, γ^{-1}) and multiplication
// (x, γ₁)(γ₁^{-1}·x, γ₂) = (x, γ₁γ₂); the anchor of γ^{-1}·x is taken by
// `descend` so the unit variant can stay inside G⁽⁰⁾.
SemidirectGroupoid build_semidirect(Morphism const& m, std::vector<int> const& anchors,
                                    std::function<int(int)> const& descend) {
  auto const& src = *m.source();
  auto const& tgt = *m.target();
  FiniteGroupoid::Raw raw;
  std::vector<std::pair<int, int>> provenance;
  std::map<std::pair<int, int>, std::string> name;
  for (int x : anchors) {
    for (int gamma = 0; gamma < src.size(); ++gamma) {
      if (src.range(gamma) != m.rho(tgt.range(x))) {
        continue;
      }
      name[{x, gamma}] = pair_label(tgt.label(x), src.label(gamma));
    }
  }
  auto lowered = [&](int gamma, int x) {
    // γ^{-1}·x back among the anchors
    return descend(m.act(src.inverse(gamma), x));
  };
  for (auto const& [key, label] : name) {
    auto [x, gamma] = key;
    raw.elements.push_back(label);
    provenance.push_back(key);
    raw.range[label] = name.at({x, m.rho(tgt.range(x))});
    int xi = lowered(gamma, x);
    raw.source[label] = name.at({xi, src.source(gamma)});
    raw.inverse[label] = name.at({xi, src.inverse(gamma)});
    if (src.is_unit(gamma)) {
      raw.units.push_back(label);
    }
    for (int g2 = 0; g2 < src.size(); ++g2) {
      int g12 = src.compose_opt(gamma, g2);
      if (g12 >= 0) {
        raw.mul.push_back({label, name.at({xi, g2}), name.at({x, g12})});
      }
    }
  }
  auto groupoid = FiniteGroupoid::validate(raw);
  std::vector<std::pair<int, int>> ordered(provenance.size());
  std::vector<Rational> weights(provenance.size());
  for (size_t i = 0; i < provenance.size(); ++i) {
    int e = groupoid->index(name.at(provenance[i]));
    ordered[static_cast<size_t>(e)] = provenance[i];
    // ε_x × λ^{ρ(r(x))}: the anchor is pinned, γ carries its λ mass
    weights[static_cast<size_t>(e)] =
        m.source_haar().weight(provenance[i].second);
  }
  HaarSystem haar(groupoid, std::move(weights));
  return SemidirectGroupoid{std::move(groupoid), std::move(haar),
                            std::move(ordered)};
}

}  // namespace

SemidirectGroupoid semidirect_product(Morphism const& m) {
  std::vector<int> anchors(static_cast<size_t>(m.target()->size()));
  for (int x = 0; x < m.target()->size(); ++x) {
    anchors[static_cast<size_t>(x)] = x;
  }
  return build_semidirect(m, anchors, [](int x) { return x; });
}

SemidirectGroupoid unit_semidirect_product(Morphism const& m) {
  auto tgt = m.target();
  return build_semidirect(m, tgt->units(),
                          [tgt](int x) { return tgt->range(x); });
}

Morphism identity_morphism(HaarSystem const& haar) {
  auto const& g = *haar.groupoid();
  std::vector<int> rho(static_cast<size_t>(g.size()), -1);
  for (int u : g.units()) {
    rho[static_cast<size_t>(u)] = u;
  }
  std::vector<std::vector<int>> act(
      static_cast<size_t>(g.size()),
      std::vector<int>(static_cast<size_t>(g.size()), -1));
  for (int gamma = 0; gamma < g.size(); ++gamma) {
    for (int x = 0; x < g.size(); ++x) {
      act[static_cast<size_t>(gamma)][static_cast<size_t>(x)] =
          g.compose_opt(gamma, x);
    }
  }
  return Morphism::create(haar, haar, std::move(rho), std::move(act));
}

Morphism compose_morphisms(Morphism const& h, Morphism const& k) {
  if (h.target() != k.source() ||
      !h.target_haar().same_system(k.source_haar())) {
    fail("ChainMismatch",
         "the target system of the first morphism must be the source system"
         " of the second");
  }
  auto const& tgt = *k.target();
  auto const& mid = *k.source();
  auto const& src = *h.source();
  std::vector<int> rho(static_cast<size_t>(tgt.size()), -1);
  for (int t : tgt.units()) {
    rho[static_cast<size_t>(t)] = h.rho(k.rho(t));
  }
  std::vector<std::vector<int>> act(
      static_cast<size_t>(src.size()),
      std::vector<int>(static_cast<size_t>(tgt.size()), -1));
  for (int gamma = 0; gamma < src.size(); ++gamma) {
    for (int x2 = 0; x2 < tgt.size(); ++x2) {
      int t1 = k.rho(tgt.range(x2));  // a unit of the middle groupoid
      if (src.source(gamma) != h.rho(t1)) {
        continue;
      }
      act[static_cast<size_t>(gamma)][static_cast<size_t>(x2)] =
          k.act(h.act(gamma, t1), x2);
    }
  }
  Morphism kh = Morphism::create(h.source_haar(), k.target_haar(),
                                 std::move(rho), std::move(act));
  // the cocycle of the composite factors through the chain:
  //   Δ_{kh}(x₂, γ) = Δ_k(x₂, (γ^{-1}·_h t₁)^{-1}) Δ_h(t₁, γ),
  // t₁ = ρ_k(r(x₂)); check the factorization against the recomputed cocycle
  for (auto const& [key, value] : kh.delta().values()) {
    auto [t2, gamma] = key;
    int t1 = k.rho(t2);
    int eta = mid.inverse(h.act(src.inverse(gamma), t1));
    if (value != k.delta().at(t2, eta) * h.delta().at(t1, gamma)) {
      fail("IncompatibleHaar",
           "composite cocycle does not factor through the chain at ('" +
               tgt.label(t2) + "','" + src.label(gamma) + "')");
    }
  }
  return kh;
}

Morphism from_group_homomorphism(HaarSystem const& source,
                                 HaarSystem const& target,
                                 std::vector<int> const& phi) {
  auto const& src = *source.groupoid();
  auto const& tgt = *target.groupoid();
  if (phi.size() != static_cast<size_t>(src.size())) {
    fail("NotAHomomorphism", "one image per source element expected");
  }
  auto im = [&](int gamma) {
    int y = phi[static_cast<size_t>(gamma)];
    if (y < 0 || y >= tgt.size()) {
      fail("NotAHomomorphism", "image of '" + src.label(gamma) +
                                   "' is out of range");
    }
    return y;
  };
  std::map<int, int> unit_preimage;
  for (int u : src.units()) {
    int t = im(u);
    if (!tgt.is_unit(t) || !unit_preimage.emplace(t, u).second) {
      fail("UnitsNotBijective",
           "the unit map is not injective into the target units");
    }
  }
  if (unit_preimage.size() != tgt.units().size()) {
    fail("UnitsNotBijective", "the unit map is not onto the target units");
  }
  for (int g1 = 0; g1 < src.size(); ++g1) {
    if (tgt.range(im(g1)) != im(src.range(g1)) ||
        tgt.source(im(g1)) != im(src.source(g1))) {
      fail("NotAHomomorphism", "r/d are not intertwined at '" + src.label(g1) + "'");
    }
    for (int g2 : src.r_fiber(src.source(g1))) {
      if (tgt.compose_opt(im(g1), im(g2)) != im(src.compose_opt(g1, g2))) {
        fail("NotAHomomorphism", "multiplicativity fails on ('" +
                                     src.label(g1) + "','" + src.label(g2) + "')");
      }
    }
  }
  std::vector<int> rho(static_cast<size_t>(tgt.size()), -1);
  for (int t : tgt.units()) {
    rho[static_cast<size_t>(t)] = unit_preimage.at(t);
  }
  std::vector<std::vector<int>> act(
      static_cast<size_t>(src.size()),
      std::vector<int>(static_cast<size_t>(tgt.size()), -1));
  for (int gamma = 0; gamma < src.size(); ++gamma) {
    for (int x = 0; x < tgt.size(); ++x) {
      if (src.source(gamma) == rho[static_cast<size_t>(tgt.range(x))]) {
        act[static_cast<size_t>(gamma)][static_cast<size_t>(x)] =
            tgt.compose(im(gamma), x);
      }
    }
  }
  return Morphism::create(source, target, std::move(rho), std::move(act));
}

std::vector<int> to_homomorphism(Morphism const& m) {
  auto const& src = *m.source();
  auto const& tgt = *m.target();
  std::map<int, int> rho_inverse;
  for (int t : tgt.units()) {
    if (!rho_inverse.emplace(m.rho(t), t).second) {
      fail("UnitsNotBijective", "rho is not injective");
    }
  }
  std::vector<int> phi(static_cast<size_t>(src.size()));
  for (int gamma = 0; gamma < src.size(); ++gamma) {
    auto it = rho_inverse.find(src.source(gamma));
    if (it == rho_inverse.end()) {
      fail("UnitsNotBijective", "rho misses the unit '" +
                                    src.label(src.source(gamma)) + "'");
    }
    phi[static_cast<size_t>(gamma)] = m.act(gamma, it->second);
  }
  return phi;
}

Morphism to_set_morphism(HaarSystem const& source,
                         std::vector<std::string> const& points,
                         std::vector<int> const& rho_points,
                         std::map<int, Rational> const& point_weights) {
  auto const& src = *source.groupoid();
  auto tgt = cotrivial_set(points);
  if (rho_points.size() != points.size()) {
    fail("DomainMismatch", "one rho value per point expected");
  }
  std::set<int> image;
  for (int u : rho_points) {
    if (u < 0 || u >= src.size() || !src.is_unit(u)) {
      fail("NotAUnit", "rho must take unit values");
    }
    image.insert(u);
  }
  for (int gamma = 0; gamma < src.size(); ++gamma) {
    if (image.count(src.source(gamma)) != image.count(src.range(gamma))) {
      fail("ImageNotSaturated", "'" + src.label(gamma) +
                                    "' leaves the image of rho");
    }
  }
  std::map<int, Rational> c;
  for (int x = 0; x < tgt->size(); ++x) {
    auto it = point_weights.find(x);
    if (it == point_weights.end()) {
      fail("NonPositiveWeight", "point '" + tgt->label(x) +
                                    "' needs a positive weight");
    }
    c[x] = it->second;
  }
  auto target = haar_from_unit_weights(tgt, c);
  std::vector<int> rho(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    rho[i] = rho_points[i];
  }
  std::vector<std::vector<int>> act(
      static_cast<size_t>(src.size()),
      std::vector<int>(points.size(), -1));
  for (int gamma = 0; gamma < src.size(); ++gamma) {
    for (int x = 0; x < tgt->size(); ++x) {
      if (src.source(gamma) == rho[static_cast<size_t>(x)]) {
        act[static_cast<size_t>(gamma)][static_cast<size_t>(x)] = x;
      }
    }
  }
  return Morphism::create(source, target, std::move(rho), std::move(act));
}

Morphism action_to_pair_morphism(GroupoidAction const& a,
                                 HaarSystem const& source,
                                 std::map<int, Rational> const& mu_points) {
  if (a.actor() != source.groupoid()) {
    fail("GroupoidMismatch", "the action and the Haar system must share the actor");
  }
  auto report = check_action(a);
  if (!report.ok) {
    fail("NotAnAction", report.violations.front());
  }
  auto const& src = *source.groupoid();
  auto tgt = pair_groupoid(a.space());
  std::map<int, Rational> c;  // ν({(x, y)}) = μ(y), a function of d only
  for (int y = 0; y < a.points(); ++y) {
    auto it = mu_points.find(y);
    if (it == mu_points.end()) {
      fail("NonPositiveWeight",
           "point '" + a.space()[static_cast<size_t>(y)] +
               "' needs a positive mass");
    }
    c[tgt->index(pair_label(a.space()[static_cast<size_t>(y)],
                            a.space()[static_cast<size_t>(y)]))] = it->second;
  }
  auto target = haar_from_unit_weights(tgt, c);
  auto pair_index = [&](int x, int y) {
    return tgt->index(pair_label(a.space()[static_cast<size_t>(x)],
                                 a.space()[static_cast<size_t>(y)]));
  };
  // element index -> (first point, second point)
  std::vector<std::pair<int, int>> coords(static_cast<size_t>(tgt->size()));
  for (int x = 0; x < a.points(); ++x) {
    for (int y = 0; y < a.points(); ++y) {
      coords[static_cast<size_t>(pair_index(x, y))] = {x, y};
    }
  }
  std::vector<int> rho(static_cast<size_t>(tgt->size()), -1);
  for (int x = 0; x < a.points(); ++x) {
    rho[static_cast<size_t>(pair_index(x, x))] = a.momentum(x);
  }
  std::vector<std::vector<int>> act(
      static_cast<size_t>(src.size()),
      std::vector<int>(static_cast<size_t>(tgt->size()), -1));
  for (int gamma = 0; gamma < src.size(); ++gamma) {
    for (int e = 0; e < tgt->size(); ++e) {
      auto [x, y] = coords[static_cast<size_t>(e)];
      if (src.source(gamma) == a.momentum(x)) {
        act[static_cast<size_t>(gamma)][static_cast<size_t>(e)] =
            pair_index(a.act(gamma, x), y);
      }
    }
  }
  return Morphism::create(source, target, std::move(rho), std::move(act));
}

Morphism h_mu_trivial_morphism(HaarSystem const& haar, UnitMeasure const& mu) {
  if (!check_quasi_invariance(haar, mu)) {
    fail("NotQuasiInvariant", "the support of the measure is not saturated");
  }
  auto const& src = *haar.groupoid();
  auto support = mu.support();
  std::map<int, int> pos;
  std::vector<std::string> space;
  std::vector<int> momentum;
  for (size_t i = 0; i < support.size(); ++i) {
    pos[support[i]] = static_cast<int>(i);
    space.push_back(src.label(support[i]));
    momentum.push_back(support[i]);
  }
  std::vector<std::vector<int>> table(
      static_cast<size_t>(src.size()), std::vector<int>(support.size(), -1));
  for (int gamma = 0; gamma < src.size(); ++gamma) {
    for (size_t i = 0; i < support.size(); ++i) {
      if (src.source(gamma) == support[i]) {
        // r(γ) stays in the support because the support is saturated
        table[static_cast<size_t>(gamma)][i] = pos.at(src.range(gamma));
      }
    }
  }
  GroupoidAction on_units(haar.groupoid(), space, momentum, std::move(table));
  std::map<int, Rational> masses;
  for (size_t i = 0; i < support.size(); ++i) {
    masses[static_cast<int>(i)] = mu.weight(support[i]);
  }
  return action_to_pair_morphism(on_units, haar, masses);
}

bool principal_is_proper(GroupoidPtr const&) {
  return true;  // the anchor map of a finite groupoid is trivially proper
}

}  // namespace gl
