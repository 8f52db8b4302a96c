#include "groupoidlab/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace gl {

CMatrix matmul(CMatrix const& x, CMatrix const& y) {
  if (x.n != y.n) {
    fail("DimensionMismatch", "matrix product of unequal sizes");
  }
  CMatrix out(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int l = 0; l < x.n; ++l) {
      Complex xil = x.at(i, l);
      if (xil == Complex(0.0, 0.0)) {
        continue;
      }
      for (int j = 0; j < x.n; ++j) {
        out.at(i, j) += xil * y.at(l, j);
      }
    }
  }
  return out;
}

CMatrix adjoint(CMatrix const& x) {
  CMatrix out(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) {
      out.at(i, j) = std::conj(x.at(j, i));
    }
  }
  return out;
}

double max_abs_diff(CMatrix const& x, CMatrix const& y) {
  if (x.n != y.n) {
    fail("DimensionMismatch", "matrix difference of unequal sizes");
  }
  double out = 0.0;
  for (size_t i = 0; i < x.a.size(); ++i) {
    out = std::max(out, std::abs(x.a[i] - y.a[i]));
  }
  return out;
}

WeightedHilbertSpace WeightedHilbertSpace::source_fiber(HaarSystem const& nu,
                                                        int t) {
  auto const& g = *nu.groupoid();
  if (t < 0 || t >= g.size() || !g.is_unit(t)) {
    fail("UnitNotFound", "fiber base is not a unit");
  }
  WeightedHilbertSpace out;
  for (int x : g.d_fiber(t)) {
    out.basis.push_back(x);
    out.weights.push_back(nu.inverse_weight(x));
  }
  return out;
}

int WeightedHilbertSpace::position(int element) const {
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] == element) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

CMatrix pi_matrix(Morphism const& h, int t, AlgebraElement const& f) {
  if (!f.haar().same_system(h.source_haar())) {
    fail("MorphismMismatch", "the element lives off the morphism's source");
  }
  auto space = WeightedHilbertSpace::source_fiber(h.target_haar(), t);
  CMatrix m(space.dim());
  auto const& src = *h.source();
  for (int i = 0; i < space.dim(); ++i) {
    int x = space.basis[static_cast<size_t>(i)];
    for (auto const& [gamma, c] : f.coeff()) {
      if (!h.in_domain(src.inverse(gamma), x)) {
        continue;  // (x, γ) is not a transformation-groupoid pair
      }
      int y = h.act(src.inverse(gamma), x);
      int j = space.position(y);
      double density = std::sqrt(to_double(h.delta_at(x, gamma)));
      m.at(i, j) += c * to_double(h.source_haar().weight(gamma)) / density;
    }
  }
  return m;
}

std::vector<double> hermitian_eigenvalues(CMatrix const& input) {
  CMatrix m = input;
  int const n = m.n;
  if (n == 0) {
    return {};
  }
  auto off_frobenius = [&] {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) {
          sum += std::norm(m.at(i, j));
        }
      }
    }
    return std::sqrt(sum);
  };
  double scale = 0.0;
  for (auto const& v : m.a) {
    scale = std::max(scale, std::abs(v));
  }
  double const target = kJacobiOffdiagTol * std::max(1.0, scale);
  for (int sweep = 0; sweep < 100 && off_frobenius() > target; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        Complex apq = m.at(p, q);
        double mag = std::abs(apq);
        if (mag <= target / (n * n + 1)) {
          continue;
        }
        double app = m.at(p, p).real();
        double aqq = m.at(q, q).real();
        Complex phase = apq / mag;
        double tau = (app - aqq) / (2.0 * mag);
        double tan_theta = tau >= 0.0 ? tau - std::sqrt(tau * tau + 1.0)
                                      : tau + std::sqrt(tau * tau + 1.0);
        double c = 1.0 / std::sqrt(tan_theta * tan_theta + 1.0);
        Complex s = tan_theta * c * phase;
        // A <- Jᴴ A J with J = [[c, s], [-conj(s), c]] in the (p,q) plane
        for (int i = 0; i < n; ++i) {
          Complex aip = m.at(i, p);
          Complex aiq = m.at(i, q);
          m.at(i, p) = c * aip - std::conj(s) * aiq;
          m.at(i, q) = s * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          Complex apj = m.at(p, j);
          Complex aqj = m.at(q, j);
          m.at(p, j) = c * apj - s * aqj;
          m.at(q, j) = std::conj(s) * apj + c * aqj;
        }
        m.at(p, q) = Complex(0.0, 0.0);
        m.at(q, p) = Complex(0.0, 0.0);
      }
    }
  }
  if (off_frobenius() > target) {
    fail("JacobiStalled", "eigensolve failed to reach the pinned "
                          "off-diagonal tolerance");
  }
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(m.at(i, i).real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

double operator_norm(CMatrix const& m, WeightedHilbertSpace const& space) {
  if (m.n != space.dim()) {
    fail("DimensionMismatch", "matrix does not act on the given space");
  }
  if (m.n == 0) {
    return 0.0;
  }
  // conjugate into the flat inner product: B = D^{1/2} M D^{-1/2}
  std::vector<double> root(space.weights.size());
  for (size_t i = 0; i < root.size(); ++i) {
    root[i] = std::sqrt(to_double(space.weights[i]));
  }
  CMatrix b(m.n);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      b.at(i, j) = m.at(i, j) * root[static_cast<size_t>(i)] /
                   root[static_cast<size_t>(j)];
    }
  }
  auto gram = matmul(adjoint(b), b);
  auto eigenvalues = hermitian_eigenvalues(gram);
  return std::sqrt(std::max(0.0, eigenvalues.back()));
}

double norm_h(Morphism const& h, AlgebraElement const& f) {
  double best = 0.0;
  for (int t : h.target()->units()) {
    auto space = WeightedHilbertSpace::source_fiber(h.target_haar(), t);
    best = std::max(best, operator_norm(pi_matrix(h, t, f), space));
  }
  return best;
}

double reduced_norm(AlgebraElement const& f) {
  return norm_h(identity_morphism(f.haar()), f);
}

TrivialRepresentation trivial_representation_matrix(HaarSystem const& haar,
                                                    UnitMeasure const& mu,
                                                    AlgebraElement const& f) {
  if (!f.haar().same_system(haar)) {
    fail("AlgebraMismatch", "the element lives off the given Haar system");
  }
  auto delta_mu = modular_function(haar, mu);  // throws NotQuasiInvariant
  auto const& g = *haar.groupoid();
  TrivialRepresentation out;
  std::map<int, int> pos;
  for (int u : mu.support()) {
    pos[u] = out.space.dim();
    out.space.basis.push_back(u);
    out.space.weights.push_back(mu.weight(u));
  }
  out.matrix = CMatrix(out.space.dim());
  for (auto const& [gamma, c] : f.coeff()) {
    auto iu = pos.find(g.range(gamma));
    auto iv = pos.find(g.source(gamma));
    if (iu == pos.end() || iv == pos.end()) {
      continue;  // the representation only sees the reduction to supp μ
    }
    double density = std::sqrt(to_double(delta_mu.at(gamma)));
    out.matrix.at(iu->second, iv->second) +=
        c * to_double(haar.weight(gamma)) / density;
  }
  return out;
}

double trivial_rep_norm(HaarSystem const& haar, UnitMeasure const& mu,
                        AlgebraElement const& f) {
  auto rep = trivial_representation_matrix(haar, mu, f);
  return operator_norm(rep.matrix, rep.space);
}

double ii_norm(HaarSystem const& haar, UnitMeasure const& mu,
               AlgebraElement const& f) {
  AlgebraElement magnitude(haar);
  for (auto const& [x, c] : f.coeff()) {
    magnitude.set(x, Complex(std::abs(c), 0.0));
  }
  auto rep = trivial_representation_matrix(haar, mu, magnitude);
  return operator_norm(rep.matrix, rep.space);
}

RepCheckResult check_rep_homomorphism(Morphism const& h, int t,
                                      AlgebraElement const& f,
                                      AlgebraElement const& g) {
  auto space = WeightedHilbertSpace::source_fiber(h.target_haar(), t);
  auto pf = pi_matrix(h, t, f);
  auto pg = pi_matrix(h, t, g);
  RepCheckResult out{};
  out.multiplicativity_residual =
      max_abs_diff(pi_matrix(h, t, convolve(f, g)), matmul(pf, pg));
  // the adjoint w.r.t. the weighted inner product: (A†)_{ij} = (w_j/w_i) conj(A_{ji})
  CMatrix weighted_adjoint(pf.n);
  for (int i = 0; i < pf.n; ++i) {
    for (int j = 0; j < pf.n; ++j) {
      weighted_adjoint.at(i, j) =
          std::conj(pf.at(j, i)) *
          to_double(space.weights[static_cast<size_t>(j)] /
                    space.weights[static_cast<size_t>(i)]);
    }
  }
  out.adjoint_residual =
      max_abs_diff(pi_matrix(h, t, involution(f)), weighted_adjoint);
  out.i_norm_slack = operator_norm(pf, space) - i_norm(f);
  return out;
}

double check_functoriality(Morphism const& h, Morphism const& k,
                           AlgebraElement const& f, AlgebraElement const& xi1,
                           std::vector<Complex> const& xi2, int s) {
  auto kh = compose_morphisms(h, k);
  auto space = WeightedHilbertSpace::source_fiber(k.target_haar(), s);
  if (xi2.size() != static_cast<size_t>(space.dim())) {
    fail("DimensionMismatch", "vector does not live on the fiber");
  }
  auto apply = [&](CMatrix const& m, std::vector<Complex> const& v) {
    std::vector<Complex> out(v.size());
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) {
        out[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
      }
    }
    return out;
  };
  auto lhs = apply(pi_matrix(k, s, h_hat_apply(h, f, xi1)), xi2);
  auto rhs = apply(pi_matrix(kh, s, f), apply(pi_matrix(k, s, xi1), xi2));
  double residual = 0.0;
  for (size_t i = 0; i < lhs.size(); ++i) {
    residual = std::max(residual, std::abs(lhs[i] - rhs[i]));
  }
  return residual;
}

NormReport check_norm_sandwich(HaarSystem const& haar, AlgebraElement const& f,
                               std::vector<Morphism> const& morphisms,
                               std::vector<UnitMeasure> const& measures) {
  NormReport report;
  report.norm_tolerance = kNormTol;
  report.i_norm = i_norm(f);
  report.reduced = reduced_norm(f);
  double via_l = norm_h(identity_morphism(haar), f);
  if (std::abs(via_l - report.reduced) > kResidualTol) {
    report.ok = false;
    report.violations.push_back("the identity morphism norm disagrees with"
                                " the reduced norm");
  }
  if (report.reduced > report.i_norm + kNormTol) {
    report.ok = false;
    report.violations.push_back("the reduced norm exceeds the I-norm");
  }
  for (size_t i = 0; i < morphisms.size(); ++i) {
    double value = norm_h(morphisms[i], f);
    report.per_morphism.emplace_back("morphism[" + std::to_string(i) + "]",
                                     value);
    if (value > report.reduced + kNormTol) {
      report.ok = false;
      report.violations.push_back("‖f‖ under morphism[" + std::to_string(i) +
                                  "] exceeds the reduced norm");
    }
  }
  for (size_t i = 0; i < measures.size(); ++i) {
    double value = trivial_rep_norm(haar, measures[i], f);
    report.per_measure.emplace_back("measure[" + std::to_string(i) + "]",
                                    value);
    if (value > report.reduced + kNormTol) {
      report.ok = false;
      report.violations.push_back("the trivial-representation norm under"
                                  " measure[" + std::to_string(i) +
                                  "] exceeds the reduced norm");
    }
  }
  return report;
}

}  // namespace gl
