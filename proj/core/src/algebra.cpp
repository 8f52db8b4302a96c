#include "groupoidlab/algebra.hpp"

#include <cmath>
#include <iterator>
#include <utility>
#include <vector>

namespace gl {

namespace {

constexpr double kDropTol = 0.0;  // exact zeros only; rounding stays visible

void require_same(AlgebraElement const& a, AlgebraElement const& b) {
  if (!a.same_algebra(b)) {
    fail("AlgebraMismatch", "operands live in different convolution algebras");
  }
}

}  // namespace

AlgebraElement::AlgebraElement(HaarSystem haar, std::map<int, Complex> coeff)
    : haar_(std::move(haar)), coeff_(std::move(coeff)) {
  for (auto it = coeff_.begin(); it != coeff_.end();) {
    if (it->first < 0 || it->first >= haar_.groupoid()->size()) {
      fail("UnknownElement", "coefficient index out of range");
    }
    it = std::abs(it->second) <= kDropTol ? coeff_.erase(it) : std::next(it);
  }
}

AlgebraElement AlgebraElement::delta(HaarSystem const& haar, int x, Complex c) {
  AlgebraElement f(haar);
  f.set(x, c);
  return f;
}

AlgebraElement AlgebraElement::unit_indicator(HaarSystem const& haar) {
  AlgebraElement f(haar);
  for (int u : haar.groupoid()->units()) {
    f.set(u, Complex(1.0, 0.0));
  }
  return f;
}

Complex AlgebraElement::at(int x) const {
  auto it = coeff_.find(x);
  return it == coeff_.end() ? Complex(0.0, 0.0) : it->second;
}

void AlgebraElement::set(int x, Complex c) {
  if (x < 0 || x >= haar_.groupoid()->size()) {
    fail("UnknownElement", "coefficient index out of range");
  }
  if (std::abs(c) <= kDropTol) {
    coeff_.erase(x);
  } else {
    coeff_[x] = c;
  }
}

AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
  require_same(*this, other);
  for (auto const& [x, c] : other.coeff_) {
    set(x, at(x) + c);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex scale) {
  for (auto it = coeff_.begin(); it != coeff_.end();) {
    it->second *= scale;
    it = std::abs(it->second) <= kDropTol ? coeff_.erase(it) : std::next(it);
  }
  return *this;
}

AlgebraElement convolve(AlgebraElement const& f, AlgebraElement const& g) {
  require_same(f, g);
  auto const& grp = *f.groupoid();
  AlgebraElement out(f.haar());
  // (f∗g)(yz) accumulates f(y) g(z) w(y) over composable supports
  for (auto const& [y, fy] : f.coeff()) {
    double wy = to_double(f.haar().weight(y));
    for (auto const& [z, gz] : g.coeff()) {
      int yz = grp.compose_opt(y, z);
      if (yz >= 0) {
        out.set(yz, out.at(yz) + fy * gz * wy);
      }
    }
  }
  return out;
}

AlgebraElement involution(AlgebraElement const& f) {
  AlgebraElement out(f.haar());
  for (auto const& [x, c] : f.coeff()) {
    out.set(f.groupoid()->inverse(x), std::conj(c));
  }
  return out;
}

double i_norm(AlgebraElement const& f) {
  auto const& grp = *f.groupoid();
  double best = 0.0;
  for (int u : grp.units()) {
    double over = 0.0;   // Σ_{x ∈ Γ^u} |f(x)| w(x)
    double under = 0.0;  // Σ_{x ∈ Γ_u} |f(x)| w(x^{-1})
    for (int x : grp.r_fiber(u)) {
      over += std::abs(f.at(x)) * to_double(f.haar().weight(x));
    }
    for (int x : grp.d_fiber(u)) {
      under += std::abs(f.at(x)) * to_double(f.haar().inverse_weight(x));
    }
    best = std::max(best, std::max(over, under));
  }
  return best;
}

double max_abs_diff(AlgebraElement const& a, AlgebraElement const& b) {
  require_same(a, b);
  double out = 0.0;
  for (auto const& [x, c] : a.coeff()) {
    out = std::max(out, std::abs(c - b.at(x)));
  }
  for (auto const& [x, c] : b.coeff()) {
    out = std::max(out, std::abs(a.at(x) - c));
  }
  return out;
}

AlgebraElement h_hat_apply(Morphism const& h, AlgebraElement const& f,
                           AlgebraElement const& xi) {
  if (!f.haar().same_system(h.source_haar()) ||
      !xi.haar().same_system(h.target_haar())) {
    fail("MorphismMismatch",
         "the operand algebras do not match the morphism's systems");
  }
  AlgebraElement out(xi.haar());
  // substitute y = γ^{-1}·x, so x = γ·y runs over γ-translates of supp ξ
  for (auto const& [gamma, fg] : f.coeff()) {
    double wg = to_double(h.source_haar().weight(gamma));
    for (auto const& [y, xy] : xi.coeff()) {
      if (!h.in_domain(gamma, y)) {
        continue;
      }
      int x = h.act(gamma, y);
      double density = std::sqrt(to_double(h.delta_at(x, gamma)));
      out.set(x, out.at(x) + fg * xy * wg / density);
    }
  }
  return out;
}

double check_hermitian_identity(Morphism const& h, AlgebraElement const& f,
                                AlgebraElement const& xi1,
                                AlgebraElement const& xi2) {
  auto lhs = convolve(involution(xi2), h_hat_apply(h, f, xi1));
  auto rhs =
      convolve(involution(h_hat_apply(h, involution(f), xi2)), xi1);
  return max_abs_diff(lhs, rhs);
}

double check_intertwining(Morphism const& h, Morphism const& k,
                          AlgebraElement const& f, AlgebraElement const& xi1,
                          AlgebraElement const& xi2) {
  auto kh = compose_morphisms(h, k);
  auto lhs = h_hat_apply(k, h_hat_apply(h, f, xi1), xi2);
  auto rhs = h_hat_apply(kh, f, h_hat_apply(k, xi1, xi2));
  return max_abs_diff(lhs, rhs);
}

bool span_check(Morphism const& h) {
  auto const& tgt = *h.target();
  int const n = tgt.size();
  std::vector<std::vector<Complex>> rows;
  for (int gamma = 0; gamma < h.source()->size(); ++gamma) {
    auto dg = AlgebraElement::delta(h.source_haar(), gamma);
    for (int x = 0; x < n; ++x) {
      auto image = h_hat_apply(h, dg, AlgebraElement::delta(h.target_haar(), x));
      std::vector<Complex> row(static_cast<size_t>(n));
      for (auto const& [e, c] : image.coeff()) {
        row[static_cast<size_t>(e)] = c;
      }
      rows.push_back(std::move(row));
    }
  }
  // rank by Gaussian elimination with partial pivoting
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    double best = 1e-9;
    for (size_t i = static_cast<size_t>(rank); i < rows.size(); ++i) {
      double mag = std::abs(rows[i][static_cast<size_t>(col)]);
      if (mag > best) {
        best = mag;
        pivot = static_cast<int>(i);
      }
    }
    if (pivot < 0) {
      continue;
    }
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
    auto const& lead = rows[static_cast<size_t>(rank)];
    for (size_t i = static_cast<size_t>(rank) + 1; i < rows.size(); ++i) {
      Complex factor = rows[i][static_cast<size_t>(col)] /
                       lead[static_cast<size_t>(col)];
      for (int j = col; j < n; ++j) {
        rows[i][static_cast<size_t>(j)] -= factor * lead[static_cast<size_t>(j)];
      }
    }
    ++rank;
  }
  return rank == n;
}

}  // namespace gl
