#include "hermitia/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hermitia {

namespace {

constexpr int kMaxSweeps = 100;

double offdiag_mass(const ComplexMatrix& a) {
  const int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(a.at(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating the (p,q) off-diagonal pair of a,
// accumulating the rotation into v.  The rotation is the 2x2 unitary
//   [ c          s*exp(i*phi) ]
//   [ -s*exp(-i*phi)   c      ]
// with phi = arg(a_pq) and the real angle chosen to zero the rotated pair.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex apq = a.at(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const double phi = std::atan2(apq.imag(), apq.real());
  const double app = a.at(p, p).real();
  const double aqq = a.at(q, q).real();
  // Small-angle root of  r t^2 - (app-aqq) t - r = 0, the annihilating
  // tangent for this rotation convention.
  const double tau = (app - aqq) / (2.0 * r);
  const double sgn = tau >= 0.0 ? 1.0 : -1.0;
  const double t = -sgn / (std::abs(tau) + std::hypot(tau, 1.0));
  const double c = 1.0 / std::hypot(t, 1.0);
  const double s = t * c;
  const Complex eip(std::cos(phi), std::sin(phi));
  const Complex sp = s * eip;              // s*exp(i*phi)
  const Complex spc = std::conj(sp);       // s*exp(-i*phi)

  const int n = a.dim();
  // A <- R† A R, columns first then rows (R acts on indices p,q only).
  for (int k = 0; k < n; ++k) {
    const Complex akp = a.at(k, p);
    const Complex akq = a.at(k, q);
    a.at(k, p) = c * akp - spc * akq;
    a.at(k, q) = sp * akp + c * akq;
  }
  for (int k = 0; k < n; ++k) {
    const Complex apk = a.at(p, k);
    const Complex aqk = a.at(q, k);
    a.at(p, k) = c * apk - sp * aqk;
    a.at(q, k) = spc * apk + c * aqk;
  }
  // Pin what is exact by symmetry: the pair is annihilated and the diagonal
  // stays real.
  a.at(p, q) = 0.0;
  a.at(q, p) = 0.0;
  a.at(p, p) = Complex(a.at(p, p).real(), 0.0);
  a.at(q, q) = Complex(a.at(q, q).real(), 0.0);

  for (int k = 0; k < n; ++k) {
    const Complex vkp = v.at(k, p);
    const Complex vkq = v.at(k, q);
    v.at(k, p) = c * vkp - spc * vkq;
    v.at(k, q) = sp * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition eig(const HermitianMatrix& g) {
  const int n = g.dim();
  ComplexMatrix a = g.raw();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();
  const double target = 1e-13 * scale;

  if (n > 1 && scale > 0.0) {
    int sweep = 0;
    while (offdiag_mass(a) > target) {
      if (++sweep > kMaxSweeps)
        throw NoConvergence("eig: Jacobi sweep cap exceeded");
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return a.at(i, i).real() < a.at(j, j).real();
  });

  EigenDecomposition d;
  d.eigenvalues.resize(n);
  d.eigenvectors = ComplexMatrix(n);
  for (int j = 0; j < n; ++j) {
    d.eigenvalues[j] = a.at(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) d.eigenvectors.at(i, j) = v.at(i, order[j]);
  }
  return d;
}

namespace {

HermitianMatrix assemble(const EigenDecomposition& d,
                         const std::vector<double>& values) {
  const int n = d.eigenvectors.dim();
  ComplexMatrix w(n);  // V * diag(values)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w.at(i, j) = d.eigenvectors.at(i, j) * values[j];
  return HermitianMatrix::symmetrized(w * d.eigenvectors.adjoint());
}

}  // namespace

HermitianMatrix apply_scalar_function(const HermitianMatrix& g,
                                      const std::function<double(double)>& f) {
  const EigenDecomposition d = eig(g);
  std::vector<double> mapped(d.eigenvalues.size());
  for (size_t i = 0; i < d.eigenvalues.size(); ++i) {
    const double y = f(d.eigenvalues[i]);
    if (!std::isfinite(y))
      throw DomainError("apply_scalar_function: f undefined on spectrum");
    mapped[i] = y;
  }
  return assemble(d, mapped);
}

double operator_norm(const HermitianMatrix& g) {
  const EigRange r = eigenvalue_range(g);
  return std::max(std::abs(r.min), std::abs(r.max));
}

EigRange eigenvalue_range(const HermitianMatrix& g) {
  const EigenDecomposition d = eig(g);
  return {d.eigenvalues.front(), d.eigenvalues.back()};
}

HermitianMatrix oracle_sqrt(const HermitianMatrix& g, double neg_tol) {
  return apply_scalar_function(g, [neg_tol](double x) {
    if (x < -neg_tol)
      throw DomainError("oracle_sqrt: negative eigenvalue beyond tolerance");
    return std::sqrt(std::max(x, 0.0));
  });
}

HermitianMatrix oracle_abs(const HermitianMatrix& g) {
  return apply_scalar_function(g, [](double x) { return std::abs(x); });
}

HermitianMatrix oracle_signum(const HermitianMatrix& g, double zero_tol) {
  return apply_scalar_function(g, [zero_tol](double x) {
    if (std::abs(x) <= zero_tol) return 0.0;
    return x > 0.0 ? 1.0 : -1.0;
  });
}

HermitianMatrix oracle_carrier(const HermitianMatrix& g, double zero_tol) {
  return apply_scalar_function(
      g, [zero_tol](double x) { return std::abs(x) > zero_tol ? 1.0 : 0.0; });
}

HermitianMatrix oracle_pos_part(const HermitianMatrix& g) {
  return apply_scalar_function(g,
                               [](double x) { return x > 0.0 ? x : 0.0; });
}

HermitianMatrix oracle_neg_part(const HermitianMatrix& g) {
  return apply_scalar_function(g,
                               [](double x) { return x < 0.0 ? -x : 0.0; });
}

HermitianMatrix oracle_inverse(const HermitianMatrix& g, double zero_tol) {
  return apply_scalar_function(g, [zero_tol](double x) {
    if (std::abs(x) <= zero_tol)
      throw DomainError("oracle_inverse: eigenvalue at zero");
    return 1.0 / x;
  });
}

HermitianMatrix oracle_spectral_projection(const HermitianMatrix& g,
                                           double lambda,
                                           double inclusion_tol) {
  return apply_scalar_function(g, [lambda, inclusion_tol](double x) {
    return x <= lambda + inclusion_tol ? 1.0 : 0.0;
  });
}

HermitianMatrix oracle_eigenprojection(const HermitianMatrix& g, double lambda,
                                       double cluster_tol) {
  return apply_scalar_function(g, [lambda, cluster_tol](double x) {
    return std::abs(x - lambda) <= cluster_tol ? 1.0 : 0.0;
  });
}

}  // namespace hermitia
