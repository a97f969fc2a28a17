#include "hermitia/hermitian.hpp"

#include <cmath>

#include "hermitia/oracle.hpp"

namespace hermitia {

// ---------------------------------------------------------------------------
// ComplexMatrix
// ---------------------------------------------------------------------------

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = std::conj(at(j, i));
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  ComplexMatrix m(n_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + rhs.a_[k];
  return m;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  ComplexMatrix m(n_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - rhs.a_[k];
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  ComplexMatrix m(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const Complex aik = at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      const Complex* brow = &rhs.a_[static_cast<size_t>(k) * n_];
      Complex* mrow = &m.a_[static_cast<size_t>(i) * n_];
      for (int j = 0; j < n_; ++j) mrow[j] += aik * brow[j];
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::operator*(Complex c) const {
  ComplexMatrix m(n_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = c * a_[k];
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs_entry() const {
  double s = 0.0;
  for (const Complex& z : a_) s = std::max(s, std::abs(z));
  return s;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

// ---------------------------------------------------------------------------
// HermitianMatrix
// ---------------------------------------------------------------------------

namespace {

// (A+A†)/2 with the conjugate pair written from a single computation, so the
// storage invariant holds bit-exactly.  Diagonal becomes exactly real.
ComplexMatrix symmetrize(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = Complex(a.at(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const Complex t = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
      m.at(i, j) = t;
      m.at(j, i) = std::conj(t);
    }
  }
  return m;
}

double asymmetry(const ComplexMatrix& a) {
  const int n = a.dim();
  double dev = 0.0;
  for (int i = 0; i < n; ++i) {
    dev = std::max(dev, std::abs(a.at(i, i).imag()));
    for (int j = i + 1; j < n; ++j)
      dev = std::max(dev, std::abs(a.at(i, j) - std::conj(a.at(j, i))));
  }
  return dev;
}

}  // namespace

HermitianMatrix HermitianMatrix::scaled_identity(int n, double c) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = values[i];
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& a) {
  return HermitianMatrix(symmetrize(a));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& rhs) const {
  if (dim() != rhs.dim()) throw DimensionMismatch("operator+: dimensions differ");
  return HermitianMatrix(m_ + rhs.m_);  // hermiticity closed under +
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& rhs) const {
  if (dim() != rhs.dim()) throw DimensionMismatch("operator-: dimensions differ");
  return HermitianMatrix(m_ - rhs.m_);
}

HermitianMatrix HermitianMatrix::operator-() const {
  return HermitianMatrix(m_ * Complex(-1.0, 0.0));
}

HermitianMatrix HermitianMatrix::operator*(double c) const {
  return HermitianMatrix(m_ * Complex(c, 0.0));
}

HermitianMatrix make_hermitian(const ComplexMatrix& raw,
                               const ToleranceConfig& cfg, bool strict) {
  const int n = raw.dim();
  if (n < 1) throw NonSquare("make_hermitian: empty matrix");
  if (static_cast<size_t>(n) * n != raw.data().size())
    throw NonSquare("make_hermitian: entry count is not n*n");
  if (n > kMaxDimension)
    throw Error("make_hermitian: dimension exceeds supported cap " +
                std::to_string(kMaxDimension));
  for (const Complex& z : raw.data()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NonFiniteEntry("make_hermitian: non-finite entry");
  }
  if (strict && asymmetry(raw) > cfg.tau_sym)
    throw NotHermitian("make_hermitian: asymmetry exceeds tau_sym");
  return HermitianMatrix::symmetrized(raw);
}

ComplexMatrix product(const HermitianMatrix& g, const HermitianMatrix& h) {
  if (g.dim() != h.dim()) throw DimensionMismatch("product: dimensions differ");
  return g.raw() * h.raw();
}

HermitianMatrix jordan_product(const HermitianMatrix& g,
                               const HermitianMatrix& h) {
  if (g.dim() != h.dim())
    throw DimensionMismatch("jordan_product: dimensions differ");
  const ComplexMatrix gh = g.raw() * h.raw();
  // (gh+hg)/2 = (gh + (gh)†)/2 for Hermitian g,h
  return HermitianMatrix::symmetrized(gh);
}

HermitianMatrix sandwich(const HermitianMatrix& g, const HermitianMatrix& h) {
  if (g.dim() != h.dim())
    throw DimensionMismatch("sandwich: dimensions differ");
  return HermitianMatrix::symmetrized(g.raw() * h.raw() * g.raw());
}

HermitianMatrix square(const HermitianMatrix& g) {
  return HermitianMatrix::symmetrized(g.raw() * g.raw());
}

bool loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b,
                 const ToleranceConfig& cfg) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("loewner_leq: dimensions differ");
  const HermitianMatrix d = b - a;
  const EigRange r = eigenvalue_range(d);
  const double scale = 1.0 + std::max(std::abs(r.min), std::abs(r.max));
  return r.min >= -cfg.tau_psd * scale;
}

double distance_1norm(const HermitianMatrix& g, const HermitianMatrix& h) {
  return operator_norm(g - h);
}

bool commutes(const HermitianMatrix& g, const HermitianMatrix& h,
              const ToleranceConfig& cfg) {
  if (g.dim() != h.dim())
    throw DimensionMismatch("commutes: dimensions differ");
  const ComplexMatrix gh = g.raw() * h.raw();
  // gh-hg is anti-Hermitian; i(gh-hg) is Hermitian with the same norm.
  const ComplexMatrix comm = gh - gh.adjoint();
  const HermitianMatrix k =
      HermitianMatrix::symmetrized(comm * Complex(0.0, 1.0));
  const double lhs = operator_norm(k);
  return lhs <=
         cfg.tau_comm * (1.0 + operator_norm(g)) * (1.0 + operator_norm(h));
}

bool is_effect(const HermitianMatrix& g, const ToleranceConfig& cfg) {
  const EigRange r = eigenvalue_range(g);
  const double scale = 1.0 + std::max(std::abs(r.min), std::abs(r.max));
  return r.min >= -cfg.tau_psd * scale && r.max <= 1.0 + cfg.tau_psd * scale;
}

bool is_projection(const HermitianMatrix& g, const ToleranceConfig& cfg) {
  const EigRange r = eigenvalue_range(g);
  const double scale = 1.0 + std::max(std::abs(r.min), std::abs(r.max));
  const double tol = cfg.tau_proj * scale;
  const EigenDecomposition d = eig(g);
  for (double lam : d.eigenvalues) {
    if (std::abs(lam) > tol && std::abs(lam - 1.0) > tol) return false;
  }
  const HermitianMatrix g2 = square(g);
  if (operator_norm(g2 - g) > tol) return false;
  // power characterization with n=2, m=3: an effect with p^2 = p^3 is sharp
  const HermitianMatrix g3 = jordan_product(g2, g);
  return operator_norm(g2 - g3) <= tol;
}

Effect Effect::from(const HermitianMatrix& g, const ToleranceConfig& cfg) {
  if (!is_effect(g, cfg))
    throw NotAnEffect("Effect: spectrum escapes [0,1] beyond tau_psd");
  return Effect(g);
}

Projection Projection::from(const HermitianMatrix& g,
                            const ToleranceConfig& cfg) {
  if (!is_projection(g, cfg))
    throw NotAProjection("Projection: not idempotent within tau_proj");
  return Projection(g);
}

int Projection::rank() const {
  return static_cast<int>(std::lround(m_.trace()));
}

}  // namespace hermitia
