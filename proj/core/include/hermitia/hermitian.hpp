#ifndef HERMITIA_HERMITIAN_HPP
#define HERMITIA_HERMITIAN_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermitia {

using Complex = std::complex<double>;

// Largest matrix dimension the library accepts.  This keeps every property
// suite at desk scale; it is a configuration constant, not an architectural
// limit.
inline constexpr int kMaxDimension = 64;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonSquare : Error {
  explicit NonSquare(const std::string& what) : Error(what) {}
};
struct NonFiniteEntry : Error {
  explicit NonFiniteEntry(const std::string& what) : Error(what) {}
};
struct NotHermitian : Error {
  explicit NotHermitian(const std::string& what) : Error(what) {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};
struct NotAnEffect : Error {
  explicit NotAnEffect(const std::string& what) : Error(what) {}
};
struct NotAProjection : Error {
  explicit NotAProjection(const std::string& what) : Error(what) {}
};
struct NotPositive : Error {
  explicit NotPositive(const std::string& what) : Error(what) {}
};
struct NotInvertible : Error {
  explicit NotInvertible(const std::string& what) : Error(what) {}
};
struct NotCommuting : Error {
  explicit NotCommuting(const std::string& what) : Error(what) {}
};
struct NotAscending : Error {
  explicit NotAscending(const std::string& what) : Error(what) {}
};
struct MaxIterExceeded : Error {
  explicit MaxIterExceeded(const std::string& what) : Error(what) {}
};
struct NoConvergence : Error {
  explicit NoConvergence(const std::string& what) : Error(what) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};
struct VerificationError : Error {
  explicit VerificationError(const std::string& what) : Error(what) {}
};

// ---------------------------------------------------------------------------
// ToleranceConfig
// ---------------------------------------------------------------------------

// All numeric thresholds and iteration caps, threaded through every
// operation.  Comparison tolerances are relative: they get scaled by
// (1 + operator norm) of the operands at the point of use.
struct ToleranceConfig {
  double tau_sym = 1e-12;   // Hermiticity deviation admitted in strict mode
  double tau_psd = 1e-9;    // positive-semidefiniteness slack
  double tau_proj = 1e-8;   // idempotence / projection-spectrum slack
  double tau_comm = 1e-9;   // commutator slack
  double tau_conv = 1e-11;  // iteration convergence target
  long max_iter = 200000;
  int bisect_steps = 80;

  void validate() const {
    if (tau_sym <= 0 || tau_psd <= 0 || tau_proj <= 0 || tau_comm <= 0 ||
        tau_conv <= 0) {
      throw Error("ToleranceConfig: all thresholds must be positive");
    }
    if (max_iter < 1) throw Error("ToleranceConfig: max_iter must be >= 1");
    if (bisect_steps < 1)
      throw Error("ToleranceConfig: bisect_steps must be >= 1");
  }
};

// ---------------------------------------------------------------------------
// ComplexMatrix: dense row-major n x n complex matrix.
//
// This is the raw storage and arithmetic layer.  It carries no algebraic
// invariant; HermitianMatrix below wraps it with the A = A† contract.
// Unitaries (eigenvector matrices, common bases) are ComplexMatrix values.
// ---------------------------------------------------------------------------

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  ComplexMatrix(int n, std::vector<Complex> entries)
      : n_(n), a_(std::move(entries)) {}

  int dim() const { return n_; }
  Complex& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Complex& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }
  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

  static ComplexMatrix identity(int n);
  static ComplexMatrix zero(int n) { return ComplexMatrix(n); }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(Complex c) const;

  double frobenius_norm() const;
  double max_abs_entry() const;
  Complex trace() const;

 private:
  int n_ = 0;
  std::vector<Complex> a_;
};

// ---------------------------------------------------------------------------
// HermitianMatrix: the element g of the directed group G.
//
// Storage invariants, enforced at every construction site:
//   entries[i][j] == conj(entries[j][i]) exactly, and diagonal imaginary
//   parts are exactly zero.  All arithmetic below preserves this bit-level
//   contract, so downstream code never re-checks it.
// ---------------------------------------------------------------------------

class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  int dim() const { return m_.dim(); }
  const Complex& at(int i, int j) const { return m_.at(i, j); }
  const ComplexMatrix& raw() const { return m_; }

  static HermitianMatrix zero(int n) {
    return HermitianMatrix(ComplexMatrix::zero(n));
  }
  static HermitianMatrix identity(int n) {
    return HermitianMatrix(ComplexMatrix::identity(n));
  }
  static HermitianMatrix scaled_identity(int n, double c);
  // diag(values) with zero off-diagonal
  static HermitianMatrix diagonal(const std::vector<double>& values);
  // Symmetrizes the argument: (A+A†)/2 with exact conjugate pairing.
  // Trusted entry point for results that are Hermitian up to rounding.
  static HermitianMatrix symmetrized(const ComplexMatrix& a);

  HermitianMatrix operator+(const HermitianMatrix& rhs) const;
  HermitianMatrix operator-(const HermitianMatrix& rhs) const;
  HermitianMatrix operator-() const;
  HermitianMatrix operator*(double c) const;

  double frobenius_norm() const { return m_.frobenius_norm(); }
  double max_abs_entry() const { return m_.max_abs_entry(); }
  double trace() const { return m_.trace().real(); }

  bool same_entries(const HermitianMatrix& rhs) const {
    return dim() == rhs.dim() && m_.data() == rhs.m_.data();
  }

 private:
  explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  friend HermitianMatrix make_hermitian(const ComplexMatrix&,
                                        const ToleranceConfig&, bool);
  ComplexMatrix m_;
};

inline HermitianMatrix operator*(double c, const HermitianMatrix& g) {
  return g * c;
}

// Construction mode: lenient (default) silently symmetrizes; strict rejects
// asymmetry beyond tau_sym.  Test generators want lenient; CLI input
// validation wants strict.
HermitianMatrix make_hermitian(const ComplexMatrix& raw,
                               const ToleranceConfig& cfg = {},
                               bool strict = false);

// Raw (non-Hermitian in general) product g*h.
ComplexMatrix product(const HermitianMatrix& g, const HermitianMatrix& h);

// Jordan product (g,h) -> (gh+hg)/2; Hermitian by construction.
HermitianMatrix jordan_product(const HermitianMatrix& g,
                               const HermitianMatrix& h);

// g h g, Hermitian for Hermitian g,h.
HermitianMatrix sandwich(const HermitianMatrix& g, const HermitianMatrix& h);

// g*g.
HermitianMatrix square(const HermitianMatrix& g);

// Loewner order: a <= b iff min-eigenvalue(b-a) >= -tau_psd*(1+||b-a||).
bool loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b,
                 const ToleranceConfig& cfg = {});

// gCh: ||gh-hg|| <= tau_comm*(1+||g||)*(1+||h||), norms in the 1-norm.
bool commutes(const HermitianMatrix& g, const HermitianMatrix& h,
              const ToleranceConfig& cfg = {});

// Operator-norm distance ||g-h|| measured through the oracle eigensolver.
double distance_1norm(const HermitianMatrix& g, const HermitianMatrix& h);

// Spectrum within [-tau_psd, 1+tau_psd] scaled by (1+||g||).
bool is_effect(const HermitianMatrix& g, const ToleranceConfig& cfg = {});

// ||p^2-p|| <= tau_proj, spectrum tau_proj-close to {0,1}, and the
// multiplication-free power characterization p^2 = p^3 as a cross-check.
bool is_projection(const HermitianMatrix& g, const ToleranceConfig& cfg = {});

// ---------------------------------------------------------------------------
// Effect and Projection: validated wrappers.
// ---------------------------------------------------------------------------

class Effect {
 public:
  static Effect from(const HermitianMatrix& g, const ToleranceConfig& cfg = {});
  const HermitianMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  explicit Effect(HermitianMatrix m) : m_(std::move(m)) {}
  HermitianMatrix m_;
};

class Projection {
 public:
  static Projection from(const HermitianMatrix& g,
                         const ToleranceConfig& cfg = {});
  // Trusted path for matrices produced by snap_to_projection.
  static Projection trusted(HermitianMatrix m) {
    return Projection(std::move(m));
  }
  const HermitianMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }
  // rank = trace, an integer invariant for snapped projections
  int rank() const;

 private:
  explicit Projection(HermitianMatrix m) : m_(std::move(m)) {}
  HermitianMatrix m_;
};

}  // namespace hermitia

#endif  // HERMITIA_HERMITIAN_HPP
