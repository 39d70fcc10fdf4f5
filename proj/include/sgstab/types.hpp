#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgstab {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;
using Index = Eigen::Index;

/// Orthonormality tolerance for subspace bases (max-norm of B*B - I).
inline constexpr double kOrthoTol = 1e-10;
/// Additive slack applied to every certificate inequality.
inline constexpr double kSlack = 1e-9;
/// Cutoff below which points/projections are treated as degenerate.
inline constexpr double kDegenerate = 1e-12;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class for all structured errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, non-finite entry, bad parameter.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis does not hold; the message names the failed
/// inequality or condition.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A theorem-guaranteed inequality failed on data that passed its
/// hypotheses. Signals a defect (or a deliberately forced run).
class TheoremViolationError : public Error {
 public:
  using Error::Error;
};

/// A randomized search ran out of attempts.
class SearchExhaustedError : public Error {
 public:
  SearchExhaustedError(const std::string& msg, int index)
      : Error(msg), index(index) {}
  int index;
};

// ---------------------------------------------------------------------------
// Core domain types
// ---------------------------------------------------------------------------

/// An ordered list of n points in complex d-space.
struct PointConfig {
  Index dim = 0;
  std::vector<Vec> points;

  int size() const { return static_cast<int>(points.size()); }

  /// Throws ValidationError unless n >= 1, all points have length `dim`
  /// and every entry is finite.
  void validate() const;

  /// n x d matrix whose i-th row is point i.
  Mat row_matrix() const;

  static PointConfig from_rows(const Mat& rows);
};

/// A linear subspace of C^d held as an orthonormal basis (d x k columns).
/// k = 0 (the zero subspace) is legal; distance to it is the point norm.
class Subspace {
 public:
  Subspace(Index ambient_dim, Mat basis);

  static Subspace zero(Index ambient_dim);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }

  Vec project(const Vec& v) const;
  double distance(const Vec& v) const;

 private:
  Index ambient_;
  Mat basis_;  // orthonormal columns
};

/// Singular values (non-increasing) with the matching singular vectors.
struct SpectrumSummary {
  RealVec singular_values;
  Mat right_vectors;  // columns, orthonormal
  Mat left_vectors;   // columns, orthonormal
};

// ---------------------------------------------------------------------------
// Deterministic random stream
// ---------------------------------------------------------------------------

/// mt19937_64 with hand-rolled extraction so that identical seeds give
/// identical streams on every platform (std::*_distribution does not
/// guarantee that).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : rng_(seed) {}

  /// Derives an independent stream, e.g. one per target index.
  static RandomStream fork(std::uint64_t seed, std::uint64_t lane);

  std::uint64_t bits() { return rng_(); }

  /// Uniform in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi] by rejection.
  int uniform_int(int lo, int hi);

  double gaussian();
  Complex cgaussian() { return Complex(gaussian(), gaussian()); }

  /// Complex gaussian direction, normalized to unit length.
  Vec unit_vector(Index d);

  /// Gaussian vector scaled to exactly the requested norm (zero stays zero).
  Vec vector_with_norm(Index d, double norm);

 private:
  std::mt19937_64 rng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Index triple, always stored sorted ascending.
using Triple = std::array<int, 3>;

Triple make_triple(int a, int b, int c);

}  // namespace sgstab
