#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthograph {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Thrown on malformed or out-of-contract inputs (shape mismatch, NaN entries, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an operation requires a nonzero (or otherwise non-degenerate) input.
class DegenerateInputError : public InputError {
 public:
  explicit DegenerateInputError(const std::string& msg) : InputError(msg) {}
};

// Thrown when a path constructor's preconditions do not hold.
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a requested witness provably does not exist (e.g. annihilator of
// an invertible matrix).
class NoWitnessError : public ConstructionError {
 public:
  explicit NoWitnessError(const std::string& msg) : ConstructionError(msg) {}
};

enum class Tri { Yes, No, Uncertain };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "uncertain";
  }
}

// Sizes (n_1, ..., n_k) of the summands of M_{n_1} + ... + M_{n_k}.
struct AlgebraSignature {
  std::vector<int> sizes;

  AlgebraSignature() = default;
  explicit AlgebraSignature(std::vector<int> s) : sizes(std::move(s)) {
    if (sizes.empty()) throw InputError("signature must have at least one summand");
    for (int n : sizes)
      if (n < 1) throw InputError("signature sizes must be positive");
  }

  int summands() const { return static_cast<int>(sizes.size()); }
  bool operator==(const AlgebraSignature& o) const = default;
  bool all_scalar() const {
    for (int n : sizes)
      if (n != 1) return false;
    return true;
  }
};

// One element of the direct sum: a square complex matrix per summand.
struct DirectSumElement {
  AlgebraSignature signature;
  std::vector<Mat> coords;

  DirectSumElement() = default;
  DirectSumElement(AlgebraSignature sig, std::vector<Mat> c)
      : signature(std::move(sig)), coords(std::move(c)) {
    if (coords.size() != static_cast<size_t>(signature.summands()))
      throw InputError("coordinate count does not match signature");
    for (int i = 0; i < signature.summands(); ++i) {
      const Mat& m = coords[static_cast<size_t>(i)];
      if (m.rows() != signature.sizes[static_cast<size_t>(i)] || m.cols() != m.rows())
        throw InputError("coordinate " + std::to_string(i) + " has wrong shape");
      if (!m.allFinite())
        throw InputError("coordinate " + std::to_string(i) + " has non-finite entries");
    }
  }

  bool is_zero() const {
    for (const Mat& m : coords)
      if (!m.isZero(0.0)) return false;
    return true;
  }
};

// Thresholds used by every numerical decision. All relative thresholds are
// measured against the largest singular value of the matrix in question.
struct ToleranceConfig {
  double eps_rank = 1e-9;        // singular value treated as zero below this (relative)
  double eps_tie = 1e-9;         // cluster width at sigma_max (relative)
  double eps_orth = 1e-8;        // certificate residual threshold (after scaling)
  double uncertain_factor = 10;  // width of the indeterminate band

  void validate() const {
    if (eps_rank <= 0 || eps_tie <= 0 || eps_orth <= 0)
      throw InputError("tolerances must be positive");
    if (uncertain_factor < 1) throw InputError("uncertain_factor must be >= 1");
  }
};

inline void validate_matrix(const Mat& m) {
  if (m.rows() < 1 || m.cols() < 1) throw InputError("matrix must be non-empty");
  if (!m.allFinite()) throw InputError("matrix has non-finite entries");
}

}  // namespace orthograph
