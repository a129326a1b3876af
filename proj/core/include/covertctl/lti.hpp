#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace covertctl {

class AttackScenario;  // attack.hpp

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Relative zero threshold: a row/matrix generated from the given operands is
/// treated as zero when its max-abs entry is at most
/// `rel_tol * (1 + max-abs entry over the operands)`.
constexpr double kDefaultZeroTol = 1e-9;

/// Discrete-time LTI triple x(k+1) = A x(k) + B u(k), y(k) = C x(k).
/// Immutable after construction; all entries validated finite.
class StateSpaceSystem {
 public:
  StateSpaceSystem(Matrix A, Matrix B, Matrix C, double sample_period = 1.0);

  const Matrix& A() const { return A_; }
  const Matrix& B() const { return B_; }
  const Matrix& C() const { return C_; }
  double sample_period() const { return sample_period_; }

  int n() const { return static_cast<int>(A_.rows()); }
  int m() const { return static_cast<int>(B_.cols()); }
  int p() const { return static_cast<int>(C_.rows()); }

 private:
  Matrix A_, B_, C_;
  double sample_period_;
};

/// Per-output relative degrees. `nullopt` encodes an undefined (infinite)
/// degree; finite values satisfy 1 <= r <= n by Cayley-Hamilton.
struct RelativeDegreeProfile {
  std::vector<std::optional<int>> per_output;

  /// Least finite entry; nullopt when every entry is infinite.
  std::optional<int> minimum() const;

  std::string to_string() const;  // e.g. "[1, inf, inf]"
};

/// Finite-horizon stacked I/O matrices over the window {0, ..., N-1}:
///   Y(N) = observability * x(0) + input_toeplitz * U(N)
///          + attack_toeplitz * U_a(N) + sensor_block * Y_a(N)
struct StackedIOMatrices {
  int window = 0;
  Matrix observability;   // Np x n
  Matrix input_toeplitz;  // Np x Nm, blocks (i,j) = C A^{i-j-1} B for i > j
  Matrix attack_toeplitz; // Np x N*m_a, same structure with B_a = B L_a
  Matrix sensor_block;    // Np x N*p_a, I_N (x) D_a
};

/// C * A^i * input_map, evaluated by repeated left-multiplication with A
/// (never by forming A^i through an eigendecomposition).
Matrix markov_parameter(const StateSpaceSystem& sys, const Matrix& input_map,
                        int power);

/// Per-output relative degree of (C, A, input_map): the smallest i >= 1 with
/// C_q A^{i-1} input_map nonzero, searched up to i = n (Cayley-Hamilton makes
/// larger powers redundant), infinite otherwise. The optional feedthrough is
/// accepted for interface completeness but does not participate: the
/// definition starts at powers of A.
RelativeDegreeProfile relative_degree(
    const StateSpaceSystem& sys, const Matrix& input_map,
    const std::optional<Matrix>& feedthrough = std::nullopt,
    double rel_tol = kDefaultZeroTol);

/// Assembles the stacked I/O matrices for a window of N >= n steps.
StackedIOMatrices build_stacked_io(const StateSpaceSystem& sys,
                                   const AttackScenario& scenario, int window);

/// Count of singular values exceeding rel_tol * sigma_max (0 for the zero
/// matrix).
int numerical_rank(const Matrix& M, double rel_tol = kDefaultZeroTol);

/// Left-invertibility of (output_map, A, input_map) via the generic rank of
/// the Rosenbrock matrix P(lambda) = [[lambda I - A, -input_map],
/// [output_map, 0]]: true iff some sample of 8 deterministic complex lambda
/// drawn from the annulus 0.5 <= |lambda| <= 2 attains rank n + cols(input_map).
bool is_left_invertible(const StateSpaceSystem& sys, const Matrix& input_map,
                        const Matrix& output_map);

namespace detail {

/// Zero threshold used by relative-degree and condition checks:
/// rel_tol * (1 + max-abs entry over the generating matrices).
double zero_threshold(std::initializer_list<const Matrix*> generators,
                      double rel_tol);

bool is_zero_row(const Eigen::RowVectorXd& row, double threshold);

}  // namespace detail
}  // namespace covertctl
