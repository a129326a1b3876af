#include "covertctl/lti.hpp"

#include "covertctl/attack.hpp"
#include "covertctl/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace covertctl {

namespace {

void require_finite(const Matrix& M, const char* name) {
  if (!M.allFinite()) {
    throw ValidationError(std::string("matrix ") + name +
                          " contains NaN or Inf entries");
  }
}

}  // namespace

StateSpaceSystem::StateSpaceSystem(Matrix A, Matrix B, Matrix C,
                                   double sample_period)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)),
      sample_period_(sample_period) {
  if (A_.rows() != A_.cols()) {
    throw DimensionError("A must be square, got " + std::to_string(A_.rows()) +
                         "x" + std::to_string(A_.cols()));
  }
  if (B_.rows() != A_.rows() || B_.cols() < 1) {
    throw DimensionError("B must be n x m with m >= 1, got " +
                         std::to_string(B_.rows()) + "x" +
                         std::to_string(B_.cols()) + " for n = " +
                         std::to_string(A_.rows()));
  }
  if (C_.cols() != A_.rows() || C_.rows() < 1) {
    throw DimensionError("C must be p x n with p >= 1, got " +
                         std::to_string(C_.rows()) + "x" +
                         std::to_string(C_.cols()) + " for n = " +
                         std::to_string(A_.rows()));
  }
  require_finite(A_, "A");
  require_finite(B_, "B");
  require_finite(C_, "C");
  if (!(sample_period_ > 0.0) || !std::isfinite(sample_period_)) {
    throw ValidationError("sample_period must be positive and finite");
  }
}

std::optional<int> RelativeDegreeProfile::minimum() const {
  std::optional<int> min;
  for (const auto& r : per_output) {
    if (r && (!min || *r < *min)) min = r;
  }
  return min;
}

std::string RelativeDegreeProfile::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t q = 0; q < per_output.size(); ++q) {
    if (q) out << ", ";
    if (per_output[q]) {
      out << *per_output[q];
    } else {
      out << "inf";
    }
  }
  out << "]";
  return out.str();
}

namespace detail {

double zero_threshold(std::initializer_list<const Matrix*> generators,
                      double rel_tol) {
  double scale = 0.0;
  for (const Matrix* M : generators) {
    if (M->size() > 0) scale = std::max(scale, M->cwiseAbs().maxCoeff());
  }
  return rel_tol * (1.0 + scale);
}

bool is_zero_row(const Eigen::RowVectorXd& row, double threshold) {
  return row.size() == 0 || row.cwiseAbs().maxCoeff() <= threshold;
}

}  // namespace detail

Matrix markov_parameter(const StateSpaceSystem& sys, const Matrix& input_map,
                        int power) {
  if (input_map.rows() != sys.n()) {
    throw DimensionError("input_map must have n = " + std::to_string(sys.n()) +
                         " rows, got " + std::to_string(input_map.rows()));
  }
  if (power < 0) throw ValidationError("power must be nonnegative");
  Matrix M = input_map;
  for (int i = 0; i < power; ++i) M = sys.A() * M;
  return sys.C() * M;
}

RelativeDegreeProfile relative_degree(const StateSpaceSystem& sys,
                                      const Matrix& input_map,
                                      const std::optional<Matrix>& feedthrough,
                                      double rel_tol) {
  if (input_map.rows() != sys.n()) {
    throw DimensionError("input_map must have n rows");
  }
  if (feedthrough &&
      (feedthrough->rows() != sys.p() ||
       feedthrough->cols() != input_map.cols())) {
    throw DimensionError("feedthrough must be p x cols(input_map)");
  }
  // The definition searches powers of A only; a direct feedthrough never
  // shortens the degree.
  const double threshold =
      detail::zero_threshold({&sys.A(), &sys.C(), &input_map}, rel_tol);

  RelativeDegreeProfile profile;
  profile.per_output.assign(sys.p(), std::nullopt);
  Matrix M = input_map;  // A^{i-1} * input_map at iteration i
  int undecided = sys.p();
  for (int i = 1; i <= sys.n() && undecided > 0; ++i) {
    const Matrix markov = sys.C() * M;
    for (int q = 0; q < sys.p(); ++q) {
      if (!profile.per_output[q] &&
          !detail::is_zero_row(markov.row(q), threshold)) {
        profile.per_output[q] = i;
        --undecided;
      }
    }
    if (i < sys.n()) M = sys.A() * M;
  }
  return profile;
}

StackedIOMatrices build_stacked_io(const StateSpaceSystem& sys,
                                   const AttackScenario& scenario, int window) {
  if (scenario.m() != sys.m() || scenario.p() != sys.p()) {
    throw DimensionError("scenario channel counts do not match the system");
  }
  if (window < sys.n()) {
    throw WindowTooSmallError("window N = " + std::to_string(window) +
                              " is smaller than the state dimension n = " +
                              std::to_string(sys.n()));
  }
  const int n = sys.n(), m = sys.m(), p = sys.p();
  const int ma = scenario.num_attacked_inputs();
  const int pa = scenario.num_attacked_outputs();
  const Matrix B_a = sys.B() * scenario.L_a();

  StackedIOMatrices io;
  io.window = window;
  io.observability.resize(window * p, n);
  io.input_toeplitz = Matrix::Zero(window * p, window * m);
  io.attack_toeplitz = Matrix::Zero(window * p, window * ma);
  io.sensor_block = Matrix::Zero(window * p, window * pa);

  Matrix CA = sys.C();  // C A^i at row block i
  for (int i = 0; i < window; ++i) {
    io.observability.middleRows(i * p, p) = CA;
    if (i + 1 < window) CA = CA * sys.A();
  }

  // Block (i, j) of the Toeplitz factors equals C A^{i-j-1} {B, B_a} below
  // the diagonal; one extra multiplication per sub-diagonal.
  Matrix powerB = sys.B();  // A^{d-1} B on sub-diagonal d
  Matrix powerBa = B_a;
  for (int diag = 1; diag < window; ++diag) {
    const Matrix markovB = sys.C() * powerB;
    const Matrix markovBa = ma > 0 ? Matrix(sys.C() * powerBa) : Matrix();
    for (int j = 0; j + diag < window; ++j) {
      const int i = j + diag;
      io.input_toeplitz.block(i * p, j * m, p, m) = markovB;
      if (ma > 0) io.attack_toeplitz.block(i * p, j * ma, p, ma) = markovBa;
    }
    if (diag + 1 < window) {
      powerB = sys.A() * powerB;
      if (ma > 0) powerBa = sys.A() * powerBa;
    }
  }

  for (int i = 0; i < window && pa > 0; ++i) {
    io.sensor_block.block(i * p, i * pa, p, pa) = scenario.D_a();
  }
  return io;
}

int numerical_rank(const Matrix& M, double rel_tol) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(M);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) <= 0.0) return 0;
  const double threshold = rel_tol * sigma(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold) ++rank;
  }
  return rank;
}

bool is_left_invertible(const StateSpaceSystem& sys, const Matrix& input_map,
                        const Matrix& output_map) {
  if (input_map.rows() != sys.n() || output_map.cols() != sys.n()) {
    throw DimensionError(
        "input_map needs n rows and output_map needs n columns");
  }
  const int n = sys.n();
  const int mt = static_cast<int>(input_map.cols());
  const int pt = static_cast<int>(output_map.rows());
  const int expected_rank = n + mt;
  if (expected_rank > n + pt) return false;  // fat system, rank bound

  // Deterministic lambda samples from the annulus 0.5 <= |lambda| <= 2; the
  // rank deficit happens only at finitely many lambda, so one full-rank
  // sample certifies left-invertibility and eight misses certify the
  // opposite with overwhelming probability.
  constexpr int kSamples = 8;
  Rng rng(0x6C65667476ULL);
  using ComplexMatrix = Eigen::MatrixXcd;
  for (int s = 0; s < kSamples; ++s) {
    const double radius = std::sqrt(rng.uniform(0.25, 4.0));
    const double angle = rng.uniform(0.0, 2.0 * M_PI);
    const std::complex<double> lambda(radius * std::cos(angle),
                                      radius * std::sin(angle));
    ComplexMatrix P = ComplexMatrix::Zero(n + pt, n + mt);
    P.topLeftCorner(n, n) =
        lambda * ComplexMatrix::Identity(n, n) - sys.A().cast<std::complex<double>>();
    P.topRightCorner(n, mt) = -input_map.cast<std::complex<double>>();
    P.bottomLeftCorner(pt, n) = output_map.cast<std::complex<double>>();

    Eigen::JacobiSVD<ComplexMatrix> svd(P);
    const auto& sigma = svd.singularValues();
    if (sigma.size() < expected_rank) continue;
    if (sigma(expected_rank - 1) > kDefaultZeroTol * sigma(0)) return true;
  }
  return false;
}

}  // namespace covertctl
