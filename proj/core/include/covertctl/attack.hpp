#pragma once

#include "covertctl/lti.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace covertctl {

/// Compromised input/output channel sets and their selection matrices.
/// Channel indices are 1-based throughout (matching report and file formats).
class AttackScenario {
 public:
  /// `inputs` within {1..m}, `outputs` within {1..p}, no duplicates.
  AttackScenario(int m, int p, std::vector<int> inputs,
                 std::vector<int> outputs);

  int m() const { return m_; }
  int p() const { return p_; }
  int num_attacked_inputs() const { return static_cast<int>(inputs_.size()); }
  int num_attacked_outputs() const { return static_cast<int>(outputs_.size()); }

  const std::vector<int>& compromised_inputs() const { return inputs_; }
  const std::vector<int>& compromised_outputs() const { return outputs_; }
  bool input_compromised(int index_1based) const;
  bool output_compromised(int index_1based) const;

  /// m x m_a input selection matrix (columns are standard basis vectors).
  const Matrix& L_a() const { return L_a_; }
  /// p x p_a output selection matrix.
  const Matrix& D_a() const { return D_a_; }
  /// p x p diagonal 0/1 matrix D_a D_a^T.
  const Matrix& D_a_star() const { return D_a_star_; }

 private:
  int m_, p_;
  std::vector<int> inputs_, outputs_;
  Matrix L_a_, D_a_, D_a_star_;
};

AttackScenario make_scenario(int m, int p, const std::vector<int>& inputs,
                             const std::vector<int>& outputs);

enum class AttackKind { kArbitraryCovert, kDesignedCovert };

/// Actuator/sensor attack signal pair over a horizon. Sensor entries before
/// the minimum relative degree are exactly zero.
struct AttackSignalPlan {
  int horizon = 0;
  std::vector<Vector> actuator_signal;  // m_a-vectors
  std::vector<Vector> sensor_signal;    // p_a-vectors
  AttackKind kind = AttackKind::kArbitraryCovert;
};

struct FeasibilityReport {
  /// Covertness achievable for any actuator signal (relative-degree test).
  bool feasible_arbitrary = false;
  /// First output with finite relative degree not covered by a compromised
  /// sensor (1-based); present only when feasible_arbitrary is false.
  std::optional<int> witness_output;
  /// A specifically designed actuator signal can stay covert even though the
  /// arbitrary-signal test fails (left-invertibility failure of the
  /// uncompromised-output triple).
  bool feasible_designed = false;
  /// Relative degrees of (C, A, B L_a).
  RelativeDegreeProfile per_output_relative_degrees;
  /// Outputs that must be compromised for arbitrary covertness (1-based):
  /// exactly those with finite relative degree.
  std::vector<int> required_sensors;
  /// The attack channels reach no output at all (every degree infinite);
  /// covert with an empty sensor set, flagged because the sensor signal is
  /// identically zero.
  bool attack_decoupled = false;
};

/// Decides covert feasibility for the scenario.
///
/// Arbitrary-signal covertness holds iff every output with a finite relative
/// degree w.r.t. B_a = B L_a is a compromised sensor. This is the row-wise
/// equality C_q A^{r-1} B_a = (D_a* C)_q A^{r-1} B_a specialized to the 0/1
/// diagonal D_a*: rows with q in S_a are always equal, and rows outside S_a
/// are equal only when C_q A^{r-1} B_a = 0, contradicting finiteness of r.
/// Requires at least one compromised input.
FeasibilityReport check_covert_feasibility(const StateSpaceSystem& sys,
                                           const AttackScenario& scenario);

/// Sensor signal cancelling the given actuator signal on the compromised
/// sensors:
///   a_y(k) = -D_a^T C A^{r-1+g} B_a a_u(k-g-r) summed over g >= 0, k >= r,
/// evaluated incrementally through the running state z(k+1) = A z(k) +
/// B (L_a a_u(k)), a_y(k) = -D_a^T (C z(k)); entries before r are exactly
/// zero. The recursion reuses the simulator's step kernel so that the
/// cancellation in a noiseless zero-input run is exact.
AttackSignalPlan synthesize_covert_attack(const StateSpaceSystem& sys,
                                          const AttackScenario& scenario,
                                          const std::vector<Vector>& actuator_signal,
                                          int horizon);

struct DesignedAttackOptions {
  /// Relative singular-value threshold classifying the null space.
  double null_space_tol = 1e-11;
  /// Residual bound (relative to the probe scale) the returned signal must
  /// achieve on the uncompromised stacked outputs.
  double residual_tol = 1e-9;
};

/// Actuator sequence in the output-zeroing input space of the uncompromised
/// outputs ((I - D_a*) C, A, B L_a), paired with the cancelling sensor
/// signal on the compromised sensors. The stacked map is extended by n
/// zero-input tail rows so the zero-padded sequence stays output-zeroing
/// beyond the window (Cayley-Hamilton). The returned element is the
/// null-space projection of an all-ones probe, normalized to unit max-abs
/// entry; when the projection degenerates, the singular vector of the
/// smallest singular value is used instead.
AttackSignalPlan synthesize_designed_attack(
    const StateSpaceSystem& sys, const AttackScenario& scenario, int horizon,
    const DesignedAttackOptions& options = {});

/// Shared plant-step kernel: A x + B u_total + w. Both the simulator and the
/// covert-attack synthesis use this exact expression so their state
/// recursions agree bit-for-bit on identical inputs.
Vector plant_step(const Matrix& A, const Matrix& B, const Vector& x,
                  const Vector& u_total, const Vector& w);

}  // namespace covertctl
