#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resint/homology.hpp"

namespace resint {

/// A polynomial ring together with the construction it was made for.
struct ScenarioRing {
  RingPtr ring;
  /// "generic", "custom" or "explicit"
  std::string kind = "explicit";
  int rows = 0, cols = 0;
  /// Dimension of the span of the matrix entries (matrix constructions).
  int entry_span = 0;
  std::vector<std::vector<Polynomial>> matrix;
};

/// Generic m x n matrix of variables. For m = 2 the variables are
/// x1..xn, y1..yn (rows x and y); otherwise x<i>_<j>.
ScenarioRing generic_matrix_ring(int m, int n, std::uint32_t p = 101);
/// Wraps a matrix of homogeneous linear forms; throws on other entries.
ScenarioRing custom_matrix_ring(RingPtr ring, std::vector<std::vector<Polynomial>> matrix);

/// Ideal of k x k minors, generated by Laplace expansions in row-major order
/// of (row subset, column subset), both lexicographic. Requires k <= m <= n.
Ideal matrix_minors(const ScenarioRing& sr, int k);
Ideal matrix_minors(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& A, int k);

/// Dimension of the k-span of the entries of a matrix.
int entry_span_dimension(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& A);

struct GeneralForms {
  Ideal ideal;
  /// coefficients[i][j]: weight of spanning element j in form i
  std::vector<std::vector<Scalar>> coefficients;
  std::size_t spanning_size = 0;
  std::uint64_t seed = 0;
};

/// `count` combinations of a spanning set of I_delta with nonzero random
/// coefficients drawn from a seeded generator. Throws when I_delta = 0.
GeneralForms general_forms(const Ideal& I, int count, int delta, std::uint64_t seed);

/// dim k[I_delta], by eliminating x from (T_i - g_i) and taking the dimension
/// of the result in k[T]. I must be generated in the single degree delta.
int analytic_spread(const Ideal& I);

struct ReductionResult {
  int r = -1;
  Ideal J;
  std::uint64_t seed = 0;
  int attempts = 0;
};

/// Smallest r with I^{r+1} = J I^r for J generated by ell general forms;
/// equality of these equigenerated ideals is tested in degree (r+1) delta.
/// Draws a fresh J (new seed) when none works up to r_max, at most
/// `retries` times, then throws std::runtime_error.
ReductionResult reduction_number(const Ideal& I, int ell, std::uint64_t seed, int r_max = 6, int retries = 3);

/// State of one residual intersection run.
struct PipelineState {
  Ideal I;
  int delta = 0;
  int ell = -1;
  int r = -1;
  int s = 0;
  std::uint64_t seed = 0;
  Ideal J;
  Ideal K;  ///< J : I, defines R
  Ideal H;  ///< J : I^infinity, defines the ring R-bar
  int epsilon = -1;
  int codim_I = -1;
  int codim_K = -1;
  int codim_I_plus_K = -1;
  bool residual = false;   ///< codim K >= s
  bool geometric = false;  ///< additionally codim(I + K) > s
  /// Stable power module and its data, once computed.
  std::optional<GradedModule> M;
  int rho = -1;
  int stabilization_index = -1;
  int attempts = 1;
};

struct ResidualOptions {
  int retries = 3;
  /// Skip J : I^infinity (the ring R-bar) when false.
  bool saturate = true;
};

/// Builds J from s general forms of degree delta, K = J : I and H = J : I^oo,
/// and certifies the residual and geometric conditions. A J that comes out
/// zero is redrawn with seed + attempt.
PipelineState residual_intersection(const Ideal& I, int s, std::uint64_t seed, const ResidualOptions& opts = {});

/// (I^rho / J I^{rho-1})(rho delta), generated in degree 0, as a presented module.
GradedModule power_quotient_module(const Ideal& I, const Ideal& J, int rho);

struct StabilizationResult {
  int index = -1;  ///< smallest rho in [1, rho_max] where a-multiplication is an isomorphism
  std::vector<std::string> log;
};
/// Multiplication by a general degree-delta form a from (I^rho/JI^{rho-1})(rho delta)
/// to the next power: onto when I^{rho+1} = a I^rho + J I^rho, and an isomorphism
/// when, in addition, both sides have the same Hilbert series.
StabilizationResult stabilization_index(const PipelineState& st, int rho_max, std::uint64_t seed);

/// Sets st.M for rho (default max(r, 1)); verifies stabilization up to rho_max
/// (default r + 3) when `verify` is set.
void stable_power_module(PipelineState& st, std::optional<int> rho = std::nullopt, bool verify = true,
                         std::optional<int> rho_max = std::nullopt);

enum class CheckStatus { Pass, Fail, Unknown, Skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Unknown;
  std::string detail;
};

/// Iso probe of A against B(k) for the shift k aligning their lowest generator degrees.
struct ShiftedIso {
  IsoResult iso;
  int shift = 0;
};
ShiftedIso iso_up_to_shift(const GradedModule& A, const GradedModule& B, int trials, std::uint64_t seed);

struct SelfDualityOptions {
  int trials = 8;
  bool endomorphisms = true;
  bool conductor = true;
  /// Shift k for the probe M = omega_R(k); unset skips it.
  std::optional<int> omega_shift;
};

/// Linearity, depth and MCM status over R and R-bar, self-duality of M,
/// End(M) = M, the Ulrich property and the conductor of R-bar.
std::vector<CheckResult> self_duality_report(const PipelineState& st, const SelfDualityOptions& opts = {},
                                             std::uint64_t seed = 1);

/// G_s for the maximal minors of a generic m x n matrix: C(n-t, m-t) <= (m-t)(n-t)
/// whenever (m-t)(n-t) <= s-1.
bool g_condition_check(int m, int n, int s);
/// Codimension of I_{t+1} of the generic m x n matrix, computed.
int generic_minor_codimension(int m, int n, int size);

/// Degree of the Grassmannian G(2, n): (1/(n-1)) C(2n-4, n-2).
std::int64_t grassmannian_degree(int n);

}  // namespace resint
