#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resint/module.hpp"

namespace resint {

/// Graded free resolution ... -> F_2 -> F_1 -> F_0 over S. maps[i] holds the
/// columns of d_{i+1}: F_{i+1} -> F_i as elements of F_i.
struct FreeResolution {
  RingPtr ring;
  std::vector<std::vector<int>> degrees;
  std::vector<std::vector<TermList>> maps;
  /// Set when a degree cap cut the computation short.
  int max_degree = -1;

  FreeModule free_module(std::size_t i) const { return FreeModule(ring, degrees[i]); }
  /// Largest i with F_i nonzero; -1 for the zero module.
  int length() const;
  std::size_t rank(std::size_t i) const { return i < degrees.size() ? degrees[i].size() : 0; }
};

struct ResolutionOptions {
  /// Homological cap; negative means the number of variables.
  int max_length = -1;
  /// Internal degree cap; negative means none.
  int max_degree = -1;
};

/// Graded Betti numbers beta_{i,j}.
class BettiTable {
 public:
  void add(int i, int j, std::int64_t v);
  std::int64_t at(int i, int j) const;
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
  std::int64_t total(int i) const;
  /// Largest i with a nonzero entry; -1 when empty.
  int length() const;
  /// sum_{i,j} (-1)^i beta_{i,j} t^j
  TPoly alternating_sum() const;
  /// Column-aligned table: header of homological indices, a "total:" row, and
  /// one row per strand j - i with "." for zero.
  std::string to_text() const;
  bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }

 private:
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

/// Observer for every Schreyer resolution built in the process; `complete`
/// is false when a length or degree cap may have cut it short.
using ResolutionAudit = std::function<void(const GradedModule& M, const FreeResolution& res, bool complete)>;
/// Installs (or, with an empty function, removes) the observer.
void set_resolution_audit(ResolutionAudit hook);

/// Schreyer resolution, generally not minimal.
FreeResolution schreyer_resolution(const GradedModule& M, const ResolutionOptions& opts = {});
/// Cancels unit entries until every entry lies in the maximal ideal.
void prune(FreeResolution& res);
FreeResolution minimal_free_resolution(const GradedModule& M, const ResolutionOptions& opts = {});

BettiTable betti_table(const FreeResolution& res);
/// Betti numbers of a possibly non-minimal resolution: ranks minus the ranks
/// of the scalar parts of the differentials.
BettiTable minimal_betti_from_ranks(const FreeResolution& res);

/// Every composition d_i o d_{i+1} vanishes.
bool composes_to_zero(const FreeResolution& res);
/// No entry of any differential is a nonzero constant.
bool is_minimal(const FreeResolution& res);

/// Minimal presentation of M: redundant generators and relations removed.
GradedModule minimal_presentation(const GradedModule& M);

struct DepthInfo {
  int projective_dimension = -1;
  int depth = -1;
  int dimension = -1;
  bool cohen_macaulay = false;
};
/// Projective dimension from the minimal resolution and depth by the graded
/// Auslander-Buchsbaum formula.
DepthInfo depth_pd(const GradedModule& M);

struct LinearityReport {
  bool presentation = false;
  bool resolution = false;
  /// First homological index with a nonlinear entry; -1 when linear.
  int first_nonlinear_step = -1;
};
/// For a module generated in a single degree; throws otherwise.
LinearityReport linearity_check(const BettiTable& betti);

}  // namespace resint
