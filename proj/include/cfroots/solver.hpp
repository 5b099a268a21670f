#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cfroots/mobius.hpp"
#include "cfroots/poly.hpp"

namespace cfroots {

struct SolverConfig {
  // Positive lower bounds at or above this value trigger the scaling
  // X -> bX instead of a shift; must be a power of two >= 2.
  unsigned homothety_threshold = 16;
  // Descend into the (0, 1) branch only when the sign variations strictly
  // drop across the shift by one.
  bool budan_pruning = true;
  // Record per-quotient bitsizes (counters are always kept).
  bool collect_stats = true;
  // 0 selects the default guard 1024 (d^2 + d tau + 16).
  std::uint64_t node_ceiling = 0;
};

struct SolverStats {
  std::uint64_t node_count = 0;
  std::uint64_t shift_count = 0;
  std::uint64_t homothety_count = 0;
  std::size_t max_coeff_bits = 0;
  std::vector<std::uint32_t> partial_quotient_bits;

  void merge(const SolverStats& other);
  double mean_partial_quotient_bits() const;
};

struct IsolatingInterval {
  enum class Kind { point, open };

  Kind kind = Kind::point;
  Rational lo;
  Rational hi;  // equals lo for points
  int multiplicity = 1;

  static IsolatingInterval point_at(Rational p, int multiplicity = 1);
  static IsolatingInterval open_between(Rational lo, Rational hi, int multiplicity = 1);

  bool is_point() const { return kind == Kind::point; }
  bool operator==(const IsolatingInterval&) const = default;
};

struct IsolationReport {
  std::vector<IsolatingInterval> intervals;  // ascending, pairwise disjoint
  SolverStats stats;
  IntPoly square_free_used;
};

// The node-count guard fired; thrown before runaway growth on
// non-square-free input.
class NodeCeilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using IsolationResult = std::pair<std::vector<IsolatingInterval>, SolverStats>;

// Roots of the (square-free) polynomial inside M((0, inf)). Intervals carry
// multiplicity 1.
IsolationResult isolate_positive(const IntPoly& a, const MobiusMap& m,
                                 const SolverConfig& cfg = {});

// All real roots of a square-free polynomial: zero roots are deflated and
// reported as the point 0, negative roots handled through X -> -X.
IsolationResult isolate_real(const IntPoly& a, const SolverConfig& cfg = {});

// Full pipeline for arbitrary nonzero input of degree >= 1: square-free
// preprocessing, real-root isolation, multiplicity recovery.
IsolationReport isolate_all(const IntPoly& a_in, const SolverConfig& cfg = {});

// Assigns each interval the multiplicity of the unique Yun factor holding
// its root; throws std::logic_error when no or several factors match.
void attach_multiplicities(std::vector<IsolatingInterval>& intervals,
                           const std::vector<YunFactor>& factors);

}  // namespace cfroots
