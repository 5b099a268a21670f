#include "cfroots/solver.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cfroots/bounds.hpp"

namespace cfroots {

namespace {

unsigned long validated_threshold_exponent(const SolverConfig& cfg) {
  const unsigned t = cfg.homothety_threshold;
  if (t < 2 || (t & (t - 1)) != 0)
    throw std::invalid_argument("SolverConfig: homothety_threshold must be a power of two >= 2");
  return static_cast<unsigned long>(std::countr_zero(t));
}

std::uint64_t ceiling_for(const IntPoly& a, const SolverConfig& cfg) {
  if (cfg.node_ceiling != 0) return cfg.node_ceiling;
  const std::uint64_t d = static_cast<std::uint64_t>(a.degree());
  const std::uint64_t tau = a.max_coeff_bits();
  return 1024 * (d * d + d * tau + 16);
}

bool comes_before(const IsolatingInterval& a, const IsolatingInterval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.hi < b.hi;
}

struct Frame {
  IntPoly a;
  MobiusMap map;
  BigInt pending;   // partial quotient accumulated since the last inversion
  bool dirty_zero;  // image(map, 0) is an already-reported root
  bool dirty_inf;   // image(map, inf) is finite and an already-reported root
};

class CfRun {
 public:
  CfRun(const SolverConfig& cfg, std::uint64_t ceiling,
        std::vector<IsolatingInterval>& out, SolverStats& stats)
      : cfg_(cfg),
        threshold_exponent_(validated_threshold_exponent(cfg)),
        ceiling_(ceiling),
        out_(out),
        stats_(stats) {}

  void run(IntPoly a, MobiusMap map, bool dirty_zero) {
    std::vector<Frame> stack;
    stack.push_back(Frame{std::move(a), std::move(map), BigInt(0), dirty_zero, false});
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      process(std::move(f), stack);
    }
  }

 private:
  void process(Frame f, std::vector<Frame>& stack) {
    ++stats_.node_count;
    if (stats_.node_count > ceiling_) {
      throw NodeCeilingError(
          "node ceiling " + std::to_string(ceiling_) +
          " exceeded; the input is probably not square-free");
    }
    note_bits(f.a);

    // Root at the node origin.
    if (f.a.coeff(0) == 0) deflate_and_report(f);

    int variations = f.a.degree() == 0 ? 0 : sign_variations(f.a);
    if (variations == 0) return;

    if (variations == 1) {
      const bool lo_dirty = f.dirty_zero;
      const bool hi_dirty = f.dirty_inf && f.map.m() != 0;
      if (!lo_dirty && !hi_dirty) {
        emit_open(f);
        return;
      }
      // An endpoint would land on an already-reported root: keep expanding
      // the continued fraction until the offending convergent moves away.
    }

    // Positive lower bound: scale while large, then shift once.
    long exponent = positive_lower_bound(f.a).exponent();
    while (exponent >= static_cast<long>(threshold_exponent_)) {
      f.a = homothety_pow2(f.a, static_cast<unsigned long>(exponent));
      f.map = f.map.compose_homothety_pow2(static_cast<unsigned long>(exponent));
      ++stats_.homothety_count;
      note_bits(f.a);
      exponent = positive_lower_bound(f.a).exponent();
    }
    if (exponent >= 1) {
      const BigInt b = pow2_bigint(static_cast<unsigned long>(exponent));
      f.a = taylor_shift(f.a, b);
      f.map = f.map.compose_shift(b);
      ++stats_.shift_count;
      f.pending += b;
      f.dirty_zero = false;
      note_bits(f.a);
      if (f.a.coeff(0) == 0) deflate_and_report(f);  // the bound hit a root
      if (f.a.degree() == 0 || sign_variations(f.a) == 0) return;
    }

    // (1, inf) through X -> 1 + X and, when Budan's theorem allows roots
    // there, (0, 1) through X -> 1/(1+X).
    IntPoly a1 = taylor_shift(f.a, 1);
    ++stats_.shift_count;
    const bool descend_unit =
        !cfg_.budan_pruning || sign_variations(a1) < sign_variations(f.a);
    if (descend_unit) {
      IntPoly a2 = invert_unit(f.a);
      ++stats_.shift_count;
      bool boundary_root = false;
      if (a2.coeff(0) == 0) {
        // Root at the local point 1; it belongs to the (1, inf) child,
        // which sees it as its own origin.
        a2 = deflate_zero_roots(a2).first;
        boundary_root = true;
      }
      record_quotient(f.pending);
      stack.push_back(Frame{std::move(a2), f.map.compose_invert_unit(), BigInt(1),
                            boundary_root, f.dirty_zero});
    }
    stack.push_back(Frame{std::move(a1), f.map.compose_shift(1), f.pending + 1,
                          false, f.dirty_inf});
  }

  void deflate_and_report(Frame& f) {
    f.a = deflate_zero_roots(f.a).first;
    out_.push_back(IsolatingInterval::point_at(f.map.image(Rational(0)).value()));
    record_quotient(f.pending);
    f.dirty_zero = true;
  }

  void emit_open(const Frame& f) {
    Pow2Bound upper = positive_root_upper_bound(f.a);
    Rational fallback = upper.value();
    while (evaluate_sign(f.a, fallback) == Sign::zero) fallback *= 2;
    auto [lo, hi] = f.map.to_interval(fallback);
    out_.push_back(IsolatingInterval::open_between(std::move(lo), std::move(hi)));
    record_quotient(f.pending);
  }

  void record_quotient(const BigInt& pending) {
    if (!cfg_.collect_stats) return;
    stats_.partial_quotient_bits.push_back(
        static_cast<std::uint32_t>(bit_length(pending)));
  }

  void note_bits(const IntPoly& a) {
    stats_.max_coeff_bits = std::max(stats_.max_coeff_bits, a.max_coeff_bits());
  }

  const SolverConfig& cfg_;
  unsigned long threshold_exponent_;
  std::uint64_t ceiling_;
  std::vector<IsolatingInterval>& out_;
  SolverStats& stats_;
};

}  // namespace

void SolverStats::merge(const SolverStats& other) {
  node_count += other.node_count;
  shift_count += other.shift_count;
  homothety_count += other.homothety_count;
  max_coeff_bits = std::max(max_coeff_bits, other.max_coeff_bits);
  partial_quotient_bits.insert(partial_quotient_bits.end(),
                               other.partial_quotient_bits.begin(),
                               other.partial_quotient_bits.end());
}

double SolverStats::mean_partial_quotient_bits() const {
  if (partial_quotient_bits.empty()) return 0.0;
  double sum = 0.0;
  for (std::uint32_t b : partial_quotient_bits) sum += b;
  return sum / static_cast<double>(partial_quotient_bits.size());
}

IsolatingInterval IsolatingInterval::point_at(Rational p, int multiplicity) {
  IsolatingInterval iv;
  iv.kind = Kind::point;
  iv.lo = p;
  iv.hi = std::move(p);
  iv.multiplicity = multiplicity;
  return iv;
}

IsolatingInterval IsolatingInterval::open_between(Rational lo, Rational hi,
                                                  int multiplicity) {
  IsolatingInterval iv;
  iv.kind = Kind::open;
  iv.lo = std::move(lo);
  iv.hi = std::move(hi);
  iv.multiplicity = multiplicity;
  return iv;
}

IsolationResult isolate_positive(const IntPoly& a, const MobiusMap& m,
                                 const SolverConfig& cfg) {
  if (a.is_zero() || a.degree() < 1)
    throw std::invalid_argument("isolate_positive: degree >= 1 required");
  std::vector<IsolatingInterval> out;
  SolverStats stats;
  CfRun engine(cfg, ceiling_for(a, cfg), out, stats);
  engine.run(a, m, false);
  std::sort(out.begin(), out.end(), comes_before);
  return {std::move(out), std::move(stats)};
}

IsolationResult isolate_real(const IntPoly& a, const SolverConfig& cfg) {
  if (a.is_zero()) throw std::invalid_argument("isolate_real: zero polynomial");
  std::vector<IsolatingInterval> out;
  SolverStats stats;
  if (a.degree() == 0) return {std::move(out), std::move(stats)};

  auto [b, zero_mult] = deflate_zero_roots(a);
  if (zero_mult > 0) out.push_back(IsolatingInterval::point_at(Rational(0)));

  if (b.degree() >= 1) {
    const std::uint64_t ceiling = ceiling_for(a, cfg);
    CfRun positive(cfg, ceiling, out, stats);
    positive.run(b, MobiusMap::identity(), zero_mult > 0);

    std::vector<IsolatingInterval> mirrored;
    CfRun negative(cfg, ceiling, mirrored, stats);
    negative.run(negate_variable(b), MobiusMap::identity(), zero_mult > 0);
    for (IsolatingInterval& iv : mirrored) {
      if (iv.is_point()) {
        out.push_back(IsolatingInterval::point_at(-iv.lo));
      } else {
        out.push_back(IsolatingInterval::open_between(-iv.hi, -iv.lo));
      }
    }
  }
  std::sort(out.begin(), out.end(), comes_before);
  return {std::move(out), std::move(stats)};
}

IsolationReport isolate_all(const IntPoly& a_in, const SolverConfig& cfg) {
  if (a_in.is_zero() || a_in.degree() < 1)
    throw std::invalid_argument("isolate_all: degree >= 1 required");
  IsolationReport report;
  report.square_free_used = square_free_part(a_in);
  auto [intervals, stats] = isolate_real(report.square_free_used, cfg);
  attach_multiplicities(intervals, yun_square_free_factorization(a_in));
  report.intervals = std::move(intervals);
  report.stats = std::move(stats);
  return report;
}

void attach_multiplicities(std::vector<IsolatingInterval>& intervals,
                           const std::vector<YunFactor>& factors) {
  for (IsolatingInterval& iv : intervals) {
    int matches = 0;
    int multiplicity = 0;
    for (const YunFactor& f : factors) {
      const bool match =
          iv.is_point()
              ? evaluate_sign(f.factor, iv.lo) == Sign::zero
              : sign_int(evaluate_sign(f.factor, iv.lo)) *
                        sign_int(evaluate_sign(f.factor, iv.hi)) <
                    0;
      if (match) {
        ++matches;
        multiplicity = f.multiplicity;
      }
    }
    if (matches != 1)
      throw std::logic_error(
          "attach_multiplicities: expected exactly one matching factor, found " +
          std::to_string(matches));
    iv.multiplicity = multiplicity;
  }
}

}  // namespace cfroots
