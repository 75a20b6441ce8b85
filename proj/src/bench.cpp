#include "quadform/bench.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <utility>

#include "quadform/solvers.hpp"

namespace quadform {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) from the top 53 bits.  Hand-rolled instead of
  // uniform_real_distribution because the latter is implementation-defined
  // and the benchmark promises bit-identical output for a fixed seed.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1p-53; }

  double range(double lo, double hi) { return lo + unit() * (hi - lo); }

  double sign() { return (gen_() & 1u) ? -1.0 : 1.0; }

  double signed_range(double lo, double hi) { return sign() * range(lo, hi); }

 private:
  std::mt19937_64 gen_;
};

Quadratic make_instance(const BenchFamily& family, Sampler& rng) {
  switch (family.name) {
    case BenchFamilyName::cancellation_small_root: {
      const double eps = family.parameter;
      return Quadratic{Complex(1.0), Complex(-(1.0 + eps)), Complex(eps)};
    }
    case BenchFamilyName::near_double: {
      const double r = 1.0 + family.parameter;
      return Quadratic{Complex(1.0), Complex(-2.0 * r), Complex(r * r)};
    }
    case BenchFamilyName::large_b:
      return Quadratic{Complex(rng.signed_range(0.5, 2.0)),
                       Complex(rng.sign() / family.parameter),
                       Complex(rng.signed_range(0.5, 2.0))};
    case BenchFamilyName::random_complex:
      return Quadratic{
          Complex(rng.signed_range(0.25, 1.0), rng.range(-1.0, 1.0)),
          Complex(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)),
          Complex(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0))};
    case BenchFamilyName::random_real:
      return Quadratic{Complex(rng.signed_range(0.25, 1.0)),
                       Complex(rng.range(-2.0, 2.0)),
                       Complex(rng.range(-2.0, 2.0))};
  }
  throw SolveError(ErrorKind::domain, "run_bench: unknown family");
}

// The combined tanh/tan method: negate an all-real equation into a > 0 first,
// then whichever parametrization admits the input.
RootPair dispatch_trig_hyp(const Quadratic& eq_in) {
  Quadratic eq = eq_in;
  const bool real_coeffs = eq.a.imag() == 0.0 && eq.b.imag() == 0.0 &&
                           eq.c.imag() == 0.0;
  if (real_coeffs && eq.a.real() < 0.0) {
    eq = Quadratic{-eq.a, -eq.b, -eq.c};
  }
  try {
    return solve_hyperbolic(eq);
  } catch (const SolveError& err) {
    if (err.kind() != ErrorKind::not_applicable) {
      throw;
    }
  }
  return solve_trigonometric(eq);
}

RootPair apply_method(BenchMethod m, const Quadratic& eq) {
  switch (m) {
    case BenchMethod::classical:
      return solve_classical(eq);
    case BenchMethod::reciprocal:
      return solve_reciprocal(eq);
    case BenchMethod::alternative:
      return solve_alternative(to_uv(eq));
    case BenchMethod::robust:
      return solve_robust(eq);
    case BenchMethod::trig_hyp:
      return dispatch_trig_hyp(eq);
  }
  throw SolveError(ErrorKind::domain, "run_bench: unknown method");
}

double rel_err(Complex candidate, Complex oracle) {
  return std::abs(candidate - oracle) / std::max(std::abs(oracle), 1e-300);
}

struct OrderedOracle {
  Complex small, large;
};

OrderedOracle order_oracle(const RootPair& o) {
  if (std::abs(o.x1) <= std::abs(o.x2)) {
    return {o.x1, o.x2};
  }
  return {o.x2, o.x1};
}

// Pair the unordered candidate roots with the oracle roots so that the total
// relative error is minimal, then report (error at small, error at large).
std::pair<double, double> matched_errors(const RootPair& cand,
                                         const OrderedOracle& oracle) {
  const double direct_small = rel_err(cand.x1, oracle.small);
  const double direct_large = rel_err(cand.x2, oracle.large);
  const double swapped_small = rel_err(cand.x2, oracle.small);
  const double swapped_large = rel_err(cand.x1, oracle.large);
  if (direct_small + direct_large <= swapped_small + swapped_large) {
    return {direct_small, direct_large};
  }
  return {swapped_small, swapped_large};
}

bool needs_parameter(BenchFamilyName name) {
  return name == BenchFamilyName::cancellation_small_root ||
         name == BenchFamilyName::near_double ||
         name == BenchFamilyName::large_b;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchFamily& family,
                                   const std::vector<BenchMethod>& methods) {
  if (family.count < 1) {
    throw SolveError(ErrorKind::domain, "run_bench: count must be >= 1");
  }
  if (needs_parameter(family.name) && !(family.parameter > 0.0)) {
    throw SolveError(ErrorKind::domain,
                     "run_bench: this family needs parameter > 0");
  }
  Sampler rng(family.seed);
  std::vector<BenchRecord> out;
  out.reserve(static_cast<std::size_t>(family.count) * methods.size() * 2);
  for (int id = 0; id < family.count; ++id) {
    const Quadratic eq = make_instance(family, rng);
    const OrderedOracle oracle = order_oracle(oracle_solve(eq, kOracleBits));
    for (BenchMethod m : methods) {
      BenchRecord rec;
      rec.family = family.name;
      rec.instance_id = id;
      rec.method = m;
      rec.oracle_precision_bits = kOracleBits;
      std::optional<double> err_small, err_large;
      try {
        const auto [e_small, e_large] = matched_errors(apply_method(m, eq), oracle);
        err_small = e_small;
        err_large = e_large;
      } catch (const SolveError&) {
        // Method not applicable to this instance; that is data, not a failure.
      }
      rec.root_index = RootIndex::small;
      rec.rel_error = err_small;
      out.push_back(rec);
      rec.root_index = RootIndex::large;
      rec.rel_error = err_large;
      out.push_back(rec);
    }
  }
  return out;
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "family,instance_id,method,root_index,rel_error,oracle_precision_bits\n";
  char buf[40];
  for (const BenchRecord& r : records) {
    os << to_string(r.family) << ',' << r.instance_id << ','
       << to_string(r.method) << ',' << to_string(r.root_index) << ',';
    if (r.rel_error) {
      std::snprintf(buf, sizeof buf, "%.17g", *r.rel_error);
      os << buf;
    } else {
      os << "NA";
    }
    os << ',' << r.oracle_precision_bits << '\n';
  }
}

const char* to_string(BenchMethod m) noexcept {
  switch (m) {
    case BenchMethod::classical:
      return "classical";
    case BenchMethod::reciprocal:
      return "reciprocal";
    case BenchMethod::alternative:
      return "alternative";
    case BenchMethod::robust:
      return "robust";
    case BenchMethod::trig_hyp:
      return "trig_hyp";
  }
  return "unknown";
}

const char* to_string(BenchFamilyName f) noexcept {
  switch (f) {
    case BenchFamilyName::cancellation_small_root:
      return "cancellation_small_root";
    case BenchFamilyName::near_double:
      return "near_double";
    case BenchFamilyName::large_b:
      return "large_b";
    case BenchFamilyName::random_complex:
      return "random_complex";
    case BenchFamilyName::random_real:
      return "random_real";
  }
  return "unknown";
}

const char* to_string(RootIndex r) noexcept {
  return r == RootIndex::small ? "small" : "large";
}

bool parse_method(std::string_view text, BenchMethod& out) noexcept {
  for (BenchMethod m : kAllBenchMethods) {
    if (text == to_string(m)) {
      out = m;
      return true;
    }
  }
  return false;
}

bool parse_family(std::string_view text, BenchFamilyName& out) noexcept {
  for (BenchFamilyName f :
       {BenchFamilyName::cancellation_small_root, BenchFamilyName::near_double,
        BenchFamilyName::large_b, BenchFamilyName::random_complex,
        BenchFamilyName::random_real}) {
    if (text == to_string(f)) {
      out = f;
      return true;
    }
  }
  return false;
}

}  // namespace quadform
