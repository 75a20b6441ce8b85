#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "quadform/forms.hpp"

namespace quadform {

enum class BenchMethod { classical, reciprocal, alternative, robust, trig_hyp };

enum class BenchFamilyName {
  cancellation_small_root,  // (1, -(1+eps), eps), exact roots {1, eps}
  near_double,              // (1, -2(1+eps), (1+eps)^2), double-ish root
  large_b,                  // random real a, c with |b| = 1/parameter
  random_complex,
  random_real,
};

struct BenchFamily {
  BenchFamilyName name = BenchFamilyName::random_real;
  double parameter = 0.0;  // severity knob (eps); unused by the random families
  int count = 1;
  std::uint64_t seed = 0;
};

enum class RootIndex { small, large };

struct BenchRecord {
  BenchFamilyName family = BenchFamilyName::random_real;
  int instance_id = 0;
  BenchMethod method = BenchMethod::classical;
  RootIndex root_index = RootIndex::small;
  // Relative error against the oracle root; empty when the method is not
  // applicable to the instance ("NA" in CSV, null in json).
  std::optional<double> rel_error;
  int oracle_precision_bits = 0;
};

inline constexpr int kOracleBits = 256;

// Name of the generator behind run_bench, for reproducibility metadata.
inline constexpr const char* kBenchRngName = "mt19937_64";

// Ground truth: roots computed with the cancellation-aware algorithm in
// precision_bits-wide binary floating point, then rounded to double.  Accepts
// 106..512 bits (at least twice working precision).
RootPair oracle_solve(const Quadratic& eq, int precision_bits);

// One record per (instance, method, root), ordered by instance, then by the
// given method order, small root first.  Instances are generated from the
// family seed alone, so a repeated call is bit-identical.  Methods that do not
// apply to an instance yield records without a rel_error value.
std::vector<BenchRecord> run_bench(const BenchFamily& family,
                                   const std::vector<BenchMethod>& methods);

// CSV with the fixed header
// family,instance_id,method,root_index,rel_error,oracle_precision_bits
// and 17 significant digits for rel_error ("NA" when absent).
void write_csv(std::ostream& os, const std::vector<BenchRecord>& records);

const char* to_string(BenchMethod m) noexcept;
const char* to_string(BenchFamilyName f) noexcept;
const char* to_string(RootIndex r) noexcept;
bool parse_method(std::string_view text, BenchMethod& out) noexcept;
bool parse_family(std::string_view text, BenchFamilyName& out) noexcept;

inline constexpr BenchMethod kAllBenchMethods[] = {
    BenchMethod::classical, BenchMethod::reciprocal, BenchMethod::alternative,
    BenchMethod::robust, BenchMethod::trig_hyp};

}  // namespace quadform
