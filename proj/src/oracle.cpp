#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "quadform/bench.hpp"

namespace quadform {

namespace {

namespace mp = boost::multiprecision;

// Widened analogue of solve_robust, kept free of any double-precision
// intermediate so it can serve as ground truth for the double solvers.
template <unsigned Bits>
struct OracleKernel {
  using Backend = mp::cpp_bin_float<Bits, mp::digit_base_2>;
  using Real = mp::number<Backend, mp::et_off>;
  using Cplx = mp::number<mp::complex_adaptor<Backend>, mp::et_off>;

  static Cplx lift(Complex z) { return Cplx(z.real(), z.imag()); }

  static Complex lower(const Cplx& z) {
    return Complex(real(z).template convert_to<double>(),
                   imag(z).template convert_to<double>());
  }

  static Cplx wide_principal_sqrt(const Cplx& z) {
    Cplx w = sqrt(z);
    if (real(w) < 0) {
      w = -w;
    } else if (real(w) == 0) {
      w = Cplx(Real(0), abs(imag(w)));
    }
    return w;
  }

  static RootPair solve(const Quadratic& eq) {
    const Cplx a = lift(eq.a);
    const Cplx b = lift(eq.b);
    const Cplx c = lift(eq.c);
    if (eq.a == 0.0) {
      if (eq.b == 0.0) {
        throw SolveError(ErrorKind::no_root,
                         "oracle_solve: a = 0 and b = 0 leave no root");
      }
      RootPair out;
      out.x1 = out.x2 = lower(-c / b);
      out.is_degenerate_linear = true;
      return out;
    }
    if (eq.c == 0.0) {
      return make_root_pair(lower(-b / a), Complex(0.0));
    }
    const Cplx w = wide_principal_sqrt(b * b - 4 * a * c);
    const Real dot = real(b) * real(w) + imag(b) * imag(w);
    const Cplx denom = (dot >= 0) ? b + w : b - w;
    return make_root_pair(lower(-denom / (2 * a)), lower(-2 * c / denom));
  }
};

}  // namespace

RootPair oracle_solve(const Quadratic& eq, int precision_bits) {
  if (!is_finite(eq.a) || !is_finite(eq.b) || !is_finite(eq.c)) {
    throw SolveError(ErrorKind::domain, "oracle_solve: non-finite coefficient");
  }
  if (precision_bits < 106) {
    throw SolveError(ErrorKind::domain,
                     "oracle_solve: precision_bits must be >= 106");
  }
  if (precision_bits <= 256) {
    return OracleKernel<256>::solve(eq);
  }
  if (precision_bits <= 512) {
    return OracleKernel<512>::solve(eq);
  }
  throw SolveError(ErrorKind::domain,
                   "oracle_solve: precision_bits above 512 not supported");
}

}  // namespace quadform
