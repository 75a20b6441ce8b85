#pragma once

#include "quadform/scalar.hpp"

namespace quadform {

/// General quadratic a x^2 + b x + c with complex coefficients. a = 0 is the
/// degenerate linear case, accepted only by the reciprocal/robust solvers.
struct Quadratic {
  Complex a, b, c;
};

/// Monic normal form x^2 - 2 p x + q.
struct NormalPQ {
  Complex p, q;
};

/// Symmetric normal form x^2 - 4 u x + 4 v^2. Only v^2 enters the equation;
/// v holds one fixed square root of it and the sign of v is unobservable.
struct NormalUV {
  Complex u, v;
};

/// Unordered pair of roots. When is_degenerate_linear is set, only x1 is
/// meaningful and x2 is NaN.
struct RootPair {
  Complex x1, x2;
  bool is_double = false;
  bool is_degenerate_linear = false;
};

/// Assemble a plain (non-degenerate) pair, flagging near-equal roots double.
RootPair make_root_pair(Complex x1, Complex x2) noexcept;

NormalPQ to_pq(const Quadratic& eq);    // p = -b/2a, q = c/a;  requires a != 0
NormalUV to_uv(const Quadratic& eq);    // u = -b/4a, v = sqrt(c/4a);  requires a != 0
Quadratic from_uv(const NormalUV& nf);  // (1, -4u, 4v^2)

/// a x^2 + b x + c evaluated at x.
Complex residual(const Quadratic& eq, Complex x) noexcept;

/// |a||x|^2 + |b||x| + |c|, the natural scale for residual bounds.
double residual_scale(const Quadratic& eq, Complex x) noexcept;

/// Multiset comparison under the mixed tolerance. Degenerate linear pairs
/// compare by x1 and flag only.
bool same_roots(const RootPair& lhs, const RootPair& rhs,
                double tol = kDefaultTol) noexcept;

}  // namespace quadform
