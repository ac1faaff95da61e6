#pragma once

#include "lucastk/arith.hpp"
#include "lucastk/lucas.hpp"

namespace lucastk {

/// Primitive part Phi_d = prod_{e | d} u_e^{mu(d/e)}, so that u_n is the
/// product of Phi_d over d | n and v_n the product over d | 2n with d not
/// dividing n.
Int primitive_part(const LucasPair& pair, long long d);

/// Factorization of Phi_d. Primes of d are divided out first; every other
/// prime factor p of Phi_d is congruent to +-1 modulo d, which the search
/// exploits before falling back to rho. Results are memoized per
/// (pair, d, effort) and are therefore deterministic.
Factorization factor_primitive_part(const LucasPair& pair, long long d, const Effort& effort = {});

/// Factorization of u_n or v_n (n >= 1 for u, n >= 0 for v) assembled from
/// primitive parts. Partial when some part exceeded the effort budget.
Factorization factor_term(const LucasPair& pair, long long n, Side side, const Effort& effort = {});

}  // namespace lucastk
