#pragma once

// Reference computations used only by the tests. Each one reaches its answer
// by a route that shares no code with the library routine it checks.

#include <optional>
#include <random>
#include <vector>

#include "conclab/conclab.hpp"

namespace oracle {

using conclab::Integer;
using conclab::Rational;

/// Integer determinant by fraction-free (Bareiss) elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

/// Res(f, g) as the determinant of the Sylvester matrix, on the ordinary
/// polynomial representatives t^{-min} f.
Integer sylvester_resultant(const conclab::LaurentPoly& f, const conclab::LaurentPoly& g);

/// |prod f(w)| over the d-th roots of unity in long double, rounded.
long double root_of_unity_product(const conclab::LaurentPoly& f, unsigned long d);

/// Signature of (1 - w)A + (1 - conj w)A^T by floating Hermitian eigenvalues.
/// nullopt when some eigenvalue is within `tol` of zero.
std::optional<int> float_signature(const conclab::RationalMatrix& a, double t, double tol = 1e-7);

/// t_i = sum_j j a_{i+j} by a literal double loop over all index pairs.
std::vector<Integer> brute_torsion(const conclab::LaurentPoly& f);

/// Random integer Seifert matrix of even size 2g with det(A - A^T) = 1:
/// a symmetric part plus the standard symplectic form, conjugated by a
/// random unimodular matrix.
conclab::RationalMatrix random_knot_seifert(std::mt19937_64& rng, int genus, int entry_bound = 2);

/// Random square integer matrix with entries in [-bound, bound].
conclab::RationalMatrix random_matrix(std::mt19937_64& rng, int n, int bound);

/// Random integer Laurent polynomial.
conclab::LaurentPoly random_poly(std::mt19937_64& rng, int max_span, int bound);

/// Brute-force search for an integer multiple k c0 <= limit whose prime
/// factors all lie in `excluded`.
std::optional<Integer> brute_escaping_period(const Rational& c0, const std::vector<Integer>& excluded, long limit);

/// Number of subgroups of order n in (Z_p)^2 or Z_{p^2}, by testing every
/// subset generated by pairs of elements.
long brute_subgroup_count(const std::vector<long>& factors, long n);

}  // namespace oracle
