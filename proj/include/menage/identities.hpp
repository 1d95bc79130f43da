#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "menage/numeric.hpp"
#include "menage/report.hpp"
#include "menage/series.hpp"

namespace menage {

inline constexpr std::size_t kDefaultVerificationOrder = 12;

/// Straight menage number: sum_k (-1)^k C(2n-k, k) (n-k)!.
BigInt menage_V(std::size_t n);

/// Ordinary menage number, with U_0 = 1 and U_1 = 0. For n >= 2 uses the
/// alternating sum with the factor 2n/(2n-k) evaluated exactly; throws
/// std::logic_error if the sum is not an integer.
BigInt menage_U(std::size_t n);

/// U_n for n >= 2 written as V_n plus a second alternating sum with C(2n-k-1, k-1).
BigInt menage_U_split(std::size_t n);

std::vector<BigInt> menage_V_sequence(std::size_t max_n);
std::vector<BigInt> menage_U_sequence(std::size_t max_n);

/// a_0 .. a_max where a_n counts nice bijections [n-1] -> {2, ..., n}, a_1 = 1,
/// a_0 = 0, computed from a_n = sum_{k=2}^{n} C_{k-2} a_{n-k+1}.
std::vector<BigInt> nice_counts(std::size_t max_n);

/// sum n! x^n = sum V_n x^n c(x)^(2n+1) through x^order.
VerificationReport verify_straight_factorial_identity(std::size_t order);
VerificationReport verify_straight_factorial_identity(std::size_t order, std::span<const BigInt> v_values);

/// sum n! x^n = c(x) + c'(x) sum_{n>=1} U_n x^n c(x)^(2n-2) through x^order.
VerificationReport verify_ordinary_factorial_identity(std::size_t order);
VerificationReport verify_ordinary_factorial_identity(std::size_t order, std::span<const BigInt> u_values);

/// c = 1/(1 - x c) = 1 + x c^2, c' = c^2 + 2 x c c', c' = c^3 / (1 - x c^2).
VerificationReport verify_catalan_relations(std::size_t order);
/// Same checks on a caller-supplied c, which must be known through x^(order+1).
VerificationReport verify_catalan_relations(std::size_t order, const TruncatedSeries& c);

/// eta_k = (k+1) sum_r a_{r+1} C_{k-r} has generating function c'(x); also
/// checks sum eta_k/(k+1) x^k = c^2 and sum a_n x^n = x c(x).
VerificationReport verify_eta(std::size_t order);

/// The analytic route: sum V_n x^n = sum n! x^n/(1+x)^(2n+1);
/// 1 + x + (1+x)/(1-x) sum_{n>=1} U_n x^n = sum n! x^n/(1+x)^(2n);
/// and under x = z c(z)^2: 1 + x = c(z), x/(1+x)^2 = z.
VerificationReport verify_analytic_forms(std::size_t order);
VerificationReport verify_analytic_forms(std::size_t order, std::span<const BigInt> v_values,
                                   std::span<const BigInt> u_values);

}  // namespace menage
