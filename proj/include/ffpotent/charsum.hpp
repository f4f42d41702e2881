#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffpotent/field.hpp"
#include "ffpotent/potent.hpp"

namespace ffpotent {

__extension__ using wide_uint = unsigned __int128;
using big_uint = boost::multiprecision::cpp_int;

std::string to_decimal(wide_uint value);

/// lambda(x) = (d-1) - sum_{i=1}^{d-1} chi_d(x^i), evaluated through the
/// discrete log: d-1 at zero, 0 on nonzero d-th powers, d elsewhere.
/// Throws BadOrder unless d >= 2 and d | q-1.
std::uint32_t lambda_value(const FieldTable &field, std::uint64_t d, Element x);

/// S(d; q, A) = sum over gamma outside A of prod_{alpha in A} lambda(gamma - alpha).
/// Zero exactly when A + C_n = F_q with n = 1 + (q-1)/d.
///
/// exact_s accumulates in 64 bits and throws Overflow when q * d^|A| does not
/// fit a signed 64-bit value; exact_s_wide uses 128 bits and only throws past
/// 2^127.
std::uint64_t exact_s(const FieldTable &field, std::uint64_t d, const ElementSet &set);
wide_uint exact_s_wide(const FieldTable &field, std::uint64_t d, const ElementSet &set);

/// Never overflows: takes the 64- or 128-bit path when q * d^|A| allows it
/// and arbitrary precision otherwise (large sets such as A = C_q).
big_uint exact_s_big(const FieldTable &field, std::uint64_t d, const ElementSet &set);

/// (d-1)^s (q - (2^(s-1)(s-2) + 1) sqrt(q) - 2^s s), in double precision.
double weil_lower_bound(std::uint64_t d, std::uint64_t set_size, std::uint64_t q);

/// Exact sign test for the bracket above, q - c sqrt(q) - e > 0, decided as
/// q > e and (q - e)^2 > c^2 q in integers.
bool weil_bound_positive(std::uint64_t set_size, std::uint64_t q);

/// Smallest q for which weil_bound_positive holds.
std::uint64_t smallest_positive_bound_q(std::uint64_t set_size);

/// (2^s s)^2. Throws Overflow when it does not fit 64 bits.
std::uint64_t threshold_M(std::uint64_t set_size);

/// |sum_{gamma : f(gamma) != 0} chi_d(f(gamma))| for f = prod (x - root).
/// Computed from exact residue-class counts; only the final modulus is
/// floating point. Throws BadOrder or DuplicateRoots.
double char_sum_modulus(const FieldTable &field, std::uint64_t d, std::span<const Element> roots);

struct CharSumReport
{
	std::uint32_t q = 0;
	std::uint64_t d = 0;
	std::string set_label;
	std::size_t set_size = 0;
	big_uint exact_value = 0;
	double lower_bound = 0.0;
	double slack = 0.0;
	bool bound_positive = false;
};

CharSumReport charsum_report(const FieldTable &field, std::uint64_t d, const ElementSet &set);

} // namespace ffpotent
