#include "ffpotent/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ffpotent/error.hpp"

namespace ffpotent {

namespace {

__extension__ using wide_int = __int128;

void require_order(const FieldTable &field, std::uint64_t d)
{
	const std::uint64_t n = field.order() - 1;
	if (d < 2 || n % d != 0)
		throw Error(ErrorKind::BadOrder,
		            "character order " + std::to_string(d) + " does not divide q-1=" + std::to_string(n));
}

// q * d^s, saturating at 2^127.
wide_uint magnitude_bound(std::uint64_t q, std::uint64_t d, std::size_t s)
{
	constexpr wide_uint cap = wide_uint{1} << 127;
	wide_uint b = q;
	for (std::size_t i = 0; i < s; ++i)
	{
		if (b > cap / d)
			return cap;
		b *= d;
	}
	return b;
}

std::vector<std::uint32_t> lambda_table(const FieldTable &field, std::uint64_t d)
{
	const auto logs = field.dlog_table();
	std::vector<std::uint32_t> table(field.order());
	table[0] = static_cast<std::uint32_t>(d - 1);
	for (std::uint32_t x = 1; x < field.order(); ++x)
		table[x] = logs[x] % d == 0 ? 0 : static_cast<std::uint32_t>(d);
	return table;
}

template <typename Acc>
Acc accumulate_s(const FieldTable &field, std::uint64_t d, const ElementSet &set)
{
	const auto lam = lambda_table(field, d);
	std::vector<Element> negated;
	for (auto a : set.members())
		negated.push_back(field.neg(a));
	Acc total = 0;
	for (std::uint32_t g = 0; g < field.order(); ++g)
	{
		if (set.contains({g}))
			continue;
		Acc prod = 1;
		for (auto na : negated)
		{
			const std::uint32_t l = lam[field.add({g}, na).index];
			if (l == 0)
			{
				prod = 0;
				break;
			}
			prod *= l;
		}
		total += prod;
	}
	return total;
}

void require_set(const FieldTable &field, const ElementSet &set)
{
	if (set.field() != field.spec())
		throw Error(ErrorKind::FieldMismatch, "set '" + set.label() + "' is not over F_" + std::to_string(field.order()));
	if (set.empty())
		throw Error(ErrorKind::PreconditionViolated, "character sum over an empty set");
}

} // namespace

std::string to_decimal(wide_uint value)
{
	if (value == 0)
		return "0";
	std::string s;
	while (value)
	{
		s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
		value /= 10;
	}
	std::reverse(s.begin(), s.end());
	return s;
}

std::uint32_t lambda_value(const FieldTable &field, std::uint64_t d, Element x)
{
	require_order(field, d);
	if (x.index == 0)
		return static_cast<std::uint32_t>(d - 1);
	return field.dlog(x) % d == 0 ? 0 : static_cast<std::uint32_t>(d);
}

std::uint64_t exact_s(const FieldTable &field, std::uint64_t d, const ElementSet &set)
{
	require_order(field, d);
	require_set(field, set);
	if (magnitude_bound(field.order(), d, set.size()) > static_cast<wide_uint>(INT64_MAX))
		throw Error(ErrorKind::Overflow, "q*d^|A| exceeds 64-bit accumulation; use exact_s_wide");
	return accumulate_s<std::uint64_t>(field, d, set);
}

wide_uint exact_s_wide(const FieldTable &field, std::uint64_t d, const ElementSet &set)
{
	require_order(field, d);
	require_set(field, set);
	if (magnitude_bound(field.order(), d, set.size()) >= (wide_uint{1} << 127))
		throw Error(ErrorKind::Overflow, "q*d^|A| exceeds 128-bit accumulation");
	return accumulate_s<wide_uint>(field, d, set);
}

big_uint exact_s_big(const FieldTable &field, std::uint64_t d, const ElementSet &set)
{
	require_order(field, d);
	require_set(field, set);
	const wide_uint bound = magnitude_bound(field.order(), d, set.size());
	if (bound <= static_cast<wide_uint>(INT64_MAX))
		return accumulate_s<std::uint64_t>(field, d, set);
	if (bound < (wide_uint{1} << 127))
	{
		const wide_uint w = accumulate_s<wide_uint>(field, d, set);
		big_uint out = static_cast<std::uint64_t>(w >> 64);
		out <<= 64;
		out += static_cast<std::uint64_t>(w);
		return out;
	}
	return accumulate_s<big_uint>(field, d, set);
}

double weil_lower_bound(std::uint64_t d, std::uint64_t set_size, std::uint64_t q)
{
	const double s = static_cast<double>(set_size);
	const double c = std::ldexp(s - 2.0, static_cast<int>(set_size) - 1) + 1.0;
	const double e = std::ldexp(s, static_cast<int>(set_size));
	const double lead = std::pow(static_cast<double>(d - 1), s);
	const double qd = static_cast<double>(q);
	return lead * (qd - c * std::sqrt(qd) - e);
}

bool weil_bound_positive(std::uint64_t set_size, std::uint64_t q)
{
	if (set_size == 0 || set_size > 40)
		throw Error(ErrorKind::Overflow, "set size out of range for exact bound test");
	const wide_int s = set_size;
	const wide_int c = (wide_int{1} << (set_size - 1)) * (s - 2) + 1;
	const wide_int e = (wide_int{1} << set_size) * s;
	const wide_int qq = q;
	if (qq <= e)
		return false;
	// c < 0 only for s = 1, where c = 0 anyway; c >= 0 below.
	return (qq - e) * (qq - e) > c * c * qq;
}

std::uint64_t smallest_positive_bound_q(std::uint64_t set_size)
{
	// The bracket is increasing in q once sqrt(q) > c/2, and it is negative
	// whenever q <= c^2, so bisection on [1, M] is valid.
	std::uint64_t lo = 1, hi = threshold_M(set_size);
	while (!weil_bound_positive(set_size, hi))
		hi *= 2;
	while (lo < hi)
	{
		const std::uint64_t mid = lo + (hi - lo) / 2;
		if (weil_bound_positive(set_size, mid))
			hi = mid;
		else
			lo = mid + 1;
	}
	return lo;
}

std::uint64_t threshold_M(std::uint64_t set_size)
{
	if (set_size == 0 || set_size > 60)
		throw Error(ErrorKind::Overflow, "threshold for set size " + std::to_string(set_size) + " does not fit");
	const wide_uint root = (wide_uint{1} << set_size) * set_size;
	const wide_uint m = root * root;
	if (m > UINT64_MAX)
		throw Error(ErrorKind::Overflow, "threshold for set size " + std::to_string(set_size) + " does not fit");
	return static_cast<std::uint64_t>(m);
}

double char_sum_modulus(const FieldTable &field, std::uint64_t d, std::span<const Element> roots)
{
	require_order(field, d);
	if (roots.empty())
		throw Error(ErrorKind::PreconditionViolated, "polynomial needs at least one root");
	std::vector<Element> sorted(roots.begin(), roots.end());
	std::sort(sorted.begin(), sorted.end());
	if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
		throw Error(ErrorKind::DuplicateRoots, "roots must be distinct");
	for (auto r : sorted)
		if (!field.contains(r))
			throw Error(ErrorKind::PreconditionViolated, "root outside the field");

	const auto logs = field.dlog_table();
	std::vector<std::uint64_t> counts(d, 0);
	for (std::uint32_t g = 0; g < field.order(); ++g)
	{
		std::uint64_t residue = 0;
		bool zero = false;
		for (auto r : sorted)
		{
			const Element diff = field.sub({g}, r);
			if (diff.index == 0)
			{
				zero = true;
				break;
			}
			residue += logs[diff.index] % d;
		}
		if (!zero)
			++counts[residue % d];
	}

	std::complex<long double> total = 0;
	for (std::uint64_t j = 0; j < d; ++j)
	{
		const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) /
		                          static_cast<long double>(d);
		total += static_cast<long double>(counts[j]) * std::polar(1.0L, angle);
	}
	return static_cast<double>(std::abs(total));
}

CharSumReport charsum_report(const FieldTable &field, std::uint64_t d, const ElementSet &set)
{
	CharSumReport r;
	r.q = field.order();
	r.d = d;
	r.set_label = set.label();
	r.set_size = set.size();
	r.exact_value = exact_s_big(field, d, set);
	r.lower_bound = weil_lower_bound(d, set.size(), field.order());
	r.slack = r.exact_value.convert_to<double>() - r.lower_bound;
	r.bound_positive = set.size() <= 40 && weil_bound_positive(set.size(), field.order());
	return r;
}

} // namespace ffpotent
