#include "ffpotent/coverage.hpp"

#include <algorithm>

#include "ffpotent/error.hpp"
#include "ffpotent/ordered_pool.hpp"

namespace ffpotent {

namespace {

void require_same_field(const FieldTable &field, const ElementSet &a, const ElementSet &b)
{
	if (a.field() != field.spec() || b.field() != field.spec())
		throw Error(ErrorKind::FieldMismatch, "sets '" + a.label() + "' and '" + b.label() +
		                                          "' are not both over F_" + std::to_string(field.order()));
}

} // namespace

ElementSet sumset(const FieldTable &field, const ElementSet &a, const ElementSet &b)
{
	require_same_field(field, a, b);
	std::vector<std::uint8_t> seen(field.order(), 0);
	for (auto x : a.members())
		for (auto y : b.members())
			seen[field.add(x, y).index] = 1;
	std::vector<Element> out;
	for (std::uint32_t i = 0; i < field.order(); ++i)
		if (seen[i])
			out.push_back({i});
	return ElementSet(field.spec(), std::move(out), a.label() + "+" + b.label());
}

CoverageReport covers(const FieldTable &field, const ElementSet &a, const ElementSet &b, std::size_t missing_cap)
{
	require_same_field(field, a, b);
	if (a.empty() || b.empty())
		throw Error(ErrorKind::PreconditionViolated, "coverage needs nonempty summand sets");

	CoverageReport report;
	report.q = field.order();
	report.left_label = a.label();
	report.right_label = b.label();

	const ElementSet &outer = a.size() <= b.size() ? a : b;
	const ElementSet &inner = a.size() <= b.size() ? b : a;
	const std::uint32_t q = field.order();
	std::vector<std::uint8_t> seen(q, 0);
	std::uint32_t count = 0;
	for (auto x : outer.members())
	{
		for (auto y : inner.members())
		{
			auto &slot = seen[field.add(x, y).index];
			count += slot ^ 1;
			slot = 1;
		}
		if (count == q)
			break;
	}
	report.sum_size = count;
	report.covered = count == q;
	if (!report.covered)
		for (std::uint32_t i = 0; i < q && report.missing.size() < missing_cap; ++i)
			if (!seen[i])
				report.missing.push_back({i});
	return report;
}

std::vector<std::uint64_t> proper_divisors(std::uint64_t n)
{
	std::vector<std::uint64_t> small, large;
	for (std::uint64_t d = 1; d * d <= n; ++d)
		if (n % d == 0)
		{
			small.push_back(d);
			if (d * d != n)
				large.push_back(n / d);
		}
	small.insert(small.end(), large.rbegin(), large.rend());
	if (!small.empty() && small.back() == n)
		small.pop_back();
	return small;
}

std::vector<SearchHit> check_one(const FieldTable &field, std::uint64_t m, Prefilter prefilter)
{
	const auto &spec = field.spec();
	const ElementSet left = potent_set(field, m);
	std::vector<SearchHit> hits;
	for (auto d : proper_divisors(spec.q - 1))
	{
		const std::uint64_t k = d + 1;
		// |C_k| = k here since (k-1) | (q-1).
		if (prefilter == Prefilter::enabled && left.size() * k < spec.q)
			continue;
		if (covers(field, left, potent_set(field, k)).covered)
			hits.push_back({spec.q, spec.p, spec.v, m, k});
	}
	return hits;
}

std::vector<FieldSpec> prime_powers_up_to(std::uint64_t limit)
{
	std::vector<FieldSpec> out;
	if (limit < 2)
		return out;
	std::vector<bool> composite(limit + 1, false);
	for (std::uint64_t p = 2; p <= limit; ++p)
	{
		if (composite[p])
			continue;
		for (std::uint64_t j = p * p; j <= limit; j += p)
			composite[j] = true;
		std::uint64_t q = p;
		for (std::uint32_t v = 1;; ++v)
		{
			out.push_back({static_cast<std::uint32_t>(p), v, static_cast<std::uint32_t>(q)});
			if (q > limit / p)
				break;
			q *= p;
		}
	}
	std::sort(out.begin(), out.end(), [](const FieldSpec &x, const FieldSpec &y) { return x.q < y.q; });
	return out;
}

std::vector<SearchHit> check_all(std::uint64_t m, std::uint64_t limit, unsigned jobs)
{
	if (m <= 1)
		throw Error(ErrorKind::InvalidExponent, "m must exceed 1");
	const auto specs = prime_powers_up_to(limit);
	std::vector<SearchHit> all;
	run_ordered<std::vector<SearchHit>>(
	    specs.size(), jobs, [&](std::size_t i) { return check_one(build_field(specs[i]), m); },
	    [&](std::size_t, std::vector<SearchHit> &&hits) {
		    all.insert(all.end(), hits.begin(), hits.end());
		    return true;
	    });
	return all;
}

CoverageReport exclusion_d_eq_m(const FieldTable &field, std::uint64_t m)
{
	const std::uint64_t q = field.order();
	if (m < 2 || (q - 1) % (m - 1) != 0 || (q - 1) % m != 0)
		throw Error(ErrorKind::PreconditionViolated, "d = m exclusion needs (m-1) | (q-1) and m | (q-1); q=" +
		                                                 std::to_string(q) + " m=" + std::to_string(m));
	const std::uint64_t n = 1 + (q - 1) / m;
	auto report = covers(field, potent_set(field, m), potent_set(field, n));
	// |C_m + C_n| <= m*n - m = q - 1.
	if (report.covered || report.sum_size > q - 1)
		throw std::logic_error("counting bound m*n - m = q - 1 violated at q=" + std::to_string(q));
	return report;
}

TripleOutcome triple_check_one(const FieldTable &field)
{
	const auto &spec = field.spec();
	TripleOutcome out;
	out.spec = spec;
	const ElementSet left = sumset(field, potent_set(field, 3), potent_set(field, 4));
	out.left_size = static_cast<std::uint32_t>(left.size());
	for (auto d : proper_divisors(spec.q - 1))
	{
		const std::uint64_t k = d + 1;
		if (left.size() * k < spec.q)
			continue;
		if (covers(field, left, potent_set(field, k)).covered)
			out.hit_k.push_back(k);
	}
	return out;
}

std::vector<TripleOutcome> triple_search(std::uint64_t limit, unsigned jobs)
{
	const auto specs = prime_powers_up_to(limit);
	std::vector<TripleOutcome> all;
	run_ordered<TripleOutcome>(
	    specs.size(), jobs, [&](std::size_t i) { return triple_check_one(build_field(specs[i])); },
	    [&](std::size_t, TripleOutcome &&o) {
		    all.push_back(std::move(o));
		    return true;
	    });
	return all;
}

} // namespace ffpotent
