#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffpotent/field.hpp"
#include "ffpotent/potent.hpp"

namespace ffpotent {

inline constexpr std::size_t default_missing_cap = 16;

struct CoverageReport
{
	std::uint32_t q = 0;
	std::string left_label;
	std::string right_label;
	bool covered = false;
	/// Smallest uncovered elements, at most the requested cap.
	std::vector<Element> missing;
	std::uint32_t sum_size = 0;
};

struct SearchHit
{
	std::uint32_t q = 0;
	std::uint32_t p = 0;
	std::uint32_t v = 0;
	std::uint64_t m = 0;
	std::uint64_t k = 0;

	friend bool operator==(const SearchHit &, const SearchHit &) = default;
};

enum class Prefilter { enabled, disabled };

/// {a + b}, sorted. Throws FieldMismatch.
ElementSet sumset(const FieldTable &field, const ElementSet &a, const ElementSet &b);

/// Decides A + B = F_q with an occupancy table and early exit.
CoverageReport covers(const FieldTable &field, const ElementSet &a, const ElementSet &b,
                      std::size_t missing_cap = default_missing_cap);

/// Proper divisors d of n (d < n), ascending. Empty for n = 1.
std::vector<std::uint64_t> proper_divisors(std::uint64_t n);

/// All k = d + 1 (d a proper divisor of q-1) with C_m + C_k = F_q, ascending.
/// The prefilter skips k with |C_m| * |C_k| < q, which can never cover.
std::vector<SearchHit> check_one(const FieldTable &field, std::uint64_t m,
                                 Prefilter prefilter = Prefilter::enabled);

/// Every p^v <= limit once, ascending.
std::vector<FieldSpec> prime_powers_up_to(std::uint64_t limit);

/// check_one over every prime power <= limit; hits ordered by (q, k)
/// regardless of the number of jobs.
std::vector<SearchHit> check_all(std::uint64_t m, std::uint64_t limit, unsigned jobs = 1);

/// The d = m counting exclusion: with (m-1) | (q-1), m | (q-1) and
/// n = 1 + (q-1)/m, C_m and C_n overlap enough that |C_m + C_n| <= q - 1.
/// Throws PreconditionViolated when the divisibilities fail.
CoverageReport exclusion_d_eq_m(const FieldTable &field, std::uint64_t m);

/// Outcome of testing A = C_3 + C_4 against every C_k for one q.
struct TripleOutcome
{
	FieldSpec spec;
	std::uint32_t left_size = 0;
	std::vector<std::uint64_t> hit_k;

	friend bool operator==(const TripleOutcome &, const TripleOutcome &) = default;
};

TripleOutcome triple_check_one(const FieldTable &field);
std::vector<TripleOutcome> triple_search(std::uint64_t limit, unsigned jobs = 1);

} // namespace ffpotent
