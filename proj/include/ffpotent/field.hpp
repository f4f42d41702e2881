#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ffpotent {

/// Default upper bound on q for materialized fields (tables are O(q)).
inline constexpr std::uint64_t default_field_capacity = std::uint64_t{1} << 22;

/// Capacity in effect: FFPOTENT_MAX_Q from the environment if set and
/// parseable, otherwise default_field_capacity.
std::uint64_t configured_field_capacity();

struct FieldSpec
{
	std::uint32_t p = 2;
	std::uint32_t v = 1;
	std::uint32_t q = 2;

	friend bool operator==(const FieldSpec &, const FieldSpec &) = default;
};

/// A field element, labeled by its base-p coefficient vector: digit i is the
/// coefficient of x^i. Index 0 is zero and index 1 is one.
struct Element
{
	std::uint32_t index = 0;

	friend auto operator<=>(const Element &, const Element &) = default;
};

/// Splits q into p^v. Throws NotPrimePower for q < 2 or composite non-powers.
FieldSpec parse_prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Immutable arithmetic tables for F_q. Built once by build_field and then
/// shared read-only between any number of threads.
class FieldTable
{
  public:
	static constexpr std::uint32_t no_log = 0xffffffffu;

	const FieldSpec &spec() const noexcept { return spec_; }
	std::uint32_t order() const noexcept { return spec_.q; }
	std::uint32_t characteristic() const noexcept { return spec_.p; }

	/// Monic modulus, lowest degree first, length v+1. For v = 1 this is x.
	std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
	Element generator() const noexcept { return generator_; }

	Element zero() const noexcept { return {0}; }
	Element one() const noexcept { return {1}; }

	Element add(Element a, Element b) const noexcept;
	Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
	Element neg(Element a) const noexcept;
	Element mul(Element a, Element b) const noexcept;
	/// 0^0 = 1.
	Element pow(Element a, std::uint64_t e) const noexcept;
	Element inv(Element a) const;

	/// Exponent e in [0, q-2] with generator^e = a. Throws LogOfZero.
	std::uint32_t dlog(Element a) const;
	Element exp(std::uint64_t e) const noexcept { return {exp_[e % (spec_.q - 1)]}; }

	/// Raw tables; dlog_table()[0] is no_log.
	std::span<const std::uint32_t> dlog_table() const noexcept { return dlog_; }
	std::span<const std::uint32_t> exp_table() const noexcept { return exp_; }

	bool contains(Element a) const noexcept { return a.index < spec_.q; }

  private:
	friend FieldTable build_field(const FieldSpec &spec, std::uint64_t capacity);

	FieldSpec spec_;
	std::vector<std::uint32_t> modulus_;
	Element generator_;
	std::vector<std::uint32_t> dlog_;
	std::vector<std::uint32_t> exp_;
};

/// Deterministic construction: smallest primitive root for v = 1; for v > 1
/// the lexicographically smallest monic irreducible modulus (compared from
/// the constant term upward) and the smallest-index element of order q-1.
FieldTable build_field(const FieldSpec &spec, std::uint64_t capacity);
FieldTable build_field(const FieldSpec &spec);
FieldTable build_field(std::uint64_t q);

namespace poly {

// Dense polynomials over F_p, lowest degree first, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<std::uint32_t>;

Poly mul_mod(const Poly &a, const Poly &b, const Poly &f, std::uint32_t p);
Poly pow_mod(const Poly &a, std::uint64_t e, const Poly &f, std::uint32_t p);
Poly rem(Poly a, const Poly &f, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);

/// Rabin's test: f of degree v is irreducible iff x^(p^v) = x mod f and
/// gcd(x^(p^(v/l)) - x, f) = 1 for every prime l | v.
bool is_irreducible(const Poly &f, std::uint32_t p);

/// Smallest monic irreducible of the given degree, constant term compared first.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t degree);

} // namespace poly

} // namespace ffpotent
