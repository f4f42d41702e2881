#include <numeric>

#include "doctest.h"

#include "ffpotent/coverage.hpp"
#include "ffpotent/error.hpp"
#include "ffpotent/potent.hpp"

using namespace ffpotent;

namespace {

std::vector<Element> indices(std::initializer_list<std::uint32_t> xs)
{
	std::vector<Element> out;
	for (auto x : xs)
		out.push_back({x});
	return out;
}

// x^n by square-and-multiply through mul(), independent of the dlog
// congruence potent_set uses.
Element slow_pow(const FieldTable &f, Element x, std::uint64_t n)
{
	Element r = f.one();
	while (n)
	{
		if (n & 1)
			r = f.mul(r, x);
		x = f.mul(x, x);
		n >>= 1;
	}
	return r;
}

std::vector<Element> brute_potents(const FieldTable &f, std::uint64_t n)
{
	std::vector<Element> out;
	for (std::uint32_t x = 0; x < f.order(); ++x)
		if (slow_pow(f, {x}, n) == Element{x})
			out.push_back({x});
	return out;
}

} // namespace

TEST_CASE("normalize_exponent")
{
	CHECK(normalize_exponent(2, 7) == 2);
	CHECK(normalize_exponent(9, 13) == 5);
	CHECK(normalize_exponent(5, 8) == 2);
	CHECK_THROWS_AS(normalize_exponent(1, 13), Error);
	try
	{
		normalize_exponent(0, 13);
	}
	catch (const Error &e)
	{
		CHECK(e.kind() == ErrorKind::InvalidExponent);
	}
}

TEST_CASE("potent_count")
{
	CHECK(potent_count(5, 13) == 5);
	CHECK(potent_count(7, 13) == 7);
	for (std::uint64_t q : {2, 3, 4, 9, 13, 1024})
		CHECK(potent_count(2, q) == 2);
}

TEST_CASE("potent_set examples")
{
	const auto f13 = build_field(13);
	CHECK(potent_set(f13, 5).members() == indices({0, 1, 5, 8, 12}));
	CHECK(potent_set(f13, 7).members() == indices({0, 1, 3, 4, 9, 10, 12}));
	CHECK(potent_set(f13, 5).label() == "C_5");
	CHECK(potent_set(f13, 9).label() == "C_5");
	CHECK(potent_set(f13, 13).size() == 13);
	CHECK_THROWS_AS(potent_set(f13, 1), Error);
}

TEST_CASE("prime fields: potent sets match integer powering")
{
	for (std::uint64_t p : {2, 3, 5, 7, 13, 17, 29, 37, 101})
	{
		const auto f = build_field(p);
		for (std::uint64_t n = 2; n <= p + 3; ++n)
		{
			std::vector<Element> expect;
			for (std::uint64_t x = 0; x < p; ++x)
			{
				std::uint64_t r = 1, b = x, e = n;
				while (e)
				{
					if (e & 1)
						r = r * b % p;
					b = b * b % p;
					e >>= 1;
				}
				if (r == x)
					expect.push_back({static_cast<std::uint32_t>(x)});
			}
			REQUIRE(potent_set(f, n).members() == expect);
		}
	}
}

TEST_CASE("potent sets: definition, normalization, structure for q <= 300")
{
	for (const auto &spec : prime_powers_up_to(300))
	{
		const auto f = build_field(spec);
		const std::uint64_t q = spec.q;
		for (std::uint64_t n = 2; n <= q; ++n)
		{
			const auto set = potent_set(f, n);
			REQUIRE(set.size() == potent_count(n, q));
			REQUIRE(set == potent_set(f, normalize_exponent(n, q)));
			REQUIRE((normalize_exponent(n, q) - 1) != 0);
			REQUIRE((q - 1) % (normalize_exponent(n, q) - 1) == 0);
			if (n < 40)
				REQUIRE(set.members() == brute_potents(f, n));
			REQUIRE(set.contains(f.zero()));
			REQUIRE(set.contains(f.one()));
			if (n < 12)
				for (auto a : set.members())
					for (auto b : set.members())
						REQUIRE(set.contains(f.mul(a, b)));
		}
	}
}

TEST_CASE("5-potents collapse to 2- or 3-potents")
{
	for (const auto &spec : prime_powers_up_to(1000))
	{
		const auto f = build_field(spec);
		if (spec.q % 2 == 0)
			CHECK(potent_set(f, 5) == potent_set(f, 2));
		if (spec.q % 4 == 3)
			CHECK(potent_set(f, 5) == potent_set(f, 3));
		if (spec.q % 4 == 1)
		{
			// {0, +-1, +-zeta} with zeta^2 = -1
			const auto c5 = potent_set(f, 5);
			REQUIRE(c5.size() == 5);
			const Element zeta = f.exp((spec.q - 1) / 4);
			CHECK(f.mul(zeta, zeta) == f.neg(f.one()));
			CHECK(c5 == ElementSet(spec, {f.zero(), f.one(), f.neg(f.one()), zeta, f.neg(zeta)}));
		}
	}
}

TEST_CASE("ElementSet normalizes and validates")
{
	const FieldSpec s{5, 1, 5};
	const ElementSet a(s, indices({3, 1, 3, 0}), "A");
	CHECK(a.members() == indices({0, 1, 3}));
	CHECK(a.contains({3}));
	CHECK_FALSE(a.contains({2}));
	CHECK_THROWS_AS(ElementSet(s, indices({5})), Error);
}
