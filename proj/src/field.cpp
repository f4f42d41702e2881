#include "ffpotent/field.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "ffpotent/error.hpp"

namespace ffpotent {

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
	std::uint64_t r = 1 % m;
	b %= m;
	while (e)
	{
		if (e & 1)
			r = r * b % m;
		b = b * b % m;
		e >>= 1;
	}
	return r;
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p)
{
	return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

poly::Poly to_poly(std::uint32_t index, std::uint32_t p)
{
	poly::Poly r;
	while (index)
	{
		r.push_back(index % p);
		index /= p;
	}
	return r;
}

std::uint32_t from_poly(const poly::Poly &a, std::uint32_t p)
{
	std::uint32_t r = 0;
	for (auto it = a.rbegin(); it != a.rend(); ++it)
		r = r * p + *it;
	return r;
}

void trim(poly::Poly &a)
{
	while (!a.empty() && a.back() == 0)
		a.pop_back();
}

bool has_root(const poly::Poly &f, std::uint32_t p)
{
	for (std::uint64_t a = 0; a < p; ++a)
	{
		std::uint64_t acc = 0;
		for (auto it = f.rbegin(); it != f.rend(); ++it)
			acc = (acc * a + *it) % p;
		if (acc == 0)
			return true;
	}
	return false;
}

} // namespace

namespace poly {

Poly rem(Poly a, const Poly &f, std::uint32_t p)
{
	trim(a);
	const std::size_t df = f.size() - 1;
	const std::uint64_t lead_inv = inv_mod_prime(f.back(), p);
	while (a.size() > df)
	{
		const std::uint64_t c = a.back() * lead_inv % p;
		const std::size_t shift = a.size() - 1 - df;
		for (std::size_t i = 0; i <= df; ++i)
			a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
		trim(a);
	}
	return a;
}

Poly mul_mod(const Poly &a, const Poly &b, const Poly &f, std::uint32_t p)
{
	if (a.empty() || b.empty())
		return {};
	std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.size(); ++j)
			acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
	Poly r(acc.begin(), acc.end());
	return rem(std::move(r), f, p);
}

Poly pow_mod(const Poly &a, std::uint64_t e, const Poly &f, std::uint32_t p)
{
	Poly result = rem(Poly{1}, f, p);
	Poly base = rem(a, f, p);
	while (e)
	{
		if (e & 1)
			result = mul_mod(result, base, f, p);
		e >>= 1;
		if (e)
			base = mul_mod(base, base, f, p);
	}
	return result;
}

Poly gcd(Poly a, Poly b, std::uint32_t p)
{
	trim(a);
	trim(b);
	while (!b.empty())
	{
		Poly r = rem(a, b, p);
		a = std::move(b);
		b = std::move(r);
	}
	if (!a.empty())
	{
		const std::uint64_t li = inv_mod_prime(a.back(), p);
		for (auto &c : a)
			c = static_cast<std::uint32_t>(c * li % p);
	}
	return a;
}

bool is_irreducible(const Poly &f, std::uint32_t p)
{
	if (f.size() < 2 || f.back() == 0)
		return false;
	const auto degree = static_cast<std::uint32_t>(f.size() - 1);
	if (degree == 1)
		return true;

	const Poly x{0, 1};
	// frob[k] = x^(p^k) mod f
	std::vector<Poly> frob{rem(x, f, p)};
	for (std::uint32_t k = 1; k <= degree; ++k)
		frob.push_back(pow_mod(frob.back(), p, f, p));
	if (frob[degree] != frob[0])
		return false;

	for (auto l : prime_factors(degree))
	{
		Poly h = frob[degree / l];
		h.resize(std::max<std::size_t>(h.size(), 2), 0);
		h[1] = (h[1] + p - 1) % p;
		trim(h);
		if (gcd(h, f, p) != Poly{1})
			return false;
	}
	return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t degree)
{
	std::uint64_t count = 1;
	for (std::uint32_t i = 0; i < degree; ++i)
		count *= p;
	// Candidate t encodes the low coefficients with c_0 as the most
	// significant digit, so increasing t walks the constant-term-first order.
	Poly f(degree + 1, 0);
	f[degree] = 1;
	// Candidates with c_0 = 0 are divisible by x and are skipped outright.
	for (std::uint64_t t = count / p; t < count; ++t)
	{
		std::uint64_t rest = t;
		for (std::uint32_t i = degree; i-- > 0;)
		{
			f[i] = static_cast<std::uint32_t>(rest % p);
			rest /= p;
		}
		if (degree > 1 && p <= 64 && has_root(f, p))
			continue;
		if (is_irreducible(f, p))
			return f;
	}
	throw Error(ErrorKind::PreconditionViolated, "no irreducible polynomial found");
}

} // namespace poly

std::uint64_t configured_field_capacity()
{
	if (const char *env = std::getenv("FFPOTENT_MAX_Q"))
	{
		try
		{
			std::size_t used = 0;
			const auto value = std::stoull(env, &used);
			if (used == std::string(env).size() && value >= 2)
				return value;
		}
		catch (const std::exception &)
		{
		}
	}
	return default_field_capacity;
}

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
	std::vector<std::uint64_t> out;
	for (std::uint64_t d = 2; d * d <= n; ++d)
		if (n % d == 0)
		{
			out.push_back(d);
			while (n % d == 0)
				n /= d;
		}
	if (n > 1)
		out.push_back(n);
	return out;
}

FieldSpec parse_prime_power(std::uint64_t q)
{
	if (q < 2)
		throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is below 2");
	if (q > std::numeric_limits<std::uint32_t>::max())
		throw Error(ErrorKind::CapacityExceeded, std::to_string(q) + " does not fit a 32-bit field index");
	const auto factors = prime_factors(q);
	if (factors.size() != 1)
		throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " has several prime factors");
	FieldSpec s;
	s.p = static_cast<std::uint32_t>(factors[0]);
	s.q = static_cast<std::uint32_t>(q);
	s.v = 0;
	for (std::uint64_t r = q; r > 1; r /= s.p)
		++s.v;
	return s;
}

Element FieldTable::add(Element a, Element b) const noexcept
{
	const std::uint32_t p = spec_.p;
	if (p == 2)
		return {a.index ^ b.index};
	if (spec_.v == 1)
	{
		const std::uint32_t s = a.index + b.index;
		return {s >= p ? s - p : s};
	}
	std::uint32_t r = 0, scale = 1, x = a.index, y = b.index;
	while (x | y)
	{
		std::uint32_t d = x % p + y % p;
		if (d >= p)
			d -= p;
		r += d * scale;
		scale *= p;
		x /= p;
		y /= p;
	}
	return {r};
}

Element FieldTable::neg(Element a) const noexcept
{
	const std::uint32_t p = spec_.p;
	if (p == 2)
		return a;
	if (spec_.v == 1)
		return {a.index == 0 ? 0 : p - a.index};
	std::uint32_t r = 0, scale = 1, x = a.index;
	while (x)
	{
		const std::uint32_t d = x % p;
		r += (d == 0 ? 0 : p - d) * scale;
		scale *= p;
		x /= p;
	}
	return {r};
}

Element FieldTable::mul(Element a, Element b) const noexcept
{
	if (a.index == 0 || b.index == 0)
		return {0};
	std::uint32_t e = dlog_[a.index] + dlog_[b.index];
	const std::uint32_t n = spec_.q - 1;
	if (e >= n)
		e -= n;
	return {exp_[e]};
}

Element FieldTable::pow(Element a, std::uint64_t e) const noexcept
{
	if (a.index == 0)
		return {e == 0 ? 1u : 0u};
	const std::uint64_t n = spec_.q - 1;
	return {exp_[(std::uint64_t{dlog_[a.index]} * (e % n)) % n]};
}

Element FieldTable::inv(Element a) const
{
	if (a.index == 0)
		throw Error(ErrorKind::LogOfZero, "zero has no inverse");
	const std::uint32_t n = spec_.q - 1;
	const std::uint32_t e = dlog_[a.index];
	return {exp_[e == 0 ? 0 : n - e]};
}

std::uint32_t FieldTable::dlog(Element a) const
{
	if (a.index == 0)
		throw Error(ErrorKind::LogOfZero, "discrete log of zero");
	return dlog_[a.index];
}

FieldTable build_field(const FieldSpec &spec, std::uint64_t capacity)
{
	if (spec.q > capacity)
		throw Error(ErrorKind::CapacityExceeded,
		            "q=" + std::to_string(spec.q) + " exceeds capacity " + std::to_string(capacity));
	const auto checked = parse_prime_power(spec.q);
	if (checked != spec)
		throw Error(ErrorKind::NotPrimePower, "inconsistent field spec for q=" + std::to_string(spec.q));

	const std::uint32_t p = spec.p, q = spec.q, n = q - 1;
	const auto group_factors = prime_factors(n);

	FieldTable t;
	t.spec_ = spec;
	t.dlog_.assign(q, FieldTable::no_log);
	t.exp_.assign(n, 0);

	if (spec.v == 1)
	{
		t.modulus_ = {0, 1};
		std::uint32_t g = 1;
		for (; g < p; ++g)
		{
			bool primitive = true;
			for (auto r : group_factors)
				if (powmod(g, n / r, p) == 1)
				{
					primitive = false;
					break;
				}
			if (primitive)
				break;
		}
		t.generator_ = {g};
		std::uint64_t x = 1;
		for (std::uint32_t e = 0; e < n; ++e)
		{
			t.exp_[e] = static_cast<std::uint32_t>(x);
			t.dlog_[x] = e;
			x = x * g % p;
		}
		return t;
	}

	const poly::Poly f = poly::smallest_irreducible(p, spec.v);
	t.modulus_ = f;
	const poly::Poly unit{1};
	std::uint32_t g = 2;
	for (; g < q; ++g)
	{
		const auto gp = to_poly(g, p);
		bool primitive = true;
		for (auto r : group_factors)
			if (poly::pow_mod(gp, n / r, f, p) == unit)
			{
				primitive = false;
				break;
			}
		if (primitive)
			break;
	}
	t.generator_ = {g};

	// Multiplication by g is linear over F_p: row i holds x^i * g mod f, so
	// c * g = sum_i c_i * row_i.
	const std::uint32_t v = spec.v;
	std::vector<std::vector<std::uint32_t>> rows(v, std::vector<std::uint32_t>(v, 0));
	std::vector<std::uint32_t> row_index(v);
	poly::Poly xi = to_poly(g, p);
	for (std::uint32_t i = 0; i < v; ++i)
	{
		for (std::size_t j = 0; j < xi.size(); ++j)
			rows[i][j] = xi[j];
		row_index[i] = from_poly(xi, p);
		xi = poly::mul_mod(xi, {0, 1}, f, p);
	}

	std::uint32_t cur = 1;
	std::vector<std::uint64_t> acc(v);
	for (std::uint32_t e = 0; e < n; ++e)
	{
		t.exp_[e] = cur;
		t.dlog_[cur] = e;
		if (p == 2)
		{
			std::uint32_t next = 0;
			for (std::uint32_t i = 0; i < v; ++i)
				if (cur >> i & 1)
					next ^= row_index[i];
			cur = next;
			continue;
		}
		std::fill(acc.begin(), acc.end(), 0);
		std::uint32_t rest = cur;
		for (std::uint32_t i = 0; i < v && rest; ++i, rest /= p)
		{
			const std::uint32_t c = rest % p;
			if (c)
				for (std::uint32_t j = 0; j < v; ++j)
					acc[j] += std::uint64_t{c} * rows[i][j];
		}
		std::uint32_t next = 0;
		for (std::uint32_t j = v; j-- > 0;)
			next = next * p + static_cast<std::uint32_t>(acc[j] % p);
		cur = next;
	}
	return t;
}

FieldTable build_field(const FieldSpec &spec)
{
	return build_field(spec, configured_field_capacity());
}

FieldTable build_field(std::uint64_t q)
{
	return build_field(parse_prime_power(q));
}

} // namespace ffpotent
