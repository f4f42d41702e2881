#include "ffpotent/potent.hpp"

#include <algorithm>
#include <numeric>

#include "ffpotent/error.hpp"

namespace ffpotent {

ElementSet::ElementSet(const FieldSpec &field, std::vector<Element> members, std::string label)
    : field_(field), members_(std::move(members)), label_(std::move(label))
{
	std::sort(members_.begin(), members_.end());
	members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
	if (!members_.empty() && members_.back().index >= field_.q)
		throw Error(ErrorKind::PreconditionViolated,
		            "element " + std::to_string(members_.back().index) + " outside F_" + std::to_string(field_.q));
}

bool ElementSet::contains(Element x) const noexcept
{
	return std::binary_search(members_.begin(), members_.end(), x);
}

std::uint64_t normalize_exponent(std::uint64_t n, std::uint64_t q)
{
	if (n <= 1)
		throw Error(ErrorKind::InvalidExponent, "potent exponent must exceed 1, got " + std::to_string(n));
	if (q < 2)
		throw Error(ErrorKind::PreconditionViolated, "field order must be at least 2");
	return std::gcd(n - 1, q - 1) + 1;
}

std::uint64_t potent_count(std::uint64_t n, std::uint64_t q)
{
	return normalize_exponent(n, q);
}

ElementSet potent_set(const FieldTable &field, std::uint64_t n)
{
	const std::uint32_t q = field.order();
	const std::uint64_t n0 = normalize_exponent(n, q);
	// x != 0 is n-potent iff dlog(x) is a multiple of (q-1)/(n0-1).
	const std::uint64_t step = (q - 1) / (n0 - 1);
	std::vector<Element> members;
	members.reserve(n0);
	members.push_back(field.zero());
	for (std::uint64_t e = 0; e < q - 1; e += step)
		members.push_back(field.exp(e));
	return ElementSet(field.spec(), std::move(members), "C_" + std::to_string(n0));
}

} // namespace ffpotent
