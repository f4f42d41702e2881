#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffpotent/field.hpp"

namespace ffpotent {

/// Sorted, duplicate-free set of elements of one field. Used for C_n as well
/// as for arbitrary summand sets.
class ElementSet
{
  public:
	ElementSet() = default;

	/// Sorts and deduplicates; throws PreconditionViolated for members >= q.
	ElementSet(const FieldSpec &field, std::vector<Element> members, std::string label = {});

	const FieldSpec &field() const noexcept { return field_; }
	const std::vector<Element> &members() const noexcept { return members_; }
	const std::string &label() const noexcept { return label_; }
	std::size_t size() const noexcept { return members_.size(); }
	bool empty() const noexcept { return members_.empty(); }
	bool contains(Element x) const noexcept;

	void set_label(std::string label) { label_ = std::move(label); }

	friend bool operator==(const ElementSet &a, const ElementSet &b)
	{
		return a.field_ == b.field_ && a.members_ == b.members_;
	}

  private:
	FieldSpec field_;
	std::vector<Element> members_;
	std::string label_;
};

/// gcd(n-1, q-1) + 1, the exponent with C_{n0} = C_n and (n0-1) | (q-1).
std::uint64_t normalize_exponent(std::uint64_t n, std::uint64_t q);

/// |C_n| over F_q; equal to normalize_exponent(n, q).
std::uint64_t potent_count(std::uint64_t n, std::uint64_t q);

/// C_n = {x : x^n = x}, via {0} together with the x != 0 whose discrete log
/// times n-1 vanishes mod q-1. Labeled "C_<n0>".
ElementSet potent_set(const FieldTable &field, std::uint64_t n);

} // namespace ffpotent
