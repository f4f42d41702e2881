#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ffpotent/records.hpp"

namespace ffpotent {

enum class SearchKind { pairs, triple };

struct SearchJob
{
	SearchKind kind = SearchKind::pairs;
	std::uint64_t m = 5; // ignored for triple searches
	std::uint64_t limit = 2;
	unsigned jobs = 1;
	/// Result file; the checkpoint lives next to it as <out>.ckpt. Without an
	/// output file nothing is persisted and resume is rejected.
	std::optional<std::filesystem::path> out;
	bool resume = false;
	/// Stop after this many prime powers complete in this run, leaving the
	/// files exactly as an interruption at that checkpoint would.
	std::optional<std::size_t> halt_after;
};

struct SessionResult
{
	bool completed = false;
	std::size_t processed = 0;
	/// Every record of the search so far, including ones from earlier runs.
	std::vector<ResultRecord> records;
	/// Largest |C_3 + C_4| seen in this run (triple searches only).
	std::uint32_t max_left_size = 0;
};

std::filesystem::path checkpoint_path(const std::filesystem::path &out);

/// Canonical command text hashed into the checkpoint fingerprint. The worker
/// count is not part of it: output does not depend on it.
std::string canonical_command(const SearchJob &job);

/// Throws InvalidArgument for bad parameters and CheckpointMismatch when a
/// resume finds state that belongs to another command or is inconsistent.
SessionResult run_search_session(const SearchJob &job);

std::vector<ResultRecord> read_records(const std::filesystem::path &path);

} // namespace ffpotent
