#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ffpotent {

enum class RecordKind { pair_search, triple_search, charsum, bound };

std::string_view to_string(RecordKind kind) noexcept;
RecordKind parse_record_kind(std::string_view text);

/// One line of a result file. For triple-search records m is 0 and the left
/// summand set (C_3 + C_4) is described in extra.
struct ResultRecord
{
	std::uint32_t q = 0;
	std::uint32_t p = 0;
	std::uint32_t v = 0;
	std::uint64_t m = 0;
	std::uint64_t k = 0;
	bool covered = false;
	RecordKind kind = RecordKind::pair_search;
	nlohmann::ordered_json extra = nlohmann::ordered_json::object();

	friend bool operator==(const ResultRecord &, const ResultRecord &) = default;
};

/// Compact JSON object, fields in declaration order, extra omitted when empty.
std::string to_json_line(const ResultRecord &record);
ResultRecord parse_record(std::string_view line);

struct Checkpoint
{
	std::string fingerprint;
	std::uint64_t last_completed_q = 0;
	std::uint64_t emitted_hit_count = 0;

	friend bool operator==(const Checkpoint &, const Checkpoint &) = default;
};

std::string to_json(const Checkpoint &checkpoint);
Checkpoint parse_checkpoint(std::string_view text);

/// Written to a sibling temporary and renamed into place.
void save_checkpoint(const std::filesystem::path &path, const Checkpoint &checkpoint);
std::optional<Checkpoint> load_checkpoint(const std::filesystem::path &path);

/// FNV-1a 64 over the canonical command text, as 16 hex digits.
std::string command_fingerprint(std::string_view canonical_command);

void write_csv(std::ostream &out, const std::vector<ResultRecord> &records);
void write_summary(std::ostream &out, const std::vector<ResultRecord> &records);

} // namespace ffpotent
