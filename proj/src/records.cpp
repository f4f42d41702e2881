#include "ffpotent/records.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <type_traits>
#include <ostream>
#include <sstream>

#include "ffpotent/error.hpp"

namespace ffpotent {

namespace {

using ojson = nlohmann::ordered_json;

template <typename T>
T get_field(const ojson &j, const char *name)
{
	if (!j.contains(name))
		throw Error(ErrorKind::InvalidArgument, std::string("record is missing field '") + name + "'");
	if constexpr (std::is_unsigned_v<T> && !std::is_same_v<T, bool>)
	{
		if (!j.at(name).is_number_unsigned())
			throw Error(ErrorKind::InvalidArgument, std::string("field '") + name + "' must be a nonnegative integer");
		if (j.at(name).get<std::uint64_t>() > std::numeric_limits<T>::max())
			throw Error(ErrorKind::InvalidArgument, std::string("field '") + name + "' out of range");
	}
	try
	{
		return j.at(name).get<T>();
	}
	catch (const nlohmann::json::exception &e)
	{
		throw Error(ErrorKind::InvalidArgument, std::string("bad field '") + name + "': " + e.what());
	}
}

ojson parse_object(std::string_view text)
{
	ojson j;
	try
	{
		j = ojson::parse(text);
	}
	catch (const nlohmann::json::parse_error &e)
	{
		throw Error(ErrorKind::InvalidArgument, std::string("malformed JSON: ") + e.what());
	}
	if (!j.is_object())
		throw Error(ErrorKind::InvalidArgument, "expected a JSON object");
	return j;
}

} // namespace

std::string_view to_string(RecordKind kind) noexcept
{
	switch (kind)
	{
	case RecordKind::pair_search: return "pair-search";
	case RecordKind::triple_search: return "triple-search";
	case RecordKind::charsum: return "charsum";
	case RecordKind::bound: return "bound";
	}
	return "pair-search";
}

RecordKind parse_record_kind(std::string_view text)
{
	for (auto kind : {RecordKind::pair_search, RecordKind::triple_search, RecordKind::charsum, RecordKind::bound})
		if (to_string(kind) == text)
			return kind;
	throw Error(ErrorKind::InvalidArgument, "unknown record kind '" + std::string(text) + "'");
}

std::string to_json_line(const ResultRecord &r)
{
	ojson j;
	j["q"] = r.q;
	j["p"] = r.p;
	j["v"] = r.v;
	j["m"] = r.m;
	j["k"] = r.k;
	j["covered"] = r.covered;
	j["kind"] = std::string(to_string(r.kind));
	if (!r.extra.empty())
		j["extra"] = r.extra;
	return j.dump();
}

ResultRecord parse_record(std::string_view line)
{
	const ojson j = parse_object(line);
	ResultRecord r;
	r.q = get_field<std::uint32_t>(j, "q");
	r.p = get_field<std::uint32_t>(j, "p");
	r.v = get_field<std::uint32_t>(j, "v");
	r.m = get_field<std::uint64_t>(j, "m");
	r.k = get_field<std::uint64_t>(j, "k");
	r.covered = get_field<bool>(j, "covered");
	r.kind = parse_record_kind(get_field<std::string>(j, "kind"));
	if (j.contains("extra"))
	{
		if (!j["extra"].is_object())
			throw Error(ErrorKind::InvalidArgument, "extra must be an object");
		r.extra = j["extra"];
	}
	return r;
}

std::string to_json(const Checkpoint &c)
{
	ojson j;
	j["fingerprint"] = c.fingerprint;
	j["last_completed_q"] = c.last_completed_q;
	j["emitted_hit_count"] = c.emitted_hit_count;
	return j.dump();
}

Checkpoint parse_checkpoint(std::string_view text)
{
	const ojson j = parse_object(text);
	Checkpoint c;
	c.fingerprint = get_field<std::string>(j, "fingerprint");
	c.last_completed_q = get_field<std::uint64_t>(j, "last_completed_q");
	c.emitted_hit_count = get_field<std::uint64_t>(j, "emitted_hit_count");
	return c;
}

void save_checkpoint(const std::filesystem::path &path, const Checkpoint &checkpoint)
{
	auto tmp = path;
	tmp += ".tmp";
	{
		std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
		out << to_json(checkpoint) << '\n';
		if (!out)
			throw Error(ErrorKind::InvalidArgument, "cannot write checkpoint " + tmp.string());
	}
	std::filesystem::rename(tmp, path);
}

std::optional<Checkpoint> load_checkpoint(const std::filesystem::path &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		return std::nullopt;
	std::stringstream buf;
	buf << in.rdbuf();
	try
	{
		return parse_checkpoint(buf.str());
	}
	catch (const Error &e)
	{
		throw Error(ErrorKind::CheckpointMismatch, "unreadable checkpoint " + path.string() + ": " + e.what());
	}
}

std::string command_fingerprint(std::string_view canonical_command)
{
	std::uint64_t h = 0xcbf29ce484222325ull;
	for (unsigned char c : canonical_command)
	{
		h ^= c;
		h *= 0x100000001b3ull;
	}
	char buf[17];
	std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
	return buf;
}

void write_csv(std::ostream &out, const std::vector<ResultRecord> &records)
{
	out << "q,p,v,m,k\n";
	for (const auto &r : records)
		out << r.q << ',' << r.p << ',' << r.v << ',' << r.m << ',' << r.k << '\n';
}

void write_summary(std::ostream &out, const std::vector<ResultRecord> &records)
{
	out << std::setw(8) << "q" << std::setw(6) << "p" << std::setw(4) << "v" << std::setw(8) << "k" << '\n';
	for (const auto &r : records)
		out << std::setw(8) << r.q << std::setw(6) << r.p << std::setw(4) << r.v << std::setw(8) << r.k << '\n';
	out << records.size() << (records.size() == 1 ? " pair" : " pairs") << '\n';
}

} // namespace ffpotent
