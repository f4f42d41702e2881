#include "ffpotent/session.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ffpotent/coverage.hpp"
#include "ffpotent/error.hpp"
#include "ffpotent/ordered_pool.hpp"

namespace ffpotent {

namespace {

std::vector<ResultRecord> records_for(const SearchJob &job, const FieldSpec &spec, std::uint32_t &left_size)
{
	const FieldTable field = build_field(spec);
	std::vector<ResultRecord> out;
	if (job.kind == SearchKind::pairs)
	{
		for (const auto &hit : check_one(field, job.m))
			out.push_back({hit.q, hit.p, hit.v, hit.m, hit.k, true, RecordKind::pair_search, {}});
		return out;
	}
	const auto outcome = triple_check_one(field);
	left_size = outcome.left_size;
	if (outcome.left_size > 10)
		throw std::logic_error("|C_3 + C_4| exceeds 10 at q=" + std::to_string(spec.q));
	for (auto k : outcome.hit_k)
	{
		ResultRecord r{spec.q, spec.p, spec.v, 0, k, true, RecordKind::triple_search, {}};
		r.extra["left"] = "C_3+C_4";
		r.extra["left_size"] = outcome.left_size;
		out.push_back(std::move(r));
	}
	return out;
}

// Byte offset just past the first `lines` newline-terminated lines, or
// nullopt if the file holds fewer complete lines.
std::optional<std::uintmax_t> offset_after_lines(const std::filesystem::path &path, std::uint64_t lines)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		return lines == 0 ? std::optional<std::uintmax_t>(0) : std::nullopt;
	std::uintmax_t offset = 0;
	std::string line;
	for (std::uint64_t i = 0; i < lines; ++i)
	{
		if (!std::getline(in, line) || in.eof())
			return std::nullopt;
		offset += line.size() + 1;
	}
	return offset;
}

struct Work
{
	std::vector<ResultRecord> records;
	std::uint32_t left_size = 0;
};

} // namespace

std::filesystem::path checkpoint_path(const std::filesystem::path &out)
{
	auto p = out;
	p += ".ckpt";
	return p;
}

std::string canonical_command(const SearchJob &job)
{
	std::ostringstream s;
	if (job.kind == SearchKind::pairs)
		s << "search m=" << job.m << " limit=" << job.limit;
	else
		s << "triple limit=" << job.limit;
	return s.str();
}

std::vector<ResultRecord> read_records(const std::filesystem::path &path)
{
	std::ifstream in(path, std::ios::binary);
	std::vector<ResultRecord> out;
	std::string line;
	while (std::getline(in, line))
		if (!line.empty())
			out.push_back(parse_record(line));
	return out;
}

SessionResult run_search_session(const SearchJob &job)
{
	if (job.kind == SearchKind::pairs && job.m < 2)
		throw Error(ErrorKind::InvalidArgument, "m must be at least 2");
	if (job.limit < 2)
		throw Error(ErrorKind::InvalidArgument, "limit must be at least 2");
	if (job.limit > configured_field_capacity())
		throw Error(ErrorKind::InvalidArgument, "limit exceeds the field capacity");
	if (job.jobs < 1)
		throw Error(ErrorKind::InvalidArgument, "jobs must be at least 1");
	if (job.resume && !job.out)
		throw Error(ErrorKind::InvalidArgument, "resume needs an output file");

	const auto specs = prime_powers_up_to(job.limit);
	Checkpoint state{command_fingerprint(canonical_command(job)), 0, 0};
	std::size_t start = 0;
	std::ofstream out;
	SessionResult result;

	if (job.out)
	{
		const auto ckpt_path = checkpoint_path(*job.out);
		std::optional<Checkpoint> previous;
		if (job.resume)
			previous = load_checkpoint(ckpt_path);

		if (previous)
		{
			if (previous->fingerprint != state.fingerprint)
				throw Error(ErrorKind::CheckpointMismatch, "checkpoint " + ckpt_path.string() +
				                                               " belongs to a different command");
			const auto keep = offset_after_lines(*job.out, previous->emitted_hit_count);
			if (!keep)
				throw Error(ErrorKind::CheckpointMismatch,
				            "result file has fewer records than the checkpoint claims");
			// Drops anything written after the last checkpoint.
			std::filesystem::resize_file(*job.out, *keep);
			state = *previous;
			start = static_cast<std::size_t>(
			    std::upper_bound(specs.begin(), specs.end(), state.last_completed_q,
			                     [](std::uint64_t q, const FieldSpec &s) { return q < s.q; }) -
			    specs.begin());
		}
		else
		{
			std::error_code ec;
			if (job.resume && std::filesystem::exists(*job.out) && std::filesystem::file_size(*job.out, ec) > 0)
				throw Error(ErrorKind::CheckpointMismatch,
				            "result file exists without a checkpoint; rerun without --resume");
			std::ofstream(*job.out, std::ios::binary | std::ios::trunc);
			save_checkpoint(ckpt_path, state);
		}
		out.open(*job.out, std::ios::binary | std::ios::app);
		if (!out)
			throw Error(ErrorKind::InvalidArgument, "cannot open " + job.out->string());
	}

	std::vector<ResultRecord> in_memory;
	run_ordered<Work>(
	    specs.size() - start, job.jobs,
	    [&](std::size_t i) {
		    Work w;
		    w.records = records_for(job, specs[start + i], w.left_size);
		    return w;
	    },
	    [&](std::size_t i, Work &&w) {
		    result.max_left_size = std::max(result.max_left_size, w.left_size);
		    if (job.out)
		    {
			    for (const auto &r : w.records)
				    out << to_json_line(r) << '\n';
			    out.flush();
			    state.last_completed_q = specs[start + i].q;
			    state.emitted_hit_count += w.records.size();
			    save_checkpoint(checkpoint_path(*job.out), state);
		    }
		    else
			    in_memory.insert(in_memory.end(), w.records.begin(), w.records.end());
		    ++result.processed;
		    return !(job.halt_after && result.processed >= *job.halt_after);
	    });

	result.completed = start + result.processed == specs.size();
	if (job.out)
	{
		out.close();
		result.records = read_records(*job.out);
	}
	else
		result.records = std::move(in_memory);
	return result;
}

} // namespace ffpotent
