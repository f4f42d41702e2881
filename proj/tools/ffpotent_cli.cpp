#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "ffpotent/charsum.hpp"
#include "ffpotent/coverage.hpp"
#include "ffpotent/error.hpp"
#include "ffpotent/field.hpp"
#include "ffpotent/potent.hpp"
#include "ffpotent/records.hpp"
#include "ffpotent/session.hpp"

using namespace ffpotent;

namespace {

// exit codes
constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_state = 3;

int exit_code_for(const Error &e)
{
	return e.kind() == ErrorKind::CheckpointMismatch ? exit_state : exit_usage;
}

struct SearchOptions
{
	std::uint64_t m = 5;
	std::uint64_t limit = 0;
	unsigned jobs = 1;
	std::string out;
	std::string csv;
	bool resume = false;
	std::size_t halt_after = 0;
};

int run_search(SearchKind kind, const SearchOptions &o)
{
	SearchJob job;
	job.kind = kind;
	job.m = o.m;
	job.limit = o.limit;
	job.jobs = o.jobs;
	job.resume = o.resume;
	if (!o.out.empty())
		job.out = o.out;
	if (o.halt_after > 0)
		job.halt_after = o.halt_after;

	const auto result = run_search_session(job);
	if (!result.completed)
	{
		fmt::print("halted after {} prime powers; rerun with --resume to continue\n", result.processed);
		return exit_ok;
	}
	write_summary(std::cout, result.records);
	if (kind == SearchKind::triple)
		fmt::print("max |C_3+C_4| over q tested in this run: {} (bound 10)\n", result.max_left_size);
	if (!o.csv.empty())
	{
		std::ofstream csv(o.csv, std::ios::binary | std::ios::trunc);
		write_csv(csv, result.records);
	}
	return exit_ok;
}

int run_cover(std::uint64_t q, std::uint64_t m, std::uint64_t k)
{
	const FieldTable field = build_field(q);
	const auto left = potent_set(field, m);
	const auto right = potent_set(field, k);
	const auto report = covers(field, left, right);
	const auto &s = field.spec();
	fmt::print("F_{} (p={}, v={})\n", s.q, s.p, s.v);
	if (normalize_exponent(m, q) != m || normalize_exponent(k, q) != k)
		fmt::print("normalized: m={} -> {}, k={} -> {}\n", m, normalize_exponent(m, q), k, normalize_exponent(k, q));
	fmt::print("{} + {}: {} (sumset size {}/{})\n", report.left_label, report.right_label,
	           report.covered ? "covered" : "not covered", report.sum_size, report.q);
	if (!report.covered)
	{
		std::vector<std::uint32_t> missing;
		for (auto e : report.missing)
			missing.push_back(e.index);
		fmt::print("missing: {}\n", fmt::join(missing, " "));
	}
	return report.covered ? exit_ok : exit_negative;
}

std::vector<Element> parse_set_spec(const std::string &text)
{
	std::vector<Element> out;
	std::stringstream in(text);
	std::string item;
	while (std::getline(in, item, ','))
	{
		std::size_t used = 0;
		const auto value = std::stoul(item, &used);
		if (used != item.size())
			throw Error(ErrorKind::InvalidArgument, "bad element '" + item + "' in set");
		out.push_back({static_cast<std::uint32_t>(value)});
	}
	return out;
}

int run_charsum(std::uint64_t q, std::uint64_t d, std::optional<std::uint64_t> m, const std::string &set_text,
                bool json)
{
	const FieldTable field = build_field(q);
	ElementSet set = m ? potent_set(field, *m) : ElementSet(field.spec(), parse_set_spec(set_text), "A");
	const auto report = charsum_report(field, d, set);
	const std::uint64_t n = 1 + (q - 1) / d;
	const bool covered = report.exact_value == 0;

	if (json)
	{
		const auto &s = field.spec();
		ResultRecord r{s.q, s.p, s.v, m.value_or(0), n, covered, RecordKind::charsum, {}};
		r.extra["d"] = d;
		r.extra["set"] = report.set_label;
		r.extra["set_size"] = report.set_size;
		if (report.exact_value <= UINT64_MAX)
			r.extra["exact_S"] = report.exact_value.convert_to<std::uint64_t>();
		else
			r.extra["exact_S"] = report.exact_value.str();
		r.extra["lower_bound"] = report.lower_bound;
		r.extra["slack"] = report.slack;
		fmt::print("{}\n", to_json_line(r));
		return exit_ok;
	}
	fmt::print("S({}; {}, {}) = {}\n", d, q, report.set_label, report.exact_value.str());
	fmt::print("lower_bound = {:.10g}\n", report.lower_bound);
	fmt::print("slack = {:.10g}\n", report.slack);
	fmt::print("bound positive: {}\n", report.bound_positive ? "yes" : "no");
	fmt::print("coverage: {} + C_{} {} F_{}\n", report.set_label, n, covered ? "covers" : "does not cover", q);
	return exit_ok;
}

int run_bound(std::uint64_t set_size)
{
	fmt::print("{}\n", threshold_M(set_size));
	fmt::print("S(d;q,A) > 0 for all q > (2^s s)^2 with s = |A| = {}\n", set_size);
	fmt::print("refined: the Weil bound is already positive for q >= {}\n", smallest_positive_bound_q(set_size));
	if (set_size == 5)
		fmt::print("for the 5-potent case q > 53^2 = 2809 suffices\n");
	return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"finite fields whose elements are sums of potents"};
	app.require_subcommand(1);

	SearchOptions search_opts;
	auto *search = app.add_subcommand("search", "all (q, k) with C_m + C_k = F_q for prime powers q <= limit");
	search->add_option("--m", search_opts.m, "left potent exponent")->required();
	search->add_option("--limit", search_opts.limit, "largest q to test")->required();
	search->add_option("--jobs", search_opts.jobs, "worker threads");
	search->add_option("--out", search_opts.out, "JSON-lines result file (checkpoint at <out>.ckpt)");
	search->add_option("--csv", search_opts.csv, "also write the hits as CSV");
	search->add_flag("--resume", search_opts.resume, "continue from the checkpoint of --out");
	search->add_option("--halt-after", search_opts.halt_after, "stop after this many prime powers");

	SearchOptions triple_opts;
	auto *triple = app.add_subcommand("triple", "all (q, k) with C_3 + C_4 + C_k = F_q");
	triple->add_option("--limit", triple_opts.limit, "largest q to test")->required();
	triple->add_option("--jobs", triple_opts.jobs, "worker threads");
	triple->add_option("--out", triple_opts.out, "JSON-lines result file");
	triple->add_option("--csv", triple_opts.csv, "also write the hits as CSV");
	triple->add_flag("--resume", triple_opts.resume, "continue from the checkpoint of --out");
	triple->add_option("--halt-after", triple_opts.halt_after, "stop after this many prime powers");

	std::uint64_t cover_q = 0, cover_m = 0, cover_k = 0;
	auto *cover = app.add_subcommand("cover", "test C_m + C_k = F_q");
	cover->add_option("--q", cover_q)->required();
	cover->add_option("--m", cover_m)->required();
	cover->add_option("--k", cover_k)->required();

	std::uint64_t cs_q = 0, cs_d = 0, cs_m = 0;
	std::string cs_set;
	bool cs_json = false;
	auto *charsum = app.add_subcommand("charsum", "exact S(d; q, A) with its Weil lower bound");
	charsum->add_option("--q", cs_q)->required();
	charsum->add_option("--d", cs_d, "character order, a divisor of q-1")->required();
	auto *m_opt = charsum->add_option("--m", cs_m, "use A = C_m");
	auto *set_opt = charsum->add_option("--set", cs_set, "comma-separated element indices for A");
	m_opt->excludes(set_opt);
	charsum->add_flag("--json", cs_json, "print a result record instead of text");

	std::uint64_t set_size = 0;
	auto *bound = app.add_subcommand("bound", "threshold (2^s s)^2 beyond which S > 0");
	bound->add_option("--set-size", set_size)->required();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		const int code = app.exit(e);
		return code == 0 ? 0 : exit_usage;
	}

	try
	{
		if (*search)
			return run_search(SearchKind::pairs, search_opts);
		if (*triple)
			return run_search(SearchKind::triple, triple_opts);
		if (*cover)
			return run_cover(cover_q, cover_m, cover_k);
		if (*charsum)
		{
			if (!*m_opt && !*set_opt)
			{
				std::cerr << "charsum: one of --m or --set is required\n";
				return exit_usage;
			}
			return run_charsum(cs_q, cs_d, *m_opt ? std::optional<std::uint64_t>(cs_m) : std::nullopt, cs_set,
			                   cs_json);
		}
		if (*bound)
		{
			if (set_size < 1)
			{
				std::cerr << "bound: --set-size must be at least 1\n";
				return exit_usage;
			}
			return run_bound(set_size);
		}
	}
	catch (const Error &e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return exit_code_for(e);
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return exit_usage;
	}
	return exit_usage;
}
