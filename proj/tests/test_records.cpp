#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"

#include "ffpotent/error.hpp"
#include "ffpotent/records.hpp"

using namespace ffpotent;

TEST_CASE("record serialization layout")
{
	const ResultRecord r{13, 13, 1, 5, 7, true, RecordKind::pair_search, {}};
	CHECK(to_json_line(r) == R"({"q":13,"p":13,"v":1,"m":5,"k":7,"covered":true,"kind":"pair-search"})");

	ResultRecord t{125, 5, 3, 0, 63, true, RecordKind::triple_search, {}};
	t.extra["left"] = "C_3+C_4";
	t.extra["left_size"] = 10;
	CHECK(to_json_line(t) ==
	      R"({"q":125,"p":5,"v":3,"m":0,"k":63,"covered":true,"kind":"triple-search","extra":{"left":"C_3+C_4","left_size":10}})");
}

TEST_CASE("records round-trip")
{
	std::mt19937_64 rng(12345);
	const RecordKind kinds[] = {RecordKind::pair_search, RecordKind::triple_search, RecordKind::charsum,
	                            RecordKind::bound};
	for (int i = 0; i < 500; ++i)
	{
		ResultRecord r;
		r.q = static_cast<std::uint32_t>(rng() % 5'000'000);
		r.p = static_cast<std::uint32_t>(rng() % 5000);
		r.v = static_cast<std::uint32_t>(rng() % 23);
		r.m = rng();
		r.k = rng() % 100000;
		r.covered = rng() & 1;
		r.kind = kinds[rng() % 4];
		if (rng() & 1)
		{
			r.extra["exact_S"] = rng();
			r.extra["lower_bound"] = std::ldexp(static_cast<double>(rng() % 1000000) - 500000.0, -7);
			r.extra["slack"] = static_cast<double>(rng()) / 3.0;
			r.extra["big"] = "340282366920938463463374607431768211455";
			r.extra["neg"] = -static_cast<std::int64_t>(rng() % 1000);
		}
		const auto line = to_json_line(r);
		CHECK(line.find('\n') == std::string::npos);
		REQUIRE(parse_record(line) == r);
		REQUIRE(to_json_line(parse_record(line)) == line);
	}
}

TEST_CASE("record parse errors")
{
	for (const char *bad : {"", "{", "[]", R"({"q":1})",
	                        R"({"q":13,"p":13,"v":1,"m":5,"k":7,"covered":true,"kind":"nope"})",
	                        R"({"q":-1,"p":13,"v":1,"m":5,"k":7,"covered":true,"kind":"pair-search"})",
	                        R"({"q":13,"p":13,"v":1,"m":5,"k":7,"covered":1,"kind":"pair-search"})"})
	{
		try
		{
			parse_record(bad);
			FAIL("accepted: ", bad);
		}
		catch (const Error &e)
		{
			CHECK(e.kind() == ErrorKind::InvalidArgument);
		}
	}
}

TEST_CASE("checkpoint persistence")
{
	const auto dir = std::filesystem::temp_directory_path() / "ffpotent_records_test";
	std::filesystem::create_directories(dir);
	const auto path = dir / "run.ckpt";
	std::filesystem::remove(path);

	CHECK_FALSE(load_checkpoint(path).has_value());
	const Checkpoint c{command_fingerprint("search m=5 limit=100"), 97, 12};
	save_checkpoint(path, c);
	CHECK(load_checkpoint(path) == c);
	CHECK(parse_checkpoint(to_json(c)) == c);
	CHECK_FALSE(std::filesystem::exists(dir / "run.ckpt.tmp"));

	std::ofstream(path) << "{broken";
	try
	{
		load_checkpoint(path);
		FAIL("corrupt checkpoint accepted");
	}
	catch (const Error &e)
	{
		CHECK(e.kind() == ErrorKind::CheckpointMismatch);
	}
	std::filesystem::remove_all(dir);
}

TEST_CASE("fingerprints")
{
	// FNV-1a 64 reference values
	CHECK(command_fingerprint("") == "cbf29ce484222325");
	CHECK(command_fingerprint("a") == "af63dc4c8601ec8c");
	CHECK(command_fingerprint("search m=5 limit=10000") != command_fingerprint("search m=3 limit=10000"));
}

TEST_CASE("csv and summary")
{
	const std::vector<ResultRecord> rs{{3, 3, 1, 5, 2, true, RecordKind::pair_search, {}},
	                                   {125, 5, 3, 5, 63, true, RecordKind::pair_search, {}}};
	std::ostringstream csv;
	write_csv(csv, rs);
	CHECK(csv.str() == "q,p,v,m,k\n3,3,1,5,2\n125,5,3,5,63\n");
	std::ostringstream summary;
	write_summary(summary, rs);
	CHECK(summary.str().find("2 pairs") != std::string::npos);
}
