#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

#include "ffpotent/records.hpp"
#include "ffpotent/session.hpp"

using namespace ffpotent;
namespace fs = std::filesystem;

namespace {

struct Run
{
	int code = -1;
	std::string out;
};

Run cli(const std::string &args)
{
	const std::string cmd = std::string(FFPOTENT_CLI_PATH) + " " + args + " 2>/dev/null";
	Run r;
	FILE *pipe = ::popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	std::array<char, 4096> buf{};
	std::size_t n;
	while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
		r.out.append(buf.data(), n);
	const int status = ::pclose(pipe);
	r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

bool has(const Run &r, const std::string &text)
{
	return r.out.find(text) != std::string::npos;
}

std::string first_line(const std::string &s)
{
	return s.substr(0, s.find('\n'));
}

std::string slurp(const fs::path &p)
{
	std::ifstream in(p, std::ios::binary);
	std::stringstream s;
	s << in.rdbuf();
	return s.str();
}

} // namespace

TEST_CASE("cover")
{
	auto r = cli("cover --q 13 --m 5 --k 7");
	CHECK(r.code == 0);
	CHECK(has(r, "C_5 + C_7: covered"));

	r = cli("cover --q 37 --m 5 --k 19");
	CHECK(r.code == 1);
	CHECK(has(r, "not covered"));
	CHECK(has(r, "missing: 14 23"));

	CHECK(cli("cover --q 12 --m 5 --k 7").code == 2);
	CHECK(cli("cover --q 13 --m 1 --k 7").code == 2);
	CHECK(cli("cover --q 13 --m 5").code == 2);

	r = cli("cover --q 13 --m 9 --k 19");
	CHECK(r.code == 0);
	CHECK(has(r, "normalized: m=9 -> 5, k=19 -> 7"));
}

TEST_CASE("charsum")
{
	auto r = cli("charsum --q 17 --d 2 --m 5");
	CHECK(r.code == 0);
	CHECK(has(r, "S(2; 17, C_5) = 0"));
	CHECK(has(r, "C_5 + C_9 covers F_17"));

	r = cli("charsum --q 2809 --d 2 --m 5");
	CHECK(r.code == 0);
	CHECK(has(r, "lower_bound = 52\n"));

	CHECK(has(cli("charsum --q 13 --d 3 --m 5"), "S(3; 13, C_5) = 0"));
	CHECK(has(cli("charsum --q 37 --d 2 --m 5"), "S(2; 37, C_5) = 64"));
	CHECK(cli("charsum --q 13 --d 5 --m 5").code == 2);
	CHECK(cli("charsum --q 13 --d 2").code == 2);
	CHECK(cli("charsum --q 13 --d 2 --set 0,1,99").code == 2);
	CHECK(cli("charsum --q 13 --d 2 --set 0,1,5,8,12").code == 0);

	r = cli("charsum --q 37 --d 2 --m 5 --json");
	CHECK(r.code == 0);
	const auto rec = parse_record(first_line(r.out));
	CHECK(rec.kind == RecordKind::charsum);
	CHECK(rec.q == 37);
	CHECK(rec.k == 19);
	CHECK_FALSE(rec.covered);
	CHECK(rec.extra["exact_S"].get<std::uint64_t>() == 64);
}

TEST_CASE("bound")
{
	auto r = cli("bound --set-size 10");
	CHECK(r.code == 0);
	CHECK(first_line(r.out) == "104857600");
	r = cli("bound --set-size 5");
	CHECK(first_line(r.out) == "25600");
	CHECK(has(r, "2809"));
	CHECK(cli("bound --set-size 0").code == 2);
	CHECK(cli("bound").code == 2);
}

TEST_CASE("search and triple")
{
	const auto dir = fs::temp_directory_path() / "ffpotent_cli_test";
	fs::remove_all(dir);
	fs::create_directories(dir);

	auto r = cli("search --m 5 --limit 3 --out " + (dir / "s.jsonl").string() + " --csv " + (dir / "s.csv").string());
	CHECK(r.code == 0);
	CHECK(has(r, "1 pair"));
	CHECK(slurp(dir / "s.jsonl") == "{\"q\":3,\"p\":3,\"v\":1,\"m\":5,\"k\":2,\"covered\":true,\"kind\":\"pair-search\"}\n");
	CHECK(slurp(dir / "s.csv") == "q,p,v,m,k\n3,3,1,5,2\n");

	r = cli("search --m 3 --limit 100");
	CHECK(r.code == 0);
	CHECK(has(r, "4 pairs"));

	CHECK(cli("search --m 1 --limit 100").code == 2);
	CHECK(cli("search --m 5").code == 2);
	CHECK(cli("search --m 5 --limit 100 --resume").code == 2);

	const auto out = (dir / "h.jsonl").string();
	r = cli("search --m 5 --limit 500 --out " + out + " --halt-after 20");
	CHECK(r.code == 0);
	CHECK(has(r, "halted"));
	CHECK(cli("search --m 3 --limit 500 --resume --out " + out).code == 3);
	r = cli("search --m 5 --limit 500 --resume --jobs 4 --out " + out);
	CHECK(r.code == 0);
	CHECK(has(r, "18 pairs"));

	r = cli("triple --limit 100 --out " + (dir / "t.jsonl").string());
	CHECK(r.code == 0);
	CHECK(has(r, "max |C_3+C_4| over q tested in this run: 10"));
	for (const auto &rec : read_records(dir / "t.jsonl"))
		CHECK(rec.extra["left_size"].get<int>() <= 10);

	fs::remove_all(dir);
}
