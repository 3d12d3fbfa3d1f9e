#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "netfreq/nf_online.hpp"
#include "netfreq/oracle.hpp"
#include "test_support.hpp"

namespace netfreq {
namespace {

using testing::sym;
using testing::Text;

struct CommandResult {
    int code;
    std::string out;
    std::string err;
};

std::filesystem::path write_file(const std::string& name, const std::string& bytes) {
    const auto path = std::filesystem::temp_directory_path() / ("netfreq_cli_" + name);
    std::ofstream(path, std::ios::binary) << bytes;
    return path;
}

CommandResult offline(const std::string& bytes, std::optional<std::string> query = std::nullopt) {
    const auto path = write_file("input", bytes);
    std::ostringstream out, err;
    const int code = cli::cmd_offline(path.string(), query, out, err);
    return {code, out.str(), err.str()};
}

CommandResult stream(const std::string& script) {
    std::istringstream in(script);
    std::ostringstream out, err;
    const int code = cli::cmd_stream(in, out, err);
    return {code, out.str(), err.str()};
}

TEST(Escape, RoundTrip) {
    EXPECT_EQ(cli::escape(sym("a\\b")), "a\\\\b");
    EXPECT_EQ(cli::escape(Text{0x00, 0x1f, 0x7f, 0xff, ' ', '~'}), "\\x00\\x1f\\x7f\\xff ~");
    for (int c = 0; c < 256; ++c) {
        const Text s{static_cast<Symbol>(c), 'x'};
        EXPECT_EQ(cli::unescape(cli::escape(s)), s);
    }
    EXPECT_FALSE(cli::unescape("a\\$"));
    EXPECT_FALSE(cli::unescape("a\\"));
    EXPECT_FALSE(cli::unescape("\\x4"));
    EXPECT_FALSE(cli::unescape("\\q"));
}

TEST(Offline, Query) {
    const CommandResult r = offline("rstkstcastarstast", "st");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");
    EXPECT_EQ(offline("rstkstcastarstast", "zz").out, "0\n");
}

TEST(Offline, EmptyTable) {
    const CommandResult r = offline("");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "start\tend\tnf\tstring\n");
}

TEST(Offline, TableMatchesOracle) {
    const CommandResult r = offline("aabaabababaa");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\n2\t5\t2\tabaa\n"), std::string::npos);
    // Every row agrees with the oracle on the sealed text.
    std::map<std::string, std::size_t> expected;
    for (const auto& e : oracle::all_nf(sym("aabaabababaa"), true)) expected[to_bytes(e.string)] = e.nf;
    std::istringstream rows(r.out);
    std::string line;
    std::getline(rows, line);
    std::size_t count = 0;
    while (std::getline(rows, line)) {
        std::istringstream f(line);
        std::size_t start, end, nf;
        std::string s;
        f >> start >> end >> nf >> s;
        EXPECT_EQ(s.size(), end - start + 1);
        EXPECT_EQ(expected.at(s), nf) << s;
        ++count;
    }
    EXPECT_EQ(count, expected.size());
}

TEST(Offline, EscapedBytes) {
    const CommandResult r = offline(std::string("\\\n\\\n", 4));
    const std::size_t nf = oracle::nf(Text{'\\', '\n', '\\', '\n'}, Text{'\\', '\n'}, true);
    EXPECT_EQ(r.out, "start\tend\tnf\tstring\n1\t2\t" + std::to_string(nf) + "\t\\\\\\x0a\n");
    EXPECT_EQ(offline(std::string("a\0a\0", 4), "a\\x00").out,
              std::to_string(oracle::nf(Text{'a', 0, 'a', 0}, Text{'a', 0}, true)) + "\n");
}

TEST(Offline, Errors) {
    std::ostringstream out, err;
    EXPECT_NE(cli::cmd_offline("/nonexistent/netfreq/input", std::nullopt, out, err), 0);
    EXPECT_FALSE(err.str().empty());
    const CommandResult r = offline("ab$", "b\\$");
    EXPECT_EQ(r.code, cli::kExitUsage);
    EXPECT_TRUE(r.out.empty());
}

TEST(Stream, Examples) {
    EXPECT_EQ(stream("+ab\n? a\n").out, "0\n");
    EXPECT_EQ(stream("+ab\n? \n").out, "0\n");
    const CommandResult r = stream("+aabaabababaa\n#\n");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("n=12 active_depth=4 nodes="), std::string::npos);
}

TEST(Stream, MalformedLinesContinue) {
    const CommandResult r = stream("+ab\nhello\n?a\n!x\n? a\\q\n+a\n? a\n");
    EXPECT_EQ(r.code, cli::kExitFailure);
    EXPECT_EQ(r.out, std::to_string(oracle::nf(sym("aba"), sym("a"), false)) + "\n");
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
    EXPECT_NE(r.err.find("line 5"), std::string::npos);
}

TEST(Stream, ReplayMatchesOracle) {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 20; ++round) {
        std::string script, expected;
        Text text;
        for (int step = 0; step < 30; ++step) {
            const std::size_t k = 1 + rng() % 4;
            std::string chunk;
            for (std::size_t i = 0; i < k; ++i) chunk += static_cast<char>('a' + rng() % 3);
            script += "+" + chunk + "\n";
            for (char c : chunk) text.push_back(static_cast<unsigned char>(c));
            const std::size_t a = rng() % text.size();
            const std::size_t len = 1 + rng() % std::min<std::size_t>(4, text.size() - a);
            const Text q(text.begin() + static_cast<std::ptrdiff_t>(a),
                         text.begin() + static_cast<std::ptrdiff_t>(a + len));
            script += "? " + to_bytes(q) + "\n";
            expected += std::to_string(oracle::nf(text, q, false)) + "\n";
        }
        script += "!\n";
        const CommandResult r = stream(script);
        ASSERT_EQ(r.code, 0);
        const std::string table = r.out.substr(expected.size());
        EXPECT_EQ(r.out.substr(0, expected.size()), expected);

        std::map<std::string, std::size_t> oracle_rows;
        for (const auto& e : oracle::all_nf_lce(text, false)) oracle_rows[to_bytes(e.string)] = e.nf;
        std::istringstream rows(table);
        std::string line;
        std::getline(rows, line);
        ASSERT_EQ(line, "start\tend\tnf\tstring");
        std::size_t count = 0, prev_start = 0, prev_end = 0;
        while (std::getline(rows, line)) {
            std::istringstream f(line);
            std::size_t start, end, nf;
            std::string s;
            f >> start >> end >> nf >> s;
            EXPECT_TRUE(std::pair(start, end) > std::pair(prev_start, prev_end));
            prev_start = start;
            prev_end = end;
            EXPECT_EQ(oracle_rows.at(s), nf);
            ++count;
        }
        EXPECT_EQ(count, oracle_rows.size());
    }
}

TEST(Bench, RowAndDeterminism) {
    std::ostringstream out, err;
    EXPECT_EQ(cli::cmd_bench(5000, 4, 7, out, err), 0);
    const std::string row = out.str();
    EXPECT_EQ(row.rfind("5000,4,7,", 0), 0u);
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 5);

    const auto a = cli::run_bench(3000, 4, 9);
    const auto b = cli::run_bench(3000, 4, 9);
    EXPECT_EQ(cli::bench_text(3000, 4, 9), cli::bench_text(3000, 4, 9));
    EXPECT_EQ(a.reports, b.reports);
    EXPECT_EQ(a.query_nf_sum, b.query_nf_sum);
    EXPECT_LE(a.reports, 3000u);
}

TEST(Bench, ZeroLengthIsUsageError) {
    std::ostringstream out, err;
    EXPECT_EQ(cli::cmd_bench(0, 4, 1, out, err), cli::kExitUsage);
    EXPECT_TRUE(out.str().empty());
}

}  // namespace
}  // namespace netfreq
