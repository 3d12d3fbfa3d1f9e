#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netfreq/nf_report.hpp"
#include "netfreq/suffix_tree.hpp"

namespace netfreq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Printable ASCII passes through, backslash becomes "\\", anything else "\xNN".
std::string escape(std::span<const Symbol> s);

// Inverse of escape(). Returns nullopt for a malformed escape or for "\$",
// which is reserved for the sentinel.
std::optional<std::vector<Symbol>> unescape(std::string_view s);

void write_table(const SuffixTree& tree, const std::vector<NfReport>& reports, std::ostream& out);

int cmd_offline(const std::string& path, const std::optional<std::string>& query, std::ostream& out,
                std::ostream& err);

int cmd_stream(std::istream& in, std::ostream& out, std::ostream& err);

struct BenchResult {
    std::size_t n = 0;
    std::size_t alphabet = 0;
    std::uint64_t seed = 0;
    std::uint64_t build_ns = 0;
    std::uint64_t allnf_ns = 0;
    double singlenf_ns_per_query = 0;
    std::size_t reports = 0;
    std::size_t query_nf_sum = 0;
};

inline constexpr std::size_t kBenchQueryLength = 16;
inline constexpr std::size_t kBenchQueries = 2000;

std::vector<Symbol> bench_text(std::size_t n, std::size_t alphabet, std::uint64_t seed);

// Throws std::invalid_argument for n = 0 or an alphabet outside [1, 256].
BenchResult run_bench(std::size_t n, std::size_t alphabet, std::uint64_t seed);

int cmd_bench(std::size_t n, std::size_t alphabet, std::uint64_t seed, std::ostream& out, std::ostream& err);

}  // namespace netfreq::cli
