#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <stdexcept>

#include "netfreq/nf_offline.hpp"
#include "netfreq/nf_online.hpp"
#include "netfreq/online_builder.hpp"

namespace netfreq::cli {

namespace {

constexpr char kHex[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point since) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - since).count());
}

}  // namespace

std::string escape(std::span<const Symbol> s) {
    std::string out;
    out.reserve(s.size());
    for (Symbol c : s) {
        if (c > 0xFF) throw std::invalid_argument("escape: symbol is not a byte");
        if (c == '\\') {
            out += "\\\\";
        } else if (c >= 0x20 && c <= 0x7E) {
            out += static_cast<char>(c);
        } else {
            out += "\\x";
            out += kHex[c >> 4];
            out += kHex[c & 0xF];
        }
    }
    return out;
}

std::optional<std::vector<Symbol>> unescape(std::string_view s) {
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out.push_back(static_cast<unsigned char>(s[i]));
            continue;
        }
        if (++i == s.size()) return std::nullopt;
        if (s[i] == '\\') {
            out.push_back('\\');
        } else if (s[i] == 'x' && i + 2 < s.size() && hex_value(s[i + 1]) >= 0 && hex_value(s[i + 2]) >= 0) {
            out.push_back(static_cast<Symbol>(hex_value(s[i + 1]) * 16 + hex_value(s[i + 2])));
            i += 2;
        } else {
            return std::nullopt;
        }
    }
    return out;
}

void write_table(const SuffixTree& tree, const std::vector<NfReport>& reports, std::ostream& out) {
    out << "start\tend\tnf\tstring\n";
    for (const NfReport& r : reports) {
        out << r.occurrence.start << '\t' << r.occurrence.end << '\t' << r.nf << '\t'
            << escape(tree.text().substring(r.occurrence)) << '\n';
    }
}

int cmd_offline(const std::string& path, const std::optional<std::string>& query, std::ostream& out,
                std::ostream& err) {
    std::optional<std::vector<Symbol>> pattern;
    if (query) {
        pattern = unescape(*query);
        if (!pattern) {
            err << "netfreq: invalid query '" << *query << "' (the sentinel cannot be queried)\n";
            return kExitUsage;
        }
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << "netfreq: cannot read " << path << '\n';
        return kExitFailure;
    }
    const std::string bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    if (file.bad()) {
        err << "netfreq: error reading " << path << '\n';
        return kExitFailure;
    }
    const OnlineBuilder index = build_sealed(to_symbols(bytes));
    if (pattern) {
        out << (pattern->empty() ? 0 : offline_single_nf(index.tree(), *pattern)) << '\n';
    } else {
        write_table(index.tree(), offline_all_nf(index.tree()), out);
    }
    return kExitOk;
}

int cmd_stream(std::istream& in, std::ostream& out, std::ostream& err) {
    OnlineBuilder index;
    bool malformed = false;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string_view rest = std::string_view(line).substr(1);
        switch (line[0]) {
            case '+':
                for (char c : rest) index.append(static_cast<unsigned char>(c));
                continue;
            case '?':
                if (!rest.empty() && rest[0] == ' ') {
                    if (const auto s = unescape(rest.substr(1))) {
                        out << (s->empty() ? 0 : online_single_nf(index, *s)) << '\n';
                        continue;
                    }
                }
                break;
            case '!':
                if (rest.empty()) {
                    write_table(index.tree(), online_all_nf(index), out);
                    continue;
                }
                break;
            case '#':
                if (rest.empty()) {
                    out << "n=" << index.text().size() << " active_depth=" << index.active_point().depth
                        << " nodes=" << index.tree().node_count() << '\n';
                    continue;
                }
                break;
            default:
                break;
        }
        malformed = true;
        err << "netfreq: line " << line_no << ": malformed command\n";
    }
    out.flush();
    return malformed ? kExitFailure : kExitOk;
}

std::vector<Symbol> bench_text(std::size_t n, std::size_t alphabet, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet - 1);
    std::vector<Symbol> text(n);
    for (Symbol& c : text) c = static_cast<Symbol>(pick(rng));
    return text;
}

BenchResult run_bench(std::size_t n, std::size_t alphabet, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (alphabet == 0 || alphabet > kMaxAlphabetSize) throw std::invalid_argument("alphabet must be in [1, 256]");
    const std::vector<Symbol> text = bench_text(n, alphabet, seed);

    BenchResult r{n, alphabet, seed};
    auto t0 = std::chrono::steady_clock::now();
    OnlineBuilder index(alphabet);
    index.append(text);
    r.build_ns = elapsed_ns(t0);

    t0 = std::chrono::steady_clock::now();
    r.reports = online_all_nf(index).size();
    r.allnf_ns = elapsed_ns(t0);

    // Queries are substrings of the text so every one walks the full pattern.
    const std::size_t len = std::min(kBenchQueryLength, n);
    std::mt19937_64 rng(seed ^ 0x9E3779B97F4A7C15ULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - len);
    std::vector<std::size_t> starts(kBenchQueries);
    for (auto& s : starts) s = pick(rng);
    t0 = std::chrono::steady_clock::now();
    for (std::size_t s : starts) r.query_nf_sum += online_single_nf(index, std::span(text).subspan(s, len));
    r.singlenf_ns_per_query = static_cast<double>(elapsed_ns(t0)) / static_cast<double>(kBenchQueries);
    return r;
}

int cmd_bench(std::size_t n, std::size_t alphabet, std::uint64_t seed, std::ostream& out, std::ostream& err) {
    BenchResult r;
    try {
        r = run_bench(n, alphabet, seed);
    } catch (const std::invalid_argument& e) {
        err << "netfreq: " << e.what() << '\n';
        return kExitUsage;
    }
    out << r.n << ',' << r.alphabet << ',' << r.seed << ',' << r.build_ns << ',' << r.allnf_ns << ','
        << static_cast<std::uint64_t>(r.singlenf_ns_per_query) << '\n';
    return kExitOk;
}

}  // namespace netfreq::cli
