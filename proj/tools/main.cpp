#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Net frequency of substrings in a growing text"};
    app.require_subcommand(1);

    std::string input;
    std::optional<std::string> query;
    auto* offline = app.add_subcommand("offline", "Analyze a file as a complete text");
    offline->add_option("--input", input, "Path of the text file")->required();
    offline->add_option("--query", query, "Print the net frequency of one string");

    auto* stream = app.add_subcommand("stream", "Read +text / ? query / ! / # commands from stdin");

    std::size_t n = 0;
    std::size_t alphabet = 4;
    std::uint64_t seed = 1;
    auto* bench = app.add_subcommand("bench", "Time construction and queries on a random text");
    bench->add_option("--n", n, "Text length")->required();
    bench->add_option("--alphabet", alphabet, "Alphabet size")->capture_default_str();
    bench->add_option("--seed", seed, "Generator seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : netfreq::cli::kExitUsage;
    }

    if (*offline) return netfreq::cli::cmd_offline(input, query, std::cout, std::cerr);
    if (*stream) return netfreq::cli::cmd_stream(std::cin, std::cout, std::cerr);
    return netfreq::cli::cmd_bench(n, alphabet, seed, std::cout, std::cerr);
}
