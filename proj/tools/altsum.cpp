// Command-line front end. Talks to the library only through altsum.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "altsum/altsum.h"

namespace {

struct Options {
    std::optional<std::size_t> n;
    std::string input;
    std::uint64_t seed = 0;
    std::string shape;
    std::string form;
    std::string kind = "colorful";
    std::optional<std::size_t> threads;
    std::uint64_t term_budget = 100'000'000;
    std::uint64_t node_cap = 10'000'000;
    std::string format = "text";
    bool timing = false;
    bool incremental = false;
};

struct ConfigDeleter {
    void operator()(altsum_config* c) const { altsum_config_destroy(c); }
};
struct InstanceDeleter {
    void operator()(altsum_instance* i) const { altsum_instance_destroy(i); }
};
struct ReportDeleter {
    void operator()(altsum_report* r) const { altsum_report_destroy(r); }
};
struct StringDeleter {
    void operator()(char* s) const { altsum_string_free(s); }
};
using ConfigPtr = std::unique_ptr<altsum_config, ConfigDeleter>;
using InstancePtr = std::unique_ptr<altsum_instance, InstanceDeleter>;
using ReportPtr = std::unique_ptr<altsum_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

/// Library or usage failure carrying the exit code to use.
struct Failure {
    int code;
    std::string message;
};

void check(altsum_status status) {
    if (status == ALTSUM_OK) return;
    const int code = status == ALTSUM_ERR_BUDGET ? 3 : status == ALTSUM_ERR_INPUT ? 2 : 1;
    throw Failure{code, altsum_last_error()};
}

/// "2,3", "(2,3)" or "[2, 3]".
std::vector<std::size_t> parse_shape(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::string cleaned;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && ch != ' ') cleaned += ch;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw Failure{2, "bad --shape \"" + text + "\": expected sizes such as 2,3"};
        sizes.push_back(std::stoul(item));
    }
    if (sizes.empty()) throw Failure{2, "empty --shape"};
    return sizes;
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{2, "cannot open " + path};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t resolve_threads(const Options& opts) {
    if (opts.threads) return *opts.threads;
    if (const char* env = std::getenv("ALTSUM_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long value = std::strtoul(env, &end, 10);
        if (*end != '\0' || value == 0) throw Failure{2, std::string("bad ALTSUM_THREADS value \"") + env + "\""};
        return value;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

InstancePtr load_instance(const Options& opts) {
    if (opts.input.empty()) return nullptr;
    const std::string text = read_input(opts.input);
    altsum_instance* raw = nullptr;
    const altsum_status status = altsum_instance_parse(text.c_str(), &raw);
    if (status != ALTSUM_OK) {
        const std::string where = opts.input == "-" ? "<stdin>" : opts.input;
        throw Failure{2, where + ": " + altsum_last_error()};
    }
    return InstancePtr(raw);
}

int run_command(const std::string& command, const Options& opts) {
    altsum_config* raw_config = nullptr;
    check(altsum_config_create(&raw_config));
    ConfigPtr config(raw_config);
    check(altsum_config_set_command(config.get(), command.c_str()));
    if (opts.n) check(altsum_config_set_n(config.get(), *opts.n));
    if (!opts.shape.empty()) {
        const auto sizes = parse_shape(opts.shape);
        check(altsum_config_set_shape(config.get(), sizes.data(), sizes.size()));
    }
    if (!opts.form.empty()) check(altsum_config_set_form(config.get(), opts.form.c_str()));
    check(altsum_config_set_seed(config.get(), opts.seed));
    check(altsum_config_set_threads(config.get(), resolve_threads(opts)));
    check(altsum_config_set_term_budget(config.get(), opts.term_budget));
    check(altsum_config_set_node_cap(config.get(), opts.node_cap));
    check(altsum_config_set_timing(config.get(), opts.timing ? 1 : 0));
    check(altsum_config_set_incremental(config.get(), opts.incremental ? 1 : 0));

    const InstancePtr instance = load_instance(opts);
    altsum_report* raw_report = nullptr;
    check(altsum_run(config.get(), instance.get(), &raw_report));
    const ReportPtr report(raw_report);

    char* raw_text = nullptr;
    check(altsum_report_render(report.get(), opts.format == "json" ? ALTSUM_FORMAT_JSON : ALTSUM_FORMAT_TEXT,
                               &raw_text));
    const StringPtr text(raw_text);
    std::fputs(text.get(), stdout);
    return altsum_report_exit_code(report.get());
}

int run_generate(const Options& opts) {
    altsum_instance* raw = nullptr;
    if (opts.kind == "matrix-tuple") {
        if (opts.shape.empty()) throw Failure{2, "generate --kind matrix-tuple needs --shape"};
        const auto sizes = parse_shape(opts.shape);
        check(altsum_instance_random_tuple(sizes.data(), sizes.size(), opts.seed, &raw));
    } else {
        if (!opts.n) throw Failure{2, "generate --kind " + opts.kind + " needs --n"};
        const altsum_kind kind = opts.kind == "spinor" ? ALTSUM_KIND_SPINOR : ALTSUM_KIND_COLORFUL;
        check(altsum_instance_random(kind, *opts.n, opts.seed, &raw));
    }
    const InstancePtr instance(raw);
    char* raw_text = nullptr;
    check(altsum_instance_to_json(instance.get(), &raw_text));
    const StringPtr text(raw_text);
    std::fputs(text.get(), stdout);
    std::fputc('\n', stdout);
    return 0;
}

void report_failure(const std::string& command, const Options& opts, const Failure& failure) {
    if (opts.format == "json") {
        // Hand-written error document.
        std::string escaped;
        for (char ch : failure.message) {
            if (ch == '"' || ch == '\\') {
                escaped += '\\';
                escaped += ch;
            } else if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                escaped += buf;
            } else {
                escaped += ch;
            }
        }
        std::printf("{\n  \"command\": \"%s\",\n  \"error\": \"%s\",\n  \"exit_code\": %d\n}\n", command.c_str(),
                    escaped.c_str(), failure.code);
    }
    std::fprintf(stderr, "altsum %s: %s\n", command.c_str(), failure.message.c_str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact determinantal alternating sums, Latin square counts and constructive searches"};
    app.require_subcommand(1);
    app.set_version_flag("--version", altsum_version());

    Options opts;
    struct Subcommand {
        const char* name;
        const char* help;
        bool takes_instance;
    };
    const std::vector<Subcommand> subcommands{
        {"verify-general", "Check the alternating-sum identity for a form and a matrix tuple", true},
        {"invariant", "Compute the invariant of a form at the identity tuple", true},
        {"alon-tarsi", "Signed count of Latin squares of order n, cross-checked by the engine", false},
        {"verify-onn", "Check the colorful determinant identity on n matrices", true},
        {"rota-search", "Find n disjoint transversal bases of n matrices", true},
        {"verify-svrtan", "Check the spinor n! identity", true},
        {"svrtan-search", "Find a spinor choice with nonzero determinant", true},
        {"census", "Count nonzero terms of the identity-spinor sum", false},
    };

    std::vector<CLI::App*> subs;
    for (const auto& entry : subcommands) {
        CLI::App* sub = app.add_subcommand(entry.name, entry.help);
        sub->add_option("--n", opts.n, "Order (number of matrices / vertices)")->check(CLI::PositiveNumber);
        if (entry.takes_instance) {
            sub->add_option("--input", opts.input, "Instance JSON file, or - for stdin");
            sub->add_option("--shape", opts.shape, "Block sizes such as 2,3 (verify-general, invariant)");
            sub->add_option("--form", opts.form, "dense, colorful or svrtan (verify-general, invariant)")
                ->check(CLI::IsMember({"dense", "colorful", "svrtan"}));
        }
        sub->add_option("--seed", opts.seed, "Seed for generated instances and forms");
        sub->add_option("--threads", opts.threads, "Worker threads (default: ALTSUM_THREADS or all cores)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--term-budget", opts.term_budget, "Largest number of terms a sum may enumerate");
        sub->add_option("--node-cap", opts.node_cap, "Largest number of candidates a search may examine");
        sub->add_option("--format", opts.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--timing", opts.timing, "Include elapsed time in the report");
        sub->add_flag("--incremental", opts.incremental, "Incremental polynomial updates in svrtan-search");
        subs.push_back(sub);
    }

    CLI::App* generate = app.add_subcommand("generate", "Print a seeded random instance as JSON");
    generate->add_option("--kind", opts.kind, "colorful, spinor or matrix-tuple")
        ->check(CLI::IsMember({"colorful", "spinor", "matrix-tuple"}));
    generate->add_option("--n", opts.n, "Order")->check(CLI::PositiveNumber);
    generate->add_option("--shape", opts.shape, "Block sizes for matrix-tuple");
    generate->add_option("--seed", opts.seed, "Seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command = generate->parsed() ? "generate" : "";
    for (CLI::App* sub : subs)
        if (sub->parsed()) command = sub->get_name();

    try {
        if (command == "generate") return run_generate(opts);
        return run_command(command, opts);
    } catch (const Failure& failure) {
        report_failure(command, opts, failure);
        return failure.code;
    }
}
