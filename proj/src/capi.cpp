#include "altsum/altsum.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "altsum/errors.hpp"
#include "altsum/runner.hpp"

struct altsum_config {
    altsum::RunConfig config;
};

struct altsum_instance {
    altsum::Instance instance;
};

struct altsum_report {
    altsum::Report report;
};

namespace {

thread_local std::string last_error;

altsum_status fail(altsum_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

/// Runs body, translating exceptions into status codes.
template <typename Body>
altsum_status guarded(Body&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const altsum::BudgetExceeded& e) {
        return fail(ALTSUM_ERR_BUDGET, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ALTSUM_ERR_INTERNAL, "out of memory");
    } catch (const std::invalid_argument& e) {
        return fail(ALTSUM_ERR_INPUT, e.what());
    } catch (const std::exception& e) {
        return fail(ALTSUM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ALTSUM_ERR_INTERNAL, "unknown error");
    }
}

char* duplicate(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

altsum_status null_argument(const char* name) {
    return fail(ALTSUM_ERR_INVALID_ARGUMENT, std::string(name) + " is null");
}

altsum::Shape shape_from(const size_t* sizes, size_t count) {
    return altsum::Shape(std::vector<std::size_t>(sizes, sizes + count));
}

} // namespace

extern "C" {

const char* altsum_version(void) { return "0.1.0"; }

const char* altsum_status_string(altsum_status status) {
    switch (status) {
    case ALTSUM_OK: return "ok";
    case ALTSUM_CHECK_FAILED: return "check failed";
    case ALTSUM_ERR_INPUT: return "input error";
    case ALTSUM_ERR_BUDGET: return "budget exceeded";
    case ALTSUM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ALTSUM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* altsum_last_error(void) { return last_error.c_str(); }

void altsum_string_free(char* text) { std::free(text); }

altsum_status altsum_config_create(altsum_config** out) {
    if (out == nullptr) return null_argument("out");
    return guarded([&] {
        *out = new altsum_config{};
        return ALTSUM_OK;
    });
}

void altsum_config_destroy(altsum_config* config) { delete config; }

altsum_status altsum_config_set_command(altsum_config* config, const char* command) {
    if (config == nullptr) return null_argument("config");
    if (command == nullptr) return null_argument("command");
    return guarded([&] {
        config->config.command = altsum::parse_command(command);
        return ALTSUM_OK;
    });
}

altsum_status altsum_config_set_n(altsum_config* config, size_t n) {
    if (config == nullptr) return null_argument("config");
    if (n == 0) return fail(ALTSUM_ERR_INPUT, "n must be at least 1");
    config->config.n = n;
    return ALTSUM_OK;
}

altsum_status altsum_config_set_seed(altsum_config* config, uint64_t seed) {
    if (config == nullptr) return null_argument("config");
    config->config.seed = seed;
    return ALTSUM_OK;
}

altsum_status altsum_config_set_shape(altsum_config* config, const size_t* sizes, size_t count) {
    if (config == nullptr) return null_argument("config");
    if (sizes == nullptr && count != 0) return null_argument("sizes");
    return guarded([&] {
        config->config.shape = shape_from(sizes, count);
        return ALTSUM_OK;
    });
}

altsum_status altsum_config_set_form(altsum_config* config, const char* form) {
    if (config == nullptr) return null_argument("config");
    if (form == nullptr) return null_argument("form");
    return guarded([&] {
        config->config.form = altsum::parse_form(form);
        return ALTSUM_OK;
    });
}

altsum_status altsum_config_set_threads(altsum_config* config, size_t threads) {
    if (config == nullptr) return null_argument("config");
    if (threads == 0) return fail(ALTSUM_ERR_INPUT, "threads must be at least 1");
    config->config.threads = threads;
    return ALTSUM_OK;
}

altsum_status altsum_config_set_term_budget(altsum_config* config, uint64_t budget) {
    if (config == nullptr) return null_argument("config");
    config->config.term_budget = budget;
    return ALTSUM_OK;
}

altsum_status altsum_config_set_node_cap(altsum_config* config, uint64_t cap) {
    if (config == nullptr) return null_argument("config");
    config->config.node_cap = cap;
    return ALTSUM_OK;
}

altsum_status altsum_config_set_incremental(altsum_config* config, int enabled) {
    if (config == nullptr) return null_argument("config");
    config->config.incremental = enabled != 0;
    return ALTSUM_OK;
}

altsum_status altsum_config_set_timing(altsum_config* config, int enabled) {
    if (config == nullptr) return null_argument("config");
    config->config.timing = enabled != 0;
    return ALTSUM_OK;
}

altsum_status altsum_instance_parse(const char* json_text, altsum_instance** out) {
    if (json_text == nullptr) return null_argument("json_text");
    if (out == nullptr) return null_argument("out");
    return guarded([&] {
        *out = new altsum_instance{altsum::parse_instance(json_text)};
        return ALTSUM_OK;
    });
}

altsum_status altsum_instance_random(altsum_kind kind, size_t n, uint64_t seed, altsum_instance** out) {
    if (out == nullptr) return null_argument("out");
    if (n == 0) return fail(ALTSUM_ERR_INPUT, "n must be at least 1");
    return guarded([&] {
        switch (kind) {
        case ALTSUM_KIND_COLORFUL: *out = new altsum_instance{altsum::random_colorful(n, seed)}; return ALTSUM_OK;
        case ALTSUM_KIND_SPINOR: *out = new altsum_instance{altsum::random_spinor(n, seed)}; return ALTSUM_OK;
        case ALTSUM_KIND_MATRIX_TUPLE:
            *out = new altsum_instance{altsum::random_matrix_tuple(altsum::Shape::uniform(n, n), seed)};
            return ALTSUM_OK;
        }
        return fail(ALTSUM_ERR_INVALID_ARGUMENT, "unknown instance kind");
    });
}

altsum_status altsum_instance_random_tuple(const size_t* sizes, size_t count, uint64_t seed,
                                           altsum_instance** out) {
    if (out == nullptr) return null_argument("out");
    if (sizes == nullptr && count != 0) return null_argument("sizes");
    return guarded([&] {
        *out = new altsum_instance{altsum::random_matrix_tuple(shape_from(sizes, count), seed)};
        return ALTSUM_OK;
    });
}

altsum_status altsum_instance_to_json(const altsum_instance* instance, char** out) {
    if (instance == nullptr) return null_argument("instance");
    if (out == nullptr) return null_argument("out");
    return guarded([&] {
        *out = duplicate(altsum::instance_to_json(instance->instance));
        return ALTSUM_OK;
    });
}

altsum_kind altsum_instance_kind(const altsum_instance* instance) {
    switch (altsum::kind_of(instance->instance)) {
    case altsum::InstanceKind::colorful: return ALTSUM_KIND_COLORFUL;
    case altsum::InstanceKind::spinor: return ALTSUM_KIND_SPINOR;
    case altsum::InstanceKind::matrix_tuple: break;
    }
    return ALTSUM_KIND_MATRIX_TUPLE;
}

void altsum_instance_destroy(altsum_instance* instance) { delete instance; }

altsum_status altsum_run(const altsum_config* config, const altsum_instance* instance, altsum_report** out) {
    if (config == nullptr) return null_argument("config");
    if (out == nullptr) return null_argument("out");
    return guarded([&] {
        altsum::Report report = altsum::run(config->config, instance == nullptr ? nullptr : &instance->instance);
        *out = new altsum_report{std::move(report)};
        return ALTSUM_OK;
    });
}

int altsum_report_exit_code(const altsum_report* report) { return report == nullptr ? 1 : report->report.exit_code; }

int altsum_report_verdict(const altsum_report* report) { return report != nullptr && report->report.verdict; }

altsum_status altsum_report_render(const altsum_report* report, altsum_format format, char** out) {
    if (report == nullptr) return null_argument("report");
    if (out == nullptr) return null_argument("out");
    return guarded([&] {
        switch (format) {
        case ALTSUM_FORMAT_TEXT: *out = duplicate(report->report.to_text()); return ALTSUM_OK;
        case ALTSUM_FORMAT_JSON: *out = duplicate(report->report.to_json().dump(2) + "\n"); return ALTSUM_OK;
        }
        return fail(ALTSUM_ERR_INVALID_ARGUMENT, "unknown format");
    });
}

void altsum_report_destroy(altsum_report* report) { delete report; }

} // extern "C"
