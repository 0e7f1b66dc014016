#include "altsum/runner.hpp"

#include <array>
#include <chrono>
#include <memory>
#include <utility>

#include <gmpxx.h>

#include "altsum/errors.hpp"

namespace altsum {

namespace {

using nlohmann::json;

constexpr std::array command_names{
    std::pair{Command::verify_general, "verify-general"}, std::pair{Command::invariant, "invariant"},
    std::pair{Command::alon_tarsi, "alon-tarsi"},         std::pair{Command::verify_onn, "verify-onn"},
    std::pair{Command::rota_search, "rota-search"},       std::pair{Command::verify_svrtan, "verify-svrtan"},
    std::pair{Command::svrtan_search, "svrtan-search"},   std::pair{Command::census, "census"},
};

EngineOptions engine_options(const RunConfig& config) { return {config.threads, config.term_budget}; }

SearchOptions search_options(const RunConfig& config) { return {config.node_cap, config.incremental}; }

std::size_t require_n(const RunConfig& config) {
    if (!config.n || *config.n == 0) throw InputError(command_name(config.command) + " needs --n (at least 1)");
    return *config.n;
}

void check_n_matches(const RunConfig& config, std::size_t n) {
    if (config.n && *config.n != n)
        throw InputError("--n " + std::to_string(*config.n) + " does not match the instance (n = " +
                         std::to_string(n) + ")");
}

std::string digest(Command command, const std::string& canonical) {
    return fnv1a_hex(command_name(command) + "\n" + canonical);
}

DenseTensorForm seeded_dense_form(const Shape& shape, std::uint64_t seed) {
    InstanceRng rng(seed);
    return random_dense_form(shape, rng);
}

std::string factorial_text(std::size_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f.get_str();
}

ColorfulInstance colorful_input(const RunConfig& config, const Instance* instance) {
    if (instance == nullptr) return random_colorful(require_n(config), config.seed);
    if (const auto* c = std::get_if<ColorfulInstance>(instance)) {
        check_n_matches(config, c->n());
        return *c;
    }
    if (const auto* t = std::get_if<MatrixTupleInstance>(instance)) {
        try {
            ColorfulInstance c(t->matrices);
            check_n_matches(config, c.n());
            return c;
        } catch (const DimensionError& e) {
            throw InputError(std::string("not a colorful instance: ") + e.what());
        }
    }
    throw InputError(command_name(config.command) + " needs a colorful instance, not a spinor instance");
}

SpinorInstance spinor_input(const RunConfig& config, const Instance* instance) {
    if (instance == nullptr) return random_spinor(require_n(config), config.seed);
    if (const auto* s = std::get_if<SpinorInstance>(instance)) {
        check_n_matches(config, s->n());
        return *s;
    }
    throw InputError(command_name(config.command) + " needs a spinor instance");
}

/// The instance verify-general works on, with the form it implies.
Instance general_instance(const RunConfig& config, const Instance* instance) {
    if (instance != nullptr) {
        if (const auto* t = std::get_if<MatrixTupleInstance>(instance)) {
            MatrixTupleInstance filled = *t;
            if (!filled.form) filled.form = seeded_dense_form(filled.matrices.shape(), config.seed);
            return filled;
        }
        return *instance;
    }
    const FormKind form = config.form.value_or(FormKind::dense);
    switch (form) {
    case FormKind::dense:
        if (!config.shape) throw InputError("verify-general needs --input or --shape");
        return random_matrix_tuple(*config.shape, config.seed);
    case FormKind::colorful:
        return random_colorful(require_n(config), config.seed);
    case FormKind::svrtan:
        return random_spinor(require_n(config), config.seed);
    }
    throw InputError("unknown form");
}

void fill_identity(Report& report, const IdentityReport& result, const std::string& form, const Shape& shape) {
    report.lhs = result.lhs.to_string();
    report.rhs = result.rhs.to_string();
    report.verdict = result.holds;
    report.term_count = result.terms;
    report.details["form"] = form;
    report.details["shape"] = shape.to_string();
    report.details["invariant"] = result.invariant.to_string();
    report.details["determinant_product"] = result.determinant_product.to_string();
}

void run_verify_general(const RunConfig& config, const Instance* instance, Report& report) {
    const Instance effective = general_instance(config, instance);
    report.inputs_digest = digest(config.command, instance_to_json(effective));
    const EngineOptions options = engine_options(config);
    if (const auto* t = std::get_if<MatrixTupleInstance>(&effective)) {
        fill_identity(report, verify_identity(*t->form, t->matrices, options), t->form->description(),
                      t->matrices.shape());
        if (instance != nullptr && !std::get<MatrixTupleInstance>(*instance).form)
            report.notes.push_back("instance has no form; using the dense form drawn from seed " +
                                   std::to_string(config.seed));
    } else if (const auto* c = std::get_if<ColorfulInstance>(&effective)) {
        const ColorfulForm form(c->n());
        fill_identity(report, verify_identity(form, c->matrices(), options), form.description(), form.shape());
    } else {
        const EngineInstance engine = as_engine_instance(std::get<SpinorInstance>(effective));
        fill_identity(report, verify_identity(engine.form, engine.matrices, options), engine.form.description(),
                      engine.form.shape());
    }
    report.exit_code = report.verdict ? 0 : 1;
}

void run_invariant(const RunConfig& config, const Instance* instance, Report& report) {
    std::unique_ptr<MultilinearForm> form;
    std::string canonical;
    if (instance != nullptr) {
        if (const auto* t = std::get_if<MatrixTupleInstance>(instance)) {
            form = std::make_unique<DenseTensorForm>(t->form ? *t->form
                                                             : seeded_dense_form(t->matrices.shape(), config.seed));
            MatrixTupleInstance filled{t->matrices, static_cast<const DenseTensorForm&>(*form)};
            canonical = instance_to_json(filled);
        } else if (const auto* c = std::get_if<ColorfulInstance>(instance)) {
            form = std::make_unique<ColorfulForm>(c->n());
            canonical = "form=colorful n=" + std::to_string(c->n());
        } else {
            const auto& s = std::get<SpinorInstance>(*instance);
            form = std::make_unique<SvrtanForm>(s.n());
            canonical = "form=svrtan n=" + std::to_string(s.n());
        }
    } else {
        const FormKind kind = config.form.value_or(config.shape ? FormKind::dense : FormKind::colorful);
        switch (kind) {
        case FormKind::dense:
            if (!config.shape) throw InputError("invariant with the dense form needs --shape");
            form = std::make_unique<DenseTensorForm>(seeded_dense_form(*config.shape, config.seed));
            canonical = "form=dense shape=" + config.shape->to_string() + " seed=" + std::to_string(config.seed);
            break;
        case FormKind::colorful:
            form = std::make_unique<ColorfulForm>(require_n(config));
            canonical = "form=colorful n=" + std::to_string(*config.n);
            break;
        case FormKind::svrtan:
            form = std::make_unique<SvrtanForm>(require_n(config));
            canonical = "form=svrtan n=" + std::to_string(*config.n);
            break;
        }
    }
    report.inputs_digest = digest(config.command, canonical);
    report.value = invariant_at_identity(*form, engine_options(config)).to_string();
    report.verdict = true;
    report.term_count = form->shape().group_order();
    report.details["form"] = form->description();
    report.details["shape"] = form->shape().to_string();
    report.exit_code = 0;
}

void run_alon_tarsi(const RunConfig& config, Report& report) {
    const std::size_t n = require_n(config);
    report.inputs_digest = digest(config.command, "n=" + std::to_string(n));
    const EngineOptions options = engine_options(config);
    const LatinCount count = enumerate_latin_squares(n, options);
    const std::string l = std::to_string(count.signed_count);
    report.value = l;
    report.term_count = count.squares;
    report.details["squares"] = count.squares;
    report.details["even"] = count.even();
    report.details["odd"] = count.odd();

    const ColorfulForm form(n);
    const std::uint64_t engine_terms = form.shape().group_order();
    if (engine_terms <= config.term_budget) {
        report.lhs = l;
        report.rhs = invariant_at_identity(form, options).to_string();
        report.verdict = *report.lhs == *report.rhs;
        report.details["engine_terms"] = engine_terms;
    } else {
        report.verdict = true;
        report.notes.push_back("cross-check against the colorful invariant skipped: " + std::to_string(engine_terms) +
                               " terms exceed the term budget");
    }
    report.exit_code = report.verdict ? 0 : 1;
}

void run_verify_onn(const RunConfig& config, const Instance* instance, Report& report) {
    const ColorfulInstance input = colorful_input(config, instance);
    report.inputs_digest = digest(config.command, instance_to_json(input));
    const OnnReport result = verify_onn(input, engine_options(config));
    report.lhs = result.lhs.to_string();
    report.rhs = result.rhs.to_string();
    report.verdict = result.holds;
    report.term_count = result.terms;
    report.details["n"] = input.n();
    report.details["latin_signed_count"] = result.latin_signed_count;
    report.details["determinant_product"] = result.determinant_product.to_string();
    report.exit_code = report.verdict ? 0 : 1;
}

void run_rota_search(const RunConfig& config, const Instance* instance, Report& report) {
    const ColorfulInstance input = colorful_input(config, instance);
    const std::size_t n = input.n();
    report.inputs_digest = digest(config.command, instance_to_json(input));

    const bool nonsingular = input.matrices().nonsingular();
    std::optional<std::int64_t> l;
    const auto squares = latin_square_count(n);
    if (squares && *squares <= config.term_budget) l = alon_tarsi_count(n, engine_options(config));
    const bool guaranteed = nonsingular && l && *l != 0;
    report.details["n"] = n;
    report.details["nonsingular"] = nonsingular;
    report.details["guaranteed"] = guaranteed;
    if (l) report.details["latin_signed_count"] = *l;
    if (!nonsingular)
        report.notes.push_back("some matrix is singular, so the right-hand side of the colorful identity vanishes "
                               "and the search is not guaranteed to succeed");
    else if (l && *l == 0)
        report.notes.push_back("l(" + std::to_string(n) +
                               ") = 0, so the colorful identity does not guarantee a selection");
    else if (!l)
        report.notes.push_back("l(" + std::to_string(n) + ") was not computed, so success is not guaranteed");

    const RotaResult result = rota_search(input, search_options(config));
    report.term_count = result.nodes;
    report.details["nodes"] = result.nodes;
    if (result.status == SearchStatus::found) {
        const TransversalSelection& sel = *result.selection;
        json sigma = json::array();
        for (const auto& part : sel.sigma.parts) {
            json row = json::array();
            for (std::size_t j = 0; j < part.size(); ++j) row.push_back(part(j) + 1);
            sigma.push_back(row);
        }
        json dets = json::array();
        for (const auto& d : sel.transversal_dets) dets.push_back(d.to_string());
        report.witness = {{"sigma", sigma}, {"transversal_dets", dets}};
        const bool valid = selection_is_valid(input, sel.sigma);
        report.details["reverified"] = valid;
        report.verdict = valid;
        if (!valid) report.notes.push_back("witness failed direct re-verification");
    } else {
        report.verdict = false;
        report.notes.push_back(guaranteed ? "search exhausted although a selection is guaranteed"
                                          : "search exhausted: no selection exists");
    }
    report.exit_code = report.verdict ? 0 : 1;
}

void run_verify_svrtan(const RunConfig& config, const Instance* instance, Report& report) {
    const SpinorInstance input = spinor_input(config, instance);
    report.inputs_digest = digest(config.command, instance_to_json(input));
    const SvrtanReport result = verify_svrtan(input, engine_options(config));
    report.lhs = result.lhs.to_string();
    report.rhs = result.rhs.to_string();
    report.verdict = result.holds;
    report.term_count = result.terms;
    report.details["n"] = input.n();
    report.details["factorial"] = factorial_text(input.n());
    report.details["edge_det_product"] = result.edge_det_product.to_string();
    report.exit_code = report.verdict ? 0 : 1;
}

void run_svrtan_search(const RunConfig& config, const Instance* instance, Report& report) {
    const SpinorInstance input = spinor_input(config, instance);
    report.inputs_digest = digest(config.command, instance_to_json(input));
    const bool nonsingular = input.nonsingular();
    report.details["n"] = input.n();
    report.details["nonsingular"] = nonsingular;
    report.details["guaranteed"] = nonsingular;
    if (!nonsingular)
        report.notes.push_back("some edge basis is singular, so the right-hand side vanishes and the search is not "
                               "guaranteed to succeed");

    const SvrtanSearchResult result = svrtan_search(input, search_options(config));
    report.term_count = result.nodes;
    report.details["nodes"] = result.nodes;
    if (result.status == SearchStatus::found) {
        const Choice& c = *result.choice;
        json edges = json::array();
        for (std::size_t e = 0; e < c.edges; ++e) {
            const auto [i, j] = input.edge_vertices(e);
            edges.push_back({{"i", i + 1}, {"j", j + 1}, {"swap", c.bit(e)}});
        }
        report.witness = {{"edges", edges}, {"sign", c.sign()}, {"det", result.det.to_string()}};
        const Rational direct = choice_det(input, c);
        const bool valid = !direct.is_zero() && direct == result.det;
        report.details["reverified"] = valid;
        report.verdict = valid;
        if (!valid) report.notes.push_back("witness failed direct re-verification");
    } else {
        report.verdict = false;
        report.notes.push_back(nonsingular ? "search exhausted although a choice is guaranteed"
                                           : "search exhausted: every choice has a vanishing determinant");
    }
    report.exit_code = report.verdict ? 0 : 1;
}

void run_census(const RunConfig& config, Report& report) {
    const std::size_t n = require_n(config);
    report.inputs_digest = digest(config.command, "n=" + std::to_string(n));
    const CensusResult result = nonzero_term_census(n, engine_options(config));
    report.lhs = std::to_string(result.nonzero);
    report.rhs = factorial_text(n);
    report.term_count = result.total;
    report.details["nonzero_non_transitive"] = result.nonzero_non_transitive;
    report.details["signed_sum"] = result.signed_sum.to_string();
    report.verdict = *report.lhs == *report.rhs && result.nonzero_non_transitive == 0;
    if (result.nonzero_non_transitive != 0)
        report.notes.push_back(std::to_string(result.nonzero_non_transitive) +
                               " nonzero choices are not transitive tournaments");
    report.exit_code = report.verdict ? 0 : 1;
}

} // namespace

std::string command_name(Command command) {
    for (const auto& [c, name] : command_names)
        if (c == command) return name;
    return "unknown";
}

Command parse_command(std::string_view name) {
    for (const auto& [c, n] : command_names)
        if (name == n) return c;
    throw InputError("unknown command \"" + std::string(name) + "\"");
}

std::string form_name(FormKind form) {
    switch (form) {
    case FormKind::dense: return "dense";
    case FormKind::colorful: return "colorful";
    case FormKind::svrtan: return "svrtan";
    }
    return "unknown";
}

FormKind parse_form(std::string_view name) {
    if (name == "dense") return FormKind::dense;
    if (name == "colorful") return FormKind::colorful;
    if (name == "svrtan") return FormKind::svrtan;
    throw InputError("unknown form \"" + std::string(name) + "\" (expected dense, colorful or svrtan)");
}

Report run(const RunConfig& config, const Instance* instance) {
    if (config.threads == 0) throw InputError("--threads must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.command = command_name(config.command);
    switch (config.command) {
    case Command::verify_general: run_verify_general(config, instance, report); break;
    case Command::invariant: run_invariant(config, instance, report); break;
    case Command::alon_tarsi: run_alon_tarsi(config, report); break;
    case Command::verify_onn: run_verify_onn(config, instance, report); break;
    case Command::rota_search: run_rota_search(config, instance, report); break;
    case Command::verify_svrtan: run_verify_svrtan(config, instance, report); break;
    case Command::svrtan_search: run_svrtan_search(config, instance, report); break;
    case Command::census: run_census(config, report); break;
    }
    if (config.timing)
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

int exit_code_for(const std::exception& error) {
    if (dynamic_cast<const BudgetExceeded*>(&error) != nullptr) return 3;
    if (dynamic_cast<const std::invalid_argument*>(&error) != nullptr) return 2;
    return 1;
}

} // namespace altsum
