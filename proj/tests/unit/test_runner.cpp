#include <doctest.h>

#include "altsum/errors.hpp"
#include "altsum/runner.hpp"

using namespace altsum;

namespace {

RunConfig config_for(Command c) {
    RunConfig config;
    config.command = c;
    return config;
}

void check_verdict_matches(const Report& r) {
    if (r.lhs && r.rhs) CHECK(r.verdict == (*r.lhs == *r.rhs));
}

} // namespace

TEST_SUITE("runner") {

TEST_CASE("command and form names") {
    for (auto c : {Command::verify_general, Command::invariant, Command::alon_tarsi, Command::verify_onn,
                   Command::rota_search, Command::verify_svrtan, Command::svrtan_search, Command::census})
        CHECK(parse_command(command_name(c)) == c);
    CHECK(command_name(Command::alon_tarsi) == "alon-tarsi");
    CHECK_THROWS_AS(parse_command("verify"), InputError);
    for (auto f : {FormKind::dense, FormKind::colorful, FormKind::svrtan}) CHECK(parse_form(form_name(f)) == f);
    CHECK_THROWS_AS(parse_form("sparse"), InputError);
}

TEST_CASE("alon-tarsi") {
    RunConfig config = config_for(Command::alon_tarsi);
    config.n = 3;
    const Report r = run(config, nullptr);
    CHECK(r.value == "0");
    CHECK(r.lhs == "0");
    CHECK(r.rhs == "0");
    CHECK(r.verdict);
    CHECK(r.exit_code == 0);
    CHECK(r.details["squares"] == 12);

    config.n = 5;
    const Report five = run(config, nullptr);
    CHECK(five.value == "0");
    CHECK(!five.lhs.has_value());
    CHECK(five.exit_code == 0);
    CHECK(!five.notes.empty());

    config.n = 6;
    CHECK_THROWS_AS(run(config, nullptr), BudgetExceeded);
    config.n.reset();
    CHECK_THROWS_AS(run(config, nullptr), InputError);
}

TEST_CASE("identity commands pass on generated instances") {
    for (Command c : {Command::verify_onn, Command::verify_svrtan, Command::rota_search, Command::svrtan_search}) {
        RunConfig config = config_for(c);
        config.n = 3;
        config.seed = 4;
        const Report r = run(config, nullptr);
        CHECK(r.exit_code == 0);
        CHECK(r.verdict);
        check_verdict_matches(r);
    }
    RunConfig general = config_for(Command::verify_general);
    general.shape = Shape({2, 3});
    const Report r = run(general, nullptr);
    CHECK(r.exit_code == 0);
    CHECK(r.details["shape"] == "(2,3)");
    general.shape.reset();
    CHECK_THROWS_AS(run(general, nullptr), InputError);
    general.form = FormKind::colorful;
    general.n = 2;
    CHECK(run(general, nullptr).exit_code == 0);
}

TEST_CASE("invariant") {
    RunConfig config = config_for(Command::invariant);
    config.form = FormKind::svrtan;
    config.n = 4;
    CHECK(run(config, nullptr).value == "24");
    config.form = FormKind::colorful;
    config.n = 2;
    CHECK(run(config, nullptr).value == "2");
    config.form = FormKind::dense;
    CHECK_THROWS_AS(run(config, nullptr), InputError);
    config.shape = Shape({2});
    const Report r = run(config, nullptr);
    CHECK(r.exit_code == 0);
    CHECK(r.value.has_value());
}

TEST_CASE("census") {
    RunConfig config = config_for(Command::census);
    config.n = 4;
    const Report r = run(config, nullptr);
    CHECK(r.lhs == "24");
    CHECK(r.rhs == "24");
    CHECK(r.term_count == 64);
    CHECK(r.exit_code == 0);
}

TEST_CASE("instances are checked against the command") {
    const Instance spinor = random_spinor(3, 1);
    RunConfig onn = config_for(Command::verify_onn);
    CHECK_THROWS_AS(run(onn, &spinor), InputError);
    const Instance colorful = random_colorful(2, 1);
    RunConfig svr = config_for(Command::verify_svrtan);
    CHECK_THROWS_AS(run(svr, &colorful), InputError);
    onn.n = 3;
    CHECK_THROWS_AS(run(onn, &colorful), InputError);
    onn.n = 2;
    CHECK(run(onn, &colorful).exit_code == 0);
    const Instance tuple = random_matrix_tuple(Shape({2, 2}), 1);
    CHECK(run(config_for(Command::verify_onn), &tuple).exit_code == 0);
    const Instance odd = random_matrix_tuple(Shape({2, 3}), 1);
    CHECK_THROWS_AS(run(config_for(Command::verify_onn), &odd), InputError);
    // verify-general accepts every kind.
    for (const Instance* inst : {&spinor, &colorful, &tuple}) CHECK(run(config_for(Command::verify_general), inst).verdict);
}

TEST_CASE("singular rota input is exhausted and explained") {
    const Instance zero = parse_instance(R"({"kind": "colorful", "n": 2,
        "matrices": [[["0","0"],["0","0"]], [["1","0"],["0","1"]]]})");
    const Report r = run(config_for(Command::rota_search), &zero);
    CHECK(r.exit_code == 1);
    CHECK(!r.verdict);
    CHECK(r.details["guaranteed"] == false);
    REQUIRE(!r.notes.empty());
    CHECK(r.notes.front().find("vanishes") != std::string::npos);
}

TEST_CASE("budget errors") {
    RunConfig config = config_for(Command::verify_onn);
    config.n = 3;
    config.term_budget = 100;
    CHECK_THROWS_AS(run(config, nullptr), BudgetExceeded);
    config.threads = 0;
    CHECK_THROWS_AS(run(config, nullptr), InputError);
}

TEST_CASE("exit code mapping") {
    CHECK(exit_code_for(BudgetExceeded("x", 2, 1)) == 3);
    CHECK(exit_code_for(InputError("x")) == 2);
    CHECK(exit_code_for(DimensionError("x")) == 2);
    CHECK(exit_code_for(DegreeOverflow("x")) == 2);
    CHECK(exit_code_for(std::runtime_error("x")) == 1);
}

TEST_CASE("reports do not depend on the thread count") {
    for (Command c : {Command::verify_onn, Command::verify_svrtan, Command::census, Command::alon_tarsi}) {
        RunConfig config = config_for(c);
        config.n = 4;
        config.seed = 17;
        config.threads = 1;
        const Report one = run(config, nullptr);
        for (std::size_t t : {2u, 8u}) {
            config.threads = t;
            CHECK(run(config, nullptr).to_json().dump() == one.to_json().dump());
        }
    }
}

TEST_CASE("timing is opt-in") {
    RunConfig config = config_for(Command::census);
    config.n = 3;
    CHECK(!run(config, nullptr).elapsed_ms.has_value());
    config.timing = true;
    CHECK(run(config, nullptr).elapsed_ms.has_value());
}

TEST_CASE("report JSON round-trips") {
    RunConfig config = config_for(Command::rota_search);
    config.n = 3;
    config.timing = true;
    const Report r = run(config, nullptr);
    const auto doc = r.to_json();
    const Report back = Report::from_json(doc);
    CHECK(back == r);
    CHECK(back.to_json().dump() == doc.dump());
    CHECK(nlohmann::json::parse(doc.dump(2)) == doc);
    CHECK_THROWS_AS(Report::from_json(nlohmann::json::object()), InputError);
    const std::string text = r.to_text();
    CHECK(text.find("command:  rota-search") != std::string::npos);
    CHECK(text.find("witness:") != std::string::npos);
}

TEST_CASE("digest identifies the input") {
    RunConfig config = config_for(Command::verify_svrtan);
    config.n = 3;
    config.seed = 1;
    const std::string a = run(config, nullptr).inputs_digest;
    const Instance same = random_spinor(3, 1);
    CHECK(run(config_for(Command::verify_svrtan), &same).inputs_digest == a);
    config.seed = 2;
    CHECK(run(config, nullptr).inputs_digest != a);
    CHECK(a.size() == 16);
}

}
