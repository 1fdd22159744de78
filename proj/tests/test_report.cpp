#include <catch2/catch.hpp>

#include "binduel/report.hpp"

using namespace binduel;

TEST_CASE("compute records round-trip through json") {
    ComputeRecord rec{Rational(3, 10), 1, 1, 1, "both", Rational(48, 125), 0.38400000000000006,
                      1.1e-16, true};
    const OrderedJson j = compute_to_json(rec);
    CHECK(j.at("schema_version") == kSchemaVersion);
    const ComputeRecord back = compute_from_json(j);
    CHECK(back.alpha == rec.alpha);
    CHECK(back.n == rec.n);
    CHECK(*back.exact == *rec.exact);
    CHECK(*back.quadrature == *rec.quadrature);
    CHECK(*back.agreement == *rec.agreement);
    CHECK(compute_to_json(back) == j);

    // absent fields stay null
    ComputeRecord exact_only{Rational(1, 2), 3, 2, 1, "exact", Rational(1, 2),
                             std::nullopt, std::nullopt, std::nullopt};
    const OrderedJson j2 = compute_to_json(exact_only);
    CHECK(j2.at("quadrature").is_null());
    CHECK_FALSE(compute_from_json(j2).quadrature.has_value());
}

TEST_CASE("exact traces round-trip through json and csv") {
    const SequenceTrace tr = exact_trace(Rational(3, 10), 3, 1, 0, 12);

    const SequenceTrace via_json = trace_from_json(trace_to_json(tr));
    CHECK(via_json.values == tr.values);
    CHECK(trace_to_json(via_json) == trace_to_json(tr));

    const std::string csv = trace_to_csv(tr);
    const SequenceTrace via_csv = trace_from_csv(csv);
    CHECK(via_csv.values == tr.values);
    CHECK(via_csv.alpha == tr.alpha);
    CHECK(via_csv.r == tr.r);
    CHECK(via_csv.n_from == tr.n_from);
    CHECK(trace_to_csv(via_csv) == csv);
}

TEST_CASE("quadrature traces round-trip losslessly") {
    const SequenceTrace tr = quadrature_trace(Rational(3, 10), 2, 1, 0, 8);
    const std::string csv = trace_to_csv(tr);
    const SequenceTrace back = trace_from_csv(csv);
    REQUIRE(back.values.size() == tr.values.size());
    for (size_t i = 0; i < tr.values.size(); ++i)
        CHECK(back.values[i].to_double() == tr.values[i].to_double());
    CHECK(trace_to_csv(back) == csv);

    const SequenceTrace via_json = trace_from_json(trace_to_json(tr));
    CHECK(trace_to_json(via_json) == trace_to_json(tr));
}

TEST_CASE("classify and mode records round-trip through json") {
    const ClassifyRecord rec{Rational(1, 5), 3, 1, classify(Rational(1, 5), 3, 1)};
    const OrderedJson j = classify_to_json(rec);
    CHECK(j.at("regime") == "unimodal");
    CHECK(j.at("mode") == 5);
    const ClassifyRecord back = classify_from_json(j);
    CHECK(classify_to_json(back) == j);

    ModeRecord mode{Rational(1, 5), 3, 100, 5, 7.5, 5.0 / 7.5};
    CHECK(mode_to_json(mode_from_json(mode_to_json(mode))) == mode_to_json(mode));
}

TEST_CASE("simulate records round-trip through json") {
    SimulateRecord rec;
    rec.kind = "duel";
    rec.alpha = Rational(3, 10);
    rec.n = 1;
    rec.r = 1;
    rec.d = 1;
    rec.trials = 1000;
    rec.seed = 7;
    rec.estimate = simulate_duel(DuelParams(rec.alpha, rec.n, rec.r, rec.d), SimConfig{1000, 7});
    rec.reference = Rational(48, 125);
    rec.sigma_distance = 0.5;
    const OrderedJson j = simulate_to_json(rec);
    CHECK(simulate_to_json(simulate_from_json(j)) == j);

    SimulateRecord dexp;
    dexp.kind = "double-exponential";
    dexp.alpha = Rational(1, 2);
    dexp.n = 3;
    dexp.scale = 2.0;
    dexp.trials = 500;
    dexp.seed = 9;
    dexp.estimate = simulate_double_exponential(3, Rational(1, 2), 2.0, SimConfig{500, 9});
    const OrderedJson j2 = simulate_to_json(dexp);
    CHECK(j2.at("command") == "simulate-doubleexp");
    CHECK(simulate_to_json(simulate_from_json(j2)) == j2);
}

TEST_CASE("verify records round-trip and escape csv") {
    VerifyRecord rec;
    rec.suite = "identities";
    rec.checks = {{"plain name", true, "all good"},
                  {"name, with comma", false, "detail with \"quotes\""}};
    rec.failures = 1;
    CHECK(verify_to_json(verify_from_json(verify_to_json(rec))) == verify_to_json(rec));
    const std::string csv = verify_to_csv(rec);
    CHECK(csv.find("\"name, with comma\"") != std::string::npos);
    CHECK(csv.find("\"detail with \"\"quotes\"\"\"") != std::string::npos);
}

TEST_CASE("doubles render shortest and parse back") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.38400000000000006) != format_double(0.384));
    for (double v : {0.1, 1.0 / 3.0, 7.25e-13, 123456.75}) {
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
}
