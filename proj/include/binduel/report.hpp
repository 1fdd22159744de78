#pragma once

// Output records for the command-line tools. Schemas are versioned and
// stable: rationals render as "p/q" strings, floating-point values as
// shortest round-trip decimals, so every emitted file parses back to the
// values that produced it.

#include "binduel/montecarlo.hpp"
#include "binduel/phase_atlas.hpp"

#include "json.hpp"

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace binduel {

using OrderedJson = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Shortest decimal that parses back to the same double.
inline std::string format_double(double v) { return OrderedJson(v).dump(); }

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

struct ComputeRecord {
    Rational alpha;
    long n = 0;
    int r = 1, d = 1;
    std::string method;  // exact | quadrature | both
    std::optional<Rational> exact;
    std::optional<double> quadrature;
    std::optional<double> abs_difference;
    std::optional<bool> agreement;
};

inline OrderedJson compute_to_json(const ComputeRecord& rec) {
    OrderedJson j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "compute";
    j["params"] = {{"alpha", rec.alpha.str()}, {"n", rec.n}, {"r", rec.r}, {"d", rec.d}};
    j["method"] = rec.method;
    j["exact"] = rec.exact ? OrderedJson(rec.exact->str()) : OrderedJson(nullptr);
    j["exact_float"] = rec.exact ? OrderedJson(rec.exact->to_double()) : OrderedJson(nullptr);
    j["quadrature"] = rec.quadrature ? OrderedJson(*rec.quadrature) : OrderedJson(nullptr);
    j["abs_difference"] =
        rec.abs_difference ? OrderedJson(*rec.abs_difference) : OrderedJson(nullptr);
    j["agreement"] = rec.agreement ? OrderedJson(*rec.agreement) : OrderedJson(nullptr);
    return j;
}

inline ComputeRecord compute_from_json(const OrderedJson& j) {
    ComputeRecord rec;
    rec.alpha = Rational::parse(j.at("params").at("alpha").get<std::string>());
    rec.n = j.at("params").at("n").get<long>();
    rec.r = j.at("params").at("r").get<int>();
    rec.d = j.at("params").at("d").get<int>();
    rec.method = j.at("method").get<std::string>();
    if (!j.at("exact").is_null()) rec.exact = Rational::parse(j.at("exact").get<std::string>());
    if (!j.at("quadrature").is_null()) rec.quadrature = j.at("quadrature").get<double>();
    if (!j.at("abs_difference").is_null()) rec.abs_difference = j.at("abs_difference").get<double>();
    if (!j.at("agreement").is_null()) rec.agreement = j.at("agreement").get<bool>();
    return rec;
}

inline std::string compute_to_csv(const ComputeRecord& rec) {
    std::ostringstream out;
    out << "# schema_version," << kSchemaVersion << "\n# command,compute\n";
    out << "key,value\n";
    out << "alpha," << rec.alpha.str() << "\n";
    out << "n," << rec.n << "\nr," << rec.r << "\nd," << rec.d << "\n";
    out << "method," << rec.method << "\n";
    out << "exact," << (rec.exact ? rec.exact->str() : "") << "\n";
    out << "exact_float," << (rec.exact ? format_double(rec.exact->to_double()) : "") << "\n";
    out << "quadrature," << (rec.quadrature ? format_double(*rec.quadrature) : "") << "\n";
    out << "abs_difference," << (rec.abs_difference ? format_double(*rec.abs_difference) : "")
        << "\n";
    out << "agreement," << (rec.agreement ? (*rec.agreement ? "true" : "false") : "") << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// trace
// ---------------------------------------------------------------------------

inline OrderedJson trace_to_json(const SequenceTrace& tr) {
    const bool exact = tr.method == TraceMethod::Exact;
    OrderedJson j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "trace";
    j["params"] = {{"alpha", tr.alpha.str()}, {"r", tr.r}, {"d", tr.d}};
    j["method"] = exact ? "exact" : "quadrature";
    j["n_from"] = tr.n_from;
    j["n_to"] = tr.n_from + static_cast<long>(tr.values.size()) - 1;
    j["precision"] = tr.precision_note;
    OrderedJson rows = OrderedJson::array();
    auto cell = [&](const Rational& v) {
        return exact ? OrderedJson(v.str()) : OrderedJson(v.to_double());
    };
    for (size_t i = 0; i < tr.values.size(); ++i) {
        OrderedJson row;
        row["n"] = tr.n_from + static_cast<long>(i);
        row["p"] = cell(tr.values[i]);
        row["diff"] = i + 1 < tr.values.size() ? cell(tr.values[i + 1] - tr.values[i])
                                               : OrderedJson(nullptr);
        row["second_diff"] = i + 2 < tr.values.size()
                                 ? cell(tr.values[i + 2] - Rational(2) * tr.values[i + 1] +
                                        tr.values[i])
                                 : OrderedJson(nullptr);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline SequenceTrace trace_from_json(const OrderedJson& j) {
    SequenceTrace tr;
    tr.alpha = Rational::parse(j.at("params").at("alpha").get<std::string>());
    tr.r = j.at("params").at("r").get<int>();
    tr.d = j.at("params").at("d").get<int>();
    tr.method = j.at("method").get<std::string>() == "exact" ? TraceMethod::Exact
                                                             : TraceMethod::Quadrature;
    tr.n_from = j.at("n_from").get<long>();
    tr.precision_note = j.at("precision").get<std::string>();
    for (const auto& row : j.at("rows")) {
        if (tr.method == TraceMethod::Exact)
            tr.values.push_back(Rational::parse(row.at("p").get<std::string>()));
        else
            tr.values.push_back(Rational(mpq_class(row.at("p").get<double>())));
    }
    return tr;
}

inline std::string trace_to_csv(const SequenceTrace& tr) {
    const bool exact = tr.method == TraceMethod::Exact;
    std::ostringstream out;
    out << "# schema_version," << kSchemaVersion << "\n# command,trace\n";
    out << "# alpha," << tr.alpha.str() << "\n# r," << tr.r << "\n# d," << tr.d << "\n";
    out << "# method," << (exact ? "exact" : "quadrature") << "\n";
    out << "# n_from," << tr.n_from << "\n";
    out << "# n_to," << tr.n_from + static_cast<long>(tr.values.size()) - 1 << "\n";
    out << "# precision," << tr.precision_note << "\n";
    out << "n,p,diff,second_diff\n";
    auto cell = [&](const Rational& v) {
        return exact ? v.str() : format_double(v.to_double());
    };
    for (size_t i = 0; i < tr.values.size(); ++i) {
        out << tr.n_from + static_cast<long>(i) << "," << cell(tr.values[i]) << ",";
        if (i + 1 < tr.values.size()) out << cell(tr.values[i + 1] - tr.values[i]);
        out << ",";
        if (i + 2 < tr.values.size())
            out << cell(tr.values[i + 2] - Rational(2) * tr.values[i + 1] + tr.values[i]);
        out << "\n";
    }
    return out.str();
}

inline SequenceTrace trace_from_csv(const std::string& text) {
    SequenceTrace tr;
    std::istringstream in(text);
    std::string line;
    bool header_done = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto comma = line.find(',');
            if (comma == std::string::npos) continue;
            const std::string key = line.substr(2, comma - 2);
            const std::string value = line.substr(comma + 1);
            if (key == "alpha") tr.alpha = Rational::parse(value);
            else if (key == "r") tr.r = std::stoi(value);
            else if (key == "d") tr.d = std::stoi(value);
            else if (key == "method")
                tr.method = value == "exact" ? TraceMethod::Exact : TraceMethod::Quadrature;
            else if (key == "n_from") tr.n_from = std::stol(value);
            else if (key == "precision") tr.precision_note = value;
            continue;
        }
        if (!header_done) {  // column header row
            header_done = true;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const std::string p = line.substr(c1 + 1, c2 - c1 - 1);
        if (tr.method == TraceMethod::Exact)
            tr.values.push_back(Rational::parse(p));
        else
            tr.values.push_back(Rational(mpq_class(std::strtod(p.c_str(), nullptr))));
    }
    return tr;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

struct ClassifyRecord {
    Rational alpha;
    int r = 1, d = 1;
    PhaseReport report;
};

inline OrderedJson classify_to_json(const ClassifyRecord& rec) {
    OrderedJson j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "classify";
    j["params"] = {{"alpha", rec.alpha.str()}, {"r", rec.r}, {"d", rec.d}};
    j["regime"] = regime_name(rec.report.regime);
    j["case"] = rec.report.case_id;
    j["rule"] = rec.report.rule;
    j["mode"] = rec.report.mode ? OrderedJson(*rec.report.mode) : OrderedJson(nullptr);
    j["thresholds"] = {{"one_over_2r", rec.report.thresholds.one_over_2r.str()},
                       {"drift_zero", rec.report.thresholds.drift_zero.str()},
                       {"first_step_zero", rec.report.thresholds.first_step_zero.str()}};
    j["note"] = rec.report.note;
    return j;
}

inline ClassifyRecord classify_from_json(const OrderedJson& j) {
    ClassifyRecord rec;
    rec.alpha = Rational::parse(j.at("params").at("alpha").get<std::string>());
    rec.r = j.at("params").at("r").get<int>();
    rec.d = j.at("params").at("d").get<int>();
    rec.report = classify(rec.alpha, rec.r, rec.d);
    return rec;
}

inline std::string classify_to_csv(const ClassifyRecord& rec) {
    std::ostringstream out;
    out << "# schema_version," << kSchemaVersion << "\n# command,classify\n";
    out << "key,value\n";
    out << "alpha," << rec.alpha.str() << "\nr," << rec.r << "\nd," << rec.d << "\n";
    out << "regime," << regime_name(rec.report.regime) << "\n";
    out << "case," << rec.report.case_id << "\n";
    out << "rule," << csv_quote(rec.report.rule) << "\n";
    out << "mode," << (rec.report.mode ? std::to_string(*rec.report.mode) : "") << "\n";
    out << "one_over_2r," << rec.report.thresholds.one_over_2r.str() << "\n";
    out << "drift_zero," << rec.report.thresholds.drift_zero.str() << "\n";
    out << "first_step_zero," << rec.report.thresholds.first_step_zero.str() << "\n";
    out << "note," << csv_quote(rec.report.note) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// mode
// ---------------------------------------------------------------------------

struct ModeRecord {
    Rational alpha;
    int r = 2;
    long n_max = 0;
    long mode = 0;
    double asymptotic_estimate = 0.0;
    double ratio = 0.0;
};

inline OrderedJson mode_to_json(const ModeRecord& rec) {
    OrderedJson j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "mode";
    j["params"] = {{"alpha", rec.alpha.str()}, {"r", rec.r}, {"d", 1}};
    j["n_max"] = rec.n_max;
    j["mode"] = rec.mode;
    j["asymptotic_estimate"] = rec.asymptotic_estimate;
    j["ratio"] = rec.ratio;
    return j;
}

inline ModeRecord mode_from_json(const OrderedJson& j) {
    ModeRecord rec;
    rec.alpha = Rational::parse(j.at("params").at("alpha").get<std::string>());
    rec.r = j.at("params").at("r").get<int>();
    rec.n_max = j.at("n_max").get<long>();
    rec.mode = j.at("mode").get<long>();
    rec.asymptotic_estimate = j.at("asymptotic_estimate").get<double>();
    rec.ratio = j.at("ratio").get<double>();
    return rec;
}

inline std::string mode_to_csv(const ModeRecord& rec) {
    std::ostringstream out;
    out << "# schema_version," << kSchemaVersion << "\n# command,mode\n";
    out << "key,value\n";
    out << "alpha," << rec.alpha.str() << "\nr," << rec.r << "\n";
    out << "n_max," << rec.n_max << "\nmode," << rec.mode << "\n";
    out << "asymptotic_estimate," << format_double(rec.asymptotic_estimate) << "\n";
    out << "ratio," << format_double(rec.ratio) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateRecord {
    std::string kind;  // duel | double-exponential
    Rational alpha;
    long n = 0;
    int r = 1, d = 1;       // duel only
    double scale = 1.0;     // double-exponential only
    std::uint64_t trials = 0, seed = 0;
    Estimate estimate;
    std::optional<Rational> reference;  // exact value being validated
    std::optional<double> sigma_distance;
};

inline OrderedJson simulate_to_json(const SimulateRecord& rec) {
    OrderedJson j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = rec.kind == "duel" ? "simulate" : "simulate-doubleexp";
    j["kind"] = rec.kind;
    if (rec.kind == "duel")
        j["params"] = {{"alpha", rec.alpha.str()}, {"n", rec.n}, {"r", rec.r}, {"d", rec.d}};
    else
        j["params"] = {{"alpha", rec.alpha.str()}, {"n", rec.n}, {"scale", rec.scale}};
    j["trials"] = rec.trials;
    j["seed"] = rec.seed;
    j["rng"] = SimConfig::kRngId;
    j["p_hat"] = rec.estimate.p_hat;
    j["std_error"] = rec.estimate.std_error;
    j["successes"] = rec.estimate.successes;
    j["ci4_low"] = rec.estimate.ci4_low;
    j["ci4_high"] = rec.estimate.ci4_high;
    j["reference_exact"] = rec.reference ? OrderedJson(rec.reference->str()) : OrderedJson(nullptr);
    j["reference_float"] =
        rec.reference ? OrderedJson(rec.reference->to_double()) : OrderedJson(nullptr);
    j["sigma_distance"] =
        rec.sigma_distance ? OrderedJson(*rec.sigma_distance) : OrderedJson(nullptr);
    return j;
}

inline SimulateRecord simulate_from_json(const OrderedJson& j) {
    SimulateRecord rec;
    rec.kind = j.at("kind").get<std::string>();
    rec.alpha = Rational::parse(j.at("params").at("alpha").get<std::string>());
    rec.n = j.at("params").at("n").get<long>();
    if (rec.kind == "duel") {
        rec.r = j.at("params").at("r").get<int>();
        rec.d = j.at("params").at("d").get<int>();
    } else {
        rec.scale = j.at("params").at("scale").get<double>();
    }
    rec.trials = j.at("trials").get<std::uint64_t>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.estimate.p_hat = j.at("p_hat").get<double>();
    rec.estimate.std_error = j.at("std_error").get<double>();
    rec.estimate.successes = j.at("successes").get<std::uint64_t>();
    rec.estimate.trials = rec.trials;
    rec.estimate.ci4_low = j.at("ci4_low").get<double>();
    rec.estimate.ci4_high = j.at("ci4_high").get<double>();
    if (!j.at("reference_exact").is_null())
        rec.reference = Rational::parse(j.at("reference_exact").get<std::string>());
    if (!j.at("sigma_distance").is_null())
        rec.sigma_distance = j.at("sigma_distance").get<double>();
    return rec;
}

inline std::string simulate_to_csv(const SimulateRecord& rec) {
    std::ostringstream out;
    out << "# schema_version," << kSchemaVersion << "\n# command,"
        << (rec.kind == "duel" ? "simulate" : "simulate-doubleexp") << "\n";
    out << "key,value\n";
    out << "alpha," << rec.alpha.str() << "\nn," << rec.n << "\n";
    if (rec.kind == "duel")
        out << "r," << rec.r << "\nd," << rec.d << "\n";
    else
        out << "scale," << format_double(rec.scale) << "\n";
    out << "trials," << rec.trials << "\nseed," << rec.seed << "\n";
    out << "rng," << SimConfig::kRngId << "\n";
    out << "p_hat," << format_double(rec.estimate.p_hat) << "\n";
    out << "std_error," << format_double(rec.estimate.std_error) << "\n";
    out << "successes," << rec.estimate.successes << "\n";
    out << "ci4_low," << format_double(rec.estimate.ci4_low) << "\n";
    out << "ci4_high," << format_double(rec.estimate.ci4_high) << "\n";
    out << "reference_exact," << (rec.reference ? rec.reference->str() : "") << "\n";
    out << "sigma_distance," << (rec.sigma_distance ? format_double(*rec.sigma_distance) : "")
        << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct VerifyRecord {
    std::string suite;
    std::vector<CheckResult> checks;
    int failures = 0;
};

inline OrderedJson verify_to_json(const VerifyRecord& rec) {
    OrderedJson j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "verify";
    j["suite"] = rec.suite;
    j["failures"] = rec.failures;
    OrderedJson checks = OrderedJson::array();
    for (const CheckResult& c : rec.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    return j;
}

inline VerifyRecord verify_from_json(const OrderedJson& j) {
    VerifyRecord rec;
    rec.suite = j.at("suite").get<std::string>();
    rec.failures = j.at("failures").get<int>();
    for (const auto& c : j.at("checks"))
        rec.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                              c.at("detail").get<std::string>()});
    return rec;
}

inline std::string verify_to_csv(const VerifyRecord& rec) {
    std::ostringstream out;
    out << "# schema_version," << kSchemaVersion << "\n# command,verify\n";
    out << "# suite," << rec.suite << "\n# failures," << rec.failures << "\n";
    out << "name,pass,detail\n";
    for (const CheckResult& c : rec.checks)
        out << csv_quote(c.name) << "," << (c.pass ? "true" : "false") << ","
            << csv_quote(c.detail) << "\n";
    return out.str();
}

}  // namespace binduel
