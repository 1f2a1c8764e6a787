#include "jetinv/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace jetinv {

void SuiteConfig::validate() const {
    if (suite.empty()) throw BadConfig("suite: missing");
    if (n < 2) throw BadConfig("n: must be >= 2");
    if (order < 0) throw BadConfig("order: must be >= 0");
    if (trials < 1) throw BadConfig("trials: must be >= 1");
    if (!(tolerance > 0)) throw BadConfig("tolerance: must be > 0");
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j)
            if (alphas[i] == alphas[j]) throw BadConfig("alphas: must be pairwise distinct");
}

std::string fmt_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CaseRecord exact_record(int index, std::string label, std::string inputs, const Rat& lhs,
                        const Rat& rhs) {
    CaseRecord r;
    r.index = index;
    r.label = std::move(label);
    r.kind = "exact";
    r.inputs = std::move(inputs);
    r.lhs = rat_str(lhs);
    r.rhs = rat_str(rhs);
    Rat res = lhs - rhs;
    r.residual = rat_str(res);
    r.pass = is_zero(res);
    return r;
}

CaseRecord numeric_record(int index, std::string label, std::string inputs, double residual,
                          double tolerance) {
    CaseRecord r;
    r.index = index;
    r.label = std::move(label);
    r.kind = "numeric";
    r.inputs = std::move(inputs);
    r.residual = fmt_float(residual);
    r.pass = std::fabs(residual) < tolerance;
    return r;
}

CaseRecord recorded(int index, std::string label, std::string inputs, std::string value) {
    CaseRecord r;
    r.index = index;
    r.label = std::move(label);
    r.kind = "recorded";
    r.inputs = std::move(inputs);
    r.residual = std::move(value);
    r.pass = true;
    return r;
}

void finalize(Report& rep) {
    rep.failure_count = 0;
    rep.max_numeric_residual = 0;
    for (const auto& r : rep.records) {
        if (!r.pass) ++rep.failure_count;
        if (r.kind == "numeric") {
            double v = std::strtod(r.residual.c_str(), nullptr);
            rep.max_numeric_residual = std::max(rep.max_numeric_residual, std::fabs(v));
        }
    }
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    nlohmann::json cfg;
    cfg["suite"] = config.suite;
    cfg["n"] = config.n;
    cfg["order"] = config.order;
    cfg["trials"] = config.trials;
    cfg["seed"] = config.seed;
    cfg["tolerance"] = fmt_float(config.tolerance);
    auto as = nlohmann::json::array();
    for (const auto& a : config.alphas) as.push_back(rat_str(a));
    cfg["alphas"] = as;
    if (config.has_u0) cfg["u0"] = rat_str(config.u0);
    if (config.s > 0) cfg["s"] = config.s;
    j["config"] = cfg;
    auto recs = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json e;
        e["index"] = r.index;
        e["label"] = r.label;
        e["kind"] = r.kind;
        if (!r.inputs.empty()) e["inputs"] = r.inputs;
        if (!r.lhs.empty()) e["lhs"] = r.lhs;
        if (!r.rhs.empty()) e["rhs"] = r.rhs;
        e["residual"] = r.residual;
        e["pass"] = r.pass;
        recs.push_back(e);
    }
    j["records"] = recs;
    j["failure_count"] = failure_count;
    j["max_numeric_residual"] = fmt_float(max_numeric_residual);
    return j.dump(2) + "\n";
}

void emit_report(const Report& rep, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open report file: " + path);
    out << rep.to_json();
    if (!out) throw Error("failed writing report file: " + path);
}

} // namespace jetinv
