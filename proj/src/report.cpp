#include "fibtower/report.hpp"

#include <sstream>
#include <stdexcept>

namespace fibtower {

namespace {

using ojson = nlohmann::ordered_json;

std::string dec(std::uint64_t v) { return std::to_string(v); }

Natural natural_field(const ojson& j, const char* key) {
    const auto text = j.at(key).get<std::string>();
    auto v = parse_natural(text);
    if (!v) throw std::invalid_argument(std::string("field '") + key + "' is not a decimal: " + text);
    return *v;
}

std::uint64_t u64_field(const ojson& j, const char* key) {
    const auto v = to_u64(natural_field(j, key));
    if (!v) throw std::invalid_argument(std::string("field '") + key + "' exceeds 64 bits");
    return *v;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

ojson to_json(const AnalysisReport& r) {
    ojson chain;
    chain["moduli"] = ojson::array();
    for (const auto& m : r.chain.moduli) chain["moduli"].push_back(to_decimal(m));
    chain["base_period"] = to_decimal(r.chain.base_period);
    chain["verified"] = r.chain.verified;

    ojson j;
    j["k"] = dec(r.spec.k);
    j["n"] = dec(r.spec.n);
    j["m"] = dec(r.spec.m);
    j["fn"] = to_decimal(r.fn_value);
    j["expected_valuation"] = dec(r.expected_valuation);
    j["trivial"] = r.trivial;
    j["divisibility_ok"] = r.divisibility_ok;
    j["unit_residue"] = to_decimal(r.unit_residue);
    j["exact"] = r.exact;
    j["case"] = std::string(to_string(r.case_tag));
    j["clause"] = std::string(to_string(r.clause));
    j["predicted_residue"] = r.predicted_residue ? ojson(to_decimal(*r.predicted_residue)) : ojson();
    j["match"] = r.match ? ojson(*r.match) : ojson();
    j["chain"] = std::move(chain);
    return j;
}

AnalysisReport analysis_from_json(const ojson& j) {
    AnalysisReport r;
    r.spec = {u64_field(j, "k"), u64_field(j, "n"), u64_field(j, "m")};
    r.fn_value = natural_field(j, "fn");
    r.expected_valuation = u64_field(j, "expected_valuation");
    r.trivial = j.at("trivial").get<bool>();
    r.divisibility_ok = j.at("divisibility_ok").get<bool>();
    r.unit_residue = natural_field(j, "unit_residue");
    r.exact = j.at("exact").get<bool>();
    const auto tag = parse_case_tag(j.at("case").get<std::string>());
    const auto clause = parse_case_clause(j.at("clause").get<std::string>());
    if (!tag || !clause) throw std::invalid_argument("unknown case or clause label");
    r.case_tag = *tag;
    r.clause = *clause;
    if (!j.at("predicted_residue").is_null()) r.predicted_residue = natural_field(j, "predicted_residue");
    if (!j.at("match").is_null()) r.match = j.at("match").get<bool>();
    const auto& chain = j.at("chain");
    for (const auto& m : chain.at("moduli")) {
        auto v = parse_natural(m.get<std::string>());
        if (!v) throw std::invalid_argument("chain modulus is not a decimal");
        r.chain.moduli.push_back(*v);
    }
    r.chain.base_period = natural_field(chain, "base_period");
    r.chain.verified = chain.at("verified").get<bool>();
    return r;
}

ojson to_json(const SweepReport& report) {
    ojson j;
    j["tool_version"] = report.tool_version;
    j["seed"] = dec(report.seed);
    j["grid"] = {{"k", to_string(report.grid.k)},
                 {"n", to_string(report.grid.n)},
                 {"m", to_string(report.grid.m)}};
    ojson rows = ojson::array();
    for (const auto& row : report.rows) {
        ojson r;
        if (row.report) {
            r = to_json(*row.report);
        } else {
            r["k"] = dec(row.spec.k);
            r["n"] = dec(row.spec.n);
            r["m"] = dec(row.spec.m);
        }
        r["status"] = std::string(to_string(row.status));
        r["note"] = row.note;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);

    const auto& s = report.summary;
    auto counts = [](const std::map<std::string, std::uint64_t>& m) {
        ojson o = ojson::object();
        for (const auto& [key, v] : m) o[key] = dec(v);
        return o;
    };
    j["summary"] = {{"rows", dec(s.rows)},
                    {"status", counts(s.by_status)},
                    {"case", counts(s.by_case)},
                    {"clause", counts(s.by_clause)},
                    {"chains_verified", dec(s.chains_verified)}};
    return j;
}

SweepReport sweep_from_json(const ojson& j) {
    SweepReport report;
    report.tool_version = j.at("tool_version").get<std::string>();
    report.seed = u64_field(j, "seed");
    const auto& grid = j.at("grid");
    auto range = [&](const char* key) {
        auto r = parse_range(grid.at(key).get<std::string>());
        if (!r) throw std::invalid_argument(std::string("bad grid range for ") + key);
        return *r;
    };
    report.grid = {range("k"), range("n"), range("m")};
    for (const auto& r : j.at("rows")) {
        SweepRow row;
        row.spec = {u64_field(r, "k"), u64_field(r, "n"), u64_field(r, "m")};
        const auto status = parse_row_status(r.at("status").get<std::string>());
        if (!status) throw std::invalid_argument("unknown row status");
        row.status = *status;
        row.note = r.at("note").get<std::string>();
        if (r.contains("fn")) row.report = analysis_from_json(r);
        report.rows.push_back(std::move(row));
    }
    const auto& s = j.at("summary");
    report.summary.rows = u64_field(s, "rows");
    auto counts = [](const ojson& o) {
        std::map<std::string, std::uint64_t> m;
        for (const auto& [key, v] : o.items()) {
            const auto parsed = parse_natural(v.get<std::string>());
            if (!parsed || !to_u64(*parsed)) throw std::invalid_argument("bad summary count");
            m[key] = *to_u64(*parsed);
        }
        return m;
    };
    report.summary.by_status = counts(s.at("status"));
    report.summary.by_case = counts(s.at("case"));
    report.summary.by_clause = counts(s.at("clause"));
    report.summary.chains_verified = u64_field(s, "chains_verified");
    return report;
}

std::string render_json(const SweepReport& report) {
    return to_json(report).dump(2) + "\n";
}

SweepReport parse_sweep_json(std::string_view text) {
    return sweep_from_json(ojson::parse(text));
}

std::string render_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "n,k,m,fn,expected_valuation,divisibility_ok,unit_residue,exact,case,"
           "predicted_residue,match,status\n";
    for (const auto& row : report.rows) {
        out << row.spec.n << ',' << row.spec.k << ',' << row.spec.m << ',';
        if (const auto& r = row.report) {
            out << to_decimal(r->fn_value) << ',' << r->expected_valuation << ','
                << boolean(r->divisibility_ok) << ',' << to_decimal(r->unit_residue) << ','
                << boolean(r->exact) << ',' << to_string(r->case_tag) << ','
                << (r->predicted_residue ? to_decimal(*r->predicted_residue) : "") << ','
                << (r->match ? boolean(*r->match) : "") << ',';
        } else {
            out << ",,,,,,,,";
        }
        out << to_string(row.status) << '\n';
    }
    return out.str();
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    auto line = [&](std::string_view key, const std::string& value) {
        out << "  " << key;
        for (auto i = key.size(); i < 20; ++i) out << ' ';
        out << value << '\n';
    };
    out << "G" << to_string(r.spec) << '\n';
    line("F_n", to_decimal(r.fn_value));
    line("expected valuation", dec(r.expected_valuation) + (r.trivial ? " (trivial: F_n = 1)" : ""));
    line("divisibility_ok", boolean(r.divisibility_ok));
    line("unit residue", to_decimal(r.unit_residue));
    line("exact", boolean(r.exact));
    line("case", std::string(to_string(r.clause)));
    line("predicted residue", r.predicted_residue ? to_decimal(*r.predicted_residue) : "n/a");
    line("match", r.match ? boolean(*r.match) : "n/a");
    line("chain depth", dec(r.chain.moduli.size()));
    line("chain target", to_decimal(r.chain.moduli.back()));
    line("chain verified", boolean(r.chain.verified));
    return out.str();
}

}  // namespace fibtower
