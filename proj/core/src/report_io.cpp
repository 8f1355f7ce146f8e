#include "segrelab/report_io.hpp"

#include <ostream>

#include "json.hpp"

namespace segrelab {

namespace {

using nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> header(const ScanReport& r) {
    std::vector<std::string> h = r.input_columns;
    h.push_back(r.value_column);
    h.push_back("sign");
    h.insert(h.end(), r.flag_columns.begin(), r.flag_columns.end());
    h.insert(h.end(), r.extra_columns.begin(), r.extra_columns.end());
    return h;
}

std::vector<std::string> cells(const ScanRow& row) {
    std::vector<std::string> c;
    for (const auto& v : row.inputs) {
        c.push_back(to_string(v));
    }
    c.push_back(to_string(row.value.value));
    c.emplace_back(to_string(row.value.sign));
    for (bool f : row.flags) {
        c.emplace_back(f ? "true" : "false");
    }
    c.insert(c.end(), row.extras.begin(), row.extras.end());
    return c;
}

void write_line(std::ostream& out, const std::vector<std::string>& fields, char sep) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) {
            out << sep;
        }
        out << (sep == ',' ? csv_field(fields[i]) : fields[i]);
    }
    out << '\n';
}

ordered_json metadata_json(const ScanMetadata& m) {
    ordered_json j;
    j["scan"] = m.scan;
    ordered_json grid = ordered_json::object();
    for (const auto& [axis, range] : m.grid) {
        grid[axis] = range;
    }
    j["grid"] = grid;
    j["filters"] = m.filters;
    j["seed"] = m.seed;
    if (m.timestamp) {
        j["timestamp"] = *m.timestamp;
    }
    return j;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "plain") {
        return OutputFormat::plain;
    }
    return std::nullopt;
}

std::string_view to_string(OutputFormat f) {
    switch (f) {
    case OutputFormat::json:
        return "json";
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::plain:
        return "plain";
    }
    return "plain";
}

std::string scan_summary(const ScanReport& report) {
    std::string s = report.metadata.scan + ": " + std::to_string(report.rows.size()) + " rows";
    for (const auto& c : report.criteria) {
        s += "; " + c.name + ": " + std::to_string(c.violations) + " counterexamples in " +
             std::to_string(c.covered) + " covered rows";
    }
    return s;
}

void write_report(const ScanReport& report, OutputFormat format, std::ostream& out) {
    const auto head = header(report);
    if (format == OutputFormat::csv) {
        write_line(out, head, ',');
        for (const auto& row : report.rows) {
            write_line(out, cells(row), ',');
        }
        return;
    }
    if (format == OutputFormat::plain) {
        out << scan_summary(report) << '\n';
        write_line(out, head, '\t');
        for (const auto& row : report.rows) {
            write_line(out, cells(row), '\t');
        }
        for (const auto& t : report.tables) {
            out << '\n' << t.name << '\n';
            write_line(out, t.columns, '\t');
            for (const auto& r : t.rows) {
                write_line(out, r, '\t');
            }
        }
        return;
    }
    ordered_json j;
    j["metadata"] = metadata_json(report.metadata);
    ordered_json crit = ordered_json::array();
    for (const auto& c : report.criteria) {
        ordered_json cj;
        cj["name"] = c.name;
        std::vector<std::string> flags;
        for (auto i : c.flag_indices) {
            flags.push_back(report.flag_columns[i]);
        }
        cj["flags"] = flags;
        cj["covered"] = c.covered;
        cj["counterexamples"] = c.violations;
        if (c.first_violation) {
            cj["first_counterexample_row"] = *c.first_violation;
        }
        crit.push_back(std::move(cj));
    }
    j["criteria"] = std::move(crit);
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
        const auto c = cells(row);
        ordered_json rj;
        for (std::size_t i = 0; i < head.size(); ++i) {
            const bool is_flag = i >= report.input_columns.size() + 2 &&
                                 i < report.input_columns.size() + 2 + report.flag_columns.size();
            if (is_flag) {
                rj[head[i]] = c[i] == "true";
            } else {
                rj[head[i]] = c[i];
            }
        }
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    ordered_json tables = ordered_json::array();
    for (const auto& t : report.tables) {
        ordered_json tj;
        tj["name"] = t.name;
        ordered_json trs = ordered_json::array();
        for (const auto& r : t.rows) {
            ordered_json rj;
            for (std::size_t i = 0; i < t.columns.size(); ++i) {
                rj[t.columns[i]] = r[i];
            }
            trs.push_back(std::move(rj));
        }
        tj["rows"] = std::move(trs);
        tables.push_back(std::move(tj));
    }
    j["tables"] = std::move(tables);
    out << j.dump(2) << '\n';
}

void write_series(const TruncatedSeries& series, OutputFormat format, std::ostream& out) {
    const auto coeffs = series.coefficients();
    if (format == OutputFormat::json) {
        ordered_json j = ordered_json::array();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            ordered_json e;
            e["k"] = i;
            e["value"] = to_string(coeffs[i]);
            j.push_back(std::move(e));
        }
        out << j.dump(2) << '\n';
    } else if (format == OutputFormat::csv) {
        out << "k,value\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            out << i << ',' << to_string(coeffs[i]) << '\n';
        }
    } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            out << (i ? ", " : "") << to_string(coeffs[i]);
        }
        out << '\n';
    }
}

}  // namespace segrelab
