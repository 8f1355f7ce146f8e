#include "segrelab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "segrelab/errors.hpp"
#include "segrelab/families.hpp"
#include "segrelab/positivity.hpp"
#include "segrelab/report_io.hpp"
#include "segrelab/scan.hpp"
#include "segrelab/selfcheck.hpp"

namespace segrelab::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyGrid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parsed command line. Every numeric parameter is kept as its raw text
/// until the subcommand knows which ones it needs.
struct RunConfig {
    std::string subcommand;
    std::map<std::string, std::string> params;
    std::set<std::string> given;
    std::string format;              // empty picks the subcommand default
    std::string output;              // empty writes to the output stream
    unsigned workers = 0;            // 0 picks the hardware concurrency
    std::uint64_t seed = 0;
    bool timestamp = false;
    bool lemma = false;
    bool show_verdict = false;
    bool list = false;
    bool timing = false;

    bool has(const std::string& name) const { return given.count(name) != 0; }
    const std::string& raw(const std::string& name) const { return params.at(name); }
};

std::int64_t parse_int(std::string_view text, const std::string& what) {
    std::int64_t v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw UsageError("--" + what + ": expected an integer, got '" + std::string(text) + "'");
    }
    return v;
}

std::int64_t get_int(const RunConfig& c, const std::string& name) {
    if (!c.has(name)) {
        throw UsageError("missing --" + name);
    }
    return parse_int(c.raw(name), name);
}

std::int64_t get_int(const RunConfig& c, const std::string& name, std::int64_t fallback) {
    return c.has(name) ? parse_int(c.raw(name), name) : fallback;
}

int get_k(const RunConfig& c, const std::string& name = "k") {
    const std::int64_t k = get_int(c, name);
    if (k < 0 || k > 10000) {
        throw UsageError("--" + name + " must lie in 0..10000");
    }
    return static_cast<int>(k);
}

BigRational get_rational(const RunConfig& c, const std::string& name, const BigRational& fallback) {
    if (!c.has(name)) {
        return fallback;
    }
    try {
        return parse_rational(c.raw(name));
    } catch (const Error&) {
        throw UsageError("--" + name + ": expected an integer or num/den, got '" + c.raw(name) + "'");
    }
}

std::pair<std::string, std::string> split_range(const std::string& text, const std::string& name) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        return {text, text};
    }
    if (text.find("..", dots + 2) != std::string::npos) {
        throw UsageError("--" + name + ": malformed range '" + text + "'");
    }
    return {text.substr(0, dots), text.substr(dots + 2)};
}

IntRange get_range(const RunConfig& c, const std::string& name, IntRange fallback) {
    if (!c.has(name)) {
        return fallback;
    }
    auto [lo, hi] = split_range(c.raw(name), name);
    return IntRange{parse_int(lo, name), parse_int(hi, name)};
}

// A rational range with endpoints in (1/2)Z, returned as twice its endpoints.
IntRange get_half_range(const RunConfig& c, const std::string& name, IntRange fallback) {
    if (!c.has(name)) {
        return fallback;
    }
    auto [lo, hi] = split_range(c.raw(name), name);
    auto twice = [&](const std::string& s) {
        BigRational v;
        try {
            v = parse_rational(s);
        } catch (const Error&) {
            throw UsageError("--" + name + ": bad endpoint '" + s + "'");
        }
        const BigRational d = 2 * v;
        if (!is_integer(d)) {
            throw UsageError("--" + name + ": endpoints must be multiples of 1/2");
        }
        return d.get_num().get_si();
    };
    return IntRange{twice(lo), twice(hi)};
}

OutputFormat get_format(const RunConfig& c, OutputFormat fallback) {
    if (c.format.empty()) {
        return fallback;
    }
    auto f = parse_format(c.format);
    if (!f) {
        throw UsageError("--format must be json, csv or plain");
    }
    return *f;
}

GeometryKind get_kind(const RunConfig& c) {
    if (!c.has("kind")) {
        throw UsageError("missing --kind");
    }
    auto k = parse_geometry(c.raw("kind"));
    if (!k) {
        throw UsageError("unknown --kind '" + c.raw("kind") + "'");
    }
    return *k;
}

// -- output ------------------------------------------------------------------

void check_output_path(const RunConfig& c) {
    if (c.output.empty()) {
        return;
    }
    const fs::path p(c.output);
    const fs::path dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        throw IoError("output directory does not exist: " + dir.string());
    }
    if (fs::is_directory(p, ec)) {
        throw IoError("output path is a directory: " + p.string());
    }
}

// Writes through a sibling temporary so a failed write leaves no partial file.
void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    const fs::path target(c.output);
    fs::path tmp = target;
    tmp += ".partial";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        f << text;
        f.flush();
        if (!f) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move output into place: " + target.string());
    }
}

ordered_json flags_json(const std::vector<Flag>& flags) {
    ordered_json j = ordered_json::object();
    for (const auto& f : flags) {
        j[f.name] = f.holds;
    }
    return j;
}

ordered_json verdict_json(const CriterionVerdict& v) {
    ordered_json j;
    j["hypotheses"] = flags_json(v.flags);
    j["derived"] = flags_json(v.derived);
    j["assumptions"] = v.assumptions;
    j["segre"] = to_string(v.segre.value);
    j["sign"] = std::string(to_string(v.segre.sign));
    j["conclusion"] = std::string(to_string(v.conclusion));
    return j;
}

void verdict_plain(const CriterionVerdict& v, std::ostream& s, const std::string& indent) {
    s << indent << "hypotheses:\n";
    for (const auto& f : v.flags) {
        s << indent << "  " << f.name << ": " << (f.holds ? "true" : "false") << '\n';
    }
    if (!v.derived.empty()) {
        s << indent << "derived:\n";
        for (const auto& f : v.derived) {
            s << indent << "  " << f.name << ": " << (f.holds ? "true" : "false") << '\n';
        }
    }
    for (const auto& a : v.assumptions) {
        s << indent << "assumed: " << a << '\n';
    }
    s << indent << "segre: " << to_string(v.segre.value) << " (" << to_string(v.segre.sign) << ")\n";
    s << indent << "conclusion: " << to_string(v.conclusion) << '\n';
}

std::string failed_flags(const CriterionVerdict& v) {
    std::string s;
    for (const auto& f : v.flags) {
        if (!f.holds) {
            s += (s.empty() ? "" : ", ") + f.name;
        }
    }
    return s;
}

// -- segre -------------------------------------------------------------------

SurfaceBundle k_trivial_bundle(const RunConfig& c, GeometryKind kind) {
    const std::int64_t r = get_int(c, "r", 1);
    if (c.has("chi")) {
        if (c.has("c1sq") || c.has("c2")) {
            throw UsageError("give either --chi/--delta or --c1sq/--c2, not both");
        }
        return bundle_from_chi_delta(kind, r, get_int(c, "chi"), get_rational(c, "delta", 0));
    }
    if (c.has("delta")) {
        throw UsageError("--delta needs --chi");
    }
    return SurfaceBundle::on(kind, r, get_int(c, "c1sq"), get_int(c, "c2", 0));
}

int cmd_segre(const RunConfig& c, std::ostream& out) {
    if (!c.has("kind")) {
        throw UsageError("missing --kind");
    }
    const std::string kind_name = c.raw("kind");
    const OutputFormat fmt = get_format(c, OutputFormat::plain);
    const int k = get_k(c);
    CriterionVerdict v;
    std::string label;
    if (kind_name == "curve") {
        const CurveBundle b{get_int(c, "g"), get_int(c, "r", 1), get_int(c, "d")};
        if (b.genus < 0 || b.rank < 1) {
            throw UsageError("curve needs g >= 0 and r >= 1");
        }
        v = check_curve_criterion(b, k);
        label = "curve";
    } else if (kind_name == "quot") {
        const std::int64_t N = get_int(c, "N");
        if (N < 1 || get_int(c, "g") < 0) {
            throw UsageError("quot needs N >= 1 and g >= 0");
        }
        v = check_quot_criterion(get_int(c, "g"), N, get_int(c, "d"), k);
        label = "quot";
    } else {
        const GeometryKind kind = get_kind(c);
        label = std::string(to_string(kind));
        switch (kind) {
        case GeometryKind::K3:
            v = check_k3(k_trivial_bundle(c, kind), k);
            break;
        case GeometryKind::Abelian:
        case GeometryKind::Bielliptic:
            v = check_abelian(k_trivial_bundle(c, kind), k);
            break;
        case GeometryKind::Enriques:
            v = check_enriques(k_trivial_bundle(c, kind), k);
            break;
        case GeometryKind::BlowupK3:
            v = check_blowup(get_int(c, "h"), get_int(c, "ell"), k);
            break;
        case GeometryKind::GeneralRank1:
            v = check_general_type(get_int(c, "l-sq"), get_int(c, "l-dot-k"), get_int(c, "k-sq"),
                                   get_int(c, "chi-o"), k);
            break;
        }
    }
    std::ostringstream s;
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["kind"] = label;
        j["k"] = k;
        j["value"] = to_string(v.segre.value);
        j["sign"] = std::string(to_string(v.segre.sign));
        if (c.show_verdict) {
            j["verdict"] = verdict_json(v);
        }
        s << j.dump(2) << '\n';
    } else if (fmt == OutputFormat::csv) {
        s << "kind,k,value,sign\n" << label << ',' << k << ',' << to_string(v.segre.value) << ','
          << to_string(v.segre.sign) << '\n';
    } else {
        s << to_string(v.segre.value) << '\n' << "sign: " << to_string(v.segre.sign) << '\n';
        if (c.show_verdict) {
            verdict_plain(v, s, "");
        }
    }
    emit(c, s.str(), out);
    return ok;
}

// -- series ------------------------------------------------------------------

int cmd_series(const RunConfig& c, std::ostream& out) {
    if (!c.has("kind")) {
        throw UsageError("missing --kind");
    }
    const OutputFormat fmt = get_format(c, OutputFormat::plain);
    const int k_max = get_k(c, "k-max");
    TruncatedSeries s = TruncatedSeries::constant(1, 0);
    if (c.raw("kind") == "curve") {
        const CurveBundle b{get_int(c, "g"), get_int(c, "r", 1), get_int(c, "d")};
        if (b.genus < 0 || b.rank < 1) {
            throw UsageError("curve needs g >= 0 and r >= 1");
        }
        s = segre_curve_series(b, k_max);
    } else {
        const GeometryKind kind = get_kind(c);
        if (kind != GeometryKind::K3 && kind != GeometryKind::Enriques) {
            throw UsageError("series supports --kind k3, enriques or curve");
        }
        s = segre_series(kind, k_trivial_bundle(c, kind), k_max);
    }
    std::ostringstream text;
    write_series(s, fmt, text);
    emit(c, text.str(), out);
    return ok;
}

// -- scan --------------------------------------------------------------------

int cmd_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const OutputFormat fmt = get_format(c, OutputFormat::csv);
    ScanOptions opts;
    opts.workers = c.workers;
    opts.seed = c.seed;
    if (c.timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        opts.timestamp = buf;
    }
    const std::string kind = c.lemma ? std::string("lemma") : (c.has("kind") ? c.raw("kind") : std::string());
    if (kind.empty()) {
        throw UsageError("scan needs --kind or --lemma41");
    }
    check_output_path(c);

    ScanReport rep;
    if (kind == "lemma") {
        rep = scan_lemma(get_range(c, "m", grid::lemma_m), get_range(c, "n", grid::lemma_n),
                         get_range(c, "p", grid::lemma_p), opts);
    } else if (kind == "enriques") {
        rep = scan_enriques(get_range(c, "r", grid::enriques_r), get_range(c, "k", grid::enriques_k),
                            get_range(c, "chi-margin", grid::enriques_margin),
                            get_half_range(c, "delta", grid::enriques_delta_halves), opts);
    } else if (kind == "k3" || kind == "abelian" || kind == "bielliptic") {
        rep = scan_k_trivial(*parse_geometry(kind), get_range(c, "r", grid::k_trivial_r),
                             get_range(c, "k", grid::k_trivial_k), get_range(c, "chi-margin", grid::k_trivial_margin),
                             get_range(c, "delta", grid::k_trivial_delta), opts);
    } else if (kind == "blowup-k3") {
        rep = scan_blowup(get_range(c, "h", grid::blowup_h), get_range(c, "ell", grid::blowup_ell),
                          get_range(c, "k", grid::blowup_k), opts);
    } else if (kind == "general") {
        rep = scan_general_type(get_range(c, "l-sq", grid::general_L_sq), get_range(c, "l-dot-k", grid::general_L_dot_K),
                                get_range(c, "k-sq", grid::general_K_sq), get_range(c, "chi-o", grid::general_chi_O),
                                get_range(c, "k", grid::general_k), opts);
    } else if (kind == "curve") {
        rep = scan_curve(get_range(c, "g", grid::curve_g), get_range(c, "r", grid::curve_r),
                         get_range(c, "d", grid::curve_d), get_range(c, "k", grid::curve_k), opts);
    } else if (kind == "quot") {
        rep = scan_quot(get_range(c, "g", grid::quot_g), get_range(c, "N", grid::quot_N),
                        get_range(c, "d", grid::quot_d), get_range(c, "k", grid::quot_k), opts);
    } else {
        throw UsageError("unknown scan kind '" + kind + "'");
    }
    if (rep.rows.empty()) {
        throw EmptyGrid("the grid has no cells");
    }
    std::ostringstream text;
    write_report(rep, fmt, text);
    emit(c, text.str(), out);
    (c.output.empty() ? err : out) << scan_summary(rep) << '\n';
    return ok;
}

// -- verify ------------------------------------------------------------------

int cmd_verify(const RunConfig& c, std::ostream& out) {
    const auto names = property_names();
    if (c.list) {
        for (const auto& n : names) {
            out << n << '\n';
        }
        return ok;
    }
    std::optional<std::string> only;
    if (c.has("only")) {
        only = c.raw("only");
        if (std::find(names.begin(), names.end(), *only) == names.end()) {
            throw UsageError("unknown property '" + *only + "'");
        }
    }
    bool all = true;
    std::ostringstream s;
    for (const auto& r : run_properties(only, c.seed, c.workers)) {
        all = all && r.passed;
        s << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail;
        if (c.timing) {
            s << ", " << r.seconds << " s";
        }
        s << ")\n";
    }
    emit(c, s.str(), out);
    return all ? ok : property_failure;
}

// -- examples ----------------------------------------------------------------

int cmd_examples(const RunConfig& c, std::ostream& out) {
    if (!c.has("family")) {
        throw UsageError("examples needs a family name");
    }
    const std::string& family = c.raw("family");
    std::vector<FamilyReport> reports;
    auto k = [&] { return c.has("k") ? get_k(c) : 1; };
    if (family == "lazarsfeld-mukai") {
        reports = family_lazarsfeld_mukai(get_int(c, "g"), get_int(c, "d"), get_int(c, "r", 2), k());
    } else if (family == "ulrich") {
        reports.push_back(family_ulrich(get_int(c, "a"), get_int(c, "h"), k(), get_int(c, "m", 1)));
    } else if (family == "semihomogeneous") {
        reports.push_back(family_semihomogeneous(get_int(c, "a"), get_int(c, "b"), k()));
    } else if (family == "unipotent") {
        reports.push_back(family_unipotent(get_int(c, "r"), get_int(c, "h-sq"), k()));
    } else if (family == "k3-line") {
        reports.push_back(family_k3_line(get_int(c, "n", 1), get_int(c, "g"), k()));
    } else if (family == "abelian-line") {
        reports.push_back(family_abelian_line(get_int(c, "n", 1), get_int(c, "h-sq"), k()));
    } else if (family == "enriques-line") {
        reports.push_back(family_enriques_line(get_int(c, "n"), get_int(c, "h-sq"), k()));
    } else if (family == "blowup-line-bundle") {
        reports.push_back(family_blowup_line(get_int(c, "h"), get_int(c, "ell"), k()));
    } else {
        throw UsageError("unknown family '" + family +
                         "' (lazarsfeld-mukai, ulrich, semihomogeneous, unipotent, k3-line, abelian-line, "
                         "enriques-line, blowup-line-bundle)");
    }
    const OutputFormat fmt = get_format(c, OutputFormat::plain);
    bool consistent = true;
    std::ostringstream s;
    ordered_json arr = ordered_json::array();
    if (fmt == OutputFormat::csv) {
        s << "family,status,failed_hypotheses,segre,sign\n";
    }
    for (const auto& rep : reports) {
        consistent = consistent && rep.verdict.consistent();
        const bool pass = rep.verdict.hypotheses_hold();
        const std::string status = !rep.verdict.consistent() ? "contradiction" : pass ? "pass" : "rejected";
        if (fmt == OutputFormat::json) {
            ordered_json j;
            j["family"] = rep.family;
            j["status"] = status;
            ordered_json nums = ordered_json::object();
            for (const auto& [name, value] : rep.numerics) {
                nums[name] = to_string(value);
            }
            j["numerics"] = nums;
            j["verdict"] = verdict_json(rep.verdict);
            arr.push_back(std::move(j));
        } else if (fmt == OutputFormat::csv) {
            s << '"' << rep.family << "\"," << status << ",\"" << failed_flags(rep.verdict) << "\","
              << to_string(rep.verdict.segre.value) << ',' << to_string(rep.verdict.segre.sign) << '\n';
        } else {
            s << rep.family << ": " << status;
            if (!pass) {
                s << " (fails " << failed_flags(rep.verdict) << ')';
            }
            s << '\n';
            for (const auto& [name, value] : rep.numerics) {
                s << "  " << name << " = " << to_string(value) << '\n';
            }
            verdict_plain(rep.verdict, s, "  ");
        }
    }
    if (fmt == OutputFormat::json) {
        s << arr.dump(2) << '\n';
    }
    emit(c, s.str(), out);
    return consistent ? ok : property_failure;
}

// -- argument plumbing -------------------------------------------------------

bool looks_negative(const std::string& s) {
    return s.size() >= 2 && s[0] == '-' && (std::isdigit(static_cast<unsigned char>(s[1])) != 0);
}

// "--opt -12..12" becomes "--opt=-12..12" so ranges and negative numbers
// are never mistaken for short options.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) == 0 && a.size() > 2 && a.find('=') == std::string::npos && i + 1 < args.size() &&
            looks_negative(args[i + 1])) {
            out.push_back(a + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(a);
        }
    }
    return out;
}

// Expands "--config FILE" into "--key=value" arguments placed ahead of the
// explicit ones so that the command line wins.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::optional<std::string> path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) {
                throw UsageError("--config needs a file");
            }
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (!path) {
        return rest;
    }
    std::ifstream f(*path);
    if (!f) {
        throw IoError("cannot read config file " + *path);
    }
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) {
        throw UsageError("config file must hold a JSON object");
    }
    std::vector<std::string> injected;
    std::optional<std::string> subcommand;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const auto& v = it.value();
        if (key == "subcommand") {
            subcommand = v.get<std::string>();
            continue;
        }
        if (key == "family") {
            injected.push_back(v.get<std::string>());
            continue;
        }
        if (v.is_boolean()) {
            if (v.get<bool>()) {
                injected.push_back("--" + key);
            }
        } else if (v.is_string()) {
            injected.push_back("--" + key + "=" + v.get<std::string>());
        } else if (v.is_number_integer()) {
            injected.push_back("--" + key + "=" + std::to_string(v.get<std::int64_t>()));
        } else {
            throw UsageError("config key '" + key + "' must be a string, integer or boolean");
        }
    }
    static const std::set<std::string> subcommands{"segre", "series", "scan", "verify", "examples"};
    std::vector<std::string> out;
    std::size_t start = 0;
    if (!rest.empty() && subcommands.count(rest[0])) {
        out.push_back(rest[0]);
        start = 1;
    } else if (subcommand) {
        out.push_back(*subcommand);
    } else {
        throw UsageError("no subcommand given");
    }
    // a positional family on the command line overrides the config one
    if (j.contains("family") && start < rest.size() && rest[start].rfind("-", 0) != 0) {
        injected.erase(std::find(injected.begin(), injected.end(), j["family"].get<std::string>()));
    }
    out.insert(out.end(), injected.begin(), injected.end());
    out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(start), rest.end());
    return out;
}

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--format", c.format, "json, csv or plain");
    sub->add_option("--output,-o", c.output, "write to this file instead of standard output");
    sub->add_option("--workers", c.workers, "worker threads (0: hardware concurrency)");
    sub->add_option("--seed", c.seed, "random seed, recorded in reports");
}

void add_params(CLI::App* sub, RunConfig& c, const std::vector<std::pair<std::string, std::string>>& names) {
    for (const auto& [name, help] : names) {
        sub->add_option("--" + name, c.params[name], help);
    }
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Exact Segre integrals of tautological bundles over Hilbert schemes of points"};
    app.require_subcommand(1);
    // "-h" would clash with the "--h" parameter
    app.set_help_flag("--help", "print this help");
    app.set_version_flag("--version", "segrelab 0.1.0");
    for (auto* o : app.get_options()) {
        o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }

    auto* segre = app.add_subcommand("segre", "top Segre integral for one bundle");
    add_common(segre, c);
    add_params(segre, c,
               {{"kind", "k3, abelian, bielliptic, enriques, blowup-k3, general, curve or quot"},
                {"r", "rank (default 1)"},
                {"chi", "Euler characteristic"},
                {"delta", "delta invariant (default 0)"},
                {"c1sq", "c1^2"},
                {"c2", "c2 (default 0)"},
                {"k", "number of points"},
                {"h", "H^2 = 2h (blowup-k3)"},
                {"ell", "L = H - ell E (blowup-k3)"},
                {"l-sq", "L^2 (general)"},
                {"l-dot-k", "L.K (general)"},
                {"k-sq", "K^2 (general)"},
                {"chi-o", "chi(O_X) (general)"},
                {"g", "genus (curve, quot)"},
                {"d", "degree (curve, quot)"},
                {"N", "rank of the trivial bundle (quot)"}});
    segre->add_flag("--verdict", c.show_verdict, "also print the hypothesis flags");

    auto* series = app.add_subcommand("series", "generating series coefficients 0..k-max");
    add_common(series, c);
    add_params(series, c,
               {{"kind", "k3, enriques or curve"},
                {"r", "rank (default 1)"},
                {"chi", "Euler characteristic"},
                {"delta", "delta invariant (default 0)"},
                {"c1sq", "c1^2"},
                {"c2", "c2 (default 0)"},
                {"k-max", "last coefficient"},
                {"g", "genus (curve)"},
                {"d", "degree (curve)"}});

    auto* scan = app.add_subcommand("scan", "parameter-grid scan; ranges are lo..hi inclusive");
    add_common(scan, c);
    add_params(scan, c,
               {{"kind", "enriques, k3, abelian, bielliptic, blowup-k3, general, curve, quot or lemma"},
                {"r", "rank range"},
                {"k", "k range"},
                {"chi-margin", "chi - (r+2)k range"},
                {"delta", "delta range (multiples of 1/2 for enriques)"},
                {"h", "h range (blowup-k3)"},
                {"ell", "ell range (blowup-k3)"},
                {"l-sq", "L^2 range (general)"},
                {"l-dot-k", "L.K range (general)"},
                {"k-sq", "K^2 range (general)"},
                {"chi-o", "chi(O) range (general)"},
                {"g", "genus range"},
                {"d", "degree range"},
                {"N", "N range (quot)"},
                {"m", "m range (lemma)"},
                {"n", "n range (lemma)"},
                {"p", "p range (lemma)"}});
    scan->add_flag("--lemma41", c.lemma, "scan the positivity lemma for (m, n, p)");
    scan->add_flag("--timestamp", c.timestamp, "record the wall-clock time in the report metadata");

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    add_common(verify, c);
    add_params(verify, c, {{"only", "run a single property"}});
    verify->add_flag("--list", c.list, "list property names");
    verify->add_flag("--timing", c.timing, "append run times");

    auto* examples = app.add_subcommand("examples", "numerics and verdicts for geometric families");
    add_common(examples, c);
    examples->add_option("family", c.params["family"], "family name");
    add_params(examples, c,
               {{"k", "number of points (default 1)"},
                {"a", "a"},
                {"b", "b"},
                {"h", "h"},
                {"m", "m (default 1)"},
                {"g", "g"},
                {"d", "d"},
                {"r", "r"},
                {"n", "n"},
                {"h-sq", "H^2"},
                {"ell", "ell"}});

    for (auto* sub : app.get_subcommands({})) {
        for (auto* o : sub->get_options()) {
            o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        }
    }

    try {
        std::vector<std::string> args = glue_negative_values(expand_config(raw_args));
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << "segrelab 0.1.0\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return io_error;
    }

    CLI::App* chosen = app.get_subcommands().front();
    c.subcommand = chosen->get_name();
    for (auto* o : chosen->get_options()) {
        if (o->count() > 0) {
            c.given.insert(o->get_single_name());
        }
    }

    try {
        if (c.subcommand == "segre") {
            return cmd_segre(c, out);
        }
        if (c.subcommand == "series") {
            return cmd_series(c, out);
        }
        if (c.subcommand == "scan") {
            return cmd_scan(c, out, err);
        }
        if (c.subcommand == "verify") {
            return cmd_verify(c, out);
        }
        return cmd_examples(c, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const EmptyGrid& e) {
        err << "empty input: " << e.what() << '\n';
        return empty_input;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return io_error;
    } catch (const Error& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return usage_error;
    }
}

}  // namespace segrelab::cli
