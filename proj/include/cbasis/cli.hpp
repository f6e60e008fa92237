#pragma once

// Commands behind the `cbasis` executable. Each command validates its
// RunConfig, computes, and writes one CSV or JSON file. Diagnostics are
// reported through exceptions; the executable maps them to stderr and a
// nonzero exit status.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "cbasis/basis.hpp"
#include "cbasis/error.hpp"
#include "cbasis/hilbert.hpp"
#include "cbasis/projection.hpp"
#include "cbasis/timedomain.hpp"

namespace cbasis::cli {

enum class OutputFormat { csv, json };

// Invalid RunConfig field.
class config_error : public std::invalid_argument {
  public:
    config_error(std::string field, std::string const& message)
        : std::invalid_argument("invalid --" + field + ": " + message), field_(std::move(field)) {}
    std::string const& field() const noexcept { return field_; }

  private:
    std::string field_;
};

// Malformed input file.
class input_error : public std::runtime_error {
  public:
    explicit input_error(std::string const& message) : std::runtime_error(message) {}
};

class output_error : public std::runtime_error {
  public:
    explicit output_error(std::string const& message) : std::runtime_error(message) {}
};

struct RunConfig {
    std::string command;
    double k0 = 1.0;
    int n_max = 6;
    int order = kDefaultQuadratureOrder;
    std::string out;
    OutputFormat format = OutputFormat::csv;

    // basis-table
    std::vector<int> n_values{2, 3, 4};
    std::vector<int> j_values{1};
    double k_min = 0.0;
    double k_max = 10.0;
    int k_points = 100;

    // gram
    std::optional<int> lambda;

    // project
    std::string input;
    double alpha = 1.0;

    // timetrace
    int n = 2;
    int j = 1;
    std::optional<int> l;
    double r = 5.0;
    double ct_min = -15.0;
    double ct_max = 15.0;
    double ct_step = 0.05;
    std::string kind = "regular";

    void validate() const {
        static std::vector<std::string> const commands{"basis-table", "gram", "project", "timetrace", "nodes"};
        if (std::find(commands.begin(), commands.end(), command) == commands.end()) {
            throw config_error("command", "unknown command '" + command + "'");
        }
        if (!(k0 > 0.0) || !std::isfinite(k0)) {
            throw config_error("k0", "must be positive and finite");
        }
        if (out.empty()) {
            throw config_error("out", "an output path is required");
        }
        if (command == "basis-table") {
            if (n_values.empty()) {
                throw config_error("n", "at least one n is required");
            }
            if (j_values.empty()) {
                throw config_error("j", "at least one j is required");
            }
            for (int nv : n_values) {
                for (int jv : j_values) {
                    if (!BasisIndex::admissible(nv, jv)) {
                        throw config_error("n", "pair (n=" + std::to_string(nv) + ", j=" + std::to_string(jv) +
                                                    ") is inadmissible; need n >= 2 and 1 <= j <= n-1");
                    }
                }
            }
            if (!(k_min >= 0.0) || !std::isfinite(k_min)) {
                throw config_error("k-min", "must be finite and >= 0");
            }
            if (!(k_max >= k_min) || !std::isfinite(k_max)) {
                throw config_error("k-max", "must be finite and >= k-min");
            }
            if (k_points < 1) {
                throw config_error("k-points", "must be >= 1");
            }
        }
        if (command == "gram" || command == "project" || command == "nodes") {
            if (order < 2 || order > kMaxQuadratureOrder) {
                throw config_error("order", "must lie in [2, " + std::to_string(kMaxQuadratureOrder) + "]");
            }
            if (!(alpha > 0.0) || !std::isfinite(alpha)) {
                throw config_error("alpha", "must be positive and finite");
            }
        }
        if (command == "gram" || command == "project") {
            if (n_max < 2) {
                throw config_error("n-max", "must be >= 2");
            }
        }
        if (command == "gram" && lambda && *lambda != 1 && *lambda != -1) {
            throw config_error("lambda", "must be +1 or -1");
        }
        if (command == "project" && input.empty()) {
            throw config_error("input", "an input spectrum file is required");
        }
        if (command == "timetrace") {
            if (k0 != 1.0) {
                throw config_error("k0", "time-domain kernels are defined for k0 = 1 1/m; dilate instead");
            }
            if (!BasisIndex::admissible(n, j)) {
                throw config_error("n", "(n=" + std::to_string(n) + ", j=" + std::to_string(j) +
                                            ") is inadmissible; need n >= 2 and 1 <= j <= n-1");
            }
            int const lv = l.value_or(j);
            if (lv < j - 1 || lv > j + 1) {
                throw config_error("l", "must lie in {j-1, j, j+1}");
            }
            if (kind != "regular" && kind != "incoming" && kind != "outgoing" && kind != "all") {
                throw config_error("kind", "must be one of regular, incoming, outgoing, all");
            }
            if (!(r >= 0.0) || !std::isfinite(r) || r > kTimeDomainWindow) {
                throw config_error("r", "must lie in [0, " + std::to_string(kTimeDomainWindow) + "]");
            }
            if (r == 0.0 && kind != "regular") {
                throw config_error("r", "incoming and outgoing kernels are irregular at r = 0");
            }
            if (!(ct_step > 0.0) || !std::isfinite(ct_step)) {
                throw config_error("ct-step", "must be positive");
            }
            if (!std::isfinite(ct_min) || std::abs(ct_min) > kTimeDomainWindow) {
                throw config_error("ct-min", "must lie in the window [-100, 100]");
            }
            if (!std::isfinite(ct_max) || std::abs(ct_max) > kTimeDomainWindow) {
                throw config_error("ct-max", "must lie in the window [-100, 100]");
            }
        }
    }

    ScaleConfig scale() const {
        ScaleConfig s;
        s.k0 = k0;
        return s;
    }
};

// ---------------------------------------------------------------------------
// Serialization helpers
// ---------------------------------------------------------------------------

// 17 significant digits, locale independent.
inline std::string format_double(double value) {
    char buffer[64];
    auto const result = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
    return std::string(buffer, result.ptr);
}

inline double parse_double(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("'" + std::string(text) + "' is not a number");
    }
    return value;
}

inline int parse_int(std::string_view text) {
    double const value = parse_double(text);
    if (value != std::floor(value) || std::abs(value) > 1e9) {
        throw std::invalid_argument("'" + std::string(text) + "' is not an integer");
    }
    return static_cast<int>(value);
}

inline void write_file(std::string const& path, std::string const& content) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw output_error("cannot open '" + path + "' for writing");
    }
    os << content;
    os.flush();
    if (!os) {
        throw output_error("failed writing '" + path + "'");
    }
}

// Minimal CSV table builder; every row is joined with ',' and ended with '\n'.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> const& header) { row_strings(header); }

    template <typename... Cells>
    void row(Cells const&... cells) {
        std::vector<std::string> out;
        (out.push_back(cell(cells)), ...);
        row_strings(out);
    }

    void cells(std::vector<std::string> const& cells) { row_strings(cells); }

    void comment(std::string const& key, double value) { text_ << "# " << key << '=' << format_double(value) << '\n'; }

    std::string str() const { return text_.str(); }

  private:
    static std::string cell(double v) { return format_double(v); }
    static std::string cell(int v) { return std::to_string(v); }
    static std::string cell(std::size_t v) { return std::to_string(v); }
    static std::string cell(std::string const& v) { return v; }

    void row_strings(std::vector<std::string> const& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            text_ << (i ? "," : "") << cells[i];
        }
        text_ << '\n';
    }

    std::ostringstream text_;
};

inline std::string dump_json(nlohmann::ordered_json const& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Input spectrum file: CSV with columns j, m, lambda, k, re, im
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        auto const comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return cells;
}

// "k [1/m]" -> "k"
inline std::string column_name(std::string_view cell) {
    std::string name;
    for (char c : cell) {
        if (c == '[' || c == '(') {
            break;
        }
        if (c != ' ' && c != '\t' && c != '\r' && c != '"') {
            name.push_back(c);
        }
    }
    return name;
}

} // namespace detail

struct SampledInput {
    // per channel, (k, value) pairs in file order
    std::map<ChannelLabel, std::vector<std::pair<double, complex>>> channels;
};

inline SampledInput parse_spectrum_csv(std::istream& in, std::string const& source = "input") {
    static std::vector<std::string> const required{"j", "m", "lambda", "k", "re", "im"};
    std::string line;
    int line_no = 0;
    std::map<std::string, std::size_t> column;
    bool have_header = false;
    SampledInput result;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto const cells = detail::split_csv_line(line);
        if (!have_header) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                column.emplace(detail::column_name(cells[i]), i);
            }
            for (auto const& name : required) {
                if (!column.contains(name)) {
                    throw input_error(source + ": line " + std::to_string(line_no) + ": missing column '" + name + "'");
                }
            }
            have_header = true;
            continue;
        }
        auto field = [&](std::string const& name) -> std::string_view {
            auto const idx = column.at(name);
            if (idx >= cells.size()) {
                throw input_error(source + ": line " + std::to_string(line_no) + ": missing value for column '" +
                                  name + "'");
            }
            return cells[idx];
        };
        try {
            ChannelLabel label{parse_int(field("j")), parse_int(field("m")), parse_int(field("lambda"))};
            if (!label.admissible()) {
                throw input_error(source + ": line " + std::to_string(line_no) + ": inadmissible channel " +
                                  label.to_string());
            }
            double const k = parse_double(field("k"));
            complex const value(parse_double(field("re")), parse_double(field("im")));
            result.channels[label].emplace_back(k, value);
        } catch (std::invalid_argument const& e) {
            throw input_error(source + ": line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_header) {
        throw input_error(source + ": line " + std::to_string(line_no) + ": missing header row");
    }
    return result;
}

// Places parsed samples on the rule nodes. Every channel must list exactly
// the rule's wavenumbers, in increasing order.
inline SpectralSet to_spectral_set(SampledInput const& input, QuadratureRule const& rule, std::string const& source) {
    SpectralSet set{rule.nodes(), {}};
    auto const& nodes = rule.nodes();
    for (auto const& [label, samples] : input.channels) {
        if (samples.size() != nodes.size()) {
            throw input_error(source + ": channel " + label.to_string() + " has " + std::to_string(samples.size()) +
                              " samples, the quadrature rule has " + std::to_string(nodes.size()) +
                              " nodes (sample at the nodes listed by `cbasis nodes`)");
        }
        SpectralChannel ch{label, {}};
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            double const k = samples[i].first;
            if (std::abs(k - nodes[i]) > 1e-12 * nodes[i]) {
                throw input_error(source + ": channel " + label.to_string() + ": sample " + std::to_string(i) +
                                  " at k=" + format_double(k) + " does not match quadrature node " +
                                  format_double(nodes[i]));
            }
            ch.samples.push_back(samples[i].second);
        }
        set.channels.push_back(std::move(ch));
    }
    return set;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

inline std::vector<double> k_grid(RunConfig const& cfg) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(cfg.k_points));
    if (cfg.k_points == 1) {
        grid.push_back(cfg.k_min);
        return grid;
    }
    double const step = (cfg.k_max - cfg.k_min) / (cfg.k_points - 1);
    for (int i = 0; i < cfg.k_points; ++i) {
        grid.push_back(i + 1 == cfg.k_points ? cfg.k_max : cfg.k_min + i * step);
    }
    return grid;
}

inline std::string render_basis_table(RunConfig const& cfg) {
    cfg.validate();
    auto const scale = cfg.scale();
    auto const grid = k_grid(cfg);
    if (cfg.format == OutputFormat::csv) {
        CsvWriter csv({"n", "j", "k [1/m]", "c_nj [m]"});
        for (int nv : cfg.n_values) {
            for (int jv : cfg.j_values) {
                for (double k : grid) {
                    csv.row(nv, jv, k, c_multipolar(nv, jv, k, scale));
                }
            }
        }
        return csv.str();
    }
    nlohmann::ordered_json doc;
    doc["command"] = "basis-table";
    doc["k0 [1/m]"] = cfg.k0;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (int nv : cfg.n_values) {
        for (int jv : cfg.j_values) {
            for (double k : grid) {
                rows.push_back({{"n", nv}, {"j", jv}, {"k [1/m]", k}, {"c_nj [m]", c_multipolar(nv, jv, k, scale)}});
            }
        }
    }
    return dump_json(doc);
}

struct GramSummary {
    double max_offdiag = 0.0;
    double max_diag_dev = 0.0;
};

inline GramSummary summarize_gram(std::vector<std::vector<double>> const& g) {
    GramSummary s;
    for (std::size_t a = 0; a < g.size(); ++a) {
        for (std::size_t b = 0; b < g.size(); ++b) {
            if (a == b) {
                s.max_diag_dev = std::max(s.max_diag_dev, std::abs(g[a][b] - 1.0));
            } else {
                s.max_offdiag = std::max(s.max_offdiag, std::abs(g[a][b]));
            }
        }
    }
    return s;
}

inline std::string render_gram(RunConfig const& cfg) {
    cfg.validate();
    auto const scale = cfg.scale();
    auto const rule = gauss_laguerre_rule(cfg.order, cfg.k0);
    std::vector<int> helicities = cfg.lambda ? std::vector<int>{*cfg.lambda} : std::vector<int>{-1, 1};
    auto const indices = enumerate_basis(cfg.n_max, helicities);
    auto const g = gram_matrix(indices, rule, scale);
    auto const summary = summarize_gram(g);

    if (cfg.format == OutputFormat::csv) {
        CsvWriter csv({"row", "col", "n_row", "j_row", "m_row", "lambda_row", "n_col", "j_col", "m_col", "lambda_col",
                       "G [1]"});
        for (std::size_t a = 0; a < indices.size(); ++a) {
            for (std::size_t b = 0; b < indices.size(); ++b) {
                auto const& ia = indices[a];
                auto const& ib = indices[b];
                csv.row(a, b, ia.n, ia.j, ia.m, ia.lambda, ib.n, ib.j, ib.m, ib.lambda, g[a][b]);
            }
        }
        csv.comment("max_offdiag_abs", summary.max_offdiag);
        csv.comment("max_diag_dev", summary.max_diag_dev);
        return csv.str();
    }
    nlohmann::ordered_json doc;
    doc["command"] = "gram";
    doc["k0 [1/m]"] = cfg.k0;
    doc["order"] = cfg.order;
    auto& idx = doc["indices"] = nlohmann::ordered_json::array();
    for (auto const& i : indices) {
        idx.push_back({{"n", i.n}, {"j", i.j}, {"m", i.m}, {"lambda", i.lambda}});
    }
    doc["matrix"] = g;
    doc["summary"] = {{"max_offdiag_abs", summary.max_offdiag}, {"max_diag_dev", summary.max_diag_dev}};
    return dump_json(doc);
}

struct ProjectionReport {
    CoefficientVector coefficients;
    std::vector<ChannelLabel> channels;
    ResidualReport residual;
    double photon_number = 0.0;
    double energy = 0.0;
    double energy_quantum = 0.0;
};

// The input spectrum f lives on the rule for k0_eff = alpha * k0. The reported
// coefficients are those of dilate(f, alpha) in the k0 basis, which equal the
// coefficients of f in the k0_eff basis.
inline ProjectionReport run_projection(RunConfig const& cfg) {
    cfg.validate();
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) {
        throw input_error("cannot open input file '" + cfg.input + "'");
    }
    auto const parsed = parse_spectrum_csv(in, cfg.input);
    ScaleConfig scale = cfg.scale();
    scale.k0 = cfg.k0 * cfg.alpha;
    auto const rule = gauss_laguerre_rule(cfg.order, scale.k0);
    auto const f = to_spectral_set(parsed, rule, cfg.input);

    ProjectionReport report;
    report.coefficients = project(f, cfg.n_max, rule, scale);
    for (auto const& ch : f.channels) {
        report.channels.push_back(ch.label);
    }
    report.residual = residual(f, report.coefficients, rule);
    report.photon_number = photon_number(f, rule);
    report.energy = energy(f, rule, scale);
    report.energy_quantum = scale.energy_quantum();
    return report;
}

inline std::string render_projection(RunConfig const& cfg, ProjectionReport const& report) {
    auto const& coeffs = report.coefficients;
    auto present = [&](BasisIndex const& idx) {
        return std::find(report.channels.begin(), report.channels.end(), ChannelLabel{idx.j, idx.m, idx.lambda}) !=
               report.channels.end();
    };
    if (cfg.format == OutputFormat::csv) {
        CsvWriter csv({"n", "j", "m", "lambda", "re [1]", "im [1]"});
        for (auto const& [idx, value] : coeffs.entries) {
            if (present(idx)) {
                csv.row(idx.n, idx.j, idx.m, idx.lambda, value.real(), value.imag());
            }
        }
        csv.comment("photon_number [1]", report.photon_number);
        csv.comment("energy [J]", report.energy);
        csv.comment("energy_over_hbar_c0_k0 [1]", report.energy / report.energy_quantum);
        csv.comment("coefficient_norm_squared [1]", report.residual.coefficient_norm_squared);
        csv.comment("residual [1]", report.residual.residual);
        csv.comment("residual_raw [1]", report.residual.raw);
        return csv.str();
    }
    nlohmann::ordered_json doc;
    doc["command"] = "project";
    doc["k0 [1/m]"] = cfg.k0;
    doc["alpha"] = cfg.alpha;
    doc["n_max"] = cfg.n_max;
    doc["order"] = cfg.order;
    auto& rows = doc["coefficients"] = nlohmann::ordered_json::array();
    for (auto const& [idx, value] : coeffs.entries) {
        if (present(idx)) {
            rows.push_back({{"n", idx.n}, {"j", idx.j}, {"m", idx.m}, {"lambda", idx.lambda},
                            {"re [1]", value.real()}, {"im [1]", value.imag()}});
        }
    }
    doc["diagnostics"] = {{"photon_number [1]", report.photon_number},
                          {"energy [J]", report.energy},
                          {"energy_over_hbar_c0_k0 [1]", report.energy / report.energy_quantum},
                          {"coefficient_norm_squared [1]", report.residual.coefficient_norm_squared},
                          {"residual [1]", report.residual.residual},
                          {"residual_raw [1]", report.residual.raw}};
    return dump_json(doc);
}

inline KernelKind parse_kind(std::string const& kind) {
    if (kind == "incoming") {
        return KernelKind::incoming;
    }
    if (kind == "outgoing") {
        return KernelKind::outgoing;
    }
    return KernelKind::regular;
}

inline std::string render_timetrace(RunConfig const& cfg) {
    cfg.validate();
    KernelSpec spec{cfg.n, cfg.j, cfg.l.value_or(cfg.j), parse_kind(cfg.kind), cfg.r};
    bool const all = cfg.kind == "all";
    auto const grid = time_grid(cfg.ct_min, cfg.ct_max, cfg.ct_step);

    std::vector<KernelIntegrator::Values> values;
    if (!grid.empty()) {
        double bound = std::max(std::abs(grid.front()), std::abs(grid.back()));
        KernelIntegrator const integrator(spec, bound);
        values.reserve(grid.size());
        for (double ct : grid) {
            values.push_back(integrator.evaluate(ct));
        }
    }

    std::vector<std::string> header{"ct [m]"};
    std::vector<KernelKind> kinds = all ? std::vector<KernelKind>{KernelKind::regular, KernelKind::incoming,
                                                                   KernelKind::outgoing}
                                        : std::vector<KernelKind>{spec.kind};
    for (auto kind : kinds) {
        std::string const prefix = all ? std::string(to_string(kind)) + "_" : std::string();
        header.push_back(prefix + "re [a.u.]");
        header.push_back(prefix + "im [a.u.]");
        header.push_back(prefix + "abs [a.u.]");
    }
    if (all) {
        header.push_back("split_residual [a.u.]");
    }

    if (cfg.format == OutputFormat::csv) {
        CsvWriter csv(header);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            std::vector<std::string> row{format_double(grid[i])};
            for (auto kind : kinds) {
                complex const v = values[i].of(kind);
                row.push_back(format_double(v.real()));
                row.push_back(format_double(v.imag()));
                row.push_back(format_double(std::abs(v)));
            }
            if (all) {
                row.push_back(format_double(std::abs(values[i].incoming + values[i].outgoing - values[i].regular)));
            }
            csv.cells(row);
        }
        return csv.str();
    }
    nlohmann::ordered_json doc;
    doc["command"] = "timetrace";
    doc["n"] = cfg.n;
    doc["j"] = cfg.j;
    doc["l"] = spec.l;
    doc["r [m]"] = cfg.r;
    doc["kind"] = cfg.kind;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        nlohmann::ordered_json row;
        row["ct [m]"] = grid[i];
        for (auto kind : kinds) {
            std::string const prefix = all ? std::string(to_string(kind)) + "_" : std::string();
            complex const v = values[i].of(kind);
            row[prefix + "re [a.u.]"] = v.real();
            row[prefix + "im [a.u.]"] = v.imag();
            row[prefix + "abs [a.u.]"] = std::abs(v);
        }
        if (all) {
            row["split_residual [a.u.]"] = std::abs(values[i].incoming + values[i].outgoing - values[i].regular);
        }
        rows.push_back(std::move(row));
    }
    return dump_json(doc);
}

// Quadrature nodes at which `project` expects input samples.
inline std::string render_nodes(RunConfig const& cfg) {
    cfg.validate();
    auto const rule = gauss_laguerre_rule(cfg.order, cfg.k0 * cfg.alpha);
    if (cfg.format == OutputFormat::csv) {
        CsvWriter csv({"i", "k [1/m]", "weight [1/m^2]"});
        for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
            csv.row(i, rule.nodes()[i], rule.weights()[i]);
        }
        return csv.str();
    }
    nlohmann::ordered_json doc;
    doc["command"] = "nodes";
    doc["k0 [1/m]"] = cfg.k0 * cfg.alpha;
    doc["order"] = cfg.order;
    doc["k [1/m]"] = rule.nodes();
    doc["weight [1/m^2]"] = rule.weights();
    return dump_json(doc);
}

inline void cmd_basis_table(RunConfig const& cfg) { write_file(cfg.out, render_basis_table(cfg)); }
inline void cmd_gram(RunConfig const& cfg) { write_file(cfg.out, render_gram(cfg)); }
inline void cmd_project(RunConfig const& cfg) {
    auto const report = run_projection(cfg);
    if (report.residual.clamped) {
        std::clog << "cbasis project: negative residual " << format_double(report.residual.raw)
                  << " clamped to 0 (quadrature noise)\n";
    }
    write_file(cfg.out, render_projection(cfg, report));
}
inline void cmd_timetrace(RunConfig const& cfg) { write_file(cfg.out, render_timetrace(cfg)); }
inline void cmd_nodes(RunConfig const& cfg) { write_file(cfg.out, render_nodes(cfg)); }

inline void run(RunConfig const& cfg) {
    cfg.validate();
    if (cfg.command == "basis-table") {
        cmd_basis_table(cfg);
    } else if (cfg.command == "gram") {
        cmd_gram(cfg);
    } else if (cfg.command == "project") {
        cmd_project(cfg);
    } else if (cfg.command == "timetrace") {
        cmd_timetrace(cfg);
    } else {
        cmd_nodes(cfg);
    }
}

} // namespace cbasis::cli
