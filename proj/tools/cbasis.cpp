// cbasis: tables, Gram matrices, projections and time traces of the
// countable photon basis as CSV or JSON files.

#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "cbasis/cli.hpp"

namespace {

using cbasis::cli::OutputFormat;
using cbasis::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg) {
    static std::map<std::string, OutputFormat> const formats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
    sub->add_option("--k0", cfg.k0, "reference wavenumber k0 [1/m]");
    sub->add_option("--format", cfg.format, "output format")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--out", cfg.out, "output file")->required();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Countable photon basis |n j m lambda>: expansion functions, Gram matrices, projections, time traces"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* table = app.add_subcommand("basis-table", "multipolar expansion functions c_nj(k) on a k grid");
    add_common(table, cfg);
    table->add_option("--n", cfg.n_values, "n values")->expected(1, -1);
    table->add_option("--j", cfg.j_values, "j values")->expected(1, -1);
    table->add_option("--k-min", cfg.k_min, "first wavenumber [1/m]");
    table->add_option("--k-max", cfg.k_max, "last wavenumber [1/m]");
    table->add_option("--k-points", cfg.k_points, "number of wavenumbers");

    auto* gram = app.add_subcommand("gram", "Gram matrix of all basis vectors with n <= n-max");
    add_common(gram, cfg);
    gram->add_option("--n-max", cfg.n_max, "largest n");
    gram->add_option("--order", cfg.order, "Gauss-Laguerre order");
    gram->add_option("--lambda", cfg.lambda, "restrict to one helicity (+1 or -1)");

    auto* project = app.add_subcommand("project", "expand a sampled spectrum in the countable basis");
    add_common(project, cfg);
    project->add_option("--input", cfg.input, "spectrum CSV with columns j,m,lambda,k,re,im")->required();
    project->add_option("--n-max", cfg.n_max, "truncation order");
    project->add_option("--order", cfg.order, "Gauss-Laguerre order");
    project->add_option("--alpha", cfg.alpha, "dilatation factor applied to the input spectrum");

    auto* nodes = app.add_subcommand("nodes", "quadrature nodes at which `project` expects samples");
    add_common(nodes, cfg);
    nodes->add_option("--order", cfg.order, "Gauss-Laguerre order");
    nodes->add_option("--alpha", cfg.alpha, "dilatation factor (nodes of the k0*alpha rule)");

    auto* trace = app.add_subcommand("timetrace", "radial-temporal kernel c_nj(ct, r) of the basis fields");
    add_common(trace, cfg);
    trace->add_option("--n", cfg.n, "n");
    trace->add_option("--j", cfg.j, "j");
    trace->add_option("--l", cfg.l, "spherical Bessel order l in {j-1, j, j+1} (default j)");
    trace->add_option("--r", cfg.r, "radius [m]");
    trace->add_option("--ct-min", cfg.ct_min, "first ct [m]");
    trace->add_option("--ct-max", cfg.ct_max, "last ct [m]");
    trace->add_option("--ct-step", cfg.ct_step, "ct step [m]");
    trace->add_option("--kind", cfg.kind, "regular, incoming, outgoing or all");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        return app.exit(e);
    }

    for (auto* sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
    }
    try {
        cbasis::cli::run(cfg);
    } catch (cbasis::cli::config_error const& e) {
        std::cerr << "cbasis " << cfg.command << ": " << e.what() << '\n';
        return 2;
    } catch (std::exception const& e) {
        std::cerr << "cbasis " << cfg.command << ": " << e.what() << '\n';
        return 1;
    }
    return 0;
}
