// convexcheck: exact convexity verdicts for x-sorted point sequences.
//
// Subcommands: classify, sequence, verify, plot. Exit codes: 0 on success,
// 1 when verification finds a disagreement, 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cvx/io.hpp"
#include "cvx/oracle.hpp"
#include "cvx/svgplot.hpp"
#include "cvx/verify.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw cvx::Error(path + ": cannot open for writing");
    }
    out << content;
    if (!out) {
        throw cvx::Error(path + ": write failed");
    }
}

cvx::FileFormat to_format(const std::string& name) {
    if (name == "csv") return cvx::FileFormat::Csv;
    if (name == "json") return cvx::FileFormat::Json;
    return cvx::FileFormat::Infer;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact convex-polygon and convex-sequence checks"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "infer";
    std::string output;
    bool relax = false;

    auto add_shared = [&](CLI::App* cmd, bool with_output) {
        cmd->add_option("file", file, "input file (CSV or JSON)")->required();
        cmd->add_option("--format", format, "input format: csv or json (default: by extension)")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_flag("--relax-endpoints", relax, "allow x1 = x2 and x_{n-1} = x_n");
        if (with_output) {
            cmd->add_option("--output", output, "write result here instead of stdout");
        }
    };

    CLI::App* cmd_classify = app.add_subcommand("classify", "classify an x-sorted point list");
    add_shared(cmd_classify, true);
    bool use_oracle = false;
    cmd_classify->add_flag("--oracle", use_oracle,
                           "classify with the orientation-cycle oracle instead of slopes");

    CLI::App* cmd_sequence = app.add_subcommand("sequence", "analyze a scalar sequence");
    bool want_pivot = false;
    cmd_sequence->add_option("file", file, "input file (CSV or JSON)")->required();
    cmd_sequence->add_option("--format", format, "input format: csv or json (default: by extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_sequence->add_option("--output", output, "write result here instead of stdout");
    cmd_sequence->add_flag("--pivot", want_pivot, "also report the pivot index (convex input only)");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "cross-check the classifier against the geometric oracles");
    cvx::FuzzConfig cfg;
    std::string mode = "mixed";
    bool serial = false;
    cmd_verify->add_option("--seed", cfg.seed, "PRNG seed");
    cmd_verify->add_option("--instances", cfg.instances, "number of generated instances");
    cmd_verify->add_option("--n-min", cfg.n_min, "minimum vertex count");
    cmd_verify->add_option("--n-max", cfg.n_max, "maximum vertex count");
    cmd_verify->add_option("--coord-range", cfg.coord_range, "coordinates drawn from [-R, R]");
    cmd_verify->add_option("--mode", mode, "mixed | convex-only | hypothesis:Thm15|Thm16|Thm17")
        ->check(CLI::IsMember(
            {"mixed", "convex-only", "hypothesis:Thm15", "hypothesis:Thm16", "hypothesis:Thm17"}));
    cmd_verify->add_flag("--relax-endpoints", cfg.relax_endpoints,
                         "generate instances with duplicated endpoint x-values");
    cmd_verify->add_flag("--serial", serial, "use the serial reference runner");
    cmd_verify->add_option("--output", output, "write the report here instead of stdout");

    CLI::App* cmd_plot = app.add_subcommand("plot", "render an instance as SVG");
    add_shared(cmd_plot, false);
    std::string svg_path;
    cmd_plot->add_option("--svg", svg_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_classify)) {
            const cvx::PointsFile in = cvx::read_points_file(file, to_format(format));
            const cvx::PointSeq seq(in.points, relax || in.relax_endpoints);
            const cvx::PolygonVerdict verdict =
                use_oracle ? cvx::oracle_classify(seq) : cvx::classify(seq);
            write_output(output, cvx::verdict_json(verdict, cvx::slope_profile(seq)));
            return 0;
        }
        if (app.got_subcommand(cmd_sequence)) {
            const cvx::RealSeq values = cvx::read_sequence_file(file, to_format(format));
            const cvx::SeqReport report = cvx::analyze_sequence(values);
            std::optional<std::size_t> pivot;
            if (want_pivot) {
                pivot = cvx::find_pivot(values);
            }
            write_output(output, cvx::sequence_report_json(report, pivot));
            return 0;
        }
        if (app.got_subcommand(cmd_verify)) {
            if (mode == "mixed") cfg.mode = cvx::GenMode::Mixed;
            else if (mode == "convex-only") cfg.mode = cvx::GenMode::ConvexOnly;
            else if (mode == "hypothesis:Thm15") cfg.mode = cvx::GenMode::HypThm15;
            else if (mode == "hypothesis:Thm16") cfg.mode = cvx::GenMode::HypThm16;
            else cfg.mode = cvx::GenMode::HypThm17;

            const cvx::VerifyReport report = cvx::run_verification(cfg, !serial);
            write_output(output, cvx::verify_report_json(report));
            for (const cvx::Disagreement& d : report.dumps) {
                std::cerr << "disagreement at instance " << d.index << " (" << d.detail << "):\n"
                          << cvx::instance_json(d.points, d.relax_endpoints);
            }
            return report.disagreements == 0 ? 0 : 1;
        }
        if (app.got_subcommand(cmd_plot)) {
            const cvx::PointsFile in = cvx::read_points_file(file, to_format(format));
            const cvx::PointSeq seq(in.points, relax || in.relax_endpoints);
            write_output(svg_path, cvx::render_svg(seq, cvx::classify(seq)));
            return 0;
        }
    } catch (const cvx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
