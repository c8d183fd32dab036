#include "goodgrad/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using goodgrad::cli::CliRequest;
    CliRequest req;
    CLI::App app{"Good Z-gradings of classical Lie algebras"};
    app.require_subcommand(1, 1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", req.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", req.family, "A, B, C, D or GL")->required();
    };

    auto* classify = app.add_subcommand("classify", "all good gradings for the nilpotent of a partition");
    add_family(classify);
    classify->add_option("--partition", req.partition, "comma-separated parts")->required();
    add_format(classify);

    auto* verify = app.add_subcommand("verify", "check one grading against the nilpotent of a partition");
    add_family(verify);
    verify->add_option("--partition", req.partition, "comma-separated parts")->required();
    verify->add_option("--diagonal", req.diagonal, "comma-separated diagonal of H, fractions allowed")->required();
    add_format(verify);

    auto* pyramids = app.add_subcommand("pyramids", "list the pyramids of a partition");
    add_family(pyramids);
    pyramids->add_option("--partition", req.partition, "comma-separated parts")->required();
    add_format(pyramids);

    auto* series = app.add_subcommand("series", "pyramid and unimodal generating functions");
    series->add_option("--order", req.order, "truncation order");
    add_format(series);

    auto* richardson = app.add_subcommand("richardson", "goodness of the Richardson element of a parabolic");
    add_family(richardson);
    richardson->add_option("--composition", req.composition, "comma-separated block sizes")->required();
    richardson->add_option("--q", req.q, "size of the middle block (B, C, D)");
    richardson->add_option("--samples", req.samples, "also run the sampling oracle with this many samples");
    add_format(richardson);

    auto* exceptional = app.add_subcommand("exceptional", "stored good gradings of exceptional algebras");
    exceptional->add_option("--algebra", req.algebra, "G2, F4, E6, E7 or E8")->required();
    exceptional->add_option("--orbit", req.orbit, "orbit label, e.g. A4+A1")->required();
    exceptional->add_flag("--mirrors", req.mirrors, "add E6 diagram-symmetry images");
    add_format(exceptional);

    auto* render = app.add_subcommand("render", "draw one pyramid");
    add_family(render);
    render->add_option("--partition", req.partition, "comma-separated parts")->required();
    render->add_option("--shifts", req.shifts, "comma-separated shifts; default is the base pyramid");
    add_format(render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return goodgrad::cli::kInvalidInput;
    }
    req.subcommand = app.get_subcommands().front()->get_name();

    const auto result = goodgrad::cli::run(req);
    std::cout << result.out << std::flush;
    std::cerr << result.err;
    return result.exit_code;
}
