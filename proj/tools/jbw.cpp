// jbw: batch front-end for the jordan library.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "jordan/cli.hpp"

int main(int argc, char** argv) {
    using jordan::cli::Command;
    using jordan::cli::Format;

    CLI::App app{"Euclidean Jordan algebras and order isomorphisms of their cones"};
    app.require_subcommand(1);

    Command cmd;
    std::string algebra, element, map, form;
    std::string format = "text";
    const std::map<std::string, Format> formats{{"text", Format::Text}, {"structured", Format::Structured}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cmd.seed, "random seed");
        sub->add_option("--format", format, "text|structured")->check(CLI::IsMember({"text", "structured"}));
    };

    auto* analyze = app.add_subcommand("analyze", "center, disengaged atoms and engaged part of an algebra");
    analyze->add_option("--algebra", algebra, "algebra descriptor file")->required();

    auto* spectrum = app.add_subcommand("spectrum", "spectral decomposition of an element");
    spectrum->add_option("--algebra", algebra, "algebra descriptor file")->required();
    spectrum->add_option("--element", element, "element coordinate file")->required();

    auto* factorize = app.add_subcommand("factorize", "factor a linear order isomorphism as U_y J");
    factorize->add_option("--algebra", algebra, "algebra descriptor file (unless the map names its algebras)");
    factorize->add_option("--map", map, "operator matrix file")->required();

    auto* decompose = app.add_subcommand("decompose", "engaged/disengaged decomposition");
    decompose->add_option("--algebra", algebra, "algebra descriptor file")->required();

    auto* verify = app.add_subcommand("verify-oiso", "sample order preservation and linearity of a form");
    verify->add_option("--form", form, "order-isomorphism form file")->required();
    verify->add_option("--trials", cmd.trials, "sample count")->check(CLI::PositiveNumber);

    auto* demo = app.add_subcommand("demo-nonlinear", "grid power map x(t) ↦ x(t)^λ(t)");
    demo->add_option("--grid", cmd.grid, "grid points")->check(CLI::Range(2, 1000));
    demo->add_option("--lambda", cmd.lambda, "exponent on the scalar half of the grid");
    demo->add_option("--trials", cmd.trials, "sample count")->check(CLI::PositiveNumber);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

    for (auto* sub : {analyze, spectrum, factorize, decompose, verify, demo, selftest}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : jordan::cli::kMalformedInput;
    }

    cmd.verb = app.get_subcommands().front()->get_name();
    if (!algebra.empty()) cmd.algebra_path = algebra;
    if (!element.empty()) cmd.element_path = element;
    if (!map.empty()) cmd.map_path = map;
    if (!form.empty()) cmd.form_path = form;
    cmd.format = formats.at(format);

    const auto outcome = jordan::cli::run(cmd);
    const bool failed_early =
        outcome.exit_code == jordan::cli::kMalformedInput || outcome.exit_code == jordan::cli::kPrecondition;
    (failed_early && cmd.format == Format::Text ? std::cerr : std::cout) << outcome.output;
    return outcome.exit_code;
}
