#include <iostream>

#include <CLI11.hpp>

#include <ncgrowth/cli.hpp>

int main(int argc, char **argv)
{
    using namespace ncgrowth::cli;
    Request req;
    CLI::App app{"Hilbert series, strong freeness and growth of graded algebras"};
    app.require_subcommand(1);

    auto common = [&](CLI::App *sub, std::size_t inputs) {
        sub->add_option("inputs", req.inputs, "presentation file(s)")->expected(static_cast<int>(inputs))->required();
        sub->add_option("--max-degree,-D", req.max_degree, "degree bound")->capture_default_str();
        sub->add_option("--max-rank", req.max_rank, "chain rank bound (default: max degree)");
        sub->add_option("--seed", req.seed, "random seed")->capture_default_str();
        sub->add_option("--format", req.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        sub->add_option("--precision", req.precision, "isolation width 2^-precision")->capture_default_str();
        sub->add_option("--max-rules", req.max_rules, "rewrite-rule cap")->capture_default_str();
        sub->add_flag("--canonical", req.canonical, "omit timing fields");
        sub->add_option("--expect", req.expect, "expected verdict; mismatch exits with 2");
        sub->callback([&req, sub] { req.command = sub->get_name(); });
        return sub;
    };

    common(app.add_subcommand("hilbert", "Hilbert series via Groebner completion"), 1);
    common(app.add_subcommand("chains", "Anick chain table of the (associated) monomial algebra"), 1);
    common(app.add_subcommand("euler", "Euler identity and partial Euler bounds"), 1);
    common(app.add_subcommand("strongly-free", "strong-freeness verdict over all routes"), 1)
        ->add_option("--ambient", req.ambient, "ambient presentation (default: free algebra)");
    common(app.add_subcommand("gs", "Golod-Shafarevich slack and syzygy series"), 1);
    common(app.add_subcommand("govorov", "Govorov (Rs) and (an) bounds"), 1);
    common(app.add_subcommand("growth", "exponent of growth"), 1)
        ->add_option("--window", req.window, "estimator window (default max(4, D/5))");
    common(app.add_subcommand("free-product", "Hilbert series of a free product"), 2);
    common(app.add_subcommand("main-bound", "B(r(A)) S(r(A)) >= 1 for the relations of the input"), 1)
        ->add_option("--ambient", req.ambient, "ambient presentation A (default: free algebra)");
    auto *ins = common(app.add_subcommand("insulate", "insulated monomial for A * B"), 2);
    ins->add_option("--word", req.word, "word n = x n' x of the free product")->required();
    auto *probe = common(app.add_subcommand("probe-extremal", "growth of a quotient A/I"), 1);
    probe->add_option("--ideal", req.ideal, "generators of I")->required();
    probe->add_option("--ideal2", req.ideal2, "generators of J for the annihilating-pair check");
    common(app.add_subcommand("corpus", "regression run over a directory of .alg files"), 1);

    auto *reduce = app.add_subcommand("reduce", "reductions on pairs (s, t)");
    reduce->require_subcommand(1);
    auto *pad = common(reduce->add_subcommand("pad", "add free generators"), 1);
    pad->add_option("--extra", req.extra, "number of generators to add")->capture_default_str();
    common(reduce->add_subcommand("double", "double the generators, adding a generic strongly free set"), 1);
    auto *gamma = common(reduce->add_subcommand("gamma", "append z_i z_j on m fresh generators"), 1);
    gamma->add_option("--m", req.m, "number of fresh generators")->capture_default_str();
    for (auto *sub : {pad, app.get_subcommand("reduce")->get_subcommand("double"), gamma}) {
        sub->callback([&req, sub] {
            req.command = "reduce";
            req.subcommand = sub->get_name();
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const Outcome out = run_command(req);
        if (req.format == "text") {
            render_text(std::cout, out.report);
        } else {
            std::cout << out.report.dump(2) << '\n';
        }
        return out.exit_code;
    } catch (const ncgrowth::InternalInconsistency &e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 1;
}
