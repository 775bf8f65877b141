// Command-line front end: file-based operations on spaces, vectors,
// matrices and kernels, plus the named verification suites.
//
// Exit codes: 0 success / all checks passed; 1 a verification check failed
// (witness printed); 2 input or usage error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcoh/bang.hpp"
#include "pcoh/errors.hpp"
#include "pcoh/io.hpp"
#include "pcoh/kernel.hpp"
#include "pcoh/limits.hpp"
#include "pcoh/morphism.hpp"
#include "pcoh/pcs.hpp"
#include "pcoh/suite.hpp"
#include "pcoh/tensor.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        pcoh::write_text_file(out_path, text);
}

void add_suite_flags(CLI::App* sub, pcoh::SuiteOptions& o, std::string& report_path) {
    sub->add_option("--seed", o.seed, "random seed for instance generation");
    sub->add_option("--max-dim", o.max_dim, "largest web size for random spaces");
    sub->add_option("--truncate", o.truncate, "largest exponential degree");
    sub->add_option("--grid-denominator", o.grid_denominator, "rational grid denominator");
    sub->add_option("--instances", o.instances, "instance count (0 = suite default)");
    sub->add_option("--report", report_path, "also write the report to this file");
}

int run_named_suite(const std::string& name, const pcoh::SuiteOptions& opts,
                    const std::string& report_path) {
    pcoh::SuiteReport rep = pcoh::run_suite(name, opts);
    std::string text = pcoh::render_report(rep);
    std::cout << text;
    if (!report_path.empty()) pcoh::write_text_file(report_path, text);
    return rep.all_passed() ? 0 : 1;
}

std::string stream_text(const pcoh::StreamReport& sr) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::string out;
    out += "stream: alphabet=" + std::to_string(sr.alphabet) +
           " depth=" + std::to_string(sr.depth) + "\n";
    out += "web-size: " + std::to_string(sr.web_size) + "\n";
    out += "leaves: " + std::to_string(sr.leaves) + "\n";
    out += "equalizer-dim: " + std::to_string(sr.equalizer_dim) + "\n";
    out += "dims-match: " + std::string(yn(sr.dims_match)) + "\n";
    out += "leaf-iso: " + std::string(yn(sr.iso_ok)) + "\n";
    out += "norm-preserved: " + std::string(yn(sr.norm_ok)) + "\n";
    out += "result: " + std::string(sr.ok() ? "PASS" : "FAIL") + "\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for probabilistic coherence spaces"};
    app.require_subcommand(1);

    std::string in_a, in_b, out_path, report_path;
    std::vector<std::string> in_many;
    pcoh::SuiteOptions opts;
    int degree = 4;
    int alphabet = 2, depth = 2;
    std::string suite_name;

    CLI::App* dual = app.add_subcommand("dual", "polar of a space");
    dual->add_option("space", in_a, "input .pcs file")->required();
    dual->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI::App* closure = app.add_subcommand(
        "closure", "least space whose ball contains the given generators");
    closure->add_option("generators", in_a, "polytope file with V rows")->required();
    closure->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI::App* norm = app.add_subcommand("norm", "norm of a vector in a space");
    norm->add_option("vector", in_a, "input .vec file")->required();
    norm->add_option("space", in_b, "input .pcs file")->required();

    CLI::App* tensor_cmd = app.add_subcommand("tensor", "tensor product of two spaces");
    tensor_cmd->add_option("left", in_a, "input .pcs file")->required();
    tensor_cmd->add_option("right", in_b, "input .pcs file")->required();
    tensor_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI::App* limpl_cmd = app.add_subcommand("limpl", "linear function space of two spaces");
    limpl_cmd->add_option("dom", in_a, "input .pcs file")->required();
    limpl_cmd->add_option("cod", in_b, "input .pcs file")->required();
    limpl_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI::App* with_cmd = app.add_subcommand("with", "cartesian product of spaces");
    with_cmd->add_option("spaces", in_many, "two or more .pcs files");
    with_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI::App* bang = app.add_subcommand("bang", "exponential of a space at a degree");
    bang->add_option("space", in_a, "input .pcs file")->required();
    bang->add_option("--truncate", degree, "multiset degree bound (default 4)");
    bang->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI::App* coherence = app.add_subcommand("coherence", "run the monoidal coherence suite");
    add_suite_flags(coherence, opts, report_path);

    CLI::App* stability = app.add_subcommand("stability-check",
                                             "run the iterated-difference suite");
    add_suite_flags(stability, opts, report_path);

    CLI::App* stream = app.add_subcommand("stream", "tree-cut shift equalizer demo");
    stream->add_option("--alphabet", alphabet, "branching factor (default 2)");
    stream->add_option("--depth", depth, "tree depth (default 2)");
    stream->add_option("--seed", opts.seed, "random seed for sample vectors");
    stream->add_option("--report", report_path, "also write the report to this file");

    CLI::App* kernel = app.add_subcommand("kernel", "substochastic kernel operations");
    kernel->require_subcommand(1);
    CLI::App* kcompose = kernel->add_subcommand("compose", "compose two kernels");
    kcompose->add_option("first", in_a, "input .kernel file")->required();
    kcompose->add_option("second", in_b, "input .kernel file")->required();
    kcompose->add_option("-o,--out", out_path, "output file (default stdout)");
    CLI::App* kfrom = kernel->add_subcommand("from-matrix", "kernel from a matrix file");
    kfrom->add_option("matrix", in_a, "input .matrix file")->required();
    kfrom->add_option("-o,--out", out_path, "output file (default stdout)");
    CLI::App* kto = kernel->add_subcommand("to-matrix", "matrix files from a kernel");
    kto->add_option("kernel", in_a, "input .kernel file")->required();
    kto->add_option("-o,--out", out_path, "output .matrix path (endpoint .pcs files written next to it)")
        ->required();

    CLI::App* suite = app.add_subcommand("suite", "run a named verification suite");
    suite->add_option("name", suite_name, "one of the named suites")->required();
    add_suite_flags(suite, opts, report_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dual->parsed()) {
            emit(pcoh::pcs_to_text(pcoh::load_pcs(in_a).polar()), out_path);
        } else if (closure->parsed()) {
            pcoh::Polytope p = pcoh::polytope_from_text(pcoh::read_text_file(in_a));
            if (!p.has_vrep())
                throw pcoh::ParseError("closure input needs V rows (generators)");
            emit(pcoh::pcs_to_text(pcoh::biorth_closure(p.web(), p.vrep())), out_path);
        } else if (norm->parsed()) {
            pcoh::RatVec v = pcoh::load_vec(in_a);
            pcoh::Pcs x = pcoh::load_pcs(in_b);
            if (!v.is_zero() && v.max_index() >= x.dim())
                throw pcoh::WebMismatchError("vector is longer than the web");
            std::cout << pcoh::rat_str(x.norm(v)) << "\n";
        } else if (tensor_cmd->parsed()) {
            emit(pcoh::pcs_to_text(pcoh::tensor(pcoh::load_pcs(in_a), pcoh::load_pcs(in_b))),
                 out_path);
        } else if (limpl_cmd->parsed()) {
            emit(pcoh::pcs_to_text(pcoh::limpl(pcoh::load_pcs(in_a), pcoh::load_pcs(in_b))),
                 out_path);
        } else if (with_cmd->parsed()) {
            if (in_many.size() < 2)
                throw pcoh::ParseError("with needs at least two spaces");
            std::vector<pcoh::Pcs> xs;
            for (const auto& p : in_many) xs.push_back(pcoh::load_pcs(p));
            emit(pcoh::pcs_to_text(pcoh::with_product(xs)), out_path);
        } else if (bang->parsed()) {
            pcoh::BangSpace bs(pcoh::load_pcs(in_a), degree);
            emit(pcoh::pcs_to_text(bs.object()), out_path);
        } else if (coherence->parsed()) {
            return run_named_suite("coherence", opts, report_path);
        } else if (stability->parsed()) {
            return run_named_suite("stability", opts, report_path);
        } else if (stream->parsed()) {
            pcoh::StreamReport sr = pcoh::stream_equalizer_demo(alphabet, depth, opts.seed);
            std::string text = stream_text(sr);
            std::cout << text;
            if (!report_path.empty()) pcoh::write_text_file(report_path, text);
            return sr.ok() ? 0 : 1;
        } else if (kernel->parsed()) {
            if (kcompose->parsed()) {
                pcoh::Kernel k = pcoh::load_kernel(in_a);
                pcoh::Kernel l = pcoh::load_kernel(in_b);
                emit(pcoh::kernel_to_text(pcoh::kernel_compose(k, l)), out_path);
            } else if (kfrom->parsed()) {
                emit(pcoh::kernel_to_text(pcoh::kern_of_lin(pcoh::load_matrix(in_a))),
                     out_path);
            } else if (kto->parsed()) {
                pcoh::Kernel k = pcoh::load_kernel(in_a);
                pcoh::MorphMatrix t = pcoh::lin_of_kern(k);
                std::filesystem::path mp(out_path);
                std::string stem = mp.stem().string();
                std::string dom_name = stem + ".dom.pcs";
                std::string cod_name = stem + ".cod.pcs";
                pcoh::write_text_file((mp.parent_path() / dom_name).string(),
                                      pcoh::pcs_to_text(t.dom()));
                pcoh::write_text_file((mp.parent_path() / cod_name).string(),
                                      pcoh::pcs_to_text(t.cod()));
                pcoh::write_text_file(out_path,
                                      pcoh::matrix_to_text(t, dom_name, cod_name));
            }
        } else if (suite->parsed()) {
            const auto names = pcoh::suite_names();
            bool known = false;
            for (const auto& n : names) known = known || n == suite_name;
            if (!known) {
                std::string all;
                for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
                throw pcoh::ParseError("unknown suite '" + suite_name + "'; known: " + all);
            }
            return run_named_suite(suite_name, opts, report_path);
        }
    } catch (const pcoh::PcohError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
