/**
 * @file jordanip.cpp
 * @brief Command-line front end: build the factory examples, load tensor
 *        files, and run the symmetry / IP / spectrum / lemma / theorem
 *        verifications, emitting deterministic JSON reports.
 *
 * Exit codes: 0 = all checks passed, 1 = a mathematical check failed
 * (the report carries a witness), 2 = usage / IO / parse error or
 * sampler exhaustion (the error report carries a distinct code).
 */

#include "jordanip/curvature.hpp"
#include "jordanip/factory.hpp"
#include "jordanip/jordan.hpp"
#include "jordanip/json_io.hpp"
#include "jordanip/space.hpp"
#include "jordanip/tensor_io.hpp"
#include "jordanip/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace jordanip;
using nlohmann::json;

// ---------------------------------------------------------------- I/O

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed " + what + ": " + e.what());
    }
}

CurvatureTensor load_tensor(const std::string& path) {
    return tensor_from_json(parse_json(read_input(path), "tensor file " + path));
}

TripleFile load_triple(const std::string& path) {
    return triple_from_json(parse_json(read_input(path), "triple file " + path));
}

// --------------------------------------------------------- serializers

json plane_to_json(const PlaneBasis& p) {
    return {{"e1", vector_to_json(p.e1)},
            {"e2", vector_to_json(p.e2)},
            {"h", matrix_to_json(p.h)},
            {"det_h", rational_to_string(p.det_h)},
            {"causal_type", to_string(p.causal_type)}};
}

json invariant_to_json(const JordanInvariant& inv) {
    json factors = json::array();
    for (const auto& f : inv.inv_factors_sq) factors.push_back(poly_to_json(f));
    return {{"inv_factors_sq", factors}, {"rank_seq", inv.rank_seq}};
}

json spectrum_to_json(const SpectrumReport& sp) {
    json eigen = json::array();
    for (const auto& [value, mult] : sp.eigenvalues)
        eigen.push_back({{"value", rational_to_string(value)}, {"multiplicity", mult}});
    return {{"dim", sp.dim},
            {"eigenvalues", eigen},
            {"ell", sp.ell},
            {"pattern_ok", sp.pattern_ok}};
}

/// Every report carries the schema, the artifact version, and a verbatim
/// echo of the run configuration (defaults applied explicitly).
json report_envelope(const std::string& command, const json& config, bool ok,
                     const json& result) {
    return {{"schema", kSchema}, {"version", kVersion}, {"command", command},
            {"config", config}, {"ok", ok},           {"result", result}};
}

void emit(const std::string& out_path, const json& report) {
    write_output(out_path, report.dump(2) + "\n");
}

int finish(const std::string& command, const json& config, bool ok, const json& result,
           const std::string& out_path) {
    emit(out_path, report_envelope(command, config, ok, result));
    return ok ? 0 : 1;
}

// --------------------------------------------------------- run config

struct Options {
    std::string input = "-";
    std::string output = "-";
    std::string triple_path;
    std::uint64_t seed = 42;
    std::size_t samples = 200;
    long bound = 7;
    std::string plane_type = "spacelike";
    bool complex_lines = false;
    bool strict_square_class = false;
};

json config_echo(const Options& o) {
    return {{"input", o.input},
            {"output", o.output},
            {"triple", o.triple_path},
            {"seed", o.seed},
            {"samples", o.samples},
            {"bound", o.bound},
            {"plane_type", o.plane_type},
            {"complex_lines", o.complex_lines},
            {"strict_square_class", o.strict_square_class}};
}

void add_sampling_options(CLI::App* cmd, Options* o) {
    cmd->add_option("--seed", o->seed, "64-bit sampling seed")->capture_default_str();
    cmd->add_option("--samples", o->samples, "number of sampled planes")->capture_default_str();
    cmd->add_option("--bound", o->bound, "integer entry bound for sampled vectors")
        ->capture_default_str();
}

// --------------------------------------------------------- subcommands

int run_build_example(const Options& o, int delta1, int delta2, const std::string& lambda1,
                      const std::string& lambda2, bool reduced, const std::string& triple_out) {
    ExampleSpec spec;
    spec.delta1 = delta1;
    spec.delta2 = delta2;
    spec.lambda1 = parse_rational(lambda1);
    spec.lambda2 = parse_rational(lambda2);
    spec.reduced = reduced;
    FactoryTriple f = build_triple(spec);
    CurvatureTensor t = combine(build_r_phi(f.space, f.triple.phi1, spec.lambda1),
                                build_r_phi(f.space, f.triple.phi2, spec.lambda2));
    write_output(o.output, tensor_to_json(t).dump(2) + "\n");
    if (!triple_out.empty())
        write_output(triple_out,
                     triple_to_json(f.space, f.triple, spec.lambda1, spec.lambda2).dump(2) + "\n");
    return 0;
}

int run_check_symmetries(const Options& o) {
    CurvatureTensor t = load_tensor(o.input);
    SymmetryReport r = validate_symmetries(t);
    json result = {{"symmetries_ok", r.ok}};
    if (!r.ok) {
        result["violated"] = r.violated;
        result["witness"] = r.witness;
    }
    return finish("check-symmetries", config_echo(o), r.ok, result, o.output);
}

int run_ip_check(const Options& o) {
    CurvatureTensor t = load_tensor(o.input);
    CausalType type = causal_type_from_string(o.plane_type);
    std::optional<TripleFile> tf;
    std::optional<ComplexStructure> j;
    if (o.complex_lines) {
        if (type == CausalType::mixed)
            throw std::invalid_argument("ip-check: there are no mixed complex lines");
        if (o.triple_path.empty())
            throw std::invalid_argument("ip-check: --complex-lines needs --triple for J");
        tf = load_triple(o.triple_path);
        j.emplace(t.space(), tf->triple.j);
    }
    IPReport r = ip_check(t, type, o.samples, o.seed, o.complex_lines,
                          j ? &*j : nullptr, o.bound, o.strict_square_class);
    json result = {{"constant", r.constant},
                   {"samples", r.samples},
                   {"invariant", invariant_to_json(r.invariant)},
                   {"strict", {{"mode", r.strict_mode},
                               {"compared", r.strict_compared},
                               {"ok", r.strict_ok}}}};
    if (r.counterexample) {
        result["counterexample"] = {{"first", plane_to_json(r.counterexample->first)},
                                    {"second", plane_to_json(r.counterexample->second)}};
        if (r.counterexample_invariants)
            result["counterexample_invariants"] = {
                {"first", invariant_to_json(r.counterexample_invariants->first)},
                {"second", invariant_to_json(r.counterexample_invariants->second)}};
    }
    return finish("ip-check", config_echo(o), r.constant, result, o.output);
}

int run_rank_profile(const Options& o) {
    CurvatureTensor t = load_tensor(o.input);
    RankProfile r = spacelike_rank_profile(t, o.samples, o.seed, o.bound);
    json result = {{"constant", r.constant}, {"samples", r.samples}};
    if (r.constant) {
        result["rank"] = r.rank_value;
    } else {
        result["witnesses"] = {{"first", plane_to_json(r.witnesses->first)},
                               {"second", plane_to_json(r.witnesses->second)}};
        result["witness_ranks"] = {r.witness_ranks->first, r.witness_ranks->second};
    }
    return finish("rank-profile", config_echo(o), r.constant, result, o.output);
}

int run_jr_spectrum(const Options& o) {
    CurvatureTensor t = load_tensor(o.input);
    if (o.triple_path.empty())
        throw std::invalid_argument("jr-spectrum: --triple is required for J");
    TripleFile tf = load_triple(o.triple_path);
    ComplexStructure j(t.space(), tf.triple.j);
    CausalType type = causal_type_from_string(o.plane_type);
    SplitMix64 seeder(o.seed);
    std::optional<SpectrumReport> first;
    bool constant = true;
    std::size_t samples = 0;
    for (std::size_t s = 0; s < o.samples; ++s) {
        PlaneBasis line = sample_complex_line(t.space(), j, type, seeder.next(), o.bound);
        SpectrumReport sp = jr_spectrum(t, j, line);
        ++samples;
        if (!first) {
            first = sp;
        } else if (sp.eigenvalues != first->eigenvalues) {
            constant = false;
            break;
        }
    }
    bool ok = constant && (!first || first->pattern_ok);
    json result = {{"constant", constant}, {"samples", samples}};
    if (first) result["spectrum"] = spectrum_to_json(*first);
    return finish("jr-spectrum", config_echo(o), ok, result, o.output);
}

int run_verify_lemma(const Options& o) {
    TripleFile tf = load_triple(o.input);
    SplitMix64 seeder(o.seed);
    bool ok = true;
    json failure;
    std::size_t done = 0;
    for (std::size_t s = 0; s < o.samples && ok; ++s) {
        SplitMix64 rng(seeder.next());
        QVector x;
        for (std::size_t attempt = 0;; ++attempt) {
            if (attempt >= kDefaultAttemptLimit)
                throw SamplerExhausted("verify-lemma: no spacelike vector found");
            x = sample_vector(rng, tf.space.dim(), o.bound);
            if (sgn(tf.space.inner(x, x)) > 0) break;
        }
        LemmaReport lr = verify_lemma_orthogonality(tf.space, tf.triple, x);
        ProductReport pr = verify_product_vanishing(tf.space, tf.triple, x);
        ++done;
        if (!lr.ok() || !pr.ok) {
            ok = false;
            failure = {{"x", vector_to_json(x)},
                       {"orthogonal", lr.orthogonal},
                       {"independent", lr.independent},
                       {"failed_pairs", lr.failed_pairs},
                       {"products_vanish", pr.ok}};
            if (!pr.ok) failure["first_nonzero_product"] = pr.first_nonzero;
        }
    }
    json result = {{"samples", done}, {"lemma_ok", ok}};
    if (!ok) result["failure"] = failure;
    return finish("verify-lemma", config_echo(o), ok, result, o.output);
}

int run_verify_theorem5(const Options& o) {
    TripleFile tf = load_triple(o.input);
    ComplexStructure j(tf.space, tf.triple.j);
    SplitMix64 seeder(o.seed);
    bool ok = true;
    std::size_t done = 0;
    json first_report;
    json failure;
    for (std::size_t s = 0; s < o.samples && ok; ++s) {
        PlaneBasis line =
            sample_complex_line(tf.space, j, CausalType::spacelike, seeder.next(), o.bound);
        Theorem5Report r =
            verify_theorem5_blocks(tf.space, tf.triple, tf.lambda1, tf.lambda2, line);
        ++done;
        json checks = json::array();
        for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}});
        json rj = {{"checks", checks},
                   {"rank_m_raw", r.rank_m_raw},
                   {"rank_squared", r.rank_squared}};
        if (s == 0) first_report = rj;
        if (!r.ok()) {
            ok = false;
            failure = {{"line", plane_to_json(line)}, {"report", rj}};
        }
    }
    json result = {{"samples", done}, {"blocks_ok", ok}, {"first_line_report", first_report}};
    if (!ok) result["failure"] = failure;
    return finish("verify-theorem5", config_echo(o), ok, result, o.output);
}

int run_almost_complex(const Options& o) {
    CurvatureTensor t = load_tensor(o.input);
    if (o.triple_path.empty())
        throw std::invalid_argument("almost-complex-check: --triple is required for J");
    TripleFile tf = load_triple(o.triple_path);
    ComplexStructure j(t.space(), tf.triple.j);
    AlmostComplexReport r = almost_complex_check(t, j, o.samples, o.seed, o.bound);
    json result = {{"almost_complex", r.ok}};
    if (!r.ok) result["witness"] = vector_to_json(*r.witness);
    return finish("almost-complex-check", config_echo(o), r.ok, result, o.output);
}

int error_report(const std::string& code, const std::string& message) {
    json report = {{"schema", kSchema},
                   {"version", kVersion},
                   {"error", {{"code", code}, {"message", message}}}};
    std::cout << report.dump(2) << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic construction and verification of IP / almost-complex-IP "
                 "algebraic curvature tensors"};
    app.require_subcommand(1);

    Options o;
    int delta1 = 1, delta2 = 1;
    std::string lambda1 = "2", lambda2 = "3";
    bool reduced = false;
    std::string triple_out;

    auto* build = app.add_subcommand("build-example",
                                     "emit a factory tensor (and optional triple sidecar)");
    build->add_option("--delta1", delta1, "phi1^2 = delta1 * Id (+1, -1, or 0)")
        ->capture_default_str();
    build->add_option("--delta2", delta2, "phi2^2 = delta2 * Id (+1, -1, or 0)")
        ->capture_default_str();
    build->add_option("--lambda1", lambda1, "coefficient of R_phi1 (rational)")
        ->capture_default_str();
    build->add_option("--lambda2", lambda2, "coefficient of R_phi2 (rational)")
        ->capture_default_str();
    build->add_flag("--reduced", reduced, "8-dimensional Riemannian variant (deltas +1,+1)");
    build->add_option("-o,--output", o.output, "tensor output path ('-' for stdout)")
        ->capture_default_str();
    build->add_option("--triple-out", triple_out, "triple sidecar output path");

    auto add_verifier = [&](const std::string& name, const std::string& desc, bool with_input,
                            bool with_sampling) {
        auto* cmd = app.add_subcommand(name, desc);
        if (with_input)
            cmd->add_option("input", o.input, "input file ('-' for stdin)")->capture_default_str();
        cmd->add_option("-o,--output", o.output, "report output path ('-' for stdout)")
            ->capture_default_str();
        if (with_sampling) add_sampling_options(cmd, &o);
        return cmd;
    };

    auto* sym = add_verifier("check-symmetries",
                             "validate the three curvature symmetries exhaustively", true, false);

    auto* ip = add_verifier("ip-check", "Jordan-form constancy over sampled planes", true, true);
    ip->add_option("--plane-type", o.plane_type, "spacelike, timelike, or mixed")
        ->capture_default_str();
    ip->add_flag("--complex-lines", o.complex_lines, "sample only complex lines {x, Jx}");
    ip->add_option("--triple", o.triple_path, "triple sidecar (supplies J)");
    ip->add_flag("--strict-square-class", o.strict_square_class,
                 "also compare full invariant factors across square-class-compatible planes");

    auto* rk = add_verifier("rank-profile", "rank constancy over sampled spacelike planes", true,
                            true);

    auto* jr = add_verifier("jr-spectrum", "spectrum of J R(pi) over sampled complex lines", true,
                            true);
    jr->add_option("--plane-type", o.plane_type, "spacelike or timelike")->capture_default_str();
    jr->add_option("--triple", o.triple_path, "triple sidecar (supplies J)");

    auto* lem = add_verifier("verify-lemma",
                             "orthogonality, independence, and product vanishing for a triple",
                             true, true);
    auto* th5 = add_verifier("verify-theorem5", "block structure of R(pi)^2 on complex lines",
                             true, true);

    auto* ac = add_verifier("almost-complex-check", "J R(x,Jx) = R(x,Jx) J", true, true);
    ac->add_option("--triple", o.triple_path, "triple sidecar (supplies J)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed())
            return run_build_example(o, delta1, delta2, lambda1, lambda2, reduced, triple_out);
        if (sym->parsed()) return run_check_symmetries(o);
        if (ip->parsed()) return run_ip_check(o);
        if (rk->parsed()) return run_rank_profile(o);
        if (jr->parsed()) return run_jr_spectrum(o);
        if (lem->parsed()) return run_verify_lemma(o);
        if (th5->parsed()) return run_verify_theorem5(o);
        if (ac->parsed()) return run_almost_complex(o);
        return error_report("usage", "no subcommand");
    } catch (const jordanip::SamplerExhausted& e) {
        return error_report("sampler-exhausted", e.what());
    } catch (const jordanip::SpectrumError& e) {
        emit("-", {{"schema", kSchema},
                   {"version", kVersion},
                   {"error", {{"code", "math-check-failed"}, {"message", e.what()}}}});
        return 1;
    } catch (const std::invalid_argument& e) {
        return error_report("parse", e.what());
    } catch (const std::exception& e) {
        return error_report("io", e.what());
    }
}
