#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qci/homology.hpp"
#include "qci/module.hpp"
#include "qci/util.hpp"
#include "qci/variety.hpp"
#include "qci/verify.hpp"

namespace {

using nlohmann::json;

struct CommonOptions {
    uint32_t c = 2;
    uint32_t a = 3;
    uint32_t p = 7;
    int64_t q_override = -1;
    std::string output;
    std::string format = "json";
};

std::vector<uint32_t> parse_coords(const std::string& text,
                                   const std::string& flag) {
    std::vector<uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            unsigned long v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(uint32_t(v));
        } catch (const std::exception&) {
            throw qci::PreconditionError(flag + " expects comma separated " +
                                         "nonnegative integers, got '" + text +
                                         "'");
        }
    }
    if (out.empty())
        throw qci::PreconditionError(flag + " must not be empty");
    return out;
}

qci::AlgebraSpec make_spec(const CommonOptions& opt) {
    std::optional<uint32_t> q;
    if (opt.q_override >= 0) q = uint32_t(opt.q_override);
    return qci::AlgebraSpec::create(opt.c, opt.a, opt.p, q);
}

/// Designator grammar: k | free:<rank> | cyclic:<l1,l2,...> | file:<path>.
qci::ModuleRep parse_module(const qci::AlgebraSpec& spec,
                            const std::string& designator) {
    std::string kind = designator;
    std::string arg;
    if (auto colon = designator.find(':'); colon != std::string::npos) {
        kind = designator.substr(0, colon);
        arg = designator.substr(colon + 1);
    }
    if (kind == "k") {
        if (!arg.empty())
            throw qci::BadDesignatorError("designator 'k' takes no argument");
        return qci::simple_module(spec);
    }
    if (kind == "free") {
        try {
            size_t used = 0;
            unsigned long rank = std::stoul(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
            return qci::free_module(spec, rank);
        } catch (const qci::Error&) {
            throw;
        } catch (const std::exception&) {
            throw qci::BadDesignatorError("free:<rank> needs an integer rank, got '" +
                                          arg + "'");
        }
    }
    if (kind == "cyclic") {
        std::vector<uint32_t> lambda = parse_coords(arg, "cyclic:<lambda>");
        if (lambda.size() != spec.c)
            throw qci::BadDesignatorError("cyclic:<lambda> needs c = " +
                                          std::to_string(spec.c) +
                                          " coordinates");
        return qci::cyclic_u_module(spec, lambda).module;
    }
    if (kind == "file") {
        std::ifstream in(arg);
        if (!in)
            throw qci::BadDesignatorError("cannot open module file '" + arg + "'");
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw qci::BadDesignatorError("module file '" + arg +
                                          "' is not valid: " + e.what());
        }
        qci::ModuleRep m = qci::ModuleRep::from_json(j);
        if (!(m.spec == spec))
            throw qci::SpecMismatchError(
                "module file spec disagrees with the requested algebra");
        return m;
    }
    throw qci::BadDesignatorError(
        "unknown module designator '" + designator +
        "'; expected k, free:<rank>, cyclic:<lambda> or file:<path>");
}

std::string render_points(const json& points) {
    std::string out;
    for (const auto& pt : points) {
        if (!out.empty()) out += " ";
        out += "(";
        for (std::size_t i = 0; i < pt.size(); ++i) {
            if (i) out += ",";
            out += pt[i].dump();
        }
        out += ")";
    }
    return out.empty() ? "-" : out;
}

void render_table(std::ostream& os, const json& j, const std::string& prefix) {
    for (const auto& [key, value] : j.items()) {
        std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object() && value.contains("points")) {
            os << name << ": points " << render_points(value["points"])
               << (value.value("trivial", false) ? " (trivial)" : "") << "\n";
        } else if (value.is_object()) {
            render_table(os, value, name);
        } else if (value.is_array() && key == "properties") {
            for (const auto& prop : value)
                os << name << "." << prop["name"].get<std::string>() << ": "
                   << (prop["passed"].get<bool>() ? "pass" : "FAIL") << " ("
                   << prop["cases"] << " cases)\n";
        } else {
            os << name << ": " << value.dump() << "\n";
        }
    }
}

void emit(const CommonOptions& opt, const json& j) {
    std::ostringstream body;
    if (opt.format == "table")
        render_table(body, j, "");
    else
        body << j.dump(2) << "\n";
    if (opt.output.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out)
            throw qci::PreconditionError("cannot write output file '" +
                                         opt.output + "'");
        out << body.str();
    }
}

void add_output_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--output", opt.output, "write the report to a file");
    cmd->add_option("--format", opt.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
}

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--c", opt.c, "number of generators (>= 2)");
    cmd->add_option("--a", opt.a, "truncation exponent (>= 2)");
    cmd->add_option("--p", opt.p, "prime modulus");
    cmd->add_option("--q", opt.q_override,
                    "override the root of unity q (validated)");
    add_output_options(cmd, opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact kernel for truncated q-commutative algebras: modules, "
        "resolutions, rank variety scans and the tensor-variety "
        "counterexample workflow"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string module_designator = "k";
    std::string lambda_text = "1,1";
    std::string mu_text = "1,3";
    std::size_t depth = 10;
    uint64_t seed = 1;
    std::size_t cases_scale = 0;
    bool inject_fault = false;

    CLI::App* cmd_algebra = app.add_subcommand(
        "algebra", "print the algebra spec: dimension, a_bar and q");
    add_common(cmd_algebra, opt);

    CLI::App* cmd_variety = app.add_subcommand(
        "variety", "scan the rank variety of a module");
    add_common(cmd_variety, opt);
    cmd_variety->add_option("--module", module_designator,
                            "k | free:<rank> | cyclic:<lambda> | file:<path>");

    CLI::App* cmd_resolve = app.add_subcommand(
        "resolve", "Betti numbers and complexity estimate of a module");
    add_common(cmd_resolve, opt);
    cmd_resolve->add_option("--module", module_designator,
                            "k | free:<rank> | cyclic:<lambda> | file:<path>");
    cmd_resolve->add_option("--depth", depth, "resolution depth (default 10)");

    CLI::App* cmd_counter = app.add_subcommand(
        "counterexample",
        "build M = A u_lambda and the twisted bimodule B, scan both "
        "varieties and check that V(B (x) M) escapes V(M); the defaults "
        "c=2 a=3 p=7 lambda=1,1 mu=1,3 are the smallest setup with a > 2 "
        "and a twist whose component powers differ");
    add_common(cmd_counter, opt);
    cmd_counter->add_option("--lambda", lambda_text,
                            "comma separated coordinates of lambda");
    cmd_counter->add_option("--mu", mu_text,
                            "comma separated coordinates of mu (all nonzero)");

    CLI::App* cmd_suite = app.add_subcommand(
        "suite", "run the structural property suite");
    add_output_options(cmd_suite, opt);
    cmd_suite->add_option("--seed", seed, "suite seed (default 1)");
    cmd_suite->add_option("--cases", cases_scale,
                          "raise randomized properties to this many cases");
    cmd_suite->add_flag("--inject-fault", inject_fault,
                        "mutate the freeness criterion to prove the suite "
                        "detects it");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_algebra->parsed()) {
            qci::AlgebraSpec spec = make_spec(opt);
            json j = qci::spec_to_json(spec);
            j["dim"] = spec.dim;
            emit(opt, j);
            return 0;
        }
        if (cmd_variety->parsed()) {
            qci::AlgebraSpec spec = make_spec(opt);
            qci::ModuleRep m = parse_module(spec, module_designator);
            json j = qci::support_variety(m).to_json();
            j["module"] = module_designator;
            j["note"] = qci::kRationalScanNote;
            emit(opt, j);
            return 0;
        }
        if (cmd_resolve->parsed()) {
            qci::AlgebraSpec spec = make_spec(opt);
            qci::ModuleRep m = parse_module(spec, module_designator);
            qci::ResolutionPrefix res = qci::resolve(m, depth);
            json j = qci::resolution_report(res);
            j["depth"] = depth;
            j["module"] = module_designator;
            emit(opt, j);
            return 0;
        }
        if (cmd_counter->parsed()) {
            qci::CounterexampleParams params;
            params.c = opt.c;
            params.a = opt.a;
            params.p = opt.p;
            if (opt.q_override >= 0) params.q_override = uint32_t(opt.q_override);
            params.lambda = parse_coords(lambda_text, "--lambda");
            params.mu = parse_coords(mu_text, "--mu");
            qci::CounterexampleReport main_report = qci::run_counterexample(params);
            qci::CorollaryReport corollary = qci::run_corollary_demo(params);
            bool pass = main_report.pass && corollary.pass;
            json j{{"corollary", corollary.to_json()},
                   {"counterexample", main_report.to_json()},
                   {"pass", pass}};
            emit(opt, j);
            return pass ? 0 : 1;
        }
        if (cmd_suite->parsed()) {
            qci::SuiteReport report = qci::run_property_suite(
                seed, cases_scale,
                inject_fault ? qci::Fault::rank_criterion_off_by_one
                             : qci::Fault::none);
            emit(opt, report.to_json());
            return report.all_passed ? 0 : 1;
        }
    } catch (const qci::PreconditionError& e) {
        json j{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
        std::cout << j.dump(2) << "\n";
        return 2;
    } catch (const qci::Error& e) {
        json j{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
        std::cout << j.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json j{{"error", {{"kind", "internal"}, {"message", e.what()}}}};
        std::cout << j.dump(2) << "\n";
        return 1;
    }
    return 0;
}
