// Acceptance suite: runs the end-to-end checks the project promises and
// prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "qci/homology.hpp"
#include "qci/variety.hpp"
#include "qci/verify.hpp"

using namespace qci;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& text) {
    std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", number,
                text.c_str());
    if (!ok) ++failures;
}

std::vector<ProjPoint> pts(std::vector<std::vector<uint32_t>> coords) {
    std::vector<ProjPoint> out;
    for (auto& c : coords) out.push_back(ProjPoint{std::move(c)});
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

// Criterion 1: the tensor-variety counterexample, scanned and cross-checked.
void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    CounterexampleParams params; // c=2 a=3 p=7 lambda=(1,1) mu=(1,3)
    CounterexampleReport r = run_counterexample(params);
    double elapsed = seconds_since(start);
    bool ok = r.v_m.points == pts({{1, 1}}) && r.v_bm.points == pts({{1, 6}}) &&
              r.scans_match_predictions && !r.containment_holds &&
              r.iso_verified && r.pass && elapsed < 1.0;
    std::ostringstream text;
    text << "counterexample at (c=2, a=3, p=7): scanned V(M) = {(1,1)}, "
            "V(B(x)M) = {(1,6)}, lines match, containment fails, isomorphism "
            "verified ["
         << elapsed << " s]";
    report(1, ok, text.str());
}

// Criterion 2: the intersection formula fails for the candidate bimodule
// variety V^b(B) = V(B (x) k).
void criterion_2() {
    CounterexampleParams params;
    CorollaryReport r = run_corollary_demo(params);
    bool ok = r.intersection.points == pts({{1, 1}}) &&
              r.v_bm.points == pts({{1, 6}}) && !r.equality_holds && r.pass;
    report(2, ok,
           "corollary demo: V^b(B) * V(M) = {(1,1)} != {(1,6)} = V(B(x)M)");
}

// Criterion 3: exhaustive sharpness of the genericity clause over all
// lambda in P^1(F_7) and mu in (F_7^*)^2.
void criterion_3() {
    auto start = std::chrono::steady_clock::now();
    SharpnessReport r = run_sharpness_scan(2, 3, 7);
    // On full-support lambda the support-restricted clause is literally
    // "the mu_i^3 are not all equal"; re-check that reading directly.
    AlgebraSpec spec = AlgebraSpec::create(2, 3, 7);
    const Fp& F = spec.fp();
    bool literal_ok = true;
    CyclicModule m = cyclic_u_module(spec, {1, 1});
    VarietySet v_m = support_variety(m.module);
    for (uint32_t m1 = 1; m1 < 7 && literal_ok; ++m1)
        for (uint32_t m2 = 1; m2 < 7 && literal_ok; ++m2) {
            DiagonalAutomorphism psi = make_diagonal_automorphism(spec, {m1, m2});
            TensorModule t =
                tensor_bimodule_module(twisted_bimodule(psi, spec), m.module);
            bool noncont = !is_subset(support_variety(t.module), v_m);
            literal_ok = noncont == (F.pow(m1, 3) != F.pow(m2, 3));
        }
    double elapsed = seconds_since(start);
    bool ok = r.cases == 288 && r.pass && literal_ok && elapsed < 30.0;
    std::ostringstream text;
    text << "sharpness: over all " << r.cases
         << " (lambda, mu) pairs non-containment holds exactly when the "
            "mu_i^3 differ on supp(lambda) ["
         << elapsed << " s]";
    report(3, ok, text.str());
}

// Criterion 4: Betti numbers and complexity estimates.
void criterion_4() {
    AlgebraSpec spec = AlgebraSpec::create(2, 3, 7);
    ResolutionPrefix k_res = resolve(simple_module(spec), 8);
    bool betti_ok =
        k_res.betti == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9};
    bool k_complexity = complexity_estimate(k_res.betti).complexity == 2;
    ResolutionPrefix au_res = resolve(cyclic_u_module(spec, {1, 1}).module, 8);
    bool bounded = au_res.betti == std::vector<std::size_t>(9, 1);
    bool au_complexity = complexity_estimate(au_res.betti).complexity == 1;
    report(4, betti_ok && k_complexity && bounded && au_complexity,
           "betti(k) = (1..9) with complexity 2; betti(A u_(1,1)) = (1,...,1) "
           "with complexity 1");
}

// Criterion 5: the rank criterion against an independent Jordan census.
void criterion_5() {
    std::mt19937_64 rng(2024);
    std::size_t cases = 0, agreements = 0;
    for (auto [c, a, p] :
         {std::tuple{2u, 2u, 5u}, {2u, 3u, 7u}, {3u, 2u, 5u}}) {
        AlgebraSpec spec = AlgebraSpec::create(c, a, p);
        const Fp& F = spec.fp();
        std::vector<ProjPoint> points = enumerate_proj_points(F, c);
        for (int i = 0; i < 70; ++i) {
            ModuleRep m = random_module(spec, 18, rng());
            const ProjPoint& pt = points[rng() % points.size()];
            // Independent route: ranks of all powers of U give the block
            // sizes; free means every block has size a.
            Mat u(m.dim, m.dim);
            for (uint32_t g = 0; g < c; ++g)
                if (pt.coords[g] != 0)
                    u = mat_add(F, u, mat_scale(F, pt.coords[g], m.actions[g]));
            std::vector<int64_t> r(a + 2, 0);
            r[0] = int64_t(m.dim);
            Mat power = Mat::identity(m.dim);
            for (uint32_t j = 1; j <= a + 1; ++j) {
                power = mat_mul(F, power, u);
                r[j] = int64_t(rank(F, power));
            }
            bool free = r[a] == 0;
            for (uint32_t s = 1; s < a && free; ++s)
                free = (r[s - 1] - 2 * r[s] + r[s + 1]) == 0;
            ++cases;
            if (point_in_rank_variety(m, pt) == !free) ++agreements;
        }
    }
    std::ostringstream text;
    text << "rank criterion vs Jordan census: " << agreements << "/" << cases
         << " agreements across (2,2,5), (2,3,7), (3,2,5)";
    report(5, cases >= 200 && agreements == cases, text.str());
}

// Criterion 6: the structural property suite, including the seven named
// properties, each with its required case count.
void criterion_6() {
    SuiteReport r = run_property_suite(1);
    const std::vector<std::string> required = {
        "u_lambda_nilpotent",         "direct_sum_variety_union",
        "syzygy_variety_invariance",  "projectivity_detection",
        "tensor_unit_law",            "twist_tensor_equivalence",
        "proof_isomorphism_exhaustive"};
    bool ok = r.all_passed;
    for (const std::string& name : required) {
        bool found = false;
        for (const PropertyResult& p : r.properties)
            if (p.name == name) {
                found = true;
                ok = ok && p.passed && p.cases >= 50;
            }
        ok = ok && found;
    }
    std::ostringstream text;
    text << "property suite: " << r.properties.size()
         << " properties, all passed = " << (r.all_passed ? "true" : "false");
    report(6, ok, text.str());
}

// Criterion 7: byte-identical reports for identical configuration.
std::string run_cli(const std::string& cli, const std::string& args,
                    const std::filesystem::path& outfile) {
    std::string command = "\"" + cli + "\" " + args + " > \"" +
                          outfile.string() + "\" 2>/dev/null";
    int rc = std::system(command.c_str());
    std::ifstream in(outfile, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return std::to_string(rc) + "\n" + buffer.str();
}

void criterion_7() {
    // Library-level determinism first.
    CounterexampleParams params;
    bool lib_ok = run_counterexample(params).to_json().dump(2) ==
                      run_counterexample(params).to_json().dump(2) &&
                  run_property_suite(7).to_json().dump(2) ==
                      run_property_suite(7).to_json().dump(2);
    const char* cli = std::getenv("QCI_CLI");
    if (!cli) {
        report(7, false,
               "determinism: QCI_CLI is not set, cannot exercise the binary");
        return;
    }
    std::filesystem::path dir = std::filesystem::temp_directory_path();
    std::filesystem::path f1 = dir / "qci_determinism_1.json";
    std::filesystem::path f2 = dir / "qci_determinism_2.json";
    const std::vector<std::string> invocations = {
        "counterexample",
        "variety --module k",
        "variety --c 3 --a 2 --p 5 --module cyclic:1,2,3",
        "resolve --module cyclic:1,1 --depth 8",
        "suite --seed 7",
        "algebra --c 3 --a 2 --p 5",
    };
    bool cli_ok = true;
    for (const std::string& args : invocations) {
        std::string first = run_cli(cli, args, f1);
        std::string second = run_cli(cli, args, f2);
        if (first != second || first.empty()) cli_ok = false;
    }
    std::error_code ec;
    std::filesystem::remove(f1, ec);
    std::filesystem::remove(f2, ec);
    report(7, lib_ok && cli_ok,
           "determinism: repeated runs produce byte-identical reports");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
