#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qci/homology.hpp"
#include "qci/variety.hpp"

using namespace qci;

namespace {

const AlgebraSpec& spec225() {
    static AlgebraSpec s = AlgebraSpec::create(2, 2, 5);
    return s;
}
const AlgebraSpec& spec237() {
    static AlgebraSpec s = AlgebraSpec::create(2, 3, 7);
    return s;
}
const AlgebraSpec& spec325() {
    static AlgebraSpec s = AlgebraSpec::create(3, 2, 5);
    return s;
}

// Independent freeness oracle: the full Jordan block census from the
// ranks of all powers of U. Free over k[t]/(t^a) means every block has
// size exactly a.
bool free_by_block_census(const ModuleRep& m, const ProjPoint& pt) {
    const Fp& F = m.spec.fp();
    Mat u(m.dim, m.dim);
    for (uint32_t i = 0; i < m.spec.c; ++i)
        if (pt.coords[i] != 0)
            u = mat_add(F, u, mat_scale(F, pt.coords[i], m.actions[i]));
    std::vector<int64_t> r(m.spec.a + 2, 0);
    r[0] = int64_t(m.dim);
    Mat power = Mat::identity(m.dim);
    for (uint32_t j = 1; j <= m.spec.a + 1; ++j) {
        power = mat_mul(F, power, u);
        r[j] = int64_t(rank(F, power));
    }
    // U^a must vanish outright for the restriction to make sense.
    REQUIRE(r[m.spec.a] == 0);
    for (uint32_t s = 1; s < m.spec.a; ++s) {
        int64_t blocks_of_size_s = r[s - 1] - 2 * r[s] + r[s + 1];
        REQUIRE(blocks_of_size_s >= 0);
        if (blocks_of_size_s != 0) return false;
    }
    return true;
}

VarietySet points_set(const AlgebraSpec& spec,
                      std::vector<std::vector<uint32_t>> pts) {
    VarietySet v{spec.c, spec.p(), {}, true};
    for (auto& c : pts) v.points.push_back(ProjPoint{std::move(c)});
    return v;
}

} // namespace

TEST_CASE("point normalization and lines") {
    Fp F(5);
    CHECK(normalize_point(F, {2, 4}).coords == std::vector<uint32_t>{1, 2});
    CHECK(normalize_point(F, {0, 3}).coords == std::vector<uint32_t>{0, 1});
    CHECK_THROWS_AS(normalize_point(F, {0, 0}), ZeroLambdaError);
    CHECK(line_of(F, ProjPoint{{2, 4}}).points ==
          std::vector<ProjPoint>{ProjPoint{{1, 2}}});
    CHECK(line_of(F, ProjPoint{{1, 1}}).points ==
          std::vector<ProjPoint>{ProjPoint{{1, 1}}});
}

TEST_CASE("projective point enumeration is lexicographic and complete") {
    Fp F7(7);
    std::vector<ProjPoint> p1 = enumerate_proj_points(F7, 2);
    CHECK(p1.size() == 8);
    CHECK(p1.front().coords == std::vector<uint32_t>{0, 1});
    CHECK(p1.back().coords == std::vector<uint32_t>{1, 6});
    for (std::size_t i = 1; i < p1.size(); ++i) CHECK(p1[i - 1] < p1[i]);
    CHECK(enumerate_proj_points(Fp(5), 3).size() == 31); // (5^3-1)/(5-1)
}

TEST_CASE("componentwise power map") {
    Fp F7(7);
    CHECK(power_map(F7, ProjPoint{{1, 1}}, 3).coords ==
          std::vector<uint32_t>{1, 1});
    CHECK(power_map(F7, ProjPoint{{1, 3}}, 3).coords ==
          std::vector<uint32_t>{1, 6});
    CHECK(power_map(F7, ProjPoint{{0, 1}}, 2).coords ==
          std::vector<uint32_t>{0, 1});
    // Renormalization after powering.
    Fp F5(5);
    CHECK(power_map(F5, ProjPoint{{2, 1}}, 2).coords ==
          std::vector<uint32_t>{1, 4});
}

TEST_CASE("rank criterion on the named modules") {
    const AlgebraSpec& spec = spec225();
    ModuleRep f = free_module(spec, 1);
    ModuleRep k = simple_module(spec);
    ModuleRep au = cyclic_u_module(spec, {1, 1}).module;
    for (const ProjPoint& pt : enumerate_proj_points(spec.fp(), 2)) {
        CHECK_FALSE(point_in_rank_variety(f, pt));
        CHECK(point_in_rank_variety(k, pt));
    }
    CHECK(point_in_rank_variety(au, ProjPoint{{1, 1}}));
    CHECK_FALSE(point_in_rank_variety(au, ProjPoint{{1, 2}}));
}

TEST_CASE("rank criterion agrees with the Jordan block census") {
    std::mt19937_64 rng(29);
    std::size_t cases = 0;
    for (const AlgebraSpec* spec : {&spec225(), &spec237(), &spec325()}) {
        std::vector<ProjPoint> pts = enumerate_proj_points(spec->fp(), spec->c);
        for (int i = 0; i < 70; ++i) {
            ModuleRep m = random_module(*spec, 18, rng());
            const ProjPoint& pt = pts[rng() % pts.size()];
            CHECK(point_in_rank_variety(m, pt) == !free_by_block_census(m, pt));
            ++cases;
        }
    }
    CHECK(cases >= 200);
}

TEST_CASE("support variety golden values") {
    // The free module has the trivial variety.
    VarietySet vf = support_variety(free_module(spec237(), 1));
    CHECK(vf.points.empty());
    CHECK(vf.trivial());
    CHECK(vf.contains_origin);
    // The zero module is the only module without even the origin.
    CHECK_FALSE(support_variety(zero_module(spec237())).contains_origin);

    // k restricts non-freely along every direction; the scan then pushes
    // all 8 rational directions through the cube map, whose image has the
    // 4 points below.
    VarietySet vk = support_variety(simple_module(spec237()));
    CHECK(vk == points_set(spec237(), {{0, 1}, {1, 0}, {1, 1}, {1, 6}}));

    // The cyclic module is exactly one line.
    VarietySet vau = support_variety(cyclic_u_module(spec237(), {1, 1}).module);
    CHECK(vau == points_set(spec237(), {{1, 1}}));
}

TEST_CASE("set operations") {
    const AlgebraSpec& spec = spec237();
    VarietySet a = points_set(spec, {{1, 1}});
    VarietySet b = points_set(spec, {{1, 6}});
    VarietySet full = support_variety(simple_module(spec));
    CHECK(is_subset(a, a));
    CHECK_FALSE(is_subset(a, b));
    CHECK(is_subset(a, full));
    CHECK(intersect(full, a) == a);
    CHECK(set_union(a, b).points.size() == 2);
    VarietySet other{3, 7, {}, true};
    CHECK_THROWS_AS(is_subset(a, other), AmbientMismatchError);
    VarietySet otherp{2, 5, {}, true};
    CHECK_THROWS_AS(intersect(a, otherp), AmbientMismatchError);
}

TEST_CASE("projectivity detection through the variety") {
    std::mt19937_64 rng(37);
    ModuleRep f = free_module(spec225(), 1);
    CHECK(support_variety(f).trivial());
    CHECK_FALSE(support_variety(simple_module(spec225())).trivial());
    for (int i = 0; i < 50; ++i) {
        const AlgebraSpec& spec = i % 2 ? spec225() : spec237();
        ModuleRep m = random_module(spec, 16, rng());
        CHECK(support_variety(m).trivial() == is_projective(m));
    }
}

TEST_CASE("direct sums take unions of varieties") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        const AlgebraSpec& spec = i % 3 ? spec225() : spec325();
        ModuleRep m = random_module(spec, 12, rng());
        ModuleRep n = random_module(spec, 12, rng());
        CHECK(support_variety(direct_sum(m, n)) ==
              set_union(support_variety(m), support_variety(n)));
    }
}

TEST_CASE("syzygies preserve the variety") {
    std::mt19937_64 rng(43);
    int done = 0;
    while (done < 30) {
        const AlgebraSpec& spec = done % 2 ? spec225() : spec237();
        ModuleRep m = random_module(spec, 14, rng());
        ModuleRep omega = syzygy(m);
        if (omega.dim == 0) continue;
        CHECK(support_variety(omega).points == support_variety(m).points);
        ++done;
    }
}

TEST_CASE("twist transport moves the line by the inverse twist") {
    const AlgebraSpec& spec = spec237();
    const Fp& F = spec.fp();
    for (const ProjPoint& lambda : enumerate_proj_points(F, 2)) {
        CyclicModule m = cyclic_u_module(spec, lambda.coords);
        for (uint32_t m1 = 1; m1 < 7; ++m1)
            for (uint32_t m2 = 1; m2 < 7; ++m2) {
                DiagonalAutomorphism psi =
                    make_diagonal_automorphism(spec, {m1, m2});
                std::vector<uint32_t> mil = {F.mul(F.inv(m1), lambda.coords[0]),
                                             F.mul(F.inv(m2), lambda.coords[1])};
                CHECK(support_variety(twist(psi, m.module)) ==
                      line_of(F, power_map(F, normalize_point(F, mil), 3)));
            }
    }
}

TEST_CASE("variety dimension matches complexity") {
    // Lines have complexity 1, the full variety has complexity c.
    ResolutionPrefix k_res = resolve(simple_module(spec237()), 8);
    CHECK(complexity_estimate(k_res.betti).complexity == 2);
    ResolutionPrefix k3_res = resolve(simple_module(spec325()), 8);
    CHECK(complexity_estimate(k3_res.betti).complexity == 3);
    ResolutionPrefix au_res =
        resolve(cyclic_u_module(spec237(), {1, 1}).module, 8);
    CHECK(complexity_estimate(au_res.betti).complexity == 1);
}

TEST_CASE("variety JSON schema") {
    VarietySet v = support_variety(cyclic_u_module(spec237(), {1, 1}).module);
    nlohmann::json j = v.to_json();
    CHECK(j["ambient"]["c"] == 2);
    CHECK(j["ambient"]["p"] == 7);
    CHECK(j["points"] == nlohmann::json({{1, 1}}));
    CHECK(j["trivial"] == false);
    CHECK(support_variety(free_module(spec237(), 1)).to_json()["trivial"] ==
          true);
}
