#include <doctest.h>

#include "hrnflow/cosheaf.hpp"

using namespace hrnflow;

namespace {

MarginProfile example_profile() { return MarginProfile({{0, 6}, {2, 0}, {0, 0}}); }
MarginProfile sufficient_profile() { return MarginProfile({{0, 0}, {0, 0}, {0, 0}}); }

} // namespace

TEST_CASE("cofiltered cover") {
    const CofilteredCover c = build_cover(3);
    CHECK(c.set(0) == IndexSet{1, 2, 3});
    CHECK(c.set(1) == IndexSet{1, 2, 3});
    CHECK(c.set(2) == IndexSet{2, 3});
    CHECK(c.set(3) == IndexSet{3});
    CHECK_FALSE(c.contains(3, 2));
    CHECK(c.contains(2, 3));

    const CofilteredCover one = build_cover(1);
    CHECK(one.set(0) == IndexSet{1});
    CHECK(one.set(1) == IndexSet{1});
    CHECK_THROWS_AS(build_cover(0), DomainError);
}

TEST_CASE("precosheaf values") {
    const auto p = example_profile();
    CHECK(evaluate_precosheaf(SheafKind::Error, p, {2, 3}) == 2);
    CHECK(evaluate_precosheaf(SheafKind::Fix, p, {2, 3}) == 0);
    CHECK(evaluate_precosheaf(SheafKind::Fix, p, {1, 2, 3}) == 6);
    CHECK(evaluate_precosheaf(SheafKind::Error, p, {}) == 0);
    CHECK(evaluate_precosheaf(SheafKind::Fix, p, {}) == 0);
}

TEST_CASE("chain data and homology") {
    const auto p = example_profile();
    const auto cover = build_cover(3);
    const ChainData err = cech_chain_data(SheafKind::Error, p, cover);
    CHECK(err.chain_dims == std::vector<Dim>{0, 0, 2, 0});
    CHECK(cech_homology_dims(err) == std::vector<Dim>{0, 0, 2, 0});

    const ChainData fix = cech_chain_data(SheafKind::Fix, p, cover);
    CHECK(fix.chain_dims == std::vector<Dim>{6, 6, 0, 0});
    CHECK(fix.boundary_ranks[1] == 6);
    CHECK(cech_homology_dims(fix) == std::vector<Dim>{0, 0, 0, 0});

    const ChainData zero = cech_chain_data(SheafKind::Error, sufficient_profile(), cover);
    CHECK(zero.chain_dims == std::vector<Dim>{0, 0, 0, 0});
    CHECK(cech_homology_dims(zero) == std::vector<Dim>{0, 0, 0, 0});

    CHECK_THROWS_AS(cech_chain_data(SheafKind::Error, p, build_cover(2)), DomainError);
}

TEST_CASE("consecutive boundaries compose to zero") {
    // Equal deficits everywhere would give full rank on every boundary.
    const MarginProfile flat({{2, 0}, {2, 0}, {2, 0}, {2, 0}});
    const ChainData d = cech_chain_data(SheafKind::Error, flat, build_cover(4));
    CHECK(d.chain_dims == std::vector<Dim>{2, 2, 2, 2, 2});
    for (std::size_t k = 1; k < d.boundary_ranks.size(); ++k) {
        CHECK(d.boundary_ranks[k] + d.boundary_ranks[k - 1] <= d.chain_dims[k - 1]);
    }
}

TEST_CASE("cosheaf gluing") {
    const auto zero = sufficient_profile();
    CHECK(cosheaf_axiom_check(SheafKind::Error, zero, {1, 2, 3}, {{1, 2}, {2, 3}}));
    CHECK(cosheaf_axiom_check(SheafKind::Fix, zero, {1, 2, 3}, {{1}, {2}, {3}}));

    const auto p = example_profile();
    CHECK(cosheaf_axiom_check(SheafKind::Error, p, {1, 2, 3}, {{1, 2}, {2, 3}}));
    CHECK(cosheaf_axiom_check(SheafKind::Error, p, {1, 2, 3}, {{1, 2, 3}}));
    CHECK(cosheaf_axiom_check(SheafKind::Fix, p, {2, 3}, {{2, 3}}));

    // Disjoint pieces with nonzero values at both minima: the sum has more
    // room than the union can absorb.
    const MarginProfile twin({{1, 0}, {1, 0}});
    CHECK_FALSE(cosheaf_axiom_check(SheafKind::Error, twin, {1, 2}, {{1}, {2}}));

    CHECK_THROWS_AS(cosheaf_axiom_check(SheafKind::Error, p, {1, 2, 3}, {{1}, {2}}), DomainError);
    CHECK_THROWS_AS(cosheaf_axiom_check(SheafKind::Error, p, {1, 2}, {{1, 2, 3}}), DomainError);
    CHECK_THROWS_AS(cosheaf_axiom_check(SheafKind::Error, p, {1, 4}, {{1, 4}}), DomainError);
    CHECK_THROWS_AS(cosheaf_axiom_check(SheafKind::Error, p, {1, 2}, {}), DomainError);
}

TEST_CASE("projection maps") {
    const auto p = example_profile();
    CHECK(phi_projection(SheafKind::Error, p, 2) == MapDescriptor{2, 0, 0});
    CHECK(phi_projection(SheafKind::Fix, p, 1) == MapDescriptor{6, 0, 0});
    CHECK(phi_projection(SheafKind::Fix, p, 2) == MapDescriptor{0, 6, 0});
    for (std::size_t k = 1; k <= 3; ++k) {
        CHECK(phi_projection(SheafKind::Error, sufficient_profile(), k) == MapDescriptor{0, 0, 0});
        CHECK(phi_projection(SheafKind::Fix, sufficient_profile(), k) == MapDescriptor{0, 0, 0});
    }
    CHECK_THROWS_AS(phi_projection(SheafKind::Error, p, 0), DomainError);
    CHECK_THROWS_AS(phi_projection(SheafKind::Error, p, 4), DomainError);
}

TEST_CASE("cone kernels") {
    const auto p = example_profile();
    CHECK(cone_homology_dim(SheafKind::Error, p, 2, KernelMode::Absolute) == 2);
    CHECK(cone_homology_dim(SheafKind::Fix, p, 1, KernelMode::Absolute) == 6);
    CHECK(cone_homology_dim(SheafKind::Error, p, 2, KernelMode::Incremental) == 2);
    CHECK(cone_homology_dim(SheafKind::Fix, p, 1, KernelMode::Incremental) == 6);
    for (auto kind : {SheafKind::Error, SheafKind::Fix}) {
        for (auto mode : {KernelMode::Absolute, KernelMode::Incremental}) {
            CHECK(cone_homology_dim(kind, p, 3, mode) == 0);
        }
    }

    // Two faulty neighbours: the incremental kernel only sees the growth.
    const MarginProfile run({{1, 0}, {3, 0}});
    CHECK(cone_homology_dim(SheafKind::Error, run, 2, KernelMode::Absolute) == 3);
    CHECK(cone_homology_dim(SheafKind::Error, run, 2, KernelMode::Incremental) == 2);
}

TEST_CASE("cone table") {
    const auto rows = cone_table(example_profile());
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].cone(SheafKind::Fix, KernelMode::Absolute) == 6);
    CHECK(rows[1].cone(SheafKind::Error, KernelMode::Absolute) == 2);
    const std::string csv = cone_table_to_csv(rows);
    CHECK(csv.starts_with("k,chain_error,chain_fix,"));
    CHECK(csv.find("\n2,2,0,0,0,2,2,0,0\n") != std::string::npos);
    CHECK(parse_kernel_mode("incremental") == KernelMode::Incremental);
    CHECK_FALSE(parse_kernel_mode("relative").has_value());
}
