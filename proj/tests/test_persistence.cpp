#include <doctest.h>

#include "hrnflow/checks.hpp"
#include "hrnflow/persistence.hpp"

using namespace hrnflow;

namespace {

const ExtendedInt kInf = ExtendedInt::infinity();

ErrorDiagram diagram(std::initializer_list<DiagramPoint> points) {
    ErrorDiagram d;
    for (const auto& p : points) {
        d.add(p.birth, p.death, p.multiplicity);
    }
    return d;
}

Distance half(std::int64_t h) { return Distance::from_half_units(h); }

} // namespace

TEST_CASE("extended integers") {
    CHECK(ExtendedInt(3) < kInf);
    CHECK(kInf == ExtendedInt::infinity());
    CHECK(kInf.to_string() == "inf");
    CHECK(ExtendedInt(-2).to_string() == "-2");
    CHECK_THROWS_AS(kInf.value(), DomainError);
}

TEST_CASE("diagram multiset") {
    ErrorDiagram d;
    d.add(2, 5);
    d.add(2, 5, 2);
    d.add(1, kInf);
    CHECK(d.distinct_points() == 2);
    CHECK(d.multiplicity(2, 5) == 3);
    CHECK(d.total_multiplicity() == 4);
    CHECK(d.infinite_multiplicity() == 1);
    CHECK(d.points().front() == DiagramPoint{1, kInf, 1});
    CHECK_THROWS_AS(d.add(3, 3), DomainError);
    CHECK_THROWS_AS(d.add(3, 4, 0), DomainError);
}

TEST_CASE("p-intervals") {
    const MatchPolicy policy;
    const std::vector<ErrorEvent> deficit{{2, 2}};

    const std::vector<ErrorEvent> later{{3, 2}};
    CHECK(generate_p_intervals(deficit, later, policy) == diagram({{2, 3, 2}}));

    const std::vector<ErrorEvent> earlier{{1, 6}};
    CHECK(generate_p_intervals(deficit, earlier, policy) == diagram({{2, kInf, 2}}));

    CHECK(generate_p_intervals({}, later, policy).empty());

    // Least index wins; a used surplus is not reused.
    const std::vector<ErrorEvent> twins{{1, 1}, {2, 1}};
    const std::vector<ErrorEvent> fixes{{4, 1}, {6, 1}};
    CHECK(generate_p_intervals(twins, fixes, policy) == diagram({{1, 4, 1}, {2, 6, 1}}));

    // Magnitudes must agree under the exact rule only.
    const std::vector<ErrorEvent> big{{5, 3}};
    CHECK(generate_p_intervals(deficit, big, policy) == diagram({{2, kInf, 2}}));
    CHECK(generate_p_intervals(deficit, big, {MagnitudeRule::Partial, true}) == diagram({{2, 5, 2}}));

    // Without the ordering requirement an earlier fix may close the interval.
    const std::vector<ErrorEvent> early_match{{1, 2}};
    CHECK(generate_p_intervals(deficit, early_match, {MagnitudeRule::Exact, false}) == diagram({{2, 1, 2}}));
}

TEST_CASE("p-interval input validation") {
    const MatchPolicy policy;
    const std::vector<ErrorEvent> unsorted{{3, 1}, {2, 1}};
    const std::vector<ErrorEvent> zero{{1, 0}};
    const std::vector<ErrorEvent> shared{{2, 1}};
    CHECK_THROWS_AS(generate_p_intervals(unsorted, {}, policy), DomainError);
    CHECK_THROWS_AS(generate_p_intervals(zero, {}, policy), DomainError);
    CHECK_THROWS_AS(generate_p_intervals(shared, shared, policy), DomainError);
}

TEST_CASE("persistent error dimension") {
    const ErrorDiagram d = diagram({{1, 3, 2}, {2, 4, 1}});
    CHECK(persistent_error_dim(d, 2, 3) == 2);
    CHECK(persistent_error_dim(d, 2, 4) == 3);
    CHECK(persistent_error_dim(d, 0, 9) == 0);
    CHECK(persistent_error_dim(diagram({{1, kInf, 4}}), 5, 100) == 0);
    CHECK(persistent_error_dim(ErrorDiagram{}, 7, 7) == 0);
    CHECK_THROWS_AS(persistent_error_dim(d, 2, kInf), DomainError);
}

TEST_CASE("bottleneck distance") {
    const ErrorDiagram a = diagram({{0, 4, 1}, {2, 9, 2}, {3, kInf, 1}});
    const ErrorDiagram b = diagram({{1, 5, 1}, {2, 7, 1}, {4, kInf, 1}, {6, 8, 1}});
    const ErrorDiagram c = diagram({{1, 2, 3}});
    const ErrorDiagram e = diagram({{0, 3, 1}, {1, 2, 1}});

    CHECK(bottleneck_distance(a, a) == half(0));
    CHECK(bottleneck_distance(diagram({{1, 3, 1}}), diagram({{1, 5, 1}})) == half(4));
    CHECK(bottleneck_distance(diagram({{0, 10, 1}}), ErrorDiagram{}) == half(10));
    CHECK(bottleneck_distance(diagram({{2, 5, 1}}), diagram({{2, 7, 1}})) == half(4));
    CHECK(bottleneck_distance(diagram({{1, kInf, 1}}), ErrorDiagram{}).is_infinite());
    CHECK(bottleneck_distance(diagram({{1, kInf, 1}}), diagram({{4, kInf, 1}})) == half(6));

    // Frozen from the brute-force matcher.
    CHECK(bottleneck_distance(a, b) == half(7));
    CHECK(bottleneck_distance(c, e) == half(2));
    CHECK(bottleneck_distance(a, c).is_infinite());
    CHECK(checks::brute_force_bottleneck(a, b) == half(7));
}

TEST_CASE("distance formatting and order") {
    CHECK(half(4).to_string() == "2");
    CHECK(half(5).to_string() == "2.5");
    CHECK(Distance::infinity().to_string() == "inf");
    CHECK(half(1000) < Distance::infinity());
    CHECK(half(5).value() == doctest::Approx(2.5));
    CHECK_THROWS_AS(Distance::infinity().half_units(), DomainError);
}

TEST_CASE("diagram statistics") {
    const auto noise = diagram_statistics(diagram({{2, 3, 2}}), 2);
    REQUIRE(noise.points.size() == 1);
    CHECK(noise.points[0].noise);
    CHECK(noise.points[0].persistence == ExtendedInt(1));
    CHECK(noise.noise_count == 2);

    const auto loud = diagram_statistics(diagram({{1, 9, 1}, {3, kInf, 2}}), 2);
    CHECK(loud.noise_count == 0);
    CHECK(loud.significant_count == 3);
    CHECK(loud.infinite_count == 2);

    const auto none = diagram_statistics(ErrorDiagram{}, 2);
    CHECK(none.points.empty());
    CHECK(none.noise_count + none.significant_count + none.infinite_count == 0);
}

TEST_CASE("diagram serialization") {
    const ErrorDiagram d = diagram({{2, kInf, 2}, {1, 3, 1}});
    CHECK(diagram_from_json(diagram_to_json(d)) == d);
    CHECK(diagram_from_json(nlohmann::json::parse(diagram_to_text(d))) == d);
    CHECK(diagram_to_csv(d) == "birth,death,multiplicity\n1,3,1\n2,inf,2\n");
    CHECK(diagram_from_csv(diagram_to_csv(d)) == d);
    CHECK(diagram_to_csv(ErrorDiagram{}) == "birth,death,multiplicity\n");

    nlohmann::json bad = diagram_to_json(d);
    bad["points"][0]["death"] = "forever";
    CHECK_THROWS_AS(diagram_from_json(bad), SchemaError);
    CHECK_THROWS_AS(diagram_from_csv("birth,death\n1,2\n"), DomainError);
}
