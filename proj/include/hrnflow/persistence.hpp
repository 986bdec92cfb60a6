#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hrnflow/error.hpp"

namespace hrnflow {

// An integer or +infinity. Infinity compares greater than every integer.
class ExtendedInt {
public:
    constexpr ExtendedInt(std::int64_t value) noexcept : value_(value), infinite_(false) {}

    static constexpr ExtendedInt infinity() noexcept { return ExtendedInt(); }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    std::int64_t value() const;

    std::string to_string() const;

    constexpr std::strong_ordering operator<=>(const ExtendedInt& other) const noexcept {
        if (infinite_ || other.infinite_) {
            return static_cast<int>(infinite_) <=> static_cast<int>(other.infinite_);
        }
        return value_ <=> other.value_;
    }
    constexpr bool operator==(const ExtendedInt& other) const noexcept {
        return (*this <=> other) == std::strong_ordering::equal;
    }

private:
    constexpr ExtendedInt() noexcept : value_(0), infinite_(true) {}

    std::int64_t value_;
    bool infinite_;
};

struct DiagramPoint {
    std::int64_t birth = 0;
    ExtendedInt death = 0;
    Dim multiplicity = 1;

    bool at_infinity() const noexcept { return death.is_infinite(); }
    bool operator==(const DiagramPoint&) const = default;
};

/**
 * Error persistence diagram: a multiset of (birth, death) points with
 * birth < death. Points sharing coordinates are merged by adding their
 * multiplicities; iteration order is by birth, then death.
 */
class ErrorDiagram {
public:
    ErrorDiagram() = default;

    void add(std::int64_t birth, ExtendedInt death, Dim multiplicity = 1);

    std::vector<DiagramPoint> points() const;
    bool empty() const noexcept { return points_.empty(); }
    std::size_t distinct_points() const noexcept { return points_.size(); }
    Dim total_multiplicity() const;
    Dim infinite_multiplicity() const;
    Dim multiplicity(std::int64_t birth, ExtendedInt death) const;

    bool operator==(const ErrorDiagram&) const = default;

private:
    std::map<std::pair<std::int64_t, ExtendedInt>, Dim> points_;
};

struct ErrorEvent {
    std::size_t index = 0;
    Dim magnitude = 1;

    bool operator==(const ErrorEvent&) const = default;
};

enum class MagnitudeRule {
    Exact,   // pair only when deficit and surplus magnitudes are equal
    Partial, // pair when the surplus covers the deficit (not part of the original rule)
};

std::string_view to_string(MagnitudeRule rule);
std::optional<MagnitudeRule> parse_magnitude_rule(std::string_view text);

struct MatchPolicy {
    MagnitudeRule magnitude_rule = MagnitudeRule::Exact;
    bool require_subsequent = true;
};

/**
 * Pairs each deficit event with the least unused surplus event that fixes
 * it, walking deficits in increasing index order. Paired events become
 * proper points (i, k); unpaired deficits become points (i, inf). Both
 * inputs must be sorted by strictly increasing index.
 */
ErrorDiagram generate_p_intervals(std::span<const ErrorEvent> deficits,
                                  std::span<const ErrorEvent> surpluses, const MatchPolicy& policy);

// Sum of multiplicities over proper points (u, v) with u <= i and v <= j.
// An infinite j is rejected.
Dim persistent_error_dim(const ErrorDiagram& diagram, std::int64_t i, ExtendedInt j);

// A bottleneck distance, held exactly in half units.
class Distance {
public:
    static Distance from_half_units(std::int64_t half_units);
    static Distance infinity();

    bool is_infinite() const noexcept { return infinite_; }
    std::int64_t half_units() const;
    double value() const;
    // "2", "2.5" or "inf".
    std::string to_string() const;

    auto operator<=>(const Distance&) const = default;

private:
    // Declared first so the defaulted ordering puts infinity above every
    // finite value.
    bool infinite_ = false;
    std::int64_t half_units_ = 0;
};

Distance bottleneck_distance(const ErrorDiagram& a, const ErrorDiagram& b);

struct PointSummary {
    DiagramPoint point;
    ExtendedInt persistence = 0;
    bool noise = false;
};

struct DiagramStatistics {
    std::vector<PointSummary> points;
    Dim infinite_count = 0;
    Dim noise_count = 0;
    Dim significant_count = 0;
    std::int64_t noise_threshold = 0;
};

// Points with persistence <= threshold count as noise; points at infinity
// are always significant. Counts are weighted by multiplicity.
DiagramStatistics diagram_statistics(const ErrorDiagram& diagram, std::int64_t noise_threshold);

nlohmann::json diagram_to_json(const ErrorDiagram& diagram);
ErrorDiagram diagram_from_json(const nlohmann::json& doc);
std::string diagram_to_text(const ErrorDiagram& diagram);
std::string diagram_to_csv(const ErrorDiagram& diagram);
ErrorDiagram diagram_from_csv(std::string_view text);

nlohmann::json statistics_to_json(const DiagramStatistics& stats);

} // namespace hrnflow
