#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hrnflow/error.hpp"

namespace hrnflow {

enum class CapacityMode { Cap, Reject, Ignore };

std::string_view to_string(CapacityMode mode);
std::optional<CapacityMode> parse_capacity_mode(std::string_view text);

struct FlowPolicy {
    CapacityMode capacity_mode = CapacityMode::Cap;
    // Whether the connector from the last vertex of one pass back to the
    // first vertex of the next pass also adds the increment.
    bool beta_adds = true;
    // Require the final dimension of subprogram i to equal the initial
    // dimension of subprogram i+1.
    bool strict_stitching = false;
};

// Dimension-level quiver representation of one subprogram. Capacities are
// listed in subprogram traversal order.
struct QuiverRep {
    std::size_t subprogram_index = 1;
    std::vector<Dim> capacities;
    Dim increment = 0;
    Dim initial_dim = 0;
};

// Reject-mode overflow, or an initial dimension that does not fit.
class CapacityError : public DomainError {
public:
    CapacityError(std::size_t subprogram, std::size_t vertex, std::size_t column, Dim value,
                  Dim capacity);

    std::size_t subprogram() const noexcept { return subprogram_; }
    std::size_t vertex() const noexcept { return vertex_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t subprogram_;
    std::size_t vertex_;
    std::size_t column_;
};

/**
 * A data flow: the k x m grid of dimensions visited when data cycles m times
 * through a subprogram. dim(i, q) uses 1-based vertex i and pass q.
 */
class DataFlow {
public:
    DataFlow(QuiverRep rep, std::size_t iterations, std::vector<std::vector<Dim>> dims);

    const QuiverRep& rep() const noexcept { return rep_; }
    std::size_t iterations() const noexcept { return iterations_; }
    std::size_t vertex_count() const noexcept { return rep_.capacities.size(); }

    Dim dim(std::size_t vertex, std::size_t pass) const;
    // Row-major: rows are vertices, columns are passes.
    const std::vector<std::vector<Dim>>& grid() const noexcept { return dims_; }

    bool operator==(const DataFlow& other) const;

private:
    QuiverRep rep_;
    std::size_t iterations_;
    std::vector<std::vector<Dim>> dims_;
};

DataFlow simulate_flow(const QuiverRep& rep, std::size_t iterations, const FlowPolicy& policy);

// Dimension at the last vertex of the last pass.
Dim final_data_dimension(const DataFlow& flow);

enum class FlowKind { Faulty, Able, Sufficient };

std::string_view to_string(FlowKind kind);

struct Classification {
    FlowKind kind = FlowKind::Sufficient;
    Dim margin = 0;
    Dim theta = 0;
    Dim delta = 0;

    bool operator==(const Classification&) const = default;
};

Classification classify(Dim theta, Dim delta);
Classification classify(const DataFlow& flow, Dim delta);

// Deficit and surplus margins per subprogram; at most one is nonzero.
struct MarginEntry {
    Dim deficit = 0;
    Dim surplus = 0;

    bool operator==(const MarginEntry&) const = default;
};

class MarginProfile {
public:
    MarginProfile() = default;
    explicit MarginProfile(std::vector<MarginEntry> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    // 1-based subprogram index.
    const MarginEntry& at(std::size_t index) const;
    const std::vector<MarginEntry>& entries() const noexcept { return entries_; }

    bool operator==(const MarginProfile&) const = default;

private:
    std::vector<MarginEntry> entries_;
};

MarginProfile margin_profile(std::span<const DataFlow> flows, std::span<const Dim> deltas);
MarginProfile margin_profile(std::span<const Classification> classes);

struct StitchingMismatch {
    std::size_t boundary = 0; // between subprogram `boundary` and `boundary + 1`
    Dim final_dim = 0;
    Dim next_initial = 0;
};

struct StitchingReport {
    std::vector<StitchingMismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

StitchingReport check_stitching(std::span<const DataFlow> flows);

// CSV: one row per vertex, one column per pass.
std::string flow_to_csv(const DataFlow& flow);

} // namespace hrnflow
