#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hrnflow {

using VertexId = std::uint32_t;

struct Edge {
    VertexId tail = 0;
    VertexId head = 0;

    auto operator<=>(const Edge&) const = default;
};

/**
 * A hierarchical recurrent network: a spine path v1..v(2m+1) with edges
 * v(2i)->v(2i-1) and v(2i)->v(2i+1), plus m directed cycles, cycle i glued
 * onto the spine edge v(2i)->v(2i-1).
 *
 * Vertex ids: spine vertex v_s has id s (1-based); auxiliary cycle vertices
 * follow consecutively in cycle order. Cycle vertex lists are stored in
 * traversal order starting at v(2i-1), so the closing edge last->first is
 * the identified spine edge.
 *
 * The constructor does not check invariants; use validate().
 */
class Hrn {
public:
    Hrn() = default;
    Hrn(std::size_t m, std::vector<VertexId> spine, std::vector<std::vector<VertexId>> cycles,
        std::set<Edge> edges);

    std::size_t cycle_count() const noexcept { return m_; }
    const std::vector<VertexId>& spine() const noexcept { return spine_; }
    const std::vector<std::vector<VertexId>>& cycles() const noexcept { return cycles_; }
    const std::set<Edge>& edges() const noexcept { return edges_; }

    // Sorted list of every vertex mentioned by the spine or a cycle.
    std::vector<VertexId> vertices() const;
    bool has_edge(VertexId tail, VertexId head) const { return edges_.contains({tail, head}); }

    // "v3" for spine vertices, "w2" for auxiliary ones.
    std::string label(VertexId id) const;

    bool operator==(const Hrn&) const = default;

private:
    std::size_t m_ = 0;
    std::vector<VertexId> spine_;
    std::vector<std::vector<VertexId>> cycles_;
    std::set<Edge> edges_;
};

// The i-th recurrent subprogram (1-based), vertices in traversal order.
struct Subprogram {
    std::size_t index = 0;
    std::vector<VertexId> vertices;
    Edge identified_edge;

    std::size_t vertex_count() const noexcept { return vertices.size(); }
};

struct Violation {
    std::string invariant;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    std::string to_string() const;
};

Hrn build_hrn(std::size_t m, std::span<const std::size_t> cycle_lengths);

ValidationReport validate(const Hrn& h);

Subprogram subprogram(const Hrn& h, std::size_t i);

// Structured-text export (JSON) of an HRN: vertices with labels, directed
// edges, and subprogram tags. import_graph() is its inverse.
nlohmann::json export_graph(const Hrn& h);
Hrn import_graph(const nlohmann::json& doc);

std::string to_dot(const Hrn& h);

} // namespace hrnflow
