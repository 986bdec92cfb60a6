#include "hrnflow/hrn.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hrnflow/error.hpp"

namespace hrnflow {

Hrn::Hrn(std::size_t m, std::vector<VertexId> spine, std::vector<std::vector<VertexId>> cycles,
         std::set<Edge> edges)
    : m_(m), spine_(std::move(spine)), cycles_(std::move(cycles)), edges_(std::move(edges)) {}

std::vector<VertexId> Hrn::vertices() const {
    std::set<VertexId> all(spine_.begin(), spine_.end());
    for (const auto& c : cycles_) {
        all.insert(c.begin(), c.end());
    }
    return {all.begin(), all.end()};
}

std::string Hrn::label(VertexId id) const {
    const auto spine_len = static_cast<VertexId>(spine_.size());
    if (id >= 1 && id <= spine_len) {
        return "v" + std::to_string(id);
    }
    if (id > spine_len) {
        return "w" + std::to_string(id - spine_len);
    }
    return "#" + std::to_string(id);
}

Hrn build_hrn(std::size_t m, std::span<const std::size_t> cycle_lengths) {
    if (m == 0) {
        throw DomainError("an HRN needs at least one cycle (m = 0)");
    }
    if (cycle_lengths.size() != m) {
        throw DomainError("expected " + std::to_string(m) + " cycle lengths, got " +
                          std::to_string(cycle_lengths.size()));
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (cycle_lengths[i] < 3) {
            throw DomainError("cycle " + std::to_string(i + 1) + " has length " +
                              std::to_string(cycle_lengths[i]) +
                              "; a directed cycle needs at least 3 vertices");
        }
    }

    const auto spine_len = static_cast<VertexId>(2 * m + 1);
    std::vector<VertexId> spine(spine_len);
    std::set<Edge> edges;
    for (VertexId s = 1; s <= spine_len; ++s) {
        spine[s - 1] = s;
    }
    for (VertexId i = 1; i <= m; ++i) {
        edges.insert({2 * i, 2 * i - 1});
        edges.insert({2 * i, 2 * i + 1});
    }

    std::vector<std::vector<VertexId>> cycles;
    cycles.reserve(m);
    VertexId next_aux = spine_len + 1;
    for (VertexId i = 1; i <= m; ++i) {
        const VertexId head = 2 * i - 1;
        const VertexId tail = 2 * i;
        std::vector<VertexId> cycle{head};
        for (std::size_t a = 0; a + 2 < cycle_lengths[i - 1]; ++a) {
            cycle.push_back(next_aux++);
        }
        cycle.push_back(tail);
        for (std::size_t p = 0; p + 1 < cycle.size(); ++p) {
            edges.insert({cycle[p], cycle[p + 1]});
        }
        cycles.push_back(std::move(cycle));
    }
    return Hrn(m, std::move(spine), std::move(cycles), std::move(edges));
}

namespace {

std::string edge_text(const Hrn& h, Edge e) {
    return h.label(e.tail) + "->" + h.label(e.head);
}

} // namespace

ValidationReport validate(const Hrn& h) {
    ValidationReport report;
    auto fail = [&](std::string invariant, std::string detail) {
        report.violations.push_back({std::move(invariant), std::move(detail)});
    };

    const std::size_t m = h.cycle_count();
    if (m == 0) {
        fail("cycle count", "m must be positive");
        return report;
    }
    if (h.spine().size() != 2 * m + 1) {
        fail("spine length", "spine has " + std::to_string(h.spine().size()) +
                                 " vertices, expected " + std::to_string(2 * m + 1));
        return report;
    }
    for (std::size_t s = 0; s < h.spine().size(); ++s) {
        if (h.spine()[s] != s + 1) {
            fail("spine ids", "spine position " + std::to_string(s + 1) + " holds id " +
                                  std::to_string(h.spine()[s]));
        }
    }
    if (!report.ok()) {
        return report;
    }

    std::set<Edge> expected_edges;
    for (VertexId i = 1; i <= m; ++i) {
        for (Edge e : {Edge{2 * i, 2 * i - 1}, Edge{2 * i, 2 * i + 1}}) {
            expected_edges.insert(e);
            if (!h.has_edge(e.tail, e.head)) {
                fail("spine edge", "missing spine edge " + edge_text(h, e));
            }
        }
    }

    if (h.cycles().size() != m) {
        fail("cycle count", "found " + std::to_string(h.cycles().size()) + " cycles, expected " +
                                std::to_string(m));
        return report;
    }

    const auto spine_len = static_cast<VertexId>(h.spine().size());
    std::map<VertexId, std::size_t> owner;
    for (std::size_t ci = 0; ci < m; ++ci) {
        const auto& cycle = h.cycles()[ci];
        const auto index = static_cast<VertexId>(ci + 1);
        const std::string name = "cycle " + std::to_string(index);
        if (cycle.size() < 3) {
            fail("cycle length", name + " has " + std::to_string(cycle.size()) +
                                     " vertices, need at least 3");
            continue;
        }
        std::set<VertexId> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != cycle.size()) {
            fail("simple cycle", name + " repeats a vertex");
        }

        std::vector<Edge> cycle_edges;
        for (std::size_t p = 0; p < cycle.size(); ++p) {
            cycle_edges.push_back({cycle[p], cycle[(p + 1) % cycle.size()]});
        }
        for (Edge e : cycle_edges) {
            expected_edges.insert(e);
            if (h.has_edge(e.tail, e.head)) {
                continue;
            }
            const Edge back{e.head, e.tail};
            if (h.has_edge(back.tail, back.head)) {
                // Counted here so it is not reported again as a stray edge.
                expected_edges.insert(back);
                fail("orientation", "orientation inconsistent on " + name + ": has " + edge_text(h, back) +
                                        " in place of " + edge_text(h, e));
            } else {
                fail("cycle edge", name + " is missing edge " + edge_text(h, e));
            }
        }

        const Edge glue{2 * index, 2 * index - 1};
        const Edge reversed{glue.head, glue.tail};
        const bool has_glue = std::find(cycle_edges.begin(), cycle_edges.end(), glue) != cycle_edges.end();
        const bool has_reversed =
            std::find(cycle_edges.begin(), cycle_edges.end(), reversed) != cycle_edges.end();
        if (has_reversed && !has_glue) {
            fail("orientation", "orientation inconsistent on " + name + ": traverses " +
                                    edge_text(h, reversed) + " against spine edge " +
                                    edge_text(h, glue));
        } else if (!has_glue) {
            fail("identified edge", name + " does not contain spine edge " + edge_text(h, glue));
        } else if (cycle.front() != glue.head) {
            fail("traversal start", name + " must be listed starting at " + h.label(glue.head));
        }

        for (VertexId v : distinct) {
            if (v <= spine_len) {
                if (v != glue.tail && v != glue.head) {
                    fail("cycle spine vertices", name + " passes through spine vertex " + h.label(v));
                }
                continue;
            }
            auto [it, inserted] = owner.emplace(v, index);
            if (!inserted) {
                fail("disjoint cycles", "vertex " + h.label(v) + " belongs to cycles " +
                                            std::to_string(it->second) + " and " +
                                            std::to_string(index));
            }
        }
    }

    for (const Edge& e : h.edges()) {
        if (!expected_edges.contains(e)) {
            fail("stray edge", "edge " + edge_text(h, e) + " is neither a spine nor a cycle edge");
        }
    }
    return report;
}

std::string ValidationReport::to_string() const {
    if (ok()) {
        return "ok";
    }
    std::ostringstream out;
    for (const auto& v : violations) {
        out << v.invariant << ": " << v.detail << '\n';
    }
    return out.str();
}

Subprogram subprogram(const Hrn& h, std::size_t i) {
    if (i < 1 || i > h.cycle_count() || i > h.cycles().size()) {
        throw DomainError("subprogram index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(h.cycle_count()));
    }
    const auto& cycle = h.cycles()[i - 1];
    return Subprogram{i, cycle, Edge{cycle.back(), cycle.front()}};
}

nlohmann::json export_graph(const Hrn& h) {
    using nlohmann::json;
    json vertices = json::array();
    for (VertexId v : h.vertices()) {
        vertices.push_back({{"id", v}, {"label", h.label(v)}});
    }
    json edges = json::array();
    for (const Edge& e : h.edges()) {
        edges.push_back(json::array({e.tail, e.head}));
    }
    json subprograms = json::array();
    for (std::size_t i = 1; i <= h.cycle_count(); ++i) {
        const auto sp = subprogram(h, i);
        subprograms.push_back({{"index", i},
                               {"vertices", sp.vertices},
                               {"identified_edge", json::array({sp.identified_edge.tail,
                                                                sp.identified_edge.head})}});
    }
    return json{{"format", "hrn-graph"},
                {"version", 1},
                {"m", h.cycle_count()},
                {"spine", h.spine()},
                {"vertices", std::move(vertices)},
                {"edges", std::move(edges)},
                {"subprograms", std::move(subprograms)}};
}

Hrn import_graph(const nlohmann::json& doc) {
    try {
        if (doc.at("format").get<std::string>() != "hrn-graph") {
            throw SchemaError("/format", "expected \"hrn-graph\"");
        }
        const auto m = doc.at("m").get<std::size_t>();
        auto spine = doc.at("spine").get<std::vector<VertexId>>();
        std::set<Edge> edges;
        for (const auto& e : doc.at("edges")) {
            edges.insert({e.at(0).get<VertexId>(), e.at(1).get<VertexId>()});
        }
        std::vector<std::vector<VertexId>> cycles;
        for (const auto& sp : doc.at("subprograms")) {
            cycles.push_back(sp.at("vertices").get<std::vector<VertexId>>());
        }
        return Hrn(m, std::move(spine), std::move(cycles), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("/", std::string("malformed hrn-graph document: ") + e.what());
    }
}

std::string to_dot(const Hrn& h) {
    std::ostringstream out;
    out << "digraph hrn {\n  rankdir=LR;\n";
    for (VertexId v : h.vertices()) {
        out << "  \"" << h.label(v) << "\";\n";
    }
    for (std::size_t i = 1; i <= h.cycle_count(); ++i) {
        out << "  subgraph cluster_" << i << " {\n    label=\"H" << i << "\";\n";
        for (VertexId v : h.cycles()[i - 1]) {
            out << "    \"" << h.label(v) << "\";\n";
        }
        out << "  }\n";
    }
    for (const Edge& e : h.edges()) {
        out << "  \"" << h.label(e.tail) << "\" -> \"" << h.label(e.head) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace hrnflow
