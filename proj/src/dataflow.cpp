#include "hrnflow/dataflow.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace hrnflow {

std::string_view to_string(CapacityMode mode) {
    switch (mode) {
    case CapacityMode::Cap:
        return "cap";
    case CapacityMode::Reject:
        return "reject";
    case CapacityMode::Ignore:
        return "ignore";
    }
    return "?";
}

std::optional<CapacityMode> parse_capacity_mode(std::string_view text) {
    if (text == "cap") {
        return CapacityMode::Cap;
    }
    if (text == "reject") {
        return CapacityMode::Reject;
    }
    if (text == "ignore") {
        return CapacityMode::Ignore;
    }
    return std::nullopt;
}

std::string_view to_string(FlowKind kind) {
    switch (kind) {
    case FlowKind::Faulty:
        return "faulty";
    case FlowKind::Able:
        return "able";
    case FlowKind::Sufficient:
        return "sufficient";
    }
    return "?";
}

CapacityError::CapacityError(std::size_t subprogram, std::size_t vertex, std::size_t column,
                             Dim value, Dim capacity)
    : DomainError("subprogram " + std::to_string(subprogram) + ", vertex " +
                  std::to_string(vertex) + ", pass " + std::to_string(column) + ": dimension " +
                  std::to_string(value) + " exceeds capacity " + std::to_string(capacity)),
      subprogram_(subprogram), vertex_(vertex), column_(column) {}

DataFlow::DataFlow(QuiverRep rep, std::size_t iterations, std::vector<std::vector<Dim>> dims)
    : rep_(std::move(rep)), iterations_(iterations), dims_(std::move(dims)) {}

Dim DataFlow::dim(std::size_t vertex, std::size_t pass) const {
    if (vertex < 1 || vertex > dims_.size() || pass < 1 || pass > iterations_) {
        throw DomainError("grid position (" + std::to_string(vertex) + ", " + std::to_string(pass) +
                          ") out of range");
    }
    return dims_[vertex - 1][pass - 1];
}

bool DataFlow::operator==(const DataFlow& other) const {
    return rep_.subprogram_index == other.rep_.subprogram_index &&
           rep_.capacities == other.rep_.capacities && rep_.increment == other.rep_.increment &&
           rep_.initial_dim == other.rep_.initial_dim && iterations_ == other.iterations_ &&
           dims_ == other.dims_;
}

DataFlow simulate_flow(const QuiverRep& rep, std::size_t iterations, const FlowPolicy& policy) {
    const std::size_t k = rep.capacities.size();
    if (k == 0) {
        throw DomainError("subprogram " + std::to_string(rep.subprogram_index) +
                          " has no capacities");
    }
    if (iterations == 0) {
        throw DomainError("a data flow needs at least one pass");
    }
    const bool bounded = policy.capacity_mode != CapacityMode::Ignore;
    if (bounded && rep.initial_dim > rep.capacities[0]) {
        throw CapacityError(rep.subprogram_index, 1, 1, rep.initial_dim, rep.capacities[0]);
    }

    auto step = [&](Dim from, Dim added, std::size_t vertex, std::size_t pass) {
        if (from > std::numeric_limits<Dim>::max() - added) {
            throw DomainError("dimension overflow in subprogram " +
                              std::to_string(rep.subprogram_index));
        }
        const Dim next = from + added;
        const Dim capacity = rep.capacities[vertex - 1];
        switch (policy.capacity_mode) {
        case CapacityMode::Cap:
            return std::min(next, capacity);
        case CapacityMode::Reject:
            if (next > capacity) {
                throw CapacityError(rep.subprogram_index, vertex, pass, next, capacity);
            }
            return next;
        case CapacityMode::Ignore:
            return next;
        }
        return next;
    };

    std::vector<std::vector<Dim>> dims(k, std::vector<Dim>(iterations, 0));
    dims[0][0] = rep.initial_dim;
    for (std::size_t q = 0; q < iterations; ++q) {
        if (q > 0) {
            dims[0][q] = step(dims[k - 1][q - 1], policy.beta_adds ? rep.increment : 0, 1, q + 1);
        }
        for (std::size_t i = 1; i < k; ++i) {
            dims[i][q] = step(dims[i - 1][q], rep.increment, i + 1, q + 1);
        }
    }
    return DataFlow(rep, iterations, std::move(dims));
}

Dim final_data_dimension(const DataFlow& flow) {
    return flow.dim(flow.vertex_count(), flow.iterations());
}

Classification classify(Dim theta, Dim delta) {
    if (theta < delta) {
        return {FlowKind::Faulty, delta - theta, theta, delta};
    }
    if (theta > delta) {
        return {FlowKind::Able, theta - delta, theta, delta};
    }
    return {FlowKind::Sufficient, 0, theta, delta};
}

Classification classify(const DataFlow& flow, Dim delta) {
    return classify(final_data_dimension(flow), delta);
}

MarginProfile::MarginProfile(std::vector<MarginEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].deficit != 0 && entries_[i].surplus != 0) {
            throw DomainError("margin profile entry " + std::to_string(i + 1) +
                              " has both a deficit and a surplus");
        }
    }
}

const MarginEntry& MarginProfile::at(std::size_t index) const {
    if (index < 1 || index > entries_.size()) {
        throw DomainError("subprogram index " + std::to_string(index) + " out of range 1.." +
                          std::to_string(entries_.size()));
    }
    return entries_[index - 1];
}

MarginProfile margin_profile(std::span<const Classification> classes) {
    std::vector<MarginEntry> entries;
    entries.reserve(classes.size());
    for (const auto& c : classes) {
        entries.push_back({c.kind == FlowKind::Faulty ? c.margin : 0,
                           c.kind == FlowKind::Able ? c.margin : 0});
    }
    return MarginProfile(std::move(entries));
}

MarginProfile margin_profile(std::span<const DataFlow> flows, std::span<const Dim> deltas) {
    if (flows.empty()) {
        throw DomainError("margin profile needs at least one flow");
    }
    if (flows.size() != deltas.size()) {
        throw DomainError("got " + std::to_string(flows.size()) + " flows but " +
                          std::to_string(deltas.size()) + " desired outputs");
    }
    std::vector<Classification> classes;
    classes.reserve(flows.size());
    for (std::size_t i = 0; i < flows.size(); ++i) {
        classes.push_back(classify(flows[i], deltas[i]));
    }
    return margin_profile(classes);
}

StitchingReport check_stitching(std::span<const DataFlow> flows) {
    StitchingReport report;
    for (std::size_t i = 0; i + 1 < flows.size(); ++i) {
        const Dim final_dim = final_data_dimension(flows[i]);
        const Dim next_initial = flows[i + 1].dim(1, 1);
        if (final_dim != next_initial) {
            report.mismatches.push_back({i + 1, final_dim, next_initial});
        }
    }
    return report;
}

std::string flow_to_csv(const DataFlow& flow) {
    std::ostringstream out;
    out << "vertex";
    for (std::size_t q = 1; q <= flow.iterations(); ++q) {
        out << ",pass" << q;
    }
    out << '\n';
    for (std::size_t i = 0; i < flow.vertex_count(); ++i) {
        out << i + 1;
        for (Dim d : flow.grid()[i]) {
            out << ',' << d;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace hrnflow
