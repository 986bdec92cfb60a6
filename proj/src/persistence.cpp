#include "hrnflow/persistence.hpp"

#include <sstream>

namespace hrnflow {

std::int64_t ExtendedInt::value() const {
    if (infinite_) {
        throw DomainError("infinite coordinate has no integer value");
    }
    return value_;
}

std::string ExtendedInt::to_string() const {
    return infinite_ ? "inf" : std::to_string(value_);
}

std::string_view to_string(MagnitudeRule rule) {
    return rule == MagnitudeRule::Exact ? "exact" : "partial";
}

std::optional<MagnitudeRule> parse_magnitude_rule(std::string_view text) {
    if (text == "exact") {
        return MagnitudeRule::Exact;
    }
    if (text == "partial") {
        return MagnitudeRule::Partial;
    }
    return std::nullopt;
}

void ErrorDiagram::add(std::int64_t birth, ExtendedInt death, Dim multiplicity) {
    if (multiplicity == 0) {
        throw DomainError("diagram points need a positive multiplicity");
    }
    if (death == ExtendedInt(birth)) {
        throw DomainError("point (" + std::to_string(birth) + ", " + death.to_string() +
                          ") lies on the diagonal");
    }
    points_[{birth, death}] += multiplicity;
}

std::vector<DiagramPoint> ErrorDiagram::points() const {
    std::vector<DiagramPoint> out;
    out.reserve(points_.size());
    for (const auto& [key, mult] : points_) {
        out.push_back({key.first, key.second, mult});
    }
    return out;
}

Dim ErrorDiagram::total_multiplicity() const {
    Dim total = 0;
    for (const auto& [key, mult] : points_) {
        total += mult;
    }
    return total;
}

Dim ErrorDiagram::infinite_multiplicity() const {
    Dim total = 0;
    for (const auto& [key, mult] : points_) {
        if (key.second.is_infinite()) {
            total += mult;
        }
    }
    return total;
}

Dim ErrorDiagram::multiplicity(std::int64_t birth, ExtendedInt death) const {
    auto it = points_.find({birth, death});
    return it == points_.end() ? 0 : it->second;
}

namespace {

void check_events(std::span<const ErrorEvent> events, std::string_view name) {
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (events[i].magnitude == 0) {
            throw DomainError(std::string(name) + " event at index " +
                              std::to_string(events[i].index) + " has zero magnitude");
        }
        if (i > 0 && events[i].index <= events[i - 1].index) {
            throw DomainError(std::string(name) + " events must have strictly increasing indexes");
        }
    }
}

} // namespace

ErrorDiagram generate_p_intervals(std::span<const ErrorEvent> deficits,
                                  std::span<const ErrorEvent> surpluses, const MatchPolicy& policy) {
    check_events(deficits, "deficit");
    check_events(surpluses, "surplus");
    for (const auto& d : deficits) {
        for (const auto& s : surpluses) {
            if (d.index == s.index) {
                throw DomainError("subprogram " + std::to_string(d.index) +
                                  " cannot carry both a deficit and a surplus");
            }
        }
    }

    ErrorDiagram diagram;
    std::vector<bool> chosen(surpluses.size(), false);
    for (const auto& d : deficits) {
        std::optional<std::size_t> fix;
        for (std::size_t j = 0; j < surpluses.size() && !fix; ++j) {
            const auto& s = surpluses[j];
            if (chosen[j] || (policy.require_subsequent && s.index <= d.index)) {
                continue;
            }
            const bool covers = policy.magnitude_rule == MagnitudeRule::Exact
                                    ? s.magnitude == d.magnitude
                                    : s.magnitude >= d.magnitude;
            if (covers) {
                fix = j;
            }
        }
        const auto birth = static_cast<std::int64_t>(d.index);
        if (fix) {
            chosen[*fix] = true;
            diagram.add(birth, static_cast<std::int64_t>(surpluses[*fix].index), d.magnitude);
        } else {
            diagram.add(birth, ExtendedInt::infinity(), d.magnitude);
        }
    }
    return diagram;
}

Dim persistent_error_dim(const ErrorDiagram& diagram, std::int64_t i, ExtendedInt j) {
    if (j.is_infinite()) {
        throw DomainError("persistent error groups are only defined for finite j");
    }
    Dim total = 0;
    for (const auto& p : diagram.points()) {
        if (!p.at_infinity() && p.birth <= i && p.death <= j) {
            total += p.multiplicity;
        }
    }
    return total;
}

DiagramStatistics diagram_statistics(const ErrorDiagram& diagram, std::int64_t noise_threshold) {
    DiagramStatistics stats;
    stats.noise_threshold = noise_threshold;
    for (const auto& p : diagram.points()) {
        PointSummary s{p, ExtendedInt::infinity(), false};
        if (p.at_infinity()) {
            stats.infinite_count += p.multiplicity;
        } else {
            const std::int64_t persistence = p.death.value() - p.birth;
            s.persistence = persistence;
            s.noise = persistence <= noise_threshold;
        }
        (s.noise ? stats.noise_count : stats.significant_count) += p.multiplicity;
        stats.points.push_back(s);
    }
    return stats;
}

nlohmann::json diagram_to_json(const ErrorDiagram& diagram) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : diagram.points()) {
        nlohmann::json death = p.at_infinity() ? nlohmann::json("inf") : nlohmann::json(p.death.value());
        points.push_back({{"birth", p.birth}, {"death", death}, {"multiplicity", p.multiplicity}});
    }
    return {{"format", "error-diagram"}, {"version", 1}, {"points", std::move(points)}};
}

ErrorDiagram diagram_from_json(const nlohmann::json& doc) {
    try {
        if (!doc.is_object() || doc.value("format", "") != "error-diagram") {
            throw SchemaError("/format", "expected \"error-diagram\"");
        }
        ErrorDiagram diagram;
        const auto& points = doc.at("points");
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& p = points[i];
            const auto& death = p.at("death");
            ExtendedInt d = 0;
            if (death.is_string()) {
                if (death.get<std::string>() != "inf") {
                    throw SchemaError("/points/" + std::to_string(i) + "/death",
                                      "expected an integer or \"inf\"");
                }
                d = ExtendedInt::infinity();
            } else {
                d = death.get<std::int64_t>();
            }
            diagram.add(p.at("birth").get<std::int64_t>(), d, p.at("multiplicity").get<Dim>());
        }
        return diagram;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("/points", std::string("malformed diagram: ") + e.what());
    }
}

std::string diagram_to_text(const ErrorDiagram& diagram) {
    return diagram_to_json(diagram).dump(2) + "\n";
}

std::string diagram_to_csv(const ErrorDiagram& diagram) {
    std::ostringstream out;
    out << "birth,death,multiplicity\n";
    for (const auto& p : diagram.points()) {
        out << p.birth << ',' << p.death.to_string() << ',' << p.multiplicity << '\n';
    }
    return out.str();
}

ErrorDiagram diagram_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line.rfind("birth,death,multiplicity", 0) != 0) {
        throw SchemaError("csv:1", "expected header birth,death,multiplicity");
    }
    ErrorDiagram diagram;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string birth;
        std::string death;
        std::string mult;
        if (!std::getline(fields, birth, ',') || !std::getline(fields, death, ',') ||
            !std::getline(fields, mult)) {
            throw SchemaError("csv:" + std::to_string(line_no), "expected three fields");
        }
        try {
            const ExtendedInt d = death == "inf" ? ExtendedInt::infinity() : ExtendedInt(std::stoll(death));
            diagram.add(std::stoll(birth), d, std::stoull(mult));
        } catch (const std::logic_error&) {
            throw SchemaError("csv:" + std::to_string(line_no), "bad number in \"" + line + "\"");
        }
    }
    return diagram;
}

nlohmann::json statistics_to_json(const DiagramStatistics& stats) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& s : stats.points) {
        nlohmann::json persistence =
            s.persistence.is_infinite() ? nlohmann::json("inf") : nlohmann::json(s.persistence.value());
        points.push_back({{"birth", s.point.birth},
                          {"death", s.point.death.to_string()},
                          {"multiplicity", s.point.multiplicity},
                          {"persistence", persistence},
                          {"class", s.noise ? "noise" : "significant"}});
    }
    return {{"noise_threshold", stats.noise_threshold},
            {"infinite_count", stats.infinite_count},
            {"noise_count", stats.noise_count},
            {"significant_count", stats.significant_count},
            {"points", std::move(points)}};
}

} // namespace hrnflow
