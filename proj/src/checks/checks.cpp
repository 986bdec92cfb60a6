#include "hrnflow/checks.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <list>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "hrnflow/cosheaf.hpp"
#include "hrnflow/dataflow.hpp"
#include "hrnflow/hrn.hpp"
#include "hrnflow/packet_sim.hpp"

namespace hrnflow::checks {

namespace {

constexpr std::int64_t kUnmatchable = std::numeric_limits<std::int64_t>::max();

// Records the first few failures and counts cases.
class Tally {
public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    void pass() { ++result_.cases; }
    void fail(const std::string& what) {
        ++result_.cases;
        ++failures_;
        result_.passed = false;
        if (failures_ <= 3) {
            result_.detail += (result_.detail.empty() ? "" : "; ") + what;
        }
    }
    void expect(bool ok, const std::string& what) { ok ? pass() : fail(what); }

    CheckResult finish() {
        if (failures_ > 3) {
            result_.detail += "; ... " + std::to_string(failures_) + " failures in total";
        }
        if (result_.passed && result_.detail.empty()) {
            result_.detail = std::to_string(result_.cases) + " cases";
        }
        return result_;
    }

private:
    CheckResult result_;
    std::size_t failures_ = 0;
};

template <class T>
std::string show(const std::vector<T>& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? "," : "") << v[i];
    }
    out << ']';
    return out.str();
}

std::string show(const ErrorDiagram& d) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& p : d.points()) {
        out << (first ? "" : ", ") << '(' << p.birth << ',' << p.death.to_string() << "):" << p.multiplicity;
        first = false;
    }
    out << '}';
    return out.str();
}

std::string show(const MarginProfile& p) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < p.size(); ++i) {
        out << (i ? "," : "") << '(' << p.entries()[i].deficit << ',' << p.entries()[i].surplus << ')';
    }
    out << ']';
    return out.str();
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Calls visit(profile) for every margin profile of length n whose entries
// are (0,0), (d,0) or (0,s) with 1 <= d, s <= max_margin.
template <class Visit>
void for_each_profile(std::size_t n, Dim max_margin, Visit&& visit) {
    const std::size_t options = 1 + 2 * max_margin;
    std::vector<std::size_t> digits(n, 0);
    while (true) {
        std::vector<MarginEntry> entries;
        for (std::size_t d : digits) {
            if (d == 0) {
                entries.push_back({0, 0});
            } else if (d <= max_margin) {
                entries.push_back({d, 0});
            } else {
                entries.push_back({0, d - max_margin});
            }
        }
        visit(MarginProfile(std::move(entries)));
        std::size_t pos = 0;
        while (pos < n && ++digits[pos] == options) {
            digits[pos++] = 0;
        }
        if (pos == n) {
            return;
        }
    }
}

ErrorDiagram random_diagram(std::mt19937_64& rng, std::size_t max_points, std::vector<RawPoint>* raw = nullptr) {
    ErrorDiagram d;
    std::size_t budget = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(max_points)));
    while (budget > 0) {
        const std::int64_t birth = draw(rng, 0, 8);
        const bool infinite = draw(rng, 0, 6) == 0;
        const ExtendedInt death = infinite ? ExtendedInt::infinity() : ExtendedInt(birth + draw(rng, 1, 7));
        const Dim mult = std::min<std::size_t>(budget, static_cast<std::size_t>(draw(rng, 1, 2)));
        d.add(birth, death, mult);
        if (raw) {
            raw->push_back({birth, death, mult});
        }
        budget -= mult;
    }
    return d;
}

} // namespace

ErrorDiagram literal_p_intervals(std::span<const ErrorEvent> deficits,
                                 std::span<const ErrorEvent> surpluses, const MatchPolicy& policy) {
    ErrorDiagram out;
    if (deficits.empty()) {
        return out;
    }
    std::list<ErrorEvent> available(surpluses.begin(), surpluses.end());
    auto deficit_at = [&](std::size_t i) -> const ErrorEvent* {
        for (const auto& e : deficits) {
            if (e.index == i) {
                return &e;
            }
        }
        return nullptr;
    };
    const std::size_t first = deficits.front().index;
    const std::size_t last = deficits.back().index;
    for (std::size_t i = first; i <= last; ++i) {
        const ErrorEvent* d = deficit_at(i);
        if (d == nullptr) {
            continue;
        }
        auto pick = available.end();
        for (auto it = available.begin(); it != available.end(); ++it) {
            const bool later = !policy.require_subsequent || it->index > i;
            const bool fits = policy.magnitude_rule == MagnitudeRule::Exact ? it->magnitude == d->magnitude
                                                                            : it->magnitude >= d->magnitude;
            if (later && fits) {
                pick = it;
                break;
            }
        }
        if (pick == available.end()) {
            out.add(static_cast<std::int64_t>(i), ExtendedInt::infinity(), d->magnitude);
        } else {
            out.add(static_cast<std::int64_t>(i), static_cast<std::int64_t>(pick->index), d->magnitude);
            available.erase(pick);
        }
    }
    return out;
}

Distance brute_force_bottleneck(const ErrorDiagram& a, const ErrorDiagram& b) {
    // Each side: its own points followed by generic diagonal slots, one per
    // point of the other side.
    struct Slot {
        bool diagonal = false;
        std::int64_t birth = 0;
        ExtendedInt death = 0;
    };
    auto expand = [](const ErrorDiagram& d) {
        std::vector<Slot> out;
        for (const auto& p : d.points()) {
            for (Dim c = 0; c < p.multiplicity; ++c) {
                out.push_back({false, p.birth, p.death});
            }
        }
        return out;
    };
    std::vector<Slot> left = expand(a);
    std::vector<Slot> right = expand(b);
    const std::size_t na = left.size();
    const std::size_t nb = right.size();
    left.resize(na + nb, Slot{true});
    right.resize(na + nb, Slot{true});

    auto to_diagonal = [](const Slot& s) -> std::int64_t {
        if (s.death.is_infinite()) {
            return kUnmatchable;
        }
        return std::abs(s.death.value() - s.birth);
    };
    auto cost = [&](const Slot& x, const Slot& y) -> std::int64_t {
        if (x.diagonal && y.diagonal) {
            return 0;
        }
        if (x.diagonal) {
            return to_diagonal(y);
        }
        if (y.diagonal) {
            return to_diagonal(x);
        }
        if (x.death.is_infinite() != y.death.is_infinite()) {
            return kUnmatchable;
        }
        const std::int64_t db = 2 * std::abs(x.birth - y.birth);
        if (x.death.is_infinite()) {
            return db;
        }
        return std::max(db, 2 * std::abs(x.death.value() - y.death.value()));
    };

    std::vector<std::size_t> perm(left.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t best = kUnmatchable;
    do {
        std::int64_t worst = 0;
        for (std::size_t i = 0; i < left.size() && worst < best; ++i) {
            worst = std::max(worst, cost(left[i], right[perm[i]]));
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best == kUnmatchable ? Distance::infinity() : Distance::from_half_units(best);
}

Dim summed_persistent_dim(std::span<const RawPoint> points, std::int64_t i, std::int64_t j) {
    Dim total = 0;
    for (const auto& p : points) {
        if (p.death.is_infinite()) {
            continue;
        }
        if (p.birth <= i && p.death.value() <= j) {
            total += p.multiplicity;
        }
    }
    return total;
}

CheckResult check_hrn_shapes() {
    Tally t("hrn: build/validate/counts/round-trip for m<=4, k<=6");
    for (std::size_t m = 1; m <= 4; ++m) {
        std::vector<std::size_t> lengths(m, 3);
        while (true) {
            const Hrn h = build_hrn(m, lengths);
            const std::string tag = "m=" + std::to_string(m) + " k=" + show(lengths);
            t.expect(validate(h).ok(), tag + " fails validation");

            // Count by walking the construction: spine edges, then each
            // cycle contributes its edges minus the glued spine edge.
            std::size_t edges = 2 * m;
            std::size_t vertices = 2 * m + 1;
            for (std::size_t k : lengths) {
                edges += k - 1;
                vertices += k - 2;
            }
            t.expect(h.edges().size() == edges, tag + " edge count " + std::to_string(h.edges().size()));
            t.expect(h.vertices().size() == vertices, tag + " vertex count");

            for (std::size_t i = 1; i <= m; ++i) {
                const Subprogram sp = subprogram(h, i);
                std::set<VertexId> seen(sp.vertices.begin(), sp.vertices.end());
                bool closed = seen.size() == lengths[i - 1];
                for (std::size_t p = 0; p < sp.vertices.size(); ++p) {
                    closed = closed && h.has_edge(sp.vertices[p], sp.vertices[(p + 1) % sp.vertices.size()]);
                }
                t.expect(closed, tag + " subprogram " + std::to_string(i) + " is not a closed walk");
            }
            t.expect(import_graph(export_graph(h)) == h, tag + " export/import round trip");

            std::size_t pos = 0;
            while (pos < m && ++lengths[pos] == 7) {
                lengths[pos++] = 3;
            }
            if (pos == m) {
                break;
            }
        }
    }
    return t.finish();
}

CheckResult check_flow_closed_forms() {
    Tally t("dataflow: ignore-mode closed forms and growth, k<=5, m<=4, l<=3");
    for (std::size_t k = 1; k <= 5; ++k) {
        for (std::size_t passes = 1; passes <= 4; ++passes) {
            for (Dim ell = 0; ell <= 3; ++ell) {
                for (Dim initial = 0; initial <= 2; ++initial) {
                    for (bool beta_adds : {true, false}) {
                        const QuiverRep rep{1, std::vector<Dim>(k, 0), ell, initial};
                        const DataFlow flow = simulate_flow(rep, passes, {CapacityMode::Ignore, beta_adds, false});
                        const Dim expected = beta_adds ? initial + ell * (k * passes - 1)
                                                       : initial + ell * passes * (k - 1);
                        const std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(passes) +
                                                " l=" + std::to_string(ell) + (beta_adds ? " beta+" : " beta0");
                        t.expect(final_data_dimension(flow) == expected, tag + " theta");

                        bool growth_ok = true;
                        Dim previous = 0;
                        for (std::size_t q = 1; q <= passes; ++q) {
                            for (std::size_t i = 1; i <= k; ++i) {
                                const Dim d = flow.dim(i, q);
                                if (q == 1 && i == 1) {
                                    previous = d;
                                    continue;
                                }
                                const bool wraps = i == 1;
                                const bool strict = ell > 0 && (beta_adds || !wraps);
                                growth_ok = growth_ok && (strict ? d > previous : d >= previous);
                                previous = d;
                            }
                        }
                        t.expect(growth_ok, tag + " growth");
                    }
                }
            }
        }
    }
    return t.finish();
}

CheckResult check_flow_cap_dominance() {
    Tally t("dataflow: cap-mode grid <= ignore-mode grid, deterministic");
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const auto k = static_cast<std::size_t>(draw(rng, 3, 6));
        std::vector<Dim> caps(k);
        for (auto& c : caps) {
            c = static_cast<Dim>(draw(rng, 0, 9));
        }
        const QuiverRep rep{1, caps, static_cast<Dim>(draw(rng, 0, 3)), static_cast<Dim>(draw(rng, 0, caps[0]))};
        const auto passes = static_cast<std::size_t>(draw(rng, 1, 4));
        const bool beta = draw(rng, 0, 1) == 1;
        const DataFlow capped = simulate_flow(rep, passes, {CapacityMode::Cap, beta, false});
        const DataFlow free = simulate_flow(rep, passes, {CapacityMode::Ignore, beta, false});
        bool ok = capped == simulate_flow(rep, passes, {CapacityMode::Cap, beta, false});
        for (std::size_t i = 1; i <= k; ++i) {
            for (std::size_t q = 1; q <= passes; ++q) {
                ok = ok && capped.dim(i, q) <= free.dim(i, q) && capped.dim(i, q) <= caps[i - 1];
            }
        }
        t.expect(ok, "trial " + std::to_string(trial) + " caps=" + show(caps));
    }
    return t.finish();
}

CheckResult check_zero_absorption(std::size_t scenarios, std::uint64_t seed) {
    Tally t("zero-capacity absorption with l = 0 (" + std::to_string(scenarios) + " random scenarios)");
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < scenarios; ++trial) {
        const auto m = static_cast<std::size_t>(draw(rng, 1, 4));
        const auto target = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(m) - 1));
        nlohmann::json lengths = nlohmann::json::array();
        nlohmann::json subprograms = nlohmann::json::array();
        nlohmann::json deltas = nlohmann::json::array();
        for (std::size_t n = 0; n < m; ++n) {
            const auto k = static_cast<std::size_t>(draw(rng, 3, 6));
            std::vector<Dim> caps(k);
            for (auto& c : caps) {
                c = static_cast<Dim>(draw(rng, 0, 8));
            }
            Dim ell = static_cast<Dim>(draw(rng, 0, 3));
            if (n == target) {
                ell = 0;
                caps[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(k) - 1))] = 0;
            }
            nlohmann::json initial;
            if (draw(rng, 0, 1) == 0) {
                initial = {{"fixed", draw(rng, 0, static_cast<std::int64_t>(caps[0]))}};
            } else {
                initial = {{"uniform", {{"lo", 0}, {"hi", caps[0]}}}};
            }
            lengths.push_back(k);
            subprograms.push_back(
                {{"capacities", caps}, {"ell", ell}, {"initial", initial}, {"iterations", draw(rng, 1, 4)}});
            deltas.push_back(draw(rng, 0, 5));
        }
        const nlohmann::json doc{{"network", {{"m", m}, {"cycle_lengths", lengths}}},
                                 {"subprograms", subprograms},
                                 {"desired_outputs", deltas},
                                 {"policy", {{"capacity_mode", "cap"}, {"beta_adds", draw(rng, 0, 1) == 1}}},
                                 {"seed", static_cast<std::uint64_t>(rng())}};
        const InstanceReport report = run_instance(load_scenario(doc));
        const Dim theta = report.subprograms[target].classification.theta;
        t.expect(theta == 0, "trial " + std::to_string(trial) + " subprogram " + std::to_string(target + 1) +
                                 " theta=" + std::to_string(theta));
    }
    return t.finish();
}

CheckResult check_cone_detection_absolute() {
    Tally t("cone kernel (absolute) nonzero exactly at faulty/able subprograms, N<=5, margins<=3");
    for (std::size_t n = 1; n <= 5; ++n) {
        for_each_profile(n, 3, [&](const MarginProfile& profile) {
            bool ok = true;
            for (std::size_t k = 1; k <= n; ++k) {
                const bool faulty = profile.at(k).deficit > 0;
                const bool able = profile.at(k).surplus > 0;
                ok = ok && (cone_homology_dim(SheafKind::Error, profile, k, KernelMode::Absolute) > 0) == faulty;
                ok = ok && (cone_homology_dim(SheafKind::Fix, profile, k, KernelMode::Absolute) > 0) == able;
                ok = ok && cone_homology_dim(SheafKind::Error, profile, k, KernelMode::Absolute) >=
                               cone_homology_dim(SheafKind::Error, profile, k, KernelMode::Incremental);
                ok = ok && cone_homology_dim(SheafKind::Fix, profile, k, KernelMode::Absolute) >=
                               cone_homology_dim(SheafKind::Fix, profile, k, KernelMode::Incremental);
            }
            t.expect(ok, "profile " + show(profile));
        });
    }
    return t.finish();
}

CheckResult check_cone_detection_incremental() {
    Tally t("cone kernel (incremental) matches absolute when no two neighbours share a type, N<=5");
    for (std::size_t n = 1; n <= 5; ++n) {
        for_each_profile(n, 3, [&](const MarginProfile& profile) {
            for (std::size_t k = 2; k <= n; ++k) {
                const auto& a = profile.at(k - 1);
                const auto& b = profile.at(k);
                if ((a.deficit > 0 && b.deficit > 0) || (a.surplus > 0 && b.surplus > 0)) {
                    return;
                }
            }
            bool ok = true;
            for (std::size_t k = 1; k <= n; ++k) {
                const bool faulty = profile.at(k).deficit > 0;
                const bool able = profile.at(k).surplus > 0;
                const Dim err = cone_homology_dim(SheafKind::Error, profile, k, KernelMode::Incremental);
                const Dim fix = cone_homology_dim(SheafKind::Fix, profile, k, KernelMode::Incremental);
                ok = ok && (err > 0) == faulty && (fix > 0) == able;
                ok = ok && err == cone_homology_dim(SheafKind::Error, profile, k, KernelMode::Absolute);
                ok = ok && fix == cone_homology_dim(SheafKind::Fix, profile, k, KernelMode::Absolute);
            }
            t.expect(ok, "profile " + show(profile));
        });
    }
    return t.finish();
}

CheckResult check_chain_locality() {
    Tally t("chain dims depend only on their own subprogram; Cech homology is well defined");
    for (std::size_t n = 1; n <= 4; ++n) {
        for_each_profile(n, 2, [&](const MarginProfile& profile) {
            const CofilteredCover cover(n);
            for (SheafKind kind : {SheafKind::Error, SheafKind::Fix}) {
                const ChainData data = cech_chain_data(kind, profile, cover);
                bool ok = data.chain_dims.size() == n + 1;
                for (std::size_t r = 1; r <= n; ++r) {
                    const auto& e = profile.at(r);
                    ok = ok && data.chain_dims[r] == (kind == SheafKind::Error ? e.deficit : e.surplus);
                    ok = ok && data.boundary_ranks[r] <= std::min(data.chain_dims[r], data.chain_dims[r - 1]);
                    ok = ok && data.boundary_ranks[r] + data.boundary_ranks[r - 1] <= data.chain_dims[r - 1];
                }
                // Euler characteristic of the complex equals that of its homology.
                const auto homology = cech_homology_dims(data);
                std::int64_t chi_chain = 0;
                std::int64_t chi_homology = 0;
                for (std::size_t r = 0; r <= n; ++r) {
                    const std::int64_t sign = r % 2 == 0 ? 1 : -1;
                    chi_chain += sign * static_cast<std::int64_t>(data.chain_dims[r]);
                    chi_homology += sign * static_cast<std::int64_t>(homology[r]);
                }
                ok = ok && chi_chain == chi_homology;
                t.expect(ok, std::string(to_string(kind)) + " profile " + show(profile));
            }
        });
    }
    return t.finish();
}

CheckResult check_p_interval_oracle() {
    Tally t("p-interval generation vs literal greedy oracle, |S1|,|S2|<=4, magnitudes<=3, both rules");
    for (std::size_t n1 = 0; n1 <= 4; ++n1) {
        for (std::size_t n2 = 0; n2 <= 4; ++n2) {
            const std::size_t total = n1 + n2;
            // Which of the positions 1..total hold deficits.
            std::vector<bool> is_deficit(total, false);
            std::fill(is_deficit.begin(), is_deficit.begin() + static_cast<std::ptrdiff_t>(n1), true);
            std::sort(is_deficit.begin(), is_deficit.end());
            do {
                std::vector<Dim> mags(total, 1);
                while (true) {
                    std::vector<ErrorEvent> s1;
                    std::vector<ErrorEvent> s2;
                    for (std::size_t p = 0; p < total; ++p) {
                        (is_deficit[p] ? s1 : s2).push_back({p + 1, mags[p]});
                    }
                    for (int variant = 0; variant < 4; ++variant) {
                        const bool subsequent = variant % 2 == 0;
                        const MatchPolicy policy{variant < 2 ? MagnitudeRule::Exact : MagnitudeRule::Partial,
                                                 subsequent};
                        const ErrorDiagram got = generate_p_intervals(s1, s2, policy);
                        const ErrorDiagram want = literal_p_intervals(s1, s2, policy);

                        Dim mass_in = 0;
                        for (const auto& e : s1) {
                            mass_in += e.magnitude;
                        }
                        std::set<std::int64_t> births;
                        std::set<std::int64_t> deaths;
                        bool injective = true;
                        for (const auto& p : got.points()) {
                            injective = injective && births.insert(p.birth).second;
                            if (!p.at_infinity()) {
                                injective = injective && deaths.insert(p.death.value()).second;
                            }
                        }
                        const bool every_deficit_once = births.size() == s1.size();
                        const bool ok = got == want && injective && every_deficit_once &&
                                        got.total_multiplicity() == mass_in;
                        if (!ok) {
                            std::ostringstream what;
                            what << "magnitudes " << show(mags) << " rule=" << to_string(policy.magnitude_rule)
                                 << " subsequent=" << subsequent << " got "
                                 << show(got) << " want " << show(want);
                            t.fail(what.str());
                        } else {
                            t.pass();
                        }
                    }
                    std::size_t pos = 0;
                    while (pos < total && ++mags[pos] == 4) {
                        mags[pos++] = 1;
                    }
                    if (pos == total) {
                        break;
                    }
                }
            } while (std::next_permutation(is_deficit.begin(), is_deficit.end()));
        }
    }
    return t.finish();
}

CheckResult check_bottleneck_oracle(std::size_t pairs, std::uint64_t seed) {
    Tally t("bottleneck threshold search == brute force over bijections (" + std::to_string(pairs) +
            " pairs, <=6 expanded points)");
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < pairs; ++trial) {
        const auto first = static_cast<std::size_t>(draw(rng, 0, 6));
        const ErrorDiagram a = random_diagram(rng, first);
        const ErrorDiagram b = random_diagram(rng, 6 - a.total_multiplicity());
        const Distance fast = bottleneck_distance(a, b);
        const Distance slow = brute_force_bottleneck(a, b);
        t.expect(fast == slow, show(a) + " vs " + show(b) + ": " + fast.to_string() + " != " + slow.to_string());
    }
    return t.finish();
}

CheckResult check_bottleneck_pseudometric(std::size_t triples, std::uint64_t seed) {
    Tally t("bottleneck pseudometric axioms (" + std::to_string(triples) + " triples, <=5 points each)");
    std::mt19937_64 rng(seed);
    auto plus = [](const Distance& x, const Distance& y) {
        if (x.is_infinite() || y.is_infinite()) {
            return Distance::infinity();
        }
        return Distance::from_half_units(x.half_units() + y.half_units());
    };
    for (std::size_t trial = 0; trial < triples; ++trial) {
        const ErrorDiagram x = random_diagram(rng, 5);
        const ErrorDiagram y = random_diagram(rng, 5);
        const ErrorDiagram z = random_diagram(rng, 5);
        const Distance xy = bottleneck_distance(x, y);
        const Distance yz = bottleneck_distance(y, z);
        const Distance xz = bottleneck_distance(x, z);
        bool ok = bottleneck_distance(x, x) == Distance::from_half_units(0);
        ok = ok && xy == bottleneck_distance(y, x) && yz == bottleneck_distance(z, y) && xz == bottleneck_distance(z, x);
        ok = ok && !(plus(xy, yz) < xz);
        // Cross-check against the factorial oracle where it stays cheap.
        if (x.total_multiplicity() + y.total_multiplicity() <= 7) {
            ok = ok && xy == brute_force_bottleneck(x, y);
        }
        t.expect(ok, show(x) + " / " + show(y) + " / " + show(z));
    }
    return t.finish();
}

CheckResult check_persistent_dim(std::size_t diagrams, std::uint64_t seed) {
    Tally t("persistent error dims: summation oracle and monotonicity (" + std::to_string(diagrams) + " diagrams)");
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < diagrams; ++trial) {
        std::vector<RawPoint> raw;
        const ErrorDiagram d = random_diagram(rng, 8, &raw);
        bool ok = true;
        for (std::int64_t i = -1; i <= 17; ++i) {
            for (std::int64_t j = -1; j <= 17; ++j) {
                const Dim value = persistent_error_dim(d, i, j);
                ok = ok && value == summed_persistent_dim(raw, i, j);
                ok = ok && value <= persistent_error_dim(d, i + 1, j);
                ok = ok && value <= persistent_error_dim(d, i, j + 1);
            }
        }
        t.expect(ok, show(d));
    }
    return t.finish();
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
    return {check_hrn_shapes(),
            check_flow_closed_forms(),
            check_flow_cap_dominance(),
            check_zero_absorption(100, seed),
            check_cone_detection_absolute(),
            check_cone_detection_incremental(),
            check_chain_locality(),
            check_p_interval_oracle(),
            check_bottleneck_oracle(1000, seed + 1),
            check_bottleneck_pseudometric(1000, seed + 2),
            check_persistent_dim(500, seed + 3)};
}

} // namespace hrnflow::checks
