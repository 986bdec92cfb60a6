#include "hrnflow/cosheaf.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <sstream>

namespace hrnflow {

std::string_view to_string(SheafKind kind) {
    return kind == SheafKind::Error ? "error" : "fix";
}

std::string_view to_string(KernelMode mode) {
    return mode == KernelMode::Absolute ? "absolute" : "incremental";
}

std::optional<KernelMode> parse_kernel_mode(std::string_view text) {
    if (text == "absolute") {
        return KernelMode::Absolute;
    }
    if (text == "incremental") {
        return KernelMode::Incremental;
    }
    return std::nullopt;
}

CofilteredCover::CofilteredCover(std::size_t subprogram_count) : n_(subprogram_count) {
    if (n_ == 0) {
        throw DomainError("a cofiltered cover needs at least one subprogram");
    }
}

IndexSet CofilteredCover::set(std::size_t r) const {
    if (r > n_) {
        throw DomainError("cover level " + std::to_string(r) + " out of range 0.." +
                          std::to_string(n_));
    }
    IndexSet out;
    for (std::size_t k = std::max<std::size_t>(r, 1); k <= n_; ++k) {
        out.push_back(k);
    }
    return out;
}

CofilteredCover build_cover(std::size_t subprogram_count) {
    return CofilteredCover(subprogram_count);
}

namespace {

Dim margin(SheafKind kind, const MarginEntry& e) {
    return kind == SheafKind::Error ? e.deficit : e.surplus;
}

void check_degree(const MarginProfile& profile, std::size_t k) {
    if (k < 1 || k > profile.size()) {
        throw DomainError("degree " + std::to_string(k) + " out of range 1.." +
                          std::to_string(profile.size()));
    }
}

// Exact rank over GF(p). The matrices built here are signed incidence
// matrices with 0/±1 entries, whose rank does not depend on the field.
std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows) {
    constexpr std::int64_t p = 1'000'000'007;
    auto norm = [](std::int64_t x) { return ((x % p) + p) % p; };
    auto inverse = [&](std::int64_t a) {
        std::int64_t result = 1;
        std::int64_t base = a;
        for (std::int64_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1) {
                result = result * base % p;
            }
            base = base * base % p;
        }
        return result;
    };
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    for (auto& row : rows) {
        for (auto& x : row) {
            x = norm(x);
        }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                                  [c](const auto& row) { return row[c] != 0; });
        if (pivot == rows.end()) {
            continue;
        }
        std::swap(*pivot, rows[rank]);
        const std::int64_t inv = inverse(rows[rank][c]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) {
                continue;
            }
            const std::int64_t factor = rows[r][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) {
                rows[r][j] = norm(rows[r][j] - factor * rows[rank][j]);
            }
        }
        ++rank;
    }
    return rank;
}

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet normalized(IndexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

} // namespace

Dim evaluate_precosheaf(SheafKind kind, const MarginProfile& profile, const IndexSet& open_set) {
    if (open_set.empty()) {
        return 0;
    }
    const std::size_t distinguished = *std::min_element(open_set.begin(), open_set.end());
    return margin(kind, profile.at(distinguished));
}

ChainData cech_chain_data(SheafKind kind, const MarginProfile& profile, const CofilteredCover& cover) {
    if (cover.subprogram_count() != profile.size()) {
        throw DomainError("cover built for " + std::to_string(cover.subprogram_count()) +
                          " subprograms but profile has " + std::to_string(profile.size()));
    }
    const std::size_t n = profile.size();
    ChainData data;
    data.kind = kind;
    data.chain_dims.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        data.chain_dims.push_back(evaluate_precosheaf(kind, profile, cover.set(k)));
    }
    data.boundary_ranks.assign(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        // The image of the incoming boundary must fit in the kernel of the
        // previous one for the composite to vanish.
        const Dim room = data.chain_dims[k - 1] - data.boundary_ranks[k - 1];
        data.boundary_ranks[k] = std::min(data.chain_dims[k], room);
    }
    return data;
}

std::vector<Dim> cech_homology_dims(const ChainData& data) {
    const std::size_t n = data.chain_dims.size();
    std::vector<Dim> out(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const Dim outgoing = data.boundary_ranks[k];
        const Dim incoming = k + 1 < n ? data.boundary_ranks[k + 1] : 0;
        out[k] = data.chain_dims[k] - outgoing - incoming;
    }
    return out;
}

bool cosheaf_axiom_check(SheafKind kind, const MarginProfile& profile, const IndexSet& open_set,
                         const std::vector<IndexSet>& subcover) {
    const IndexSet target = normalized(open_set);
    for (std::size_t k : target) {
        if (k < 1 || k > profile.size()) {
            throw DomainError("open set mentions unknown subprogram " + std::to_string(k));
        }
    }
    if (subcover.empty()) {
        throw DomainError("subcover is empty");
    }
    std::vector<IndexSet> pieces;
    IndexSet covered;
    for (const auto& raw : subcover) {
        IndexSet piece = normalized(raw);
        if (!std::includes(target.begin(), target.end(), piece.begin(), piece.end())) {
            throw DomainError("subcover member is not contained in the open set");
        }
        covered.insert(covered.end(), piece.begin(), piece.end());
        pieces.push_back(std::move(piece));
    }
    if (normalized(covered) != target) {
        throw DomainError("subcover does not union to the open set");
    }

    // Coordinate corestriction k^a -> k^b sends e_j to e_j for j < min(a, b).
    const auto top = static_cast<std::size_t>(evaluate_precosheaf(kind, profile, target));
    std::vector<std::size_t> piece_dims;
    std::vector<std::size_t> offsets;
    std::size_t middle = 0;
    for (const auto& piece : pieces) {
        offsets.push_back(middle);
        piece_dims.push_back(static_cast<std::size_t>(evaluate_precosheaf(kind, profile, piece)));
        middle += piece_dims.back();
    }

    // augmentation: middle -> top, stored as rows of its transpose.
    std::vector<std::vector<std::int64_t>> augmentation(middle, std::vector<std::int64_t>(top, 0));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = 0; j < std::min(piece_dims[i], top); ++j) {
            augmentation[offsets[i] + j][j] = 1;
        }
    }

    // boundary: one row per basis vector of ⊕_{i<l} F(Ui ∩ Ul).
    std::vector<std::vector<std::int64_t>> boundary;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t l = i + 1; l < pieces.size(); ++l) {
            const auto overlap =
                static_cast<std::size_t>(evaluate_precosheaf(kind, profile, intersect(pieces[i], pieces[l])));
            for (std::size_t j = 0; j < overlap; ++j) {
                std::vector<std::int64_t> row(middle, 0);
                if (j < piece_dims[i]) {
                    row[offsets[i] + j] += 1;
                }
                if (j < piece_dims[l]) {
                    row[offsets[l] + j] -= 1;
                }
                boundary.push_back(std::move(row));
            }
        }
    }

    const std::size_t augmentation_rank = middle == 0 ? 0 : rank_mod_p(augmentation);
    if (augmentation_rank != top) {
        return false;
    }
    for (const auto& row : boundary) {
        for (std::size_t c = 0; c < top; ++c) {
            std::int64_t sum = 0;
            for (std::size_t m = 0; m < middle; ++m) {
                sum += row[m] * augmentation[m][c];
            }
            if (sum != 0) {
                return false;
            }
        }
    }
    const std::size_t boundary_rank = boundary.empty() ? 0 : rank_mod_p(boundary);
    return boundary_rank == middle - augmentation_rank;
}

MapDescriptor phi_projection(SheafKind kind, const MarginProfile& profile, std::size_t k) {
    check_degree(profile, k);
    const CofilteredCover cover(profile.size());
    const Dim domain = evaluate_precosheaf(kind, profile, cover.set(k));
    // U0 \ U1 holds no subprogram, so the first projection lands in a trivial
    // term rather than in a second copy of F(U1).
    const Dim codomain = k == 1 ? 0 : evaluate_precosheaf(kind, profile, cover.set(k - 1));
    return {domain, codomain, std::min(domain, codomain)};
}

Dim cone_homology_dim(SheafKind kind, const MarginProfile& profile, std::size_t k, KernelMode mode) {
    check_degree(profile, k);
    if (mode == KernelMode::Absolute) {
        return margin(kind, profile.at(k));
    }
    const MapDescriptor phi = phi_projection(kind, profile, k);
    return phi.domain_dim - phi.rank;
}

Dim ConeRow::cone(SheafKind kind, KernelMode mode) const {
    if (kind == SheafKind::Error) {
        return mode == KernelMode::Absolute ? cone_error_absolute : cone_error_incremental;
    }
    return mode == KernelMode::Absolute ? cone_fix_absolute : cone_fix_incremental;
}

std::vector<ConeRow> cone_table(const MarginProfile& profile) {
    std::vector<ConeRow> rows;
    for (std::size_t k = 1; k <= profile.size(); ++k) {
        const auto phi_error = phi_projection(SheafKind::Error, profile, k);
        const auto phi_fix = phi_projection(SheafKind::Fix, profile, k);
        rows.push_back({k, phi_error.domain_dim, phi_fix.domain_dim, phi_error.rank, phi_fix.rank,
                        cone_homology_dim(SheafKind::Error, profile, k, KernelMode::Absolute),
                        cone_homology_dim(SheafKind::Error, profile, k, KernelMode::Incremental),
                        cone_homology_dim(SheafKind::Fix, profile, k, KernelMode::Absolute),
                        cone_homology_dim(SheafKind::Fix, profile, k, KernelMode::Incremental)});
    }
    return rows;
}

std::string cone_table_to_csv(const std::vector<ConeRow>& rows) {
    std::ostringstream out;
    out << "k,chain_error,chain_fix,phi_rank_error,phi_rank_fix,cone_error_absolute,"
           "cone_error_incremental,cone_fix_absolute,cone_fix_incremental\n";
    for (const auto& r : rows) {
        out << r.k << ',' << r.chain_error << ',' << r.chain_fix << ',' << r.phi_rank_error << ','
            << r.phi_rank_fix << ',' << r.cone_error_absolute << ',' << r.cone_error_incremental
            << ',' << r.cone_fix_absolute << ',' << r.cone_fix_incremental << '\n';
    }
    return out.str();
}

} // namespace hrnflow
