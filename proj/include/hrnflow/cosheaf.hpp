#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hrnflow/dataflow.hpp"

namespace hrnflow {

// Sorted, duplicate-free set of 1-based subprogram indexes.
using IndexSet = std::vector<std::size_t>;

// ErrorSheaf records deficits, FixSheaf records surpluses.
enum class SheafKind { Error, Fix };

std::string_view to_string(SheafKind kind);

/**
 * The nested cover U0 ⊇ U1 ⊇ ... ⊇ UN of the real line where subprogram k
 * lies in U_r exactly when r <= k. Only the subprogram content of each open
 * set is represented; U0 is the whole line and holds every index.
 */
class CofilteredCover {
public:
    explicit CofilteredCover(std::size_t subprogram_count);

    std::size_t subprogram_count() const noexcept { return n_; }
    bool contains(std::size_t r, std::size_t k) const noexcept { return k >= 1 && k <= n_ && r <= k; }
    IndexSet set(std::size_t r) const;

private:
    std::size_t n_;
};

CofilteredCover build_cover(std::size_t subprogram_count);

// Value of the deficit (Error) or surplus (Fix) precosheaf on an open set,
// read off at the smallest subprogram index in the set. Empty sets give 0.
Dim evaluate_precosheaf(SheafKind kind, const MarginProfile& profile, const IndexSet& open_set);

/**
 * Čech chain data over the cofiltered cover. chain_dims[k] is the single
 * summand F(U_k) (nested intersections collapse to U_k). boundary_ranks[k]
 * is the rank of the boundary C_k -> C_{k-1}, with boundary_ranks[0] = 0.
 * Ranks are canonical full-rank values, reduced where needed so that
 * consecutive boundaries compose to zero.
 */
struct ChainData {
    SheafKind kind = SheafKind::Error;
    std::vector<Dim> chain_dims;
    std::vector<Dim> boundary_ranks;
};

ChainData cech_chain_data(SheafKind kind, const MarginProfile& profile, const CofilteredCover& cover);

std::vector<Dim> cech_homology_dims(const ChainData& data);

// Dimension-level exactness of ⊕F(Ui ∩ Uj) -> ⊕F(Ui) -> F(U) -> 0 with
// coordinate corestriction maps. Throws if the subcover does not union to U.
bool cosheaf_axiom_check(SheafKind kind, const MarginProfile& profile, const IndexSet& open_set,
                         const std::vector<IndexSet>& subcover);

struct MapDescriptor {
    Dim domain_dim = 0;
    Dim codomain_dim = 0;
    Dim rank = 0;

    bool operator==(const MapDescriptor&) const = default;
};

MapDescriptor phi_projection(SheafKind kind, const MarginProfile& profile, std::size_t k);

enum class KernelMode { Absolute, Incremental };

std::string_view to_string(KernelMode mode);
std::optional<KernelMode> parse_kernel_mode(std::string_view text);

Dim cone_homology_dim(SheafKind kind, const MarginProfile& profile, std::size_t k, KernelMode mode);

struct ConeRow {
    std::size_t k = 0;
    Dim chain_error = 0;
    Dim chain_fix = 0;
    Dim phi_rank_error = 0;
    Dim phi_rank_fix = 0;
    Dim cone_error_absolute = 0;
    Dim cone_error_incremental = 0;
    Dim cone_fix_absolute = 0;
    Dim cone_fix_incremental = 0;

    Dim cone(SheafKind kind, KernelMode mode) const;
    bool operator==(const ConeRow&) const = default;
};

// One row per degree k = 1..N.
std::vector<ConeRow> cone_table(const MarginProfile& profile);

std::string cone_table_to_csv(const std::vector<ConeRow>& rows);

} // namespace hrnflow
