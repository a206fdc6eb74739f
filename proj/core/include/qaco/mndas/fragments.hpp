#pragma once

#include <cstdint>

#include "qaco/mndas/instance.hpp"
#include "qaco/mndas/layout.hpp"
#include "qaco/qsim/circuit.hpp"

namespace qaco::mndas {

using qsim::Circuit;

/// H on every path qubit.
Circuit init_fragment(const RegisterLayout& layout);

/// X on the path qubits whose bit of `path_id` is 0, MCT(paths -> a1),
/// MCT(paths -> a2), then the same X gates again.
Circuit path_selector_fragment(std::size_t path_id, const RegisterLayout& layout);

/// CCNOT(a1, ph_m, ph_m+1) for m = d-2 down to 0, then CNOT(a1, ph0).
Circuit pheromone_deposition_fragment(const RegisterLayout& layout);

/// CNOT(a2, ph0), then CCNOT(a2, ph_m, ph_m+1) for m = 0 up to d-2. Inverse of
/// the deposition cascade with a2 as the control.
Circuit pheromone_evaporation_fragment(const RegisterLayout& layout);

/// Guarded pheromone update.
///
/// Verbatim guard, in order: MCT(box -> a1), deposition, MCT(box -> a2),
/// X(box), MCT(box -> a2), X(box), evaporation. A selected branch whose
/// deposition fills the box is therefore evaporated in the same pass, and an
/// unselected full box gets a1 raised and wraps to empty.
///
/// Corrected guard (needs the guard flag f): before deposition both ancillas
/// of a full-box branch are cleared, with the selection bit parked in f:
///   MCT(box + a1 -> f), CNOT(f -> a1), X(f), MCT(box + f -> a2), X(f)
/// then deposition, X(box), MCT(box -> a2), X(box), evaporation. Full boxes
/// are left alone in both selected and unselected branches, and a box filled
/// by this pass is not evaporated. f is cleared by the end-of-iteration reset.
///
/// With `include_evaporation` false everything after the deposition cascade
/// is omitted.
Circuit update_pheromone_fragment(const RegisterLayout& layout, GuardMode guard, bool include_evaporation);

/// One full ant_Execute pass for iteration t: selector fragments for the
/// selected paths, NOT(a2), the guarded update, then resets of a1, a2 and the
/// guard flag.
Circuit iteration_circuit(std::uint64_t t, const ProblemInstance& instance, const RegisterLayout& layout);

/// MCT(box -> a_target) and the phase mark selected by `marking`.
Circuit marking_fragment(const RegisterLayout& layout, MarkingMode marking);

/// Inversion about the mean on the path qubits: H, X, multi-controlled Z
/// (as H-MCT-H on p(x-1)), X, H. Equals -(2|s><s| - I).
Circuit diffusion_fragment(const RegisterLayout& layout);

/// MEASURE on every path qubit.
Circuit measurement_fragment(const RegisterLayout& layout);

}  // namespace qaco::mndas
