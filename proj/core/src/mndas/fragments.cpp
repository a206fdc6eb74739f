#include "qaco/mndas/fragments.hpp"

#include <numbers>
#include <stdexcept>

namespace qaco::mndas {

using qsim::GateOp;

namespace {

void x_on_all(Circuit& c, const std::vector<Qubit>& qubits) {
  for (Qubit q : qubits) c.add(GateOp::x(q));
}

}  // namespace

Circuit init_fragment(const RegisterLayout& layout) {
  Circuit c(layout.total_qubits());
  for (Qubit q : layout.path_register()) c.add(GateOp::h(q));
  return c;
}

Circuit path_selector_fragment(std::size_t path_id, const RegisterLayout& layout) {
  const std::size_t x = layout.path_qubit_count();
  if (path_id >= (std::size_t{1} << x)) {
    throw std::out_of_range("path id " + std::to_string(path_id) + " does not fit in " + std::to_string(x) +
                            " path qubits");
  }
  std::vector<Qubit> zero_bits;
  for (std::size_t l = 0; l < x; ++l) {
    if (((path_id >> l) & 1U) == 0) zero_bits.push_back(layout.path(l));
  }
  const auto paths = layout.path_register();

  Circuit c(layout.total_qubits());
  x_on_all(c, zero_bits);
  c.add(GateOp::mct(paths, layout.a1()));
  c.add(GateOp::mct(paths, layout.a2()));
  x_on_all(c, zero_bits);
  return c;
}

Circuit pheromone_deposition_fragment(const RegisterLayout& layout) {
  const std::size_t d = layout.box_qubit_count();
  Circuit c(layout.total_qubits());
  for (std::size_t m = d - 1; m-- > 0;) {
    c.add(GateOp::ccnot(layout.a1(), layout.box(m), layout.box(m + 1)));
  }
  c.add(GateOp::cnot(layout.a1(), layout.box(0)));
  return c;
}

Circuit pheromone_evaporation_fragment(const RegisterLayout& layout) {
  const std::size_t d = layout.box_qubit_count();
  Circuit c(layout.total_qubits());
  c.add(GateOp::cnot(layout.a2(), layout.box(0)));
  for (std::size_t m = 0; m + 1 < d; ++m) {
    c.add(GateOp::ccnot(layout.a2(), layout.box(m), layout.box(m + 1)));
  }
  return c;
}

Circuit update_pheromone_fragment(const RegisterLayout& layout, GuardMode guard, bool include_evaporation) {
  const auto box = layout.box_register();
  Circuit c(layout.total_qubits());

  if (guard == GuardMode::Verbatim) {
    c.add(GateOp::mct(box, layout.a1()));
  } else {
    if (!layout.has_guard_flag()) throw std::invalid_argument("corrected guard needs a guard-flag qubit");
    const Qubit flag = layout.guard_flag();
    auto box_and = [&](Qubit extra) {
      auto controls = box;
      controls.push_back(extra);
      return controls;
    };
    // Full & selected: park the selection bit in the flag, clear a1.
    c.add(GateOp::mct(box_and(layout.a1()), flag));
    c.add(GateOp::cnot(flag, layout.a1()));
    // Full & unselected: clear a2.
    c.add(GateOp::x(flag));
    c.add(GateOp::mct(box_and(flag), layout.a2()));
    c.add(GateOp::x(flag));
  }

  c.append(pheromone_deposition_fragment(layout));
  if (!include_evaporation) return c;

  if (guard == GuardMode::Verbatim) c.add(GateOp::mct(box, layout.a2()));
  x_on_all(c, box);
  c.add(GateOp::mct(box, layout.a2()));
  x_on_all(c, box);
  c.append(pheromone_evaporation_fragment(layout));
  return c;
}

Circuit iteration_circuit(std::uint64_t t, const ProblemInstance& instance, const RegisterLayout& layout) {
  Circuit c(layout.total_qubits());
  for (std::size_t path : select_paths(t, instance.weights())) {
    c.append(path_selector_fragment(path, layout));
  }
  c.add(GateOp::x(layout.a2()));
  c.append(update_pheromone_fragment(layout, instance.modes().guard, instance.modes().evaporation.active_at(t)));
  c.add(GateOp::reset(layout.a1()));
  c.add(GateOp::reset(layout.a2()));
  if (layout.has_guard_flag()) c.add(GateOp::reset(layout.guard_flag()));
  return c;
}

Circuit marking_fragment(const RegisterLayout& layout, MarkingMode marking) {
  Circuit c(layout.total_qubits());
  c.add(GateOp::mct(layout.box_register(), layout.target()));
  if (marking == MarkingMode::VerbatimMsb) {
    c.add(GateOp::cphase(layout.target(), layout.path(layout.path_qubit_count() - 1), std::numbers::pi));
  } else {
    // Z on a_target.
    c.add(GateOp::h(layout.target()));
    c.add(GateOp::x(layout.target()));
    c.add(GateOp::h(layout.target()));
  }
  return c;
}

Circuit diffusion_fragment(const RegisterLayout& layout) {
  const auto paths = layout.path_register();
  const Qubit top = paths.back();
  std::vector<Qubit> rest(paths.begin(), paths.end() - 1);

  Circuit c(layout.total_qubits());
  for (Qubit q : paths) c.add(GateOp::h(q));
  x_on_all(c, paths);
  c.add(GateOp::h(top));
  c.add(GateOp::mct(rest, top));
  c.add(GateOp::h(top));
  x_on_all(c, paths);
  for (Qubit q : paths) c.add(GateOp::h(q));
  return c;
}

Circuit measurement_fragment(const RegisterLayout& layout) {
  Circuit c(layout.total_qubits());
  for (Qubit q : layout.path_register()) c.add(GateOp::measure(q));
  return c;
}

}  // namespace qaco::mndas
