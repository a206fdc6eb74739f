#include "qaco/mndas/oracle.hpp"

#include "qaco/mndas/box.hpp"

namespace qaco::mndas {

BoxAutomaton::BoxAutomaton(ProblemInstance instance)
    : instance_(std::move(instance)), boxes_(instance_.padded_paths(), 0) {}

void BoxAutomaton::step() {
  ++t_;
  const std::size_t d = instance_.box_qubits();
  const std::uint64_t full = full_box(d);
  const bool evaporating = instance_.modes().evaporation.active_at(t_);
  const bool corrected = instance_.modes().guard == GuardMode::Corrected;

  for (std::size_t path = 0; path < boxes_.size(); ++path) {
    const PathWeight w = instance_.weight(path);
    const bool selected = w.is_finite() && t_ % w.value() == 0;
    // Selector raises both ancillas on the selected branch, then a2 is
    // inverted on every branch.
    bool a1 = selected;
    bool a2 = !selected;
    std::uint64_t& box = boxes_[path];

    if (corrected) {
      const bool was_full = box == full;
      const bool flag = was_full && a1;
      if (flag) a1 = !a1;
      if (was_full && !flag) a2 = !a2;
    } else if (box == full) {
      a1 = !a1;
    }

    if (a1) box = deposit_step(box, d);
    if (!evaporating) continue;

    if (!corrected && box == full) a2 = !a2;
    if (box == 0) a2 = !a2;
    if (a2) box = evaporate_step(box, d);
  }
}

IterationTrace BoxAutomaton::rows() const {
  IterationTrace out;
  for (std::size_t path = 0; path < boxes_.size(); ++path) {
    if (instance_.is_dummy(path)) continue;
    out.push_back({t_, path, boxes_[path], box_bits(boxes_[path], instance_.box_qubits())});
  }
  return out;
}

IterationTrace classical_box_oracle(const ProblemInstance& instance, std::uint64_t t_max) {
  BoxAutomaton automaton(instance);
  IterationTrace trace = automaton.rows();
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    automaton.step();
    const auto rows = automaton.rows();
    trace.insert(trace.end(), rows.begin(), rows.end());
  }
  return trace;
}

}  // namespace qaco::mndas
