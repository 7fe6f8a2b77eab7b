#ifndef MSG_ENTANGLEMENT_HPP_
#define MSG_ENTANGLEMENT_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "msg/errors.hpp"
#include "msg/linalg.hpp"
#include "msg/spin_model.hpp"

namespace msg {

/// Side A of a bipartition, as 1-based qubit indices; side B is the rest.
class Bipartition {
 public:
  Bipartition(std::vector<int> side_a, int qubits) : side_a_(std::move(side_a)), qubits_(qubits) {
    if (side_a_.empty() || static_cast<int>(side_a_.size()) >= qubits_)
      throw DomainError("bipartition side must be a non-empty proper subset");
    std::vector<bool> seen(qubits_, false);
    for (int q : side_a_) {
      if (q < 1 || q > qubits_ || seen[q - 1])
        throw DomainError("bad qubit " + std::to_string(q) + " in bipartition of " + std::to_string(qubits_));
      seen[q - 1] = true;
    }
  }

  const std::vector<int>& side_a() const { return side_a_; }
  int qubits() const { return qubits_; }

 private:
  std::vector<int> side_a_;
  int qubits_;
};

/// ||rho^{T_A}||_1, the trace norm of the partial transpose.
inline double partial_transpose_norm(const DensityMatrix& rho, const Bipartition& split) {
  if (split.qubits() != rho.qubits())
    throw DimensionMismatch("bipartition of " + std::to_string(split.qubits()) + " qubits for a " +
                            std::to_string(rho.qubits()) + "-qubit state");
  return trace_norm(partial_transpose(rho.mat(), split.side_a()));
}

inline double negativity(const DensityMatrix& rho, const Bipartition& split) {
  return (partial_transpose_norm(rho, split) - 1.0) / 2.0;
}

/// Base 2, so a singlet carries exactly one unit.
inline double log_negativity(const DensityMatrix& rho, const Bipartition& split) {
  return std::log2(partial_transpose_norm(rho, split));
}

/// LN of the two-qubit chain across 1|2.
inline double chain_log_negativity(const ModelParams& p) { return log_negativity(chain_state(p), Bipartition({1}, 2)); }

/// LN of the four-qubit game resource across Alice {1,2} | Bob {3,4}.
inline double resource_log_negativity(const ModelParams& p) {
  return log_negativity(effective_state(p), Bipartition({1, 2}, 4));
}

}  // namespace msg

#endif  // MSG_ENTANGLEMENT_HPP_
