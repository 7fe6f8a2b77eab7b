// Minimal library walk-through: build the thermal resource for one parameter
// point, score it in the magic square game, and compare with the classical value.

#include <cstdio>

#include "msg/msg.hpp"

int main() {
  const msg::ModelParams p{/*jz=*/0.5, /*B=*/0.3, /*b=*/0.0, /*D=*/0.4, /*T=*/0.1};

  const msg::DensityMatrix resource = msg::effective_state(p);
  const msg::CellResult game = msg::win_probability(resource);
  const msg::ClassicalResult classical = msg::classical_optimum();

  std::printf("P_w = %.6f (classical optimum %s = %.6f)\n", game.average, classical.value.str().c_str(),
              classical.value.value());
  for (int m = 0; m < 3; ++m)
    std::printf("  row %d: %.6f %.6f %.6f\n", m + 1, game.probs[m][0], game.probs[m][1], game.probs[m][2]);
  std::printf("chain log-negativity = %.6f\n", msg::chain_log_negativity(p));
  return 0;
}
