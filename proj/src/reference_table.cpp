#include "abn/io.hpp"

namespace abn {

// Published non-emptiness table for g = 28, labels kept verbatim. The cell
// (20, 3) is marked KLM there, while both closed forms evaluate to empty;
// compare_with_reference reports it as the expected discrepancy.
const std::vector<ReferenceCell>& reference_table_g28() {
  static const std::vector<ReferenceCell> table = [] {
    const char* rows[7][7] = {
        {"BN", "KLM", "KLM", "phi", "phi", "phi", "phi"},
        {"BN", "BN", "KLM", "phi", "phi", "phi", "phi"},
        {"BN", "BN", "KLM", "KLM", "phi", "phi", "phi"},
        {"BN", "BN", "KLM", "KLM", "phi", "phi", "phi"},
        {"BN", "BN", "BN", "KLM", "Thm1.1", "phi", "phi"},
        {"BN", "BN", "BN", "KLM", "Delta", "phi", "phi"},
        {"BN", "BN", "BN", "KLM", "Delta", "phi", "phi"},
    };
    std::vector<ReferenceCell> cells;
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        cells.push_back({20 + i, 1 + j, rows[i][j]});
      }
    }
    return cells;
  }();
  return table;
}

}  // namespace abn
