// Resource guards, overridable through environment variables.
#pragma once

namespace spinform {

struct Guards {
  int max_rank = 8;           // SPINFORM_MAX_RANK
  int max_depth = 64;         // SPINFORM_MAX_DEPTH
  long max_dimension = 1000000;  // SPINFORM_MAX_DIM, Freudenthal table guard
};

const Guards& guards();

void check_rank_guard(int rank);
void check_depth_guard(int depth);
void check_dimension_guard(long dim);

// Default verification depth: 12 for rank <= 3, 8 above.
int default_depth(int rank);

}  // namespace spinform
