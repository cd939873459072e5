#include "spinform/config.hpp"

#include <cstdlib>
#include <string>

#include "spinform/errors.hpp"

namespace spinform {

namespace {

long env_or(const char* name, long fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    return std::stol(raw);
  } catch (...) {
    return fallback;
  }
}

Guards load_guards() {
  Guards g;
  g.max_rank = static_cast<int>(env_or("SPINFORM_MAX_RANK", g.max_rank));
  g.max_depth = static_cast<int>(env_or("SPINFORM_MAX_DEPTH", g.max_depth));
  g.max_dimension = env_or("SPINFORM_MAX_DIM", g.max_dimension);
  return g;
}

}  // namespace

const Guards& guards() {
  static const Guards g = load_guards();
  return g;
}

void check_rank_guard(int rank) {
  if (rank < 1) throw RankError("rank must be positive");
  if (rank > guards().max_rank)
    throw ResourceError("rank " + std::to_string(rank) + " exceeds guard " + std::to_string(guards().max_rank));
}

void check_depth_guard(int depth) {
  if (depth < 0) throw DomainError("negative truncation depth");
  if (depth > guards().max_depth)
    throw ResourceError("depth " + std::to_string(depth) + " exceeds guard " + std::to_string(guards().max_depth));
}

void check_dimension_guard(long dim) {
  if (dim > guards().max_dimension)
    throw ResourceError("dimension " + std::to_string(dim) + " exceeds guard " +
                        std::to_string(guards().max_dimension));
}

int default_depth(int rank) { return rank <= 3 ? 12 : 8; }

}  // namespace spinform
