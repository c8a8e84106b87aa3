#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "normrig/matrix.hpp"

namespace normrig {

enum class Backend { Exact, Float };

const char* to_string(Backend b);

/// Which arithmetic decides ranks. The tolerance is relative to the largest
/// singular value for Float and is also used for float comparisons elsewhere.
struct ScalarContext {
  Backend backend = Backend::Exact;
  double tolerance = kDefaultTolerance;
};

/// Resolves a requested backend against the data: Exact is only allowed when
/// every entry is rational; with no request, Exact is preferred when possible.
ScalarContext resolve_context(bool data_exact, std::optional<Backend> requested,
                              double tolerance = kDefaultTolerance);

struct RankNullspace {
  std::size_t rank = 0;
  std::vector<Vector> kernel;
};

/// Rank and a kernel basis. Exact uses fraction-free (Bareiss) elimination on
/// the integer-scaled rows; Float thresholds singular values at
/// tolerance * sigma_max.
RankNullspace rank_nullspace(const Matrix& m, const ScalarContext& ctx);

std::size_t rank(const Matrix& m, const ScalarContext& ctx);

bool rows_independent(const Matrix& m, const ScalarContext& ctx);

}  // namespace normrig
