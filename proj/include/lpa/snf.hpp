#pragma once

#include "lpa/matrix.hpp"

#include <optional>
#include <vector>

namespace lpa {

/// U A V = D with U, V invertible over K[x, x^-1] and D diagonal.
struct SNFResult {
  LaurentMatrix U;
  LaurentMatrix D;
  LaurentMatrix V;

  std::size_t rank() const;
  std::vector<LaurentPoly> diagonal() const;
};

/// Smith normal form.  Pivots on the entry of least width (row-major on
/// ties); diagonal entries come out normalized.
SNFResult snf(const LaurentMatrix& a);

/// d_i divides d_{i+1} for consecutive nonzero entries, zeros only at the end.
bool divisibility_chain(const LaurentMatrix& d);

/// Some z with A z = b over K[x, x^-1].
std::optional<std::vector<LaurentPoly>> laurent_solve(const LaurentMatrix& a, const std::vector<LaurentPoly>& b);

/// For an idempotent e, whether e lies in e e* M_n(K[x, x^-1]).  Throws
/// std::invalid_argument if e is not idempotent.
bool has_projection_generator_laurent(const LaurentMatrix& e, Involution inv = Involution::Identity);

}  // namespace lpa
