#include "motivic/series.hpp"

namespace motivic {

LEvaluation eval_at_L_power(const TruncSeries<MotivicClass>& f, int m, int d, int cutoff, bool allow_symbolic,
                            long dim_offset) {
  if (m <= d)
    throw DivergenceError("t = L^-" + std::to_string(m) + " does not converge on a dimension-" + std::to_string(d) +
                          " model (need m > d)");
  LEvaluation out;
  out.tail_indicator = static_cast<long>(d - m) * (f.order() + 1) + dim_offset;
  for (int n = 0; n <= f.order(); ++n) {
    const MotivicClass& c = f[n];
    if (!allow_symbolic && !c.is_pure_L())
      throw SymbolicEvaluationError("coefficient of t^" + std::to_string(n) + " is " + c.str() +
                                    "; choose a model with explicit L-expansions");
    for (const auto& [mono, coeff] : c.terms()) {
      for (const auto& [k, a] : coeff.terms()) {
        const int e = k - m * n;
        const long dim = static_cast<long>(d) * mono.weight() + e;
        if (dim >= -cutoff)
          out.value += MotivicClass::term(mono, LaurentL::monomial(e, a));
        else
          out.tail_indicator = std::max(out.tail_indicator, dim);
      }
    }
  }
  return out;
}

LEvaluation eval_at_L_power(const TruncSeries<LaurentL>& f, int m, int d, int cutoff, long dim_offset) {
  return eval_at_L_power(map_coeffs(f, [](const LaurentL& x) { return MotivicClass(x); }), m, d, cutoff, false,
                         dim_offset);
}

}  // namespace motivic
