#include "normfilt/statements.hpp"

#include <algorithm>

namespace normfilt {

const std::vector<StatementInfo>& statements() {
  static const std::vector<StatementInfo> all{
      {"multiplicity_agreement", "e0 from the Newton polyhedron = fitted normal e0 = fitted adic e0 = lambda(R/J)"},
      {"normal_below_adic", "lambda(R/closure(I^{n+1})) <= lambda(R/I^{n+1}) for every n"},
      {"ring_type", "type by regularity or pseudo-Frobenius count = socle length lambda((J:m)/J)"},
      {"e1_lower_bound",
       "ebar1 >= e0 - lambda(R/Ibar) = lambda(Ibar/J) >= 0; equality iff Sally module = 0 iff r <= 1"},
      {"sally_coefficients", "sbar0 = ebar1 - e0 + lambda(R/Ibar), sbar_i = ebar_{i+1}; Sally module 0 gives CM"},
      {"series_identity", "(1-z) HS(Sally) = HS(G(E)) - HS(Gbar) and the two length additivities of N"},
      {"intersection_property", "closure(I^{n+1}) cap J^n = J^n Ibar"},
      {"depth_almost_extremal", "ebar1 <= e0 - lambda(R/Ibar) + 1 gives sbar0 <= 1 and depth Gbar >= d-1"},
      {"e2_lower_bound", "ebar2 >= ebar1 - lambda(Ibar/J), equality iff closure(I^{n+1}) = J^{n-1} closure(I^2)"},
      {"e3_nonnegative", "ebar3 >= 0; ebar3 = 0 gives closure(I^{n+2}) in J^n"},
      {"socle_identity", "lambda((J^n : m)/J^n) = t C(n+d-2, d-1)"},
      {"sally_type_bound", "Ibar = m, ebar3 = 0: lambda(closure(I^{n+1})/J^n Ibar) <= t C(n+d-2, d-1)"},
      {"e1_type_bounds", "Ibar = m, ebar3 = 0: e0-1+lambda(Ibar2/J Ibar) <= ebar1 <= e0-1+t, strict if t differs"},
      {"hilbert_upper_bound", "upper bound for lambda(R/closure(I^{n+1})) and its exact Sally decomposition"},
      {"e3_vanishing_type_gap", "Ibar = m, ebar3 = 0, lambda(Ibar2/J Ibar) >= t-1: Gbar CM and r <= 2"},
      {"e3_vanishing_almost_extremal", "ebar1 = e0 - lambda(R/Ibar) + 1, ebar3 = 0: Gbar CM and r <= 2"},
      {"e3_vanishing_type_two", "t <= 2, Ibar = m, ebar3 = 0: Gbar CM; G(m) CM outside the exceptional case"},
      {"graded_sums", "ebar1 >= sum lambda(closure(I^{n+1})/(J cap closure(I^{n+1}))); ebar3 as a weighted sum"},
  };
  return all;
}

bool is_statement_id(std::string_view id) {
  const auto& all = statements();
  return std::any_of(all.begin(), all.end(), [&](const StatementInfo& s) { return s.id == id; });
}

}  // namespace normfilt
