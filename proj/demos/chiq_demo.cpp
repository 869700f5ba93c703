// Library tour: spectral colouring bounds for one graph from each family,
// then the asymptotic rate table.

#include <hamspec/chiq.hpp>
#include <hamspec/z4.hpp>

#include <cstdio>

namespace {

void show(const hamspec::BoundReport& rep) {
  std::printf("%s\n", rep.graph_id.c_str());
  std::printf("  lambda_max %s, lambda_min %s, spectral bound %s\n",
              rep.lambda_max.get_str().c_str(), rep.lambda_min.get_str().c_str(),
              rep.spectral_lb.get_str().c_str());
  for (const auto& [method, value] : rep.upper_bounds)
    std::printf("  upper  %-18s %g\n", method.c_str(), value);
  for (const auto& [method, value] : rep.lower_rates)
    std::printf("  rate   %-18s %g\n", method.c_str(), value);
  for (const auto& note : rep.notes) std::printf("  note   %s\n", note.c_str());
}

}  // namespace

int main() {
  show(hamspec::hamming_chiq_lb(24, 4));
  std::printf("\n");
  show(hamspec::z4_chiq(4, 2));

  std::printf("\nper-coordinate rates, lower and upper:\n");
  for (const auto& row :
       hamspec::lu_table({0.02, 0.06, 0.10, 0.14, 0.17})) {
    std::printf("  alpha %.2f  l %.3f  u %.3f%s\n", row.alpha,
                hamspec::round3(row.l), hamspec::round3(row.u),
                hamspec::region_alpha_holds(row.alpha) ? "  (advantage regime)" : "");
  }
  return 0;
}
