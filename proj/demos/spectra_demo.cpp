// Library tour: eigenvalue columns, minima across the regimes, and the
// closed-form envelope for distance four.

#include <hamspec/hamming.hpp>
#include <hamspec/krawtchouk.hpp>

#include <cstdio>

int main() {
  using namespace hamspec;

  std::printf("H(8,4) eigenvalue column (value, multiplicity):\n");
  for (const auto& rec : spectrum(8, 4))
    std::printf("  w=%d  %8s  x%s\n", rec.w, rec.value.get_str().c_str(),
                rec.multiplicity.get_str().c_str());

  std::printf("\nsmallest eigenvalue by regime:\n");
  for (auto [n, j] : {std::pair{14, 2}, {14, 4}, {14, 7}, {14, 8}, {14, 12}}) {
    auto r = lambda_min_exact(n, j);
    std::printf("  H(%d,%d)  min %s at w=%d\n", n, j, r.lambda_min.get_str().c_str(),
                r.argmin_w);
  }

  std::printf("\ndistance-4 envelope against the exact minimum:\n");
  for (int n : {12, 20, 33, 40}) {
    auto [env, exact] = lambda_min_j4_closed(n);
    std::printf("  n=%2d  envelope %10.3f  exact %s\n", n, env,
                exact.lambda_min.get_str().c_str());
  }

  std::printf("\nnormalized polynomial q_4 for n=12 (low to high):\n  ");
  auto q = q_polys_by_recursion(12, 4);
  for (int k = 0; k <= 4; ++k)
    std::printf("%s%s", q[4].coeff(k).get_str().c_str(), k < 4 ? "  " : "\n");
  return 0;
}
