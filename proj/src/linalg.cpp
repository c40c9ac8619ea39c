#include "chipfire/linalg.hpp"

#include <utility>

#include "chipfire/error.hpp"

namespace chipfire {

std::vector<Rat> solve_linear_system(std::vector<std::vector<Rat>> m,
                                     std::vector<Rat> rhs) {
  int n = static_cast<int>(m.size());
  if (n == 0 || static_cast<int>(rhs.size()) != n)
    fail(Errc::internal_error, "malformed linear system");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      fail(Errc::internal_error, "malformed linear system");

  // Clear denominators row by row; the augmented matrix becomes integral.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n + 1));
  for (int i = 0; i < n; ++i) {
    Int scale = denominator(rhs[i]);
    for (int j = 0; j < n; ++j) scale = lcm(scale, denominator(m[i][j]));
    for (int j = 0; j < n; ++j)
      a[i][j] = numerator(m[i][j]) * (scale / denominator(m[i][j]));
    a[i][n] = numerator(rhs[i]) * (scale / denominator(rhs[i]));
  }

  // Fraction-free elimination; every division below is exact.
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) fail(Errc::internal_error, "singular linear system");
      std::swap(a[k], a[pivot]);
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j <= n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  if (a[n - 1][n - 1] == 0)
    fail(Errc::internal_error, "singular linear system");

  std::vector<Rat> x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat s(a[i][n]);
    for (int j = i + 1; j < n; ++j) s -= Rat(a[i][j]) * x[j];
    x[i] = s / Rat(a[i][i]);
  }
  return x;
}

std::vector<Rat> solve_pinned_laplacian(const Graph& g,
                                        const std::vector<Rat>& rhs,
                                        int pin) {
  int n = g.vertex_count();
  if (static_cast<int>(rhs.size()) != n || pin < 0 || pin >= n)
    fail(Errc::internal_error, "malformed laplacian system");
  Rat total(0);
  for (const auto& v : rhs) total += v;
  if (total != 0)
    fail(Errc::internal_error, "laplacian system with nonzero total");

  if (n == 1) return {Rat(0)};

  // Laplacian row v: valence_without_loops(v) on the diagonal, minus the
  // edge multiplicity off it. Dropping the pinned row and column leaves a
  // nonsingular matrix on any connected graph.
  std::vector<std::vector<Rat>> m(n - 1, std::vector<Rat>(n - 1));
  std::vector<Rat> b(n - 1);
  auto reduced = [pin](int v) { return v < pin ? v : v - 1; };
  for (int v = 0; v < n; ++v) {
    if (v == pin) continue;
    for (int u = 0; u < n; ++u) {
      if (u == pin) continue;
      m[reduced(v)][reduced(u)] =
          u == v ? Rat(g.valence_without_loops(v))
                 : Rat(-g.edge_multiplicity(v, u));
    }
    b[reduced(v)] = rhs[v];
  }

  auto solved = solve_linear_system(std::move(m), std::move(b));
  std::vector<Rat> f(n);
  for (int v = 0; v < n; ++v)
    f[v] = v == pin ? Rat(0) : solved[reduced(v)];
  return f;
}

}  // namespace chipfire
