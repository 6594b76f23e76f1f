#include "oracles/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::vector<int> exponents(const std::string& type) {
  const char family = type.at(0);
  if (type == "G2") return {1, 5};
  if (type == "F4") return {1, 5, 7, 11};
  const int n = std::stoi(type.substr(family == 'B' && type[1] == 'C' ? 2 : 1));
  std::vector<int> e;
  switch (family) {
    case 'A':
      for (int i = 1; i <= n; ++i) e.push_back(i);
      return e;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      return e;
    case 'D':
      for (int i = 1; i < n; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      return e;
    default:
      throw std::invalid_argument("no exponents for " + type);
  }
}

std::uint64_t weyl_order(const std::string& type) {
  std::uint64_t order = 1;
  for (int e : exponents(type)) order *= static_cast<std::uint64_t>(e + 1);
  return order;
}

std::size_t count_lattice_points(const std::vector<std::vector<long>>& g, long r2, long box) {
  const std::size_t n = g.size();
  std::vector<long> c(n, -box);
  std::size_t count = 0;
  while (true) {
    long q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += c[i] * g[i][j] * c[j];
    if (q <= r2) ++count;
    std::size_t i = 0;
    while (i < n && c[i] == box) c[i++] = -box;
    if (i == n) break;
    ++c[i];
  }
  return count;
}

std::map<int, int> inversion_histogram(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::map<int, int> hist;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
    ++hist[inv];
  } while (std::next_permutation(p.begin(), p.end()));
  return hist;
}

long floor_div(long p, long q) {
  long d = p / q;
  if ((p % q != 0) && (p < 0)) --d;
  return d;
}

long rank_one_degree(long k, int m, long num, long den, bool positive_chamber) {
  // 2 alpha(k alpha + a) = 4k + num/den. The positive chamber keeps alpha, the other -alpha.
  const long x_num = 4 * k * den + num;
  return m * (positive_chamber ? floor_div(x_num, den) : floor_div(-x_num, den));
}

double jacobi_moment(double a, double b, int j) {
  return std::pow(2.0, a + b + j + 1) * std::beta(a + 1, b + j + 1);
}

std::complex<double> sc_ray_integral(std::complex<double> z, int panels) {
  // Prevertices 1, i, -i with interior angles pi/4, pi/4, pi/2.
  auto f = [](std::complex<double> s) {
    return std::pow(1.0 - s, -0.75) * std::pow(1.0 - s / std::complex<double>(0, 1), -0.75) *
           std::pow(1.0 - s / std::complex<double>(0, -1), -0.5);
  };
  const int n = panels % 2 ? panels + 1 : panels;
  std::complex<double> sum = f(0) + f(z);
  for (int k = 1; k < n; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(z * (double(k) / n));
  return sum * z / (3.0 * n);
}

}  // namespace oracle
