#include "oracles.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <set>

namespace oracle {

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

std::vector<Integer> dense(const conclab::LaurentPoly& f) {
  std::vector<Integer> c(static_cast<std::size_t>(f.span() + 1), Integer(0));
  for (const auto& [e, v] : f.terms()) c[static_cast<std::size_t>(e - f.min_exponent())] = v;
  return c;
}

}  // namespace

Integer sylvester_resultant(const conclab::LaurentPoly& f, const conclab::LaurentPoly& g) {
  auto a = dense(f);
  auto b = dense(g);
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    Integer r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= a[0];
    return r;
  }
  if (n == 0) {
    Integer r = 1;
    for (std::size_t i = 0; i < m; ++i) r *= b[0];
    return r;
  }
  const std::size_t size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, Integer(0)));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k <= m; ++k) s[row][row + k] = a[m - k];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= n; ++k) s[n + row][row + k] = b[n - k];
  return bareiss_determinant(std::move(s));
}

long double root_of_unity_product(const conclab::LaurentPoly& f, unsigned long d) {
  const long double pi = std::acos(-1.0L);
  std::complex<long double> prod = 1;
  for (unsigned long k = 0; k < d; ++k) {
    std::complex<long double> w = std::polar(1.0L, 2 * pi * static_cast<long double>(k) / static_cast<long double>(d));
    std::complex<long double> v = 0;
    for (const auto& [e, c] : f.terms()) v += static_cast<long double>(c.get_d()) * std::pow(w, e);
    prod *= v;
  }
  return std::abs(prod);
}

std::optional<int> float_signature(const conclab::RationalMatrix& a, double t, double tol) {
  const auto n = static_cast<Eigen::Index>(a.rows());
  if (n == 0) return 0;
  const std::complex<double> w = std::polar(1.0, 2 * M_PI * t);
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      double aij = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
      double aji = a(static_cast<std::size_t>(j), static_cast<std::size_t>(i)).get_d();
      h(i, j) = (1.0 - w) * aij + (1.0 - std::conj(w)) * aji;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  int sig = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double ev = solver.eigenvalues()(i);
    if (std::abs(ev) < tol) return std::nullopt;
    sig += ev > 0 ? 1 : -1;
  }
  return sig;
}

std::vector<Integer> brute_torsion(const conclab::LaurentPoly& f) {
  const int top = f.max_exponent();
  std::vector<Integer> t(static_cast<std::size_t>(std::max(top, 0)), Integer(0));
  for (int i = 0; i < top; ++i) {
    for (int k = -top; k <= top; ++k) {
      if (k > i) t[static_cast<std::size_t>(i)] += Integer(k - i) * f.coefficient(k);
    }
  }
  while (!t.empty() && t.back() == 0) t.pop_back();
  return t;
}

conclab::RationalMatrix random_knot_seifert(std::mt19937_64& rng, int genus, int entry_bound) {
  const auto n = static_cast<std::size_t>(2 * genus);
  std::uniform_int_distribution<int> entry(-entry_bound, entry_bound);
  conclab::RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = entry(rng);
  for (std::size_t k = 0; k + 1 < n; k += 2) a(k, k + 1) += 1;

  conclab::RationalMatrix p = conclab::RationalMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-1, 1);
  for (std::size_t step = 0; step < 2 * n; ++step) {
    std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    int c = mult(rng);
    if (i == j || c == 0) continue;
    for (std::size_t k = 0; k < n; ++k) p(i, k) += c * p(j, k);
  }
  return p * a * p.transpose();
}

conclab::RationalMatrix random_matrix(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  conclab::RationalMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry(rng);
  return a;
}

conclab::LaurentPoly random_poly(std::mt19937_64& rng, int max_span, int bound) {
  std::uniform_int_distribution<int> span(0, max_span);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::uniform_int_distribution<int> offset(-3, 3);
  for (;;) {
    const int s = span(rng);
    const int o = offset(rng);
    conclab::LaurentPoly::Terms terms;
    for (int k = 0; k <= s; ++k) terms[o + k] = coef(rng);
    conclab::LaurentPoly f(std::move(terms));
    if (!f.is_zero()) return f;
  }
}

std::optional<Integer> brute_escaping_period(const Rational& c0, const std::vector<Integer>& excluded, long limit) {
  for (long k = 1;; ++k) {
    Rational period = c0 * k;
    if (period > limit) return std::nullopt;
    if (period.get_den() != 1) continue;
    Integer rest = period.get_num();
    for (const auto& p : excluded)
      while (rest % p == 0) rest /= p;
    if (rest == 1) return period.get_num();
  }
}

long brute_subgroup_count(const std::vector<long>& factors, long n) {
  conclab::FiniteAbelianGroup g = conclab::FiniteAbelianGroup::from_cyclic_factors(factors);
  const auto all = g.elements();
  std::set<std::set<conclab::Element>> found;
  for (const auto& a : all) {
    for (const auto& b : all) {
      std::set<conclab::Element> span;
      for (long i = 0; i < 64; ++i)
        for (long j = 0; j < 64; ++j) span.insert(g.add(g.multiply(a, i), g.multiply(b, j)));
      if (static_cast<long>(span.size()) == n) found.insert(span);
    }
  }
  return static_cast<long>(found.size());
}

}  // namespace oracle
