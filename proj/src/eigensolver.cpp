#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "framespace/error.hpp"
#include "framespace/spectral.hpp"

namespace framespace {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kRadix = std::numeric_limits<double>::radix;

class Dense {
 public:
  Dense(std::vector<double> data, size_t n) : data_(std::move(data)), n_(n) {}
  double& operator()(size_t r, size_t c) { return data_[r * n_ + c]; }
  double operator()(size_t r, size_t c) const { return data_[r * n_ + c]; }
  size_t size() const { return n_; }

  void swapIndices(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < n_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    for (size_t k = 0; k < n_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

  Dense block(size_t lo, size_t hi) const {
    const size_t m = hi - lo + 1;
    std::vector<double> out(m * m);
    for (size_t r = 0; r < m; ++r) {
      for (size_t c = 0; c < m; ++c) out[r * m + c] = (*this)(lo + r, lo + c);
    }
    return Dense(std::move(out), m);
  }

 private:
  std::vector<double> data_;
  size_t n_;
};

// Symmetric permutations that split off rows and columns whose active
// off-diagonal part is exactly zero. The matrix becomes block triangular
// with the active block at [lo, hi]; everything outside it is an eigenvalue
// read straight off the diagonal.
std::pair<size_t, size_t> isolate(Dense& a) {
  const size_t n = a.size();
  size_t lo = 0;
  size_t hi = n - 1;
  bool moved = true;
  while (moved && hi > lo) {
    moved = false;
    for (size_t j = hi + 1; j-- > lo;) {
      bool zeroRow = true;
      for (size_t k = lo; k <= hi && zeroRow; ++k) zeroRow = k == j || a(j, k) == 0.0;
      if (zeroRow) {
        a.swapIndices(j, hi);
        moved = true;
        break;
      }
    }
    if (moved) {
      if (hi == lo) break;
      --hi;
    }
  }
  moved = true;
  while (moved && hi > lo) {
    moved = false;
    for (size_t j = lo; j <= hi; ++j) {
      bool zeroCol = true;
      for (size_t k = lo; k <= hi && zeroCol; ++k) zeroCol = k == j || a(k, j) == 0.0;
      if (zeroCol) {
        a.swapIndices(j, lo);
        ++lo;
        moved = true;
        break;
      }
    }
  }
  return {lo, hi};
}

void balance(Dense& a) {
  const size_t n = a.size();
  const double sqrdx = kRadix * kRadix;
  bool done = false;
  while (!done) {
    done = true;
    for (size_t i = 0; i < n; ++i) {
      double r = 0.0;
      double c = 0.0;
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / kRadix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= kRadix;
        c *= sqrdx;
      }
      g = r * kRadix;
      while (c > g) {
        f /= kRadix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        for (size_t j = 0; j < n; ++j) a(i, j) /= f;
        for (size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

void hessenberg(Dense& a) {
  const size_t n = a.size();
  if (n < 3) return;
  std::vector<double> v(n);
  for (size_t k = 0; k + 2 < n; ++k) {
    double norm = 0.0;
    for (size_t i = k + 1; i < n; ++i) norm = std::hypot(norm, a(i, k));
    if (norm == 0.0) continue;
    const double alpha = a(k + 1, k) > 0.0 ? -norm : norm;
    double vtv = 0.0;
    for (size_t i = k + 1; i < n; ++i) {
      v[i] = a(i, k);
      if (i == k + 1) v[i] -= alpha;
      vtv += v[i] * v[i];
    }
    if (vtv == 0.0) continue;
    for (size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      for (size_t i = k + 1; i < n; ++i) dot += v[i] * a(i, j);
      const double f = 2.0 * dot / vtv;
      for (size_t i = k + 1; i < n; ++i) a(i, j) -= f * v[i];
    }
    for (size_t i = 0; i < n; ++i) {
      double dot = 0.0;
      for (size_t j = k + 1; j < n; ++j) dot += a(i, j) * v[j];
      const double f = 2.0 * dot / vtv;
      for (size_t j = k + 1; j < n; ++j) a(i, j) -= f * v[j];
    }
    a(k + 1, k) = alpha;
    for (size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

double signOf(double magnitude, double sign) {
  return sign >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude);
}

// Francis double-shift QR on an upper Hessenberg matrix. Eigenvalues are
// written into `out` from the bottom of the matrix upward.
void hessenbergQr(Dense& a, Spectrum& out, size_t& budget) {
  using C = std::complex<double>;
  const int n = static_cast<int>(a.size());
  std::vector<C> w(n);
  int found = n;  // w[found..n) are converged
  auto partial = [&]() { return Spectrum(w.begin() + found, w.end()); };

  double anorm = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
  }
  int nn = n - 1;
  double t = 0.0;
  double p = 0, q = 0, r = 0, s = 0, x = 0, y = 0, z = 0, ww = 0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l > 0; --l) {
        s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) <= kEps * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      x = a(nn, nn);
      if (l == nn) {
        w[nn] = x + t;
        found = nn--;
      } else {
        y = a(nn - 1, nn - 1);
        ww = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + ww;
          z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + signOf(z, p);
            w[nn - 1] = w[nn] = x + z;
            if (z != 0.0) w[nn] = x - ww / z;
          } else {
            w[nn] = C(x + p, -z);
            w[nn - 1] = std::conj(w[nn]);
          }
          found = nn - 1;
          nn -= 2;
        } else {
          if (budget == 0) {
            Spectrum got = partial();
            throw NumericalFailure("QR iteration did not converge within the iteration cap",
                                   std::move(got));
          }
          --budget;
          if (its == 10 || its == 20) {
            t += x;
            for (int i = 0; i <= nn; ++i) a(i, i) -= x;
            s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            ww = -0.4375 * s * s;
          }
          ++its;
          int m = nn - 2;
          for (; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - ww) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) +
                                            std::abs(a(m + 1, m + 1)));
            if (u <= kEps * v) break;
          }
          for (int i = m; i < nn - 1; ++i) {
            a(i + 2, i) = 0.0;
            if (i != m) a(i + 2, i - 1) = 0.0;
          }
          for (int k = m; k < nn; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k + 1 != nn) r = a(k + 2, k - 1);
              if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            if ((s = signOf(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
              if (k == m) {
                if (l != m) a(k, k - 1) = -a(k, k - 1);
              } else {
                a(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = a(k, j) + q * a(k + 1, j);
                if (k + 1 != nn) {
                  p += r * a(k + 2, j);
                  a(k + 2, j) -= p * z;
                }
                a(k + 1, j) -= p * y;
                a(k, j) -= p * x;
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                p = x * a(i, k) + y * a(i, k + 1);
                if (k + 1 != nn) {
                  p += z * a(i, k + 2);
                  a(i, k + 2) -= p * r;
                }
                a(i, k + 1) -= p * q;
                a(i, k) -= p;
              }
            }
          }
        }
      }
    } while (nn >= 0 && l < nn - 1);
  }
  out.insert(out.end(), w.begin(), w.end());
}

double clean(double v) { return v == 0.0 ? 0.0 : v; }

void sortSpectrum(Spectrum& s) {
  for (auto& z : s) z = {clean(z.real()), clean(z.imag())};
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

Spectrum realEigenvalues(std::vector<double> data, size_t n) {
  if (data.size() != n * n) fail(ErrorCode::InvalidInput, "matrix data does not match dimension");
  Spectrum result;
  if (n == 0) return result;
  for (double v : data) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidInput, "matrix has a non-finite entry");
  }
  Dense a(std::move(data), n);
  const auto [lo, hi] = isolate(a);
  for (size_t i = 0; i < n; ++i) {
    if (i < lo || i > hi) result.emplace_back(a(i, i), 0.0);
  }
  if (lo <= hi) {
    Dense core = a.block(lo, hi);
    balance(core);
    hessenberg(core);
    size_t budget = 100 * n;
    try {
      hessenbergQr(core, result, budget);
    } catch (const NumericalFailure& e) {
      Spectrum got = result;
      got.insert(got.end(), e.partial().begin(), e.partial().end());
      sortSpectrum(got);
      throw NumericalFailure(e.what(), std::move(got));
    }
  }
  sortSpectrum(result);
  return result;
}

}  // namespace framespace
