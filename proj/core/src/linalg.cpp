#include "sffkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sffkit/error.hpp"

namespace sffkit {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double norm1(const cplx& z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Householder vector for x: (I - tau v v^dagger) x = alpha e_1.
// Returns false when x is already zero.
bool make_reflector(std::vector<cplx>& v, cplx& alpha, double& tau) {
  double nrm2 = 0.0;
  for (const auto& z : v) nrm2 += std::norm(z);
  const double nrm = std::sqrt(nrm2);
  if (nrm == 0.0) {
    alpha = 0.0;
    tau = 0.0;
    return false;
  }
  const double a0 = std::abs(v[0]);
  const cplx phase = a0 > 0.0 ? v[0] / a0 : cplx(1.0);
  alpha = -phase * nrm;
  v[0] -= alpha;
  const double vn2 = 2.0 * nrm * (nrm + a0);
  tau = 2.0 / vn2;
  return true;
}

void require_finite(const ComplexMatrix& a, const char* who) {
  if (a.dim() == 0) throw Error(ErrorCode::InvalidInput, std::string(who) + ": empty matrix");
  if (!a.all_finite()) throw Error(ErrorCode::InvalidInput, std::string(who) + ": non-finite entry");
}

// Implicit QL on a real symmetric tridiagonal (d diagonal, e[i] couples i, i+1).
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  e[n - 1] = 0.0;
  const int limit = 50 * n;
  int total = 0;
  for (int l = 0; l < n; ++l) {
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (++total > limit) throw Error(ErrorCode::Convergence, "hermitian_eigenvalues: QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void hessenberg_reduce(ComplexMatrix& t) {
  const std::size_t n = t.dim();
  if (n < 3) return;
  std::vector<cplx> v, s(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    v.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) v[i] = t(k + 1 + i, k);
    cplx alpha;
    double tau;
    if (!make_reflector(v, alpha, tau)) continue;
    // left: rows k+1.., columns k+1.. (column k set explicitly)
    std::fill(s.begin(), s.end(), cplx(0.0));
    for (std::size_t i = 0; i < m; ++i) {
      const cplx cv = std::conj(v[i]);
      const cplx* ri = t.row(k + 1 + i);
      for (std::size_t j = k + 1; j < n; ++j) s[j] += cv * ri[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
      const cplx f = tau * v[i];
      cplx* ri = t.row(k + 1 + i);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= f * s[j];
    }
    t(k + 1, k) = alpha;
    for (std::size_t i = 1; i < m; ++i) t(k + 1 + i, k) = 0.0;
    // right: all rows, columns k+1..
    for (std::size_t r = 0; r < n; ++r) {
      cplx* rr = t.row(r);
      cplx acc = 0.0;
      for (std::size_t i = 0; i < m; ++i) acc += rr[k + 1 + i] * v[i];
      acc *= tau;
      for (std::size_t i = 0; i < m; ++i) rr[k + 1 + i] -= acc * std::conj(v[i]);
    }
  }
}

struct Givens {
  double c = 1.0;
  cplx s = 0.0;
};

// G = [[c, s], [-conj(s), c]] with G [p; q] = [r; 0].
Givens make_givens(const cplx& p, const cplx& q) {
  Givens g;
  const double ap = std::abs(p), aq = std::abs(q);
  if (aq == 0.0) return g;
  if (ap == 0.0) {
    g.c = 0.0;
    g.s = std::conj(q) / aq;
    return g;
  }
  const double nrm = std::hypot(ap, aq);
  g.c = ap / nrm;
  g.s = (p / ap) * std::conj(q) / nrm;
  return g;
}

// Similarity T <- G T G^dagger on rows/columns (i, i+1), restricted to the
// active window [lo, hi].
void apply_givens(ComplexMatrix& t, std::size_t i, const Givens& g, std::size_t lo, std::size_t hi) {
  cplx* ri = t.row(i);
  cplx* rj = t.row(i + 1);
  const std::size_t first = i > lo ? i - 1 : lo;
  for (std::size_t col = first; col <= hi; ++col) {
    const cplx a = ri[col], b = rj[col];
    ri[col] = g.c * a + g.s * b;
    rj[col] = -std::conj(g.s) * a + g.c * b;
  }
  const std::size_t last = std::min(i + 2, hi);
  const cplx cs = std::conj(g.s);
  for (std::size_t r = lo; r <= last; ++r) {
    cplx* rr = t.row(r);
    const cplx x = rr[i], y = rr[i + 1];
    rr[i] = x * g.c + y * cs;
    rr[i + 1] = -x * g.s + y * g.c;
  }
}

cplx wilkinson_shift(const ComplexMatrix& t, std::size_t iu, int iter) {
  if (iter == 10 || iter == 20) {
    double ex = std::abs(t(iu, iu - 1).real());
    if (iu >= 2) ex += std::abs(t(iu - 1, iu - 2).real());
    return ex;
  }
  cplx a = t(iu - 1, iu - 1), b = t(iu - 1, iu), c = t(iu, iu - 1), d = t(iu, iu);
  const double scale = norm1(a) + norm1(b) + norm1(c) + norm1(d);
  if (scale == 0.0) return 0.0;
  a /= scale;
  b /= scale;
  c /= scale;
  d /= scale;
  const cplx bc = b * c;
  const cplx diff = a - d;
  const cplx disc = std::sqrt(diff * diff + 4.0 * bc);
  const cplx det = a * d - bc;
  const cplx tr = a + d;
  cplx e1 = 0.5 * (tr + disc), e2 = 0.5 * (tr - disc);
  if (norm1(e1) > norm1(e2)) {
    e2 = det / e1;
  } else if (norm1(e2) != 0.0) {
    e1 = det / e2;
  }
  return scale * (norm1(e1 - d) < norm1(e2 - d) ? e1 : e2);
}

void schur_reduce(ComplexMatrix& t) {
  const std::size_t n = t.dim();
  if (n == 1) return;
  const int limit = 50 * static_cast<int>(n);
  int total = 0, iter = 0;
  std::size_t iu = n - 1;
  auto negligible = [&](std::size_t i) {
    const double dd = norm1(t(i, i)) + norm1(t(i + 1, i + 1));
    if (norm1(t(i + 1, i)) <= kEps * dd) {
      t(i + 1, i) = 0.0;
      return true;
    }
    return false;
  };
  while (true) {
    while (iu > 0 && negligible(iu - 1)) {
      iter = 0;
      --iu;
    }
    if (iu == 0) break;
    ++iter;
    if (++total > limit) throw Error(ErrorCode::Convergence, "Schur QR did not converge");
    std::size_t il = iu - 1;
    while (il > 0 && !negligible(il - 1)) --il;
    const cplx shift = wilkinson_shift(t, iu, iter);
    Givens g = make_givens(t(il, il) - shift, t(il + 1, il));
    apply_givens(t, il, g, il, iu);
    for (std::size_t i = il + 1; i < iu; ++i) {
      g = make_givens(t(i, i - 1), t(i + 1, i - 1));
      apply_givens(t, i, g, il, iu);
      t(i + 1, i - 1) = 0.0;
    }
  }
}

}  // namespace

QrResult householder_qr(const ComplexMatrix& a) {
  require_finite(a, "householder_qr");
  const std::size_t n = a.dim();
  ComplexMatrix r = a;
  std::vector<std::vector<cplx>> vs(n);
  std::vector<double> taus(n, 0.0);
  std::vector<cplx> s(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t m = n - k;
    auto& v = vs[k];
    v.resize(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = r(k + i, k);
    cplx alpha;
    if (!make_reflector(v, alpha, taus[k])) continue;
    std::fill(s.begin(), s.end(), cplx(0.0));
    for (std::size_t i = 0; i < m; ++i) {
      const cplx cv = std::conj(v[i]);
      const cplx* ri = r.row(k + i);
      for (std::size_t j = k + 1; j < n; ++j) s[j] += cv * ri[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
      const cplx f = taus[k] * v[i];
      cplx* ri = r.row(k + i);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= f * s[j];
    }
    r(k, k) = alpha;
    for (std::size_t i = 1; i < m; ++i) r(k + i, k) = 0.0;
  }
  ComplexMatrix q = ComplexMatrix::identity(n);
  for (std::size_t kk = n - 1; kk-- > 0;) {
    if (taus[kk] == 0.0) continue;
    const auto& v = vs[kk];
    const std::size_t m = n - kk;
    std::fill(s.begin(), s.end(), cplx(0.0));
    for (std::size_t i = 0; i < m; ++i) {
      const cplx cv = std::conj(v[i]);
      const cplx* qi = q.row(kk + i);
      for (std::size_t j = kk; j < n; ++j) s[j] += cv * qi[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
      const cplx f = taus[kk] * v[i];
      cplx* qi = q.row(kk + i);
      for (std::size_t j = kk; j < n; ++j) qi[j] -= f * s[j];
    }
  }
  return {std::move(q), std::move(r)};
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& h) {
  require_finite(h, "hermitian_eigenvalues");
  if (hermiticity_defect(h) > 1e-12 * h.max_abs()) {
    throw Error(ErrorCode::InvalidInput, "hermitian_eigenvalues: matrix is not Hermitian");
  }
  const std::size_t n = h.dim();
  ComplexMatrix a = h;
  std::vector<double> d(n), e(n, 0.0);
  std::vector<cplx> v, p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    const std::size_t o = k + 1;
    v.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) v[i] = a(o + i, k);
    cplx alpha;
    double tau;
    if (!make_reflector(v, alpha, tau)) {
      e[k] = 0.0;
      continue;
    }
    e[k] = std::abs(alpha);
    // p = tau A22 v, w = p - (tau/2)(v^dagger p) v, A22 -= v w^dagger + w v^dagger
    cplx vp = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const cplx* ai = a.row(o + i) + o;
      cplx acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) acc += ai[j] * v[j];
      p[i] = tau * acc;
      vp += std::conj(v[i]) * p[i];
    }
    const double kk = 0.5 * tau * vp.real();
    for (std::size_t i = 0; i < m; ++i) p[i] -= kk * v[i];
    for (std::size_t i = 0; i < m; ++i) {
      cplx* ai = a.row(o + i) + o;
      const cplx vi = v[i], wi = p[i];
      for (std::size_t j = 0; j < m; ++j) ai[j] -= vi * std::conj(p[j]) + wi * std::conj(v[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
  if (n >= 2) e[n - 2] = std::abs(a(n - 1, n - 2));
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  return {SpectrumKind::GueValues, std::move(d)};
}

std::vector<cplx> schur_eigenvalues(const ComplexMatrix& a) {
  require_finite(a, "schur_eigenvalues");
  ComplexMatrix t = a;
  hessenberg_reduce(t);
  schur_reduce(t);
  std::vector<cplx> ev(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) ev[i] = t(i, i);
  return ev;
}

Spectrum unitary_eigenphases(const ComplexMatrix& u) {
  require_finite(u, "unitary_eigenphases");
  if (u.structure() != Structure::Unitary && unitarity_defect(u) > 1e-10) {
    throw Error(ErrorCode::InvalidInput, "unitary_eigenphases: matrix is not unitary");
  }
  const auto ev = schur_eigenvalues(u);
  std::vector<double> ph(ev.size());
  for (std::size_t i = 0; i < ev.size(); ++i) {
    double th = std::arg(ev[i]);
    if (th <= -std::numbers::pi) th += 2.0 * std::numbers::pi;
    ph[i] = th;
  }
  std::sort(ph.begin(), ph.end());
  return {SpectrumKind::CuePhases, std::move(ph)};
}

}  // namespace sffkit
