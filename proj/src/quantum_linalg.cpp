#include "udw/quantum_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace udw {

namespace {

// Excitation-sorted three-qubit basis, occupation (A,B,C) per index.
constexpr int kOcc3[8][3] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0},
                             {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};

int idx3(int a, int b, int c) {
  constexpr int lut[2][2][2] = {{{0, 1}, {2, 4}}, {{3, 5}, {6, 7}}};
  return lut[a][b][c];
}

double fro_norm(const Matrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      s += std::norm(m.at(i, j));
    }
  }
  return std::sqrt(s);
}

double offdiag_norm(const Matrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (i != j) {
        s += std::norm(m.at(i, j));
      }
    }
  }
  return std::sqrt(s);
}

// One cyclic sweep of two-sided complex Jacobi rotations. Each rotation
// zeroes a_pq with the unitary [[c, -s u], [s conj(u), c]], u = a_pq/|a_pq|,
// applied to rows/columns p and q; vecs accumulates the product.
void jacobi_diagonalize(Matrix& m, Matrix* vecs) {
  const int n = m.dim();
  const double scale = std::max(1.0, fro_norm(m));
  for (int sweep = 0; sweep < 60; ++sweep) {
    if (offdiag_norm(m) <= 1e-14 * scale) {
      return;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const complex_d apq = m.at(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) {
          continue;
        }
        const complex_d u = apq / mag;
        const double app = m.at(p, p).real();
        const double aqq = m.at(q, q).real();
        const double phi = (app - aqq) / (2.0 * mag);
        const double t =
            (phi >= 0.0 ? 1.0 : -1.0) / (std::abs(phi) + std::sqrt(phi * phi + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const complex_d mp = m.at(i, p);
          const complex_d mq = m.at(i, q);
          m.at(i, p) = c * mp + s * std::conj(u) * mq;
          m.at(i, q) = -s * u * mp + c * mq;
        }
        for (int j = 0; j < n; ++j) {
          const complex_d mp = m.at(p, j);
          const complex_d mq = m.at(q, j);
          m.at(p, j) = c * mp + s * u * mq;
          m.at(q, j) = -s * std::conj(u) * mp + c * mq;
        }
        m.at(p, q) = 0.0;
        m.at(q, p) = 0.0;
        m.at(p, p) = m.at(p, p).real();
        m.at(q, q) = m.at(q, q).real();
        if (vecs != nullptr) {
          for (int i = 0; i < n; ++i) {
            const complex_d vp = vecs->at(i, p);
            const complex_d vq = vecs->at(i, q);
            vecs->at(i, p) = c * vp + s * std::conj(u) * vq;
            vecs->at(i, q) = -s * u * vp + c * vq;
          }
        }
      }
    }
  }
  if (offdiag_norm(m) > 1e-14 * scale) {
    throw std::runtime_error("hermitian_eigenvalues: Jacobi iteration failed to converge");
  }
}

Matrix symmetrized(const Matrix& m) {
  Matrix h(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      h.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
    }
  }
  return h;
}

void require_hermitian(const Matrix& m, double tol, const char* who) {
  if (!m.is_hermitian(tol)) {
    throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian");
  }
}

}  // namespace

Matrix::Matrix(int dim) : dim_(dim) {
  if (dim < 1 || dim > 8) {
    throw std::invalid_argument("Matrix: dimension must be between 1 and 8");
  }
}

complex_d Matrix::trace() const {
  complex_d t = 0.0;
  for (int i = 0; i < dim_; ++i) {
    t += at(i, i);
  }
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      m = std::max(m, std::abs(at(i, j)));
    }
  }
  return m;
}

bool Matrix::is_hermitian(double tol) const {
  const double scale = std::max(1.0, max_abs());
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      if (std::abs(at(i, j) - std::conj(at(j, i))) > tol * scale) {
        return false;
      }
    }
  }
  return true;
}

double offdiagonal_abs_sum(const Matrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (i != j) {
        s += std::abs(m.at(i, j));
      }
    }
  }
  return s;
}

DensityMatrix::DensityMatrix(const Matrix& m) : m_(m) {
  if (m.dim() != 4 && m.dim() != 8) {
    throw std::invalid_argument("DensityMatrix: dimension must be 4 or 8");
  }
  if (!m.is_hermitian(1e-14)) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  if (std::abs(m.trace() - 1.0) > 1e-14) {
    throw std::invalid_argument("DensityMatrix: trace must equal 1");
  }
  for (int i = 0; i < m.dim(); ++i) {
    if (m.at(i, i).real() < -1e-14) {
      throw std::invalid_argument("DensityMatrix: negative diagonal entry");
    }
  }
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  require_hermitian(m, 1e-12, "hermitian_eigenvalues");
  Matrix work = symmetrized(m);
  jacobi_diagonalize(work, nullptr);
  std::vector<double> vals(static_cast<size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    vals[static_cast<size_t>(i)] = work.at(i, i).real();
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

EigenSystem hermitian_eigensystem(const Matrix& m) {
  require_hermitian(m, 1e-12, "hermitian_eigensystem");
  const int n = m.dim();
  Matrix work = symmetrized(m);
  Matrix vecs(n);
  for (int i = 0; i < n; ++i) {
    vecs.at(i, i) = 1.0;
  }
  jacobi_diagonalize(work, &vecs);
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return work.at(a, a).real() < work.at(b, b).real();
  });
  EigenSystem out{std::vector<double>(static_cast<size_t>(n)), Matrix(n)};
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<size_t>(k)];
    out.values[static_cast<size_t>(k)] = work.at(src, src).real();
    for (int i = 0; i < n; ++i) {
      out.vectors.at(i, k) = vecs.at(i, src);
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& rho, DetectorPair keep) {
  if (rho.dim() != 8) {
    throw std::invalid_argument("partial_trace: input must be 8x8");
  }
  Matrix out(4);
  for (int r = 0; r < 4; ++r) {
    for (int s = 0; s < 4; ++s) {
      const int r1 = r >> 1, r2 = r & 1;
      const int s1 = s >> 1, s2 = s & 1;
      complex_d acc = 0.0;
      for (int t = 0; t < 2; ++t) {
        int i, j;
        switch (keep) {
          case DetectorPair::ab:
            i = idx3(r1, r2, t);
            j = idx3(s1, s2, t);
            break;
          case DetectorPair::ac:
            i = idx3(r1, t, r2);
            j = idx3(s1, t, s2);
            break;
          default:  // bc
            i = idx3(t, r1, r2);
            j = idx3(t, s1, s2);
            break;
        }
        acc += rho.at(i, j);
      }
      out.at(r, s) = acc;
    }
  }
  return out;
}

Matrix partial_transpose(const Matrix& rho, Subsystem sub) {
  const int n = rho.dim();
  if (n != 4 && n != 8) {
    throw std::invalid_argument("partial_transpose: input must be 4x4 or 8x8");
  }
  if (n == 4 && sub == Subsystem::c) {
    throw std::invalid_argument("partial_transpose: no third subsystem in a 4x4 state");
  }
  const int slot = sub == Subsystem::a ? 0 : (sub == Subsystem::b ? 1 : 2);
  Matrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int oi[3], oj[3];
      if (n == 4) {
        oi[0] = i >> 1;
        oi[1] = i & 1;
        oi[2] = 0;
        oj[0] = j >> 1;
        oj[1] = j & 1;
        oj[2] = 0;
      } else {
        for (int k = 0; k < 3; ++k) {
          oi[k] = kOcc3[i][k];
          oj[k] = kOcc3[j][k];
        }
      }
      std::swap(oi[slot], oj[slot]);
      int pi, pj;
      if (n == 4) {
        pi = 2 * oi[0] + oi[1];
        pj = 2 * oj[0] + oj[1];
      } else {
        pi = idx3(oi[0], oi[1], oi[2]);
        pj = idx3(oj[0], oj[1], oj[2]);
      }
      out.at(pi, pj) = rho.at(i, j);
    }
  }
  return out;
}

double negativity_numeric(const Matrix& rho, Subsystem sub) {
  const Matrix pt = partial_transpose(rho, sub);
  double neg = 0.0;
  for (double v : hermitian_eigenvalues(pt)) {
    if (v < 0.0) {
      neg -= v;
    }
  }
  return neg;
}

double von_neumann_entropy(const std::vector<double>& eigs) {
  const double sum = std::accumulate(eigs.begin(), eigs.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-10) {
    throw std::invalid_argument("von_neumann_entropy: eigenvalues must sum to 1");
  }
  return detail::entropy_bits_clamped(eigs);
}

namespace detail {

double entropy_bits_clamped(const std::vector<double>& eigs) {
  double s = 0.0;
  for (double x : eigs) {
    if (x < -eigenvalue_clamp) {
      char buf[96];
      std::snprintf(buf, sizeof(buf),
                    "entropy: nonphysical eigenvalue %.3e below clamp threshold", x);
      throw std::domain_error(buf);
    }
    if (x <= 0.0) {
      continue;  // clamped tail or exact zero; 0 log 0 := 0
    }
    s -= x * std::log2(x);
  }
  return s;
}

}  // namespace detail

}  // namespace udw
