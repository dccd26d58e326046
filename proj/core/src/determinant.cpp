#include "groth/determinant.hpp"

#include <algorithm>
#include <stdexcept>

namespace groth {

BivarPoly determinant(const Matrix<BivarPoly>& m) {
  return determinant(m, BivarPoly(1), [](const BivarPoly& a, const BivarPoly& b) { return a * b; });
}

TruncatedSeries determinant(const Matrix<TruncatedSeries>& m, int nvars, int cutoff) {
  return determinant(m, TruncatedSeries::constant(nvars, cutoff, 1),
                     [](const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; });
}

GenPoly determinant(const Matrix<GenPoly>& m, GenPoly::Basis basis, std::optional<int> cutoff) {
  return determinant(m, GenPoly::constant(basis, 1, cutoff),
                     [](const GenPoly& a, const GenPoly& b) { return a * b; });
}

namespace {

// [x^r] (1 - c x)^{-m} without the constant c: C(m + r - 1, r), and [r == 0] for m = 0.
BigInt neg_power_coeff(int m, int r) {
  if (r < 0) return 0;
  if (m == 0) return r == 0 ? 1 : 0;
  return binomial_std(m + r - 1, r);
}

// Number of multisets of size r drawn from `levels` levels.
BigInt multichoose(int levels, int r) {
  if (r < 0 || levels < 0) return 0;
  return neg_power_coeff(levels, r);
}

}  // namespace

TruncatedSeries bialternant_G(const Partition& lambda, int n, int d, const Params& p) {
  if (lambda.length() > n) return TruncatedSeries(n, d);
  if (lambda.empty()) return TruncatedSeries::constant(n, d, 1);
  const int big = d + n * (n - 1) / 2;
  Matrix<TruncatedSeries> m(n, std::vector<TruncatedSeries>(n, TruncatedSeries(n, big)));
  std::vector<BivarPoly> apow{1}, bpow{1};
  for (int k = 1; k <= big; ++k) {
    apow.push_back(apow.back() * p.alpha);
    bpow.push_back(bpow.back() * p.beta);
  }
  for (int j = 1; j <= n; ++j) {
    const int lj = lambda[j - 1];
    const int base = lj + n - j;
    // univariate coefficients of x^base (1 + beta x)^{j-1} (1 - alpha x)^{-lj}
    std::vector<BivarPoly> uni(big + 1);
    for (int s = 0; s <= j - 1; ++s)
      for (int r = 0; base + s + r <= big; ++r) {
        BigInt c = binomial_std(j - 1, s) * neg_power_coeff(lj, r);
        if (c == 0) continue;
        uni[base + s + r] += (bpow[s] * apow[r]).scaled(c);
      }
    for (int i = 1; i <= n; ++i) {
      TruncatedSeries e(n, big);
      for (int deg = base; deg <= big; ++deg) {
        if (uni[deg].is_zero()) continue;
        Exponent ex(n, 0);
        ex[i - 1] = deg;
        e.add(ex, uni[deg]);
      }
      m[i - 1][j - 1] = e;
    }
  }
  return exact_divide_by_vandermonde(determinant(m, n, big));
}

TruncatedSeries exact_divide_by_vandermonde(const TruncatedSeries& num) {
  TruncatedSeries q = num;
  const int n = num.nvars();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) q = divide_by_difference(q, i, j);
  return q;
}

namespace {

int default_size(const Partition& lambda, int n, int d, JTForm form) {
  switch (form) {
    case JTForm::H:
      return std::max(n, lambda.length());
    case JTForm::E:
      // each extra row beyond l(lambda') contributes in degree >= 1, so the
      // determinant is stable once the extra rows exceed the degree budget
      return lambda[0] + std::max(0, d - lambda.size()) + 1;
    case JTForm::EAlpha:
      return lambda[0];
  }
  return 0;
}

}  // namespace

TruncatedSeries jacobi_trudi_G_sized(const Partition& lambda, int n, int d, JTForm form, int t,
                                     const Params& p) {
  const BivarPoly g = p.gamma();
  const Partition conj = lambda.conjugate();
  const GenPoly::Basis basis = form == JTForm::H ? GenPoly::Basis::H : GenPoly::Basis::E;
  auto gen = [&](int k) { return GenPoly::generator(basis, k, d); };
  Matrix<GenPoly> m(t, std::vector<GenPoly>(t, GenPoly(basis, d)));
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j) {
      GenPoly entry(basis, d);
      if (form == JTForm::EAlpha) {
        const int li = conj[i - 1];
        const int pidx = li - i + j;
        for (int k = 0; pidx + k <= d; ++k) {
          if (pidx + k < 0) continue;
          BigInt c = binomial_std(li - 1 + k, k);
          if (li == 0) c = k == 0 ? 1 : 0;
          if (c == 0) continue;
          entry += gen(pidx + k).scaled(pow(g, k).scaled(c));
        }
      } else {
        const int li = form == JTForm::H ? lambda[i - 1] : conj[i - 1];
        const int pidx = li - i + j;
        for (int k = 0; k <= i - 1; ++k) {
          if (pidx + k < 0 || pidx + k > d) continue;
          entry += gen(pidx + k).scaled(pow(g, k).scaled(binomial_std(i - 1, k)));
        }
      }
      m[i - 1][j - 1] = entry;
    }
  GenPoly det = determinant(m, basis, d);
  if (basis == GenPoly::Basis::E) det = det.kill_generators_above(n);
  TruncatedSeries s = schur_to_series(det.to_schur(), n, d);
  return substitute_rational(s, form == JTForm::E ? -p.beta : p.alpha);
}

TruncatedSeries jacobi_trudi_G(const Partition& lambda, int n, int d, JTForm form, const Params& p) {
  if (lambda.empty()) return TruncatedSeries::constant(n, d, 1);
  return jacobi_trudi_G_sized(lambda, n, d, form, default_size(lambda, n, d, form), p);
}

BivarPoly ftilde_coeff(int i, int p, int q, const Params& par) {
  // [t^{p-q}] (1 - gamma t)^{-(i-1)} (1 - alpha t)^{-(q+1)}
  if (i < 1 || p < q) return 0;
  const BivarPoly g = par.gamma();
  BivarPoly r;
  for (int m = 0; m <= p - q; ++m) {
    BigInt c = multichoose(i - 1, p - q - m) * binomial(q + m, m);
    if (c == 0) continue;
    r += (pow(g, p - q - m) * pow(par.alpha, m)).scaled(c);
  }
  return r;
}

namespace {

struct Pt {
  long x, y;
};

// Total weight of paths with up and right steps from (ax, ay) to (bx, by)
// inside x <= 0; right steps weigh gamma below y = 0 and alpha above.
BivarPoly left_weight(Pt a, Pt b, const Params& par) {
  if (b.x < a.x || b.y < a.y) return 0;
  const long r = b.x - a.x;
  const long neg = std::max(0L, std::min(b.y, -1L) - a.y + 1);
  const long nonneg = (b.y + 1) - std::max(a.y, 0L);
  const long levels_nonneg = std::max(0L, nonneg);
  BivarPoly w;
  for (long k = 0; k <= r; ++k) {
    BigInt c = multichoose(neg, k) * multichoose(levels_nonneg, r - k);
    if (c == 0) continue;
    w += (pow(par.gamma(), k) * pow(par.alpha, r - k)).scaled(c);
  }
  return w;
}

// Up and diagonal steps inside x >= 0; each move starts at a distinct level;
// diagonals weigh gamma below y = 0 and beta above.
BivarPoly right_weight(Pt a, Pt b, const Params& par) {
  const long dcount = b.x - a.x;
  const long moves = b.y - a.y;
  if (dcount < 0 || moves < dcount) return 0;
  const long neg = std::max(0L, std::min(b.y - 1, -1L) - a.y + 1);
  const long nonneg = moves - neg;
  BivarPoly w;
  for (long k = 0; k <= dcount; ++k) {
    BigInt c = binomial_std(neg, k) * binomial_std(nonneg, dcount - k);
    if (c == 0) continue;
    w += (pow(par.gamma(), k) * pow(par.beta, dcount - k)).scaled(c);
  }
  return w;
}

BivarPoly type1_weight(Pt a, Pt b, const Params& par) {
  if (b.y < a.y || b.x < a.x) return 0;
  if (b.x <= 0) return left_weight(a, b, par);
  if (a.x >= 0) return right_weight(a, b, par);
  // the step into x = 0 is a right step from (-1, y0)
  BivarPoly w;
  for (long y0 = a.y; y0 <= b.y; ++y0) {
    BivarPoly l = left_weight(a, {-1, y0}, par);
    if (l.is_zero()) continue;
    BivarPoly rs = y0 < 0 ? par.gamma() : par.alpha;
    BivarPoly r = right_weight({0, y0}, b, par);
    if (r.is_zero()) continue;
    w += l * rs * r;
  }
  return w;
}

}  // namespace

BivarPoly f_positive_coeff(int i, int p, int q, int d, const Params& par) {
  if (i < 1) return 0;
  // A_i from mu_i = p + i (on y = 1 - i unless mu_i < i); B_j from q = nu_j - j
  (void)d;
  Pt a = p >= 0 ? Pt{-p, 1 - i} : Pt{-p, 1 - p - i};
  Pt b = q >= 0 ? Pt{-q, q} : Pt{-q, -q - 1};
  return type1_weight(a, b, par);
}

BivarPoly f_alpha_beta_det(const Partition& mu, const Partition& nu, FEntries entries, const Params& par) {
  if (!mu.contains(nu)) return 0;
  const int l = mu.length();
  const int d = nu.diagonal();
  Matrix<BivarPoly> m(l, std::vector<BivarPoly>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      int p = mu[i - 1] - i, q = nu[j - 1] - j;
      m[i - 1][j - 1] = entries == FEntries::Positive ? f_positive_coeff(i, p, q, d, par)
                                                      : ftilde_coeff(i, p, q, par);
    }
  return determinant(m);
}

namespace {

BigInt int_det(const Matrix<BivarPoly>& m) { return determinant(m).constant_term(); }

}  // namespace

BigInt elegant_count_det(const Partition& mu, const Partition& nu) {
  if (!mu.contains(nu)) return 0;
  const int l = mu.length();
  Matrix<BivarPoly> m(l, std::vector<BivarPoly>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      m[i - 1][j - 1] = BivarPoly(binomial(mu[i - 1] - nu[j - 1] + j - 2, mu[i - 1] - i - nu[j - 1] + j));
  return int_det(m);
}

BigInt dual_hook_det(const Partition& lambda, const Partition& nu) {
  if (!lambda.contains(nu) || lambda.diagonal() != nu.diagonal()) return 0;
  // Rows below the diagonal have lambda_i - i < 0, where C(lambda_i - i, m)
  // is (-1)^m times the positive lower-block entry; undo that sign.
  const int l = lambda.length();
  Matrix<BivarPoly> m(l, std::vector<BivarPoly>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      m[i - 1][j - 1] = BivarPoly(binomial(lambda[i - 1] - i, lambda[i - 1] - i - nu[j - 1] + j));
  int below = 0;
  for (int i = lambda.diagonal() + 1; i <= l; ++i) below += lambda[i - 1] - nu[i - 1];
  const BigInt det = int_det(m);
  return below % 2 ? BigInt(-det) : det;
}

BivarPoly cauchy_binet_compose(const EntryFamily<BivarPoly>& a, const EntryFamily<BivarPoly>& b,
                               const Partition& lambda, const Partition& nu, int t, int kmin, int kmax) {
  Matrix<BivarPoly> m(t, std::vector<BivarPoly>(t));
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j) {
      BivarPoly c;
      for (int k = kmin; k <= kmax; ++k) {
        BivarPoly x = a(i, lambda[i - 1] - i, k);
        if (x.is_zero()) continue;
        c += x * b(j, k, nu[j - 1] - j);
      }
      m[i - 1][j - 1] = c;
    }
  return determinant(m);
}

BivarPoly cauchy_binet_middle_sum(const EntryFamily<BivarPoly>& a, const EntryFamily<BivarPoly>& b,
                                  const Partition& lambda, const Partition& nu, int t, int kmin, int kmax) {
  BivarPoly total;
  std::vector<int> ks;
  auto rec = [&](auto&& self, int hi) -> void {
    if (static_cast<int>(ks.size()) == t) {
      Matrix<BivarPoly> fa(t, std::vector<BivarPoly>(t)), gb(t, std::vector<BivarPoly>(t));
      for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j) {
          fa[i - 1][j - 1] = a(i, lambda[i - 1] - i, ks[j - 1]);
          gb[i - 1][j - 1] = b(j, ks[i - 1], nu[j - 1] - j);
        }
      BivarPoly x = determinant(fa);
      if (!x.is_zero()) total += x * determinant(gb);
      return;
    }
    const int remaining = t - static_cast<int>(ks.size());
    for (int k = hi; k >= kmin + remaining - 1; --k) {
      ks.push_back(k);
      self(self, k - 1);
      ks.pop_back();
    }
  };
  rec(rec, kmax);
  return total;
}

SchurExpansion jacobi_trudi_g(const Partition& lambda, JTForm form, const Params& par) {
  if (lambda.empty()) return SchurExpansion::one();
  const bool dual = form != JTForm::H;
  // the e-form with f-tilde at (beta, alpha) gives g^(alpha,beta)
  const Params fp = dual ? par.swapped() : par;
  const Partition rows = dual ? lambda.conjugate() : lambda;
  const GenPoly::Basis basis = dual ? GenPoly::Basis::E : GenPoly::Basis::H;
  const int l = rows.length();
  Matrix<GenPoly> m(l, std::vector<GenPoly>(l, GenPoly(basis)));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      const int p = rows[i - 1] - i;
      GenPoly entry(basis);
      for (int k = -j; k <= p; ++k) {
        BivarPoly c = ftilde_coeff(i, p, k, fp);
        if (c.is_zero()) continue;
        entry += GenPoly::generator(basis, k + j).scaled(c);
      }
      m[i - 1][j - 1] = entry;
    }
  SchurExpansion r = determinant(m, basis, std::nullopt).to_schur();
  r.set_cutoff(std::nullopt);
  return r;
}

BivarPoly elementary(const std::vector<BivarPoly>& vals, int k) {
  if (k < 0 || k > static_cast<int>(vals.size())) return 0;
  std::vector<BivarPoly> e(k + 1);
  e[0] = 1;
  for (const auto& v : vals)
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * v;
  return e[k];
}

SchurExpansion refined_g_jt_schur(const Partition& lambda, const std::vector<BivarPoly>& t) {
  if (lambda.empty()) return SchurExpansion::one();
  const Partition conj = lambda.conjugate();
  const int l = conj.length();
  if (static_cast<int>(t.size()) < conj[0] - 1) throw std::invalid_argument("refined_g_jt: too few parameters");
  Matrix<GenPoly> m(l, std::vector<GenPoly>(l, GenPoly(GenPoly::Basis::E)));
  for (int i = 1; i <= l; ++i) {
    const int li = conj[i - 1];
    std::vector<BivarPoly> ts(t.begin(), t.begin() + (li - 1));
    for (int j = 1; j <= l; ++j) {
      GenPoly entry(GenPoly::Basis::E);
      for (int k = 0; k <= li - 1; ++k) {
        BivarPoly c = elementary(ts, k);
        if (c.is_zero()) continue;
        entry += GenPoly::generator(GenPoly::Basis::E, li - i + j - k).scaled(c);
      }
      m[i - 1][j - 1] = entry;
    }
  }
  return determinant(m, GenPoly::Basis::E, std::nullopt).to_schur();
}

TruncatedSeries refined_g_jt(const Partition& lambda, const std::vector<BivarPoly>& t, int n, int d) {
  return schur_to_series(refined_g_jt_schur(lambda, t), n, d);
}

}  // namespace groth
