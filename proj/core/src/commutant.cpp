#include "dkn/commutant.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dkn/linear_algebra.hpp"

namespace dkn {

PolynomialBandOperator::PolynomialBandOperator(std::map<int, Polynomial<Rational>> bands) : bands_(std::move(bands)) {
  trim();
}

void PolynomialBandOperator::trim() {
  std::erase_if(bands_, [](const auto& kv) { return kv.second.is_zero_polynomial(); });
}

PolynomialBandOperator PolynomialBandOperator::from_operator(const DifferenceOperator<Rational>& op, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("from_operator: max_degree must be >= 0");
  std::vector<Rational> nodes;
  for (int n = 0; n <= max_degree; ++n) nodes.emplace_back(n);

  std::map<int, Polynomial<Rational>> bands;
  for (int j = op.band_lo(); j <= op.band_hi(); ++j) {
    std::vector<Rational> values;
    for (int n = 0; n <= max_degree; ++n) values.push_back(op.coefficient(j, n));
    Polynomial<Rational> p = interpolate(nodes, values);
    for (long n = max_degree + 1; n <= 2L * max_degree + 1; ++n) {
      if (p(Rational(n)) != op.coefficient(j, n)) {
        throw std::invalid_argument("from_operator: band " + std::to_string(j) +
                                    " is not a polynomial in n of degree <= " + std::to_string(max_degree));
      }
    }
    bands.emplace(j, std::move(p));
  }
  return PolynomialBandOperator(std::move(bands));
}

int PolynomialBandOperator::band_lo() const { return bands_.empty() ? 0 : bands_.begin()->first; }
int PolynomialBandOperator::band_hi() const { return bands_.empty() ? 0 : bands_.rbegin()->first; }

int PolynomialBandOperator::degree() const {
  int d = -1;
  for (const auto& [j, p] : bands_) d = std::max(d, p.degree());
  return d;
}

const Polynomial<Rational>& PolynomialBandOperator::band(int j) const {
  static const Polynomial<Rational> zero;
  auto it = bands_.find(j);
  return it == bands_.end() ? zero : it->second;
}

DifferenceOperator<Rational> PolynomialBandOperator::to_operator() const {
  std::map<int, DifferenceOperator<Rational>::SiteFunction> fns;
  for (const auto& [j, p] : bands_) {
    fns.emplace(j, [p](long n) { return p(Rational(n)); });
  }
  return DifferenceOperator<Rational>::from_bands(std::move(fns));
}

PolynomialBandOperator compose(const PolynomialBandOperator& a, const PolynomialBandOperator& b) {
  std::map<int, Polynomial<Rational>> out;
  for (const auto& [i, pa] : a.bands_) {
    for (const auto& [j, pb] : b.bands_) out[i + j] = out[i + j] + pa * pb.shifted(i);
  }
  return PolynomialBandOperator(std::move(out));
}

PolynomialBandOperator operator-(const PolynomialBandOperator& a, const PolynomialBandOperator& b) {
  std::map<int, Polynomial<Rational>> out = a.bands_;
  for (const auto& [j, p] : b.bands_) out[j] = out[j] - p;
  return PolynomialBandOperator(std::move(out));
}

namespace {

std::size_t column(const CommutantAnsatz& a, int j, int k) {
  return static_cast<std::size_t>((j + a.band) * (a.degree + 1) + k);
}

/// Coordinates of `x` in the ansatz, or nothing if it does not fit.
std::optional<std::vector<Rational>> coordinates(const PolynomialBandOperator& x, const CommutantAnsatz& a) {
  if (x.bands().empty()) return std::vector<Rational>(static_cast<std::size_t>(a.unknowns()));
  if (x.band_lo() < -a.band || x.band_hi() > a.band || x.degree() > a.degree) return std::nullopt;
  std::vector<Rational> v(static_cast<std::size_t>(a.unknowns()));
  for (const auto& [j, p] : x.bands()) {
    for (int k = 0; k <= p.degree(); ++k) v[column(a, j, k)] = p.coefficient(static_cast<std::size_t>(k));
  }
  return v;
}

PolynomialBandOperator from_coordinates(const std::vector<Rational>& v, const CommutantAnsatz& a) {
  std::map<int, Polynomial<Rational>> bands;
  for (int j = -a.band; j <= a.band; ++j) {
    std::vector<Rational> c;
    for (int k = 0; k <= a.degree; ++k) c.push_back(v[column(a, j, k)]);
    bands.emplace(j, Polynomial<Rational>(std::move(c)));
  }
  return PolynomialBandOperator(std::move(bands));
}

PolynomialBandOperator identity_operator() {
  return PolynomialBandOperator({{0, Polynomial<Rational>::constant(Rational(1))}});
}

}  // namespace

ExactCommutant commutant_solve_exact(const PolynomialBandOperator& l, const CommutantAnsatz& ansatz) {
  if (ansatz.band < 0 || ansatz.degree < 0) throw std::invalid_argument("commutant_solve_exact: empty ansatz");
  const int m_lo = l.band_lo() - ansatz.band;
  const int m_hi = l.band_hi() + ansatz.band;
  const int row_degree = std::max(l.degree(), 0) + ansatz.degree;
  const std::size_t rows_per_band = static_cast<std::size_t>(row_degree + 1);

  RationalMatrix system(static_cast<std::size_t>(m_hi - m_lo + 1) * rows_per_band,
                        static_cast<std::size_t>(ansatz.unknowns()));
  for (int j = -ansatz.band; j <= ansatz.band; ++j) {
    for (int k = 0; k <= ansatz.degree; ++k) {
      const auto basis = Polynomial<Rational>::monomial(static_cast<std::size_t>(k));
      for (const auto& [i, li] : l.bands()) {
        // x_j = t^k enters band m = i + j as l_i(n)(n+i)^k - n^k l_i(n+j).
        const int m = i + j;
        const Polynomial<Rational> entry = li * basis.shifted(i) - basis * li.shifted(j);
        for (int p = 0; p <= entry.degree(); ++p) {
          const std::size_t row = static_cast<std::size_t>(m - m_lo) * rows_per_band + static_cast<std::size_t>(p);
          system(row, column(ansatz, j, k)) += entry.coefficient(static_cast<std::size_t>(p));
        }
      }
    }
  }

  ExactCommutant out;
  out.ansatz = ansatz;
  for (const auto& v : nullspace(system)) out.basis.push_back(from_coordinates(v, ansatz));

  // Powers of L that fit the ansatz.
  RationalMatrix trivial(0, static_cast<std::size_t>(ansatz.unknowns()));
  PolynomialBandOperator power = identity_operator();
  const int reach = std::max(std::abs(l.band_lo()), std::abs(l.band_hi()));
  for (int k = 0; k <= ansatz.unknowns(); ++k) {
    if (k > 0 && reach == 0) break;
    if (k * reach > ansatz.band) break;
    if (auto c = coordinates(power, ansatz)) trivial.push_row(*c);
    power = compose(power, l);
  }
  const std::size_t trivial_rank = rank(trivial);
  out.trivial_dimension = static_cast<int>(trivial_rank);

  for (const auto& x : out.basis) {
    RationalMatrix extended = trivial;
    extended.push_row(*coordinates(x, ansatz));
    if (rank(extended) > trivial_rank) {
      out.nontrivial = x;
      break;
    }
  }
  return out;
}

ExactCommutant commutant_solve_exact(const DifferenceOperator<Rational>& l, const CommutantAnsatz& ansatz) {
  return commutant_solve_exact(PolynomialBandOperator::from_operator(l), ansatz);
}

ExactCommutant commutant_search_exact(const PolynomialBandOperator& l, int band, int start_degree, int max_degree) {
  if (start_degree > max_degree) throw std::invalid_argument("commutant_search_exact: start degree above the cap");
  ExactCommutant result;
  for (int d = start_degree; d <= max_degree; ++d) {
    result = commutant_solve_exact(l, CommutantAnsatz{band, d});
    if (result.has_nontrivial()) break;
  }
  return result;
}

BandNorm commutant_verification(const PolynomialBandOperator& l, const PolynomialBandOperator& x, long site_lo,
                                long site_hi) {
  return max_band_norm(commutator(l.to_operator(), x.to_operator()), site_lo, site_hi);
}

WindowedCommutant commutant_solve_windowed(const DifferenceOperator<double>& l, int band, long site_lo,
                                           long site_hi) {
  if (band < 0) throw std::invalid_argument("commutant_solve_windowed: band must be >= 0");
  if (site_lo > site_hi) throw std::invalid_argument("commutant_solve_windowed: empty window");
  const int width = 2 * band + 1;
  const long sites = site_hi - site_lo + 1;
  const auto col = [&](int j, long n) { return static_cast<Eigen::Index>((n - site_lo) * width + (j + band)); };
  const auto inside = [&](long n) { return n >= site_lo && n <= site_hi; };

  std::vector<std::vector<std::pair<Eigen::Index, double>>> rows;
  for (int m = l.band_lo() - band; m <= l.band_hi() + band; ++m) {
    for (long n = site_lo; n <= site_hi; ++n) {
      std::vector<std::pair<Eigen::Index, double>> row;
      bool complete = true;
      for (int i = l.band_lo(); i <= l.band_hi() && complete; ++i) {
        const int j = m - i;
        if (j < -band || j > band) continue;
        // L X: l_i(n) x_j(n+i);  X L: x_j(n) l_i(n+j).
        const double lx = l.coefficient(i, n);
        const double xl = l.coefficient(i, n + j);
        if (lx != 0.0) {
          if (!inside(n + i)) complete = false;
          else row.emplace_back(col(j, n + i), lx);
        }
        if (xl != 0.0) row.emplace_back(col(j, n), -xl);
      }
      if (complete && !row.empty()) rows.push_back(std::move(row));
    }
  }

  WindowedCommutant out;
  out.band = band;
  out.site_lo = site_lo;
  out.site_hi = site_hi;
  out.unknowns = static_cast<int>(sites * width);
  out.equations = static_cast<int>(rows.size());
  if (out.equations < out.unknowns) {
    throw std::invalid_argument("commutant_solve_windowed: ill-posed window (" + std::to_string(out.unknowns) +
                                " unknowns, " + std::to_string(out.equations) + " equations)");
  }

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(out.equations, out.unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) a(static_cast<Eigen::Index>(r), c) += v;
  }
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();  // descending
  const Eigen::Index k = sigma.size();

  out.largest_singular_value = sigma(0);
  const double threshold = kWindowedNullThreshold * sigma(0);
  for (Eigen::Index i = 0; i < k; ++i) {
    if (sigma(i) < threshold) ++out.nullity;
  }
  const Eigen::Index first_null = k - out.nullity;
  if (out.nullity > 0 && first_null > 0) {
    out.gap = sigma(first_null - 1) / std::max(sigma(first_null), std::numeric_limits<double>::min());
  }
  for (Eigen::Index i = k - 1; i >= 0 && i >= k - (out.nullity + 4); --i) {
    out.smallest_singular_values.push_back(sigma(i));
  }

  const Eigen::VectorXd x = svd.matrixV().col(k - 1);
  out.residual = (a * x).norm();
  out.representative = OperatorWindow<double>{-band, band, site_lo, site_hi, std::vector<double>(x.data(), x.data() + x.size())};

  // Trivial solutions: powers of L on each residue class of the lattice
  // generated by L's band offsets.
  int offsets_gcd = 0;
  int reach = 0;
  for (int i = l.band_lo(); i <= l.band_hi(); ++i) {
    bool present = false;
    for (long n = site_lo; n <= site_hi && !present; ++n) present = l.coefficient(i, n) != 0.0;
    if (!present) continue;
    offsets_gcd = std::gcd(offsets_gcd, std::abs(i));
    reach = std::max(reach, std::abs(i));
  }
  const int powers = reach == 0 ? 1 : band / reach + 1;
  out.trivial_count = std::max(offsets_gcd, 1) * powers;
  return out;
}

}  // namespace dkn
