#include "tropm0n/qspace.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "tropm0n/lattice.hpp"
#include "tropm0n/linalg.hpp"

namespace tropm0n {

IntegerMatrix pair_sums_matrix(int n) {
  const PairIndex idx(n);
  IntegerMatrix m = IntegerMatrix::Zero(idx.count(), n);
  for (int p = 0; p < idx.count(); ++p) {
    const auto& [i, j] = idx.pair(p);
    m(p, i - 1) = 1;
    m(p, j - 1) = 1;
  }
  return m;
}

IntegerVector split_vector(const Split& s) {
  const PairIndex idx(s.n());
  IntegerVector v(idx.count());
  for (int p = 0; p < idx.count(); ++p) {
    const auto& [i, j] = idx.pair(p);
    v[p] = s.separates(i, j) ? 1 : 0;
  }
  return v;
}

namespace {

// Per-n data for quotient membership and lattice questions.
class QuotientContext {
 public:
  static const QuotientContext& get(int n);

  explicit QuotientContext(int n)
      : n_(n), pairs_(n), image_span_(pairs_.count()) {
    const IntegerMatrix phi = pair_sums_matrix(n);
    for (Eigen::Index j = 0; j < phi.cols(); ++j) {
      image_span_.insert(to_rational(IntegerVector(phi.col(j))));
    }
    const int m = pairs_.count();
    const int codim = m - image_span_.rank();

    // Unimodular projection with kernel exactly the rational span of the
    // image: the bottom rows of the left Smith transform of a saturated
    // basis of that span.
    const IntegerMatrix saturated = saturate_columns(phi);
    const SmithDecomposition d = smith_normal_form(saturated);
    for (const Integer& divisor : d.elementary_divisors()) {
      if (divisor != 1) {
        throw std::runtime_error("saturated basis must have trivial divisors");
      }
    }
    projection_ = d.left.bottomRows(codim);

    const auto splits = all_splits(n);
    projected_rays_.resize(codim, static_cast<Eigen::Index>(splits.size()));
    for (std::size_t s = 0; s < splits.size(); ++s) {
      projected_rays_.col(s) = projection_ * split_vector(splits[s]);
    }
    if (codim > 0) {
      const SmithDecomposition rays = smith_normal_form(projected_rays_);
      if (rays.rank != codim) {
        throw std::runtime_error("split vectors must span the quotient");
      }
    }
  }

  int n() const { return n_; }
  const PairIndex& pairs() const { return pairs_; }
  const RationalSpan& image_span() const { return image_span_; }
  const IntegerMatrix& projection() const { return projection_; }
  const IntegerMatrix& projected_rays() const { return projected_rays_; }

 private:
  int n_;
  PairIndex pairs_;
  RationalSpan image_span_;
  IntegerMatrix projection_;
  IntegerMatrix projected_rays_;
};

const QuotientContext& QuotientContext::get(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QuotientContext>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<QuotientContext>(n)).first;
  }
  return *it->second;
}

// Per-(n, k) solver for positive representations: the split vectors of the
// 2-subsets avoiding k, all but one, together with the pair_sums columns
// form a square invertible system.
class PotentialContext {
 public:
  static const PotentialContext& get(int n, int k);

  PotentialContext(int n, int k) : n_(n), k_(k) {
    const PairIndex idx(n);
    if (n >= 4) {  // no 2-subset is a split side when n = 3
      for (int p = 0; p < idx.count(); ++p) {
        const auto& [i, j] = idx.pair(p);
        if (i != k && j != k) {
          subsets_.emplace_back(i, j);
        }
      }
    }
    const int m = idx.count();
    const int from_splits =
        std::max(static_cast<int>(subsets_.size()) - 1, 0);
    RationalMatrix system(m, from_splits + n);
    for (int c = 0; c < from_splits; ++c) {
      const auto& [i, j] = subsets_[c];
      system.col(c) =
          to_rational(split_vector(Split(n, std::vector<int>{i, j})));
    }
    system.rightCols(n) = to_rational(pair_sums_matrix(n));
    if (system.cols() != m) {
      throw std::runtime_error("positive representation system must be square");
    }
    solver_.compute(system);
    if (!solver_.isInvertible()) {
      throw std::runtime_error("positive representation system is singular");
    }
  }

  const std::vector<std::pair<int, int>>& subsets() const { return subsets_; }

  PositiveRepresentation solve(const RationalVector& v) const {
    PositiveRepresentation rep;
    rep.n = n_;
    rep.k = k_;
    rep.pairs = subsets_;
    rep.coeffs.assign(subsets_.size(), Rational(0));
    if (subsets_.empty()) {
      return rep;
    }
    const RationalVector x = solver_.solve(v);
    for (std::size_t c = 0; c + 1 < subsets_.size(); ++c) {
      rep.coeffs[c] = x[static_cast<Eigen::Index>(c)];
    }
    const Rational shift = *std::min_element(rep.coeffs.begin(), rep.coeffs.end());
    for (Rational& coeff : rep.coeffs) {
      coeff -= shift;
    }
    return rep;
  }

 private:
  int n_;
  int k_;
  std::vector<std::pair<int, int>> subsets_;
  Eigen::FullPivLU<RationalMatrix> solver_;
};

const PotentialContext& PotentialContext::get(int n, int k) {
  if (n < 3) {
    throw std::invalid_argument("potential requires n >= 3");
  }
  if (k < 1 || k > n) {
    throw std::invalid_argument("leaf label out of range");
  }
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<PotentialContext>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({n, k});
  if (it == cache.end()) {
    it = cache.emplace(std::make_pair(n, k),
                       std::make_unique<PotentialContext>(n, k))
             .first;
  }
  return *it->second;
}

void require_ambient(int n, const RationalVector& v) {
  if (v.size() != PairIndex(n).count()) {
    throw std::invalid_argument("vector has wrong ambient dimension");
  }
}

}  // namespace

RationalVector embed_curve(const ConeType& cone,
                           const std::map<Split, Rational>& lengths) {
  if (lengths.size() != static_cast<std::size_t>(cone.dim())) {
    throw std::invalid_argument("lengths must cover exactly the cone's splits");
  }
  RationalVector out = RationalVector::Zero(PairIndex(cone.n()).count());
  for (const Split& s : cone.splits()) {
    const auto it = lengths.find(s);
    if (it == lengths.end()) {
      throw std::invalid_argument("missing length for a split of the cone");
    }
    if (it->second <= 0) {
      throw std::invalid_argument("edge lengths must be positive");
    }
    out += it->second * to_rational(split_vector(s));
  }
  return out;
}

bool quotient_equal(int n, const RationalVector& v, const RationalVector& w) {
  require_ambient(n, v);
  require_ambient(n, w);
  return QuotientContext::get(n).image_span().contains(v - w);
}

int quotient_dim(int n) {
  const QuotientContext& ctx = QuotientContext::get(n);
  return ctx.pairs().count() - ctx.image_span().rank();
}

Rational PositiveRepresentation::total() const {
  Rational sum = 0;
  for (const Rational& c : coeffs) {
    sum += c;
  }
  return sum;
}

const Rational& PositiveRepresentation::coeff(int i, int j) const {
  if (i > j) {
    std::swap(i, j);
  }
  const auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(i, j));
  if (it == pairs.end()) {
    throw std::invalid_argument("pair not in the representation's domain");
  }
  return coeffs[static_cast<std::size_t>(it - pairs.begin())];
}

PositiveRepresentation positive_representation(int n, int k,
                                               const RationalVector& v) {
  require_ambient(n, v);
  return PotentialContext::get(n, k).solve(v);
}

Rational psi_potential(int n, int k, const RationalVector& v) {
  require_ambient(n, v);
  return PotentialContext::get(n, k).solve(v).total();
}

bool spans_quotient(int n, int k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("leaf label out of range");
  }
  const PairIndex idx(n);
  const IntegerMatrix phi = pair_sums_matrix(n);
  RationalSpan span(idx.count());
  for (Eigen::Index j = 0; j < n; ++j) {
    span.insert(to_rational(IntegerVector(phi.col(j))));
  }
  for (int p = 0; p < idx.count(); ++p) {
    const auto& [i, j] = idx.pair(p);
    if (i != k && j != k && n >= 4) {
      span.insert(to_rational(split_vector(Split(n, std::vector<int>{i, j}))));
    }
  }
  return span.rank() == idx.count();
}

bool unimodular_rays(int n, const std::vector<IntegerVector>& rays) {
  const QuotientContext& ctx = QuotientContext::get(n);
  IntegerMatrix projected(ctx.projection().rows(),
                          static_cast<Eigen::Index>(rays.size()));
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != ctx.pairs().count()) {
      throw std::invalid_argument("ray has wrong ambient dimension");
    }
    projected.col(static_cast<Eigen::Index>(i)) = ctx.projection() * rays[i];
  }
  return extends_to_lattice_basis(projected, ctx.projected_rays());
}

bool unimodular_cone(const ConeType& maximal_cone) {
  if (maximal_cone.dim() != maximal_cone.n() - 3) {
    throw std::invalid_argument("unimodularity check expects a maximal cone");
  }
  std::vector<IntegerVector> rays;
  rays.reserve(maximal_cone.splits().size());
  for (const Split& s : maximal_cone.splits()) {
    rays.push_back(split_vector(s));
  }
  return unimodular_rays(maximal_cone.n(), rays);
}

}  // namespace tropm0n
