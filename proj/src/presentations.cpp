#include "arcring/presentations.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace arcring {

namespace {

int checked_n(int n) {
  if (n < 1 || 2 * n > 30) throw CapacityError("square-free ring: n must lie in [1, 15]");
  return n;
}

SubsetMask full_set(int n) { return interval(1, 2 * n); }

// Lexicographic on sorted elements, for masks of the same cardinality.
bool lex_less(SubsetMask a, SubsetMask b) {
  return subset_elements(a) < subset_elements(b);
}

}  // namespace

SquareFreePoly SquareFreePoly::monomial(int n, SubsetMask s, long long coeff) {
  if (s & ~full_set(n)) throw std::out_of_range("monomial: index outside [1,2n]");
  SquareFreePoly p(n);
  p.add(s, coeff);
  return p;
}

SquareFreePoly SquareFreePoly::constant(int n, long long value) { return monomial(n, 0, value); }

SquareFreePoly SquareFreePoly::variable(int n, int i) {
  if (i < 1 || i > 2 * n) throw std::out_of_range("variable: index outside [1,2n]");
  return monomial(n, SubsetMask{1} << (i - 1));
}

long long SquareFreePoly::coefficient(SubsetMask s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

void SquareFreePoly::add(SubsetMask s, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SquareFreePoly SquareFreePoly::component(int d) const {
  SquareFreePoly out(n_);
  for (const auto& [s, c] : terms_)
    if (subset_size(s) == d) out.terms_.emplace(s, c);
  return out;
}

bool SquareFreePoly::is_homogeneous() const {
  std::set<int> sizes;
  for (const auto& [s, c] : terms_) sizes.insert(subset_size(s));
  return sizes.size() <= 1;
}

SquareFreePoly SquareFreePoly::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != 2 * n_)
    throw SizeMismatch("permuted: permutation of the wrong size");
  SquareFreePoly out(n_);
  for (const auto& [s, c] : terms_) {
    SubsetMask image = 0;
    for (int i : subset_elements(s)) image |= SubsetMask{1} << (perm[i - 1] - 1);
    out.add(image, c);
  }
  return out;
}

void SquareFreePoly::check(const SquareFreePoly& o) const {
  if (o.n_ != n_) throw SizeMismatch("polynomials over different n");
}

SquareFreePoly& SquareFreePoly::operator+=(const SquareFreePoly& o) {
  check(o);
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

SquareFreePoly& SquareFreePoly::operator-=(const SquareFreePoly& o) {
  check(o);
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

SquareFreePoly operator*(long long c, const SquareFreePoly& p) {
  SquareFreePoly out(p.n_);
  if (c == 0) return out;
  for (const auto& [s, v] : p.terms_) out.terms_.emplace(s, c * v);
  return out;
}

SquareFreePoly operator*(const SquareFreePoly& a, const SquareFreePoly& b) {
  a.check(b);
  SquareFreePoly out(a.n_);
  for (const auto& [s, c] : a.terms_)
    for (const auto& [t, d] : b.terms_)
      if ((s & t) == 0) out.add(s | t, c * d);
  return out;
}

std::string SquareFreePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<SubsetMask, long long>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (subset_size(x.first) != subset_size(y.first))
      return subset_size(x.first) > subset_size(y.first);
    return lex_less(x.first, y.first);
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, c] : ordered) {
    long long magnitude = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (s == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude;
    for (int i : subset_elements(s)) out << 'X' << i;
  }
  return out.str();
}

SubsetMask interval(int lo, int hi) {
  SubsetMask s = 0;
  for (int i = std::max(lo, 1); i <= hi; ++i) s |= SubsetMask{1} << (i - 1);
  return s;
}

SquareFreePoly elem_sym(int k, SubsetMask I, int n) {
  checked_n(n);
  if (I & ~full_set(n)) throw std::out_of_range("elem_sym: index outside [1,2n]");
  SquareFreePoly out(n);
  if (k < 0 || k > subset_size(I)) return out;
  // Enumerate submasks of I of size k.
  for (SubsetMask j = I;; j = (j - 1) & I) {
    if (subset_size(j) == k) out.add(j, 1);
    if (j == 0) break;
  }
  return out;
}

std::vector<SubsetMask> monomials_of_degree(int n, int d) {
  checked_n(n);
  std::vector<SubsetMask> out;
  const int m = 2 * n;
  if (d < 0 || d > m) return out;
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i + 1;
  while (true) {
    out.push_back(subset_from_elements(pick));
    int t = d - 1;
    while (t >= 0 && pick[t] == m - d + t + 1) --t;
    if (t < 0) break;
    ++pick[t];
    for (int u = t + 1; u < d; ++u) pick[u] = pick[u - 1] + 1;
  }
  return out;
}

IntVector monomial_coordinates(const SquareFreePoly& p, int d) {
  const auto basis = monomials_of_degree(p.n(), d);
  IntVector out(basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t) out[t] = static_cast<long>(p.coefficient(basis[t]));
  return out;
}

GradedIdealSpan::GradedIdealSpan(int n, const std::vector<SquareFreePoly>& generators)
    : n_(checked_n(n)) {
  for (const auto& g : generators)
    if (g.n() != n_) throw SizeMismatch("ideal: generator over a different n");

  for (int d = 0; d <= 2 * n_; ++d) {
    RowLattice lattice(binomial(2 * n_, d));
    for (const auto& g : generators) {
      IntVector v = monomial_coordinates(g, d);
      if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; }))
        lattice.insert(std::move(v));
    }
    if (d > 0) {
      const auto lower = monomials_of_degree(n_, d - 1);
      const IntMatrix prev = degrees_.back().basis();
      for (std::size_t r = 0; r < prev.rows(); ++r) {
        SquareFreePoly q(n_);
        for (std::size_t t = 0; t < lower.size(); ++t)
          if (prev(r, t) != 0) q.add(lower[t], to_int64(prev(r, t)));
        for (int i = 1; i <= 2 * n_; ++i)
          lattice.insert(monomial_coordinates(SquareFreePoly::variable(n_, i) * q, d));
      }
    }
    degrees_.push_back(std::move(lattice));
  }
}

IntMatrix GradedIdealSpan::span(int d) const { return degrees_.at(d).basis().transpose(); }

bool GradedIdealSpan::contains(const SquareFreePoly& p) const {
  if (p.n() != n_) throw SizeMismatch("contains: polynomial over a different n");
  for (int d = 0; d <= 2 * n_; ++d)
    if (!degrees_[d].contains(monomial_coordinates(p, d))) return false;
  return true;
}

std::vector<SquareFreePoly> r1_generators(int n) {
  std::vector<SquareFreePoly> out;
  for (int k = 1; k <= 2 * n; ++k) out.push_back(elem_sym(k, full_set(n), n));
  return out;
}

std::vector<SquareFreePoly> r2_generators(int n) {
  std::vector<SquareFreePoly> out;
  const SubsetMask all = full_set(n);
  for (SubsetMask I = 0; I <= all; ++I) {
    const int k = 2 * n + 1 - subset_size(I);
    if (k <= subset_size(I)) out.push_back(elem_sym(k, I, n));
    if (subset_size(I) == n + 1) out.push_back(SquareFreePoly::monomial(n, I));
  }
  return out;
}

GradedIdealSpan ideal_R1(int n) { return GradedIdealSpan(n, r1_generators(n)); }
GradedIdealSpan ideal_R2(int n) { return GradedIdealSpan(n, r2_generators(n)); }

bool lattice_equal(const GradedIdealSpan& a, const GradedIdealSpan& b) {
  if (a.n() != b.n()) throw SizeMismatch("lattice_equal: ideals over different n");
  for (int d = 0; d <= a.top_degree(); ++d)
    if (a.span(d) != b.span(d)) return false;
  return true;
}

std::size_t QuotientRanks::total() const {
  std::size_t t = 0;
  for (auto r : ranks) t += r;
  return t;
}

QuotientRanks quotient_graded_ranks(const GradedIdealSpan& ideal) {
  QuotientRanks out;
  const int n = ideal.n();
  for (int d = 0; d <= 2 * n; ++d) {
    out.ranks.push_back(binomial(2 * n, d) - ideal.rank(d));
    const IntMatrix span = ideal.span(d);
    if (span.cols() == 0) continue;
    for (const auto& f : invariant_factors(span))
      if (abs(f) != 1) {
        out.torsion_degrees.push_back(d);
        break;
      }
  }
  return out;
}

std::vector<std::size_t> admissible_counts_by_degree(int n) {
  std::vector<std::size_t> out(2 * n + 1, 0);
  for (SubsetMask s : admissible_subsets(n)) ++out[subset_size(s)];
  return out;
}

SquareFreePoly reduce_to_admissible(const SquareFreePoly& p) {
  const int n = p.n();
  const int m_max = 2 * n;
  auto weight = [](SubsetMask s) {
    int y = 0;
    for (int j : subset_elements(s)) y += j;
    return y;
  };
  // Pending terms keyed by (Σ j, mask); each rewrite only creates terms of
  // strictly larger weight, so popping the smallest key terminates.
  std::map<std::pair<int, SubsetMask>, long long> pending;
  for (const auto& [s, c] : p.terms()) pending[{weight(s), s}] += c;

  SquareFreePoly out(n);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const SubsetMask J = node.key().second;
    const long long c = node.mapped();
    if (c == 0) continue;
    if (is_admissible(J, n)) {
      out.add(J, c);
      continue;
    }
    int m = 1;
    while (2 * subset_size(J & interval(1, m)) <= m) ++m;
    const int r = (m - 1) / 2;
    const SubsetMask S = J & interval(1, m);
    const SubsetMask T = interval(m + 1, m_max);
    const SubsetMask rest = J & T;
    // e_{r+1}(S ∪ T) lies in R1, so X_S = -Σ_{K ≠ S} X_K.
    const SquareFreePoly relation = elem_sym(r + 1, S | T, n);
    for (const auto& [K, one] : relation.terms()) {
      if (K == S || (K & rest)) continue;
      const SubsetMask next = K | rest;
      auto& slot = pending[{weight(next), next}];
      slot -= c * one;
    }
  }
  return out;
}

SquareFreePoly prefix_identity_residual(int n, int k) {
  if (k < 1 || k > 2 * n) throw std::out_of_range("prefix identity: k outside [1,2n]");
  const SubsetMask all = full_set(n);
  const SubsetMask tail = interval(2 * n - k + 2, 2 * n);
  SquareFreePoly residual = elem_sym(k, interval(1, 2 * n - k + 1), n);
  for (int i = 0; i < k; ++i) {
    const long long sign = i % 2 ? -1 : 1;
    residual -= sign * (elem_sym(i, tail, n) * elem_sym(k - i, all, n));
  }
  return residual;
}

SquareFreePoly top_monomial_identity_residual(int n) {
  const SubsetMask all = full_set(n);
  const SubsetMask tail = interval(n + 2, 2 * n);
  SquareFreePoly residual = SquareFreePoly::monomial(n, interval(1, n + 1));
  for (int i = 0; i < n; ++i) {
    const long long sign = i % 2 ? -1 : 1;
    residual -= sign * (elem_sym(i, tail, n) * elem_sym(n + 1 - i, all, n));
  }
  return residual;
}

std::vector<int> adjacent_transposition(int n, int i) {
  if (i < 1 || i >= 2 * n) throw std::out_of_range("adjacent transposition: i outside [1,2n-1]");
  std::vector<int> perm(2 * n);
  for (int j = 0; j < 2 * n; ++j) perm[j] = j + 1;
  std::swap(perm[i - 1], perm[i]);
  return perm;
}

bool stable_under_transpositions(const GradedIdealSpan& ideal,
                                 const std::vector<SquareFreePoly>& generators) {
  const int n = ideal.n();
  for (int i = 1; i < 2 * n; ++i) {
    const auto perm = adjacent_transposition(n, i);
    for (const auto& g : generators)
      if (!ideal.contains(g.permuted(perm))) return false;
  }
  return true;
}

}  // namespace arcring
