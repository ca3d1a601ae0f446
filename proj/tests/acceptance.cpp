// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arcring/braid_homotopy.hpp"
#include "arcring/cache.hpp"
#include "arcring/center.hpp"
#include "arcring/cli.hpp"
#include "arcring/presentations.hpp"
#include "arcring/verify.hpp"

using namespace arcring;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " FAILED: " << what << ";";
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  std::optional<double> limit_seconds;
  std::function<void(Outcome&)> body;
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
  return s.str();
}

// Perfect matchings of 2n points by recursion, then the crossing filter.
std::size_t brute_force_crossingless(int n) {
  std::size_t count = 0;
  std::vector<int> partner(2 * n + 1, 0);
  std::function<void()> go = [&] {
    int first = 1;
    while (first <= 2 * n && partner[first]) ++first;
    if (first > 2 * n) {
      for (int i = 1; i <= 2 * n; ++i)
        for (int k = 1; k <= 2 * n; ++k) {
          const int j = partner[i], l = partner[k];
          if (i < k && k < j && j < l) return;
        }
      ++count;
      return;
    }
    for (int second = first + 1; second <= 2 * n; ++second) {
      if (partner[second]) continue;
      partner[first] = second;
      partner[second] = first;
      go();
      partner[first] = partner[second] = 0;
    }
  };
  go();
  return count;
}

std::size_t brute_force_admissible(int n) {
  std::size_t count = 0;
  for (std::uint32_t s = 0; s < (1u << (2 * n)); ++s) {
    bool ok = true;
    for (int m = 1; m <= 2 * n && ok; ++m) {
      const int inside = std::popcount(s & ((1u << m) - 1));
      ok = 2 * inside <= m;
    }
    count += ok;
  }
  return count;
}

std::size_t central_binomial(int n) { return binomial(2 * n, n); }

bool checks_pass(Outcome& o, const std::string& label, const std::vector<CheckResult>& checks) {
  bool ok = true;
  for (const auto& c : checks)
    if (!c.passed) {
      ok = false;
      o.require(false, label + " " + c.name + " " + c.detail.dump());
    }
  return ok;
}

std::string capture(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> list;

  list.push_back({1, "Catalan counts", 1.0, [](Outcome& o) {
    const std::size_t expected[] = {0, 1, 2, 5, 14, 42};
    std::vector<int> counts;
    for (int n = 1; n <= 5; ++n) {
      const int c = MatchingSet(n).size();
      counts.push_back(c);
      o.require(static_cast<std::size_t>(c) == expected[n], "|B^" + std::to_string(n) + "|");
      o.require(catalan(n) == expected[n], "catalan(" + std::to_string(n) + ")");
      if (n <= 3)
        o.require(brute_force_crossingless(n) == expected[n], "brute force at n=" + std::to_string(n));
    }
    o.detail << " |B^n| = " << join(counts);
  }});

  list.push_back({2, "Cell-count identity sum 2^t(a) = C(2n,n)", 1.0, [](Outcome& o) {
    std::vector<std::size_t> sums;
    for (int n = 1; n <= 6; ++n) {
      std::size_t sum = 0;
      for (const auto& a : enumerate_matchings(n)) sum += std::size_t{1} << bottom_arc_count(a);
      sums.push_back(sum);
      o.require(sum == central_binomial(n), "n=" + std::to_string(n));
    }
    o.detail << " sums = " << join(sums);
  }});

  list.push_back({3, "Admissible subsets count C(2n,n)", 1.0, [](Outcome& o) {
    std::vector<std::size_t> counts;
    for (int n = 1; n <= 6; ++n) {
      const std::size_t c = admissible_subsets(n).size();
      counts.push_back(c);
      o.require(c == central_binomial(n), "n=" + std::to_string(n));
      o.require(c == brute_force_admissible(n), "filter oracle at n=" + std::to_string(n));
    }
    o.detail << " counts = " << join(counts);
  }});

  list.push_back({4, "Ring integrity", 120.0, [](Outcome& o) {
    VerifyOptions options;
    options.random_triples = 10000;
    for (int n = 1; n <= 3; ++n) {
      const ArcRing ring(n);
      std::vector<CheckResult> checks;
      for (auto& c : verify_ring(ring, options))
        if (c.name != "commutator_quotient_rank") checks.push_back(std::move(c));
      checks_pass(o, "n=" + std::to_string(n), checks);
      for (const auto& c : checks)
        if (c.name == "associativity") o.detail << " n=" << n << " associativity " << c.detail.dump();
    }
  }});

  list.push_back({5, "Center rank C(2n,n) for n = 1..4", 1800.0, [](Outcome& o) {
    std::vector<std::size_t> ranks;
    for (int n = 1; n <= 4; ++n) {
      const ArcRing ring(n);
      const std::size_t r = center_basis(ring).rank();
      ranks.push_back(r);
      o.require(r == central_binomial(n), "n=" + std::to_string(n));
    }
    o.detail << " ranks = " << join(ranks);
  }});

  list.push_back({6, "Graded center ranks = quotient ranks = admissible counts", std::nullopt,
                  [](Outcome& o) {
    for (int n = 1; n <= 3; ++n) {
      const ArcRing ring(n);
      const auto center = center_basis(ring).graded_ranks;
      const auto quotient = quotient_graded_ranks(ideal_R1(n)).ranks;
      const auto admissible = admissible_counts_by_degree(n);
      o.require(center == quotient && quotient == admissible, "n=" + std::to_string(n));
      if (n == 2) {
        o.require(center == std::vector<std::size_t>{1, 3, 2, 0, 0}, "n=2 is (1,3,2)");
        o.detail << " n=2 graded = " << join(center);
      }
    }
  }});

  list.push_back({7, "Ideal equality R1 = R2", 60.0, [](Outcome& o) {
    for (int n = 1; n <= 3; ++n) {
      o.require(lattice_equal(ideal_R1(n), ideal_R2(n)), "lattices at n=" + std::to_string(n));
      for (int k = 1; k <= n; ++k)
        o.require(prefix_identity_residual(n, k).is_zero(),
                  "identity residual n=" + std::to_string(n) + " k=" + std::to_string(k));
      o.require(top_monomial_identity_residual(n).is_zero(),
                "top monomial residual n=" + std::to_string(n));
    }
    o.detail << " n = 1..3";
  }});

  list.push_back({8, "Presentation isomorphism onto the center", 300.0, [](Outcome& o) {
    for (int n = 1; n <= 3; ++n) {
      const ArcRing ring(n);
      const CenterBasis basis = center_basis(ring);
      const PresentationReport r = verify_presentation_iso(ring, basis);
      const std::string tag = "n=" + std::to_string(n);
      o.require(r.relations_hold(), tag + " relations");
      o.require(r.ranks_match(), tag + " ranks");
      o.require(r.images_in_center, tag + " images central");
      o.require(r.unimodular, tag + " unimodular");
      o.require(r.multiplicative(), tag + " multiplicative");
      // One square block per degree: the map preserves degree.
      for (std::size_t d = 0; d < r.matrices.size(); ++d) {
        const IntMatrix& m = r.matrices[d];
        o.require(m.rows() == basis.graded_ranks[d] && m.cols() == basis.graded_ranks[d] &&
                      (m.rows() == 0 || abs(determinant(m)) == 1),
                  tag + " degree block " + std::to_string(d));
      }
    }
    o.detail << " n = 1..3";
  }});

  list.push_back({9, "Commutator quotient rank C(2n,n)", 300.0, [](Outcome& o) {
    std::vector<std::size_t> ranks;
    for (int n = 1; n <= 3; ++n) {
      const std::size_t r = commutator_quotient_rank(ArcRing(n));
      ranks.push_back(r);
      o.require(r == central_binomial(n), "n=" + std::to_string(n));
    }
    o.detail << " ranks = " << join(ranks);
  }});

  list.push_back({10, "Null-homotopy of l_Xi - r_Xi+1 and l_Xi+1 - r_Xi", 120.0, [](Outcome& o) {
    std::vector<std::string> signs;
    for (int n = 1; n <= 3; ++n) {
      const ArcRing ring(n);
      for (int i = 1; i < 2 * n; ++i) {
        const HomotopyReport r = verify_null_homotopy(ring, i);
        for (const auto& c : r.checks) {
          o.require(c.passed(), "n=" + std::to_string(n) + " i=" + std::to_string(i) + " " +
                                    c.name + " " + c.counterexample);
          if (n == 3) signs.push_back(c.sign > 0 ? "+" : "-");
        }
      }
    }
    o.detail << " n=3 signs = " << join(signs);
  }});

  list.push_back({11, "Symmetric group action", 60.0, [](Outcome& o) {
    for (int n = 1; n <= 3; ++n)
      o.require(stable_under_transpositions(ideal_R1(n), r1_generators(n)),
                "R1 stability n=" + std::to_string(n));
    for (int n = 1; n <= 2; ++n) {
      const ArcRing ring(n);
      VerifyOptions options;
      checks_pass(o, "n=" + std::to_string(n), verify_symmetric(ring, options));

      // Exhaustive over S_2n on the center basis.
      const SymmetricAction action(ring);
      const std::size_t rank = action.center().rank();
      std::vector<std::vector<int>> group;
      std::vector<int> p(2 * n);
      std::iota(p.begin(), p.end(), 1);
      do group.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      bool action_ok = true, braid_ok = true;
      for (std::size_t k = 0; k < rank; ++k) {
        IntVector z(rank);
        z[k] = 1;
        for (const auto& sigma : group)
          for (const auto& tau : group)
            action_ok &= action.act(sigma, action.act(tau, z)) ==
                         action.act(compose_permutations(sigma, tau), z);
        for (int i = 1; i < 2 * n; ++i) {
          const auto si = adjacent_transposition(n, i);
          braid_ok &= action.act(si, action.act(si, z)) == z;
          if (i + 1 < 2 * n) {
            const auto sj = adjacent_transposition(n, i + 1);
            braid_ok &= action.act(si, action.act(sj, action.act(si, z))) ==
                        action.act(sj, action.act(si, action.act(sj, z)));
          }
          for (int j = i + 2; j < 2 * n; ++j) {
            const auto sj = adjacent_transposition(n, j);
            braid_ok &= action.act(si, action.act(sj, z)) == action.act(sj, action.act(si, z));
          }
        }
      }
      o.require(action_ok, "action property n=" + std::to_string(n));
      o.require(braid_ok, "braid relations n=" + std::to_string(n));
    }
    o.detail << " |S_2n| exhaustive for n <= 2";
  }});

  list.push_back({12, "Order independence under >= 3 linear extensions", 300.0, [](Outcome& o) {
    std::vector<std::size_t> available;
    for (int n = 1; n <= 3; ++n) {
      const auto orders = MatchingSet(n).linear_extensions(3);
      available.push_back(orders.size());
      o.require(orders.size() >= 3, "only " + std::to_string(orders.size()) +
                                        " linear extension(s) exist at n=" + std::to_string(n));
      o.require(total_order_independence(n, orders),
                "lattices differ at n=" + std::to_string(n));
    }
    const auto orders4 = MatchingSet(4).linear_extensions(3);
    o.require(orders4.size() >= 3 && total_order_independence(4, orders4), "n=4");
    o.detail << " extensions available for n=1..3: " << join(available)
             << "; lattice identical across all of them and across 3 at n=4";
  }});

  list.push_back({13, "Determinism and cache round trip", std::nullopt, [](Outcome& o) {
    const std::vector<std::vector<std::string>> commands = {
        {"arcring", "verify", "--n", "3"},
        {"arcring", "--format", "csv", "ring", "--n", "3", "--basis"},
        {"arcring", "--format", "text", "center", "--n", "3", "--basis"},
        {"arcring", "matchings", "--n", "4", "--arrows", "--order", "--graph"},
        {"arcring", "ideal", "--n", "3"},
        {"arcring", "homotopy", "--n", "2"}};
    for (const auto& args : commands) {
      int c1 = 0, c2 = 0;
      const std::string a = capture(args, c1), b = capture(args, c2);
      o.require(a == b && c1 == c2 && c1 == kExitOk, "repeat of " + join(args));
    }

    const auto dir = std::filesystem::temp_directory_path() /
                     ("arcring-acceptance-" + std::to_string(std::random_device{}()));
    const ArcRing fresh(3);
    store_ring(fresh, dir);
    const CacheLoad load = load_or_build(3, dir);
    o.require(load.hit, "cache hit");
    o.require(load.ring.basis() == fresh.basis() && load.ring.order() == fresh.order(),
              "identical basis order");
    std::mt19937_64 rng(3);
    bool same = true;
    for (int t = 0; t < 500; ++t) {
      const auto& x = fresh.basis()[rng() % fresh.dimension()];
      const auto& y = fresh.basis()[rng() % fresh.dimension()];
      same &= fresh.multiply(x, y) == load.ring.multiply(x, y);
    }
    o.require(same, "multiplication samples");
    int c1 = 0, c2 = 0;
    const std::string cached = capture({"arcring", "--cache-dir", dir.string(), "ring", "--n", "3"}, c1);
    const std::string direct = capture({"arcring", "ring", "--n", "3"}, c2);
    o.require(cached == direct, "report with and without cache");
    std::filesystem::remove_all(dir);
    o.detail << " " << commands.size() << " commands repeated";
  }});

  return list;
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : criteria()) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds && seconds > *c.limit_seconds) o.require(false, "time limit exceeded");

    std::ostringstream timing;
    timing << std::fixed << std::setprecision(3) << seconds << " s";
    if (c.limit_seconds) timing << " / limit " << std::setprecision(0) << *c.limit_seconds << " s";

    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.title
              << "  [" << timing.str() << "]" << o.detail.str() << std::endl;
    failures += !o.passed;
  }
  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : "all criteria passed")
            << std::endl;
  return failures ? 1 : 0;
}
