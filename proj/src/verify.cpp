#include "arcring/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "arcring/braid_homotopy.hpp"
#include "arcring/center.hpp"
#include "arcring/presentations.hpp"

namespace arcring {

using nlohmann::json;

namespace {

json basis_json(const ArcRing& ring, const BasisVector& v) {
  return {{"row", ring.matching(v.row).to_string()},
          {"col", ring.matching(v.col).to_string()},
          {"labels", ring.label_word(v)}};
}

std::vector<std::vector<std::size_t>> basis_by_row(const ArcRing& ring) {
  std::vector<std::vector<std::size_t>> out(ring.matchings().size());
  for (std::size_t t = 0; t < ring.dimension(); ++t) out[ring.basis()[t].row].push_back(t);
  return out;
}

std::vector<json> to_json_sizes(const std::vector<std::size_t>& v) {
  return std::vector<json>(v.begin(), v.end());
}

// Degree of a product against the sum of degrees; zero products pass.
bool graded(const ArcRing& ring, const BasisVector& x, const BasisVector& y,
            const RingElement& xy) {
  if (xy.is_zero()) return true;
  try {
    return ring.degree(xy) == ring.degree(x) + ring.degree(y);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<CheckResult> verify_ring(const ArcRing& ring, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const int n = ring.n();
  const auto& basis = ring.basis();
  std::mt19937_64 rng(options.seed);

  {
    CheckResult c{"dimension"};
    const std::size_t expected = expected_dimension(ring.matchings());
    c.passed = ring.dimension() == expected;
    c.detail = {{"dimension", ring.dimension()}, {"expected", expected}};
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"unit_law", true};
    const RingElement one = ring.unit();
    for (const auto& v : basis) {
      const RingElement x = ring.element(v);
      if (ring.multiply(one, x) != x || ring.multiply(x, one) != x) {
        c.passed = false;
        c.detail["counterexample"] = basis_json(ring, v);
        break;
      }
    }
    c.detail["checked"] = basis.size();
    out.push_back(std::move(c));
  }

  {
    CheckResult assoc{"associativity", true};
    CheckResult grading{"grading", true};
    std::size_t triples = 0;
    std::size_t products = 0;
    auto check = [&](const BasisVector& x, const BasisVector& y, const BasisVector& z) {
      ++triples;
      const RingElement xy = ring.multiply(x, y);
      const RingElement yz = ring.multiply(y, z);
      products += !xy.is_zero();
      if (grading.passed && !graded(ring, x, y, xy)) {
        grading.passed = false;
        grading.detail["counterexample"] = {basis_json(ring, x), basis_json(ring, y)};
      }
      const RingElement left = ring.multiply(xy, ring.element(z));
      const RingElement right = ring.multiply(ring.element(x), yz);
      if (assoc.passed && left != right) {
        assoc.passed = false;
        assoc.detail["counterexample"] = {basis_json(ring, x), basis_json(ring, y),
                                          basis_json(ring, z)};
      }
    };
    if (n <= 2) {
      for (const auto& x : basis)
        for (const auto& y : basis)
          for (const auto& z : basis) check(x, y, z);
      assoc.detail["mode"] = "exhaustive";
    } else {
      const auto by_row = basis_by_row(ring);
      auto pick = [&](const std::vector<std::size_t>& from) {
        return basis[from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)]];
      };
      std::vector<std::size_t> all(basis.size());
      std::iota(all.begin(), all.end(), 0);
      for (std::size_t t = 0; t < options.random_triples; ++t) {
        const BasisVector x = pick(all);
        const BasisVector y = pick(by_row[x.col]);
        const BasisVector z = pick(by_row[y.col]);
        check(x, y, z);
      }
      assoc.detail["mode"] = "random composable triples";
      assoc.detail["seed"] = options.seed;
    }
    assoc.detail["triples"] = triples;
    grading.detail["nonzero_products"] = products;
    out.push_back(std::move(assoc));
    out.push_back(std::move(grading));
  }

  {
    CheckResult c{"surgery_order_independence", true};
    std::size_t pairs = 0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto check_pair = [&](const BasisVector& x, const BasisVector& y,
                          const std::vector<int>& order) {
      if (!c.passed) return;
      if (ring.multiply(x, y, order) != ring.multiply(x, y)) {
        c.passed = false;
        c.detail["counterexample"] = {basis_json(ring, x), basis_json(ring, y)};
        c.detail["arc_order"] = order;
      }
    };
    const auto by_row = basis_by_row(ring);
    if (n <= 3) {
      for (const auto& x : basis)
        for (std::size_t t : by_row[x.col]) {
          ++pairs;
          std::vector<int> order = perm;
          do check_pair(x, basis[t], order);
          while (std::next_permutation(order.begin(), order.end()));
        }
      c.detail["mode"] = "all composable pairs, all arc orders";
    } else {
      for (std::size_t s = 0; s < 500; ++s) {
        const auto& x = basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)];
        const auto& row = by_row[x.col];
        const auto& y = basis[row[std::uniform_int_distribution<std::size_t>(0, row.size() - 1)(rng)]];
        std::vector<int> order = perm;
        std::shuffle(order.begin(), order.end(), rng);
        ++pairs;
        check_pair(x, y, order);
      }
      c.detail["mode"] = "random pairs and arc orders";
    }
    c.detail["pairs"] = pairs;
    out.push_back(std::move(c));
  }

  if (n <= 3) {
    CheckResult c{"commutator_quotient_rank"};
    const std::size_t rank = commutator_quotient_rank(ring);
    c.passed = rank == binomial(2 * n, n);
    c.detail = {{"rank", rank}, {"expected", binomial(2 * n, n)}};
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckResult> verify_center(const ArcRing& ring) {
  std::vector<CheckResult> out;
  const int n = ring.n();
  const CenterBasis basis = center_basis(ring);

  {
    CheckResult c{"center_rank"};
    c.passed = basis.rank() == binomial(2 * n, n);
    c.detail = {{"rank", basis.rank()}, {"expected", binomial(2 * n, n)}};
    out.push_back(std::move(c));
  }
  {
    CheckResult c{"center_elements_central", true};
    for (std::size_t e = 0; e < basis.rank() && c.passed; ++e)
      if (!is_central(ring, basis.elements[e])) {
        c.passed = false;
        c.detail["counterexample_index"] = e;
      }
    c.detail["elements"] = basis.rank();
    out.push_back(std::move(c));
  }
  {
    CheckResult c{"graded_ranks"};
    const auto admissible = admissible_counts_by_degree(n);
    const auto quotient = quotient_graded_ranks(ideal_R1(n)).ranks;
    c.passed = basis.graded_ranks == admissible && basis.graded_ranks == quotient;
    c.detail = {{"center", to_json_sizes(basis.graded_ranks)},
                {"quotient_R1", to_json_sizes(quotient)},
                {"admissible", to_json_sizes(admissible)}};
    out.push_back(std::move(c));
  }
  {
    CheckResult c{"central_X", true};
    std::vector<RingElement> x;
    for (int i = 1; i <= 2 * n; ++i) x.push_back(central_X(ring, i));
    for (int i = 0; i < 2 * n && c.passed; ++i) {
      if (!is_central(ring, x[i])) {
        c.passed = false;
        c.detail["not_central"] = i + 1;
      } else if (!ring.multiply(x[i], x[i]).is_zero()) {
        c.passed = false;
        c.detail["square_nonzero"] = i + 1;
      }
      for (int j = 0; j < 2 * n && c.passed; ++j)
        if (ring.multiply(x[i], x[j]) != ring.multiply(x[j], x[i])) {
          c.passed = false;
          c.detail["not_commuting"] = {i + 1, j + 1};
        }
    }
    c.detail["generators"] = 2 * n;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckResult> verify_springer(int n) {
  std::vector<CheckResult> out;
  const GradedIdealSpan r1 = ideal_R1(n);
  const GradedIdealSpan r2 = ideal_R2(n);
  {
    CheckResult c{"quotient_ranks"};
    const auto q = quotient_graded_ranks(r1);
    const auto admissible = admissible_counts_by_degree(n);
    c.passed = q.ranks == admissible && q.torsion_free();
    c.detail = {{"ranks", to_json_sizes(q.ranks)},
                {"admissible", to_json_sizes(admissible)},
                {"total", q.total()},
                {"torsion_degrees", q.torsion_degrees}};
    out.push_back(std::move(c));
  }
  {
    CheckResult c{"ideal_equality"};
    c.passed = lattice_equal(r1, r2);
    std::vector<std::size_t> ranks1, ranks2;
    for (int d = 0; d <= 2 * n; ++d) {
      ranks1.push_back(r1.rank(d));
      ranks2.push_back(r2.rank(d));
    }
    c.detail = {{"R1_ranks", to_json_sizes(ranks1)}, {"R2_ranks", to_json_sizes(ranks2)}};
    out.push_back(std::move(c));
  }
  {
    CheckResult c{"reduction_identities", true};
    json failures = json::array();
    for (int k = 1; k <= 2 * n; ++k) {
      const auto residual = prefix_identity_residual(n, k);
      if (!residual.is_zero()) failures.push_back({{"k", k}, {"residual", residual.to_string()}});
    }
    const auto top = top_monomial_identity_residual(n);
    if (!top.is_zero()) failures.push_back({{"top", top.to_string()}});
    c.passed = failures.empty();
    c.detail = {{"identities", 2 * n + 1}, {"failures", failures}};
    out.push_back(std::move(c));
  }
  {
    CheckResult c{"admissible_normal_form", true};
    const SubsetMask all = interval(1, 2 * n);
    std::size_t checked = 0;
    for (SubsetMask s = 0; s <= all && c.passed; ++s) {
      const auto p = SquareFreePoly::monomial(n, s);
      const auto r = reduce_to_admissible(p);
      ++checked;
      bool ok = reduce_to_admissible(r) == r && r1.contains(p - r);
      for (const auto& [t, coeff] : r.terms()) ok = ok && is_admissible(t, n);
      if (!ok) {
        c.passed = false;
        c.detail["counterexample"] = p.to_string();
      }
    }
    c.detail["monomials"] = checked;
    out.push_back(std::move(c));
  }
  {
    CheckResult c{"transposition_stability"};
    c.passed = stable_under_transpositions(r1, r1_generators(n)) &&
               stable_under_transpositions(r2, r2_generators(n));
    c.detail = {{"transpositions", 2 * n - 1}};
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckResult> verify_iso(const ArcRing& ring) {
  const CenterBasis basis = center_basis(ring);
  const PresentationReport r = verify_presentation_iso(ring, basis);
  CheckResult c{"presentation_isomorphism", r.passed()};
  c.detail = {{"relations_hold", r.relations_hold()},
              {"relation_failures", r.relation_failures},
              {"images_in_center", r.images_in_center},
              {"ranks_match", r.ranks_match()},
              {"center_ranks", to_json_sizes(r.center_ranks)},
              {"quotient_ranks", to_json_sizes(r.quotient_ranks)},
              {"unimodular", r.unimodular},
              {"quotient_torsion_free", r.quotient_torsion_free},
              {"multiplicative", r.multiplicative()},
              {"multiplicativity_failures", r.multiplicativity_failures},
              {"rank", basis.rank()}};
  return {std::move(c)};
}

std::vector<CheckResult> verify_homotopy(const ArcRing& ring) {
  std::vector<CheckResult> out;
  for (int i = 1; i < 2 * ring.n(); ++i) {
    const UiBimodule F(ring, i);
    {
      CheckResult c{"bimodule_maps i=" + std::to_string(i), true};
      std::size_t checked = 0;
      auto fail = [&](const std::string& what) {
        if (c.passed) c.detail["counterexample"] = what;
        c.passed = false;
      };
      for (const auto& m : F.basis()) {
        const UiElement em = F.element(m);
        const RingElement am = F.alpha(em);
        if (!am.is_zero() && ring.degree(am) != F.degree(m) + 1) fail("alpha degree");
        for (const auto& x : ring.basis()) {
          const RingElement ex = ring.element(x);
          if (x.col == m.row) {
            ++checked;
            if (F.alpha(F.left(ex, em)) != ring.multiply(ex, am)) fail("alpha left");
          }
          if (m.col == x.row) {
            ++checked;
            if (F.alpha(F.right(em, ex)) != ring.multiply(am, ex)) fail("alpha right");
          }
        }
      }
      for (const auto& v : ring.basis()) {
        const RingElement ev = ring.element(v);
        const UiElement bv = F.beta(ev);
        for (const auto& [w, coeff] : bv.terms())
          if (F.degree(w) != ring.degree(v) + 1) fail("beta degree");
        for (const auto& x : ring.basis()) {
          const RingElement ex = ring.element(x);
          if (x.col == v.row) {
            ++checked;
            if (F.beta(ring.multiply(ex, ev)) != F.left(ex, bv)) fail("beta left");
          }
          if (v.col == x.row) {
            ++checked;
            if (F.beta(ring.multiply(ev, ex)) != F.right(bv, ex)) fail("beta right");
          }
        }
      }
      c.detail["checked_pairs"] = checked;
      c.detail["bimodule_dimension"] = F.dimension();
      out.push_back(std::move(c));
    }
    const HomotopyReport report = verify_null_homotopy(ring, i);
    for (const auto& h : report.checks) {
      CheckResult c{"null_homotopy i=" + std::to_string(i) + " " + h.name, h.passed()};
      c.detail = {{"chain_map", h.chain_map},
                  {"sign", h.sign},
                  {"checked_vectors", h.checked_vectors}};
      if (!h.counterexample.empty()) c.detail["counterexample"] = h.counterexample;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CheckResult> verify_symmetric(const ArcRing& ring, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const int n = ring.n();
  const int vars = 2 * n;
  {
    CheckResult c{"generator_stability"};
    c.passed = stable_under_transpositions(ideal_R1(n), r1_generators(n));
    c.detail = {{"generators", vars}, {"transpositions", vars - 1}};
    out.push_back(std::move(c));
  }

  std::optional<SymmetricAction> action;
  try {
    action.emplace(ring);
  } catch (const InvariantFailure& e) {
    out.push_back({"symmetric_action", false, {{"error", e.what()}}});
    return out;
  }
  const std::size_t rank = action->center().rank();
  std::vector<int> identity(vars);
  std::iota(identity.begin(), identity.end(), 1);
  std::vector<IntVector> units;
  for (std::size_t e = 0; e < rank; ++e) {
    IntVector u(rank);
    u[e] = 1;
    units.push_back(std::move(u));
  }

  {
    CheckResult c{"action_on_generators", true};
    std::vector<IntVector> x;
    for (int i = 1; i <= vars; ++i) {
      auto coords = center_coordinates(action->center(), ring, central_X(ring, i));
      if (!coords) {
        c.passed = false;
        c.detail["not_in_center"] = i;
        break;
      }
      x.push_back(*coords);
    }
    for (int i = 1; i < vars && c.passed; ++i) {
      const auto s = adjacent_transposition(n, i);
      for (int j = 1; j <= vars && c.passed; ++j)
        if (action->act(s, x[j - 1]) != x[s[j - 1] - 1]) {
          c.passed = false;
          c.detail["counterexample"] = {{"transposition", i}, {"generator", j}};
        }
    }
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"identity_and_degree", true};
    for (std::size_t e = 0; e < rank && c.passed; ++e) {
      if (action->act(identity, units[e]) != units[e]) {
        c.passed = false;
        c.detail["identity_fails_on"] = e;
      }
      const auto& cb = action->center();
      const int d = cb.label_degree[e];
      for (int i = 1; i < vars && c.passed; ++i) {
        const IntVector image = action->act(adjacent_transposition(n, i), units[e]);
        for (std::size_t t = 0; t < rank; ++t)
          if (image[t] != 0 && cb.label_degree[t] != d) {
            c.passed = false;
            c.detail["degree_changed"] = {{"element", e}, {"transposition", i}};
          }
      }
    }
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"action_property", true};
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (std::size_t t = 0; t < options.action_samples && c.passed; ++t) {
      std::vector<int> sigma = identity, tau = identity;
      std::shuffle(sigma.begin(), sigma.end(), rng);
      std::shuffle(tau.begin(), tau.end(), rng);
      IntVector z(rank);
      for (auto& v : z) v = coeff(rng);
      if (action->act(sigma, action->act(tau, z)) !=
          action->act(compose_permutations(sigma, tau), z)) {
        c.passed = false;
        c.detail["counterexample"] = {{"sigma", sigma}, {"tau", tau}};
      }
    }
    c.detail["samples"] = options.action_samples;
    c.detail["seed"] = options.seed;
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"coxeter_relations", true};
    auto s = [&](int i, const IntVector& z) {
      return action->act(adjacent_transposition(n, i), z);
    };
    for (const auto& z : units) {
      for (int i = 1; i < vars && c.passed; ++i) {
        if (s(i, s(i, z)) != z) {
          c.passed = false;
          c.detail["involution_fails"] = i;
        }
        if (i + 1 < vars && s(i, s(i + 1, s(i, z))) != s(i + 1, s(i, s(i + 1, z)))) {
          c.passed = false;
          c.detail["braid_fails"] = i;
        }
        for (int j = i + 2; j < vars && c.passed; ++j)
          if (s(i, s(j, z)) != s(j, s(i, z))) {
            c.passed = false;
            c.detail["commutation_fails"] = {i, j};
          }
      }
    }
    c.detail["spanning_set"] = rank;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace arcring
