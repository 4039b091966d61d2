#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "disting/automorphisms.hpp"
#include "disting/errors.hpp"
#include "disting/families.hpp"
#include "disting/graph.hpp"
#include "disting/labeling.hpp"
#include "disting/search.hpp"
#include "support/naive_oracles.hpp"

using namespace disting;

namespace {

// Small menagerie used for engine-vs-brute-force agreement; everything has
// few enough edges that enumerating whole label spaces stays instant.
std::vector<graph> small_zoo() {
  return {
      make_path(4),
      make_path(5),
      make_path(6),
      make_cycle(3),
      make_cycle(4),
      make_cycle(5),
      make_cycle(6),
      make_complete(4),
      make_star(3),
      make_complete_bipartite(2, 3),
      graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}),          // paw
      graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),  // diamond
      graph(5, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {2, 4}}),  // bull
      make_friendship(2),
      make_book(2),
  };
}

}  // namespace

TEST_CASE("parameter names round-trip through the parser") {
  for (parameter p : {parameter::chi_prime, parameter::chi, parameter::d,
                      parameter::d_prime, parameter::chi_d,
                      parameter::chi_prime_d}) {
    CHECK(parse_parameter(to_string(p)) == p);
  }
  CHECK_THROWS_AS(parse_parameter("chromatic"), parse_error);
}

TEST_CASE("engines match exhaustive enumeration on the small zoo") {
  for (const graph& g : small_zoo()) {
    CAPTURE(g.vertex_count());
    CAPTURE(g.edge_count());
    CHECK(compute_chromatic_index(g).value() == naive::chromatic_index(g));
    CHECK(compute_chromatic_number(g).value() == naive::chromatic_number(g));
    CHECK(compute_distinguishing_number(g).value() ==
          naive::distinguishing_number(g));
    CHECK(compute_distinguishing_index(g).value() ==
          naive::distinguishing_index(g));
    CHECK(compute_chromatic_distinguishing_number(g).value() ==
          naive::chromatic_distinguishing_number(g));
    CHECK(compute_chromatic_distinguishing_index(g).value() ==
          naive::chromatic_distinguishing_index(g));
  }
}

TEST_CASE("known values hold for the showcase graphs") {
  // The odd cycle is class two even though the reference table prints 2.
  CHECK(compute_chromatic_index(make_cycle(5)).value() == 3);
  CHECK(naive::chromatic_index(make_cycle(5)) == 3);

  // Two labels already break all 120 Petersen symmetries.
  CHECK(compute_distinguishing_index(make_petersen()).value() == 2);
  CHECK(naive::distinguishing_index(make_petersen()) == 2);
  CHECK(compute_chromatic_number(make_petersen()).value() == 3);
  CHECK(naive::chromatic_number(make_petersen()) == 3);

  CHECK(compute_chromatic_distinguishing_index(make_cycle(6)).value() == 4);
  CHECK(compute_chromatic_distinguishing_number(make_cycle(6)).value() == 4);

  CHECK(compute_distinguishing_index(make_friendship(2)).value() == 2);
  CHECK(compute_distinguishing_index(make_star(2)).value() == 2);
  CHECK(compute_distinguishing_index(make_complete_bipartite(2, 4)).value() == 3);

  // No proper distinguishing 3-labeling of the two-page book exists; the
  // printed value underestimates by one.
  CHECK(compute_chromatic_distinguishing_index(make_book(2)).value() == 4);
  CHECK(naive::chromatic_distinguishing_index(make_book(2)) == 4);
}

TEST_CASE("engines reject out-of-domain inputs") {
  const graph split(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(compute_chromatic_index(split), parameter_error);
  CHECK_THROWS_AS(compute_distinguishing_index(split), parameter_error);
  CHECK_THROWS_AS(compute_chromatic_distinguishing_number(split),
                  parameter_error);

  // A single edge: the endpoint swap preserves every edge labeling.
  CHECK_THROWS_AS(compute_distinguishing_index(make_path(2)), parameter_error);
  CHECK_THROWS_AS(compute_chromatic_distinguishing_index(make_path(2)),
                  parameter_error);
  CHECK_THROWS_AS(compute_chromatic_index(make_path(1)), parameter_error);

  // Vertex-side parameters are fine on a single vertex or edge.
  CHECK(compute_distinguishing_number(make_path(1)).value() == 1);
  CHECK(compute_distinguishing_number(make_path(2)).value() == 2);
  CHECK(compute_chromatic_distinguishing_number(make_path(2)).value() == 2);
}

TEST_CASE("compute_parameter dispatches to the same engines") {
  graph c5 = make_cycle(5);
  CHECK(compute_parameter(c5, parameter::chi_prime).value() == 3);
  CHECK(compute_parameter(c5, parameter::chi).value() == 3);
  CHECK(compute_parameter(c5, parameter::d).value() == 3);
  CHECK(compute_parameter(c5, parameter::d_prime).value() == 3);
  CHECK(compute_parameter(c5, parameter::chi_d).value() == 3);
  CHECK(compute_parameter(c5, parameter::chi_prime_d).value() == 3);
}

TEST_CASE("every exact satisfiable result carries a re-verified certificate") {
  for (const graph& g : {make_cycle(6), make_complete(4), make_friendship(2)}) {
    for (parameter p : {parameter::chi_prime, parameter::chi, parameter::d,
                        parameter::d_prime, parameter::chi_d,
                        parameter::chi_prime_d}) {
      parameter_result r = compute_parameter(g, p);
      REQUIRE(r.exact());
      REQUIRE(r.certificate.has_value());
      const labeling_certificate& cert = *r.certificate;
      CHECK(cert.g == g);
      CHECK(cert.label_count() == r.value());
      // The flags are the labeling's real properties, so they may exceed
      // what the parameter demands (a minimum proper labeling can happen
      // to be distinguishing as well) but never fall short of it.
      if (p == parameter::d || p == parameter::d_prime ||
          p == parameter::chi_d || p == parameter::chi_prime_d) {
        CHECK(cert.distinguishing);
      }
      if (p == parameter::chi_prime || p == parameter::chi ||
          p == parameter::chi_d || p == parameter::chi_prime_d) {
        CHECK(cert.proper);
      }
    }
  }
}

TEST_CASE("probes answer satisfiability for fixed label counts") {
  graph c6 = make_cycle(6);
  labeling_probe sat = probe_edge_labeling(c6, probe_request{4, true, true});
  CHECK(sat.verdict == probe_verdict::satisfiable);
  REQUIRE(sat.edge_witness.has_value());
  CHECK(is_proper(c6, *sat.edge_witness));
  CHECK_FALSE(find_preserving_automorphism(c6, *sat.edge_witness).has_value());

  labeling_probe unsat = probe_edge_labeling(c6, probe_request{3, true, true});
  CHECK(unsat.verdict == probe_verdict::unsatisfiable);
  CHECK_FALSE(unsat.edge_witness.has_value());

  // Below the max degree no proper edge labeling exists at all.
  labeling_probe degree_cut =
      probe_edge_labeling(make_star(5), probe_request{4, true, false});
  CHECK(degree_cut.verdict == probe_verdict::unsatisfiable);

  labeling_probe vertex_probe =
      probe_vertex_labeling(c6, probe_request{2, true, false});
  CHECK(vertex_probe.verdict == probe_verdict::satisfiable);
  labeling_probe vertex_unsat =
      probe_vertex_labeling(make_complete(4), probe_request{3, true, false});
  CHECK(vertex_unsat.verdict == probe_verdict::unsatisfiable);
}

TEST_CASE("budgets degrade to sound bounds instead of wrong answers") {
  search_options strangled;
  strangled.budget_secs = 1e-7;
  parameter_result r =
      compute_chromatic_distinguishing_index(make_petersen(), strangled);
  CHECK_FALSE(r.exact());
  CHECK(r.how == method::bounds);
  CHECK(r.lo <= 4);
  CHECK(4 <= r.hi);
  CHECK_FALSE(r.certificate.has_value());

  // The same call without a budget is exact.
  parameter_result full =
      compute_chromatic_distinguishing_index(make_petersen());
  CHECK(full.exact());
  CHECK(full.value() == 4);
  CHECK(full.lo >= r.lo);
  CHECK(full.hi <= r.hi);
}

TEST_CASE("the fixed-vertex shortcut matches plain search where both apply") {
  // A refinement singleton forces every proper labeling to be
  // distinguishing-checkable via the chromatic index alone.
  const std::vector<graph> fixed_pool = {make_friendship(2), make_friendship(3),
                                         make_path(5), make_subdivided_star(3)};
  for (const graph& g : fixed_pool) {
    REQUIRE(refinement_singleton_vertex(g) >= 0);
    parameter_result fast = compute_chromatic_distinguishing_index(g);
    search_options plain;
    plain.use_shortcuts = false;
    parameter_result slow = compute_chromatic_distinguishing_index(g, plain);
    CHECK(fast.value() == slow.value());
    CHECK(slow.how == method::search);
  }

  parameter_result g8 =
      compute_chromatic_distinguishing_index(make_subdivided_star(8));
  CHECK(g8.value() == 8);
  CHECK(g8.how == method::closed_form);
  REQUIRE(g8.certificate.has_value());
  CHECK(g8.certificate->proper);
  CHECK(g8.certificate->distinguishing);
}

TEST_CASE("chromatic index lands on max degree exactly for class-one graphs") {
  CHECK(compute_chromatic_index(make_complete_bipartite(4, 4)).value() == 4);
  CHECK(compute_chromatic_index(make_path(7)).value() == 2);
  CHECK(compute_chromatic_index(make_cycle(8)).value() == 2);
  CHECK(compute_chromatic_index(make_cycle(7)).value() == 3);
  CHECK(compute_chromatic_index(make_complete(5)).value() == 5);
  CHECK(compute_chromatic_index(make_complete(6)).value() == 5);
  CHECK(compute_chromatic_index(make_petersen()).value() == 4);
}

TEST_CASE("distinguishing numbers for the classical families") {
  CHECK(compute_distinguishing_number(make_complete(5)).value() == 5);
  CHECK(compute_distinguishing_number(make_cycle(5)).value() == 3);
  CHECK(compute_distinguishing_number(make_cycle(6)).value() == 2);
  CHECK(compute_distinguishing_number(make_petersen()).value() == 3);
  CHECK(compute_distinguishing_number(make_star(3)).value() == 3);
  CHECK(compute_chromatic_distinguishing_number(make_petersen()).value() == 4);
}
