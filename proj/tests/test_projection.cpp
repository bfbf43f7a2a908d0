#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "altk/projection.hpp"

using namespace altk;

namespace {

Diagram kink() {
  Diagram D;
  int v = D.add_vertex();
  D.set_over(v, true);
  D.join(0, 1);
  D.join(2, 3);
  return D;
}

Diagram double_kink() {
  Diagram D;
  D.set_over(D.add_vertex(), true);
  D.set_over(D.add_vertex(), false);
  D.join(0, 1);
  D.join(6, 7);
  D.join(2, 4);
  D.join(3, 5);
  return D;
}

const char* trefoil_pd = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";

}  // namespace

TEST_CASE("trefoil from its PD code") {
  Diagram D = from_pd(trefoil_pd);
  CHECK(D.nv == 3);
  CHECK(crossing_count(D) == 3);
  CHECK(is_closed(D));
  CHECK(connected(D));
  CHECK(planar(D));
  CHECK(alternating(D));
  CHECK(component_count(D) == 1);
  CHECK(prime(D));
  CHECK(nugatory_crossings(D).empty());
  int nf = 0;
  faces(D, &nf);
  CHECK(nf == 5);
}

TEST_CASE("hopf link") {
  Diagram D = from_pd("PD[X[1,3,2,4],X[3,1,4,2]]");
  CHECK(component_count(D) == 2);
  CHECK(alternating(D));
  CHECK(planar(D));
  int nf = 0;
  faces(D, &nf);
  CHECK(nf == 4);
}

TEST_CASE("zero crossing unknot") {
  Diagram D = from_pd("PD[]");
  CHECK(D.nv == 0);
  CHECK(D.loose_loops == 1);
  CHECK(connected(D));
  CHECK(component_count(D) == 1);
}

TEST_CASE("kink is nugatory") {
  Diagram D = kink();
  check_valid(D);
  CHECK(planar(D));
  CHECK(alternating(D));
  CHECK(component_count(D) == 1);
  int nf = 0;
  faces(D, &nf);
  CHECK(nf == 3);
  CHECK(nugatory_crossings(D) == std::vector<int>{0});
  CHECK(prime(D));  // single crossing counts as prime by convention
}

TEST_CASE("connected sum of two kinks is not prime") {
  Diagram D = double_kink();
  check_valid(D);
  CHECK(planar(D));
  CHECK(component_count(D) == 1);
  CHECK_FALSE(prime(D));
}

TEST_CASE("mirror and reflect are involutions") {
  Diagram D = from_pd(trefoil_pd);
  Diagram M = mirror(D);
  CHECK(M.over != D.over);
  CHECK(alternating(M));
  Diagram MM = mirror(M);
  CHECK(MM.theta == D.theta);
  CHECK(MM.over == D.over);
  Diagram R = reflect(D);
  check_valid(R);
  CHECK(planar(R));
  Diagram RR = reflect(R);
  CHECK(RR.theta == D.theta);
  CHECK(RR.over == D.over);
}

TEST_CASE("orientation marks one outgoing end per edge") {
  Diagram D = from_pd(trefoil_pd);
  auto out = orient(D);
  for (int d = 0; d < D.darts(); ++d) {
    CHECK(out[d] == !out[D.theta[d]]);
    CHECK(out[d] == !out[opp(d)]);
  }
}

TEST_CASE("pd round trip") {
  Diagram D = from_pd(trefoil_pd);
  std::string pd = to_pd(D);
  Diagram E = from_pd(pd);
  CHECK(E.nv == 3);
  CHECK(alternating(E));
  CHECK(component_count(E) == 1);
  CHECK(prime(E));
  int nf = 0;
  faces(E, &nf);
  CHECK(nf == 5);
  CHECK(to_pd(E) == to_pd(E));  // deterministic; canonical form arrives with iso codes
}

TEST_CASE("validation failures") {
  CHECK_THROWS_AS(from_pd("PD[X[1,2,3,1],X[2,4,4,5]]"), diagram_error);  // label 1 thrice elsewhere
  CHECK_THROWS_AS(from_pd("PD[X[1,2,3,4]]"), diagram_error);             // labels appear once
  Diagram D;
  int v = D.add_vertex();
  D.set_over(v, true);
  D.join(0, 1);
  CHECK_THROWS_AS(check_valid(D), diagram_error);  // darts 2,3 unpaired
  Diagram T;
  int w = T.add_vertex();
  T.join(4 * w, 4 * w + 1);
  T.join(4 * w + 2, 4 * w + 3);
  T.over[0] = T.over[1] = T.over[2] = T.over[3] = 1;  // no under diagonal
  CHECK_THROWS_AS(check_valid(T), diagram_error);
}

TEST_CASE("tangle legs validate and block closed-only queries") {
  Diagram D;
  int v = D.add_vertex();
  D.set_over(v, true);
  D.mark_leg(0, 0);
  D.mark_leg(1, 1);
  D.mark_leg(2, 2);
  D.mark_leg(3, 3);
  check_valid(D);
  CHECK_FALSE(is_closed(D));
  CHECK(leg_count(D) == 4);
  CHECK_THROWS_AS(faces(D), diagram_error);
  CHECK_THROWS_AS(orient(D), diagram_error);
}
