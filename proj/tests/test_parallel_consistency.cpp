#include <doctest.h>

#include "spinform/character.hpp"
#include "spinform/findim.hpp"

using namespace spinform;

// The threaded kernels must agree bit for bit with the straight serial
// reference implementations.

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

}  // namespace

TEST_CASE("dense threaded product equals the sparse serial product") {
  for (int rank : {2, 3}) {
    int depth = rank == 2 ? 12 : 10;
    Character s = spinor_character(rank, Parity::even, depth);
    Character d = weyl_denominator_inverse(rank, depth);
    Character parallel = mul(s, d, depth, Exec::parallel);
    Character serial = mul_serial(s, d, depth);
    CHECK(equal_to_depth(parallel, serial, depth));
    CHECK(parallel.term_count() == serial.term_count());
  }
}

TEST_CASE("exact products agree across kernels") {
  Character v3 = wedge_character(3, 1);
  Character w2 = wedge_character(3, 2);
  Character a = mul(v3, w2, 30, Exec::parallel);
  Character b = mul_serial(v3, w2, 30);
  CHECK(exact_equal(a, b));
  CHECK(a.mass() == v3.mass() * w2.mass());
}

TEST_CASE("denominator inverse agrees across execution modes") {
  for (int rank : {2, 3}) {
    Character serial = weyl_denominator_inverse_ordered(rank, 8, positive_roots(rank), Exec::serial);
    Character parallel = weyl_denominator_inverse_ordered(rank, 8, positive_roots(rank), Exec::parallel);
    CHECK(equal_to_depth(serial, parallel, 8));
  }
}

TEST_CASE("Freudenthal tables agree across execution modes") {
  std::vector<Weight> samples{Weight::fundamental(3, 3),
                              Weight::from_fundamental({HalfInt(2), HalfInt(1), HalfInt(0)}),
                              Weight::from_fundamental({HalfInt(1), HalfInt(1)})};
  for (const Weight& lam : samples) {
    Character serial = freudenthal_multiplicities(lam, Exec::serial);
    Character parallel = freudenthal_multiplicities(lam, Exec::parallel);
    CHECK(exact_equal(serial, parallel));
  }
}

TEST_CASE("character formula agrees across execution modes") {
  Weight lam = Weight::from_fundamental({HalfInt(1), HalfInt(0), h(-1)});
  Character serial = kac_wakimoto_character(lam, 8, Exec::serial);
  Character parallel = kac_wakimoto_character(lam, 8, Exec::parallel);
  CHECK(equal_to_depth(serial, parallel, 8));
}
