#include <doctest.h>

#include "veckin/grid.hpp"

using namespace veckin;

TEST_CASE("1d periodic ghosts wrap around") {
  Grid g = Grid::make1d(4, 0.0, 4.0);
  Field f(g, 1);
  for (int i = 0; i < 4; ++i) f.at(0, i) = i + 1.0;  // [1,2,3,4]
  Field out = apply_bc(f, BoundaryKind::Periodic);
  CHECK(out.at(0, -2) == 3.0);
  CHECK(out.at(0, -1) == 4.0);
  CHECK(out.at(0, 4) == 1.0);
  CHECK(out.at(0, 5) == 2.0);
}

TEST_CASE("fixed ghosts copy the frozen frame regardless of interior") {
  Grid g = Grid::make1d(4, 0.0, 4.0);
  Field frozen(g, 1);
  frozen.at(0, -2) = 9.0;
  frozen.at(0, -1) = 9.0;
  frozen.at(0, 4) = 7.0;
  frozen.at(0, 5) = 7.0;
  Field f(g, 1);
  for (int i = 0; i < 4; ++i) f.at(0, i) = 100.0 + i;
  Field out = apply_bc(f, BoundaryKind::FixedFromInitial, &frozen);
  CHECK(out.at(0, -1) == 9.0);
  CHECK(out.at(0, -2) == 9.0);
  CHECK(out.at(0, 4) == 7.0);
  CHECK(out.at(0, 5) == 7.0);
  CHECK(out.at(0, 0) == 100.0);
}

TEST_CASE("2d periodic corner ghost equals opposite interior corner") {
  Grid g = Grid::make2d(5, 4, 0.0, 1.0, 0.0, 1.0);
  Field f(g, 2);
  for (int c = 0; c < 2; ++c)
    for (int iy = 0; iy < 4; ++iy)
      for (int ix = 0; ix < 5; ++ix) f.at(c, ix, iy) = c * 100 + iy * 10 + ix;
  Field out = apply_bc(f, BoundaryKind::Periodic);
  CHECK(out.at(0, -1, -1) == out.at(0, 4, 3));
  CHECK(out.at(1, -1, -1) == out.at(1, 4, 3));
  CHECK(out.at(0, 5, 4) == out.at(0, 0, 0));
  CHECK(out.at(0, -2, 1) == out.at(0, 3, 1));
  CHECK(out.at(0, 2, -2) == out.at(0, 2, 2));
}

TEST_CASE("apply_bc is idempotent and preserves the interior") {
  Grid g = Grid::make2d(6, 5, 0.0, 2.0, -1.0, 1.0);
  Field f(g, 1);
  for (int iy = 0; iy < 5; ++iy)
    for (int ix = 0; ix < 6; ++ix) f.at(0, ix, iy) = std::sin(ix * 1.7 + iy * 0.3);
  double sum_before = 0.0;
  for (int iy = 0; iy < 5; ++iy)
    for (int ix = 0; ix < 6; ++ix) sum_before += f.at(0, ix, iy);

  Field once = apply_bc(f, BoundaryKind::Periodic);
  Field twice = apply_bc(once, BoundaryKind::Periodic);
  for (int iy = -2; iy < 7; ++iy)
    for (int ix = -2; ix < 8; ++ix) CHECK(once.at(0, ix, iy) == twice.at(0, ix, iy));

  double sum_after = 0.0;
  for (int iy = 0; iy < 5; ++iy)
    for (int ix = 0; ix < 6; ++ix) sum_after += once.at(0, ix, iy);
  CHECK(sum_after == sum_before);
}

TEST_CASE("grid geometry and validation") {
  Grid g = Grid::make1d(8, 0.0, 2.0);
  CHECK(g.dx(0) == doctest::Approx(0.25));
  CHECK(g.center(0, 0) == doctest::Approx(0.125));
  CHECK_THROWS_AS(Grid::make1d(3, 0.0, 1.0), domain_error);
  CHECK_THROWS_AS(Grid::make2d(8, 8, 0.0, 0.0, 0.0, 1.0), domain_error);

  Field f(g, 1);
  CHECK_THROWS_AS(apply_bc(f, BoundaryKind::FixedFromInitial, nullptr), domain_error);
  Grid g2 = Grid::make1d(16, 0.0, 2.0);
  Field wrong(g2, 1);
  CHECK_THROWS_AS(apply_bc(f, BoundaryKind::FixedFromInitial, &wrong), shape_error);
}
