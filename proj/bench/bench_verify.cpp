// Compares the serial reference verifier against the OpenMP path on two
// workloads: a cube tiled into n^3 unit boxes (pairwise-disjointness heavy)
// and a batch of three-copy certificates (claim-level parallelism).

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

#include "frusta/catalog.hpp"
#include "frusta/dissection.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace frusta;

namespace {

double seconds(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - from).count();
}

struct GridCase {
  ConvexPolytope container;
  std::vector<std::pair<ConvexPolytope, RigidMotion>> placed;
};

// Cube of side n tiled cell by cell. Plain unit boxes only exercise the
// bounding-box prefilter; splitting every cell into its three corner
// pyramids forces genuine exact intersection tests within each cell.
GridCase grid_tiling(int n, bool split_cells) {
  GridCase c{make_solid(SolidSpec::box(n, n, n)), {}};
  const auto cell = box_corner_pyramids(1, 1, 1);
  const ConvexPolytope unit = make_solid(SolidSpec::box(1, 1, 1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const RigidMotion shift = translation_motion({x, y, z});
        if (split_cells) {
          for (const auto& piece : cell.pieces)
            c.placed.emplace_back(piece.poly, compose_motion(shift, piece.source_motion));
        } else {
          c.placed.emplace_back(unit, shift);
        }
      }
  return c;
}

double time_tiling(const GridCase& c, Exec exec, bool& exact) {
  const auto start = std::chrono::steady_clock::now();
  exact = !verify_tiling(c.container, c.placed, exec).has_value();
  return seconds(start);
}

}  // namespace

int main(int argc, char** argv) {
  int max_grid = 6;
  int batch = 12;
  if (argc > 1) max_grid = std::max(2, std::atoi(argv[1]));
  if (argc > 2) batch = std::max(1, std::atoi(argv[2]));

#ifdef _OPENMP
  std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not available; both columns run the serial path\n";
#endif

  for (const bool split : {false, true}) {
    std::cout << (split ? "\ncube tiled into 3n^3 corner pyramids (verify_tiling)\n"
                        : "\ncube tiled into n^3 unit boxes (verify_tiling)\n");
    std::cout << "   n   pieces   serial(s)   parallel(s)   speedup   verdicts\n";
    for (int n = 3; n <= max_grid; ++n) {
      const GridCase c = grid_tiling(n, split);
      bool exact_serial = false, exact_parallel = false;
      const double ts = time_tiling(c, Exec::Serial, exact_serial);
      const double tp = time_tiling(c, Exec::Parallel, exact_parallel);
      std::printf("  %2d   %6zu   %9.3f   %11.3f   %7.2fx   %s\n", n, c.placed.size(), ts, tp,
                  ts / tp, exact_serial == exact_parallel ? "equal" : "DIFFER");
    }
  }

  std::cout << "\nbatch of three-copy certificates (verify_certificate)\n";
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> dim(1, 9);
  std::vector<RearrangementCertificate> certs;
  for (int i = 0; i < batch; ++i) {
    const int b = dim(rng), extra = dim(rng), h = dim(rng);
    certs.push_back(liu_hui_three_copies(b + extra, b, h));
  }
  for (const Exec exec : {Exec::Serial, Exec::Parallel}) {
    const auto start = std::chrono::steady_clock::now();
    int passed = 0;
    for (const auto& cert : certs) passed += verify_certificate(cert, exec).pass ? 1 : 0;
    std::printf("  %-8s  %2d/%zu passed in %.3fs\n",
                exec == Exec::Serial ? "serial" : "parallel", passed, certs.size(),
                seconds(start));
  }
  return 0;
}
