#include "crossedcoh/h2.hpp"
#include "crossedcoh/hypercoh.hpp"
#include "crossedcoh/scenarios.hpp"

#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ccoh;

// The parallel kernels must agree with their serial references, and results
// must not depend on the worker count.

TEST_CASE("cocycle enumeration: parallel equals serial") {
    for (const NamedBraiding& f : shipped_braided_fixtures()) {
        std::vector<Cochain1> serial = enumerate_z1_serial(f.braiding.cm);
        std::vector<Cochain1> parallel = enumerate_z1(f.braiding.cm);
        CHECK(serial == parallel);
    }
}

TEST_CASE("automorphism search: parallel equals serial") {
    for (const FiniteGroup& g :
         {quaternion_group(), klein_four(), cyclic_group(8), symmetric3(), dihedral_group(4)}) {
        CHECK(automorphisms_serial(g) == automorphisms_parallel(g));
    }
}

TEST_CASE("neutrality search: parallel equals serial including the witness") {
    CrossedModule cm = build_q8_v4();
    const OutData out = compute_out(cm.A());
    for (const Cochain1& z : enumerate_z1(cm)) {
        auto [band, two] = delta_coboundary(cm, z, out);
        NeutralityResult a = is_neutral_class(band, two);
        NeutralityResult b = is_neutral_class_serial(band, two);
        CHECK(a.neutral == b.neutral);
        CHECK(a.witness == b.witness);
    }
}

#ifdef _OPENMP
TEST_CASE("worker count does not change results") {
    const int saved = omp_get_max_threads();
    CrossedModule cm = build_q8_v4();
    std::vector<Cochain1> base = enumerate_z1(cm);
    for (int threads : {1, 2, 3}) {
        omp_set_num_threads(threads);
        CHECK(enumerate_z1(cm) == base);
        CHECK(automorphisms_parallel(quaternion_group()) ==
              automorphisms_serial(quaternion_group()));
    }
    omp_set_num_threads(saved);
}
#endif
