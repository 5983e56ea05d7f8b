#include <doctest.h>

#include "sagt/gates.hpp"
#include "sagt/kernels.hpp"
#include "support.hpp"

using namespace sagt;

namespace {

std::span<Complex> view(StateVector& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

kernels::SectorMatrix random_sector_op(std::uint64_t seed) { return random_unitary(8, seed); }

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("apply_sector matches the dense padded operator") {
    for (int sectors = 1; sectors <= 3; ++sectors) {
      for (int k = 0; k < sectors; ++k) {
        const kernels::SectorMatrix op = random_sector_op(10 * sectors + k);
        std::vector<Operator> factors(sectors, identity(3));
        factors[k] = op;
        const Operator dense = tensor(factors);
        StateVector psi = random_state(dense.rows(), 7);
        const StateVector expected = dense * psi;
        kernels::apply_sector(view(psi), op, k, sectors);
        CHECK((psi - expected).norm() <= 1e-13);
      }
    }
  }

  TEST_CASE("parallel and serial kernels agree exactly") {
    // 3 sectors = 512 amplitudes sits below the threshold; repeat the check
    // with the threshold-free serial path and with the full register apply.
    const int sectors = 3;
    const kernels::SectorMatrix op = random_sector_op(3);
    StateVector a = random_state(512, 1);
    StateVector b = a;
    kernels::apply_all_sectors(view(a), op, sectors);
    kernels::apply_all_sectors_serial(view(b), op, sectors);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    for (int k = 0; k < sectors; ++k) {
      kernels::apply_sector(view(a), op, k, sectors);
      kernels::apply_sector_serial(view(b), op, k, sectors);
    }
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    const std::span<const Complex> ca(a.data(), a.size());
    const std::uint64_t mask = kernels::sector_mask(-1, sectors);
    CHECK(kernels::z_parity_expectation(ca, mask) == doctest::Approx(kernels::z_parity_expectation_serial(ca, mask)).epsilon(1e-14));
  }

  TEST_CASE("z parity expectation") {
    StateVector psi = test::basis_state(3, 0b010);
    const std::span<const Complex> v(psi.data(), psi.size());
    CHECK(kernels::z_parity_expectation(v, kernels::sector_mask(-1, 1)) == -1.0);
    CHECK(kernels::sector_mask(0, 2) == 0b111000u);
    CHECK(kernels::sector_mask(1, 2) == 0b000111u);
    CHECK(kernels::sector_mask(-1, 2) == 0b111111u);

    StateVector r = random_state(64, 4);
    const Operator z = pauli_string("111ZZZ");
    const double dense = (r.adjoint() * z * r)(0).real();
    const std::span<const Complex> rv(r.data(), r.size());
    CHECK(kernels::z_parity_expectation(rv, kernels::sector_mask(1, 2)) == doctest::Approx(dense).epsilon(1e-13));
  }

  TEST_CASE("argument checks") {
    StateVector psi = random_state(64, 1);
    const kernels::SectorMatrix op = kernels::SectorMatrix::Identity();
    CHECK_THROWS_AS(kernels::apply_sector(view(psi), op, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(kernels::apply_sector(view(psi), op, 0, 1), std::invalid_argument);
  }
}
