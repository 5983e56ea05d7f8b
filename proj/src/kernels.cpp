#include "sagt/kernels.hpp"

#include <bit>
#include <stdexcept>

namespace sagt::kernels {
namespace {

struct SectorLayout {
  std::int64_t groups;
  int shift;
};

SectorLayout layout(std::size_t size, int sector, int sectors) {
  if (sectors < 1 || sector < 0 || sector >= sectors) throw std::invalid_argument("sector index out of range");
  if (sectors > 20 || size != (std::size_t{1} << (3 * sectors))) {
    throw std::invalid_argument("state size does not match the sector count");
  }
  return {static_cast<std::int64_t>(size >> 3), 3 * (sectors - 1 - sector)};
}

inline void apply_group(Complex* psi, const SectorMatrix& op, std::int64_t g, int shift) {
  const std::int64_t low = g & ((std::int64_t{1} << shift) - 1);
  const std::int64_t high = g >> shift;
  const std::int64_t base = (high << (shift + 3)) | low;
  Complex in[8];
  for (int j = 0; j < 8; ++j) in[j] = psi[base + (std::int64_t{j} << shift)];
  for (int i = 0; i < 8; ++i) {
    Complex acc{};
    for (int j = 0; j < 8; ++j) acc += op(i, j) * in[j];
    psi[base + (std::int64_t{i} << shift)] = acc;
  }
}

}  // namespace

void apply_sector(std::span<Complex> state, const SectorMatrix& op, int sector, int sectors) {
  const auto [groups, shift] = layout(state.size(), sector, sectors);
  Complex* psi = state.data();
#pragma omp parallel for schedule(static) if (groups >= kParallelThreshold)
  for (std::int64_t g = 0; g < groups; ++g) apply_group(psi, op, g, shift);
}

void apply_sector_serial(std::span<Complex> state, const SectorMatrix& op, int sector, int sectors) {
  const auto [groups, shift] = layout(state.size(), sector, sectors);
  for (std::int64_t g = 0; g < groups; ++g) apply_group(state.data(), op, g, shift);
}

void apply_all_sectors(std::span<Complex> state, const SectorMatrix& op, int sectors) {
  for (int k = 0; k < sectors; ++k) apply_sector(state, op, k, sectors);
}

void apply_all_sectors_serial(std::span<Complex> state, const SectorMatrix& op, int sectors) {
  for (int k = 0; k < sectors; ++k) apply_sector_serial(state, op, k, sectors);
}

double z_parity_expectation(std::span<const Complex> state, std::uint64_t mask) {
  const auto size = static_cast<std::int64_t>(state.size());
  const Complex* psi = state.data();
  double sum = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : sum) if (size >= 8 * kParallelThreshold)
  for (std::int64_t i = 0; i < size; ++i) {
    const double p = std::norm(psi[i]);
    sum += (std::popcount(static_cast<std::uint64_t>(i) & mask) & 1) ? -p : p;
  }
  return sum;
}

double z_parity_expectation_serial(std::span<const Complex> state, std::uint64_t mask) {
  double sum = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double p = std::norm(state[i]);
    sum += (std::popcount(static_cast<std::uint64_t>(i) & mask) & 1) ? -p : p;
  }
  return sum;
}

std::uint64_t sector_mask(int sector, int sectors) {
  if (sector < 0) return (std::uint64_t{1} << (3 * sectors)) - 1;
  return std::uint64_t{0b111} << (3 * (sectors - 1 - sector));
}

}  // namespace sagt::kernels
