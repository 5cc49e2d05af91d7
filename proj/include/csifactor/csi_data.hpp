#ifndef CSIFACTOR_CSI_DATA_HPP_
#define CSIFACTOR_CSI_DATA_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "csifactor/common.hpp"

namespace csifactor {

/// One CSI capture: N = n_tx * n_rx * n_sc complex channel estimates per
/// packet, T packets. Rows are ordered (tx, rx, subcarrier) lexicographically,
/// so each (tx, rx) antenna pair owns a consecutive block of n_sc rows.
struct CsiFrame {
  std::uint16_t n_tx = 0;
  std::uint16_t n_rx = 0;
  std::uint16_t n_sc = 0;
  std::uint32_t t = 0;
  double sample_rate_hz = 0.0;
  ComplexMatrix data;  // N x T

  Index rows() const { return static_cast<Index>(n_tx) * n_rx * n_sc; }
  Index packets() const { return static_cast<Index>(t); }

  /// Throws ValidationError unless all CsiFrame invariants hold.
  void validate() const;
};

struct LabeledFrame {
  CsiFrame frame;
  std::string label;
};

/// Counts entries where the phase is undefined (zero magnitude) and was
/// reported as 0.
struct PhaseQuality {
  std::size_t zero_magnitude_entries = 0;
};

/// CSIF container (little-endian): magic "CSIF", version u16 = 1,
/// n_tx u16, n_rx u16, n_sc u16, t u32, sample_rate_hz f64, then N*T
/// complex entries as (re, im) f64 pairs, row-major.
CsiFrame load_frame(const std::filesystem::path& path);
void store_frame(const CsiFrame& frame, const std::filesystem::path& path);

/// Entrywise modulus, N x T, nonnegative.
Matrix amplitude(const CsiFrame& frame);

/// Entrywise principal argument in (-pi, pi]. Zero-magnitude entries get
/// phase 0 and are counted in *quality when given.
Matrix phase(const CsiFrame& frame, PhaseQuality* quality = nullptr);

/// STO/SFO removal. Per packet and per antenna-pair block of n_sc rows:
/// unwrap across subcarriers, subtract the two-point line
/// a = (phi_n - phi_1) / (k_n - k_1), then subtract the block mean of the
/// slope-removed phases, so each block ends up with zero endpoint slope and
/// zero mean. subcarrier_index holds the physical subcarrier number of each
/// row within a block and must be strictly increasing with length >= 2.
Matrix sanitize_phase(const Matrix& phase_matrix, const std::vector<int>& subcarrier_index);

/// Loads every `<root>/<label>/*.csif`, labels sorted, files sorted within
/// each label.
std::vector<LabeledFrame> load_dataset(const std::filesystem::path& root);

}  // namespace csifactor

#endif  // CSIFACTOR_CSI_DATA_HPP_
