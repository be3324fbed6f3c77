#pragma once

// Zero sets, dyadic blocks and the piecewise axis-parallel contour built from
// them, plus zero-density accounting.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "delange/error.hpp"

namespace delange {

struct Zero {
  double beta = 0.5;
  double gamma = 0.0;
};

enum class ZeroSource { table, synthetic };

struct ZeroSet {
  std::vector<Zero> zeros;  // sorted by gamma
  ZeroSource source = ZeroSource::table;
  double T = 0.0;
};

// Table format: one ordinate per line. Synthetic: "beta gamma" per line. The
// first data line fixes the format; blank lines and '#' comments are skipped.
ZeroSet parse_zeros(std::istream& in, double T);
ZeroSet load_zeros(const std::string& path, double T);

enum class ZeroClass { good, exceptional };

// good iff beta < 1 - C*/log log(|gamma| + 2)
ZeroClass classify(const Zero& zero, double C_star);
double good_threshold(double gamma, double C_star);

struct DyadicBlock {
  int l = 0;
  double U = 0.0;
  double c_l = 0.0;
  double H = 0.0;
  // number of intervals, U/(2H)
  std::int64_t count = 0;
  std::vector<double> beta;       // NaN where no zero with beta >= alpha
  std::vector<double> beta_star;  // alpha where no qualifying zero
  // C*/log log(2(U+12))
  double offset = 0.0;

  // I_j for 0-based j is [U(m+j)/m, U(m+j+1)/m].
  double endpoint(std::int64_t k) const { return U * double(count + k) / double(count); }
  double center(std::int64_t j) const { return U * (double(count + j) + 0.5) / double(count); }
};

struct BlockLayout {
  int l_start = 0;  // first block exponent
  int l_end = 0;    // one past the last block exponent; top of path is 2^l_end
  int L = 0;        // H0 = 2^L
  double H0 = 0.0;
  double beta0 = 0.0;       // NaN if none
  double beta0_star = 0.0;  // V0 abscissa
  double offset0 = 0.0;     // C*/log log(2 H0)
};

inline constexpr double kSlabTop = 32.0;  // 2^5
inline constexpr int kMinBlockExponent = 6;

BlockLayout block_layout(const ZeroSet& zeros, double T, double alpha, double C_star);

// Blocks for l in [l_start, l_end) with beta_j over widened windows.
std::vector<DyadicBlock> build_blocks(const ZeroSet& zeros, double T, double alpha, double C_star);

enum class PieceLabel { V_star, V0, Vj, hj, h0l, Gamma_loop, mirror };
const char* piece_label_name(PieceLabel label) noexcept;

struct Piece {
  Complex a;
  Complex b;
  PieceLabel label;
};

enum class VCase { valley, peak, ascending, descending, flat };
inline constexpr int kVCaseCount = 5;
const char* vcase_name(VCase c) noexcept;

struct CaseTally {
  std::int64_t count[kVCaseCount] = {0, 0, 0, 0, 0};
  std::int64_t operator[](VCase c) const { return count[int(c)]; }
  std::int64_t& operator[](VCase c) { return count[int(c)]; }
  void add(const CaseTally& other) {
    for (int i = 0; i < kVCaseCount; ++i) count[i] += other.count[i];
  }
  // all four strict cases seen
  bool complete() const { return count[0] && count[1] && count[2] && count[3]; }
};

// Height band with the clearance margin that applies there.
struct ClearanceBand {
  double lo = 0.0;
  double hi = 0.0;
  double offset = 0.0;
  double eps = 0.0;
};

struct ContourParams {
  double alpha = 0.6;
  double eta = 0.05;
  double C_star = 1.0;
  // 0 means H/100 per block
  double corner_eps = 0.0;
  double logx = 0.0;
  double top = 0.0;
};

struct ContourPath {
  std::vector<Piece> pieces;
  ContourParams params;
  CaseTally v_tally;
  CaseTally h_tally;
  std::vector<ClearanceBand> bands;
  std::size_t upper_begin = 0;  // index of the first upper-half piece

  std::vector<Complex> vertices() const;
};

ContourPath assemble_contour(const std::vector<DyadicBlock>& blocks, const BlockLayout& layout, const ZeroSet& zeros,
                             double alpha, double eta, double C_star, double corner_eps, double logx);

// Convenience: layout, blocks and assembly in one call.
ContourPath build_contour(const ZeroSet& zeros, double T, double alpha, double eta, double C_star, double logx,
                          double corner_eps = 0.0);

struct ValidationReport {
  bool symmetric = true;
  bool connected = true;
  bool axis_parallel = true;
  bool clearance = true;
  std::vector<std::string> failures;
  std::vector<Zero> offending;
  CaseTally v_tally;
  CaseTally h_tally;

  bool ok() const { return symmetric && connected && axis_parallel && clearance; }
};

ValidationReport validate_contour(const ContourPath& path, const ZeroSet& zeros, double alpha);

// Abscissa of the upper-half path at height t (min over vertical pieces
// covering t, excluding the loop); NaN if none.
double contour_abscissa(const ContourPath& path, double t);

// Clustered synthetic zeros with gamma in (2^7, T], beta in [alpha, beta_max].
ZeroSet synthetic_zero_set(std::uint64_t seed, double T, double alpha, double beta_max = 0.9, int clusters = 20,
                           int per_cluster = 5);

struct DensityReport {
  double sigma = 0.0;
  double T = 0.0;
  std::int64_t count = 0;  // N(sigma, T)
  double huxley_bound = 0.0;  // T^{12/5 (1 - sigma)} (log T)^44
  double ratio = 0.0;
  // exceptional accounting at sigma_e = 1 - C*/log log T
  double sigma_exceptional = 0.0;
  std::int64_t exceptional_count = 0;
  double t_eps = 0.0;
  double exceptional_ratio = 0.0;
};

DensityReport zero_density_count(const ZeroSet& zeros, double sigma, double T, double C_star = 1.0,
                                 double epsilon = 0.01);

// max |log |zeta|| sampled along the non-loop pieces (a diagnostic).
double sampled_log_zeta_max(const ContourPath& path, int samples_per_piece = 8);

}  // namespace delange
