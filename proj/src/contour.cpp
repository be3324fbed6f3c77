#include "delange/contour.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "delange/zeta.hpp"

namespace delange {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double loglog(double t) { return std::log(std::log(t)); }

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace((unsigned char)line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_double(std::string_view tok, double& v) {
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size() && std::isfinite(v);
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& why) {
  std::ostringstream msg;
  msg << "line " << line_no << ": " << why;
  fail(ErrorCode::ParseError, msg.str());
}

}  // namespace

ZeroSet parse_zeros(std::istream& in, double T) {
  ZeroSet out;
  out.T = T;
  int width = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    auto toks = split_ws(view);
    if (toks.empty()) continue;
    if (width == 0) {
      if (toks.size() > 2) parse_error(line_no, "expected one or two numbers");
      width = int(toks.size());
      out.source = width == 1 ? ZeroSource::table : ZeroSource::synthetic;
    }
    if (int(toks.size()) != width) parse_error(line_no, "column count differs from the first data line");
    Zero z;
    if (width == 1) {
      if (!parse_double(toks[0], z.gamma)) parse_error(line_no, "bad ordinate '" + std::string(toks[0]) + "'");
      z.beta = 0.5;
    } else {
      if (!parse_double(toks[0], z.beta)) parse_error(line_no, "bad beta '" + std::string(toks[0]) + "'");
      if (!parse_double(toks[1], z.gamma)) parse_error(line_no, "bad gamma '" + std::string(toks[1]) + "'");
      if (!(z.beta >= 0.5 && z.beta < 1.0)) {
        std::ostringstream msg;
        msg << "line " << line_no << ": beta " << z.beta << " outside [1/2, 1)";
        fail(ErrorCode::BetaOutOfRange, msg.str());
      }
    }
    if (!(z.gamma > 0.0)) parse_error(line_no, "ordinates must be positive");
    if (z.gamma <= T) out.zeros.push_back(z);
  }
  std::stable_sort(out.zeros.begin(), out.zeros.end(), [](const Zero& a, const Zero& b) { return a.gamma < b.gamma; });
  return out;
}

ZeroSet load_zeros(const std::string& path, double T) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open zero file '" + path + "'");
  return parse_zeros(in, T);
}

double good_threshold(double gamma, double C_star) { return 1.0 - C_star / loglog(std::abs(gamma) + 2.0); }

ZeroClass classify(const Zero& zero, double C_star) {
  return zero.beta < good_threshold(zero.gamma, C_star) ? ZeroClass::good : ZeroClass::exceptional;
}

namespace {

// sup of beta >= alpha over gamma in [lo, hi]; NaN if none.
double window_sup(const std::vector<Zero>& zeros, double lo, double hi, double alpha) {
  auto first = std::lower_bound(zeros.begin(), zeros.end(), lo, [](const Zero& z, double v) { return z.gamma < v; });
  double best = kNaN;
  for (auto it = first; it != zeros.end() && it->gamma <= hi; ++it)
    if (it->beta >= alpha && !(it->beta <= best)) best = it->beta;
  return best;
}

int top_exponent(double T) {
  int l0 = int(std::floor(std::log2(T)));
  while (std::ldexp(1.0, l0 + 1) <= T) ++l0;
  while (std::ldexp(1.0, l0) > T) --l0;
  return l0;
}

}  // namespace

BlockLayout block_layout(const ZeroSet& zeros, double T, double alpha, double C_star) {
  if (!(T >= 1024.0)) fail(ErrorCode::ParameterOutOfRange, "T must be at least 2^10");
  if (!(alpha > 0.5 && alpha < 1.0)) fail(ErrorCode::ParameterOutOfRange, "alpha must lie in (1/2, 1)");
  if (!(C_star > 0.0)) fail(ErrorCode::ParameterOutOfRange, "C* must be positive");
  BlockLayout out;
  out.l_end = top_exponent(T);
  // H0 = c log log T = 2^L with c as close to [1/2, 1] as a positive L allows
  const double ll = loglog(std::ldexp(1.0, out.l_end));
  double best = std::numeric_limits<double>::infinity();
  for (int L = 1; L < out.l_end; ++L) {
    double c = std::ldexp(1.0, L) / ll;
    double miss = c < 0.5 ? 0.5 - c : (c > 1.0 ? c - 1.0 : 0.0);
    if (miss < best) {
      best = miss;
      out.L = L;
    }
  }
  out.H0 = std::ldexp(1.0, out.L);
  out.l_start = std::max(out.L, kMinBlockExponent);
  out.offset0 = C_star / loglog(2.0 * out.H0);
  out.beta0 = window_sup(zeros.zeros, 0.0, 2.0 * std::ldexp(1.0, out.l_start), alpha);
  out.beta0_star = std::isnan(out.beta0) ? alpha : out.beta0 + out.offset0;
  return out;
}

std::vector<DyadicBlock> build_blocks(const ZeroSet& zeros, double T, double alpha, double C_star) {
  const BlockLayout layout = block_layout(zeros, T, alpha, C_star);
  std::vector<DyadicBlock> blocks;
  for (int l = layout.l_start; l < layout.l_end; ++l) {
    DyadicBlock b;
    b.l = l;
    b.U = std::ldexp(1.0, l);
    const double ll = loglog(b.U);
    const auto m0 = std::int64_t(std::llround(b.U / (2.0 * 0.75 * ll)));
    bool found = false;
    for (std::int64_t k = 0; k < 4096 && !found; ++k) {
      for (std::int64_t m : {m0 - k, m0 + k}) {
        if (m < 1) continue;
        double c = b.U / (2.0 * double(m)) / ll;
        if (c >= 0.5 && c <= 1.0) {
          b.count = m;
          b.H = b.U / (2.0 * double(m));
          b.c_l = c;
          found = true;
          break;
        }
      }
    }
    if (!found) {
      std::ostringstream msg;
      msg << "no c_l in [1/2, 1] makes U/(2H) an integer at U = 2^" << l;
      fail(ErrorCode::NoAdmissibleCl, msg.str());
    }
    b.offset = C_star / loglog(2.0 * (b.U + 12.0));
    b.beta.resize(std::size_t(b.count));
    b.beta_star.resize(std::size_t(b.count));
    for (std::int64_t j = 0; j < b.count; ++j) {
      const double c = b.center(j);
      const double s = window_sup(zeros.zeros, c - 2.0 * b.H, c + 2.0 * b.H, alpha);
      b.beta[j] = s;
      b.beta_star[j] = std::isnan(s) ? alpha : s + b.offset;
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

const char* piece_label_name(PieceLabel label) noexcept {
  switch (label) {
    case PieceLabel::V_star: return "V_star";
    case PieceLabel::V0: return "V0";
    case PieceLabel::Vj: return "Vj";
    case PieceLabel::hj: return "hj";
    case PieceLabel::h0l: return "h0l";
    case PieceLabel::Gamma_loop: return "Gamma_loop";
    case PieceLabel::mirror: return "mirror";
  }
  return "unknown";
}

const char* vcase_name(VCase c) noexcept {
  switch (c) {
    case VCase::valley: return "valley";
    case VCase::peak: return "peak";
    case VCase::ascending: return "ascending";
    case VCase::descending: return "descending";
    case VCase::flat: return "flat";
  }
  return "unknown";
}

std::vector<Complex> ContourPath::vertices() const {
  std::vector<Complex> out;
  if (pieces.empty()) return out;
  out.reserve(pieces.size() + 1);
  out.push_back(pieces.front().a);
  for (const auto& p : pieces) out.push_back(p.b);
  return out;
}

namespace {

// One vertical run on the upper half before junction offsets are applied.
struct Run {
  double abscissa;
  double lo;  // nominal bottom height
  double hi;  // nominal top height
  double eps_lo;
  double eps_hi;
  PieceLabel label;
  bool ends_block = false;
};

VCase classify_neighbors(double below, double here, double above) {
  if (std::isnan(below) || std::isnan(above)) return VCase::flat;
  if (here < below && here < above) return VCase::valley;
  if (here > below && here > above) return VCase::peak;
  if (below < here && here < above) return VCase::ascending;
  if (above < here && here < below) return VCase::descending;
  return VCase::flat;
}

void emit(std::vector<Piece>& out, Complex a, Complex b, PieceLabel label) {
  if (a == b) return;
  out.push_back({a, b, label});
}

}  // namespace

ContourPath assemble_contour(const std::vector<DyadicBlock>& blocks, const BlockLayout& layout, const ZeroSet& zeros,
                             double alpha, double eta, double C_star, double corner_eps, double logx) {
  (void)zeros;
  if (!(eta > 0.0 && eta < 0.25)) fail(ErrorCode::ParameterOutOfRange, "eta must lie in (0, 1/4)");
  if (!(alpha >= 0.5 + eta && alpha <= 1.0 - eta))
    fail(ErrorCode::ParameterOutOfRange, "alpha must lie in [1/2 + eta, 1 - eta]");
  if (!(logx > 2.0)) fail(ErrorCode::ParameterOutOfRange, "log x must exceed 2");
  if (blocks.empty()) fail(ErrorCode::ParameterOutOfRange, "no dyadic blocks");
  for (const auto& b : blocks)
    if (corner_eps > 0.0 && !(corner_eps < b.H / 4.0)) fail(ErrorCode::ParameterOutOfRange, "corner_eps must be < H/4");

  auto check_beta = [](double v, const std::string& where) {
    if (v >= 1.0) {
      std::ostringstream msg;
      msg << "beta* = " << v << " >= 1 in " << where;
      fail(ErrorCode::DegenerateBlock, msg.str());
    }
  };
  check_beta(layout.beta0_star, "V0");
  for (const auto& b : blocks)
    for (double v : b.beta_star) check_beta(v, "block 2^" + std::to_string(b.l));

  ContourPath path;
  path.params = {alpha, eta, C_star, corner_eps, logx, std::ldexp(1.0, layout.l_end)};

  // vertical runs from the slab top upward
  const double alpha0 = 0.5 + eta;
  const double first_eps = corner_eps > 0.0 ? corner_eps : blocks.front().H / 100.0;
  std::vector<Run> runs;
  runs.push_back({alpha0, 0.0, kSlabTop, first_eps, first_eps, PieceLabel::V_star});
  runs.push_back({layout.beta0_star, kSlabTop, blocks.front().U, first_eps, first_eps, PieceLabel::V0});
  path.bands.push_back({kSlabTop, blocks.front().U, layout.offset0, first_eps});
  for (const auto& b : blocks) {
    const double eps = corner_eps > 0.0 ? corner_eps : b.H / 100.0;
    for (std::int64_t j = 0; j < b.count; ++j)
      runs.push_back({b.beta_star[j], b.endpoint(j), b.endpoint(j + 1), eps, eps, PieceLabel::Vj, j + 1 == b.count});
    path.bands.push_back({b.U, 2.0 * b.U, b.offset, eps});
  }

  // case tally on the block intervals
  for (std::size_t k = 2; k < runs.size(); ++k) {
    double below = runs[k - 1].abscissa;
    double above = k + 1 < runs.size() ? runs[k + 1].abscissa : kNaN;
    VCase c = classify_neighbors(below, runs[k].abscissa, above);
    ++path.v_tally[c];
    if (c != VCase::flat) ++path.h_tally[c];
  }

  // junction heights: larger abscissa extends by eps, smaller stops eps short
  const std::size_t n = runs.size();
  std::vector<double> start(n), stop(n);
  start[0] = 0.0;
  stop[n - 1] = runs[n - 1].hi;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double t = runs[k].hi;
    const double eps = std::min(runs[k].eps_hi, runs[k + 1].eps_lo);
    double h = t;
    if (runs[k].abscissa > runs[k + 1].abscissa) h = t + eps;
    if (runs[k].abscissa < runs[k + 1].abscissa) h = t - eps;
    if (runs[k].label == PieceLabel::V_star) h = t;  // slab top is sharp
    stop[k] = h;
    start[k + 1] = h;
  }

  std::vector<Piece> upper;
  // loop around s = 1: arc of radius r from angle 0 to where Im = r/2
  const double r = 1.0 / logx;
  const double leg = r / 2.0;
  const double theta_end = std::numbers::pi - std::asin(0.5);
  const int arc_steps = 24;
  Complex prev(1.0 + r, 0.0);
  for (int k = 1; k <= arc_steps; ++k) {
    double th = theta_end * k / arc_steps;
    Complex next = k == arc_steps ? Complex(1.0 - r * std::cos(std::asin(0.5)), leg)
                                  : Complex(1.0 + r * std::cos(th), r * std::sin(th));
    emit(upper, prev, next, PieceLabel::Gamma_loop);
    prev = next;
  }
  emit(upper, prev, Complex(alpha0, leg), PieceLabel::Gamma_loop);
  prev = Complex(alpha0, leg);
  start[0] = leg;

  // merge equal-abscissa neighbours into one vertical piece
  std::size_t k = 0;
  while (k < n) {
    std::size_t e = k;
    while (e + 1 < n && runs[e + 1].abscissa == runs[k].abscissa && runs[e + 1].label == runs[k].label &&
           !runs[e].ends_block)
      ++e;
    const double a = runs[k].abscissa;
    emit(upper, prev, Complex(a, stop[e]), runs[k].label);
    prev = Complex(a, stop[e]);
    if (e + 1 < n) {
      const bool block_edge = runs[e + 1].label != PieceLabel::Vj || runs[e].ends_block;
      Complex next(runs[e + 1].abscissa, stop[e]);
      emit(upper, prev, next, block_edge ? PieceLabel::h0l : PieceLabel::hj);
      prev = next;
    }
    k = e + 1;
  }

  // full path: mirrored lower half reversed, then the upper half
  path.pieces.reserve(2 * upper.size());
  for (auto it = upper.rbegin(); it != upper.rend(); ++it)
    path.pieces.push_back({std::conj(it->b), std::conj(it->a), PieceLabel::mirror});
  path.upper_begin = path.pieces.size();
  path.pieces.insert(path.pieces.end(), upper.begin(), upper.end());
  return path;
}

ContourPath build_contour(const ZeroSet& zeros, double T, double alpha, double eta, double C_star, double logx,
                          double corner_eps) {
  const BlockLayout layout = block_layout(zeros, T, alpha, C_star);
  const auto blocks = build_blocks(zeros, T, alpha, C_star);
  return assemble_contour(blocks, layout, zeros, alpha, eta, C_star, corner_eps, logx);
}

double contour_abscissa(const ContourPath& path, double t) {
  double best = kNaN;
  for (std::size_t i = path.upper_begin; i < path.pieces.size(); ++i) {
    const auto& p = path.pieces[i];
    if (p.label == PieceLabel::Gamma_loop || p.a.real() != p.b.real()) continue;
    double lo = std::min(p.a.imag(), p.b.imag()), hi = std::max(p.a.imag(), p.b.imag());
    if (t >= lo && t <= hi && !(p.a.real() >= best)) best = p.a.real();
  }
  return best;
}

ValidationReport validate_contour(const ContourPath& path, const ZeroSet& zeros, double alpha) {
  ValidationReport rep;
  rep.v_tally = path.v_tally;
  rep.h_tally = path.h_tally;
  const auto& pieces = path.pieces;

  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (pieces[i].b != pieces[i + 1].a) {
      rep.connected = false;
      std::ostringstream msg;
      msg << "gap between piece " << i << " and " << i + 1;
      rep.failures.push_back(msg.str());
      break;
    }
  }

  const std::size_t n = pieces.size();
  if (path.upper_begin * 2 != n) {
    rep.symmetric = false;
    rep.failures.push_back("upper and lower halves differ in length");
  } else {
    for (std::size_t i = 0; i < path.upper_begin; ++i) {
      const Piece& lo = pieces[i];
      const Piece& up = pieces[n - 1 - i];
      if (lo.a != std::conj(up.b) || lo.b != std::conj(up.a)) {
        rep.symmetric = false;
        std::ostringstream msg;
        msg << "piece " << i << " is not the reflection of piece " << n - 1 - i;
        rep.failures.push_back(msg.str());
        break;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Piece& p = pieces[i];
    bool loop = p.label == PieceLabel::Gamma_loop ||
                (p.label == PieceLabel::mirror && pieces[n - 1 - i].label == PieceLabel::Gamma_loop);
    if (loop) continue;
    if (p.a.real() != p.b.real() && p.a.imag() != p.b.imag()) {
      rep.axis_parallel = false;
      std::ostringstream msg;
      msg << "piece " << i << " (" << piece_label_name(p.label) << ") is not axis-parallel";
      rep.failures.push_back(msg.str());
      break;
    }
  }

  const double top = path.params.top;
  for (const Zero& z : zeros.zeros) {
    if (z.beta < alpha || z.gamma > top) continue;
    // margin: smallest offset among bands within eps of the height
    double offset = std::numeric_limits<double>::infinity(), eps = 0.0;
    bool covered = false;
    for (const auto& b : path.bands) {
      if (z.gamma >= b.lo - b.eps && z.gamma <= b.hi + b.eps) {
        covered = true;
        if (b.offset < offset) {
          offset = b.offset;
          eps = b.eps;
        }
      }
    }
    double need = covered ? z.beta + offset - eps : 1.0;
    double have = contour_abscissa(path, z.gamma);
    if (!(have >= need)) {
      rep.clearance = false;
      rep.offending.push_back(z);
      std::ostringstream msg;
      msg << "zero (" << z.beta << ", " << z.gamma << ") has contour abscissa " << have << " < required " << need;
      rep.failures.push_back(msg.str());
    }
  }
  return rep;
}

namespace {

// Uniform [0, 1) from the raw engine bits; stable across standard libraries.
double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

}  // namespace

ZeroSet synthetic_zero_set(std::uint64_t seed, double T, double alpha, double beta_max, int clusters,
                           int per_cluster) {
  if (!(T > 256.0)) fail(ErrorCode::ParameterOutOfRange, "T must exceed 2^8");
  if (!(beta_max >= alpha && beta_max < 1.0)) fail(ErrorCode::ParameterOutOfRange, "need alpha <= beta_max < 1");
  std::mt19937_64 rng(seed);
  ZeroSet out;
  out.source = ZeroSource::synthetic;
  out.T = T;
  const double lo = 128.0;
  const int l_hi = top_exponent(T);
  for (int c = 0; c < clusters; ++c) {
    double center;
    if (c % 4 == 0) {
      // straddle a dyadic junction
      int l = 8 + int(uniform01(rng) * (l_hi - 8));
      center = std::ldexp(1.0, std::min(l, l_hi - 1));
    } else {
      center = std::exp(std::log(lo * 2.0) + uniform01(rng) * (std::log(T) - std::log(lo * 2.0)));
    }
    const double H = 0.75 * loglog(center);
    for (int k = 0; k < per_cluster; ++k) {
      double g = center + (uniform01(rng) - 0.5) * 12.0 * H;
      double b = alpha + uniform01(rng) * (beta_max - alpha);
      if (g > lo && g <= T) out.zeros.push_back({b, g});
    }
  }
  std::sort(out.zeros.begin(), out.zeros.end(), [](const Zero& a, const Zero& b) { return a.gamma < b.gamma; });
  return out;
}

DensityReport zero_density_count(const ZeroSet& zeros, double sigma, double T, double C_star, double epsilon) {
  if (!(sigma >= 0.5 && sigma <= 1.0)) fail(ErrorCode::ParameterOutOfRange, "sigma must lie in [1/2, 1]");
  if (!(T > std::exp(1.0))) fail(ErrorCode::ParameterOutOfRange, "T must exceed e");
  DensityReport rep;
  rep.sigma = sigma;
  rep.T = T;
  rep.sigma_exceptional = 1.0 - C_star / loglog(T);
  for (const Zero& z : zeros.zeros) {
    if (!(z.gamma > 0.0 && z.gamma <= T)) continue;
    if (z.beta >= sigma) ++rep.count;
    if (z.beta >= rep.sigma_exceptional) ++rep.exceptional_count;
  }
  rep.huxley_bound = std::exp(2.4 * (1.0 - sigma) * std::log(T) + 44.0 * std::log(std::log(T)));
  rep.ratio = double(rep.count) / rep.huxley_bound;
  rep.t_eps = std::pow(T, epsilon);
  rep.exceptional_ratio = double(rep.exceptional_count) / rep.t_eps;
  return rep;
}

double sampled_log_zeta_max(const ContourPath& path, int samples_per_piece) {
  double worst = 0.0;
  for (std::size_t i = path.upper_begin; i < path.pieces.size(); ++i) {
    const auto& p = path.pieces[i];
    if (p.label == PieceLabel::Gamma_loop) continue;
    for (int k = 0; k <= samples_per_piece; ++k) {
      Complex s = p.a + (p.b - p.a) * (double(k) / samples_per_piece);
      if (s.imag() < 1.0) continue;
      worst = std::max(worst, std::abs(std::log(std::abs(zeta(s)))));
    }
  }
  return worst;
}

}  // namespace delange
