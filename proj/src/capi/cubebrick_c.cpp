#include "cubebrick/cubebrick.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "cubebrick/dissection.hpp"
#include "cubebrick/error.hpp"
#include "cubebrick/montucla2d.hpp"
#include "cubebrick/sampling.hpp"
#include "cubebrick/svg.hpp"
#include "cubebrick/verify.hpp"

struct cb_brick {
  cubebrick::Dissection dissection;
};

struct cb_pieces {
  std::vector<cubebrick::Piece2D> pieces;
};

struct cb_verify_report {
  std::vector<cubebrick::SuiteResult> suites;
};

namespace {

thread_local std::string last_error;

cb_status to_status(cubebrick::ErrorCode code) {
  using cubebrick::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return CB_ERR_INVALID_ARGUMENT;
    case ErrorCode::NonPositiveLength: return CB_ERR_NON_POSITIVE_LENGTH;
    case ErrorCode::VolumeNotUnit: return CB_ERR_VOLUME_NOT_UNIT;
    case ErrorCode::OutOfDomain: return CB_ERR_OUT_OF_DOMAIN;
    case ErrorCode::DimensionMismatch: return CB_ERR_DIMENSION_MISMATCH;
    case ErrorCode::InvalidAspect: return CB_ERR_INVALID_ASPECT;
    case ErrorCode::PrecisionExceeded: return CB_ERR_PRECISION_EXCEEDED;
    case ErrorCode::NotFound: return CB_ERR_NOT_FOUND;
    case ErrorCode::SingularMatrix: return CB_ERR_SINGULAR_MATRIX;
  }
  return CB_ERR_INTERNAL;
}

cb_status fail(cb_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
cb_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    last_error.clear();
    return CB_OK;
  } catch (const cubebrick::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CB_ERR_INTERNAL, "unknown error");
  }
}

#define CB_REQUIRE(cond)                                                     \
  do {                                                                       \
    if (!(cond)) return fail(CB_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

template <typename T>
std::span<const T> view(const T* p, std::size_t n) {
  return {p, n};
}

void copy_out(const std::vector<double>& v, double* out) {
  if (out) std::memcpy(out, v.data(), v.size() * sizeof(double));
}

}  // namespace

extern "C" {

const char* cb_status_name(cb_status status) {
  switch (status) {
    case CB_OK: return "OK";
    case CB_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case CB_ERR_NON_POSITIVE_LENGTH: return "NonPositiveLength";
    case CB_ERR_VOLUME_NOT_UNIT: return "VolumeNotUnit";
    case CB_ERR_OUT_OF_DOMAIN: return "OutOfDomain";
    case CB_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case CB_ERR_INVALID_ASPECT: return "InvalidAspect";
    case CB_ERR_PRECISION_EXCEEDED: return "PrecisionExceeded";
    case CB_ERR_NOT_FOUND: return "NotFound";
    case CB_ERR_SINGULAR_MATRIX: return "SingularMatrix";
    case CB_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* cb_last_error(void) { return last_error.c_str(); }

cb_status cb_normalize_volume(const double* lengths, size_t n, double* out) {
  CB_REQUIRE(lengths && out);
  return guarded([&] { copy_out(cubebrick::normalize_volume(view(lengths, n)), out); });
}

cb_status cb_brick_create(const double* lengths, size_t n, cb_brick** out) {
  CB_REQUIRE(out);
  CB_REQUIRE(lengths || n == 0);
  *out = nullptr;
  return guarded([&] {
    *out = new cb_brick{cubebrick::Dissection(cubebrick::BrickSpec::make(view(lengths, n)))};
  });
}

void cb_brick_destroy(cb_brick* brick) { delete brick; }

size_t cb_brick_dim(const cb_brick* brick) { return brick ? brick->dissection.dim() : 0; }

cb_status cb_brick_sorted_lengths(const cb_brick* brick, double* out) {
  CB_REQUIRE(brick && out);
  return guarded([&] { copy_out(brick->dissection.spec().lengths(), out); });
}

cb_status cb_brick_perm(const cb_brick* brick, size_t* out) {
  CB_REQUIRE(brick && out);
  return guarded([&] {
    const auto& perm = brick->dissection.spec().perm();
    for (std::size_t i = 0; i < perm.size(); ++i) out[i] = perm[i];
  });
}

cb_status cb_brick_to_sorted_axes(const cb_brick* brick, const double* user, double* sorted) {
  CB_REQUIRE(brick && user && sorted);
  const std::size_t n = brick->dissection.dim();
  return guarded([&] {
    std::vector<double> tmp(n);
    brick->dissection.spec().to_sorted(view(user, n), tmp);
    copy_out(tmp, sorted);
  });
}

cb_status cb_brick_to_user_axes(const cb_brick* brick, const double* sorted, double* user) {
  CB_REQUIRE(brick && sorted && user);
  const std::size_t n = brick->dissection.dim();
  return guarded([&] {
    std::vector<double> tmp(n);
    brick->dissection.spec().to_user(view(sorted, n), tmp);
    copy_out(tmp, user);
  });
}

cb_status cb_brick_generator(const cb_brick* brick, double* sub) {
  CB_REQUIRE(brick && (sub || brick->dissection.dim() == 1));
  return guarded([&] { copy_out(brick->dissection.generator().sub, sub); });
}

cb_status cb_brick_gs_coefficients(const cb_brick* brick, double* sup) {
  CB_REQUIRE(brick && (sup || brick->dissection.dim() == 1));
  return guarded([&] { copy_out(brick->dissection.gs_coefficients().sup, sup); });
}

cb_status cb_brick_realization(const cb_brick* brick, double* rows) {
  CB_REQUIRE(brick && rows);
  return guarded([&] {
    copy_out(cubebrick::build_realization(brick->dissection.spec()).rows.data(), rows);
  });
}

cb_status cb_cube_to_brick(const cb_brick* brick, const double* x, double* y, int64_t* u,
                           double* alpha, double* c) {
  CB_REQUIRE(brick && x);
  const std::size_t n = brick->dissection.dim();
  return guarded([&] {
    if (y && u && alpha && c) {
      // Fast path: write straight into the caller's buffers.
      brick->dissection.cube_to_brick(
          view(x, n), cubebrick::ForwardBuffers{{y, n}, {u, n}, {alpha, n}, {c, n}});
      return;
    }
    const auto img = brick->dissection.cube_to_brick(view(x, n));
    copy_out(img.y, y);
    copy_out(img.alpha, alpha);
    copy_out(img.c, c);
    if (u) std::memcpy(u, img.u.data(), n * sizeof(int64_t));
  });
}

cb_status cb_brick_to_cube(const cb_brick* brick, const double* c, double* x, int64_t* u) {
  CB_REQUIRE(brick && c);
  const std::size_t n = brick->dissection.dim();
  return guarded([&] {
    const auto img = brick->dissection.brick_to_cube(view(c, n));
    copy_out(img.x, x);
    if (u) std::memcpy(u, img.u.data(), n * sizeof(int64_t));
  });
}

cb_status cb_brick_to_brick(const cb_brick* src, const cb_brick* dst, const double* c,
                            double* out) {
  CB_REQUIRE(src && dst && c && out);
  return guarded([&] {
    copy_out(cubebrick::brick_to_brick(view(c, src->dissection.dim()), src->dissection,
                                       dst->dissection),
             out);
  });
}

cb_status cb_canonical_from_realization(const cb_brick* brick, const double* y, double* alpha) {
  CB_REQUIRE(brick && y && alpha);
  return guarded([&] {
    copy_out(brick->dissection.canonical_from_realization(view(y, brick->dissection.dim())),
             alpha);
  });
}

cb_status cb_montucla_beta(double a, double* beta) {
  CB_REQUIRE(beta);
  return guarded([&] { *beta = cubebrick::montucla_lattice(a).beta; });
}

cb_status cb_piece_count_bound(double a, size_t* bound, size_t* loose_bound) {
  return guarded([&] {
    const std::size_t tight = cubebrick::piece_count_bound(a);
    const std::size_t loose = cubebrick::piece_count_bound_loose(a);
    if (bound) *bound = tight;
    if (loose_bound) *loose_bound = loose;
  });
}

cb_status cb_pieces_create(double a, cb_pieces** out) {
  CB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new cb_pieces{cubebrick::enumerate_pieces(a)}; });
}

void cb_pieces_destroy(cb_pieces* pieces) { delete pieces; }

size_t cb_pieces_count(const cb_pieces* pieces) { return pieces ? pieces->pieces.size() : 0; }

cb_status cb_pieces_label(const cb_pieces* pieces, size_t index, int64_t* u) {
  CB_REQUIRE(pieces && u);
  if (index >= pieces->pieces.size()) return fail(CB_ERR_INVALID_ARGUMENT, "piece index out of range");
  u[0] = pieces->pieces[index].u[0];
  u[1] = pieces->pieces[index].u[1];
  last_error.clear();
  return CB_OK;
}

size_t cb_pieces_vertex_count(const cb_pieces* pieces, size_t index) {
  if (!pieces || index >= pieces->pieces.size()) return 0;
  return pieces->pieces[index].in_rect.size();
}

cb_status cb_pieces_vertices(const cb_pieces* pieces, size_t index, int in_square, double* xy) {
  CB_REQUIRE(pieces && xy);
  if (index >= pieces->pieces.size()) return fail(CB_ERR_INVALID_ARGUMENT, "piece index out of range");
  const auto& piece = pieces->pieces[index];
  const auto& poly = in_square ? piece.in_square : piece.in_rect;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    xy[2 * i] = poly[i].x;
    xy[2 * i + 1] = poly[i].y;
  }
  last_error.clear();
  return CB_OK;
}

cb_status cb_render_svg(double a, cb_svg_mode mode, char** out) {
  CB_REQUIRE(out);
  *out = nullptr;
  cubebrick::SvgMode m;
  switch (mode) {
    case CB_SVG_RECTANGLE: m = cubebrick::SvgMode::Rectangle; break;
    case CB_SVG_SQUARE: m = cubebrick::SvgMode::Square; break;
    case CB_SVG_TILING: m = cubebrick::SvgMode::Tiling; break;
    case CB_SVG_SIDE_BY_SIDE: m = cubebrick::SvgMode::SideBySide; break;
    default: return fail(CB_ERR_INVALID_ARGUMENT, "unknown svg mode");
  }
  return guarded([&] {
    const std::string svg = cubebrick::render_dissection_svg(a, m);
    char* buf = new char[svg.size() + 1];
    std::memcpy(buf, svg.c_str(), svg.size() + 1);
    *out = buf;
  });
}

void cb_string_free(char* s) { delete[] s; }

cb_status cb_verify_run(size_t n, size_t trials, uint64_t seed, int inject_fault,
                        cb_verify_report** out) {
  CB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    cubebrick::VerifyOptions opt{n, trials, seed, inject_fault != 0};
    *out = new cb_verify_report{cubebrick::run_verification(opt)};
  });
}

void cb_verify_destroy(cb_verify_report* report) { delete report; }

size_t cb_verify_suite_count(const cb_verify_report* report) {
  return report ? report->suites.size() : 0;
}

const char* cb_verify_suite_name(const cb_verify_report* report, size_t index) {
  if (!report || index >= report->suites.size()) return "";
  return report->suites[index].name.c_str();
}

int cb_verify_suite_passed(const cb_verify_report* report, size_t index) {
  if (!report || index >= report->suites.size()) return 0;
  return report->suites[index].passed ? 1 : 0;
}

const char* cb_verify_suite_detail(const cb_verify_report* report, size_t index) {
  if (!report || index >= report->suites.size()) return "";
  return report->suites[index].detail.c_str();
}

cb_status cb_random_unit_lengths(size_t n, double log_mass, uint64_t seed, double* out) {
  CB_REQUIRE(out);
  if (n == 0) return fail(CB_ERR_INVALID_ARGUMENT, "dimension must be at least 1");
  return guarded([&] {
    cubebrick::Rng rng(seed);
    copy_out(cubebrick::random_unit_lengths(n, log_mass, rng), out);
  });
}

}  // extern "C"
