#pragma once
#include <stdexcept>
#include <string>

namespace prahm {

enum class Errc {
  below_cutoff,
  kappa_zero,
  grid_too_small,
  asymmetric_window,
  spacing_mismatch,
  degenerate_residual,
  phi_out_of_range,
  incomplete_period,
  grid_mismatch,
  need_two_probes,
  bad_config,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::below_cutoff: return "below cutoff";
    case Errc::kappa_zero: return "kappa zero";
    case Errc::grid_too_small: return "grid too small";
    case Errc::asymmetric_window: return "asymmetric window";
    case Errc::spacing_mismatch: return "spacing mismatch";
    case Errc::degenerate_residual: return "degenerate residual";
    case Errc::phi_out_of_range: return "phi out of range";
    case Errc::incomplete_period: return "incomplete period";
    case Errc::grid_mismatch: return "grid mismatch";
    case Errc::need_two_probes: return "need two probes";
    case Errc::bad_config: return "bad config";
    case Errc::io_error: return "io error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail = "")
      : std::runtime_error(detail.empty() ? std::string(errc_name(code))
                                          : std::string(errc_name(code)) + ": " + detail),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace prahm
