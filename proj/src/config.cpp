#include "prahm/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "prahm/error.hpp"

namespace prahm {
namespace {

using nlohmann::json;

template <typename T>
void opt(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

ModeSpec RunConfig::mode() const {
  if (kappa_ratio >= 1.0) throw Error(Errc::below_cutoff, "below cutoff");
  return ModeSpec::make(kind, omega, refractive(), kappa_ratio, profile, amplitude,
                        modal_phase);
}

GridSpec RunConfig::grid() const {
  GridSpec g;
  g.nx = nx;
  g.ny = ny;
  g.nz = nz;
  g.nt = nt;
  g.hx = hx;
  g.hy = hy;
  g.hz = hz;
  g.ht = ht;
  g.x0 = 0.131;
  g.y0 = 0.177;
  g.z0 = 0.0123 - 0.5 * hz * (nz - 1);
  g.t0 = -0.5 * ht * (nt - 1);
  return g;
}

double RunConfig::tolerance(const std::string& check, double fallback) const {
  const auto it = tol_overrides.find(check);
  return it == tol_overrides.end() ? fallback : it->second;
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error(Errc::bad_config, std::string("config parse: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::bad_config, "config must be a JSON object");

  RunConfig c;
  try {
    if (j.contains("mode")) {
      const json& m = j.at("mode");
      std::string kind_s = "te", profile_s = "cosine";
      opt(m, "kind", kind_s);
      opt(m, "n0", c.n0);
      opt(m, "n1", c.n1);
      opt(m, "omega_ref", c.omega_ref);
      opt(m, "omega", c.omega);
      opt(m, "kappa_ratio", c.kappa_ratio);
      opt(m, "profile", profile_s);
      opt(m, "amplitude", c.amplitude);
      opt(m, "modal_phase", c.modal_phase);
      kind_s = lower(kind_s);
      profile_s = lower(profile_s);
      if (kind_s == "te")
        c.kind = ModeKind::TE;
      else if (kind_s == "tm")
        c.kind = ModeKind::TM;
      else
        throw Error(Errc::bad_config, "mode.kind must be te or tm");
      if (profile_s == "cosine")
        c.profile = ProfileKind::separable_cosine;
      else if (profile_s == "circular")
        c.profile = ProfileKind::bessel_circular;
      else
        throw Error(Errc::bad_config, "mode.profile must be cosine or circular");
    }
    if (j.contains("grid")) {
      const json& g = j.at("grid");
      opt(g, "nx", c.nx);
      opt(g, "ny", c.ny);
      opt(g, "nz", c.nz);
      opt(g, "nt", c.nt);
      opt(g, "hx", c.hx);
      opt(g, "hy", c.hy);
      opt(g, "hz", c.hz);
      opt(g, "ht", c.ht);
    }
    if (j.contains("packet")) {
      const json& p = j.at("packet");
      opt(p, "M", c.M_list);
      opt(p, "phi", c.phi);
      opt(p, "Q", c.Q);
      opt(p, "map", c.map);
      c.map = lower(c.map);
      if (c.map != "phi0" && c.map != "phi90")
        throw Error(Errc::bad_config, "packet.map must be phi0 or phi90");
    }
    if (j.contains("sweep")) {
      const json& s = j.at("sweep");
      opt(s, "from", c.sweep_from);
      opt(s, "to", c.sweep_to);
      opt(s, "steps", c.sweep_steps);
      opt(s, "Omega_over_omega", c.sweep_Omega_over_omega);
    }
    if (j.contains("dispersion")) {
      const json& d = j.at("dispersion");
      opt(d, "z_probes", c.z_probes);
      opt(d, "n1_weak", c.n1_weak);
    }
    if (j.contains("txline")) {
      const json& t = j.at("txline");
      opt(t, "Z0", c.tx_Z0);
      opt(t, "omega", c.tx_omega);
      opt(t, "zeta", c.tx_zeta);
      opt(t, "steps_per_transit", c.tx_steps);
    }
    if (j.contains("tolerances")) {
      for (const auto& [key, val] : j.at("tolerances").items())
        c.tol_overrides[key] = val.get<double>();
    }
    opt(j, "out", c.out);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(Errc::bad_config, std::string("config value: ") + e.what());
  }

  if (!(c.omega > 0.0)) throw Error(Errc::bad_config, "omega must be positive");
  if (!(c.kappa_ratio > 0.0)) throw Error(Errc::kappa_zero, "kappa ratio must be positive");
  if (c.kappa_ratio >= 1.0) throw Error(Errc::below_cutoff, "below cutoff");
  if (c.nx < 3 || c.ny < 3 || c.nz < 3 || c.nt < 3)
    throw Error(Errc::grid_too_small, "grid needs >= 3 points per axis");
  if (c.Q < 1) throw Error(Errc::bad_config, "Q must be >= 1");
  for (int m : c.M_list)
    if (m < 0) throw Error(Errc::bad_config, "packet indices must be >= 0");
  if (c.sweep_steps < 1) throw Error(Errc::bad_config, "sweep needs >= 1 step");
  if (!(c.sweep_from > 0.0) || !(c.sweep_to >= c.sweep_from))
    throw Error(Errc::bad_config, "sweep range must be positive and ordered");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::io_error, "cannot read config file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace prahm
