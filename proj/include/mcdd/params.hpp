#ifndef MCDD_PARAMS_HPP
#define MCDD_PARAMS_HPP

#include <cstdint>
#include <string>

namespace mcdd {

/// Physical and protocol constants of the system. All values are stored in
/// the fixed units noted below; the config loader rejects anything else.
struct SystemParams {
  double D;       ///< diffusion coefficient (um^2/s)
  double R;       ///< transmitter-receiver distance (um)
  double Q;       ///< molecules released per pulse
  double dt;      ///< step size (s)
  double mu;      ///< unbinding rate (1/s)
  double Kplus;   ///< ligand-receptor binding constant (um^3/s)
  std::int64_t Nr;///< receptor count
  double Rr;      ///< receiver radius (nm)
  double Re;      ///< reception space radius (nm)
  double Ra;      ///< molecule radius (nm)
  double alpha;   ///< active-receptor rejection share, in [0,1]
  double f;       ///< occupancy factor, in (0,1)
};

/// Throws std::invalid_argument naming the offending field if any invariant
/// is violated.
void validate(const SystemParams& p);

/// Parse a flat JSON object with keys D_um2_per_s, R_um, Q, dt_s, mu_per_s,
/// Kplus, Nr, Rr_nm, Re_nm, Ra_nm, alpha, f. Unknown or missing keys are an
/// error. The returned params satisfy all invariants.
SystemParams load_params(const std::string& json_text);

/// Same, reading the JSON from a file.
SystemParams load_params_file(const std::string& path);

/// Maximum number of molecules that fit in the reception shell:
/// floor((Re^3 - Rr^3) / Ra^3). Ratios within 1e-9 relative of an integer
/// are snapped to it before flooring. Throws if the result is < 1.
std::int64_t capacity(double Re, double Rr, double Ra);
std::int64_t capacity(const SystemParams& p);

}  // namespace mcdd

#endif
