#include "mcdd/params.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mcdd {

void validate(const SystemParams& p) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (!(p.D > 0)) fail("D must be positive");
  if (!(p.R > 0)) fail("R must be positive");
  if (!(p.Q > 0)) fail("Q must be positive");
  if (!(p.dt > 0)) fail("dt must be positive");
  if (!(p.mu >= 0)) fail("mu must be nonnegative");
  if (!(p.Kplus > 0)) fail("Kplus must be positive");
  if (p.Nr < 1) fail("Nr must be at least 1");
  if (!(p.Rr > 0)) fail("Rr must be positive");
  if (!(p.Re > p.Rr)) fail("Re must exceed Rr");
  if (!(p.Ra > 0)) fail("Ra must be positive");
  if (!(p.alpha >= 0 && p.alpha <= 1)) fail("alpha must lie in [0, 1]");
  if (!(p.f > 0)) fail("f must be positive");
  if (!(p.f < 1)) fail("f must lie strictly below 1");
}

SystemParams load_params(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse failure: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

  static const std::set<std::string> known = {
      "D_um2_per_s", "R_um", "Q", "dt_s", "mu_per_s", "Kplus",
      "Nr", "Rr_nm", "Re_nm", "Ra_nm", "alpha", "f"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw std::invalid_argument("unknown config key: " + key);
  }
  auto get = [&](const char* key) -> double {
    if (!j.contains(key))
      throw std::invalid_argument(std::string("missing config key: ") + key);
    if (!j[key].is_number())
      throw std::invalid_argument(std::string("config key is not numeric: ") + key);
    return j[key].get<double>();
  };

  SystemParams p{};
  p.D = get("D_um2_per_s");
  p.R = get("R_um");
  p.Q = get("Q");
  p.dt = get("dt_s");
  p.mu = get("mu_per_s");
  p.Kplus = get("Kplus");
  double nr = get("Nr");
  if (nr != std::floor(nr)) throw std::invalid_argument("Nr must be an integer");
  p.Nr = static_cast<std::int64_t>(nr);
  p.Rr = get("Rr_nm");
  p.Re = get("Re_nm");
  p.Ra = get("Ra_nm");
  p.alpha = get("alpha");
  p.f = get("f");
  validate(p);
  return p;
}

SystemParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_params(ss.str());
}

std::int64_t capacity(double Re, double Rr, double Ra) {
  const double ratio = (Re * Re * Re - Rr * Rr * Rr) / (Ra * Ra * Ra);
  // Snap to integer boundaries within 1e-9 relative before flooring, so
  // decimal radii that make the ratio an exact integer do not land one off.
  const double nearest = std::round(ratio);
  double snapped = ratio;
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, std::abs(ratio)))
    snapped = nearest;
  const double floored = std::floor(snapped);
  if (floored < 1)
    throw std::invalid_argument(
        "reception space smaller than one molecule (capacity " +
        std::to_string(static_cast<std::int64_t>(floored)) + ")");
  return static_cast<std::int64_t>(floored);
}

std::int64_t capacity(const SystemParams& p) { return capacity(p.Re, p.Rr, p.Ra); }

}  // namespace mcdd
