#ifndef TRGEO_JSON_IO_HPP
#define TRGEO_JSON_IO_HPP

#include "trgeo/accretivity.hpp"
#include "trgeo/cauchy.hpp"
#include "trgeo/gradient_graph.hpp"
#include "trgeo/subspace.hpp"
#include "trgeo/surface.hpp"

#include <json.hpp>

namespace trgeo {

// Complex scalars travel as [re, im] pairs in every format below.
// Malformed documents raise ConfigError with a short context string.

nlohmann::json complex_to_json(const Complex& z);
Complex complex_from_json(const nlohmann::json& j, const char* what);

nlohmann::json plane_to_json(const RealSubspace& L);
RealSubspace plane_from_json(const nlohmann::json& j);

nlohmann::json tolerances_to_json(const ToleranceConfig& tol);
nlohmann::json classification_to_json(const ClassificationReport& rep);

nlohmann::json curve_to_json(const ClosedCurve& curve);
ClosedCurve curve_from_json(const nlohmann::json& j);

// Potential schema { "m": int, "terms": [{ "powers": [int x m],
// "coeff": float }] }; the domain box comes from the caller.
Potential potential_from_json(const nlohmann::json& j, const Box& domain);

nlohmann::json ahlfors_to_json(const AhlforsReport& rep, const SampleSpec& centers,
                               const RadiusSpec& radii);
nlohmann::json doubling_to_json(const DoublingReport& rep, const SampleSpec& centers,
                                const RadiusSpec& radii);
nlohmann::json accretivity_to_json(const AccretivityReport& rep);
nlohmann::json surface_check_to_json(const SurfaceCheck& check);

} // namespace trgeo

#endif
