// JSON / CSV / SVG serialization for the library types. Polynomials travel as
// arrays of decimal integer strings in ascending degree, e.g. ["-2","0","1"].

#pragma once

#include <string>

#include <json.hpp>

#include "intmeas/families.hpp"
#include "intmeas/intpoly.hpp"
#include "intmeas/measure.hpp"
#include "intmeas/potential.hpp"
#include "intmeas/roots.hpp"
#include "intmeas/transport.hpp"

namespace intmeas {

using nlohmann::json;

json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const json& j);

json rootset_to_json(const RootSet& r);

json measure_to_json(const AtomicMeasure& mu);
AtomicMeasure measure_from_json(const json& j);
std::string measure_to_csv(const AtomicMeasure& mu);  // re,im,weight rows

json setspec_to_json(const CompactSetSpec& e, int grid_size);
CompactSetSpec setspec_from_json(const json& j);

json capacity_to_json(const CapacityEstimate& c);

json plan_to_json(const TransportPlan& plan);

json convergence_to_json(const ConvergenceReport& r);
std::string convergence_to_csv(const ConvergenceReport& r);

json ramsay_to_json(const RamsayReport& r);
std::string ramsay_to_csv(const RamsayReport& r);

// scatter overlay of two point sets (roots vs equilibrium sample)
std::string scatter_svg(const std::vector<std::complex<double>>& a,
                        const std::vector<std::complex<double>>& b);

}  // namespace intmeas
