#pragma once

#include <json.hpp>

#include "cayley/finite_volume.hpp"
#include "cayley/witness.hpp"
#include "padic/cubic.hpp"
#include "potts/regime.hpp"

// Shared JSON schema for every command.  Keys keep insertion order, norms
// are {"exp": e} meaning p^e or {"zero": true}, never floats.
namespace report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json norm_json(const padic::Norm& n);
Json padic_json(const padic::PadicNumber& x);
Json params_json(const potts::ModelParams& params, int digits);
Json verdict_json(const potts::RegimeVerdict& v);
Json prediction_json(const potts::PredictionCheck& c);
Json catalog_json(const potts::MeasureCatalog& c);
Json transition_json(const potts::TransitionVerdict& t);
Json series_json(const cayley::NormSeries& s);
Json common_witness_json(const cayley::CommonWitness& w);
Json witness_json(const cayley::WitnessReport& w);
Json root_report_json(const padic::ZpStarRootReport& r);
Json compatibility_json(const cayley::CompatibilityReport& r);
Json recursion_json(const cayley::RecursionReport& r);
Json norm_check_json(const cayley::NormCheckReport& r);

}  // namespace report
