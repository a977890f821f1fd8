#pragma once

// JSON forms of the library's values.

#include <json.hpp>

#include "ffm/cfm.hpp"
#include "ffm/gring.hpp"
#include "ffm/uncert.hpp"

namespace ffm {

inline constexpr const char* kVersion = "0.1.0";

// {N, num: [...], den: [...]}: coefficient i is num[i]/den[i] in lowest terms.
nlohmann::json to_json(const CycloNum& x);
CycloNum cyclo_from_json(const nlohmann::json& j);
nlohmann::json approx_json(const CycloNum& x);

nlohmann::json field_json(const FieldCtx& F);
FieldRef field_from_json(const nlohmann::json& j);
nlohmann::json elt_json(const FieldCtx& F, FieldElt x);
FieldElt elt_from_json(const FieldCtx& F, const nlohmann::json& j);

// {field, entries: [{element, value}]}, zero entries omitted.
nlohmann::json to_json(const GroupRingElt& f);
GroupRingElt group_ring_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SpectrumElt& s);
SpectrumElt spectrum_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CycloMatrix& M);
nlohmann::json to_json(const NvmReport& r, std::uint64_t seed = 0);
nlohmann::json to_json(const UncertaintyResult& r);
nlohmann::json to_json(const CdResult& r);

}  // namespace ffm
