#pragma once

#include <json.hpp>

#include "holoiso/branch.hpp"
#include "holoiso/domains.hpp"
#include "holoiso/family.hpp"
#include "holoiso/germ.hpp"
#include "holoiso/rigidity.hpp"

namespace holoiso {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(Complex z);
Complex complex_from_json(const Json& j);
Json to_json(const SpherePoint& p);  // [re, im] or "inf"

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"num": [[re,im],...], "den": [[re,im],...]}, ascending degree.
Json to_json(const RationalMap& m);
RationalMap rational_from_json(const Json& j);

/// {"dim": k, "entries": [[[re,im],...],...], "flags": {...}}, row-major.
Json to_json(const UnitaryFrame& f);
UnitaryFrame frame_from_json(const Json& j);

/// {"frame": ..., "R": ..., "components": [...], "degenerate": bool}.
Json to_json(const DiskIsometry& iso);
/// Re-solves from the stored frame and checks the stored maps agree.
DiskIsometry isometry_from_json(const Json& j);

Json to_json(const ResidueReport& r, bool with_samples = false);
Json to_json(const BranchData& b);
Json to_json(const CongruenceInvariant& c);
Json to_json(const ReductionVerdict& v);
Json to_json(const RamificationProfile& p);
Json to_json(const ExtensionReport& r);
Json to_json(const DomainPoint& p);
Json to_json(const AuditReport& r);
Json to_json(const IntakeReport& r);

/// {"components": [[RationalMap, ...], ...], "weights": [...]}.
Json to_json(const WeightedCandidate& c);
WeightedCandidate candidate_from_json(const Json& j);

}  // namespace holoiso
