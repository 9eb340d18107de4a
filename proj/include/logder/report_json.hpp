#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "logder/arrangement.hpp"
#include "logder/bounds.hpp"
#include "logder/catalog.hpp"
#include "logder/derlog.hpp"
#include "logder/graphic.hpp"
#include "logder/papermat.hpp"

namespace logder {

using Json = nlohmann::ordered_json;

// Scalars are written as exact strings ("3/2", "1+w"), never as floats.
Json json_of(const Scalar& c);
Json json_of(std::span<const Scalar> v);
Json json_of(const Matrix& m);
Json json_of(const HomPoly& p, std::span<const std::string> names);
Json json_of(const Derivation& d, std::span<const std::string> names);
Json json_of(const Arrangement& a, std::span<const std::string> names);

Json json_of(const MdrResult& r, std::span<const std::string> names);
Json json_of(const std::vector<SingularPoint>& sing, const ArrangementStats& st, const CountFormulaReport& counts);
Json json_of(const DerivationSystem& sys, const NullspaceResult& ns);
Json json_of(const BoundsReport& b);
Json json_of(const AdditionDeletionReport& r);
Json json_of(const AdditionDeletionSweep& s);
Json json_of(const FamilyParams& p);
Json json_of(const FamilyReport& r);
Json json_of(const GraphMdr& g, const Graph& graph);
Json json_of(const SaitoCertificate& c, std::span<const std::string> names);
Json json_of(const ContainmentComparison& c);

}  // namespace logder
