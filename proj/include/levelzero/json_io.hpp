// levelzero: machine-readable serialization. Every command of the tool emits
// one self-describing JSON document built here; the builders read only from
// canonically ordered data, so a report is byte-identical across runs with
// the same configuration. Exact integers travel as decimal strings and torus
// coordinates as "a/b" fractions, keeping the output lossless; labels parse
// back through the validating constructors.
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "levelzero/alcove.hpp"
#include "levelzero/dual_classes.hpp"
#include "levelzero/labels.hpp"
#include "levelzero/root_datum.hpp"
#include "levelzero/weyl.hpp"

namespace levelzero {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Scalars and containers: integers as decimal strings, rationals as "a/b"
// (plain "a" when the denominator is 1), matrices as arrays of row arrays.
Json json_of(const Int& x);
Json json_of(const Rat& r);
Json json_of(const IntVec& v);
Json json_of(const IntMatrix& m);
Json json_of(const QmodZVector& s);

Int int_from_json(const Json& j);
Rat rat_from_string(const std::string& text);
QmodZVector qmodz_from_json(const Json& j);

// Weyl elements prefer the signed-permutation form {"perm": [...], "signs":
// [...]} and fall back to {"matrix": [...]} for non-monomial actions; both
// carry the element index for reference.
Json weyl_element_json(const WeylGroup& W, int idx);
int weyl_index_from_json(const WeylGroup& W, const Json& j);

// A class label as {"s": [...], "w": {...}}; parsing revalidates the pair
// through the defining equation and recanonicalizes, so a round trip lands
// on the same label.
Json label_json(const WeylGroup& W, const ClassLabel& c);
ClassLabel label_from_json(const LabelContext& ctx, const Json& j);

// Report builders, one per command. `config` is echoed verbatim.
Json datum_report(const RootDatum& R, const Json& config);
Json classes_report(const LabelContext& ctx, const ClassEnumeration& ce,
                    const Json& config);
Json decompose_report(const Decomposition& d, const Json& config);
Json hmap_report(const LabelContext& ctx, const ClassEnumeration& ce,
                 const Json& config);
Json kottwitz_report(const RootDatum& R, const Json& config);

}  // namespace levelzero
